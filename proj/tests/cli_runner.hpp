#pragma once

// Runs the CLI binary as a subprocess and captures its streams. The binary
// path comes from the NOC_CLI environment variable when set, otherwise from
// the build-time NOC_CLI_PATH definition.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace cli {

struct Result {
    int exit_code = -1;
    std::string out;
    std::string err;
};

inline std::string binary_path() {
    if (const char* env = std::getenv("NOC_CLI"); env && *env) return env;
#ifdef NOC_CLI_PATH
    return NOC_CLI_PATH;
#else
    return "noc";
#endif
}

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string temp_file(const char* tag) {
    static int counter = 0;
    return "/tmp/noc_cli_" + std::to_string(getpid()) + "_" + std::to_string(counter++) + "_" +
           tag;
}

// `args` is a shell fragment appended to the binary; `env_prefix` may hold
// VAR=value assignments placed before the command.
inline Result run(const std::string& args, const std::string& stdin_text = "",
                  const std::string& env_prefix = "") {
    const std::string in_path = temp_file("in");
    const std::string out_path = temp_file("out");
    const std::string err_path = temp_file("err");
    {
        std::ofstream in(in_path, std::ios::binary);
        in << stdin_text;
    }
    const std::string cmd = env_prefix + " '" + binary_path() + "' " + args + " < " + in_path +
                            " > " + out_path + " 2> " + err_path;
    const int raw = std::system(cmd.c_str());
    Result r;
    r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    std::remove(in_path.c_str());
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return r;
}

// Writes a code file to a temp path the caller must later std::remove.
inline std::string write_code_file(const std::string& text) {
    const std::string path = temp_file("code");
    std::ofstream out(path, std::ios::binary);
    out << text;
    return path;
}

} // namespace cli
