#include "noc/code.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <sstream>

#include "noc/noc_index.hpp"

namespace noc {

Code::Code(Alphabet alphabet, std::vector<Word> words)
    : alphabet_(alphabet), words_(std::move(words)) {
    for (const Word& w : words_) {
        if (w.size() < 2)
            throw DomainError("codewords must have length >= 2, got length " +
                              std::to_string(w.size()));
        if (!w.valid_over(alphabet_))
            throw DomainError("word '" + to_string(w, alphabet_.q) +
                              "' has symbols outside the alphabet of size " +
                              std::to_string(alphabet_.q));
    }
    std::sort(words_.begin(), words_.end());
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
    if (!words_.empty()) {
        min_len_ = static_cast<int>(words_.front().size());
        max_len_ = static_cast<int>(words_.back().size());
    }
}

std::vector<Word> Code::slice(int length) const {
    std::vector<Word> out;
    for (const Word& w : words_)
        if (static_cast<int>(w.size()) == length) out.push_back(w);
    return out;
}

bool Code::contains(const Word& w) const {
    return std::binary_search(words_.begin(), words_.end(), w);
}

bool Witness::re_verify() const {
    switch (kind) {
    case WitnessKind::PrefixSuffixOverlap: {
        const std::size_t k = evidence.size();
        if (k == 0 || k >= u.size() || k >= v.size()) return false;
        return evidence == prefix(u, k) && evidence == suffix(v, k);
    }
    case WitnessKind::SubwordContainment: {
        if (evidence != u || u == v || u.size() > v.size()) return false;
        if (offset + u.size() > v.size()) return false;
        for (std::size_t i = 0; i < u.size(); ++i)
            if (u[i] != v[offset + i]) return false;
        return true;
    }
    case WitnessKind::PrefixOfAnother: {
        if (evidence != u || u.size() >= v.size()) return false;
        return prefix(v, u.size()) == u;
    }
    }
    return false;
}

std::string Witness::describe(int q) const {
    switch (kind) {
    case WitnessKind::PrefixSuffixOverlap:
        return "prefix/suffix overlap: \"" + to_string(evidence, q) +
               "\" is a nontrivial prefix of \"" + to_string(u, q) +
               "\" and a nontrivial suffix of \"" + to_string(v, q) + "\"";
    case WitnessKind::SubwordContainment:
        return "subword containment: \"" + to_string(u, q) + "\" occurs in \"" +
               to_string(v, q) + "\" at offset " + std::to_string(offset);
    case WitnessKind::PrefixOfAnother:
        return "prefix violation: \"" + to_string(u, q) + "\" is a proper prefix of \"" +
               to_string(v, q) + "\"";
    }
    return "";
}

namespace {

// First violation inside one ordered pair (u, v): shared borders by
// increasing length, then containment of u in v by increasing offset.
std::optional<Witness> pair_first_violation(const Word& u, const Word& v, bool check_subword) {
    if (auto k = shared_border_length(u, v))
        return Witness{WitnessKind::PrefixSuffixOverlap, u, v, prefix(u, *k), 0};
    if (check_subword && u.size() < v.size()) {
        if (auto j = subword_offset(u, v))
            return Witness{WitnessKind::SubwordContainment, u, v, u, *j};
    }
    return std::nullopt;
}

bool pair_violates(const Word& u, const Word& v, bool check_subword) {
    if (shared_border_length(u, v)) return true;
    if (check_subword && u.size() < v.size()) return subword_offset(u, v).has_value();
    return false;
}

std::optional<Witness> find_overlap_serial(const std::vector<Word>& ws, bool mixed_lengths) {
    const std::size_t n = ws.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (auto w = pair_first_violation(ws[i], ws[j], mixed_lengths && i != j)) return w;
    return std::nullopt;
}

std::optional<Witness> find_overlap_parallel(const std::vector<Word>& ws, bool mixed_lengths) {
    const long long n = static_cast<long long>(ws.size());
    const long long total = n * n;
    long long best = total;
#pragma omp parallel
    {
        long long local = total;
#pragma omp for schedule(dynamic, 256) nowait
        for (long long p = 0; p < total; ++p) {
            if (p >= local) continue; // only the minimum matters
            const long long i = p / n, j = p % n;
            if (pair_violates(ws[i], ws[j], mixed_lengths && i != j)) local = std::min(local, p);
        }
#pragma omp critical
        best = std::min(best, local);
    }
    if (best == total) return std::nullopt;
    const long long i = best / n, j = best % n;
    return pair_first_violation(ws[i], ws[j], mixed_lengths && i != j);
}

} // namespace

std::optional<Witness> find_overlap(const Code& S, VerifyMode mode) {
    const std::vector<Word>& ws = S.words();
    const bool mixed = !S.fixed_length();
    if (mode == VerifyMode::Auto)
        mode = ws.size() >= 128 ? VerifyMode::Parallel : VerifyMode::Serial;
    return mode == VerifyMode::Parallel ? find_overlap_parallel(ws, mixed)
                                        : find_overlap_serial(ws, mixed);
}

std::optional<Witness> find_prefix_violation(const Code& S) {
    const std::vector<Word>& ws = S.words();
    for (std::size_t i = 0; i < ws.size(); ++i)
        for (std::size_t j = 0; j < ws.size(); ++j) {
            if (i == j || ws[i].size() >= ws[j].size()) continue;
            if (prefix(ws[j], ws[i].size()) == ws[i])
                return Witness{WitnessKind::PrefixOfAnother, ws[i], ws[j], ws[i], 0};
        }
    return std::nullopt;
}

std::optional<Word> find_expansion(const Code& S, int n) {
    if (n < 2) throw PreconditionError("maximality horizon must be at least 2");
    if (n < S.max_len())
        throw PreconditionError("maximality horizon " + std::to_string(n) +
                                " is below the longest codeword length " +
                                std::to_string(S.max_len()));
    if (auto w = find_overlap(S))
        throw PreconditionError("maximality is defined for non-overlapping codes: " +
                                w->describe(S.q()));

    NocIndex index(S.alphabet());
    for (const Word& w : S.words()) index.insert(w);

    std::vector<Symbol> current;
    for (int len = 2; len <= n; ++len) {
        current.assign(len, 0);
        do {
            Word candidate(current);
            if (index.admits(candidate)) return candidate;
        } while (next_word(current, S.q()));
    }
    return std::nullopt;
}

std::string render_code(const Code& S) {
    std::string out = "# q=" + std::to_string(S.q()) + "\n";
    for (const Word& w : S.words()) {
        out += to_string(w, S.q());
        out.push_back('\n');
    }
    return out;
}

Code parse_code(std::istream& in) {
    std::optional<int> q;
    std::vector<Word> words;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        std::string trimmed = line.substr(start);
        if (trimmed[0] == '#') {
            std::size_t pos = trimmed.find_first_not_of(" \t", 1);
            if (pos != std::string::npos && trimmed.compare(pos, 2, "q=") == 0) {
                if (q)
                    throw ParseError("duplicate q header", line_no);
                try {
                    std::size_t used = 0;
                    int value = std::stoi(trimmed.substr(pos + 2), &used);
                    if (used != trimmed.size() - pos - 2)
                        throw ParseError("malformed q header", line_no);
                    if (value < 2) throw ParseError("q must be at least 2", line_no);
                    q = value;
                } catch (const ParseError&) {
                    throw;
                } catch (const std::exception&) {
                    throw ParseError("malformed q header", line_no);
                }
            }
            continue;
        }
        if (!q) throw ParseError("word before the required '# q=<int>' header", line_no);
        Word w;
        try {
            w = parse_word(trimmed, *q);
        } catch (const ParseError& e) {
            throw ParseError(e.what(), line_no);
        }
        if (w.size() < 2) throw ParseError("codewords must have length >= 2", line_no);
        if (std::find(words.begin(), words.end(), w) != words.end())
            throw ParseError("duplicate codeword '" + trimmed + "'", line_no);
        words.push_back(w);
    }
    if (!q) throw ParseError("missing '# q=<int>' header", line_no);
    return Code(Alphabet(*q), std::move(words));
}

Code parse_code_text(const std::string& text) {
    std::istringstream in(text);
    return parse_code(in);
}

} // namespace noc
