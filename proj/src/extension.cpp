#include "noc/extension.hpp"

#include <algorithm>

namespace noc {

SuffixSet suffix_set(const Code& S, std::size_t k) {
    if (S.is_empty()) throw DomainError("suffix set of an empty code");
    if (k < 1 || k >= static_cast<std::size_t>(S.max_len()))
        throw RangeError("suffix length " + std::to_string(k) + " outside [1, " +
                         std::to_string(S.max_len() - 1) + "]");
    std::vector<Word> out;
    for (const Word& x : S.words())
        if (x.size() > k) out.push_back(suffix(x, k));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return SuffixSet{k, std::move(out)};
}

namespace {

void require_extendable(const Code& S, bool force) {
    if (S.is_empty()) throw DomainError("extension of an empty code");
    if (force) return;
    if (auto w = find_overlap(S))
        throw PreconditionError("extension requires a non-overlapping code: " +
                                w->describe(S.q()));
}

std::vector<Word> extend_one(const Word& s, const Code& S) {
    const std::size_t n = static_cast<std::size_t>(S.max_len());
    if (s.size() == n) return {s};
    std::vector<Word> out;
    for (const Word& t : suffix_set(S, n - s.size()).suffixes) out.push_back(concat(s, t));
    return out;
}

} // namespace

std::vector<Word> per_word_extension(const Word& s, const Code& S) {
    if (!S.contains(s))
        throw DomainError("word '" + to_string(s, S.q()) + "' is not a codeword");
    return extend_one(s, S);
}

Code extend(const Code& S, bool force) {
    require_extendable(S, force);
    std::vector<Word> out;
    for (const Word& s : S.words()) {
        std::vector<Word> part = extend_one(s, S);
        out.insert(out.end(), part.begin(), part.end());
    }
    return Code(S.alphabet(), std::move(out));
}

std::size_t extension_size(const Code& S, bool force) {
    require_extendable(S, force);
    const int n = S.max_len();
    std::size_t total = S.slice(n).size();
    for (int i = S.min_len(); i <= n - 1; ++i) {
        const std::size_t slice_count = S.slice(i).size();
        if (slice_count == 0) continue;
        total += suffix_set(S, static_cast<std::size_t>(n - i)).suffixes.size() * slice_count;
    }
    return total;
}

} // namespace noc
