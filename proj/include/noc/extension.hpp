#pragma once

#include <vector>

#include "noc/code.hpp"

namespace noc {

// The set of distinct length-k suffixes of codewords longer than k.
struct SuffixSet {
    std::size_t k = 0;
    std::vector<Word> suffixes; // canonical order
};

// {suffix(x, k) : x ∈ S, |x| > k}. Requires S non-empty and
// 1 <= k < max codeword length.
SuffixSet suffix_set(const Code& S, std::size_t k);

// The replacement set for one codeword s: s itself when |s| = n, otherwise
// s concatenated with every length-(n - |s|) suffix of longer codewords,
// where n is the maximum codeword length in S. Requires s ∈ S.
std::vector<Word> per_word_extension(const Word& s, const Code& S);

// Extends every codeword to the maximum length present in S, producing a
// fixed-length code. The output is non-overlapping whenever S is; `force`
// skips that precondition check for negative testing and voids the
// guarantee. Requires S non-empty.
Code extend(const Code& S, bool force = false);

// Predicted size of extend(S) from the slice/suffix-set counting formula;
// always equals |extend(S)| exactly. Same preconditions as extend.
std::size_t extension_size(const Code& S, bool force = false);

} // namespace noc
