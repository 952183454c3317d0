#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "noc/word.hpp"

namespace noc {

// A finite set of words over one alphabet, kept in canonical order
// (shorter first, then lexicographic). Every word has length >= 2;
// duplicates collapse. m/n are the cached minimum/maximum lengths
// (both 0 for the empty code).
class Code {
public:
    Code(Alphabet alphabet, std::vector<Word> words);
    static Code empty(Alphabet alphabet) { return Code(alphabet, {}); }

    const Alphabet& alphabet() const { return alphabet_; }
    int q() const { return alphabet_.q; }
    const std::vector<Word>& words() const { return words_; }
    std::size_t size() const { return words_.size(); }
    bool is_empty() const { return words_.empty(); }

    int min_len() const { return min_len_; }
    int max_len() const { return max_len_; }
    bool fixed_length() const { return !words_.empty() && min_len_ == max_len_; }

    // The slice S_i: all codewords of the given length, canonical order.
    std::vector<Word> slice(int length) const;

    bool contains(const Word& w) const;

    friend bool operator==(const Code& a, const Code& b) {
        return a.alphabet_ == b.alphabet_ && a.words_ == b.words_;
    }

private:
    Alphabet alphabet_;
    std::vector<Word> words_;
    int min_len_ = 0;
    int max_len_ = 0;
};

enum class WitnessKind { PrefixSuffixOverlap, SubwordContainment, PrefixOfAnother };

// A concrete violation certificate. For PrefixSuffixOverlap the evidence is
// a word in pre(u) ∩ suf(v); for SubwordContainment it is u itself together
// with the offset of its occurrence in v; for PrefixOfAnother it is u as a
// proper prefix of v.
struct Witness {
    WitnessKind kind;
    Word u;
    Word v;
    Word evidence;
    std::size_t offset = 0;

    // Re-checks the evidence fields independently of how they were found.
    bool re_verify() const;
    std::string describe(int q) const;
};

enum class VerifyMode { Auto, Serial, Parallel };

// First non-overlap violation in canonical scan order, if any: ordered
// pairs (u, v) row-major over the canonical word order; within a pair,
// shared borders by increasing length, then subword occurrences by
// increasing offset. The parallel kernel reduces to the same minimal pair,
// so the reported witness does not depend on the mode.
std::optional<Witness> find_overlap(const Code& S, VerifyMode mode = VerifyMode::Auto);

inline bool is_non_overlapping(const Code& S, VerifyMode mode = VerifyMode::Auto) {
    return !find_overlap(S, mode).has_value();
}

// First pair (u, v) with u a proper prefix of v, canonical scan order.
std::optional<Witness> find_prefix_violation(const Code& S);

inline bool is_prefix_code(const Code& S) { return !find_prefix_violation(S).has_value(); }

// First word x of length 2..n outside S with S ∪ {x} still non-overlapping,
// in canonical candidate order. Requires S non-overlapping and
// n >= max length in S (and n >= 2); throws PreconditionError otherwise.
std::optional<Word> find_expansion(const Code& S, int n);

inline bool is_maximal(const Code& S, int n) { return !find_expansion(S, n).has_value(); }

// Code file format: UTF-8 text, a required "# q=<int>" header line, then one
// word per line; other lines starting with '#' are comments, blank lines are
// skipped. parse(render(S)) == S.
std::string render_code(const Code& S);
Code parse_code(std::istream& in);
Code parse_code_text(const std::string& text);

} // namespace noc
