#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "noc/errors.hpp"

namespace noc {

using Symbol = std::int32_t;

// The q-ary alphabet {0, 1, ..., q-1}.
struct Alphabet {
    explicit Alphabet(int q_) : q(q_) {
        if (q < 2) throw DomainError("alphabet size must be at least 2, got " + std::to_string(q));
    }
    int q;

    bool contains(Symbol s) const { return s >= 0 && s < q; }
    friend bool operator==(const Alphabet&, const Alphabet&) = default;
};

// An immutable finite sequence of symbols. The empty word is a legal value
// (it arises as a length-0 prefix or suffix) but codes never admit it.
//
// Canonical order everywhere in this library: shorter words first, equal
// lengths lexicographic. operator< implements that order, so sorted
// containers of Word iterate canonically without extra comparators.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}
    Word(std::initializer_list<Symbol> symbols) : symbols_(symbols) {}

    std::size_t size() const { return symbols_.size(); }
    bool empty() const { return symbols_.empty(); }
    Symbol operator[](std::size_t i) const { return symbols_[i]; }
    const std::vector<Symbol>& symbols() const { return symbols_; }

    bool valid_over(const Alphabet& a) const {
        for (Symbol s : symbols_)
            if (!a.contains(s)) return false;
        return true;
    }

    friend bool operator==(const Word&, const Word&) = default;
    friend bool operator<(const Word& a, const Word& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.symbols_ < b.symbols_;
    }
    friend bool operator>(const Word& a, const Word& b) { return b < a; }
    friend bool operator<=(const Word& a, const Word& b) { return !(b < a); }
    friend bool operator>=(const Word& a, const Word& b) { return !(a < b); }

private:
    std::vector<Symbol> symbols_;
};

struct WordHash {
    std::size_t operator()(const Word& w) const {
        std::size_t h = 1469598103934665603ull;
        for (Symbol s : w.symbols()) {
            h ^= static_cast<std::size_t>(s) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// First k symbols of w; k = 0 gives the empty word.
Word prefix(const Word& w, std::size_t k);

// Last k symbols of w; k = 0 gives the empty word.
Word suffix(const Word& w, std::size_t k);

// All nontrivial prefixes {prefix(w, k) : 1 <= k <= |w|-1}, shortest first.
std::vector<Word> proper_prefixes(const Word& w);

// All nontrivial suffixes, shortest first.
std::vector<Word> proper_suffixes(const Word& w);

// Smallest offset j at which u occurs in v as a contiguous subword, if any.
std::optional<std::size_t> subword_offset(const Word& u, const Word& v);

// True iff u occurs in v as a contiguous subword (u == v counts).
bool is_subword(const Word& u, const Word& v);

// Smallest k >= 1, k <= min(|u|,|v|)-1, with prefix(u,k) == suffix(v,k).
// This witnesses pre(u) ∩ suf(v) != ∅ for the ordered pair (u, v).
std::optional<std::size_t> shared_border_length(const Word& u, const Word& v);

// True iff the word is bifix-free: no nontrivial prefix equals a
// nontrivial suffix. Requires |w| >= 2.
bool is_self_non_overlapping(const Word& w);

Word concat(const Word& a, const Word& b);

// Text form: digits concatenated for q <= 10 ("11010"), comma-separated
// integers otherwise ("3,11,0").
std::string to_string(const Word& w, int q);

// Accepts both text forms for q <= 10; q > 10 requires the comma form.
Word parse_word(std::string_view text, int q);

// All q-ary words of the given length, lexicographic.
std::vector<Word> all_words(int q, int length);

// Advance a symbol vector to the next word of the same length in
// lexicographic order; false once the last word wraps around.
bool next_word(std::vector<Symbol>& symbols, int q);

} // namespace noc
