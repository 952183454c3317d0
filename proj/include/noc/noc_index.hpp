#pragma once

#include <unordered_set>
#include <vector>

#include "noc/word.hpp"

namespace noc {

// Incremental membership test for growing a non-overlapping set one word at
// a time. Keeps hash sets of the accepted words, their nontrivial prefixes
// and suffixes, and all their subwords of length >= 2, so that deciding
// whether a candidate can join costs O(|x|^2) hash lookups instead of a
// rescan of the whole set.
class NocIndex {
public:
    explicit NocIndex(Alphabet alphabet) : alphabet_(alphabet) {}

    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t size() const { return accepted_.size(); }

    // Accepted words in insertion order.
    const std::vector<Word>& accepted() const { return accepted_; }

    // True iff x is new and accepted ∪ {x} is still non-overlapping.
    bool admits(const Word& x) const;

    // Insert unconditionally; callers gate on admits() when growing a
    // non-overlapping set.
    void insert(const Word& x);

private:
    Alphabet alphabet_;
    std::vector<Word> accepted_;
    std::unordered_set<Word, WordHash> words_;
    std::unordered_set<Word, WordHash> prefixes_; // nontrivial prefixes of accepted words
    std::unordered_set<Word, WordHash> suffixes_; // nontrivial suffixes of accepted words
    std::unordered_set<Word, WordHash> subwords_; // all subwords of length >= 2, incl. the words
};

} // namespace noc
