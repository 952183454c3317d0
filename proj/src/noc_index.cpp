#include "noc/noc_index.hpp"

namespace noc {

bool NocIndex::admits(const Word& x) const {
    if (x.size() < 2 || !x.valid_over(alphabet_)) return false;
    if (!is_self_non_overlapping(x)) return false;

    // Condition 1 against every accepted word, both orientations.
    for (std::size_t k = 1; k + 1 <= x.size(); ++k) {
        if (suffixes_.count(prefix(x, k))) return false;
        if (prefixes_.count(suffix(x, k))) return false;
    }
    // Condition 2: x inside an accepted word (x == accepted is also a reject:
    // a duplicate does not extend the set).
    if (subwords_.count(x)) return false;
    // Condition 2: an accepted word inside x.
    for (std::size_t len = 2; len < x.size(); ++len)
        for (std::size_t off = 0; off + len <= x.size(); ++off) {
            Word window(std::vector<Symbol>(x.symbols().begin() + off,
                                            x.symbols().begin() + off + len));
            if (words_.count(window)) return false;
        }
    return true;
}

void NocIndex::insert(const Word& x) {
    accepted_.push_back(x);
    words_.insert(x);
    for (std::size_t k = 1; k + 1 <= x.size(); ++k) {
        prefixes_.insert(prefix(x, k));
        suffixes_.insert(suffix(x, k));
    }
    for (std::size_t len = 2; len <= x.size(); ++len)
        for (std::size_t off = 0; off + len <= x.size(); ++off)
            subwords_.insert(Word(std::vector<Symbol>(x.symbols().begin() + off,
                                                      x.symbols().begin() + off + len)));
}

} // namespace noc
