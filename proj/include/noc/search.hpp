#pragma once

#include <cstdint>
#include <optional>

#include "noc/code.hpp"

namespace noc {

// Hard ceiling on enumerated candidate words (q^n for fixed length, the
// geometric sum for variable length). Overridable per call and, in the CLI,
// via the NOCODE_CAP environment variable.
inline constexpr std::uint64_t kDefaultCandidateCap = std::uint64_t(1) << 24;

enum class SearchStrategy { BranchAndBound, Exhaustive };

// Engine selection for the branch-and-bound strategy. Auto picks the
// OpenMP engine unless a node budget is set (budget accounting is defined
// on the serial reference engine). Serial and Parallel always return the
// same extremal code; only nodes_expanded differs.
enum class EngineMode { Auto, Serial, Parallel };

// Candidate enumeration order is always canonical (shorter first, then
// lexicographic); ties among equal-size maximum codes go to the one found
// first in that branch order, which makes every search deterministic.
struct SearchConfig {
    SearchStrategy strategy = SearchStrategy::BranchAndBound;
    std::uint64_t node_budget = 0; // 0 = unlimited
    std::uint64_t candidate_cap = kDefaultCandidateCap;
    EngineMode mode = EngineMode::Auto;
};

struct SearchResult {
    int n = 0;
    int q = 0;
    std::size_t cardinality = 0;
    Code code = Code::empty(Alphabet(2));
    std::uint64_t nodes_expanded = 0;
    std::int64_t elapsed_ms = 0;
};

// Node budget ran out before the search space was exhausted; carries the
// best (lower-bound) code found so far.
class IncompleteSearchError : public Error {
public:
    IncompleteSearchError(const std::string& what, SearchResult best)
        : Error(what), best_(std::move(best)) {}
    const SearchResult& best() const { return best_; }

private:
    SearchResult best_;
};

// Maximum fixed-length non-overlapping code of length n: vertices are the
// bifix-free words of length n, edges join mutually compatible pairs, and
// the answer is a maximum clique.
SearchResult max_fixed(int n, int q, const SearchConfig& cfg = {});

// Maximum variable-length non-overlapping code with lengths in [2, n];
// the conflict graph additionally rules out subword containment.
SearchResult max_variable(int n, int q, const SearchConfig& cfg = {});

// Grows a maximal code by scanning all words of lengths 2..n in a
// seed-determined permutation (seed 0 keeps canonical order) and keeping
// every word that preserves non-overlap. The result is always maximal.
Code greedy_maximal(int n, int q, std::uint64_t order_seed);

// All length-n words with first symbol 0 and the rest nonzero; a
// non-overlapping code of size (q-1)^(n-1).
Code classic_construction(int n, int q);

// q^i summed for i in [2, n], as the variable-length candidate count;
// nullopt on overflow past cap.
std::optional<std::uint64_t> fixed_candidate_count(int n, int q, std::uint64_t cap);
std::optional<std::uint64_t> variable_candidate_count(int n, int q, std::uint64_t cap);

} // namespace noc
