#include <doctest.h>

#include <random>

#include "noc/search.hpp"
#include "oracle.hpp"

using namespace noc;

namespace {

Code make_code(int q, std::initializer_list<std::string> words) {
    std::vector<Word> parsed;
    for (const std::string& text : words) parsed.push_back(parse_word(text, q));
    return Code(Alphabet(q), std::move(parsed));
}

SearchConfig with_strategy(SearchStrategy s) {
    SearchConfig cfg;
    cfg.strategy = s;
    return cfg;
}

SearchConfig with_mode(EngineMode m) {
    SearchConfig cfg;
    cfg.mode = m;
    return cfg;
}

void check_result_invariants(const SearchResult& r) {
    CHECK(r.cardinality == r.code.size());
    CHECK(is_non_overlapping(r.code));
    for (const Word& w : r.code.words()) CHECK(static_cast<int>(w.size()) <= r.n);
}

} // namespace

TEST_SUITE("search") {

TEST_CASE("fixed-length maxima at the smallest sizes") {
    CHECK(max_fixed(2, 2).cardinality == 1);
    CHECK(max_fixed(3, 2).cardinality == 1);
    const SearchResult r23 = max_fixed(2, 3);
    CHECK(r23.cardinality == 2);
    CHECK(r23.code == make_code(3, {"01", "02"}));
    CHECK(max_fixed(2, 4).cardinality == 4); // meets the upper bound: 2 divides 4
    check_result_invariants(r23);
}

TEST_CASE("variable-length maxima at the smallest sizes") {
    CHECK(max_variable(2, 2).cardinality == 1);
    CHECK(max_variable(3, 2).cardinality == 1);
    const SearchResult rv = max_variable(3, 3);
    CHECK(rv.cardinality <= max_fixed(3, 3).cardinality);
    check_result_invariants(rv);
}

TEST_CASE("frozen exact values for small parameters") {
    // Computed once by this implementation, cross-checked against the
    // independent enumerator below and against the closed-form bounds.
    CHECK(max_fixed(4, 2).cardinality == 1);
    CHECK(max_fixed(5, 2).cardinality == 2);
    CHECK(max_fixed(6, 2).cardinality == 3);
    CHECK(max_fixed(7, 2).cardinality == 5);
    CHECK(max_fixed(8, 2).cardinality == 8);
    CHECK(max_fixed(3, 3).cardinality == 4);
    CHECK(max_fixed(4, 3).cardinality == 8);
    CHECK(max_fixed(5, 3).cardinality == 17);
    CHECK(max_fixed(3, 4).cardinality == 9);
    CHECK(max_fixed(4, 4).cardinality == 27); // tight case: 4 divides 4
    CHECK(max_fixed(2, 5).cardinality == 6);
    CHECK(max_fixed(2, 6).cardinality == 9);
    CHECK(max_fixed(2, 7).cardinality == 12);
    CHECK(max_fixed(2, 8).cardinality == 16); // tight case: 2 divides 8
    CHECK(max_fixed(3, 5).cardinality == 18);
}

TEST_CASE("branch and bound equals the independent enumerator, fixed length") {
    const std::pair<int, int> pairs[] = {{2, 2}, {3, 2}, {4, 2}, {5, 2}, {6, 2},
                                         {2, 3}, {3, 3}, {4, 3}, {2, 4}, {2, 5}};
    for (const auto& [n, q] : pairs) {
        const oracle::Best expected = oracle::max_noc(q, n, n);
        const SearchResult bnb = max_fixed(n, q);
        const SearchResult exh = max_fixed(n, q, with_strategy(SearchStrategy::Exhaustive));
        INFO("n=", n, " q=", q);
        CHECK(bnb.cardinality == expected.size);
        CHECK(exh.cardinality == expected.size);
        check_result_invariants(bnb);
        check_result_invariants(exh);
        // The enumerator's own witness must satisfy the library predicate.
        std::vector<Word> witness_words;
        for (const oracle::W& raw : expected.words) {
            std::vector<Symbol> syms(raw.begin(), raw.end());
            witness_words.emplace_back(std::move(syms));
        }
        CHECK(is_non_overlapping(Code(Alphabet(q), witness_words)));
    }
}

TEST_CASE("branch and bound equals the independent enumerator, variable length") {
    const std::pair<int, int> pairs[] = {{2, 2}, {3, 2}, {4, 2}, {5, 2},
                                         {2, 3}, {3, 3}, {2, 4}};
    for (const auto& [n, q] : pairs) {
        const oracle::Best expected = oracle::max_noc(q, 2, n);
        const SearchResult bnb = max_variable(n, q);
        const SearchResult exh = max_variable(n, q, with_strategy(SearchStrategy::Exhaustive));
        INFO("n=", n, " q=", q);
        CHECK(bnb.cardinality == expected.size);
        CHECK(exh.cardinality == expected.size);
        check_result_invariants(bnb);
        check_result_invariants(exh);
    }
}

TEST_CASE("variable-length maximum never exceeds the fixed-length maximum") {
    const std::pair<int, int> pairs[] = {{2, 2}, {3, 2}, {4, 2}, {5, 2}, {6, 2}, {7, 2},
                                         {2, 3}, {3, 3}, {4, 3}, {2, 4}, {3, 4}, {2, 5}};
    for (const auto& [n, q] : pairs) {
        INFO("n=", n, " q=", q);
        CHECK(max_variable(n, q).cardinality <= max_fixed(n, q).cardinality);
    }
}

TEST_CASE("search is deterministic") {
    const SearchResult a = max_fixed(5, 3);
    const SearchResult b = max_fixed(5, 3);
    CHECK(a.code == b.code);
    CHECK(a.nodes_expanded == b.nodes_expanded);
    const SearchResult va = max_variable(4, 3);
    const SearchResult vb = max_variable(4, 3);
    CHECK(va.code == vb.code);
    CHECK(va.nodes_expanded == vb.nodes_expanded);
}

TEST_CASE("serial and parallel engines return the same extremal code") {
    const std::pair<int, int> pairs[] = {{5, 2}, {6, 2}, {7, 2}, {3, 3}, {4, 3},
                                         {5, 3}, {3, 4}, {4, 4}, {2, 6}, {3, 5}};
    for (const auto& [n, q] : pairs) {
        const SearchResult serial = max_fixed(n, q, with_mode(EngineMode::Serial));
        const SearchResult parallel = max_fixed(n, q, with_mode(EngineMode::Parallel));
        INFO("n=", n, " q=", q);
        CHECK(serial.code == parallel.code);
        CHECK(serial.cardinality == parallel.cardinality);
        const SearchResult vs = max_variable(n, q, with_mode(EngineMode::Serial));
        const SearchResult vp = max_variable(n, q, with_mode(EngineMode::Parallel));
        CHECK(vs.code == vp.code);
    }
}

TEST_CASE("node budget produces an incomplete-search error with a usable bound") {
    SearchConfig cfg;
    cfg.node_budget = 2;
    try {
        max_fixed(6, 3, cfg);
        FAIL("expected the budget to be exhausted");
    } catch (const IncompleteSearchError& e) {
        CHECK(e.best().cardinality >= 1); // at least the greedy seed survives
        CHECK(is_non_overlapping(e.best().code));
        CHECK(e.best().cardinality == e.best().code.size());
    }
    cfg.strategy = SearchStrategy::Exhaustive;
    cfg.node_budget = 5;
    CHECK_THROWS_AS(max_fixed(6, 3, cfg), IncompleteSearchError);
}

TEST_CASE("candidate caps") {
    SearchConfig cfg;
    cfg.candidate_cap = 16;
    CHECK_THROWS_AS(max_fixed(5, 2, cfg), BudgetError);   // 32 > 16
    CHECK_THROWS_AS(max_variable(4, 2, cfg), BudgetError); // 4+8+16 > 16
    CHECK(max_fixed(4, 2, cfg).cardinality == 1);          // 16 <= 16

    CHECK(fixed_candidate_count(5, 2, 32) == 32);
    CHECK_FALSE(fixed_candidate_count(5, 2, 31).has_value());
    CHECK(variable_candidate_count(3, 2, 12) == 12);
    CHECK_FALSE(variable_candidate_count(3, 2, 11).has_value());
    CHECK_FALSE(fixed_candidate_count(40, 10, std::uint64_t(1) << 62).has_value());
}

TEST_CASE("invalid search parameters") {
    CHECK_THROWS_AS(max_fixed(1, 2), DomainError);
    CHECK_THROWS_AS(max_fixed(2, 1), DomainError);
    CHECK_THROWS_AS(max_variable(1, 2), DomainError);
}

TEST_CASE("greedy maximal codes are maximal, deterministic per seed") {
    for (const auto& [n, q] : {std::pair<int, int>{2, 2}, {3, 2}, {4, 2}, {3, 3}, {4, 3},
                               {3, 4}}) {
        for (std::uint64_t seed : {0ull, 1ull, 9ull, 42ull}) {
            const Code a = greedy_maximal(n, q, seed);
            const Code b = greedy_maximal(n, q, seed);
            INFO("n=", n, " q=", q, " seed=", seed);
            CHECK(a == b);
            CHECK(is_non_overlapping(a));
            CHECK(is_maximal(a, n));
        }
    }
}

TEST_CASE("greedy maximal over two binary symbols yields 01 or 10") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        const Code c = greedy_maximal(2, 2, seed);
        const bool is01 = c == make_code(2, {"01"});
        const bool is10 = c == make_code(2, {"10"});
        CHECK((is01 || is10));
    }
    // Both outcomes occur.
    CHECK(greedy_maximal(2, 2, 0) == make_code(2, {"01"}));
    CHECK(greedy_maximal(2, 2, 2) == make_code(2, {"10"}));
}

TEST_CASE("greedy maximal golden value in canonical order") {
    CHECK(greedy_maximal(3, 3, 0) == make_code(3, {"01", "02"}));
    CHECK(greedy_maximal(4, 2, 0) == make_code(2, {"01"}));
}

TEST_CASE("classic construction") {
    CHECK(classic_construction(3, 3) == make_code(3, {"011", "012", "021", "022"}));
    CHECK(classic_construction(2, 2) == make_code(2, {"01"}));
    CHECK(classic_construction(4, 2) == make_code(2, {"0111"}));
    for (int n = 2; n <= 5; ++n)
        for (int q = 2; q <= 5; ++q) {
            const Code c = classic_construction(n, q);
            std::size_t expected = 1;
            for (int i = 0; i < n - 1; ++i) expected *= static_cast<std::size_t>(q - 1);
            INFO("n=", n, " q=", q);
            CHECK(c.size() == expected);
            CHECK(is_non_overlapping(c));
            CHECK(c.fixed_length());
            CHECK(c.max_len() == n);
        }
}

TEST_CASE("classic construction never beats the exact maximum") {
    for (const auto& [n, q] : {std::pair<int, int>{2, 2}, {3, 2}, {4, 2}, {5, 2},
                               {2, 3}, {3, 3}, {4, 3}, {2, 4}, {3, 4}, {2, 5}}) {
        INFO("n=", n, " q=", q);
        CHECK(classic_construction(n, q).size() <= max_fixed(n, q).cardinality);
    }
}

} // TEST_SUITE
