#include <doctest.h>

#include <array>
#include <random>
#include <set>

#include "noc/extension.hpp"
#include "noc/noc_index.hpp"
#include "oracle.hpp"

using namespace noc;

namespace {

Code make_code(int q, std::initializer_list<std::string> words) {
    std::vector<Word> parsed;
    for (const std::string& text : words) parsed.push_back(parse_word(text, q));
    return Code(Alphabet(q), std::move(parsed));
}

std::vector<Word> words_of(int q, std::initializer_list<std::string> texts) {
    std::vector<Word> out;
    for (const std::string& text : texts) out.push_back(parse_word(text, q));
    std::sort(out.begin(), out.end());
    return out;
}

// Random non-overlapping codes grown through the incremental index; only
// used as a corpus source here, correctness of the index is tested on its
// own.
std::vector<Code> random_noc_corpus(int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Code> out;
    while (static_cast<int>(out.size()) < count) {
        const int q = 2 + static_cast<int>(rng() % 3);
        NocIndex index((Alphabet(q)));
        const int attempts = 30 + static_cast<int>(rng() % 120);
        for (int step = 0; step < attempts; ++step) {
            const std::size_t len = 2 + rng() % 4;
            std::vector<Symbol> syms(len);
            for (auto& s : syms) s = static_cast<Symbol>(rng() % static_cast<std::uint64_t>(q));
            const Word cand(std::move(syms));
            if (index.admits(cand)) index.insert(cand);
        }
        if (index.size() == 0) continue;
        out.push_back(Code(Alphabet(q), index.accepted()));
    }
    return out;
}

} // namespace

TEST_SUITE("extension") {

TEST_CASE("suffix sets") {
    const Code c = make_code(3, {"12", "102"});
    CHECK(suffix_set(c, 1).suffixes == words_of(3, {"2"}));
    CHECK(suffix_set(c, 2).suffixes == words_of(3, {"02"}));
    const Code d = make_code(2, {"11000", "11010"});
    CHECK(suffix_set(d, 2).suffixes == words_of(2, {"00", "10"}));
    CHECK(suffix_set(d, 4).suffixes == words_of(2, {"1000", "1010"}));

    CHECK_THROWS_AS(suffix_set(c, 0), RangeError);
    CHECK_THROWS_AS(suffix_set(c, 3), RangeError);
    CHECK_THROWS_AS(suffix_set(Code::empty(Alphabet(2)), 1), DomainError);
}

TEST_CASE("per-word extension sets") {
    const Code c = make_code(3, {"12", "102"});
    CHECK(per_word_extension(parse_word("12", 3), c) == words_of(3, {"122"}));
    CHECK(per_word_extension(parse_word("102", 3), c) == words_of(3, {"102"}));
    const Code d = make_code(3, {"012", "0112"});
    CHECK(per_word_extension(parse_word("012", 3), d) == words_of(3, {"0122"}));
    CHECK_THROWS_AS(per_word_extension(parse_word("21", 3), c), DomainError);
}

TEST_CASE("extension of the worked examples") {
    CHECK(extend(make_code(3, {"12", "102"})) == make_code(3, {"102", "122"}));
    CHECK(extend(make_code(3, {"012", "0112"})) == make_code(3, {"0112", "0122"}));
    const Code fixed = make_code(2, {"11000", "11010"});
    CHECK(extend(fixed) == fixed);
}

TEST_CASE("extension size formula on the worked examples") {
    CHECK(extension_size(make_code(3, {"12", "102"})) == 2);
    CHECK(extension_size(make_code(3, {"012", "0112"})) == 2);
    CHECK(extension_size(make_code(2, {"11000", "11010"})) == 2);
}

TEST_CASE("extension preconditions") {
    CHECK_THROWS_AS(extend(Code::empty(Alphabet(2))), DomainError);
    CHECK_THROWS_AS(extend(make_code(2, {"1001"})), PreconditionError);
    CHECK_THROWS_AS(extension_size(make_code(2, {"1001"})), PreconditionError);
    // force computes the construction anyway; no non-overlap promise then.
    CHECK(extend(make_code(2, {"1001"}), true).size() >= 1);
}

TEST_CASE("extension properties over a random corpus") {
    for (const Code& S : random_noc_corpus(120, 51)) {
        const Code extended = extend(S);
        const int n = S.max_len();

        // Preservation of non-overlap.
        CHECK(is_non_overlapping(extended));
        CHECK(oracle::is_noc(oracle::from_code(extended)));

        // Exact size formula, and growth.
        CHECK(extension_size(S) == extended.size());
        CHECK(extended.size() >= S.size());

        // Fixed length n; every output extends some input.
        for (const Word& x : extended.words()) {
            CHECK(static_cast<int>(x.size()) == n);
            bool covered = false;
            for (const Word& s : S.words())
                if (s.size() <= x.size() && prefix(x, s.size()) == s) covered = true;
            CHECK(covered);
        }

        // Per-word sets: non-empty, pairwise disjoint, and their sizes sum
        // to the total.
        std::set<Word> seen;
        std::size_t total = 0;
        for (const Word& s : S.words()) {
            const auto part = per_word_extension(s, S);
            CHECK(!part.empty());
            total += part.size();
            for (const Word& x : part) {
                CHECK(seen.insert(x).second); // disjointness
            }
        }
        CHECK(total == extended.size());

        // Suffix sets are never empty in the usable range.
        for (int k = 1; k < n; ++k) CHECK(suffix_set(S, k).suffixes.size() >= 1);
    }
}

TEST_CASE("suffix-set sizes need not grow with k") {
    // {112, 0122} is non-overlapping, yet its length-2 suffix set {12, 22}
    // is strictly larger than its length-3 suffix set {122}. Only the lower
    // bound |suf(S, k)| >= 1 holds in general, and that is all the size
    // inequality |extend(S)| >= |S| needs.
    const Code S = make_code(3, {"112", "0122"});
    REQUIRE(is_non_overlapping(S));
    CHECK(suffix_set(S, 2).suffixes == words_of(3, {"12", "22"}));
    CHECK(suffix_set(S, 3).suffixes == words_of(3, {"122"}));
    CHECK(suffix_set(S, 2).suffixes.size() > suffix_set(S, 3).suffixes.size());
}

TEST_CASE("every candidate overlap between extended words is ruled out") {
    // For extended words x = u||su and y = v||sv, a shared border of length
    // k would fall into one of four regimes per ordered pair, depending on
    // whether the prefix side stays inside u and whether the suffix side
    // stays inside sv. All four regimes must be exercised and all must come
    // up empty.
    std::vector<Code> corpus = random_noc_corpus(60, 52);
    corpus.push_back(make_code(3, {"012", "0112"}));
    corpus.push_back(make_code(3, {"112", "0122"}));
    corpus.push_back(make_code(3, {"12", "102"}));
    corpus.push_back(make_code(3, {"12", "0102"}));

    std::array<long, 4> coverage{0, 0, 0, 0};
    for (const Code& S : corpus) {
        const Code extended = extend(S);
        const int n = S.max_len();

        // Origin of each extended word (well-defined by disjointness).
        std::vector<std::pair<Word, Word>> origin; // (extended word, source word)
        for (const Word& s : S.words())
            for (const Word& x : per_word_extension(s, S)) origin.emplace_back(x, s);

        for (const auto& [x, u] : origin)
            for (const auto& [y, v] : origin)
                for (std::size_t k = 1; k < static_cast<std::size_t>(n); ++k) {
                    const std::size_t sv_len = static_cast<std::size_t>(n) - v.size();
                    const int regime =
                        (k <= u.size() ? 0 : 2) + (k <= sv_len ? 0 : 1);
                    ++coverage[static_cast<std::size_t>(regime)];
                    CHECK(prefix(x, k) != suffix(y, k));
                }
    }
    for (int regime = 0; regime < 4; ++regime) {
        INFO("regime ", regime);
        CHECK(coverage[static_cast<std::size_t>(regime)] > 0);
    }
}

} // TEST_SUITE
