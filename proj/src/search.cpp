#include "noc/search.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <vector>

#include "noc/noc_index.hpp"

namespace noc {
namespace {

using Clock = std::chrono::steady_clock;

// Adjacency matrices above this vertex count are refused; the clique
// engines are for desk-scale instances.
constexpr std::size_t kMaxCliqueVertices = 32768;

std::optional<std::uint64_t> checked_pow(std::uint64_t q, int n, std::uint64_t cap) {
    std::uint64_t v = 1;
    for (int i = 0; i < n; ++i) {
        if (v > cap / q) return std::nullopt;
        v *= q;
    }
    return v;
}

bool self_noc(const std::vector<Symbol>& s) {
    for (std::size_t k = 1; k < s.size(); ++k) {
        bool border = true;
        for (std::size_t i = 0; i < k; ++i)
            if (s[i] != s[s.size() - k + i]) {
                border = false;
                break;
            }
        if (border) return false;
    }
    return true;
}

// Mutual Definition-2.1 compatibility of two distinct bifix-free words.
bool compatible(const Word& a, const Word& b, bool variable) {
    if (shared_border_length(a, b) || shared_border_length(b, a)) return false;
    if (variable) {
        if (a.size() < b.size() && subword_offset(a, b)) return false;
        if (b.size() < a.size() && subword_offset(b, a)) return false;
    }
    return true;
}

void append_bifix_free(std::vector<Word>& out, int q, int len) {
    std::vector<Symbol> cur(len, 0);
    do {
        if (self_noc(cur)) out.emplace_back(cur);
    } while (next_word(cur, q));
}

// ---- bit rows ----

struct Graph {
    std::size_t V = 0;
    std::size_t W = 0; // 64-bit words per row
    std::vector<std::uint64_t> bits;

    const std::uint64_t* row(std::size_t i) const { return bits.data() + i * W; }
    std::uint64_t* row(std::size_t i) { return bits.data() + i * W; }
    void set(std::size_t i, std::size_t j) { row(i)[j >> 6] |= std::uint64_t(1) << (j & 63); }
    bool get(std::size_t i, std::size_t j) const {
        return (row(i)[j >> 6] >> (j & 63)) & 1;
    }
};

bool bit_get(const std::vector<std::uint64_t>& m, std::size_t j) {
    return (m[j >> 6] >> (j & 63)) & 1;
}
void bit_set(std::vector<std::uint64_t>& m, std::size_t j) {
    m[j >> 6] |= std::uint64_t(1) << (j & 63);
}
void bit_clear(std::vector<std::uint64_t>& m, std::size_t j) {
    m[j >> 6] &= ~(std::uint64_t(1) << (j & 63));
}
bool bits_empty(const std::vector<std::uint64_t>& m) {
    for (std::uint64_t w : m)
        if (w) return false;
    return true;
}

Graph build_graph(const std::vector<Word>& vs, bool variable, bool parallel) {
    Graph g;
    g.V = vs.size();
    g.W = (g.V + 63) / 64;
    g.bits.assign(g.V * g.W, 0);
    const long long V = static_cast<long long>(g.V);
    if (parallel) {
        // Each thread owns whole rows; pairs are evaluated twice but there
        // are no cross-row writes.
#pragma omp parallel for schedule(dynamic, 8)
        for (long long i = 0; i < V; ++i)
            for (long long j = 0; j < V; ++j)
                if (i != j && compatible(vs[i], vs[j], variable)) g.set(i, j);
    } else {
        for (long long i = 0; i < V; ++i)
            for (long long j = i + 1; j < V; ++j)
                if (compatible(vs[i], vs[j], variable)) {
                    g.set(i, j);
                    g.set(j, i);
                }
    }
    return g;
}

// Canonical greedy clique: scan vertices in order, keep each one compatible
// with everything kept so far. Seeds the branch-and-bound incumbent.
std::vector<int> greedy_clique(const Graph& g) {
    std::vector<int> out;
    std::vector<std::uint64_t> cand(g.W, ~std::uint64_t(0));
    for (std::size_t v = 0; v < g.V; ++v) {
        if (!bit_get(cand, v)) continue;
        out.push_back(static_cast<int>(v));
        for (std::size_t w = 0; w < g.W; ++w) cand[w] &= g.row(v)[w];
    }
    return out;
}

struct ColorItem {
    int v;
    int color; // 1-based class index; non-decreasing along the list
};

// Greedy coloring of P in canonical vertex order; the returned list is
// grouped by class, so iterating it backwards visits colors high to low.
std::vector<ColorItem> color_order(const Graph& g, const std::vector<std::uint64_t>& P) {
    std::vector<std::vector<std::uint64_t>> class_mask;
    std::vector<std::vector<int>> class_members;
    for (std::size_t wi = 0; wi < P.size(); ++wi) {
        std::uint64_t word = P[wi];
        while (word) {
            const std::size_t v = (wi << 6) + static_cast<std::size_t>(__builtin_ctzll(word));
            word &= word - 1;
            std::size_t k = 0;
            for (; k < class_mask.size(); ++k) {
                bool clash = false;
                for (std::size_t w = 0; w < g.W; ++w)
                    if (class_mask[k][w] & g.row(v)[w]) {
                        clash = true;
                        break;
                    }
                if (!clash) break;
            }
            if (k == class_mask.size()) {
                class_mask.emplace_back(g.W, 0);
                class_members.emplace_back();
            }
            bit_set(class_mask[k], v);
            class_members[k].push_back(static_cast<int>(v));
        }
    }
    std::vector<ColorItem> out;
    for (std::size_t k = 0; k < class_members.size(); ++k)
        for (int v : class_members[k]) out.push_back({v, static_cast<int>(k) + 1});
    return out;
}

struct BudgetHit {};

struct BnbState {
    const Graph& g;
    std::vector<int> best;  // empty until the seed is beaten
    std::size_t best_size;  // current incumbent size (seeded)
    std::uint64_t nodes = 0;
    std::uint64_t budget = 0; // 0 = unlimited
};

void bnb_expand(BnbState& st, std::vector<int>& R, std::vector<std::uint64_t>& P) {
    const std::vector<ColorItem> L = color_order(st.g, P);
    for (std::size_t idx = L.size(); idx-- > 0;) {
        const auto [v, c] = L[idx];
        if (R.size() + static_cast<std::size_t>(c) <= st.best_size) return;
        ++st.nodes;
        if (st.budget && st.nodes > st.budget) throw BudgetHit{};
        R.push_back(v);
        std::vector<std::uint64_t> Pv(st.g.W);
        for (std::size_t w = 0; w < st.g.W; ++w) Pv[w] = P[w] & st.g.row(v)[w];
        if (bits_empty(Pv)) {
            if (R.size() > st.best_size) {
                st.best = R;
                st.best_size = R.size();
            }
        } else {
            bnb_expand(st, R, Pv);
        }
        R.pop_back();
        bit_clear(P, static_cast<std::size_t>(v));
    }
}

struct CliqueOutcome {
    std::vector<int> members;
    std::uint64_t nodes = 0;
    bool complete = true;
};

CliqueOutcome bnb_serial(const Graph& g, const std::vector<int>& seed, std::uint64_t budget) {
    BnbState st{g, {}, seed.size(), 0, budget};
    std::vector<int> R;
    std::vector<std::uint64_t> P(g.W, 0);
    for (std::size_t v = 0; v < g.V; ++v) bit_set(P, v);
    bool complete = true;
    try {
        if (g.V > 0) bnb_expand(st, R, P);
    } catch (const BudgetHit&) {
        complete = false;
    }
    return {st.best.empty() ? seed : st.best, st.nodes, complete};
}

// Root-split OpenMP engine. Every top-level branch is searched against the
// fixed greedy incumbent, so subtree node counts do not depend on thread
// scheduling; the serial-order reduction then reproduces exactly the clique
// the serial engine reports.
CliqueOutcome bnb_parallel(const Graph& g, const std::vector<int>& seed) {
    std::vector<std::uint64_t> P0(g.W, 0);
    for (std::size_t v = 0; v < g.V; ++v) bit_set(P0, v);
    const std::vector<ColorItem> L = color_order(g, P0);
    const std::size_t s0 = seed.size();

    std::vector<std::vector<int>> found(L.size());
    std::vector<std::uint64_t> node_counts(L.size(), 0);

    const long long count = static_cast<long long>(L.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (long long idx = 0; idx < count; ++idx) {
        const auto [v, c] = L[idx];
        if (static_cast<std::size_t>(c) <= s0) continue;
        std::vector<std::uint64_t> Pv(g.W, 0);
        for (long long j = 0; j < idx; ++j) bit_set(Pv, static_cast<std::size_t>(L[j].v));
        for (std::size_t w = 0; w < g.W; ++w) Pv[w] &= g.row(v)[w];
        std::vector<int> R{v};
        BnbState st{g, {}, s0, 0, 0};
        if (bits_empty(Pv)) {
            if (R.size() > s0) st.best = R;
        } else {
            bnb_expand(st, R, Pv);
        }
        node_counts[idx] = st.nodes + 1;
        if (!st.best.empty()) found[idx] = std::move(st.best);
    }

    CliqueOutcome out{seed, 0};
    for (std::size_t idx = L.size(); idx-- > 0;) {
        out.nodes += node_counts[idx];
        if (found[idx].size() > out.members.size()) out.members = found[idx];
    }
    return out;
}

struct ExhaustiveState {
    const std::vector<Word>& cands;
    bool variable;
    std::vector<Word> best;
    std::uint64_t nodes = 0;
    std::uint64_t budget = 0;
};

void exhaustive_rec(ExhaustiveState& st, std::size_t idx, std::vector<Word>& chosen) {
    ++st.nodes;
    if (st.budget && st.nodes > st.budget) throw BudgetHit{};
    if (chosen.size() > st.best.size()) st.best = chosen;
    if (idx == st.cands.size()) return;
    if (chosen.size() + (st.cands.size() - idx) <= st.best.size()) return;
    const Word& x = st.cands[idx];
    bool ok = true;
    for (const Word& w : chosen)
        if (!compatible(w, x, st.variable)) {
            ok = false;
            break;
        }
    if (ok) {
        chosen.push_back(x);
        exhaustive_rec(st, idx + 1, chosen);
        chosen.pop_back();
    }
    exhaustive_rec(st, idx + 1, chosen);
}

SearchResult make_result(int n, int q, const std::vector<Word>& words, std::uint64_t nodes,
                         Clock::time_point t0) {
    Code code(Alphabet(q), words);
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    return SearchResult{n, q, code.size(), std::move(code), nodes, elapsed};
}

std::vector<Word> members_to_words(const std::vector<Word>& vertices,
                                   const std::vector<int>& members) {
    std::vector<Word> out;
    out.reserve(members.size());
    for (int m : members) out.push_back(vertices[static_cast<std::size_t>(m)]);
    return out;
}

SearchResult run_search(int n, int q, const SearchConfig& cfg, bool variable) {
    if (n < 2 || q < 2) throw DomainError("search requires n >= 2 and q >= 2");
    const auto count = variable ? variable_candidate_count(n, q, cfg.candidate_cap)
                                : fixed_candidate_count(n, q, cfg.candidate_cap);
    if (!count)
        throw BudgetError("candidate word count for n=" + std::to_string(n) +
                          " q=" + std::to_string(q) + " exceeds the cap of " +
                          std::to_string(cfg.candidate_cap));
    const auto t0 = Clock::now();

    std::vector<Word> vertices;
    if (variable)
        for (int len = 2; len <= n; ++len) append_bifix_free(vertices, q, len);
    else
        append_bifix_free(vertices, q, n);

    if (cfg.strategy == SearchStrategy::Exhaustive) {
        ExhaustiveState st{vertices, variable, {}, 0, cfg.node_budget};
        std::vector<Word> chosen;
        try {
            exhaustive_rec(st, 0, chosen);
        } catch (const BudgetHit&) {
            throw IncompleteSearchError(
                "node budget of " + std::to_string(cfg.node_budget) + " exhausted",
                make_result(n, q, st.best, st.nodes, t0));
        }
        return make_result(n, q, st.best, st.nodes, t0);
    }

    if (vertices.size() > kMaxCliqueVertices)
        throw BudgetError("conflict graph with " + std::to_string(vertices.size()) +
                          " vertices exceeds the engine limit of " +
                          std::to_string(kMaxCliqueVertices));

    // A node budget is accounted on the serial reference engine.
    const bool parallel = cfg.node_budget == 0 && cfg.mode != EngineMode::Serial;
    Graph g = build_graph(vertices, variable, parallel);
    const std::vector<int> seed = greedy_clique(g);

    const CliqueOutcome outcome =
        parallel ? bnb_parallel(g, seed) : bnb_serial(g, seed, cfg.node_budget);
    SearchResult result =
        make_result(n, q, members_to_words(vertices, outcome.members), outcome.nodes, t0);
    if (!outcome.complete)
        throw IncompleteSearchError("node budget of " + std::to_string(cfg.node_budget) +
                                        " exhausted",
                                    std::move(result));
    return result;
}

} // namespace

std::optional<std::uint64_t> fixed_candidate_count(int n, int q, std::uint64_t cap) {
    return checked_pow(static_cast<std::uint64_t>(q), n, cap);
}

std::optional<std::uint64_t> variable_candidate_count(int n, int q, std::uint64_t cap) {
    std::uint64_t total = 0;
    for (int len = 2; len <= n; ++len) {
        const auto p = checked_pow(static_cast<std::uint64_t>(q), len, cap);
        if (!p || total > cap - *p) return std::nullopt;
        total += *p;
    }
    return total;
}

SearchResult max_fixed(int n, int q, const SearchConfig& cfg) {
    return run_search(n, q, cfg, false);
}

SearchResult max_variable(int n, int q, const SearchConfig& cfg) {
    return run_search(n, q, cfg, true);
}

Code greedy_maximal(int n, int q, std::uint64_t order_seed) {
    if (n < 2 || q < 2) throw DomainError("greedy_maximal requires n >= 2 and q >= 2");
    std::vector<Word> candidates;
    for (int len = 2; len <= n; ++len) {
        std::vector<Symbol> cur(len, 0);
        do {
            candidates.emplace_back(cur);
        } while (next_word(cur, q));
    }
    if (order_seed != 0) {
        std::mt19937_64 rng(order_seed);
        for (std::size_t i = candidates.size(); i > 1; --i)
            std::swap(candidates[i - 1], candidates[rng() % i]);
    }
    NocIndex index((Alphabet(q)));
    for (const Word& w : candidates)
        if (index.admits(w)) index.insert(w);
    return Code(Alphabet(q), index.accepted());
}

Code classic_construction(int n, int q) {
    if (n < 2 || q < 2) throw DomainError("classic construction requires n >= 2 and q >= 2");
    std::vector<Word> words;
    std::vector<Symbol> tail(static_cast<std::size_t>(n) - 1, 0); // tail symbol t encodes t+1
    do {
        std::vector<Symbol> syms;
        syms.reserve(static_cast<std::size_t>(n));
        syms.push_back(0);
        for (Symbol t : tail) syms.push_back(t + 1);
        words.emplace_back(std::move(syms));
    } while (next_word(tail, q - 1));
    return Code(Alphabet(q), std::move(words));
}

} // namespace noc
