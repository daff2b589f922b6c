#pragma once

#include "bclique/analysis.hpp"
#include "bclique/clique_engine.hpp"
#include "bclique/report.hpp"
#include "bclique/stability.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace bclique {

struct CorpusEntry {
    Graph graph;
    std::vector<VertexSet> bsets;  // sizes {0, ceil(n/3), n}
    std::string name;
};

namespace detail {

inline Graph random_graph(std::uint64_t& state, int n, int density_permille) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rand_range(state, 0, 999) < density_permille) g.add_edge(u, v);
    return g;
}

inline VertexSet random_subset(std::uint64_t& state, int n, int k) {
    std::vector<int> pool(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
    VertexSet out;
    for (int i = 0; i < k; ++i) {
        std::size_t pick = static_cast<std::size_t>(
            rand_range(state, 0, static_cast<long long>(pool.size()) - 1));
        out.add(pool[pick]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    return out;
}

inline std::vector<VertexSet> corpus_bsets(std::uint64_t& state, int n) {
    int mid = (n + 2) / 3;  // ceil(n/3)
    return {VertexSet(), random_subset(state, n, mid), VertexSet::full(n)};
}

}  // namespace detail

// Test corpus: every labeled graph with n <= 4, 250 seeded random graphs each
// for n = 5 and n = 6, and 300 seeded random graphs with 7 <= n <= 10; random
// densities cycle over {0.2, 0.5, 0.8}. Each entry carries B sets of sizes
// {0, ceil(n/3), n}. quick mode shrinks the random parts for developer runs.
inline std::vector<CorpusEntry> build_corpus(std::uint64_t seed, bool quick = false) {
    std::vector<CorpusEntry> out;
    std::uint64_t state = seed;

    for (int n = 1; n <= 4; ++n) {
        int pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (1ULL << pairs); ++mask) {
            Graph g(n);
            int bit = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v, ++bit)
                    if ((mask >> bit) & 1ULL) g.add_edge(u, v);
            out.push_back({std::move(g), detail::corpus_bsets(state, n),
                           "exhaustive-n" + std::to_string(n) + "-" + std::to_string(mask)});
        }
    }

    const int densities[3] = {200, 500, 800};
    int per_small = quick ? 25 : 250;
    for (int n = 5; n <= 6; ++n)
        for (int i = 0; i < per_small; ++i) {
            Graph g = detail::random_graph(state, n, densities[i % 3]);
            out.push_back({std::move(g), detail::corpus_bsets(state, n),
                           "random-n" + std::to_string(n) + "-" + std::to_string(i)});
        }
    int large_total = quick ? 30 : 300;
    for (int i = 0; i < large_total; ++i) {
        int n = 7 + i % 4;
        Graph g = detail::random_graph(state, n, densities[i % 3]);
        out.push_back({std::move(g), detail::corpus_bsets(state, n),
                       "random-n" + std::to_string(n) + "-" + std::to_string(i)});
    }
    return out;
}

struct SuiteSummary {
    long long checks = 0;
    long long holds = 0;
    long long violated = 0;
    long long not_applicable = 0;
    long long unresolved = 0;
    long long budget_unresolved = 0;  // comparisons that exhausted the refinement budget
    std::vector<CheckReport> violations;

    void absorb(const CheckReport& r) {
        ++checks;
        switch (r.verdict) {
            case Verdict::Holds: ++holds; break;
            case Verdict::Violated:
                ++violated;
                violations.push_back(r);
                break;
            case Verdict::NotApplicable: ++not_applicable; break;
            case Verdict::Unresolved: ++unresolved; break;
        }
    }

    Json to_json() const {
        Json j;
        j["checks"] = checks;
        j["holds"] = holds;
        j["violated"] = violated;
        j["not_applicable"] = not_applicable;
        j["unresolved"] = unresolved;
        j["budget_unresolved"] = budget_unresolved;
        j["violations"] = reports_to_json(violations);
        return j;
    }
};

// Exact coefficient-map agreement of the four strategies on every corpus entry,
// for every B. Returns the number of (graph, B) pairs checked; any mismatch
// throws, since disagreement of cross-certifying routes is an internal defect.
inline long long run_agreement_suite(const std::vector<CorpusEntry>& corpus,
                                     std::uint64_t budget = default_clique_budget) {
    long long pairs = 0;
    for (const auto& entry : corpus) {
        std::optional<Peo> peo = is_chordal(entry.graph);
        for (VertexSet b : entry.bsets) {
            BivariatePoly brute = cbpoly_bruteforce(entry.graph, b, budget);
            if (!(brute == cbpoly_vertex_recurrence(entry.graph, b, budget)))
                throw std::logic_error("vertex recurrence disagrees on " + entry.name);
            if (!(brute == cbpoly_edge_recurrence(entry.graph, b, budget)))
                throw std::logic_error("edge recurrence disagrees on " + entry.name);
            if (peo && !(brute == cbpoly_peo(entry.graph, b, *peo)))
                throw std::logic_error("PEO strategy disagrees on " + entry.name);
            ++pairs;
        }
    }
    return pairs;
}

// Independent classical clique polynomial by plain subset sweep; the oracle for
// the specialization identities. Intentionally ignores the clique engine.
inline std::vector<Int> classical_clique_polynomial_oracle(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<Int> counts(static_cast<std::size_t>(n) + 1, 0);
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
        VertexSet s{mask};
        if (is_clique(g, s)) ++counts[static_cast<std::size_t>(s.size())];
    }
    return counts;
}

// C_V(G; x, y) = C(G; x y) and C_emptyset(G; x, y) = C(G; x), coefficientwise
// against the subset-sweep oracle. Throws on any mismatch.
inline long long run_specialization_suite(const std::vector<CorpusEntry>& corpus,
                                          std::uint64_t budget = default_clique_budget) {
    long long checked = 0;
    for (const auto& entry : corpus) {
        std::vector<Int> classic = classical_clique_polynomial_oracle(entry.graph);
        BivariatePoly full = cbpoly_bruteforce(entry.graph, entry.graph.vertices(), budget);
        BivariatePoly empty = cbpoly_bruteforce(entry.graph, VertexSet(), budget);
        for (int i = 0; i <= entry.graph.vertex_count(); ++i) {
            const Int& c = classic[static_cast<std::size_t>(i)];
            if (full.coeff(i, i) != c)
                throw std::logic_error("C_V(G;x,y) != C(G;xy) on " + entry.name);
            if (empty.coeff(i, 0) != c)
                throw std::logic_error("C_empty(G;x,y) != C(G;x) on " + entry.name);
        }
        for (const auto& [k, c] : full.terms())
            if (k.first != k.second) throw std::logic_error("C_V has off-diagonal terms: " + entry.name);
        for (const auto& [k, c] : empty.terms())
            if (k.second != 0) throw std::logic_error("C_empty has y terms: " + entry.name);
        ++checked;
    }
    return checked;
}

namespace detail {

struct ChainStep {
    Graph next;
    VertexSet next_b;
    Json witness;
};

// One deletion chain. Section analyses of the current graph are reused as the
// next step's ambient side, so each zeta is isolated exactly once. Coarse
// isolation suffices here; compare_zeta refines on demand.
template <class PickStep>
SuiteSummary run_chain(const Graph& start, VertexSet start_b, std::span<const Rat> ygrid,
                       std::uint64_t& state, bool vertex_mode, std::uint64_t budget,
                       PickStep&& pick) {
    const Rat coarse = make_rat(1, 256);
    SuiteSummary sum;
    Graph cur = start;
    VertexSet cur_b = start_b;
    std::vector<RootAnalysis> cur_z;
    cur_z.reserve(ygrid.size());
    {
        BivariatePoly p = cbpoly_bruteforce(cur, cur_b, budget);
        for (const Rat& y : ygrid)
            cur_z.push_back(RootAnalysis::isolate_negative_roots(p.section_at_y(y), coarse));
    }
    for (;;) {
        std::optional<ChainStep> step = pick(cur, cur_b, state);
        if (!step) break;
        BivariatePoly pn = cbpoly_bruteforce(step->next, step->next_b, budget);
        std::vector<RootAnalysis> next_z;
        next_z.reserve(ygrid.size());
        for (const Rat& y : ygrid)
            next_z.push_back(RootAnalysis::isolate_negative_roots(pn.section_at_y(y), coarse));

        CheckReport rep;
        rep.claim = vertex_mode ? "induced-subgraph-zeta-monotonicity"
                                : "spanning-subgraph-zeta-monotonicity";
        rep.verdict = Verdict::Holds;
        for (std::size_t yi = 0; yi < ygrid.size(); ++yi) {
            // vertex deletion claims zeta_next <= zeta_cur; edge deletion claims
            // zeta_cur <= zeta_next. Violation = certified GT of the left side.
            RootAnalysis& lhs = vertex_mode ? next_z[yi] : cur_z[yi];
            RootAnalysis& rhs = vertex_mode ? cur_z[yi] : next_z[yi];
            ZetaComparison cmp = compare_zeta(lhs, rhs);
            if (cmp.budget_exhausted) ++sum.budget_unresolved;
            if (cmp.order == ZetaComparison::Order::GT) {
                rep.verdict = Verdict::Violated;
                rep.witness = Json{{"step", step->witness},
                                   {"graph", graph_json(cur)},
                                   {"B", vertex_set_json(cur, cur_b)},
                                   {"subgraph", graph_json(step->next)},
                                   {"subgraph_B", vertex_set_json(step->next, step->next_b)},
                                   {"y", rat_string(ygrid[yi])},
                                   {"zeta_lhs", root_analysis_json(lhs)},
                                   {"zeta_rhs", root_analysis_json(rhs)}};
                break;
            }
        }
        sum.absorb(rep);
        cur = std::move(step->next);
        cur_b = step->next_b;
        cur_z = std::move(next_z);
    }
    return sum;
}

inline std::optional<ChainStep> vertex_chain_step(const Graph& cur, VertexSet cur_b,
                                                  std::uint64_t& state) {
    if (cur.vertex_count() <= 1) return std::nullopt;
    int v = static_cast<int>(rand_range(state, 0, cur.vertex_count() - 1));
    auto [next, map] = induced_subgraph(cur, cur.vertices() - VertexSet::single(v));
    VertexSet next_b;
    for (std::size_t i = 0; i < map.size(); ++i)
        if (cur_b.contains(map[i])) next_b.add(static_cast<int>(i));
    Json witness{{"deleted_vertex_label", cur.label(v)},
                 {"remaining_vertices", next.vertex_count()}};
    return ChainStep{std::move(next), next_b, std::move(witness)};
}

inline std::optional<ChainStep> edge_chain_step(const Graph& cur, VertexSet cur_b,
                                                std::uint64_t& state) {
    auto edges = cur.edges();
    if (edges.empty()) return std::nullopt;
    auto [u, v] = edges[static_cast<std::size_t>(
        rand_range(state, 0, static_cast<long long>(edges.size()) - 1))];
    Json witness{{"deleted_edge_labels", Json::array({cur.label(u), cur.label(v)})},
                 {"remaining_edges", static_cast<int>(edges.size()) - 1}};
    return ChainStep{cur.without_edge(u, v), cur_b, std::move(witness)};
}

inline void merge_summary(SuiteSummary& total, const SuiteSummary& s) {
    total.checks += s.checks;
    total.holds += s.holds;
    total.violated += s.violated;
    total.not_applicable += s.not_applicable;
    total.unresolved += s.unresolved;
    total.budget_unresolved += s.budget_unresolved;
    for (const auto& v : s.violations) total.violations.push_back(v);
}

}  // namespace detail

// Stepwise single-vertex and single-edge deletion chains over the whole corpus,
// each step compared at every grid y. Certified violations are findings and are
// recorded with replayable witnesses, never crashes.
inline SuiteSummary run_monotonicity_suite(const std::vector<CorpusEntry>& corpus,
                                           std::span<const Rat> ygrid, std::uint64_t seed,
                                           std::uint64_t budget = default_clique_budget) {
    SuiteSummary total;
    std::uint64_t state = seed;
    for (const auto& entry : corpus)
        for (VertexSet b : entry.bsets) {
            detail::merge_summary(total,
                                  detail::run_chain(entry.graph, b, ygrid, state, true, budget,
                                                    detail::vertex_chain_step));
            detail::merge_summary(total,
                                  detail::run_chain(entry.graph, b, ygrid, state, false, budget,
                                                    detail::edge_chain_step));
        }
    return total;
}

// Independence and girth bound verdicts over the whole corpus.
inline SuiteSummary run_bounds_suite(const std::vector<CorpusEntry>& corpus,
                                     std::uint64_t budget = default_clique_budget) {
    SuiteSummary total;
    for (const auto& entry : corpus)
        for (VertexSet b : entry.bsets) {
            total.absorb(check_b_independence_bound(entry.graph, b, budget));
            total.absorb(check_b_girth_bound(entry.graph, b, budget));
        }
    return total;
}

// Full stability battery on every corpus entry (hypothesis failures come back
// NotApplicable and are counted as such).
inline SuiteSummary run_stability_battery(const std::vector<CorpusEntry>& corpus, int r,
                                          int trials, std::uint64_t seed,
                                          std::uint64_t budget = default_clique_budget) {
    SuiteSummary total;
    for (const auto& entry : corpus)
        for (VertexSet b : entry.bsets)
            total.absorb(check_main_stability_theorem(entry.graph, b, r, trials, seed, budget));
    return total;
}

}  // namespace bclique
