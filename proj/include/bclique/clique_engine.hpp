#pragma once

#include "bclique/bipoly.hpp"
#include "bclique/chordal.hpp"
#include "bclique/errors.hpp"
#include "bclique/graph.hpp"

#include <complex>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace bclique {

inline constexpr std::uint64_t default_clique_budget = 1ULL << 26;

// Every clique of G (including the empty set and singletons), emitted in
// lexicographic order of sorted vertex-index lists. fn receives a VertexSet.
template <class F>
void for_each_clique(const Graph& g, F&& fn, std::uint64_t budget = default_clique_budget) {
    std::uint64_t count = 1;
    fn(VertexSet());
    auto rec = [&](auto&& self, std::uint64_t cur, std::uint64_t cand) -> void {
        while (cand) {
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            std::uint64_t next = cur | (1ULL << v);
            if (++count > budget) throw BudgetError("clique enumeration budget exceeded");
            fn(VertexSet(next));
            self(self, next, cand & g.neighbors(v).bits());
        }
    };
    rec(rec, 0, g.vertices().bits());
}

inline std::vector<std::vector<int>> enumerate_cliques(const Graph& g,
                                                       std::uint64_t budget = default_clique_budget) {
    std::vector<std::vector<int>> out;
    for_each_clique(g, [&](VertexSet k) { out.push_back(k.members()); }, budget);
    return out;
}

// Direct enumeration: coefficient (i, j) counts cliques with |K| = i, |K cap B| = j.
inline BivariatePoly cbpoly_bruteforce(const Graph& g, VertexSet b,
                                       std::uint64_t budget = default_clique_budget) {
    BivariatePoly p;
    for_each_clique(g, [&](VertexSet k) { p.add_term(k.size(), (k & b).size(), 1); }, budget);
    return p;
}

namespace detail {

// Memo key: adjacency bitsets of the compacted induced subgraph (vertices
// relabeled in ascending index order) plus the B-membership bitset.
struct CanonGraph {
    std::vector<std::uint64_t> rows;
    std::uint64_t b = 0;
    auto operator<=>(const CanonGraph&) const = default;
};

inline CanonGraph compact(const Graph& g, std::uint64_t s, std::uint64_t b) {
    CanonGraph cg;
    std::vector<int> verts;
    for (std::uint64_t m = s; m; m &= m - 1) verts.push_back(std::countr_zero(m));
    cg.rows.resize(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i) {
        std::uint64_t nb = g.neighbors(verts[i]).bits() & s;
        std::uint64_t row = 0;
        for (std::size_t j = 0; j < verts.size(); ++j)
            if ((nb >> verts[j]) & 1ULL) row |= 1ULL << j;
        cg.rows[i] = row;
        if ((b >> verts[i]) & 1ULL) cg.b |= 1ULL << i;
    }
    return cg;
}

inline CanonGraph induced_compact(const CanonGraph& g, std::uint64_t s) {
    CanonGraph cg;
    std::vector<int> verts;
    for (std::uint64_t m = s; m; m &= m - 1) verts.push_back(std::countr_zero(m));
    cg.rows.resize(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i) {
        std::uint64_t nb = g.rows[static_cast<std::size_t>(verts[i])] & s;
        std::uint64_t row = 0;
        for (std::size_t j = 0; j < verts.size(); ++j)
            if ((nb >> verts[j]) & 1ULL) row |= 1ULL << j;
        cg.rows[i] = row;
        if ((g.b >> verts[i]) & 1ULL) cg.b |= 1ULL << i;
    }
    return cg;
}

}  // namespace detail

// Vertex deletion recurrence:
//   C_B(G) = C_B(G - v) + x y^[v in B] C_{B cap N(v)}(G[N(v)])
// with memoization on the canonicalized (induced subgraph, B) pair. The deleted
// vertex is a minimum-degree vertex of the current subproblem.
inline BivariatePoly cbpoly_vertex_recurrence(const Graph& g, VertexSet b,
                                              std::uint64_t budget = default_clique_budget) {
    std::map<detail::CanonGraph, BivariatePoly> memo;
    std::uint64_t nodes = 0;
    auto rec = [&](auto&& self, std::uint64_t s) -> BivariatePoly {
        if (s == 0) return BivariatePoly::one();
        if (++nodes > budget) throw BudgetError("vertex recurrence budget exceeded");
        detail::CanonGraph key = detail::compact(g, s, b.bits());
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        int pick = -1, best_deg = 65;
        for (std::uint64_t m = s; m; m &= m - 1) {
            int v = std::countr_zero(m);
            int deg = std::popcount(g.neighbors(v).bits() & s);
            if (deg < best_deg) {
                best_deg = deg;
                pick = v;
            }
        }
        BivariatePoly res = self(self, s & ~(1ULL << pick)) +
                            self(self, g.neighbors(pick).bits() & s)
                                .shifted(1, b.contains(pick) ? 1 : 0);
        memo.emplace(std::move(key), res);
        return res;
    };
    return rec(rec, g.vertices().bits());
}

// Edge deletion recurrence:
//   C_B(G) = C_B(G - uv) + x^2 y^([u in B]+[v in B]) C over G[N(u) cap N(v)]
// down to the edgeless base case 1 + sum_v x y^[v in B]. The deleted edge is one
// whose endpoints have the largest common neighborhood.
inline BivariatePoly cbpoly_edge_recurrence(const Graph& g, VertexSet b,
                                            std::uint64_t budget = default_clique_budget) {
    std::map<detail::CanonGraph, BivariatePoly> memo;
    std::uint64_t nodes = 0;
    auto rec = [&](auto&& self, const detail::CanonGraph& cg) -> BivariatePoly {
        const int n = static_cast<int>(cg.rows.size());
        int eu = -1, ev = -1, best_common = -1;
        for (int u = 0; u < n; ++u)
            for (std::uint64_t m = cg.rows[static_cast<std::size_t>(u)] &
                                   ~((u < 63 ? (2ULL << u) : 0ULL) - 1ULL);
                 m; m &= m - 1) {
                int v = std::countr_zero(m);
                int common = std::popcount(cg.rows[static_cast<std::size_t>(u)] &
                                           cg.rows[static_cast<std::size_t>(v)]);
                if (common > best_common) {
                    best_common = common;
                    eu = u;
                    ev = v;
                }
            }
        if (eu < 0) {
            BivariatePoly base = BivariatePoly::one();
            for (int v = 0; v < n; ++v) base.add_term(1, (cg.b >> v) & 1ULL ? 1 : 0, 1);
            return base;
        }
        if (++nodes > budget) throw BudgetError("edge recurrence budget exceeded");
        if (auto it = memo.find(cg); it != memo.end()) return it->second;

        detail::CanonGraph without = cg;
        without.rows[static_cast<std::size_t>(eu)] &= ~(1ULL << ev);
        without.rows[static_cast<std::size_t>(ev)] &= ~(1ULL << eu);
        std::uint64_t common = cg.rows[static_cast<std::size_t>(eu)] &
                               cg.rows[static_cast<std::size_t>(ev)];
        int dj = (((cg.b >> eu) & 1ULL) ? 1 : 0) + (((cg.b >> ev) & 1ULL) ? 1 : 0);
        BivariatePoly res = self(self, without) +
                            self(self, detail::induced_compact(cg, common)).shifted(2, dj);
        memo.emplace(cg, res);
        return res;
    };
    return rec(rec, detail::compact(g, g.vertices().bits(), b.bits()));
}

// PEO induction for chordal graphs: step i adds
//   x y^[v_i in B] * prod over earlier neighbors u of (1 + x y^[u in B]).
// The ordering must verify; unverified orderings are rejected. When steps is
// given it receives the polynomial after every step (prefix graphs G_1..G_n).
inline BivariatePoly cbpoly_peo(const Graph& g, VertexSet b, const Peo& peo,
                                std::vector<BivariatePoly>* steps = nullptr) {
    if (!verify_peo(g, peo)) throw std::invalid_argument("ordering is not a verified PEO");
    BivariatePoly p = BivariatePoly::one();
    VertexSet seen;
    for (int v : peo.order) {
        VertexSet earlier = g.neighbors(v) & seen;
        int k1 = (earlier & b).size();
        int k0 = earlier.size() - k1;
        BivariatePoly contrib;
        for (int s = 0; s <= k0; ++s)
            for (int t = 0; t <= k1; ++t)
                contrib.add_term(s + t, t,
                                 binomial_u(static_cast<unsigned>(k0), static_cast<unsigned>(s)) *
                                     binomial_u(static_cast<unsigned>(k1), static_cast<unsigned>(t)));
        p += contrib.shifted(1, b.contains(v) ? 1 : 0);
        seen.add(v);
        if (steps) steps->push_back(p);
    }
    return p;
}

// Weight function w : B -> Z_{>0}; the domain must equal B exactly.
struct WeightFunction {
    std::map<int, int> values;

    static WeightFunction ones(VertexSet b) {
        WeightFunction w;
        for (int v : b.members()) w.values[v] = 1;
        return w;
    }

    int at(int v) const {
        auto it = values.find(v);
        if (it == values.end()) throw std::invalid_argument("weight queried outside domain");
        return it->second;
    }

    void validate_for(VertexSet b) const {
        VertexSet domain;
        for (const auto& [v, wt] : values) {
            if (wt < 1) throw std::invalid_argument("weights must be positive integers");
            domain.add(v);
        }
        if (!(domain == b)) throw std::invalid_argument("weight domain must equal B");
    }

    bool leq(const WeightFunction& o) const {
        for (const auto& [v, wt] : values) {
            auto it = o.values.find(v);
            if (it == o.values.end() || wt > it->second) return false;
        }
        return true;
    }

    long long total() const {
        long long t = 0;
        for (const auto& [v, wt] : values) t += wt;
        return t;
    }
};

// Weighted polynomial: coefficient (i, t) counts cliques with |K| = i and
// B-weight t = sum of w over K cap B. With w == 1 this is cbpoly_bruteforce.
inline BivariatePoly weighted_cbpoly(const Graph& g, VertexSet b, const WeightFunction& w,
                                     std::uint64_t budget = default_clique_budget) {
    w.validate_for(b);
    BivariatePoly p;
    for_each_clique(
        g,
        [&](VertexSet k) {
            int t = 0;
            for (int v : (k & b).members()) t += w.at(v);
            p.add_term(k.size(), t, 1);
        },
        budget);
    return p;
}

// Multiaffine vertex polynomial of a triangle-free graph:
//   F_H(u) = 1 + sum_v u_v + sum_{vw in E} u_v u_w.
// Specializing u_v to x (v not in B) or x y (v in B) reproduces the B-clique
// polynomial, because triangle-free cliques are exactly the empty set,
// vertices, and edges.
class MultiaffineVertexPoly {
public:
    static MultiaffineVertexPoly build(const Graph& g) {
        if (auto t = find_triangle(g)) {
            throw std::invalid_argument(
                "graph has a triangle {" + std::to_string(g.label((*t)[0])) + "," +
                std::to_string(g.label((*t)[1])) + "," + std::to_string(g.label((*t)[2])) + "}");
        }
        return MultiaffineVertexPoly(g);
    }

    std::complex<double> eval(std::span<const std::complex<double>> u) const {
        if (static_cast<int>(u.size()) != g_.vertex_count())
            throw std::invalid_argument("assignment size mismatch");
        std::complex<double> acc(1.0, 0.0);
        for (int v = 0; v < g_.vertex_count(); ++v) acc += u[static_cast<std::size_t>(v)];
        for (auto [a, b] : g_.edges())
            acc += u[static_cast<std::size_t>(a)] * u[static_cast<std::size_t>(b)];
        return acc;
    }

    BivariatePoly specialize(VertexSet b) const {
        BivariatePoly p = BivariatePoly::one();
        for (int v = 0; v < g_.vertex_count(); ++v) p.add_term(1, b.contains(v) ? 1 : 0, 1);
        for (auto [u, v] : g_.edges())
            p.add_term(2, (b.contains(u) ? 1 : 0) + (b.contains(v) ? 1 : 0), 1);
        return p;
    }

    const Graph& graph() const { return g_; }

private:
    explicit MultiaffineVertexPoly(Graph g) : g_(std::move(g)) {}
    Graph g_;
};

}  // namespace bclique
