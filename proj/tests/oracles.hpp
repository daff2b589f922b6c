// Independent test oracles. These deliberately avoid the library's own
// algorithms: subset sweeps, per-edge BFS girth, Eigen eigensolvers.
#pragma once

#include "bclique/graph.hpp"
#include "bclique/unipoly.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <complex>
#include <optional>
#include <vector>

namespace oracles {

using bclique::Graph;
using bclique::Rat;
using bclique::UnivariatePoly;
using bclique::VertexSet;

// Clique counts by plain subset sweep.
inline std::vector<long long> clique_counts(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<long long> counts(static_cast<std::size_t>(n) + 1, 0);
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
        VertexSet s{mask};
        if (bclique::is_clique(g, s)) ++counts[static_cast<std::size_t>(s.size())];
    }
    return counts;
}

// Max independent subset of B by subset sweep.
inline int b_independence(const Graph& g, VertexSet b) {
    std::vector<int> mem = b.members();
    int best = 0;
    for (std::uint64_t mask = 0; mask < (1ULL << mem.size()); ++mask) {
        VertexSet s;
        for (std::size_t i = 0; i < mem.size(); ++i)
            if ((mask >> i) & 1ULL) s.add(mem[i]);
        bool indep = true;
        std::vector<int> sm = s.members();
        for (std::size_t a = 0; a < sm.size() && indep; ++a)
            for (std::size_t c = a + 1; c < sm.size(); ++c)
                if (g.adjacent(sm[a], sm[c])) {
                    indep = false;
                    break;
                }
        if (indep) best = std::max(best, s.size());
    }
    return best;
}

// True iff some induced cycle of length >= 4 exists (subset sweep: induced
// subgraph is a single cycle iff connected, 2-regular, |E| = |S|).
inline bool has_long_induced_cycle(const Graph& g) {
    const int n = g.vertex_count();
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
        VertexSet s{mask};
        if (s.size() < 4) continue;
        bool two_regular = true;
        int edges = 0;
        for (int v : s.members()) {
            int deg = (g.neighbors(v) & s).size();
            edges += deg;
            if (deg != 2) {
                two_regular = false;
                break;
            }
        }
        if (!two_regular || edges != 2 * s.size()) continue;
        auto [h, map] = bclique::induced_subgraph(g, s);
        if (h.is_connected()) return true;
    }
    return false;
}

// Girth of G[B] via shortest cycle through each edge: BFS distance between the
// endpoints after removing the edge, plus one.
inline std::optional<int> b_girth(const Graph& g, VertexSet b) {
    if (b.size() < 3) return std::nullopt;
    auto [h, map] = bclique::induced_subgraph(g, b);
    int best = -1;
    for (auto [u, v] : h.edges()) {
        Graph cut = h.without_edge(u, v);
        std::vector<int> dist(static_cast<std::size_t>(cut.vertex_count()), -1);
        std::vector<int> queue = {u};
        dist[static_cast<std::size_t>(u)] = 0;
        for (std::size_t qi = 0; qi < queue.size(); ++qi)
            for (int w : cut.neighbors(queue[qi]).members())
                if (dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(queue[qi])] + 1;
                    queue.push_back(w);
                }
        if (dist[static_cast<std::size_t>(v)] >= 0) {
            int len = dist[static_cast<std::size_t>(v)] + 1;
            if (best < 0 || len < best) best = len;
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

// Roots of a univariate rational polynomial via the companion matrix.
inline std::vector<std::complex<double>> companion_roots(const UnivariatePoly& p) {
    const int d = p.degree();
    if (d < 1) return {};
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(d, d);
    double lead = static_cast<double>(p.leading().convert_to<double>());
    for (int i = 0; i < d; ++i) {
        c(i, d - 1) = -p.coeff(i).convert_to<double>() / lead;
        if (i + 1 < d) c(i + 1, i) = 1.0;
    }
    Eigen::EigenSolver<Eigen::MatrixXd> solver(c);
    std::vector<std::complex<double>> roots;
    for (int i = 0; i < d; ++i) roots.push_back(solver.eigenvalues()(i));
    return roots;
}

// Eigenvalues of the adjacency matrix via Eigen's self-adjoint solver, descending.
inline std::vector<double> adjacency_eigenvalues(const Graph& g) {
    const int n = g.vertex_count();
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (auto [u, v] : g.edges()) a(u, v) = a(v, u) = 1.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
    std::vector<double> evs(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    std::sort(evs.rbegin(), evs.rend());
    return evs;
}

}  // namespace oracles
