#pragma once

#include "bclique/errors.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bclique {

// Subset of the vertex indices [0, 64) of some graph, as a bitmask.
class VertexSet {
public:
    constexpr VertexSet() = default;
    explicit constexpr VertexSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr VertexSet full(int n) {
        return VertexSet(n >= 64 ? ~0ULL : (1ULL << n) - 1);
    }
    static constexpr VertexSet single(int v) { return VertexSet(1ULL << v); }
    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.add(v);
        return s;
    }

    bool contains(int v) const { return (bits_ >> v) & 1ULL; }
    VertexSet& add(int v) {
        bits_ |= 1ULL << v;
        return *this;
    }
    VertexSet& remove(int v) {
        bits_ &= ~(1ULL << v);
        return *this;
    }

    int size() const { return std::popcount(bits_); }
    bool empty() const { return bits_ == 0; }
    std::uint64_t bits() const { return bits_; }
    int lowest() const { return std::countr_zero(bits_); }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
        return out;
    }

    bool is_subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

    friend VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    bool operator==(const VertexSet&) const = default;

private:
    std::uint64_t bits_ = 0;
};

// Immutable-after-construction simple undirected graph on at most 64 vertices.
// Internal indices are 0-based; labels carry the external 1-based names. The
// empty graph (n = 0) is a valid value (it arises from induced subgraphs on
// the empty set) but is rejected by the file parser.
class Graph {
public:
    static constexpr int max_vertices = 64;

    explicit Graph(int n) : Graph(n, default_labels(n)) {}

    Graph(int n, std::vector<int> labels) : n_(n), adj_(), labels_(std::move(labels)) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
        if (n > max_vertices)
            throw std::invalid_argument("graph exceeds the " + std::to_string(max_vertices) +
                                        "-vertex cap");
        if (static_cast<int>(labels_.size()) != n)
            throw std::invalid_argument("label list size mismatch");
        adj_.assign(static_cast<std::size_t>(n), 0);
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("self-loop rejected");
        if (adjacent(u, v)) throw std::invalid_argument("duplicate edge rejected");
        adj_[static_cast<std::size_t>(u)] |= 1ULL << v;
        adj_[static_cast<std::size_t>(v)] |= 1ULL << u;
    }

    int vertex_count() const { return n_; }

    int edge_count() const {
        int total = 0;
        for (auto m : adj_) total += std::popcount(m);
        return total / 2;
    }

    bool adjacent(int u, int v) const { return (adj_[static_cast<std::size_t>(u)] >> v) & 1ULL; }
    VertexSet neighbors(int v) const { return VertexSet(adj_[static_cast<std::size_t>(v)]); }
    int degree(int v) const { return std::popcount(adj_[static_cast<std::size_t>(v)]); }
    VertexSet vertices() const { return VertexSet::full(n_); }

    int label(int v) const { return labels_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& labels() const { return labels_; }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (adjacent(u, v)) out.emplace_back(u, v);
        return out;
    }

    Graph without_edge(int u, int v) const {
        if (!adjacent(u, v)) throw std::invalid_argument("edge not present");
        Graph g = *this;
        g.adj_[static_cast<std::size_t>(u)] &= ~(1ULL << v);
        g.adj_[static_cast<std::size_t>(v)] &= ~(1ULL << u);
        return g;
    }

    bool is_connected() const {
        if (n_ <= 1) return true;
        std::uint64_t seen = 1ULL, frontier = 1ULL;
        while (frontier) {
            std::uint64_t next = 0;
            for (std::uint64_t b = frontier; b; b &= b - 1)
                next |= adj_[static_cast<std::size_t>(std::countr_zero(b))];
            frontier = next & ~seen;
            seen |= next;
        }
        return seen == vertices().bits();
    }

private:
    static std::vector<int> default_labels(int n) {
        std::vector<int> l(static_cast<std::size_t>(std::max(n, 0)));
        for (int i = 0; i < n; ++i) l[static_cast<std::size_t>(i)] = i + 1;
        return l;
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::invalid_argument("vertex index out of range");
    }

    int n_;
    std::vector<std::uint64_t> adj_;
    std::vector<int> labels_;
};

// Induced subgraph on S plus the mapping new index -> old index.
// Labels of the original graph are preserved.
inline std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, VertexSet s) {
    if (!s.is_subset_of(g.vertices())) throw std::invalid_argument("S is not a vertex subset");
    std::vector<int> map = s.members();
    std::vector<int> labels;
    labels.reserve(map.size());
    for (int old : map) labels.push_back(g.label(old));
    Graph h(static_cast<int>(map.size()), std::move(labels));
    for (std::size_t a = 0; a < map.size(); ++a)
        for (std::size_t b = a + 1; b < map.size(); ++b)
            if (g.adjacent(map[a], map[b])) h.add_edge(static_cast<int>(a), static_cast<int>(b));
    return {std::move(h), std::move(map)};
}

// Vertices outside S adjacent to every vertex of S; S must be nonempty.
inline VertexSet common_neighborhood(const Graph& g, VertexSet s) {
    if (s.empty()) throw std::invalid_argument("common neighborhood of empty set");
    std::uint64_t acc = g.vertices().bits();
    for (int v : s.members()) acc &= g.neighbors(v).bits();
    return VertexSet(acc) - s;
}

inline bool is_clique(const Graph& g, VertexSet s) {
    for (int v : s.members())
        if (!(s - VertexSet::single(v)).is_subset_of(g.neighbors(v))) return false;
    return true;
}

namespace detail {

// Max clique size within candidate mask, branch and bound with popcount pruning.
inline void max_clique_rec(const Graph& g, std::uint64_t cand, int rsize, int& best) {
    if (rsize > best) best = rsize;
    while (cand) {
        if (rsize + std::popcount(cand) <= best) return;
        int v = std::countr_zero(cand);
        cand &= cand - 1;
        max_clique_rec(g, cand & g.neighbors(v).bits(), rsize + 1, best);
    }
}

}  // namespace detail

inline int clique_number(const Graph& g) {
    int best = 0;
    detail::max_clique_rec(g, g.vertices().bits(), 0, best);
    return best;
}

inline bool is_Kr_free(const Graph& g, int r) { return clique_number(g) < r; }

inline std::optional<std::array<int, 3>> find_triangle(const Graph& g) {
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v) {
            if (!g.adjacent(u, v)) continue;
            std::uint64_t common = (g.neighbors(u) & g.neighbors(v)).bits();
            common &= v < 63 ? ~((2ULL << v) - 1) : 0ULL;  // w > v avoids duplicates
            if (common) return std::array<int, 3>{u, v, std::countr_zero(common)};
        }
    return std::nullopt;
}

// Largest independent set contained in B (exhaustive; independent sets of G are
// cliques of the complement).
inline int b_independence(const Graph& g, VertexSet b) {
    const int n = g.vertex_count();
    Graph comp(n, g.labels());
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) comp.add_edge(u, v);
    int best = 0;
    detail::max_clique_rec(comp, b.bits(), 0, best);
    return best;
}

// B-restricted extremal parameters: the B-independence number and the B-girth
// (absent when G[B] is acyclic).
struct ExtremalParams {
    int alpha_b = 0;
    std::optional<int> g_b;
};

inline std::optional<int> b_girth(const Graph& g, VertexSet b);

inline ExtremalParams extremal_params(const Graph& g, VertexSet b) {
    ExtremalParams p{b_independence(g, b), b_girth(g, b)};
    if (p.alpha_b > b.size()) throw std::logic_error("alpha_B exceeds |B|");
    if (p.g_b && *p.g_b < 3) throw std::logic_error("B-girth below 3");
    return p;
}

// Girth of G[B]; nullopt when G[B] is acyclic. BFS from every vertex of G[B].
inline std::optional<int> b_girth(const Graph& g, VertexSet b) {
    if (b.size() < 3) return std::nullopt;
    auto [h, map] = induced_subgraph(g, b);
    const int n = h.vertex_count();
    int best = -1;
    std::vector<int> dist(static_cast<std::size_t>(n)), parent(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::vector<int> queue = {s};
        dist[static_cast<std::size_t>(s)] = 0;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            for (int w : h.neighbors(u).members()) {
                if (dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                    parent[static_cast<std::size_t>(w)] = u;
                    queue.push_back(w);
                } else if (w != parent[static_cast<std::size_t>(u)]) {
                    int len = dist[static_cast<std::size_t>(u)] + dist[static_cast<std::size_t>(w)] + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

namespace detail {

// Max number of internally vertex-disjoint u-v paths for non-adjacent u, v
// (unit-capacity vertex-split max flow, BFS augmentation).
inline int menger_flow(const Graph& g, int s, int t) {
    const int n = g.vertex_count();
    // node 2v = v_in, 2v+1 = v_out
    const int nodes = 2 * n;
    std::vector<std::vector<int>> cap(static_cast<std::size_t>(nodes),
                                      std::vector<int>(static_cast<std::size_t>(nodes), 0));
    for (int v = 0; v < n; ++v) cap[static_cast<std::size_t>(2 * v)][static_cast<std::size_t>(2 * v + 1)] = (v == s || v == t) ? n : 1;
    for (auto [u, v] : g.edges()) {
        cap[static_cast<std::size_t>(2 * u + 1)][static_cast<std::size_t>(2 * v)] = n;
        cap[static_cast<std::size_t>(2 * v + 1)][static_cast<std::size_t>(2 * u)] = n;
    }
    const int src = 2 * s + 1, dst = 2 * t;
    int flow = 0;
    for (;;) {
        std::vector<int> prev(static_cast<std::size_t>(nodes), -1);
        std::vector<int> queue = {src};
        prev[static_cast<std::size_t>(src)] = src;
        for (std::size_t qi = 0; qi < queue.size() && prev[static_cast<std::size_t>(dst)] < 0; ++qi) {
            int u = queue[qi];
            for (int w = 0; w < nodes; ++w)
                if (prev[static_cast<std::size_t>(w)] < 0 && cap[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)] > 0) {
                    prev[static_cast<std::size_t>(w)] = u;
                    queue.push_back(w);
                }
        }
        if (prev[static_cast<std::size_t>(dst)] < 0) break;
        for (int w = dst; w != src; w = prev[static_cast<std::size_t>(w)]) {
            int u = prev[static_cast<std::size_t>(w)];
            --cap[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)];
            ++cap[static_cast<std::size_t>(w)][static_cast<std::size_t>(u)];
        }
        ++flow;
    }
    return flow;
}

inline bool is_complete(const Graph& g) {
    return g.edge_count() == g.vertex_count() * (g.vertex_count() - 1) / 2;
}

inline bool removal_disconnects(const Graph& g, std::uint64_t removed) {
    std::uint64_t rest = g.vertices().bits() & ~removed;
    if (std::popcount(rest) < 2) return false;
    std::uint64_t start = rest & ~(rest - 1);
    std::uint64_t seen = start, frontier = start;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t b = frontier; b; b &= b - 1)
            next |= g.neighbors(std::countr_zero(b)).bits();
        next &= rest;
        frontier = next & ~seen;
        seen |= next;
    }
    return seen != rest;
}

}  // namespace detail

// Menger route: min over non-adjacent pairs of the vertex-disjoint path count.
inline int vertex_connectivity_menger(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return 0;
    if (detail::is_complete(g)) return n - 1;
    int best = n - 1;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) best = std::min(best, detail::menger_flow(g, u, v));
    return best;
}

// kappa(G): minimum vertices whose deletion disconnects G or reduces it to one
// vertex; kappa(K_n) = n - 1 by convention. Exhaustive separator search up to
// n = 12, max-flow Menger above.
inline int vertex_connectivity(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return 0;
    if (!g.is_connected()) return 0;
    if (detail::is_complete(g)) return n - 1;
    if (n > 12) return vertex_connectivity_menger(g);
    for (int k = 1; k <= n - 2; ++k) {
        // Gosper's hack over k-subsets of [0, n)
        std::uint64_t sub = (1ULL << k) - 1, limit = 1ULL << n;
        while (sub < limit) {
            if (detail::removal_disconnects(g, sub)) return k;
            std::uint64_t c = sub & (~sub + 1), r = sub + c;
            sub = (((r ^ sub) >> 2) / c) | r;
        }
    }
    return n - 1;
}

}  // namespace bclique
