#pragma once

#include "bclique/graph.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace bclique {

// Vertex ordering v_1..v_n where each vertex's earlier neighbors form a clique.
struct Peo {
    std::vector<int> order;
};

inline bool verify_peo(const Graph& g, const Peo& peo) {
    const int n = g.vertex_count();
    if (static_cast<int>(peo.order.size()) != n) return false;
    VertexSet seen;
    std::uint64_t used = 0;
    for (int v : peo.order) {
        if (v < 0 || v >= n || (used >> v) & 1ULL) return false;
        used |= 1ULL << v;
        if (!is_clique(g, g.neighbors(v) & seen)) return false;
        seen.add(v);
    }
    return true;
}

// Maximum cardinality search. Under the earlier-neighbors-form-a-clique
// convention the visit order itself is a PEO iff G is chordal (the classical
// later-neighbors elimination order is its reverse).
inline Peo mcs_order(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    std::vector<bool> visited(static_cast<std::size_t>(n), false);
    std::vector<int> visit;
    visit.reserve(static_cast<std::size_t>(n));
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v)
            if (!visited[static_cast<std::size_t>(v)] &&
                (pick < 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(pick)]))
                pick = v;
        visited[static_cast<std::size_t>(pick)] = true;
        visit.push_back(pick);
        for (int w : g.neighbors(pick).members())
            if (!visited[static_cast<std::size_t>(w)]) ++weight[static_cast<std::size_t>(w)];
    }
    return Peo{std::move(visit)};
}

// Verified PEO when G is chordal, nullopt otherwise. The returned ordering always
// passes verify_peo; MCS output is never trusted unverified.
inline std::optional<Peo> is_chordal(const Graph& g) {
    Peo candidate = mcs_order(g);
    if (verify_peo(g, candidate)) return candidate;
    return std::nullopt;
}

}  // namespace bclique
