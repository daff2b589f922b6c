#pragma once

#include "bclique/graph.hpp"

#include <vector>

namespace bclique {
namespace graphs {

inline Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph edgeless(int n) { return Graph(n); }

inline Graph path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph cycle(int n) {
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

// Center is vertex 0.
inline Graph star(int leaves) {
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

inline Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) g.add_edge(u, v);
    return g;
}

inline Graph circulant(int n, const std::vector<int>& offsets) {
    Graph g(n);
    for (int v = 0; v < n; ++v)
        for (int off : offsets) {
            int w = (v + off) % n;
            if (w != v && !g.adjacent(v, w)) g.add_edge(v, w);
        }
    return g;
}

// Outer 5-cycle 0..4, inner pentagram 5..9, spokes v -> v+5.
inline Graph petersen() {
    Graph g(10);
    for (int v = 0; v < 5; ++v) {
        g.add_edge(v, (v + 1) % 5);
        g.add_edge(5 + v, 5 + (v + 2) % 5);
        g.add_edge(v, 5 + v);
    }
    return g;
}

}  // namespace graphs
}  // namespace bclique
