#pragma once

#include "bclique/chordal.hpp"
#include "bclique/graph.hpp"
#include "bclique/report.hpp"

#include <string>

namespace bclique {

namespace detail {

template <class F>
void for_each_clique_of_size(const Graph& g, int r, F&& fn) {
    auto rec = [&](auto&& self, std::uint64_t cur, std::uint64_t cand, int depth) -> void {
        if (depth == r) {
            fn(VertexSet(cur));
            return;
        }
        while (cand) {
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            if (std::popcount(cand) + 1 + depth < r) return;
            self(self, cur | (1ULL << v), cand & g.neighbors(v).bits(), depth + 1);
        }
    };
    rec(rec, 0, g.vertices().bits(), 0);
}

}  // namespace detail

// For an r-connected, K_{r+3}-free chordal graph, every r-clique K must have
// (1) N(K) nonempty, (2) G[N(K)] triangle-free, (3) G[N(K)] chordal.
// Hypotheses are verified first; any failure yields NotApplicable.
inline CheckReport check_neighborhood_geometry(const Graph& g, int r) {
    if (r < 1) throw std::invalid_argument("r must be positive");
    CheckReport rep;
    rep.claim = "r-clique-neighborhood-geometry";
    int conn = vertex_connectivity(g);
    int omega = clique_number(g);
    bool chordal = is_chordal(g).has_value();
    std::string convention =
        detail::is_complete(g) ? " (complete graph; kappa(K_n) = n - 1 convention)" : "";
    if (conn < r) {
        rep.verdict = Verdict::NotApplicable;
        rep.notes = "not " + std::to_string(r) + "-connected: kappa = " + std::to_string(conn) +
                    convention;
        return rep;
    }
    if (omega >= r + 3) {
        rep.verdict = Verdict::NotApplicable;
        rep.notes = "not K_" + std::to_string(r + 3) + "-free: omega = " + std::to_string(omega);
        return rep;
    }
    if (!chordal) {
        rep.verdict = Verdict::NotApplicable;
        rep.notes = "not chordal";
        return rep;
    }

    int checked = 0;
    CheckReport out = rep;
    out.verdict = Verdict::Holds;
    detail::for_each_clique_of_size(g, r, [&](VertexSet k) {
        if (out.verdict == Verdict::Violated) return;
        ++checked;
        VertexSet nk = common_neighborhood(g, k);
        if (nk.empty()) {
            out.verdict = Verdict::Violated;
            out.witness = Json{{"clique", vertex_set_json(g, k)}, {"failed", "nonempty-neighborhood"}};
            return;
        }
        auto [h, map] = induced_subgraph(g, nk);
        if (auto tri = find_triangle(h)) {
            out.verdict = Verdict::Violated;
            out.witness = Json{{"clique", vertex_set_json(g, k)},
                               {"failed", "triangle-free-neighborhood"},
                               {"triangle", Json::array({h.label((*tri)[0]), h.label((*tri)[1]),
                                                         h.label((*tri)[2])})}};
            return;
        }
        if (!is_chordal(h)) {
            out.verdict = Verdict::Violated;
            out.witness = Json{{"clique", vertex_set_json(g, k)}, {"failed", "chordal-neighborhood"}};
        }
    });
    out.notes = "checked " + std::to_string(checked) + " " + std::to_string(r) + "-cliques" +
                convention;
    return out;
}

}  // namespace bclique
