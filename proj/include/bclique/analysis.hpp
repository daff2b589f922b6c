#pragma once

#include "bclique/clique_engine.hpp"
#include "bclique/report.hpp"
#include "bclique/roots.hpp"

#include <span>
#include <string>
#include <vector>

namespace bclique {

// y-grid for the monotonicity and extremal-bound checkers (their claims are
// stated for y in [0, 1]).
inline std::vector<Rat> default_unit_grid() {
    return {Rat(0), make_rat(1, 4), make_rat(1, 2), make_rat(3, 4), Rat(1)};
}

// Largest-negative-root analysis of the y-section of C_B(G; x, y).
inline RootAnalysis zeta(const Graph& g, VertexSet b, const Rat& y,
                         std::uint64_t budget = default_clique_budget) {
    if (y < 0) throw std::invalid_argument("zeta requires y >= 0");
    return RootAnalysis::isolate_negative_roots(cbpoly_bruteforce(g, b, budget).section_at_y(y));
}

namespace detail {

inline std::string sentinel_note(bool lhs_inf, bool rhs_inf) {
    if (lhs_inf && rhs_inf) return " both sides have no negative root (zeta = -infinity);";
    if (lhs_inf || rhs_inf) return " one side has no negative root (zeta = -infinity);";
    return "";
}

}  // namespace detail

// zeta_H(B; y) <= zeta_G(B; y) for H = G - v, per grid point. When v is in B the
// subgraph side uses B minus v. A certified strict reversal is a violation.
inline CheckReport check_induced_monotonicity(const Graph& g, VertexSet b, int v,
                                              std::span<const Rat> ygrid,
                                              std::uint64_t budget = default_clique_budget) {
    CheckReport rep;
    rep.claim = "induced-subgraph-zeta-monotonicity";
    if (g.vertex_count() < 2) {
        rep.verdict = Verdict::NotApplicable;
        rep.notes = "cannot delete the only vertex";
        return rep;
    }
    auto [h, map] = induced_subgraph(g, g.vertices() - VertexSet::single(v));
    std::uint64_t hb = 0;
    for (std::size_t i = 0; i < map.size(); ++i)
        if (b.contains(map[i])) hb |= 1ULL << i;
    BivariatePoly pg = cbpoly_bruteforce(g, b, budget);
    BivariatePoly ph = cbpoly_bruteforce(h, VertexSet(hb), budget);

    rep.verdict = Verdict::Holds;
    std::string notes = "regime y in [0,1];";
    for (const Rat& y : ygrid) {
        RootAnalysis zh = RootAnalysis::isolate_negative_roots(ph.section_at_y(y));
        RootAnalysis zg = RootAnalysis::isolate_negative_roots(pg.section_at_y(y));
        notes += detail::sentinel_note(!zh.has_negative_root(), !zg.has_negative_root());
        ZetaComparison cmp = compare_zeta(zh, zg);
        if (cmp.order == ZetaComparison::Order::GT) {
            rep.verdict = Verdict::Violated;
            rep.witness = Json{{"deleted_vertex", g.label(v)},
                               {"y", rat_string(y)},
                               {"zeta_subgraph", root_analysis_json(zh)},
                               {"zeta_graph", root_analysis_json(zg)},
                               {"B", vertex_set_json(g, b)}};
            return rep;
        }
        if (cmp.budget_exhausted) {
            rep.verdict = Verdict::Unresolved;
            notes += " comparison budget exhausted at y=" + rat_string(y) + ";";
        }
    }
    rep.notes = notes;
    return rep;
}

// zeta_G(B; y) <= zeta_H(B; y) for H = G - uv, per grid point.
inline CheckReport check_spanning_monotonicity(const Graph& g, VertexSet b, int u, int v,
                                               std::span<const Rat> ygrid,
                                               std::uint64_t budget = default_clique_budget) {
    CheckReport rep;
    rep.claim = "spanning-subgraph-zeta-monotonicity";
    Graph h = g.without_edge(u, v);
    BivariatePoly pg = cbpoly_bruteforce(g, b, budget);
    BivariatePoly ph = cbpoly_bruteforce(h, b, budget);

    rep.verdict = Verdict::Holds;
    std::string notes = "regime y in [0,1];";
    for (const Rat& y : ygrid) {
        RootAnalysis zg = RootAnalysis::isolate_negative_roots(pg.section_at_y(y));
        RootAnalysis zh = RootAnalysis::isolate_negative_roots(ph.section_at_y(y));
        notes += detail::sentinel_note(!zg.has_negative_root(), !zh.has_negative_root());
        ZetaComparison cmp = compare_zeta(zg, zh);
        if (cmp.order == ZetaComparison::Order::GT) {
            rep.verdict = Verdict::Violated;
            rep.witness = Json{{"deleted_edge", Json::array({g.label(u), g.label(v)})},
                               {"y", rat_string(y)},
                               {"zeta_graph", root_analysis_json(zg)},
                               {"zeta_spanning", root_analysis_json(zh)},
                               {"B", vertex_set_json(g, b)}};
            return rep;
        }
        if (cmp.budget_exhausted) {
            rep.verdict = Verdict::Unresolved;
            notes += " comparison budget exhausted at y=" + rat_string(y) + ";";
        }
    }
    rep.notes = notes;
    return rep;
}

namespace detail {

// Footer recorded on every independence/girth report: the claimed bound follows
// from the edgeless section 1 + a x (largest negative root -1/a); a derivation
// via (1+x)^a would instead give root -1, which is inconsistent with that bound.
inline constexpr const char* extremal_footer =
    " note: bound derived from the edgeless B-clique section 1 + a x with root -1/a;"
    " a (1+x)^a reading would give root -1 and is inconsistent with the stated bound.";

}  // namespace detail

// alpha_B(G) <= -1 / zeta_G(B; 1), decided by exact interval refinement.
inline CheckReport check_b_independence_bound(const Graph& g, VertexSet b,
                                              std::uint64_t budget = default_clique_budget) {
    CheckReport rep;
    rep.claim = "b-independence-zeta-bound";
    int alpha = b_independence(g, b);
    if (alpha == 0) {
        rep.verdict = Verdict::Holds;
        rep.notes = std::string("alpha_B = 0, bound vacuous; regime y = 1;") +
                    detail::extremal_footer;
        return rep;
    }
    RootAnalysis ra = zeta(g, b, Rat(1), budget);
    if (!ra.has_negative_root()) {
        rep.verdict = Verdict::NotApplicable;
        rep.notes = std::string("zeta_G(B;1) = -infinity (no negative real root);") +
                    detail::extremal_footer;
        return rep;
    }
    Rat threshold = make_rat(-1, alpha);
    int pos = ra.zeta_compare_to(threshold);  // root vs -1/alpha
    rep.witness = Json{{"alpha_B", alpha},
                       {"zeta", root_analysis_json(ra)},
                       {"B", vertex_set_json(g, b)}};
    if (pos >= 0) {
        rep.verdict = Verdict::Holds;
        rep.notes = std::string(pos == 0 ? "holds with equality; regime y = 1;"
                                         : "regime y = 1;") +
                    detail::extremal_footer;
    } else {
        rep.verdict = Verdict::Violated;
        rep.notes = std::string("alpha_B exceeds -1/zeta; regime y = 1;") +
                    detail::extremal_footer;
    }
    return rep;
}

// g_B(G) <= 2 + floor(-2 / zeta_G(B; 1)); the floor is determined exactly.
inline CheckReport check_b_girth_bound(const Graph& g, VertexSet b,
                                       std::uint64_t budget = default_clique_budget) {
    CheckReport rep;
    rep.claim = "b-girth-zeta-bound";
    std::optional<int> girth = b_girth(g, b);
    if (!girth) {
        rep.verdict = Verdict::NotApplicable;
        rep.notes = std::string("G[B] is acyclic, B-girth absent;") + detail::extremal_footer;
        return rep;
    }
    RootAnalysis ra = zeta(g, b, Rat(1), budget);
    if (!ra.has_negative_root()) {
        rep.verdict = Verdict::NotApplicable;
        rep.notes = std::string("zeta_G(B;1) = -infinity (no negative real root);") +
                    detail::extremal_footer;
        return rep;
    }
    // floor(-2/root): refine until the value interval (-2/lo, -2/hi) pins the
    // floor, testing exact hits -2/root = m for each integer candidate.
    Int floor_val;
    for (;;) {
        const RootInterval& iv = ra.zeta();
        Rat vlo = Rat(-2) / iv.lo, vhi = Rat(-2) / iv.hi;  // increasing map on negatives
        Int flo = floor_rat(vlo), fhi = floor_rat(vhi);
        if (flo == fhi) {
            floor_val = flo;
            break;
        }
        bool hit = false;
        for (Int m = flo + 1; m <= fhi; ++m) {
            if (m == 0) continue;
            if (ra.zeta_is_exactly(make_rat(-2, m))) {
                floor_val = m;
                hit = true;
                break;
            }
        }
        if (hit) break;
        ra.refine_zeta();
    }
    Int bound = floor_val + 2;
    rep.witness = Json{{"b_girth", *girth},
                       {"bound", bound.str()},
                       {"zeta", root_analysis_json(ra)},
                       {"B", vertex_set_json(g, b)}};
    if (Int(*girth) <= bound) {
        rep.verdict = Verdict::Holds;
        rep.notes = std::string("regime y = 1;") + detail::extremal_footer;
    } else {
        rep.verdict = Verdict::Violated;
        rep.notes = std::string("B-girth exceeds 2 + floor(-2/zeta); regime y = 1;") +
                    detail::extremal_footer;
    }
    return rep;
}

}  // namespace bclique
