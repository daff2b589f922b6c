#pragma once

#include "bclique/analysis.hpp"
#include "bclique/clique_engine.hpp"
#include "bclique/graph_io.hpp"
#include "bclique/report.hpp"

#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace bclique {

// Default evaluation grids. Magnitudes {0, 1/4, 1/2, 1, 2} signed per regime.
inline std::vector<Rat> grid_nonneg() {
    return {Rat(0), make_rat(1, 4), make_rat(1, 2), Rat(1), Rat(2)};
}
inline std::vector<Rat> grid_nonpos() {
    return {Rat(0), make_rat(-1, 4), make_rat(-1, 2), Rat(-1), Rat(-2)};
}
inline std::vector<Rat> grid_ge_one() { return {Rat(1), Rat(2)}; }

// C_{B,w1}(G; x, y) <= C_{B,w2}(G; x, y) for w1 <= w2 pointwise, on the stated
// regime x <= 0, y >= 1. A companion sweep over x >= 0 is recorded separately
// since the term-by-term argument only preserves the inequality there.
inline CheckReport check_weight_monotonicity(const Graph& g, VertexSet b,
                                             const WeightFunction& w1, const WeightFunction& w2,
                                             std::uint64_t budget = default_clique_budget) {
    CheckReport rep;
    rep.claim = "weight-monotonicity";
    w1.validate_for(b);
    w2.validate_for(b);
    if (!w1.leq(w2)) {
        rep.verdict = Verdict::NotApplicable;
        rep.notes = "w1 <= w2 pointwise fails";
        return rep;
    }
    BivariatePoly p1 = weighted_cbpoly(g, b, w1, budget);
    BivariatePoly p2 = weighted_cbpoly(g, b, w2, budget);

    auto sweep = [&](const std::vector<Rat>& xs, const std::vector<Rat>& ys, Json& points) {
        bool ok = true;
        for (const Rat& x : xs)
            for (const Rat& y : ys) {
                Rat v1 = p1.evaluate_exact(x, y);
                Rat v2 = p2.evaluate_exact(x, y);
                bool holds = v1 <= v2;
                points.push_back(Json{{"x", rat_string(x)},
                                      {"y", rat_string(y)},
                                      {"lhs", rat_string(v1)},
                                      {"rhs", rat_string(v2)},
                                      {"holds", holds}});
                if (!holds) ok = false;
            }
        return ok;
    };

    Json stated = Json::array(), companion = Json::array();
    bool stated_ok = sweep(grid_nonpos(), grid_ge_one(), stated);
    bool companion_ok = sweep(grid_nonneg(), grid_ge_one(), companion);
    rep.witness = Json{{"stated_regime", stated},
                       {"companion_x_nonneg", companion},
                       {"companion_verdict", companion_ok ? "holds" : "violated"},
                       {"B", vertex_set_json(g, b)}};
    rep.verdict = stated_ok ? Verdict::Holds : Verdict::Violated;
    rep.notes = std::string("stated regime x <= 0, y >= 1; companion sweep x >= 0 recorded ") +
                "separately without deciding intent";
    return rep;
}

// zeta_{G,w2}(B; y) >= zeta_{G,w1}(B; y) for w1 <= w2 pointwise, y >= 1.
inline CheckReport check_weighted_root_monotonicity(const Graph& g, VertexSet b,
                                                    const WeightFunction& w1,
                                                    const WeightFunction& w2,
                                                    std::span<const Rat> ygrid,
                                                    std::uint64_t budget = default_clique_budget) {
    CheckReport rep;
    rep.claim = "weighted-root-monotonicity";
    w1.validate_for(b);
    w2.validate_for(b);
    if (!w1.leq(w2)) {
        rep.verdict = Verdict::NotApplicable;
        rep.notes = "w1 <= w2 pointwise fails";
        return rep;
    }
    BivariatePoly p1 = weighted_cbpoly(g, b, w1, budget);
    BivariatePoly p2 = weighted_cbpoly(g, b, w2, budget);
    rep.verdict = Verdict::Holds;
    std::string notes = "regime y >= 1;";
    for (const Rat& y : ygrid) {
        RootAnalysis r1 = RootAnalysis::isolate_negative_roots(p1.section_at_y(y));
        RootAnalysis r2 = RootAnalysis::isolate_negative_roots(p2.section_at_y(y));
        notes += detail::sentinel_note(!r2.has_negative_root(), !r1.has_negative_root());
        ZetaComparison cmp = compare_zeta(r2, r1);
        if (cmp.order == ZetaComparison::Order::LT) {
            rep.verdict = Verdict::Violated;
            rep.witness = Json{{"y", rat_string(y)},
                               {"zeta_w1", root_analysis_json(r1)},
                               {"zeta_w2", root_analysis_json(r2)},
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

// Total map V(G) -> V(H); edge preservation makes it a homomorphism.
struct Homomorphism {
    Graph source;
    Graph target;
    std::vector<int> map;  // map[v in G] = vertex of H
};

// Edge preservation and surjectivity; Violated lists the first offending edge
// or uncovered target vertex.
inline CheckReport validate_homomorphism(const Homomorphism& f) {
    CheckReport rep;
    rep.claim = "homomorphism-validity";
    if (static_cast<int>(f.map.size()) != f.source.vertex_count())
        throw std::invalid_argument("map size must equal |V(G)|");
    for (int img : f.map)
        if (img < 0 || img >= f.target.vertex_count())
            throw std::invalid_argument("map image out of range");
    for (auto [u, v] : f.source.edges()) {
        int fu = f.map[static_cast<std::size_t>(u)], fv = f.map[static_cast<std::size_t>(v)];
        if (fu == fv || !f.target.adjacent(fu, fv)) {
            rep.verdict = Verdict::Violated;
            rep.witness = Json{{"edge", Json::array({f.source.label(u), f.source.label(v)})},
                               {"images", Json::array({f.target.label(fu), f.target.label(fv)})},
                               {"reason", fu == fv ? "edge collapsed to a vertex"
                                                   : "image pair not adjacent"}};
            return rep;
        }
    }
    VertexSet covered;
    for (int img : f.map) covered.add(img);
    if (!(covered == f.target.vertices())) {
        VertexSet missing = f.target.vertices() - covered;
        rep.verdict = Verdict::Violated;
        rep.witness = Json{{"uncovered_target_vertex", f.target.label(missing.lowest())},
                           {"reason", "not surjective"}};
        return rep;
    }
    rep.verdict = Verdict::Holds;
    rep.notes = "edge-preserving and surjective";
    return rep;
}

inline bool is_injective(const Homomorphism& f) {
    VertexSet seen;
    for (int img : f.map) {
        if (seen.contains(img)) return false;
        seen.add(img);
    }
    return true;
}

// B_H = f(B_G) and w_H(u) = sum of w_G over the fiber of u intersected with B_G.
inline std::pair<VertexSet, WeightFunction> induced_weights(const Homomorphism& f, VertexSet b_g,
                                                            const WeightFunction& w_g) {
    w_g.validate_for(b_g);
    VertexSet b_h;
    WeightFunction w_h;
    for (int v : b_g.members()) {
        int u = f.map[static_cast<std::size_t>(v)];
        b_h.add(u);
        w_h.values[u] += w_g.at(v);
    }
    return {b_h, w_h};
}

// Whether the full preimage of every clique of H is a clique in G. Fibers of
// size >= 2 are independent in a simple graph, so non-injective maps fail at
// singleton cliques already.
inline CheckReport check_clique_lift(const Homomorphism& f,
                                     std::uint64_t budget = default_clique_budget) {
    CheckReport rep;
    rep.claim = "clique-preimage-lift";
    std::vector<VertexSet> fibers(static_cast<std::size_t>(f.target.vertex_count()));
    for (int v = 0; v < f.source.vertex_count(); ++v)
        fibers[static_cast<std::size_t>(f.map[static_cast<std::size_t>(v)])].add(v);

    rep.verdict = Verdict::Holds;
    int checked = 0;
    for_each_clique(
        f.target,
        [&](VertexSet kh) {
            if (rep.verdict == Verdict::Violated) return;
            ++checked;
            VertexSet pre;
            for (int u : kh.members()) pre = pre | fibers[static_cast<std::size_t>(u)];
            std::vector<int> mem = pre.members();
            for (std::size_t a = 0; a < mem.size(); ++a)
                for (std::size_t c = a + 1; c < mem.size(); ++c)
                    if (!f.source.adjacent(mem[a], mem[c])) {
                        rep.verdict = Verdict::Violated;
                        rep.witness =
                            Json{{"target_clique", vertex_set_json(f.target, kh)},
                                 {"nonadjacent_pair",
                                  Json::array({f.source.label(mem[a]), f.source.label(mem[c])})}};
                        return;
                    }
        },
        budget);
    if (rep.verdict == Verdict::Holds)
        rep.notes = "checked " + std::to_string(checked) + " target cliques";
    return rep;
}

// C_{B_H,w_H}(H; x, y) <= C_{B_G,w_G}(G; x, y) on the x >= 0, y >= 0 grid, plus
// the zeta comparison zeta_G >= zeta_H per y. Grid points inside (0, 1) probe
// the monomial comparison x^|K_H| <= x^|preimage|, which needs x >= 1.
inline CheckReport check_hom_monotonicity(const Homomorphism& f, VertexSet b_g,
                                          const WeightFunction& w_g,
                                          std::uint64_t budget = default_clique_budget) {
    CheckReport rep;
    rep.claim = "homomorphism-monotonicity";
    CheckReport validity = validate_homomorphism(f);
    if (validity.verdict != Verdict::Holds) {
        rep.verdict = Verdict::NotApplicable;
        rep.notes = "map is not a surjective homomorphism";
        rep.witness = Json{{"validity", validity.to_json()}};
        return rep;
    }
    auto [b_h, w_h] = induced_weights(f, b_g, w_g);
    BivariatePoly pg = weighted_cbpoly(f.source, b_g, w_g, budget);
    BivariatePoly ph = weighted_cbpoly(f.target, b_h, w_h, budget);

    rep.verdict = Verdict::Holds;
    Json points = Json::array();
    for (const Rat& x : grid_nonneg())
        for (const Rat& y : grid_nonneg()) {
            Rat vh = ph.evaluate_exact(x, y);
            Rat vg = pg.evaluate_exact(x, y);
            bool holds = vh <= vg;
            points.push_back(Json{{"x", rat_string(x)},
                                  {"y", rat_string(y)},
                                  {"lhs_target", rat_string(vh)},
                                  {"rhs_source", rat_string(vg)},
                                  {"holds", holds}});
            if (!holds && rep.verdict == Verdict::Holds) {
                rep.verdict = Verdict::Violated;
                rep.witness = Json{{"x", rat_string(x)},
                                   {"y", rat_string(y)},
                                   {"lhs_target", rat_string(vh)},
                                   {"rhs_source", rat_string(vg)}};
            }
        }

    Json zetas = Json::array();
    std::string notes = "regime x >= 0, y >= 0;";
    for (const Rat& y : grid_nonneg()) {
        RootAnalysis zg = RootAnalysis::isolate_negative_roots(pg.section_at_y(y));
        RootAnalysis zh = RootAnalysis::isolate_negative_roots(ph.section_at_y(y));
        ZetaComparison cmp = compare_zeta(zg, zh);
        bool holds = cmp.order != ZetaComparison::Order::LT;  // claim zeta_G >= zeta_H
        zetas.push_back(Json{{"y", rat_string(y)},
                             {"zeta_source", root_analysis_json(zg)},
                             {"zeta_target", root_analysis_json(zh)},
                             {"holds", holds}});
        if (!holds && rep.verdict != Verdict::Violated) {
            rep.verdict = Verdict::Violated;
            rep.witness = Json{{"y", rat_string(y)},
                               {"zeta_source", root_analysis_json(zg)},
                               {"zeta_target", root_analysis_json(zh)},
                               {"reason", "zeta comparison"}};
        }
    }
    Json detail = Json{{"grid", points},
                       {"zeta_grid", zetas},
                       {"induced_B_H", vertex_set_json(f.target, b_h)},
                       {"B_G", vertex_set_json(f.source, b_g)}};
    if (rep.verdict == Verdict::Violated)
        rep.witness["detail"] = detail;
    else
        rep.witness = detail;
    rep.notes = notes;
    return rep;
}

// Homomorphism map file:
//   g <graphfile>     source graph (B and weights read from its b/w lines)
//   h <graphfile>     target graph
//   m <u_G> <v_H>     one line per source vertex, 1-based labels
struct HomFile {
    Homomorphism hom;
    VertexSet b_g;
    std::optional<WeightFunction> w_g;
    std::string g_path, h_path;  // resolved graph file paths
};

inline HomFile parse_homomorphism_file(const std::string& path) {
    namespace fs = std::filesystem;
    std::string text = read_text_file(path);
    fs::path base = fs::path(path).parent_path();

    std::optional<ParsedGraph> g, h;
    std::string g_path, h_path;
    std::vector<std::pair<int, int>> maps;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw.substr(0, raw.find('#'));
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "g" || tag == "h") {
            std::string file;
            if (!(ls >> file)) throw ParseError(lineno, "expected graph file path");
            std::string resolved = (base / file).string();
            ParsedGraph pg = load_graph_file(resolved);
            if (tag == "g") {
                if (g) throw ParseError(lineno, "duplicate 'g' line");
                g = std::move(pg);
                g_path = resolved;
            } else {
                if (h) throw ParseError(lineno, "duplicate 'h' line");
                h = std::move(pg);
                h_path = resolved;
            }
        } else if (tag == "m") {
            long long u, v;
            if (!(ls >> u >> v)) throw ParseError(lineno, "expected 'm <u_in_G> <v_in_H>'");
            maps.emplace_back(static_cast<int>(u), static_cast<int>(v));
        } else {
            throw ParseError(lineno, "unknown directive '" + tag + "'");
        }
    }
    if (!g || !h) throw ParseError(lineno, "need both 'g' and 'h' graph lines");
    std::vector<int> map(static_cast<std::size_t>(g->graph.vertex_count()), -1);
    for (auto [u, v] : maps) {
        if (u < 1 || u > g->graph.vertex_count()) throw ParseError(lineno, "map source out of range");
        if (v < 1 || v > h->graph.vertex_count()) throw ParseError(lineno, "map target out of range");
        if (map[static_cast<std::size_t>(u - 1)] != -1)
            throw ParseError(lineno, "duplicate map line for source vertex");
        map[static_cast<std::size_t>(u - 1)] = v - 1;
    }
    for (std::size_t i = 0; i < map.size(); ++i)
        if (map[i] < 0)
            throw ParseError(lineno, "source vertex " + std::to_string(i + 1) + " unmapped");

    HomFile out{Homomorphism{std::move(g->graph), std::move(h->graph), std::move(map)}, g->b,
                std::nullopt, std::move(g_path), std::move(h_path)};
    if (g->weights) {
        WeightFunction w;
        w.values = *g->weights;
        out.w_g = std::move(w);
    }
    return out;
}

}  // namespace bclique
