#include "bclique/clique_engine.hpp"
#include "bclique/graphs.hpp"

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace bclique;

namespace {

Graph worked_example() {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(1, 3);
    return g;
}

BivariatePoly from_terms(std::initializer_list<std::tuple<int, int, long>> terms) {
    BivariatePoly p;
    for (auto [i, j, c] : terms) p.add_term(i, j, Int(c));
    return p;
}

Graph random_graph(std::uint64_t& state, int n, int permille) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (detail::rand_range(state, 0, 999) < permille) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("clique enumeration order and counts") {
    auto k3 = enumerate_cliques(graphs::complete(3));
    REQUIRE(k3.size() == 8);
    CHECK(k3[0].empty());
    CHECK(k3[1] == std::vector<int>{0});
    CHECK(k3[2] == std::vector<int>{0, 1});
    CHECK(k3[3] == std::vector<int>{0, 1, 2});
    CHECK(k3[4] == std::vector<int>{0, 2});
    CHECK(k3[5] == std::vector<int>{1});
    CHECK(k3[6] == std::vector<int>{1, 2});
    CHECK(k3[7] == std::vector<int>{2});

    CHECK(enumerate_cliques(worked_example()).size() == 10);
    CHECK(enumerate_cliques(graphs::edgeless(7)).size() == 8);
    CHECK(cbpoly_bruteforce(Graph(0), VertexSet()) == BivariatePoly::one());
    CHECK_THROWS_AS(enumerate_cliques(graphs::complete(10), 100), BudgetError);
}

TEST_CASE("golden polynomial: K3 with B = {2,3}") {
    BivariatePoly expected = from_terms({{0, 0, 1}, {1, 0, 1}, {1, 1, 2}, {2, 1, 2}, {2, 2, 1}, {3, 2, 1}});
    Graph k3 = graphs::complete(3);
    VertexSet b = VertexSet::of({1, 2});
    CHECK(cbpoly_bruteforce(k3, b) == expected);
    CHECK(cbpoly_vertex_recurrence(k3, b) == expected);
    CHECK(cbpoly_edge_recurrence(k3, b) == expected);
    CHECK(cbpoly_peo(k3, b, *is_chordal(k3)) == expected);
}

TEST_CASE("golden polynomial: worked example with B = {v2,v3}") {
    BivariatePoly expected = from_terms({{0, 0, 1}, {1, 0, 2}, {1, 1, 2}, {2, 1, 3}, {2, 2, 1}, {3, 2, 1}});
    Graph g = worked_example();
    VertexSet b = VertexSet::of({1, 2});
    CHECK(cbpoly_bruteforce(g, b) == expected);
    CHECK(cbpoly_vertex_recurrence(g, b) == expected);
    CHECK(cbpoly_edge_recurrence(g, b) == expected);

    Peo order{{0, 1, 2, 3}};
    std::vector<BivariatePoly> steps;
    CHECK(cbpoly_peo(g, b, order, &steps) == expected);
    REQUIRE(steps.size() == 4);
    CHECK(steps[0] == from_terms({{0, 0, 1}, {1, 0, 1}}));
    CHECK(steps[1] == from_terms({{0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {2, 1, 1}}));
    CHECK(steps[2] == from_terms({{0, 0, 1}, {1, 0, 1}, {1, 1, 2}, {2, 1, 1}, {2, 2, 1}}));
    CHECK(steps[3] == expected);
    // the last vertex contributes x (1 + x y)^2 = x + 2 x^2 y + x^3 y^2
    BivariatePoly last = steps[3] + steps[2].shifted(0, 0) * BivariatePoly::monomial(0, 0, -1);
    CHECK(last == from_terms({{1, 0, 1}, {2, 1, 2}, {3, 2, 1}}));

    CHECK(expected.pretty() == "1 + 2 x + 2 x y + 3 x^2 y + x^2 y^2 + x^3 y^2");
}

TEST_CASE("recurrence base cases") {
    Graph one(1);
    CHECK(cbpoly_vertex_recurrence(one, VertexSet::of({0})) ==
          from_terms({{0, 0, 1}, {1, 1, 1}}));
    CHECK(cbpoly_vertex_recurrence(one, VertexSet()) == from_terms({{0, 0, 1}, {1, 0, 1}}));

    Graph k2 = graphs::complete(2);
    CHECK(cbpoly_edge_recurrence(k2, VertexSet::full(2)) ==
          from_terms({{0, 0, 1}, {1, 1, 2}, {2, 2, 1}}));

    CHECK_THROWS_AS(cbpoly_peo(graphs::cycle(4), VertexSet(), Peo{{0, 1, 2, 3}}),
                    std::invalid_argument);
}

TEST_CASE("four-way agreement on all labeled graphs with n <= 5") {
    std::uint64_t state = 1;
    for (int n = 1; n <= 5; ++n) {
        int pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (1ULL << pairs); ++mask) {
            Graph g(n);
            int bit = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v, ++bit)
                    if ((mask >> bit) & 1ULL) g.add_edge(u, v);
            VertexSet b(static_cast<std::uint64_t>(detail::rand_range(state, 0, (1 << n) - 1)));
            BivariatePoly brute = cbpoly_bruteforce(g, b);
            CAPTURE(n, mask, b.bits());
            REQUIRE(cbpoly_vertex_recurrence(g, b) == brute);
            REQUIRE(cbpoly_edge_recurrence(g, b) == brute);
            if (auto peo = is_chordal(g)) REQUIRE(cbpoly_peo(g, b, *peo) == brute);
        }
    }
}

TEST_CASE("strategy agreement on sparse graphs beyond the corpus sizes") {
    std::uint64_t state = 66;
    for (int i = 0; i < 12; ++i) {
        int n = 12 + i % 4;
        Graph g = random_graph(state, n, 250);
        VertexSet b(static_cast<std::uint64_t>(detail::rand_range(state, 0, (1 << n) - 1)));
        BivariatePoly brute = cbpoly_bruteforce(g, b);
        CAPTURE(i, n);
        REQUIRE(cbpoly_vertex_recurrence(g, b) == brute);
        REQUIRE(cbpoly_edge_recurrence(g, b) == brute);
        if (auto peo = is_chordal(g)) REQUIRE(cbpoly_peo(g, b, *peo) == brute);
    }
}

TEST_CASE("specialization identities against the subset-sweep oracle") {
    std::uint64_t state = 2;
    for (int i = 0; i < 60; ++i) {
        int n = 2 + i % 7;
        Graph g = random_graph(state, n, 200 + 100 * (i % 7));
        auto classic = oracles::clique_counts(g);
        BivariatePoly full = cbpoly_bruteforce(g, g.vertices());
        BivariatePoly empty = cbpoly_bruteforce(g, VertexSet());
        CAPTURE(i);
        for (int k = 0; k <= n; ++k) {
            CHECK(full.coeff(k, k) == Int(classic[static_cast<std::size_t>(k)]));
            CHECK(empty.coeff(k, 0) == Int(classic[static_cast<std::size_t>(k)]));
        }
        for (const auto& [key, c] : full.terms()) CHECK(key.first == key.second);
        for (const auto& [key, c] : empty.terms()) CHECK(key.second == 0);

        // diagonal of any C_B equals the clique polynomial of G[B] in xy
        VertexSet b(static_cast<std::uint64_t>(detail::rand_range(state, 0, (1 << n) - 1)));
        BivariatePoly p = cbpoly_bruteforce(g, b);
        std::vector<long long> sub_counts;
        if (b.empty()) {
            sub_counts = {1};
        } else {
            auto [h, map] = induced_subgraph(g, b);
            sub_counts = oracles::clique_counts(h);
        }
        for (int k = 0; k <= b.size(); ++k)
            CHECK(p.coeff(k, k) == Int(sub_counts[static_cast<std::size_t>(k)]));

        // total coefficient mass counts all cliques
        long long total = 0;
        for (long long c : classic) total += c;
        CHECK(p.total_coefficient_sum() == Int(total));
    }
}

TEST_CASE("weighted polynomial") {
    Graph one(1);
    WeightFunction w3;
    w3.values[0] = 3;
    CHECK(weighted_cbpoly(one, VertexSet::of({0}), w3) == from_terms({{0, 0, 1}, {1, 3, 1}}));

    Graph g = worked_example();
    VertexSet b = VertexSet::of({1, 2});
    WeightFunction w;
    w.values[1] = 2;
    w.values[2] = 1;
    BivariatePoly wp = weighted_cbpoly(g, b, w);
    CHECK(wp.coeff(3, 3) == 1);  // triangle {v2,v3,v4} has weight 2 + 1

    std::uint64_t state = 8;
    for (int i = 0; i < 30; ++i) {
        int n = 2 + i % 6;
        Graph r = random_graph(state, n, 400);
        VertexSet rb(static_cast<std::uint64_t>(detail::rand_range(state, 0, (1 << n) - 1)));
        CHECK(weighted_cbpoly(r, rb, WeightFunction::ones(rb)) == cbpoly_bruteforce(r, rb));
    }

    WeightFunction bad;
    bad.values[0] = 0;
    CHECK_THROWS_AS(weighted_cbpoly(one, VertexSet::of({0}), bad), std::invalid_argument);
    WeightFunction wrong_domain;
    wrong_domain.values[0] = 1;
    CHECK_THROWS_AS(weighted_cbpoly(graphs::complete(2), VertexSet::full(2), wrong_domain),
                    std::invalid_argument);
}

TEST_CASE("multiaffine vertex polynomial") {
    Graph edge = graphs::complete(2);
    MultiaffineVertexPoly f = MultiaffineVertexPoly::build(edge);
    std::vector<std::complex<double>> u = {{2.0, 0.0}, {3.0, 0.0}};
    CHECK(std::abs(f.eval(u) - std::complex<double>(1 + 2 + 3 + 6, 0)) < 1e-12);

    Graph p3 = graphs::path(3);
    MultiaffineVertexPoly fp = MultiaffineVertexPoly::build(p3);
    std::vector<std::complex<double>> xs = {{0.5, 0}, {0.5, 0}, {0.5, 0}};
    // 1 + 3x + 2x^2 at x = 1/2
    CHECK(std::abs(fp.eval(xs) - std::complex<double>(1 + 1.5 + 0.5, 0)) < 1e-12);

    // specialization identity on triangle-free graphs
    std::uint64_t state = 21;
    for (int i = 0; i < 40; ++i) {
        int n = 2 + i % 6;
        Graph g = random_graph(state, n, 300);
        if (find_triangle(g)) continue;
        VertexSet b(static_cast<std::uint64_t>(detail::rand_range(state, 0, (1 << n) - 1)));
        CHECK(MultiaffineVertexPoly::build(g).specialize(b) == cbpoly_bruteforce(g, b));
    }
    CHECK(MultiaffineVertexPoly::build(graphs::cycle(4)).specialize(VertexSet::of({0})) ==
          cbpoly_bruteforce(graphs::cycle(4), VertexSet::of({0})));

    CHECK_THROWS_WITH(MultiaffineVertexPoly::build(graphs::complete(3)),
                      Catch::Matchers::ContainsSubstring("triangle"));
}
