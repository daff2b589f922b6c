#include "bclique/analysis.hpp"
#include "bclique/graphs.hpp"

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

}  // namespace

TEST_CASE("zeta pipeline") {
    RootAnalysis a = zeta(graphs::edgeless(3), VertexSet(), Rat(1));
    CHECK(a.zeta_is_exactly(make_rat(-1, 3)));

    RootAnalysis b = zeta(graphs::cycle(4), VertexSet::full(4), Rat(1));
    CHECK(b.zeta_is_exactly(make_rat(-1, 2)));

    RootAnalysis c = zeta(graphs::complete(2), VertexSet(), make_rat(3, 7));
    CHECK(c.zeta_is_exactly(Rat(-1)));

    CHECK_THROWS_AS(zeta(graphs::complete(2), VertexSet(), Rat(-1)), std::invalid_argument);

    // edgeless graphs: zeta(G, B, 1) = -1/n exactly
    for (int n = 1; n <= 8; ++n) {
        RootAnalysis ra = zeta(graphs::edgeless(n), VertexSet::full(n), Rat(1));
        CHECK(ra.zeta_is_exactly(make_rat(-1, n)));
    }
}

TEST_CASE("induced-subgraph monotonicity checker") {
    std::vector<Rat> grid = default_unit_grid();

    // edgeless n=3, remove any vertex: -1/2 <= -1/3
    CheckReport r1 = check_induced_monotonicity(graphs::edgeless(3), VertexSet(), 0, grid);
    CHECK(r1.verdict == Verdict::Holds);

    CheckReport r2 = check_induced_monotonicity(worked_example(), VertexSet::of({1, 2}), 0, grid);
    CHECK(r2.verdict == Verdict::Holds);

    // removing a vertex of B exercises the B-shrinking path
    CheckReport r3 = check_induced_monotonicity(worked_example(), VertexSet::of({1, 2}), 1, grid);
    CHECK(r3.verdict == Verdict::Holds);

    CheckReport r4 = check_induced_monotonicity(Graph(1), VertexSet(), 0, grid);
    CHECK(r4.verdict == Verdict::NotApplicable);
}

TEST_CASE("spanning-subgraph monotonicity checker") {
    std::vector<Rat> grid = default_unit_grid();

    CheckReport r1 = check_spanning_monotonicity(graphs::complete(2), VertexSet(), 0, 1, grid);
    CHECK(r1.verdict == Verdict::Holds);  // -1 <= -1/2

    CheckReport r2 = check_spanning_monotonicity(graphs::complete(3), VertexSet(), 0, 1, grid);
    CHECK(r2.verdict == Verdict::Holds);

    CheckReport r3 = check_spanning_monotonicity(graphs::cycle(4), VertexSet::full(4), 0, 1, grid);
    CHECK(r3.verdict == Verdict::Holds);
}

TEST_CASE("B-independence bound checker") {
    // edgeless equality case: alpha = n, zeta = -1/n
    for (int n = 2; n <= 6; ++n) {
        CheckReport rep = check_b_independence_bound(graphs::edgeless(n), VertexSet::full(n));
        CHECK(rep.verdict == Verdict::Holds);
        CHECK(rep.notes.find("equality") != std::string::npos);
    }

    CheckReport k3 = check_b_independence_bound(graphs::complete(3), VertexSet::of({1, 2}));
    CHECK(k3.verdict == Verdict::Holds);

    CheckReport empty = check_b_independence_bound(worked_example(), VertexSet());
    CHECK(empty.verdict == Verdict::Holds);

    // the derivation footnote is recorded on every report
    CHECK(k3.notes.find("1 + a x") != std::string::npos);
}

TEST_CASE("B-girth bound checker") {
    CheckReport c4 = check_b_girth_bound(graphs::cycle(4), VertexSet::full(4));
    CHECK(c4.verdict == Verdict::Holds);  // bound 2 + floor(4) = 6 >= 4
    CHECK(c4.witness.at("bound") == "6");

    CheckReport c5 = check_b_girth_bound(graphs::cycle(5), VertexSet::full(5));
    CHECK(c5.verdict == Verdict::Holds);

    CheckReport acyclic = check_b_girth_bound(worked_example(), VertexSet::of({1, 2}));
    CHECK(acyclic.verdict == Verdict::NotApplicable);

    CheckReport tri = check_b_girth_bound(graphs::complete(3), VertexSet::full(3));
    CHECK(tri.verdict == Verdict::Holds);  // zeta = -1, bound 2 + 2 = 4 >= 3
    CHECK(tri.witness.at("bound") == "4");
}

TEST_CASE("bound checkers on stress shapes") {
    // does the girth floor settle when zeta is irrational: C5 gives
    // 1 + 5x + 5x^2 with root (-5 + sqrt(5))/10, -2/zeta = 20/(5 - sqrt(5))
    CheckReport c5 = check_b_girth_bound(graphs::cycle(5), VertexSet::full(5));
    REQUIRE(c5.verdict == Verdict::Holds);
    CHECK(c5.witness.at("bound") == "9");  // floor(7.23...) + 2

    // complete graphs: zeta(K_n at y=1) = -1, alpha_B = 1
    for (int n = 2; n <= 5; ++n) {
        CheckReport rep = check_b_independence_bound(graphs::complete(n), VertexSet::full(n));
        CHECK(rep.verdict == Verdict::Holds);
    }
}
