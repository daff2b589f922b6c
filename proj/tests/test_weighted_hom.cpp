#include "bclique/graphs.hpp"
#include "bclique/weighted_hom.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace bclique;

namespace {

Homomorphism c6_to_k2() {
    return Homomorphism{graphs::cycle(6), graphs::complete(2), {0, 1, 0, 1, 0, 1}};
}

Homomorphism identity_hom(const Graph& g) {
    std::vector<int> map(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) map[static_cast<std::size_t>(v)] = v;
    return Homomorphism{g, g, std::move(map)};
}

// Random surjective homomorphism: G is built fiber-by-fiber over a random H,
// with edges only between fibers of adjacent images.
Homomorphism random_surjection(std::uint64_t& state) {
    int nh = static_cast<int>(detail::rand_range(state, 1, 4));
    Graph h(nh);
    for (int u = 0; u < nh; ++u)
        for (int v = u + 1; v < nh; ++v)
            if (detail::rand_range(state, 0, 99) < 50) h.add_edge(u, v);
    std::vector<int> map;
    for (int u = 0; u < nh; ++u) {
        int fiber = static_cast<int>(detail::rand_range(state, 1, 3));
        for (int k = 0; k < fiber; ++k) map.push_back(u);
    }
    Graph g(static_cast<int>(map.size()));
    for (std::size_t a = 0; a < map.size(); ++a)
        for (std::size_t b = a + 1; b < map.size(); ++b)
            if (map[a] != map[b] && h.adjacent(map[a], map[b]) &&
                detail::rand_range(state, 0, 99) < 60)
                g.add_edge(static_cast<int>(a), static_cast<int>(b));
    return Homomorphism{std::move(g), std::move(h), std::move(map)};
}

}  // namespace

TEST_CASE("weight monotonicity checker") {
    Graph g = graphs::complete(3);
    VertexSet b = VertexSet::of({0, 1});
    WeightFunction w1 = WeightFunction::ones(b);

    CheckReport same = check_weight_monotonicity(g, b, w1, w1);
    CHECK(same.verdict == Verdict::Holds);

    // single vertex, w1 = 1, w2 = 2: the stated regime x <= 0, y >= 1 is refuted
    // at x = -1/2, y = 2 where 0 <= -1 fails
    Graph one(1);
    VertexSet bone = VertexSet::of({0});
    WeightFunction v1 = WeightFunction::ones(bone);
    WeightFunction v2;
    v2.values[0] = 2;
    CheckReport probe = check_weight_monotonicity(one, bone, v1, v2);
    REQUIRE(probe.verdict == Verdict::Violated);
    bool found_witness = false, found_companion = false;
    for (const Json& pt : probe.witness.at("stated_regime"))
        if (pt.at("x") == "-1/2" && pt.at("y") == "2") {
            found_witness = true;
            CHECK(pt.at("lhs") == "0");
            CHECK(pt.at("rhs") == "-1");
            CHECK(pt.at("holds") == false);
        }
    for (const Json& pt : probe.witness.at("companion_x_nonneg"))
        if (pt.at("x") == "1/2" && pt.at("y") == "2") {
            found_companion = true;
            CHECK(pt.at("lhs") == "2");
            CHECK(pt.at("rhs") == "3");
            CHECK(pt.at("holds") == true);
        }
    CHECK(found_witness);
    CHECK(found_companion);
    CHECK(probe.witness.at("companion_verdict") == "holds");

    WeightFunction bigger;
    bigger.values[0] = 3;
    bigger.values[1] = 1;
    CHECK(check_weight_monotonicity(g, b, bigger, w1).verdict == Verdict::NotApplicable);
}

TEST_CASE("weighted root monotonicity checker") {
    std::vector<Rat> ygrid = grid_ge_one();
    Graph k2 = graphs::complete(2);
    VertexSet b = VertexSet::full(2);
    WeightFunction w1 = WeightFunction::ones(b);
    WeightFunction w2;
    w2.values[0] = 2;
    w2.values[1] = 2;

    CHECK(check_weighted_root_monotonicity(k2, b, w1, w1, ygrid).verdict == Verdict::Holds);
    CheckReport rep = check_weighted_root_monotonicity(k2, b, w1, w2, ygrid);
    CHECK((rep.verdict == Verdict::Holds || rep.verdict == Verdict::Violated));
}

TEST_CASE("homomorphism validation") {
    CHECK(validate_homomorphism(identity_hom(graphs::petersen())).verdict == Verdict::Holds);
    CHECK(validate_homomorphism(c6_to_k2()).verdict == Verdict::Holds);

    Homomorphism collapse{graphs::complete(2), graphs::complete(2), {0, 0}};
    CheckReport bad = validate_homomorphism(collapse);
    CHECK(bad.verdict == Verdict::Violated);
    CHECK(bad.witness.at("reason") == "edge collapsed to a vertex");

    Homomorphism not_onto{graphs::complete(2), graphs::complete(3), {0, 1}};
    CheckReport missing = validate_homomorphism(not_onto);
    CHECK(missing.verdict == Verdict::Violated);
    CHECK(missing.witness.at("reason") == "not surjective");
}

TEST_CASE("induced weights") {
    // injective map: weights carry over unchanged
    Homomorphism id = identity_hom(graphs::cycle(4));
    VertexSet b = VertexSet::of({0, 2});
    auto [bh, wh] = induced_weights(id, b, WeightFunction::ones(b));
    CHECK(bh == b);
    CHECK(wh.values == WeightFunction::ones(b).values);

    // C6 -> K2 with B_G = V: each side collects weight 3
    auto [bh2, wh2] = induced_weights(c6_to_k2(), VertexSet::full(6),
                                      WeightFunction::ones(VertexSet::full(6)));
    CHECK(bh2 == VertexSet::full(2));
    CHECK(wh2.at(0) == 3);
    CHECK(wh2.at(1) == 3);

    auto [bh3, wh3] = induced_weights(c6_to_k2(), VertexSet(), WeightFunction{});
    CHECK(bh3.empty());
    CHECK(wh3.values.empty());

    // total weight is conserved across random surjections
    std::uint64_t state = 55;
    for (int i = 0; i < 120; ++i) {
        Homomorphism f = random_surjection(state);
        int n = f.source.vertex_count();
        VertexSet bg(static_cast<std::uint64_t>(detail::rand_range(state, 0, (1 << n) - 1)));
        WeightFunction wg;
        for (int v : bg.members())
            wg.values[v] = static_cast<int>(detail::rand_range(state, 1, 5));
        auto [bhr, whr] = induced_weights(f, bg, wg);
        CAPTURE(i);
        CHECK(whr.total() == wg.total());
        for (int u : bhr.members()) CHECK(whr.at(u) >= 1);
    }
}

TEST_CASE("clique lift checker") {
    // induced embedding: G = H[S] included into H
    Graph h = graphs::petersen();
    auto [g, map] = induced_subgraph(h, VertexSet::of({0, 1, 2, 5}));
    Homomorphism embed{g, h, map};
    CHECK(check_clique_lift(embed).verdict == Verdict::Holds);

    CHECK(check_clique_lift(identity_hom(graphs::complete(4))).verdict == Verdict::Holds);

    // C6 -> K2: the fiber over a single vertex is an independent 3-set
    CheckReport fold = check_clique_lift(c6_to_k2());
    REQUIRE(fold.verdict == Verdict::Violated);
    CHECK(fold.witness.contains("nonadjacent_pair"));
}

TEST_CASE("homomorphism monotonicity checker") {
    Graph c4 = graphs::cycle(4);
    CheckReport id = check_hom_monotonicity(identity_hom(c4), VertexSet::of({0, 1}),
                                            WeightFunction::ones(VertexSet::of({0, 1})));
    CHECK(id.verdict == Verdict::Holds);

    // folding two disjoint copies of K2 onto one: C(H) <= C(H)^2 pointwise at x >= 0
    Graph two_k2(4);
    two_k2.add_edge(0, 1);
    two_k2.add_edge(2, 3);
    Homomorphism fold{two_k2, graphs::complete(2), {0, 1, 0, 1}};
    CheckReport dbl = check_hom_monotonicity(fold, VertexSet(), WeightFunction{});
    CHECK(dbl.verdict == Verdict::Holds);

    // C6 -> K2 with full B: verdict recorded; any violation witness replays
    CheckReport c6 = check_hom_monotonicity(c6_to_k2(), VertexSet::full(6),
                                            WeightFunction::ones(VertexSet::full(6)));
    CHECK((c6.verdict == Verdict::Holds || c6.verdict == Verdict::Violated));
    if (c6.verdict == Verdict::Violated && c6.witness.contains("x")) {
        Rat x = parse_rational(c6.witness.at("x").get<std::string>());
        Rat y = parse_rational(c6.witness.at("y").get<std::string>());
        auto [bh, wh] = induced_weights(c6_to_k2(), VertexSet::full(6),
                                        WeightFunction::ones(VertexSet::full(6)));
        Rat lhs = weighted_cbpoly(graphs::complete(2), bh, wh).evaluate_exact(x, y);
        Rat rhs = weighted_cbpoly(graphs::cycle(6), VertexSet::full(6),
                                  WeightFunction::ones(VertexSet::full(6)))
                      .evaluate_exact(x, y);
        CHECK(lhs > rhs);  // the witness reproduces the violation exactly
    }

    // invalid map: NotApplicable
    Homomorphism broken{graphs::complete(2), graphs::complete(2), {0, 0}};
    CHECK(check_hom_monotonicity(broken, VertexSet(), WeightFunction{}).verdict ==
          Verdict::NotApplicable);
}

TEST_CASE("homomorphism file parsing") {
    HomFile hf = parse_homomorphism_file(std::string(TEST_DATA_DIR) + "/c6_to_k2.hom");
    CHECK(hf.hom.source.vertex_count() == 6);
    CHECK(hf.hom.target.vertex_count() == 2);
    CHECK(hf.b_g == VertexSet::full(6));
    CHECK(validate_homomorphism(hf.hom).verdict == Verdict::Holds);
}
