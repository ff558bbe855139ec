#include "ramseylab/density.hpp"

#include "corpus.hpp"
#include "ramseylab/experiments.hpp"

#include <doctest.h>

using namespace ramsey;

TEST_CASE("rational arithmetic") {
    CHECK(Rational(4, 8) == Rational(1, 2));
    CHECK(Rational(-4, 8) == Rational(-1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(7, 4) > Rational(12, 7));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(3, 2) * Rational(2, 3) == Rational(1));
    CHECK(Rational(5, 3).str() == "5/3");
    CHECK(Rational::parse("5/3") == Rational(5, 3));
    CHECK(Rational::parse("2") == Rational(2));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("density report on the reference graphs") {
    auto k3 = density_report(make_named("K", {3}));
    CHECK(k3.d2 == Rational(2));
    CHECK(k3.m2 == Rational(2));

    CHECK(density_report(make_named("C", {4})).m2 == Rational(3, 2));
    CHECK(density_report(make_named("K", {5})).m2 == Rational(3));
    CHECK(density_report(make_named("K6-minus-triangle", {})).m == Rational(2));

    for (int k = 3; k <= 7; ++k)
        CHECK(density_report(make_named("K", {k})).m2 == Rational(k + 1, 2));
    for (int k = 4; k <= 9; ++k)
        CHECK(density_report(make_named("C", {k})).m2 == Rational(k - 1, k - 2));

    CHECK_THROWS_AS(density_report(Graph(0, {})), std::invalid_argument);
}

TEST_CASE("density witnesses re-evaluate to the reported values") {
    for (const auto& g :
         {make_named("K6-minus-triangle", {}), make_named("Petersen", {}), make_named("book", {3})}) {
        auto rep = density_report(g);
        CHECK(rep.m >= rep.d);
        CHECK(rep.m2 >= rep.d2);

        std::vector<int> ids;
        for (int e = 0; e < g.edge_count(); ++e) {
            auto [u, v] = g.edge(e);
            bool in_u = std::find(rep.m_witness.begin(), rep.m_witness.end(), u) != rep.m_witness.end();
            bool in_v = std::find(rep.m_witness.begin(), rep.m_witness.end(), v) != rep.m_witness.end();
            if (in_u && in_v) ids.push_back(e);
        }
        CHECK(Rational(static_cast<int>(ids.size()), static_cast<int>(rep.m_witness.size())) == rep.m);
    }
}

TEST_CASE("density report agrees with the edge-subset oracle") {
    int checked = 0;
    for (const auto& g : testing::all_graphs_up_to(6)) {
        if (g.edge_count() < 1 || g.edge_count() > 13) continue;
        auto rep = density_report(g);
        auto naive = testing::naive_density(g);
        CHECK(rep.m == naive.m);
        CHECK(rep.m2 == naive.m2);
        ++checked;
    }
    CHECK(checked > 100);

    // Sampled larger hosts.
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = gnp(8, 0.45, seed);
        if (g.edge_count() < 1 || g.edge_count() > 16) continue;
        auto rep = density_report(g);
        auto naive = testing::naive_density(g);
        CHECK(rep.m == naive.m);
        CHECK(rep.m2 == naive.m2);
    }
}

TEST_CASE("balancedness predicates") {
    CHECK(is_strictly_2_balanced(make_named("K", {4})));
    CHECK_FALSE(is_strictly_2_balanced(make_named("K4-minus-edge", {})));
    CHECK(is_strictly_2_balanced(make_named("C", {5})));
    CHECK(is_strictly_2_balanced(make_named("K", {3})));
    CHECK_THROWS_AS(is_strictly_2_balanced(Graph(2, {{0, 1}})), std::invalid_argument);

    CHECK(is_balanced(make_named("K", {4})));
    CHECK(is_strictly_balanced(make_named("C", {6})));
    // K4 plus a pendant edge is unbalanced.
    Graph pendant(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
    CHECK_FALSE(is_balanced(pendant));
    // K6 minus a triangle is balanced.
    CHECK(is_balanced(make_named("K6-minus-triangle", {})));
}

TEST_CASE("spaciousness") {
    CHECK_FALSE(is_spacious(make_named("K", {3})));
    CHECK(is_spacious(make_named("C", {4})));
    CHECK_FALSE(is_spacious(make_named("star", {3})));
    CHECK_THROWS_AS(is_spacious(Graph(3, {})), std::invalid_argument);
}

TEST_CASE("robust spaciousness") {
    CHECK(robust_spacious_check(make_named("C", {5})));
    // Frozen regression value for K4: removing any two edges leaves a
    // disjoint pair among the remaining four.
    CHECK(robust_spacious_check(make_named("K", {4})));
    CHECK_FALSE(robust_spacious_check(make_named("book", {2})));
    CHECK_THROWS_AS(robust_spacious_check(make_named("K", {3})), std::invalid_argument);
}

TEST_CASE("structural facts") {
    auto c5 = structural_facts(make_named("C", {5}));
    CHECK(c5.min_degree == 2);
    CHECK(c5.two_connected);

    auto star = structural_facts(make_named("star", {3}));
    CHECK(star.min_degree == 1);
    CHECK_FALSE(star.two_connected);

    auto bow = structural_facts(make_named("bowtie", {}));
    CHECK(bow.min_degree == 2);
    CHECK_FALSE(bow.two_connected);
}

TEST_CASE("special case gate") {
    auto pet = special_case_gate(make_named("Petersen", {}));
    CHECK(pet.m2 == Rational(7, 4));
    CHECK(pet.bound == Rational(12, 7));
    CHECK_FALSE(pet.passes);
    CHECK(pet.regular);

    auto blow = special_case_gate(make_named("blowup", {8, 2}));
    CHECK(blow.passes);
    CHECK(blow.regular);
    CHECK(blow.regular_condition);  // 16 vertices >= 4 * 4

    auto k3 = special_case_gate(make_named("K", {3}));
    CHECK_FALSE(k3.passes);  // m2 = 2 is not below 6/5

    CHECK_THROWS_AS(special_case_gate(make_named("K4-minus-edge", {})), std::invalid_argument);
}

TEST_CASE("strictly 2-balanced graphs with m2 > 1 are 2-connected and spacious") {
    int considered = 0;
    for (const auto& g : testing::connected_graphs(7)) {
        if (g.vertex_count() < 3 || g.edge_count() < 1) continue;
        if (!is_strictly_2_balanced(g)) continue;
        auto rep = density_report(g);
        if (!(rep.m2 > Rational(1))) continue;
        ++considered;
        auto facts = structural_facts(g);
        CHECK(facts.min_degree >= 2);
        CHECK(facts.two_connected);
        if (!is_isomorphic(g, make_named("K", {3}))) CHECK(is_spacious(g));
    }
    CHECK(considered > 20);
}

TEST_CASE("m and m2 are monotone under subgraphs") {
    auto host = make_named("K6-minus-triangle", {});
    auto host_rep = density_report(host);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        std::vector<int> keep;
        for (int e = 0; e < host.edge_count(); ++e)
            if (splitmix64(seed * 131 + static_cast<std::uint64_t>(e)) % 100 < 70) keep.push_back(e);
        if (keep.empty()) continue;
        auto sub = subgraph_by_edges(host, keep);
        auto rep = density_report(sub.graph);
        CHECK(rep.m <= host_rep.m);
        CHECK(rep.m2 <= host_rep.m2);
    }
}
