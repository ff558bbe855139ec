#include "ramseylab/triangle.hpp"

#include "corpus.hpp"
#include "ramseylab/experiments.hpp"
#include "ramseylab/oracle.hpp"

#include <doctest.h>

using namespace ramsey;

TEST_CASE("triangle components") {
    auto k4 = make_named("K", {4});
    auto comps = triangle_components(k4);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].size() == 6);

    auto bow = triangle_components(make_named("bowtie", {}));
    REQUIRE(bow.size() == 2);
    CHECK(bow[0].size() == 3);
    CHECK(bow[1].size() == 3);

    CHECK(triangle_components(make_named("C", {5})).empty());

    // An edge outside any triangle stays out of every component.
    Graph pendant(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
    auto pcomps = triangle_components(pendant);
    REQUIRE(pcomps.size() == 1);
    CHECK(pcomps[0].size() == 3);
}

TEST_CASE("triangle-connectivity predicate") {
    CHECK(is_triangle_connected(make_named("K", {3})));
    CHECK(is_triangle_connected(make_named("K", {4})));
    CHECK(is_triangle_connected(make_named("K6-minus-triangle", {})));
    CHECK_FALSE(is_triangle_connected(make_named("bowtie", {})));
    CHECK_FALSE(is_triangle_connected(make_named("C", {5})));
    CHECK_FALSE(is_triangle_connected(Graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}})));
}

TEST_CASE("r_value on named graphs") {
    CHECK(r_value(make_named("K", {3})) == 0);
    CHECK(r_value(make_named("K", {4})) == 1);
    CHECK(r_value(make_named("K", {5})) == 3);
    CHECK_THROWS_AS(r_value(make_named("C", {5})), std::invalid_argument);
}

TEST_CASE("build_sequence basics") {
    auto k3_seq = build_sequence(make_named("K", {3}), false);
    CHECK(k3_seq.start_kind == StartKind::triangle);
    CHECK(k3_seq.ell() == 0);

    auto k4_seq = build_sequence(make_named("K", {4}), false);
    CHECK(k4_seq.start_kind == StartKind::triangle);
    CHECK(k4_seq.ell() == 1);
    CHECK(k4_seq.steps[0].added_edges.size() == 3);
    CHECK(sequence_r(make_named("K", {4}), k4_seq) == 1);
    CHECK(validate_sequence(make_named("K", {4}), k4_seq));

    auto k5m = make_named("K5-minus", {});
    auto rich = build_sequence(k5m, true);
    CHECK(rich.start_kind == StartKind::k5_minus);
    CHECK(rich.ell() == 0);
    CHECK(validate_sequence(k5m, rich));

    auto k4_rich = build_sequence(make_named("K", {4}), true);
    CHECK(k4_rich.start_kind == StartKind::k4);
}

TEST_CASE("sequences over the small corpus validate and reproduce r") {
    for (const auto& t : testing::triangle_connected_graphs(7)) {
        for (auto policy :
             {StepPolicy::defer_irregular, StepPolicy::early_irregular, StepPolicy::avoid_degree4}) {
            auto seq = build_sequence(t, false, policy);
            CHECK(validate_sequence(t, seq));
            CHECK(sequence_r(t, seq) == r_value(t));
        }
        auto rich = build_sequence(t, true, StepPolicy::avoid_degree4);
        CHECK(validate_sequence(t, rich));
    }
}

TEST_CASE("random sequences satisfy the excess identity") {
    auto corpus = testing::triangle_connected_graphs(7);
    REQUIRE(!corpus.empty());
    int done = 0;
    for (std::uint64_t seed = 0; done < 300; ++seed) {
        const auto& t = corpus[splitmix64(seed) % corpus.size()];
        // Random valid order: pick uniformly among addable vertices.
        auto tris = enumerate_copies(make_named("K", {3}), t);
        auto first = tris[splitmix64(seed * 31 + 1) % tris.size()];
        auto sub = subgraph_by_edges(t, first);
        std::vector<bool> in(static_cast<size_t>(t.vertex_count()), false);
        for (int v : sub.vertex_map) in[static_cast<size_t>(v)] = true;
        int r = 0;
        for (int step = 0;; ++step) {
            std::vector<int> cand;
            for (int v = 0; v < t.vertex_count(); ++v) {
                if (in[static_cast<size_t>(v)]) continue;
                int inside = 0;
                bool edge_inside = false;
                for (int w : t.adjacency()[static_cast<size_t>(v)])
                    if (in[static_cast<size_t>(w)]) {
                        ++inside;
                        for (int x : t.adjacency()[static_cast<size_t>(v)])
                            if (x > w && in[static_cast<size_t>(x)] && t.has_edge(w, x)) edge_inside = true;
                    }
                if (inside >= 2 && edge_inside) cand.push_back(v);
            }
            if (cand.empty()) break;
            int v = cand[splitmix64(seed * 1009 + static_cast<std::uint64_t>(step)) % cand.size()];
            int deg = 0;
            for (int w : t.adjacency()[static_cast<size_t>(v)])
                if (in[static_cast<size_t>(w)]) ++deg;
            r += deg - 2;
            in[static_cast<size_t>(v)] = true;
        }
        bool complete = true;
        for (int v = 0; v < t.vertex_count(); ++v)
            if (!in[static_cast<size_t>(v)]) complete = false;
        REQUIRE(complete);
        CHECK(r == t.edge_count() - 2 * t.vertex_count() + 3);
        ++done;
    }
}

TEST_CASE("colour_k14 on named graphs") {
    auto k3 = make_named("K", {3});

    auto k4 = make_named("K", {4});
    auto r4 = colour_k14(k4);
    CHECK_FALSE(has_monochromatic_star(k4, r4.colouring, 4));
    CHECK_FALSE(has_rainbow_copy(k4, r4.colouring, k3));

    auto k5 = make_named("K", {5});
    auto r5 = colour_k14(k5);  // boundary e = 2v
    CHECK_FALSE(has_monochromatic_star(k5, r5.colouring, 4));
    CHECK_FALSE(has_rainbow_copy(k5, r5.colouring, k3));

    CHECK_THROWS_AS(colour_k14(make_named("K", {6})), std::invalid_argument);
    CHECK_THROWS_AS(colour_k14(make_named("bowtie", {})), std::invalid_argument);
}

TEST_CASE("colour_k13 on named graphs") {
    auto k3 = make_named("K", {3});

    auto k4 = make_named("K", {4});
    auto r4 = colour_k13(k4);
    CHECK_FALSE(has_monochromatic_star(k4, r4.colouring, 3));
    CHECK_FALSE(has_rainbow_copy(k4, r4.colouring, k3));
    CHECK_FALSE(r4.used_fallback);
    // K4 start: a 4-cycle in pair colour (0,0), diagonals (0,1) and (0,2).
    std::map<int, int> class_sizes;
    for (int e = 0; e < k4.edge_count(); ++e) ++class_sizes[r4.colouring.colour[static_cast<size_t>(e)]];
    CHECK(class_sizes[0] == 4);
    CHECK(class_sizes[1] == 1);
    CHECK(class_sizes[2] == 1);

    auto k5m = make_named("K5-minus", {});
    auto r5 = colour_k13(k5m);
    CHECK_FALSE(r5.used_fallback);
    CHECK_FALSE(has_monochromatic_star(k5m, r5.colouring, 3));
    CHECK_FALSE(has_rainbow_copy(k5m, r5.colouring, k3));
    std::map<int, int> k5m_sizes;
    for (int e = 0; e < k5m.edge_count(); ++e) ++k5m_sizes[r5.colouring.colour[static_cast<size_t>(e)]];
    CHECK(k5m_sizes[0] == 5);  // the 5-cycle
    CHECK(k5m_sizes[1] == 4);  // everything else

    CHECK_THROWS_AS(colour_k13(make_named("K", {5})), std::invalid_argument);
}

TEST_CASE("constructive colourings pass the oracle over the small corpus") {
    auto k3 = make_named("K", {3});
    int fallbacks = 0, k14_runs = 0, k13_runs = 0;
    for (const auto& t : testing::triangle_connected_graphs(7)) {
        if (t.edge_count() <= 2 * t.vertex_count()) {
            auto out = colour_k14(t);
            CHECK_FALSE(has_monochromatic_star(t, out.colouring, 4));
            CHECK_FALSE(has_rainbow_copy(t, out.colouring, k3));
            fallbacks += out.used_fallback;
            ++k14_runs;
        }
        if (t.edge_count() < 2 * t.vertex_count()) {
            auto out = colour_k13(t);
            CHECK_FALSE(has_monochromatic_star(t, out.colouring, 3));
            CHECK_FALSE(has_rainbow_copy(t, out.colouring, k3));
            fallbacks += out.used_fallback;
            ++k13_runs;
        }
    }
    CHECK(k14_runs > 50);
    CHECK(k13_runs > 30);
    CHECK(fallbacks == 0);
}

TEST_CASE("large components take the greedy scheduling route") {
    // A strip of triangles (vertex i joined to i-1 and i-2) on more than 14
    // vertices, plus one vertex of back-degree three.
    auto k3 = make_named("K", {3});
    std::vector<VertexPair> edges{{0, 1}, {0, 2}, {1, 2}};
    for (int i = 3; i < 17; ++i) {
        edges.push_back({i - 2, i});
        edges.push_back({i - 1, i});
    }
    edges.push_back({0, 17});
    edges.push_back({1, 17});
    edges.push_back({2, 17});
    Graph strip(18, edges);
    REQUIRE(is_triangle_connected(strip));
    REQUIRE(r_value(strip) == 1);

    for (auto policy :
         {StepPolicy::defer_irregular, StepPolicy::early_irregular, StepPolicy::avoid_degree4}) {
        auto seq = build_sequence(strip, false, policy);
        CHECK(validate_sequence(strip, seq));
        CHECK(sequence_r(strip, seq) == 1);
    }

    auto r14 = colour_k14(strip);
    CHECK_FALSE(has_monochromatic_star(strip, r14.colouring, 4));
    CHECK_FALSE(has_rainbow_copy(strip, r14.colouring, k3));

    auto r13 = colour_k13(strip);
    CHECK_FALSE(has_monochromatic_star(strip, r13.colouring, 3));
    CHECK_FALSE(has_rainbow_copy(strip, r13.colouring, k3));
}

TEST_CASE("subgraph excess is monotone within a component") {
    for (const auto& c : testing::triangle_connected_graphs(6)) {
        if (c.edge_count() > 14) continue;
        int component_excess = c.edge_count() - 2 * c.vertex_count();
        CHECK(testing::brute_max_triangle_excess(c) == component_excess);
    }
}

TEST_CASE("colour_graph_triangle_mode") {
    auto k3 = make_named("K", {3});

    // Disjoint union of K4 and a bowtie.
    std::vector<VertexPair> edges;
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) edges.push_back({u, v});
    Graph bowtie = make_named("bowtie", {});
    for (auto [u, v] : bowtie.edges()) edges.push_back({u + 4, v + 4});
    Graph host(9, edges);

    auto run = colour_graph_triangle_mode(host, 3);
    REQUIRE(run.ok);
    CHECK(run.component_count == 3);
    CHECK_FALSE(has_monochromatic_star(host, run.colouring, 3));
    CHECK_FALSE(has_rainbow_copy(host, run.colouring, k3));

    // Triangle-free: every edge gets its own colour.
    auto c6 = make_named("C", {6});
    auto free = colour_graph_triangle_mode(c6, 3);
    REQUIRE(free.ok);
    CHECK(free.colouring.colour_count() == 6);

    // K5 has e = 2v: a certificate for k = 3, fine for k = 4.
    auto k5 = make_named("K", {5});
    auto cert = colour_graph_triangle_mode(k5, 3);
    CHECK_FALSE(cert.ok);
    CHECK(cert.offending_component.size() == 10);
    auto ok4 = colour_graph_triangle_mode(k5, 4);
    CHECK(ok4.ok);

    CHECK_THROWS_AS(colour_graph_triangle_mode(k5, 5), std::invalid_argument);
}
