#include "ramseylab/hblocks.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace ramsey;

namespace {

Graph two_disjoint_k4() {
    std::vector<VertexPair> edges;
    for (int base : {0, 4})
        for (int u = 0; u < 4; ++u)
            for (int v = u + 1; v < 4; ++v) edges.push_back({base + u, base + v});
    return Graph(8, edges);
}

Graph two_k4_sharing_vertex() {
    std::vector<VertexPair> edges;
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) edges.push_back({u, v});
    int extra[4] = {0, 4, 5, 6};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) edges.push_back({std::min(extra[i], extra[j]), std::max(extra[i], extra[j])});
    return Graph(7, edges);
}

}  // namespace

TEST_CASE("h_equivalent") {
    auto k3 = make_named("K", {3});

    auto idx3 = CopyIndex::build(k3, k3);
    CHECK(h_equivalent(0, 1, idx3));
    CHECK(h_equivalent(1, 2, idx3));

    auto k4me = make_named("K4-minus-edge", {});
    auto idx = CopyIndex::build(k4me, k3);
    // The shared edge 01 lies in two triangles, outer edges in one.
    int shared = k4me.edge_id(0, 1);
    int outer = k4me.edge_id(0, 2);
    CHECK(idx.copies_of_edge[static_cast<size_t>(shared)].size() == 2);
    CHECK(idx.copies_of_edge[static_cast<size_t>(outer)].size() == 1);
    CHECK_FALSE(h_equivalent(shared, outer, idx));

    auto k4 = make_named("K", {4});
    auto idx4 = CopyIndex::build(k4, k3);
    CHECK_FALSE(h_equivalent(k4.edge_id(0, 1), k4.edge_id(2, 3), idx4));
    CHECK_THROWS_AS(h_equivalent(0, 99, idx4), std::invalid_argument);
}

TEST_CASE("closed_status examples") {
    auto k3 = make_named("K", {3});

    auto k4_status = closed_status(make_named("K", {4}), k3);
    CHECK(k4_status.is_closed);
    CHECK(k4_status.closed_edges.size() == 6);

    auto bow_status = closed_status(make_named("bowtie", {}), k3);
    CHECK(bow_status.closed_edges.empty());
    CHECK_FALSE(bow_status.is_closed);

    Graph pendant(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
    auto pend_status = closed_status(pendant, k3);
    CHECK_FALSE(pend_status.is_closed);
    CHECK(pend_status.uncovered_edges.size() == 1);
    CHECK(pend_status.uncovered_vertices == std::vector<int>{3});
}

TEST_CASE("block decomposition examples") {
    auto k3 = make_named("K", {3});

    auto one = block_decomposition(make_named("K", {4}), k3);
    CHECK(one.blocks.size() == 1);
    CHECK(one.blocks[0].size() == 6);

    auto two = block_decomposition(two_disjoint_k4(), k3);
    CHECK(two.blocks.size() == 2);

    auto shared = block_decomposition(two_k4_sharing_vertex(), k3);
    CHECK(shared.blocks.size() == 2);

    CHECK_THROWS_AS(block_decomposition(make_named("bowtie", {}), k3), std::invalid_argument);
}

TEST_CASE("block decomposition invariants") {
    auto k3 = make_named("K", {3});
    std::vector<Graph> hosts = {make_named("K", {4}), make_named("K", {5}),
                                make_named("K6-minus-triangle", {}), two_disjoint_k4(),
                                two_k4_sharing_vertex()};
    for (const auto& host : hosts) {
        auto status = closed_status(host, k3);
        if (!status.is_closed) continue;
        auto decomp = block_decomposition(host, k3);
        auto copies = enumerate_copies(k3, host);

        // Blocks partition exactly the covered edges.
        std::set<int> covered;
        for (const auto& copy : copies) covered.insert(copy.begin(), copy.end());
        std::set<int> in_blocks;
        size_t total = 0;
        for (const auto& block : decomp.blocks) {
            in_blocks.insert(block.begin(), block.end());
            total += block.size();
        }
        CHECK(in_blocks == covered);
        CHECK(total == in_blocks.size());

        // Every copy lies inside exactly one block.
        for (size_t c = 0; c < copies.size(); ++c) {
            int b = decomp.block_of_copy[c];
            for (int e : copies[c]) {
                const auto& block = decomp.blocks[static_cast<size_t>(b)];
                CHECK(std::binary_search(block.begin(), block.end(), e));
            }
        }

        // The straddling property, exhaustively for small blocks: every
        // nonempty proper edge subset is met partially by some copy.
        for (const auto& block : decomp.blocks) {
            if (block.size() > 10) continue;
            unsigned size = static_cast<unsigned>(block.size());
            for (unsigned mask = 1; mask + 1 < (1u << size); ++mask) {
                bool straddled = false;
                for (const auto& copy : copies) {
                    if (!std::binary_search(block.begin(), block.end(), copy.front())) continue;
                    bool inside = false, outside = false;
                    for (int e : copy) {
                        auto pos = std::lower_bound(block.begin(), block.end(), e);
                        if (pos == block.end() || *pos != e) { inside = false; break; }
                        unsigned bit = 1u << (pos - block.begin());
                        ((mask & bit) ? inside : outside) = true;
                    }
                    if (inside && outside) { straddled = true; break; }
                }
                CHECK(straddled);
            }
        }
    }
}
