#include "ramseylab/hblocks.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ramsey {

CopyIndex CopyIndex::build(const Graph& host, const Graph& pattern) {
    CopyIndex index;
    index.copies = enumerate_copies(pattern, host);
    index.copies_of_edge.assign(static_cast<size_t>(host.edge_count()), {});
    for (size_t c = 0; c < index.copies.size(); ++c)
        for (int e : index.copies[c]) index.copies_of_edge[static_cast<size_t>(e)].push_back(static_cast<int>(c));
    return index;
}

bool h_equivalent(int e1, int e2, const CopyIndex& index) {
    auto m = static_cast<int>(index.copies_of_edge.size());
    if (e1 < 0 || e1 >= m || e2 < 0 || e2 >= m)
        throw std::invalid_argument("h_equivalent: unknown edge");
    return index.copies_of_edge[static_cast<size_t>(e1)] == index.copies_of_edge[static_cast<size_t>(e2)];
}

ClosedStatus closed_status(const Graph& g, const Graph& pattern) {
    auto index = CopyIndex::build(g, pattern);
    ClosedStatus status;
    std::vector<bool> closed(static_cast<size_t>(g.edge_count()), false);
    for (int e = 0; e < g.edge_count(); ++e) {
        if (index.copies_of_edge[static_cast<size_t>(e)].size() >= 2) {
            closed[static_cast<size_t>(e)] = true;
            status.closed_edges.push_back(e);
        }
        if (index.copies_of_edge[static_cast<size_t>(e)].empty()) status.uncovered_edges.push_back(e);
    }
    for (size_t c = 0; c < index.copies.size(); ++c) {
        int closed_count = 0;
        for (int e : index.copies[c])
            if (closed[static_cast<size_t>(e)]) ++closed_count;
        if (closed_count < 3) status.open_copies.push_back(static_cast<int>(c));
    }
    std::vector<bool> vertex_covered(static_cast<size_t>(g.vertex_count()), false);
    for (const auto& copy : index.copies)
        for (int e : copy) {
            vertex_covered[static_cast<size_t>(g.edge(e).first)] = true;
            vertex_covered[static_cast<size_t>(g.edge(e).second)] = true;
        }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!vertex_covered[static_cast<size_t>(v)]) status.uncovered_vertices.push_back(v);
    status.is_closed = status.open_copies.empty() && status.uncovered_edges.empty() &&
                       status.uncovered_vertices.empty() && !index.copies.empty();
    return status;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
    }
};

}  // namespace

BlockDecomposition block_decomposition(const Graph& g, const Graph& pattern) {
    auto status = closed_status(g, pattern);
    if (!status.is_closed)
        throw std::invalid_argument("block_decomposition: host is not pattern-closed");
    auto index = CopyIndex::build(g, pattern);

    UnionFind uf(index.copies.size());
    for (const auto& list : index.copies_of_edge)
        for (size_t i = 1; i < list.size(); ++i) uf.unite(list[0], list[i]);

    // Component roots in order of their smallest copy id.
    std::vector<int> block_index(index.copies.size(), -1);
    BlockDecomposition decomp;
    decomp.block_of_copy.assign(index.copies.size(), -1);
    for (size_t c = 0; c < index.copies.size(); ++c) {
        int root = uf.find(static_cast<int>(c));
        if (block_index[static_cast<size_t>(root)] < 0) {
            block_index[static_cast<size_t>(root)] = static_cast<int>(decomp.blocks.size());
            decomp.blocks.emplace_back();
        }
        int b = block_index[static_cast<size_t>(root)];
        decomp.block_of_copy[c] = b;
        auto& edges = decomp.blocks[static_cast<size_t>(b)];
        edges.insert(edges.end(), index.copies[c].begin(), index.copies[c].end());
    }
    for (auto& edges : decomp.blocks) {
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    }
    return decomp;
}

}  // namespace ramsey
