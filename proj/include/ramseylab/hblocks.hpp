#pragma once

#include "ramseylab/graph.hpp"

#include <vector>

namespace ramsey {

// All copies of a pattern in a host plus the per-edge membership lists.
struct CopyIndex {
    std::vector<CopySet> copies;
    std::vector<std::vector<int>> copies_of_edge;  // host edge id -> copy ids

    static CopyIndex build(const Graph& host, const Graph& pattern);
};

// Two edges are equivalent when they lie in exactly the same copies.
bool h_equivalent(int e1, int e2, const CopyIndex& index);

struct ClosedStatus {
    std::vector<int> closed_edges;        // edges in >= 2 copies
    std::vector<int> open_copies;         // copy ids with < 3 closed edges
    std::vector<int> uncovered_edges;     // edges in no copy
    std::vector<int> uncovered_vertices;  // vertices in no copy
    bool is_closed;
};
ClosedStatus closed_status(const Graph& g, const Graph& pattern);

// Blocks are the connected components of the copy-overlap graph (copies
// adjacent when they share an edge); each block is the union of its copies'
// edges. Requires the host to be pattern-closed.
struct BlockDecomposition {
    std::vector<std::vector<int>> blocks;  // sorted host edge ids
    std::vector<int> block_of_copy;        // copy id -> block index
};
BlockDecomposition block_decomposition(const Graph& g, const Graph& pattern);

}  // namespace ramsey
