#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ramsey {

using VertexPair = std::pair<int, int>;  // always u < v

// Simple undirected graph: vertex count plus a lexicographically sorted edge
// set. Immutable after construction; safe to share across threads.
class Graph {
public:
    Graph() = default;
    // Validates: no self-loops, no duplicates, endpoints < n. Edges are
    // normalised to u < v and sorted.
    Graph(int n, std::vector<VertexPair> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<VertexPair>& edges() const { return edges_; }
    const VertexPair& edge(int id) const { return edges_[static_cast<size_t>(id)]; }

    // Edge id in lexicographic order, or -1 if absent.
    int edge_id(int u, int v) const;
    bool has_edge(int u, int v) const { return edge_id(u, v) >= 0; }

    const std::vector<std::vector<int>>& adjacency() const { return adj_; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }
    std::vector<int> degrees() const;
    int max_degree() const;
    int min_degree() const;
    bool is_regular() const;

private:
    int n_ = 0;
    std::vector<VertexPair> edges_;
    std::vector<std::vector<int>> adj_;
};

// An embedded copy of a pattern inside a host, identified by its (sorted)
// host edge-id set. Two embeddings with the same edge image are one copy.
using CopySet = std::vector<int>;

// Named constructors for the graphs used throughout: complete graphs,
// cycles, stars, paths, K4/K5/K6 minus pieces, books, cycle blow-ups, the
// Petersen graph, the 3-cube and the bowtie.
Graph make_named(const std::string& name, const std::vector<int>& params);

// Shorthand parser: "K5", "C7", "K1,4", "K6-minus-triangle", "K5-minus",
// "K4-minus-edge", "P3", "book:3", "blowup:C8:2", "Petersen", "Q3", "bowtie".
Graph parse_named(const std::string& text);

// Edge-list text format: first line "n <count>", then one "u v" line per edge.
Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

// Every distinct edge set of the host spanning a subgraph isomorphic to the
// pattern; deduplicated, lexicographically sorted. Pattern needs >= 1 edge.
std::vector<CopySet> enumerate_copies(const Graph& pattern, const Graph& host);

// Early-exit variant of the above.
bool contains_copy(const Graph& pattern, const Graph& host);

// Exact isomorphism test (backtracking with degree pruning); intended for
// graphs up to ~20 vertices.
bool is_isomorphic(const Graph& a, const Graph& b);

// Compact subgraph induced by an edge subset: vertices are relabelled
// 0..k-1; vertex_map / edge_map send new ids back to the originals.
struct Subgraph {
    Graph graph;
    std::vector<int> vertex_map;
    std::vector<int> edge_map;
};
Subgraph subgraph_by_edges(const Graph& g, const std::vector<int>& edge_ids);

// Subgraph on the same vertex set keeping only the given edges.
Graph spanning_subgraph(const Graph& g, const std::vector<int>& edge_ids);

}  // namespace ramsey
