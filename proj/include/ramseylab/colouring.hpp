#pragma once

#include <array>
#include <vector>

namespace ramsey {

// Edge colouring over a host graph, indexed by edge id. Partial colourings
// mark missing edges with kUncoloured. Judgments about properness and
// rainbow/monochromatic subgraphs live in the oracle module.
struct EdgeColouring {
    static constexpr int kUncoloured = -1;

    std::vector<int> colour;

    EdgeColouring() = default;
    explicit EdgeColouring(int edge_count) : colour(static_cast<size_t>(edge_count), kUncoloured) {}

    bool is_total() const {
        for (int c : colour)
            if (c == kUncoloured) return false;
        return true;
    }
    int max_colour() const {
        int m = -1;
        for (int c : colour)
            if (c > m) m = c;
        return m;
    }
    int colour_count() const;
};

// Record of a reduction-algorithm run: the pair phase, the solo phase and
// the per-block colourings, together with the assembled total colouring.
// Colour sets of the three parts and of distinct blocks are disjoint.
struct ColouringTrace {
    std::vector<std::array<int, 3>> paired_edges;  // (e1, e2, colour)
    std::vector<std::array<int, 2>> solo_edges;    // (e, colour)
    std::vector<std::vector<int>> blocks;          // host edge ids per block
    std::vector<std::vector<std::array<int, 2>>> block_colourings;  // (host edge, colour)
    EdgeColouring combined;
};

}  // namespace ramsey
