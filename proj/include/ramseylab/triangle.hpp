#pragma once

#include "ramseylab/colouring.hpp"
#include "ramseylab/graph.hpp"
#include "ramseylab/oracle.hpp"

#include <array>
#include <vector>

namespace ramsey {

// Edge sets of the maximal triangle-connected subgraphs: triangles are
// merged when they share an edge; edges in no triangle are excluded.
std::vector<std::vector<int>> triangle_components(const Graph& g);

// No isolated vertices, every edge in a triangle, and the triangles form a
// single tightly-connected family.
bool is_triangle_connected(const Graph& g);

// e - 2v + 3; equals the excess sum of any triangle-start sequence.
// Requires a triangle-connected input.
int r_value(const Graph& t);

enum class StartKind { triangle, k4, k5_minus };

struct TriangleStep {
    int vertex;
    std::array<int, 2> anchor;      // endpoints of the anchor edge
    std::vector<int> added_edges;   // all edges from vertex into the previous stage
};

struct TriangleSequence {
    StartKind start_kind = StartKind::triangle;
    std::vector<int> start_vertices;
    std::vector<int> start_edges;   // edge ids
    std::vector<TriangleStep> steps;
    int ell() const { return static_cast<int>(steps.size()); }
};

// How to schedule irregular steps (those adding >= 3 edges):
//   defer_irregular  - prefer regular steps, push irregular ones late;
//   early_irregular  - place the first irregular step as early as possible,
//                      then each subsequent one as early as possible;
//   avoid_degree4    - avoid irregular steps adding four edges if possible.
// Components up to 14 vertices are scheduled by exhaustive frontier search
// with memoisation; larger ones greedily.
enum class StepPolicy { defer_irregular, early_irregular, avoid_degree4 };

// A valid sequence covering t. With allow_rich_starts the start is an
// induced K5-minus if one exists, else a K4, else a triangle.
TriangleSequence build_sequence(const Graph& t, bool allow_rich_starts,
                                StepPolicy policy = StepPolicy::defer_irregular);

bool validate_sequence(const Graph& t, const TriangleSequence& seq);

// Sum over steps of (edges added - 2).
int sequence_r(const Graph& t, const TriangleSequence& seq);

struct StarColouring {
    EdgeColouring colouring;
    bool used_fallback = false;
    // For the k = 3 procedure: the (step, sub) pair behind each flattened
    // colour id (step * 3 + sub); empty otherwise.
    std::vector<std::array<int, 2>> colour_pairs;
};

// Colouring with no monochromatic K_{1,4} and no rainbow triangle, built
// along a sequence with irregular steps as early as possible. Requires
// triangle-connected t with e <= 2v. Any structural surprise falls back to
// exhaustive search and is flagged; outputs are oracle-checked before
// being returned.
StarColouring colour_k14(const Graph& t,
                         const SearchBudget& fallback_budget = SearchBudget{100'000'000, 32});

// Colouring with no monochromatic K_{1,3} and no rainbow triangle, built
// along a rich-start sequence. Requires triangle-connected t with e < 2v.
StarColouring colour_k13(const Graph& t,
                         const SearchBudget& fallback_budget = SearchBudget{100'000'000, 32});

struct TriangleModeResult {
    bool ok;
    EdgeColouring colouring;                // total when ok
    std::vector<int> offending_component;   // edge ids, when !ok
    int fallback_count = 0;
    int component_count = 0;
};

// Per-component colour_k14 / colour_k13 with disjoint palettes; edges in no
// triangle get unique colours. A component violating the density bound
// (e <= 2v for k = 4, e < 2v for k = 3) is returned as a certificate.
TriangleModeResult colour_graph_triangle_mode(const Graph& g, int k,
                                              const SearchBudget& fallback_budget = SearchBudget{100'000'000, 32},
                                              int jobs = 1);

}  // namespace ramsey
