#pragma once

#include "ramseylab/colouring.hpp"
#include "ramseylab/graph.hpp"
#include "ramseylab/oracle.hpp"

#include <vector>

namespace ramsey {

// Proper edge colouring with at most max_degree + 1 colours, built by the
// fan-recolouring procedure. Deterministic given the edge order.
EdgeColouring vizing_colouring(const Graph& g);

enum class ColourMode { anti_ramsey, constrained };

enum class BlockSearchStatus { found, none_exists, budget_exhausted };

struct BlockSearchResult {
    BlockSearchStatus status;
    EdgeColouring colouring;  // valid when found
    std::uint64_t explored;
};

// Exhaustive canonical search for a block colouring: proper with no rainbow
// pattern copy (anti-Ramsey mode), or no monochromatic K_{1,k} and no
// rainbow pattern copy (constrained mode). none_exists certifies the whole
// space was exhausted; budget exhaustion is a distinct outcome.
BlockSearchResult block_colour_search(const Graph& block, const Graph& pattern, ColourMode mode,
                                      int k, const SearchBudget& budget = SearchBudget{50'000'000, 12},
                                      int jobs = 1);

enum class RainbowStatus { ok, block_budget_exhausted, block_uncolourable };

struct RainbowResult {
    RainbowStatus status;
    ColouringTrace trace;                 // complete when ok
    std::vector<int> certificate_block;   // host edge ids of the failing block otherwise
};

// Reduction algorithm for the anti-Ramsey property: repeatedly colour
// vertex-disjoint equivalent pairs with a shared fresh colour, then
// copy-free edges with fresh colours, then decompose the residue into
// pattern-blocks and colour each by exhaustive search (proper, no rainbow
// pattern) with per-block disjoint palettes. Requires the pattern strictly
// 2-balanced with at least five edges and m2 > 1.
RainbowResult rainbow_colour(const Graph& g, const Graph& pattern,
                             const SearchBudget& block_budget = SearchBudget{50'000'000, 12},
                             int jobs = 1);

// Constrained variant: equivalent pairs need not be disjoint, and blocks
// are coloured with no monochromatic K_{1,k} and no rainbow pattern. For
// pattern C4, blocks go through the degree-2-stripping + Vizing route with
// the top colour merged down, falling back to search. Requires k >= 3 and
// the pattern strictly 2-balanced, m2 > 1, not a triangle.
RainbowResult rainbow_colour_constrained(const Graph& g, const Graph& pattern, int k,
                                         const SearchBudget& block_budget = SearchBudget{50'000'000, 12},
                                         int jobs = 1);

}  // namespace ramsey
