#pragma once

#include "ramseylab/colouring.hpp"
#include "ramseylab/graph.hpp"

#include <cstdint>
#include <optional>

namespace ramsey {

// Ground-truth judgments. All three require a total colouring.
bool has_monochromatic_star(const Graph& host, const EdgeColouring& c, int k);
bool has_rainbow_copy(const Graph& host, const EdgeColouring& c, const Graph& pattern);
bool is_proper(const Graph& host, const EdgeColouring& c);

// chi(uv) = min(u, v): every colour class is a star and every cycle repeats
// a colour.
EdgeColouring min_label_colouring(const Graph& g);

struct SearchBudget {
    std::uint64_t max_nodes = 50'000'000;
    int max_edges = 14;
};

// Constraints a searched colouring must satisfy: properness (anti-Ramsey
// mode), no monochromatic K_{1,star_k} (star_k > 0), and never a rainbow
// copy of the pattern.
struct ColouringConstraints {
    bool proper = false;
    int star_k = 0;  // 0 disables the star constraint
    const Graph* pattern = nullptr;
};

enum class SearchStatus { witness_found, space_exhausted, budget_exhausted };

struct ColouringSearchResult {
    SearchStatus status;
    EdgeColouring witness;   // valid when witness_found
    std::uint64_t explored;  // search-tree nodes entered
};

// Canonical backtracking over edge colourings in restricted-growth form
// (colour classes ordered by first edge), pruning partial colourings that
// already violate a constraint and fully-coloured rainbow pattern copies.
// jobs > 1 distributes top-level subtrees over a worker pool.
ColouringSearchResult search_colouring(const Graph& host, const ColouringConstraints& constraints,
                                       const SearchBudget& budget = {}, int jobs = 1);

struct Verdict {
    bool arrows;
    std::optional<EdgeColouring> witness;  // present iff arrows == false
    std::uint64_t explored;
};

enum class DecideStatus { decided, budget_exhausted };

struct DecideResult {
    DecideStatus status;
    Verdict verdict;  // valid when decided
};

// Does every edge-colouring of g contain a monochromatic K_{1,k} or a
// rainbow copy of the pattern?
DecideResult decide_cram(const Graph& g, int k, const Graph& pattern,
                         const SearchBudget& budget = {}, int jobs = 1);

// Same question restricted to proper colourings.
DecideResult decide_aram(const Graph& g, const Graph& pattern, const SearchBudget& budget = {},
                         int jobs = 1);

}  // namespace ramsey
