#pragma once

#include "ramseylab/graph.hpp"
#include "ramseylab/rational.hpp"

#include <vector>

namespace ramsey::testing {

// Small-graph corpora, enumerated up to isomorphism.
std::vector<Graph> all_graphs_up_to(int max_n);
std::vector<Graph> connected_graphs(int max_n);
std::vector<Graph> triangle_connected_graphs(int max_n);

// Independent brute-force oracles used to freeze expected values.
long long naive_copy_count(const Graph& pattern, const Graph& host);

struct NaiveDensity {
    Rational m, m2;
};
NaiveDensity naive_density(const Graph& g);  // maximises over all edge subsets

int brute_chromatic_index(const Graph& g);

// Uncanonicalised enumeration over all m^m colourings; intended for hosts
// with at most ~6 edges.
bool naive_decide_cram(const Graph& g, int k, const Graph& pattern);
bool naive_decide_aram(const Graph& g, const Graph& pattern);

// Canonical enumeration without any pruning, applying the oracle judgments
// only at fully coloured leaves; independent of the incremental checks the
// production searcher uses. Feasible up to ~12 edges.
bool leaf_decide(const Graph& g, int k, bool proper, const Graph& pattern);

// Max of e - 2v over all triangle-connected spanning subgraphs, or INT_MIN
// when none exists. Exponential in e(g).
int brute_max_triangle_excess(const Graph& g);

bool is_connected_graph(const Graph& g);

}  // namespace ramsey::testing
