#pragma once

#include "ramseylab/graph.hpp"
#include "ramseylab/rational.hpp"

#include <vector>

namespace ramsey {

// Exact densities. d = e/v; d2 is the 2-density with its degenerate
// conventions: (e-1)/(v-2) when e >= 1 and v >= 3, 1/2 for K2, 0 otherwise.
Rational density_d(const Graph& g);
Rational density_d2(const Graph& g);

struct DensityReport {
    Rational d;
    Rational m;                    // max of d over subgraphs
    std::vector<int> m_witness;    // vertex subset attaining m
    Rational d2;
    Rational m2;                   // max of d2 over subgraphs
    std::vector<int> m2_witness;
};

// Maximises over vertex subsets taking all induced edges (the maximum of
// both d and d2 over subgraphs is attained there; the K2 convention is
// covered by two-vertex subsets). Throws for the empty graph and for
// graphs too large to enumerate (> 24 vertices).
DensityReport density_report(const Graph& g);

bool is_balanced(const Graph& g);
bool is_strictly_balanced(const Graph& g);
// The 2-density variants require v >= 3 and e >= 1; signalled otherwise.
bool is_2_balanced(const Graph& g);
bool is_strictly_2_balanced(const Graph& g);

// Every edge has a vertex-disjoint partner edge. Requires e >= 1.
bool is_spacious(const Graph& g);

// After removing any two edges, two vertex-disjoint edges remain.
// Requires e >= 5.
bool robust_spacious_check(const Graph& g);

struct StructuralFacts {
    int min_degree;
    bool two_connected;
};
StructuralFacts structural_facts(const Graph& g);

// Hypothesis check for the special anti-Ramsey case: strictly 2-balanced g
// with 1 < m2(g) < delta(delta+1)/(2*delta+1), plus the d-regular
// sufficient condition v >= 4d. Preconditions (strictly 2-balanced,
// m2 > 1) are signalled with the failing check named.
struct SpecialCaseGate {
    Rational m2;
    Rational bound;
    bool passes;
    bool regular;
    int degree;              // meaningful when regular
    bool regular_condition;  // v >= 4d, when regular
};
SpecialCaseGate special_case_gate(const Graph& g);

}  // namespace ramsey
