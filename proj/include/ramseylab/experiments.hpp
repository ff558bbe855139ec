#pragma once

#include "ramseylab/graph.hpp"
#include "ramseylab/oracle.hpp"
#include "ramseylab/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ramsey {

std::uint64_t splitmix64(std::uint64_t x);

// Stream seed derived from a master seed; streams are independent of
// evaluation order, so trials parallelise without shared state.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

// G(n,p) via a counter-based generator keyed by (seed, edge index): each of
// the C(n,2) pairs is included independently with probability p.
Graph gnp(int n, double p, std::uint64_t seed);

// Per-component excess e - 2v over the triangle-connected components (the
// component maximum equals the maximum over all triangle-connected
// subgraphs). In strict mode an offender is a component with excess >= 0,
// otherwise > 0.
struct ScanResult {
    bool has_components = false;
    int max_excess = 0;  // meaningful only when has_components
    int max_v = 0, max_e = 0, max_r = 0;
    std::optional<std::vector<int>> offender;  // edge ids
};
ScanResult scan_triangle_density(const Graph& g, bool strict = true);

enum class TrialMode { scan, colour, appear };
enum class TrialStatus { success, failure, offender, indeterminate };

struct TrialConfig {
    int n = 0;
    double c = 1.0;
    Rational exponent;  // p = c * n^(-exponent)
    int trials = 0;
    std::uint64_t seed = 0;
    std::string pattern_name;
    Graph pattern;
    TrialMode mode = TrialMode::scan;
    int k = 3;
    int jobs = 1;
    SearchBudget budget{};

    double p() const;
};

struct TrialRow {
    int index;
    TrialStatus status;
    int edges;
    int components;
    int max_v, max_e, max_r;  // largest-excess component, zeros when none
    double ms;
};

struct WilsonInterval {
    double lo, hi;
};
WilsonInterval wilson(int successes, int total, double z = 1.959964);

struct TrialReport {
    TrialConfig config;
    std::vector<TrialRow> rows;
    int successes = 0, failures = 0, offenders = 0, indeterminate = 0;
    double success_fraction = 0.0;  // successes / (trials - indeterminate)
    WilsonInterval ci{0.0, 0.0};
    int max_component_v = 0, max_component_e = 0, max_component_r = 0;
    double total_ms = 0.0;
};

// Runs cfg.trials independent seeded trials of the configured mode:
//   scan   - success iff no triangle component has e >= 2v;
//   colour - triangle-mode colouring for a triangle pattern (offending
//            components are certificates), otherwise the reduction
//            algorithms, oracle-checked; budget trips are indeterminate;
//   appear - success iff the pattern occurs in the sample.
TrialReport run_experiment(const TrialConfig& cfg);

struct AppearanceEstimate {
    double p;       // the edge probability used
    double p_hat;
    WilsonInterval ci;
    int successes;
    int trials;
};

// Containment frequency of a balanced pattern f at p = c * n^(-1/m(f)).
AppearanceEstimate estimate_appearance(const Graph& f, int n, double c, int trials,
                                       std::uint64_t seed, int jobs = 1);

struct JansonBound {
    double mu;
    double delta;
    double lower_bound;  // 1 - exp(-mu + delta/2)
    std::uint64_t copy_count;
    std::map<int, std::uint64_t> ordered_pairs_by_union;  // union edge count -> ordered pairs
};

// Exact enumeration of the copies of f in K_n and of the overlapping pairs;
// floating point enters only at the final exponential.
JansonBound janson_bound(const Graph& f, int n, double p, std::uint64_t copy_guard = 10'000'000);

}  // namespace ramsey
