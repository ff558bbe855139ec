#include "ramseylab/experiments.hpp"

#include "ramseylab/density.hpp"
#include "ramseylab/parallel.hpp"
#include "ramseylab/rainbow.hpp"
#include "ramseylab/triangle.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

namespace ramsey {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    return splitmix64(master ^ splitmix64(stream + 0x8000000000000001ull));
}

Graph gnp(int n, double p, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("gnp: negative n");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("gnp: p out of [0,1]");
    std::vector<VertexPair> edges;
    if (p > 0.0) {
        std::uint64_t index = 0;
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v, ++index) {
                std::uint64_t h = splitmix64(seed ^ splitmix64(index + 1));
                double uniform = static_cast<double>(h >> 11) * 0x1.0p-53;
                if (uniform < p) edges.push_back({u, v});
            }
        }
    }
    return Graph(n, std::move(edges));
}

ScanResult scan_triangle_density(const Graph& g, bool strict) {
    ScanResult result;
    auto components = triangle_components(g);
    if (components.empty()) return result;
    result.has_components = true;
    int best = std::numeric_limits<int>::min();
    std::vector<int> best_component;
    for (const auto& comp : components) {
        auto sub = subgraph_by_edges(g, comp);
        int excess = sub.graph.edge_count() - 2 * sub.graph.vertex_count();
        if (excess > best) {
            best = excess;
            best_component = comp;
            result.max_v = sub.graph.vertex_count();
            result.max_e = sub.graph.edge_count();
            result.max_r = excess + 3;
        }
    }
    result.max_excess = best;
    if ((strict && best >= 0) || (!strict && best > 0)) result.offender = best_component;
    return result;
}

double TrialConfig::p() const {
    return c * std::pow(static_cast<double>(n), -exponent.as_double());
}

WilsonInterval wilson(int successes, int total, double z) {
    if (total <= 0) return {0.0, 0.0};
    double nf = static_cast<double>(total);
    double phat = static_cast<double>(successes) / nf;
    double z2 = z * z;
    double denom = 1.0 + z2 / nf;
    double centre = phat + z2 / (2.0 * nf);
    double spread = z * std::sqrt(phat * (1.0 - phat) / nf + z2 / (4.0 * nf * nf));
    return {(centre - spread) / denom, (centre + spread) / denom};
}

namespace {

bool pattern_is_triangle(const Graph& pattern) {
    return pattern.vertex_count() == 3 && pattern.edge_count() == 3;
}

TrialRow run_one_trial(const TrialConfig& cfg, int index) {
    auto t0 = std::chrono::steady_clock::now();
    Graph g = gnp(cfg.n, cfg.p(), derive_seed(cfg.seed, static_cast<std::uint64_t>(index)));
    TrialRow row{index, TrialStatus::failure, g.edge_count(), 0, 0, 0, 0, 0.0};

    auto scan = scan_triangle_density(g, cfg.k == 3);
    auto comps = triangle_components(g);
    row.components = static_cast<int>(comps.size());
    if (scan.has_components) {
        row.max_v = scan.max_v;
        row.max_e = scan.max_e;
        row.max_r = scan.max_r;
    }

    switch (cfg.mode) {
        case TrialMode::scan:
            row.status = (scan.has_components && scan.max_excess >= 0) ? TrialStatus::offender
                                                                       : TrialStatus::success;
            break;
        case TrialMode::colour: {
            if (pattern_is_triangle(cfg.pattern)) {
                // Component colouring only ever searches as a fallback; give
                // that search more room than the block gate below.
                SearchBudget fallback{cfg.budget.max_nodes, std::max(cfg.budget.max_edges, 32)};
                auto coloured = colour_graph_triangle_mode(g, cfg.k, fallback, 1);
                if (!coloured.ok) {
                    row.status = TrialStatus::offender;
                    break;
                }
                bool sound = !has_monochromatic_star(g, coloured.colouring, cfg.k) &&
                             !has_rainbow_copy(g, coloured.colouring, cfg.pattern);
                row.status = sound ? TrialStatus::success : TrialStatus::failure;
                break;
            }
            bool indeterminate = false, all_sound = true;
            auto check = [&](const RainbowResult& run, bool aram) {
                if (run.status == RainbowStatus::block_budget_exhausted) {
                    indeterminate = true;
                    return;
                }
                if (run.status == RainbowStatus::block_uncolourable) {
                    all_sound = false;
                    return;
                }
                bool ok = !has_rainbow_copy(g, run.trace.combined, cfg.pattern);
                if (aram) ok = ok && is_proper(g, run.trace.combined);
                else ok = ok && !has_monochromatic_star(g, run.trace.combined, cfg.k);
                all_sound = all_sound && ok;
            };
            check(rainbow_colour_constrained(g, cfg.pattern, cfg.k, cfg.budget, 1), false);
            if (cfg.pattern.edge_count() >= 5 && !indeterminate)
                check(rainbow_colour(g, cfg.pattern, cfg.budget, 1), true);
            row.status = indeterminate ? TrialStatus::indeterminate
                                       : (all_sound ? TrialStatus::success : TrialStatus::failure);
            break;
        }
        case TrialMode::appear:
            row.status = contains_copy(cfg.pattern, g) ? TrialStatus::success : TrialStatus::failure;
            break;
    }
    row.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return row;
}

}  // namespace

TrialReport run_experiment(const TrialConfig& cfg) {
    if (cfg.n < 0 || cfg.trials < 0) throw std::invalid_argument("run_experiment: bad config");
    double p = cfg.p();
    if (cfg.trials > 0 && (p <= 0.0 || p > 1.0))
        throw std::invalid_argument("run_experiment: p = c*n^(-exponent) must be in (0,1]");

    auto t0 = std::chrono::steady_clock::now();
    TrialReport report;
    report.config = cfg;
    report.rows.resize(static_cast<size_t>(cfg.trials));
    parallel_for(cfg.jobs, cfg.trials,
                 [&](std::int64_t i) { report.rows[static_cast<size_t>(i)] = run_one_trial(cfg, static_cast<int>(i)); });

    for (const auto& row : report.rows) {
        switch (row.status) {
            case TrialStatus::success: ++report.successes; break;
            case TrialStatus::failure: ++report.failures; break;
            case TrialStatus::offender: ++report.offenders; break;
            case TrialStatus::indeterminate: ++report.indeterminate; break;
        }
        report.max_component_v = std::max(report.max_component_v, row.max_v);
        report.max_component_e = std::max(report.max_component_e, row.max_e);
        report.max_component_r = std::max(report.max_component_r, row.max_r);
    }
    int decisive = cfg.trials - report.indeterminate;
    report.success_fraction = decisive > 0 ? static_cast<double>(report.successes) / decisive : 0.0;
    report.ci = wilson(report.successes, decisive);
    report.total_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

AppearanceEstimate estimate_appearance(const Graph& f, int n, double c, int trials,
                                       std::uint64_t seed, int jobs) {
    if (trials < 1) throw std::invalid_argument("estimate_appearance: trials >= 1 required");
    auto rep = density_report(f);
    if (rep.m != rep.d)
        throw std::invalid_argument("estimate_appearance: pattern must be balanced (m = d)");
    double p = c * std::pow(static_cast<double>(n), -1.0 / rep.m.as_double());
    if (p > 1.0) p = 1.0;

    std::vector<char> hits(static_cast<size_t>(trials), 0);
    parallel_for(jobs, trials, [&](std::int64_t i) {
        Graph g = gnp(n, p, derive_seed(seed, static_cast<std::uint64_t>(i)));
        hits[static_cast<size_t>(i)] = contains_copy(f, g) ? 1 : 0;
    });
    int successes = 0;
    for (char h : hits) successes += h;
    AppearanceEstimate est;
    est.p = p;
    est.trials = trials;
    est.successes = successes;
    est.p_hat = static_cast<double>(successes) / trials;
    est.ci = wilson(successes, trials);
    return est;
}

JansonBound janson_bound(const Graph& f, int n, double p, std::uint64_t copy_guard) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("janson_bound: p out of [0,1]");
    Graph host = make_named("K", {std::max(n, 1)});
    std::vector<CopySet> copies;
    if (n >= f.vertex_count()) copies = enumerate_copies(f, host);
    if (copies.size() > copy_guard) throw std::invalid_argument("janson_bound: copy guard exceeded");

    JansonBound out;
    out.copy_count = copies.size();
    out.mu = static_cast<double>(copies.size()) * std::pow(p, f.edge_count());

    // Overlapping pairs, grouped by the edge count of the union.
    std::vector<std::vector<int>> copies_of_edge(static_cast<size_t>(host.edge_count()));
    for (size_t i = 0; i < copies.size(); ++i)
        for (int e : copies[i]) copies_of_edge[static_cast<size_t>(e)].push_back(static_cast<int>(i));
    std::set<std::pair<int, int>> seen;
    for (const auto& list : copies_of_edge)
        for (size_t a = 0; a < list.size(); ++a)
            for (size_t b = a + 1; b < list.size(); ++b) {
                auto key = std::minmax(list[a], list[b]);
                if (!seen.insert(key).second) continue;
                const auto& ca = copies[static_cast<size_t>(key.first)];
                const auto& cb = copies[static_cast<size_t>(key.second)];
                std::vector<int> inter;
                std::set_intersection(ca.begin(), ca.end(), cb.begin(), cb.end(),
                                      std::back_inserter(inter));
                int union_size = static_cast<int>(ca.size() + cb.size() - inter.size());
                out.ordered_pairs_by_union[union_size] += 2;  // both orders
            }

    out.delta = 0.0;
    for (const auto& [size, count] : out.ordered_pairs_by_union)
        out.delta += static_cast<double>(count) * std::pow(p, size);
    out.lower_bound = 1.0 - std::exp(-out.mu + out.delta / 2.0);
    return out;
}

}  // namespace ramsey
