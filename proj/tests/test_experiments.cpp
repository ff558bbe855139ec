#include "ramseylab/experiments.hpp"

#include "corpus.hpp"
#include "ramseylab/oracle.hpp"

#include <doctest.h>

#include <cmath>

using namespace ramsey;

TEST_CASE("gnp endpoints and determinism") {
    CHECK(gnp(100, 0.0, 7).edge_count() == 0);
    CHECK(gnp(30, 1.0, 7).edge_count() == 30 * 29 / 2);
    CHECK(gnp(50, 0.3, 42).edges() == gnp(50, 0.3, 42).edges());
    CHECK(gnp(50, 0.3, 42).edges() != gnp(50, 0.3, 43).edges());
    CHECK_THROWS_AS(gnp(10, 1.5, 0), std::invalid_argument);
}

TEST_CASE("gnp edge counts stay within four standard deviations") {
    const int n = 1000;
    const double p = 0.01;
    const double mean = (n * (n - 1) / 2) * p;
    const double sd = std::sqrt((n * (n - 1) / 2) * p * (1 - p));
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        int edges = gnp(n, p, seed).edge_count();
        CHECK(std::abs(edges - mean) < 4 * sd);
    }
}

TEST_CASE("gnp edge-count distribution passes a chi-square gate") {
    // Binomial(435, 0.2): bin the counts, merge tails to expected >= 5,
    // compare at the 1e-3 level via the Wilson-Hilferty approximation.
    const int n = 30, trials = 10000;
    const double p = 0.2;
    const int pairs = n * (n - 1) / 2;
    std::vector<int> counts(static_cast<size_t>(pairs) + 1, 0);
    for (int t = 0; t < trials; ++t) ++counts[static_cast<size_t>(gnp(n, p, 1000 + t).edge_count())];

    // Binomial pmf by recurrence.
    std::vector<double> pmf(static_cast<size_t>(pairs) + 1);
    double logc = 0.0;
    for (int k = 0; k <= pairs; ++k) {
        if (k > 0) logc += std::log(static_cast<double>(pairs - k + 1) / k);
        pmf[static_cast<size_t>(k)] = std::exp(logc + k * std::log(p) + (pairs - k) * std::log(1 - p));
    }
    std::vector<double> suffix(static_cast<size_t>(pairs) + 2, 0.0);
    for (int k = pairs; k >= 0; --k)
        suffix[static_cast<size_t>(k)] = suffix[static_cast<size_t>(k) + 1] + trials * pmf[static_cast<size_t>(k)];

    double chi2 = 0.0;
    int bins = 0;
    double obs_acc = 0.0, exp_acc = 0.0;
    for (int k = 0; k <= pairs; ++k) {
        obs_acc += counts[static_cast<size_t>(k)];
        exp_acc += trials * pmf[static_cast<size_t>(k)];
        if (exp_acc >= 5.0 && suffix[static_cast<size_t>(k) + 1] >= 5.0) {
            chi2 += (obs_acc - exp_acc) * (obs_acc - exp_acc) / exp_acc;
            ++bins;
            obs_acc = exp_acc = 0.0;
        }
    }
    chi2 += (obs_acc - exp_acc) * (obs_acc - exp_acc) / std::max(exp_acc, 1e-9);
    ++bins;
    int df = bins - 1;
    REQUIRE(df >= 5);
    // Wilson-Hilferty critical value at 1 - 1e-3.
    const double z = 3.0902;
    double crit = df * std::pow(1.0 - 2.0 / (9.0 * df) + z * std::sqrt(2.0 / (9.0 * df)), 3.0);
    CHECK(chi2 < crit);
}

TEST_CASE("scan_triangle_density") {
    // K5 plus a pendant path: the K5 is the offender at excess 0.
    std::vector<VertexPair> edges;
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) edges.push_back({u, v});
    edges.push_back({4, 5});
    edges.push_back({5, 6});
    Graph host(7, edges);
    auto scan = scan_triangle_density(host);
    CHECK(scan.has_components);
    CHECK(scan.max_excess == 0);
    REQUIRE(scan.offender.has_value());
    CHECK(scan.offender->size() == 10);
    CHECK(scan.max_r == 3);

    auto relaxed = scan_triangle_density(host, false);
    CHECK_FALSE(relaxed.offender.has_value());

    auto k4 = scan_triangle_density(make_named("K", {4}));
    CHECK(k4.max_excess == -2);
    CHECK_FALSE(k4.offender.has_value());

    auto none = scan_triangle_density(make_named("C", {8}));
    CHECK_FALSE(none.has_components);
}

TEST_CASE("scan agrees with brute force over small hosts") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        Graph g = gnp(9, 0.35, seed);
        if (g.edge_count() > 16) continue;
        auto scan = scan_triangle_density(g);
        int brute = testing::brute_max_triangle_excess(g);
        if (!scan.has_components) {
            CHECK(brute == std::numeric_limits<int>::min());
        } else {
            CHECK(scan.max_excess == brute);
        }
    }
}

TEST_CASE("run_experiment basics") {
    TrialConfig cfg;
    cfg.n = 60;
    cfg.c = 0.05;
    cfg.exponent = Rational(1, 2);
    cfg.trials = 0;
    cfg.seed = 9;
    cfg.pattern_name = "K3";
    cfg.pattern = make_named("K", {3});
    cfg.mode = TrialMode::scan;
    auto empty = run_experiment(cfg);
    CHECK(empty.rows.empty());
    CHECK(empty.successes == 0);

    cfg.trials = 40;
    auto report = run_experiment(cfg);
    CHECK(report.rows.size() == 40);
    CHECK(report.successes + report.failures + report.offenders + report.indeterminate == 40);
}

TEST_CASE("trial reports are reproducible across worker counts") {
    TrialConfig cfg;
    cfg.n = 120;
    cfg.c = 0.6;
    cfg.exponent = Rational(1, 2);
    cfg.trials = 30;
    cfg.seed = 77;
    cfg.pattern_name = "K3";
    cfg.pattern = make_named("K", {3});
    cfg.mode = TrialMode::colour;
    cfg.k = 3;

    cfg.jobs = 1;
    auto a = run_experiment(cfg);
    cfg.jobs = 4;
    auto b = run_experiment(cfg);
    REQUIRE(a.rows.size() == b.rows.size());
    for (size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(a.rows[i].status == b.rows[i].status);
        CHECK(a.rows[i].edges == b.rows[i].edges);
        CHECK(a.rows[i].components == b.rows[i].components);
        CHECK(a.rows[i].max_e == b.rows[i].max_e);
        CHECK(a.rows[i].max_v == b.rows[i].max_v);
    }
    CHECK(a.successes == b.successes);
    CHECK(a.offenders == b.offenders);
}

TEST_CASE("colour-mode trials produce oracle-passing colourings") {
    TrialConfig cfg;
    cfg.n = 150;
    cfg.c = 0.05;
    cfg.exponent = Rational(1, 2);
    cfg.trials = 25;
    cfg.seed = 5;
    cfg.pattern_name = "K3";
    cfg.pattern = make_named("K", {3});
    cfg.mode = TrialMode::colour;
    cfg.k = 3;
    auto report = run_experiment(cfg);
    CHECK(report.failures == 0);
    CHECK(report.indeterminate == 0);
}

TEST_CASE("estimate_appearance") {
    // K2 appearance matches the closed form 1 - (1-p)^C(n,2).
    auto k2 = Graph(2, {{0, 1}});
    int n = 25;
    double c = 0.05;
    auto est = estimate_appearance(k2, n, c, 4000, 11);
    double p = c * std::pow(n, -2.0);
    double exact = 1.0 - std::pow(1.0 - p, n * (n - 1) / 2.0);
    CHECK(est.p == doctest::Approx(p));
    CHECK(est.ci.lo <= exact);
    CHECK(exact <= est.ci.hi);

    auto single = estimate_appearance(make_named("K", {3}), 40, 1.0, 1, 3);
    CHECK((single.p_hat == 0.0 || single.p_hat == 1.0));
    auto again = estimate_appearance(make_named("K", {3}), 40, 1.0, 1, 3);
    CHECK(single.p_hat == again.p_hat);

    // Unbalanced pattern: K4 plus a pendant edge.
    Graph pendant(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
    CHECK_THROWS_AS(estimate_appearance(pendant, 30, 1.0, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(estimate_appearance(k2, 30, 1.0, 0, 1), std::invalid_argument);
}

TEST_CASE("janson_bound exact counts") {
    auto k3 = make_named("K", {3});

    auto one = janson_bound(k3, 3, 0.37);
    CHECK(one.copy_count == 1);
    CHECK(one.mu == doctest::Approx(std::pow(0.37, 3)).epsilon(1e-12));
    CHECK(one.delta == 0.0);

    auto four = janson_bound(k3, 4, 0.5);
    CHECK(four.copy_count == 4);
    REQUIRE(four.ordered_pairs_by_union.size() == 1);
    CHECK(four.ordered_pairs_by_union.at(5) == 12);
    CHECK(four.mu == doctest::Approx(4 * std::pow(0.5, 3)).epsilon(1e-12));
    CHECK(four.delta == doctest::Approx(12 * std::pow(0.5, 5)).epsilon(1e-12));

    auto zero = janson_bound(k3, 5, 0.0);
    CHECK(zero.lower_bound == 0.0);

    CHECK(janson_bound(k3, 2, 0.5).copy_count == 0);
    CHECK_THROWS_AS(janson_bound(k3, 4, 1.5), std::invalid_argument);
}

TEST_CASE("wilson interval sanity") {
    auto ci = wilson(50, 100);
    CHECK(ci.lo > 0.4);
    CHECK(ci.hi < 0.6);
    CHECK(ci.lo < 0.5);
    CHECK(ci.hi > 0.5);
    auto empty = wilson(0, 0);
    CHECK(empty.lo == 0.0);
    CHECK(empty.hi == 0.0);
}
