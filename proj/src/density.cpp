#include "ramseylab/density.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace ramsey {

Rational density_d(const Graph& g) {
    if (g.vertex_count() < 1) throw std::invalid_argument("density_d: empty graph");
    return Rational(g.edge_count(), g.vertex_count());
}

Rational density_d2(const Graph& g) {
    if (g.edge_count() >= 1 && g.vertex_count() >= 3)
        return Rational(g.edge_count() - 1, g.vertex_count() - 2);
    if (g.vertex_count() == 2 && g.edge_count() == 1) return Rational(1, 2);
    return Rational(0);
}

namespace {

constexpr int kSubsetLimit = 24;

std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint32_t> rows(static_cast<size_t>(g.vertex_count()), 0);
    for (const auto& [u, v] : g.edges()) {
        rows[static_cast<size_t>(u)] |= 1u << v;
        rows[static_cast<size_t>(v)] |= 1u << u;
    }
    return rows;
}

int induced_edges(const std::vector<std::uint32_t>& rows, std::uint32_t subset) {
    int total = 0;
    std::uint32_t rest = subset;
    while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        total += std::popcount(rows[static_cast<size_t>(v)] & rest);
    }
    return total;
}

Rational subset_d2(int e, int v) {
    if (e >= 1 && v >= 3) return Rational(e - 1, v - 2);
    if (v == 2 && e == 1) return Rational(1, 2);
    return Rational(0);
}

std::vector<int> subset_vertices(std::uint32_t subset) {
    std::vector<int> out;
    while (subset) {
        out.push_back(std::countr_zero(subset));
        subset &= subset - 1;
    }
    return out;
}

void check_enumerable(const Graph& g, const char* who) {
    if (g.vertex_count() > kSubsetLimit)
        throw std::invalid_argument(std::string(who) + ": graph too large for exact subset enumeration");
}

}  // namespace

DensityReport density_report(const Graph& g) {
    if (g.vertex_count() < 1) throw std::invalid_argument("density_report: empty graph");
    check_enumerable(g, "density_report");
    auto rows = adjacency_masks(g);
    int n = g.vertex_count();

    DensityReport rep;
    rep.d = density_d(g);
    rep.d2 = density_d2(g);
    rep.m = Rational(0);
    rep.m2 = Rational(0);
    std::uint32_t best_m = 1, best_m2 = 1;

    for (std::uint32_t subset = 1; subset < (1u << n); ++subset) {
        int v = std::popcount(subset);
        int e = induced_edges(rows, subset);
        Rational d(e, v);
        if (d > rep.m) { rep.m = d; best_m = subset; }
        Rational d2 = subset_d2(e, v);
        if (d2 > rep.m2) { rep.m2 = d2; best_m2 = subset; }
    }
    rep.m_witness = subset_vertices(best_m);
    rep.m2_witness = subset_vertices(best_m2);
    return rep;
}

bool is_balanced(const Graph& g) {
    auto rep = density_report(g);
    return rep.m == rep.d;
}

bool is_strictly_balanced(const Graph& g) {
    if (g.vertex_count() < 1) throw std::invalid_argument("is_strictly_balanced: empty graph");
    check_enumerable(g, "is_strictly_balanced");
    // Edge-deleted proper subgraphs on the full vertex set always have
    // strictly smaller d, so proper induced subsets decide the question.
    auto rows = adjacency_masks(g);
    int n = g.vertex_count();
    Rational dh = density_d(g);
    std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    for (std::uint32_t subset = 1; subset < (1u << n); ++subset) {
        if (subset == full) continue;
        Rational d(induced_edges(rows, subset), std::popcount(subset));
        if (!(d < dh)) return false;
    }
    return true;
}

namespace {

void check_2density_domain(const Graph& g, const char* who) {
    if (g.vertex_count() < 3 || g.edge_count() < 1)
        throw std::invalid_argument(std::string(who) + ": needs v >= 3 and e >= 1");
}

// Max of d2 over proper subgraphs: proper induced vertex subsets, plus the
// full vertex set with one edge removed (further edge removals only lower
// d2; K2 subgraphs appear as two-vertex subsets).
Rational max_d2_proper(const Graph& g) {
    auto rows = adjacency_masks(g);
    int n = g.vertex_count();
    Rational best(0);
    std::uint32_t full = (1u << n) - 1;
    for (std::uint32_t subset = 1; subset < (1u << n); ++subset) {
        if (subset == full) continue;
        Rational d2 = subset_d2(induced_edges(rows, subset), std::popcount(subset));
        if (d2 > best) best = d2;
    }
    Rational deleted = subset_d2(g.edge_count() - 1, n);
    if (deleted > best) best = deleted;
    return best;
}

}  // namespace

bool is_2_balanced(const Graph& g) {
    check_2density_domain(g, "is_2_balanced");
    check_enumerable(g, "is_2_balanced");
    auto rep = density_report(g);
    return rep.m2 == rep.d2;
}

bool is_strictly_2_balanced(const Graph& g) {
    check_2density_domain(g, "is_strictly_2_balanced");
    check_enumerable(g, "is_strictly_2_balanced");
    return max_d2_proper(g) < density_d2(g);
}

bool is_spacious(const Graph& g) {
    if (g.edge_count() < 1) throw std::invalid_argument("is_spacious: needs an edge");
    for (const auto& [u, v] : g.edges()) {
        bool partner = false;
        for (const auto& [x, y] : g.edges()) {
            if (x != u && x != v && y != u && y != v) { partner = true; break; }
        }
        if (!partner) return false;
    }
    return true;
}

bool robust_spacious_check(const Graph& g) {
    if (g.edge_count() < 5) throw std::invalid_argument("robust_spacious_check: needs e >= 5");
    int m = g.edge_count();
    for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) {
            bool disjoint_pair = false;
            for (int i = 0; i < m && !disjoint_pair; ++i) {
                if (i == a || i == b) continue;
                auto [u, v] = g.edge(i);
                for (int j = i + 1; j < m; ++j) {
                    if (j == a || j == b) continue;
                    auto [x, y] = g.edge(j);
                    if (x != u && x != v && y != u && y != v) { disjoint_pair = true; break; }
                }
            }
            if (!disjoint_pair) return false;
        }
    }
    return true;
}

namespace {

int reachable_count(const Graph& g, int start, int skip) {
    std::vector<bool> seen(static_cast<size_t>(g.vertex_count()), false);
    std::vector<int> stack{start};
    seen[static_cast<size_t>(start)] = true;
    int count = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++count;
        for (int w : g.adjacency()[static_cast<size_t>(v)]) {
            if (w == skip || seen[static_cast<size_t>(w)]) continue;
            seen[static_cast<size_t>(w)] = true;
            stack.push_back(w);
        }
    }
    return count;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return false;
    return reachable_count(g, 0, -1) == g.vertex_count();
}

}  // namespace

StructuralFacts structural_facts(const Graph& g) {
    if (g.vertex_count() < 1) throw std::invalid_argument("structural_facts: empty graph");
    StructuralFacts facts{g.min_degree(), false};
    int n = g.vertex_count();
    if (n >= 3 && is_connected(g)) {
        bool cut = false;
        for (int v = 0; v < n && !cut; ++v) {
            int start = (v == 0) ? 1 : 0;
            if (reachable_count(g, start, v) != n - 1) cut = true;
        }
        facts.two_connected = !cut;
    }
    return facts;
}

SpecialCaseGate special_case_gate(const Graph& g) {
    if (!is_strictly_2_balanced(g))
        throw std::invalid_argument("special_case_gate: graph is not strictly 2-balanced");
    auto rep = density_report(g);
    if (!(rep.m2 > Rational(1)))
        throw std::invalid_argument("special_case_gate: m2 <= 1");
    int delta = g.min_degree();
    SpecialCaseGate gate;
    gate.m2 = rep.m2;
    gate.bound = Rational(static_cast<std::int64_t>(delta) * (delta + 1), 2 * delta + 1);
    gate.passes = gate.m2 < gate.bound;
    gate.regular = g.is_regular();
    gate.degree = delta;
    gate.regular_condition = gate.regular && g.vertex_count() >= 4 * delta;
    return gate;
}

}  // namespace ramsey
