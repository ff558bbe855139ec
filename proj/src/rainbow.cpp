#include "ramseylab/rainbow.hpp"

#include "ramseylab/density.hpp"
#include "ramseylab/hblocks.hpp"
#include "ramseylab/parallel.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

namespace ramsey {

namespace {

// Fan-recolouring state: at(v, c) is the neighbour joined to v by an edge
// of colour c, or -1.
struct FanState {
    const Graph& g;
    int colours;
    std::vector<int> at;
    std::vector<int> col;

    FanState(const Graph& graph, int colour_count)
        : g(graph), colours(colour_count),
          at(static_cast<size_t>(graph.vertex_count()) * static_cast<size_t>(colour_count), -1),
          col(static_cast<size_t>(graph.edge_count()), EdgeColouring::kUncoloured) {}

    int& slot(int v, int c) { return at[static_cast<size_t>(v) * static_cast<size_t>(colours) + static_cast<size_t>(c)]; }

    int free_colour(int v) {
        for (int c = 0; c < colours; ++c)
            if (slot(v, c) < 0) return c;
        throw std::logic_error("vizing: no free colour");
    }

    void set(int u, int v, int c) {
        col[static_cast<size_t>(g.edge_id(u, v))] = c;
        slot(u, c) = v;
        slot(v, c) = u;
    }
    void clear(int u, int v) {
        int e = g.edge_id(u, v);
        int c = col[static_cast<size_t>(e)];
        if (c == EdgeColouring::kUncoloured) return;
        col[static_cast<size_t>(e)] = EdgeColouring::kUncoloured;
        slot(u, c) = -1;
        slot(v, c) = -1;
    }
    int colour_of(int u, int v) const { return col[static_cast<size_t>(g.edge_id(u, v))]; }
};

}  // namespace

EdgeColouring vizing_colouring(const Graph& g) {
    if (g.edge_count() < 1) throw std::invalid_argument("vizing_colouring: needs an edge");
    int colours = g.max_degree() + 1;
    FanState st(g, colours);

    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v0] = g.edge(e);

        // Maximal fan of u starting at v0: each next vertex is joined to u by
        // an edge whose colour is free at the previous fan vertex.
        std::vector<int> fan{v0};
        std::vector<bool> in_fan(static_cast<size_t>(g.vertex_count()), false);
        in_fan[static_cast<size_t>(v0)] = true;
        while (true) {
            int last = fan.back();
            int next = -1;
            for (int c = 0; c < colours && next < 0; ++c) {
                if (st.slot(last, c) >= 0) continue;  // c not free at last
                int w = st.slot(u, c);
                if (w >= 0 && !in_fan[static_cast<size_t>(w)]) next = w;
            }
            if (next < 0) break;
            fan.push_back(next);
            in_fan[static_cast<size_t>(next)] = true;
        }

        int c = st.free_colour(u);
        int d = st.free_colour(fan.back());

        if (c != d) {
            // Invert the maximal cd-path from u (alternating d, c).
            std::vector<int> path_edges;
            int cur = u, expect = d;
            while (st.slot(cur, expect) >= 0) {
                int w = st.slot(cur, expect);
                path_edges.push_back(g.edge_id(cur, w));
                cur = w;
                expect = (expect == d) ? c : d;
            }
            for (int pe : path_edges) {
                auto [x, y] = g.edge(pe);
                st.clear(x, y);
            }
            // Re-apply flipped colours in path order.
            cur = u;
            expect = d;
            for (int pe : path_edges) {
                auto [x, y] = g.edge(pe);
                int other = (x == cur) ? y : x;
                st.set(cur, other, expect == d ? c : d);
                cur = other;
                expect = (expect == d) ? c : d;
            }
        }

        // First fan prefix that is still a fan and whose tip has d free.
        int chosen = -1;
        bool prefix_ok = true;
        for (size_t p = 0; p < fan.size(); ++p) {
            if (p > 0) {
                int ce = st.colour_of(u, fan[p]);
                if (ce == EdgeColouring::kUncoloured || st.slot(fan[p - 1], ce) >= 0) prefix_ok = false;
            }
            if (!prefix_ok) break;
            if (st.slot(fan[p], d) < 0) { chosen = static_cast<int>(p); break; }
        }
        if (chosen < 0) throw std::logic_error("vizing: no rotatable fan prefix");

        // Rotate the prefix and give the tip colour d.
        std::vector<int> shifted;
        for (int i = 0; i < chosen; ++i) shifted.push_back(st.colour_of(u, fan[static_cast<size_t>(i) + 1]));
        for (int i = 0; i <= chosen; ++i) st.clear(u, fan[static_cast<size_t>(i)]);
        for (int i = 0; i < chosen; ++i) st.set(u, fan[static_cast<size_t>(i)], shifted[static_cast<size_t>(i)]);
        st.set(u, fan[static_cast<size_t>(chosen)], d);
    }

    EdgeColouring out(g.edge_count());
    out.colour = st.col;
    return out;
}

BlockSearchResult block_colour_search(const Graph& block, const Graph& pattern, ColourMode mode,
                                      int k, const SearchBudget& budget, int jobs) {
    ColouringConstraints cons;
    cons.pattern = &pattern;
    if (mode == ColourMode::anti_ramsey) {
        cons.proper = true;
    } else {
        if (k < 2) throw std::invalid_argument("block_colour_search: constrained mode needs k >= 2");
        cons.star_k = k;
    }
    auto search = search_colouring(block, cons, budget, jobs);
    BlockSearchResult out{BlockSearchStatus::none_exists, EdgeColouring(block.edge_count()), search.explored};
    switch (search.status) {
        case SearchStatus::witness_found:
            out.status = BlockSearchStatus::found;
            out.colouring = search.witness;
            break;
        case SearchStatus::space_exhausted:
            out.status = BlockSearchStatus::none_exists;
            break;
        case SearchStatus::budget_exhausted:
            out.status = BlockSearchStatus::budget_exhausted;
            break;
    }
    return out;
}

namespace {

// Constructive colouring for C4-pattern blocks: strip degree <= 2 vertices
// (their edges share one fresh colour each), Vizing-colour the 3-regular
// remainder and merge colour 3 into 2. Returns nothing when the block does
// not have the shape the construction needs.
std::optional<EdgeColouring> colour_c4_block(const Graph& b) {
    int n = b.vertex_count();
    std::vector<bool> vertex_alive(static_cast<size_t>(n), true);
    std::vector<bool> edge_alive(static_cast<size_t>(b.edge_count()), true);
    std::vector<int> deg = b.degrees();

    struct Strip { int vertex; std::vector<int> edges; };
    std::vector<Strip> strips;
    while (true) {
        int pick = -1;
        for (int v = 0; v < n; ++v)
            if (vertex_alive[static_cast<size_t>(v)] && deg[static_cast<size_t>(v)] >= 1 &&
                deg[static_cast<size_t>(v)] <= 2) { pick = v; break; }
        if (pick < 0) break;
        Strip s{pick, {}};
        for (int w : b.adjacency()[static_cast<size_t>(pick)]) {
            int e = b.edge_id(pick, w);
            if (!edge_alive[static_cast<size_t>(e)]) continue;
            edge_alive[static_cast<size_t>(e)] = false;
            --deg[static_cast<size_t>(pick)];
            --deg[static_cast<size_t>(w)];
            s.edges.push_back(e);
        }
        vertex_alive[static_cast<size_t>(pick)] = false;
        strips.push_back(std::move(s));
    }

    std::vector<int> remainder;
    for (int e = 0; e < b.edge_count(); ++e)
        if (edge_alive[static_cast<size_t>(e)]) remainder.push_back(e);

    EdgeColouring out(b.edge_count());
    int next_colour = 0;
    if (!remainder.empty()) {
        auto sub = subgraph_by_edges(b, remainder);
        if (sub.graph.min_degree() != 3 || sub.graph.max_degree() != 3) return std::nullopt;
        EdgeColouring proper = vizing_colouring(sub.graph);
        if (proper.max_colour() > 3) return std::nullopt;
        for (int e = 0; e < sub.graph.edge_count(); ++e) {
            int c = proper.colour[static_cast<size_t>(e)];
            if (c == 3) c = 2;  // at most two such edges meet at a vertex
            out.colour[static_cast<size_t>(sub.edge_map[static_cast<size_t>(e)])] = c;
        }
        next_colour = 3;
    }
    for (auto it = strips.rbegin(); it != strips.rend(); ++it) {
        for (int e : it->edges) out.colour[static_cast<size_t>(e)] = next_colour;
        ++next_colour;
    }
    return out;
}

struct ReductionSpec {
    bool disjoint_pairs;  // the anti-Ramsey loop requires vertex-disjoint pairs
    ColourMode mode;
    int k;
    bool c4_route;
};

RainbowResult run_reduction(const Graph& g, const Graph& pattern, const ReductionSpec& spec,
                            const SearchBudget& budget, int jobs) {
    int m = g.edge_count();
    auto copies = enumerate_copies(pattern, g);
    std::vector<std::vector<int>> copies_of_edge(static_cast<size_t>(m));
    for (size_t c = 0; c < copies.size(); ++c)
        for (int e : copies[c]) copies_of_edge[static_cast<size_t>(e)].push_back(static_cast<int>(c));

    std::vector<bool> edge_alive(static_cast<size_t>(m), true);
    std::vector<bool> copy_alive(copies.size(), true);

    auto signature = [&](int e) {
        std::vector<int> sig;
        for (int c : copies_of_edge[static_cast<size_t>(e)])
            if (copy_alive[static_cast<size_t>(c)]) sig.push_back(c);
        return sig;
    };
    auto remove_edge = [&](int e) {
        edge_alive[static_cast<size_t>(e)] = false;
        for (int c : copies_of_edge[static_cast<size_t>(e)]) copy_alive[static_cast<size_t>(c)] = false;
    };

    RainbowResult result;
    result.status = RainbowStatus::ok;
    auto& trace = result.trace;
    trace.combined = EdgeColouring(m);
    int col = 0;

    // Pair loop: lexicographically smallest pair of equivalent edges that
    // still share at least one live copy.
    while (true) {
        std::map<std::vector<int>, std::vector<int>> groups;
        for (int e = 0; e < m; ++e) {
            if (!edge_alive[static_cast<size_t>(e)]) continue;
            auto sig = signature(e);
            if (!sig.empty()) groups[std::move(sig)].push_back(e);
        }
        int pick1 = -1, pick2 = -1;
        for (int e1 = 0; e1 < m && pick1 < 0; ++e1) {
            if (!edge_alive[static_cast<size_t>(e1)]) continue;
            auto sig = signature(e1);
            if (sig.empty()) continue;
            const auto& group = groups[sig];
            for (int e2 : group) {
                if (e2 <= e1) continue;
                if (spec.disjoint_pairs) {
                    auto [a, b] = g.edge(e1);
                    auto [x, y] = g.edge(e2);
                    if (x == a || x == b || y == a || y == b) continue;
                }
                pick1 = e1;
                pick2 = e2;
                break;
            }
        }
        if (pick1 < 0) break;
        trace.paired_edges.push_back({pick1, pick2, col});
        trace.combined.colour[static_cast<size_t>(pick1)] = col;
        trace.combined.colour[static_cast<size_t>(pick2)] = col;
        remove_edge(pick1);
        remove_edge(pick2);
        ++col;
    }

    // Solo loop: edges in no live copy get fresh colours. Removing them
    // leaves the copy collection unchanged.
    for (int e = 0; e < m; ++e) {
        if (!edge_alive[static_cast<size_t>(e)]) continue;
        if (!signature(e).empty()) continue;
        trace.solo_edges.push_back({e, col});
        trace.combined.colour[static_cast<size_t>(e)] = col;
        edge_alive[static_cast<size_t>(e)] = false;
        ++col;
    }

    std::vector<int> residue;
    for (int e = 0; e < m; ++e)
        if (edge_alive[static_cast<size_t>(e)]) residue.push_back(e);
    if (residue.empty()) return result;

    // Isolated vertices drop out of the compact residue automatically.
    auto sub = subgraph_by_edges(g, residue);
    auto status = closed_status(sub.graph, pattern);
    if (!status.is_closed)
        throw std::logic_error("rainbow reduction: residue is not pattern-closed");
    auto decomp = block_decomposition(sub.graph, pattern);

    size_t block_count = decomp.blocks.size();
    std::vector<Subgraph> block_subs(block_count);
    std::vector<BlockSearchResult> block_results(block_count);

    parallel_for(jobs, static_cast<std::int64_t>(block_count), [&](std::int64_t bi) {
        std::vector<int> host_edges;
        for (int e : decomp.blocks[static_cast<size_t>(bi)])
            host_edges.push_back(sub.edge_map[static_cast<size_t>(e)]);
        block_subs[static_cast<size_t>(bi)] = subgraph_by_edges(g, host_edges);
        const Graph& block = block_subs[static_cast<size_t>(bi)].graph;
        if (spec.c4_route) {
            if (auto constructed = colour_c4_block(block)) {
                block_results[static_cast<size_t>(bi)] =
                    BlockSearchResult{BlockSearchStatus::found, *constructed, 0};
                return;
            }
        }
        block_results[static_cast<size_t>(bi)] =
            block_colour_search(block, pattern, spec.mode, spec.k, budget, 1);
    });

    for (size_t bi = 0; bi < block_count; ++bi) {
        const auto& br = block_results[bi];
        if (br.status != BlockSearchStatus::found) {
            result.status = (br.status == BlockSearchStatus::budget_exhausted)
                                ? RainbowStatus::block_budget_exhausted
                                : RainbowStatus::block_uncolourable;
            result.certificate_block = block_subs[bi].edge_map;
            std::sort(result.certificate_block.begin(), result.certificate_block.end());
            result.trace = ColouringTrace{};
            return result;
        }
        trace.blocks.push_back(block_subs[bi].edge_map);
        std::vector<std::array<int, 2>> mapped;
        for (int e = 0; e < block_subs[bi].graph.edge_count(); ++e) {
            int host_edge = block_subs[bi].edge_map[static_cast<size_t>(e)];
            int c = col + br.colouring.colour[static_cast<size_t>(e)];
            mapped.push_back({host_edge, c});
            trace.combined.colour[static_cast<size_t>(host_edge)] = c;
        }
        trace.block_colourings.push_back(std::move(mapped));
        col += br.colouring.max_colour() + 1;
    }
    return result;
}

void check_pattern_hypotheses(const Graph& pattern, int min_edges, const char* who) {
    if (pattern.edge_count() < min_edges)
        throw std::invalid_argument(std::string(who) + ": pattern needs at least " +
                                    std::to_string(min_edges) + " edges");
    if (!is_strictly_2_balanced(pattern))
        throw std::invalid_argument(std::string(who) + ": pattern must be strictly 2-balanced");
    if (!(density_report(pattern).m2 > Rational(1)))
        throw std::invalid_argument(std::string(who) + ": pattern needs m2 > 1");
}

}  // namespace

RainbowResult rainbow_colour(const Graph& g, const Graph& pattern, const SearchBudget& block_budget,
                             int jobs) {
    check_pattern_hypotheses(pattern, 5, "rainbow_colour");
    if (block_budget.max_nodes == 0) throw std::invalid_argument("rainbow_colour: budget must be positive");
    ReductionSpec spec{true, ColourMode::anti_ramsey, 0, false};
    return run_reduction(g, pattern, spec, block_budget, jobs);
}

RainbowResult rainbow_colour_constrained(const Graph& g, const Graph& pattern, int k,
                                         const SearchBudget& block_budget, int jobs) {
    if (k < 3) throw std::invalid_argument("rainbow_colour_constrained: k >= 3 required");
    check_pattern_hypotheses(pattern, 4, "rainbow_colour_constrained");
    if (is_isomorphic(pattern, make_named("K", {3})))
        throw std::invalid_argument("rainbow_colour_constrained: pattern must not be a triangle");
    if (block_budget.max_nodes == 0)
        throw std::invalid_argument("rainbow_colour_constrained: budget must be positive");
    ReductionSpec spec{false, ColourMode::constrained, k,
                       is_isomorphic(pattern, make_named("C", {4}))};
    return run_reduction(g, pattern, spec, block_budget, jobs);
}

}  // namespace ramsey
