#include "ramseylab/triangle.hpp"

#include "ramseylab/parallel.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace ramsey {

namespace {

std::vector<std::array<int, 3>> all_triangles(const Graph& g) {
    std::vector<std::array<int, 3>> out;
    for (const auto& [u, v] : g.edges()) {
        const auto& nu = g.adjacency()[static_cast<size_t>(u)];
        const auto& nv = g.adjacency()[static_cast<size_t>(v)];
        std::vector<int> common;
        std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(common));
        for (int w : common)
            if (w > v) out.push_back({u, v, w});
    }
    return out;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
    }
};

}  // namespace

std::vector<std::vector<int>> triangle_components(const Graph& g) {
    auto triangles = all_triangles(g);
    UnionFind uf(triangles.size());
    std::vector<std::vector<int>> tri_of_edge(static_cast<size_t>(g.edge_count()));
    for (size_t t = 0; t < triangles.size(); ++t) {
        auto [a, b, c] = triangles[t];
        for (int e : {g.edge_id(a, b), g.edge_id(a, c), g.edge_id(b, c)})
            tri_of_edge[static_cast<size_t>(e)].push_back(static_cast<int>(t));
    }
    for (const auto& list : tri_of_edge)
        for (size_t i = 1; i < list.size(); ++i) uf.unite(list[0], list[i]);

    std::map<int, std::vector<int>> by_root;  // root triangle -> edge ids
    for (size_t t = 0; t < triangles.size(); ++t) {
        auto [a, b, c] = triangles[t];
        auto& edges = by_root[uf.find(static_cast<int>(t))];
        edges.push_back(g.edge_id(a, b));
        edges.push_back(g.edge_id(a, c));
        edges.push_back(g.edge_id(b, c));
    }
    std::vector<std::vector<int>> components;
    for (auto& [root, edges] : by_root) {
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        components.push_back(std::move(edges));
    }
    return components;
}

bool is_triangle_connected(const Graph& g) {
    if (g.vertex_count() < 3 || g.edge_count() < 3) return false;
    if (g.min_degree() < 1) return false;
    auto components = triangle_components(g);
    return components.size() == 1 &&
           static_cast<int>(components[0].size()) == g.edge_count();
}

int r_value(const Graph& t) {
    if (!is_triangle_connected(t)) throw std::invalid_argument("r_value: graph is not triangle-connected");
    return t.edge_count() - 2 * t.vertex_count() + 3;
}

namespace {

constexpr int kDpVertexLimit = 14;

struct SequenceContext {
    const Graph& t;
    std::vector<std::uint64_t> adj;  // adjacency bitmasks

    explicit SequenceContext(const Graph& graph) : t(graph) {
        adj.assign(static_cast<size_t>(t.vertex_count()), 0);
        for (const auto& [u, v] : t.edges()) {
            adj[static_cast<size_t>(u)] |= 1ull << v;
            adj[static_cast<size_t>(v)] |= 1ull << u;
        }
    }

    // Vertex is addable when an edge inside its masked neighbourhood exists.
    bool addable(int v, std::uint64_t mask) const {
        std::uint64_t inside = adj[static_cast<size_t>(v)] & mask;
        std::uint64_t rest = inside;
        while (rest) {
            int a = std::countr_zero(rest);
            rest &= rest - 1;
            if (adj[static_cast<size_t>(a)] & inside) return true;
        }
        return false;
    }

    int deg_in(int v, std::uint64_t mask) const {
        return std::popcount(adj[static_cast<size_t>(v)] & mask);
    }
};

constexpr int kNoMore = std::numeric_limits<int>::max();

// Lexicographic comparison of irregular-step position lists, padded with
// "no more irregular steps".
int key_at(const std::vector<int>& key, size_t i) { return i < key.size() ? key[i] : kNoMore; }

bool positions_better(const std::vector<int>& a, const std::vector<int>& b, bool early) {
    size_t len = std::max(a.size(), b.size());
    for (size_t i = 0; i < len; ++i) {
        int x = key_at(a, i), y = key_at(b, i);
        if (x != y) return early ? x < y : x > y;
    }
    return false;
}

struct PositionDp {
    const SequenceContext& ctx;
    bool early;
    int start_size;
    struct Entry { bool feasible = false; std::vector<int> key; int next = -1; };
    std::unordered_map<std::uint64_t, Entry> memo;
    std::uint64_t full;

    PositionDp(const SequenceContext& c, bool early_policy, int start)
        : ctx(c), early(early_policy), start_size(start) {
        full = (ctx.t.vertex_count() == 64) ? ~0ull : ((1ull << ctx.t.vertex_count()) - 1);
    }

    const Entry& solve(std::uint64_t mask) {
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        Entry entry;
        if (mask == full) {
            entry.feasible = true;
        } else {
            int step = std::popcount(mask) - start_size + 1;
            for (int v = 0; v < ctx.t.vertex_count(); ++v) {
                if (mask & (1ull << v)) continue;
                if (!ctx.addable(v, mask)) continue;
                const Entry& child = solve(mask | (1ull << v));
                if (!child.feasible) continue;
                std::vector<int> key;
                if (ctx.deg_in(v, mask) >= 3) key.push_back(step);
                key.insert(key.end(), child.key.begin(), child.key.end());
                if (!entry.feasible || positions_better(key, entry.key, early)) {
                    entry.feasible = true;
                    entry.key = std::move(key);
                    entry.next = v;
                }
            }
        }
        return memo.emplace(mask, std::move(entry)).first->second;
    }
};

struct Degree4Dp {
    const SequenceContext& ctx;
    struct Entry { bool feasible = false; int degree4 = 0; int next = -1; };
    std::unordered_map<std::uint64_t, Entry> memo;
    std::uint64_t full;

    explicit Degree4Dp(const SequenceContext& c) : ctx(c) {
        full = (ctx.t.vertex_count() == 64) ? ~0ull : ((1ull << ctx.t.vertex_count()) - 1);
    }

    const Entry& solve(std::uint64_t mask) {
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        Entry entry;
        if (mask == full) {
            entry.feasible = true;
        } else {
            for (int v = 0; v < ctx.t.vertex_count(); ++v) {
                if (mask & (1ull << v)) continue;
                if (!ctx.addable(v, mask)) continue;
                const Entry& child = solve(mask | (1ull << v));
                if (!child.feasible) continue;
                int cost = child.degree4 + (ctx.deg_in(v, mask) >= 4 ? 1 : 0);
                if (!entry.feasible || cost < entry.degree4) {
                    entry.feasible = true;
                    entry.degree4 = cost;
                    entry.next = v;
                }
            }
        }
        return memo.emplace(mask, std::move(entry)).first->second;
    }
};

// Greedy vertex order for components beyond the exact-search limit.
std::vector<int> greedy_order(const SequenceContext& ctx, std::uint64_t mask, StepPolicy policy) {
    std::vector<int> order;
    std::uint64_t full = (ctx.t.vertex_count() == 64) ? ~0ull : ((1ull << ctx.t.vertex_count()) - 1);
    while (mask != full) {
        int best = -1, best_deg = 0;
        bool best_irregular = false;
        for (int v = 0; v < ctx.t.vertex_count(); ++v) {
            if (mask & (1ull << v)) continue;
            if (!ctx.addable(v, mask)) continue;
            int deg = ctx.deg_in(v, mask);
            bool irregular = deg >= 3;
            bool take;
            if (best < 0) {
                take = true;
            } else if (policy == StepPolicy::early_irregular) {
                take = (irregular && !best_irregular) ||
                       (irregular == best_irregular && deg < best_deg);
            } else {
                // defer_irregular and avoid_degree4 both favour low degree
                take = deg < best_deg;
            }
            if (take) { best = v; best_deg = deg; best_irregular = irregular; }
        }
        if (best < 0) throw std::logic_error("build_sequence: no extension found");
        order.push_back(best);
        mask |= 1ull << best;
    }
    return order;
}

std::vector<int> schedule_steps(const SequenceContext& ctx, std::uint64_t start_mask, int start_size,
                                StepPolicy policy) {
    if (ctx.t.vertex_count() > kDpVertexLimit) return greedy_order(ctx, start_mask, policy);
    if (policy == StepPolicy::avoid_degree4) {
        Degree4Dp dp(ctx);
        if (!dp.solve(start_mask).feasible)
            throw std::logic_error("build_sequence: start does not extend");
        std::vector<int> order;
        std::uint64_t mask = start_mask;
        while (true) {
            const auto& entry = dp.solve(mask);
            if (entry.next < 0) break;
            order.push_back(entry.next);
            mask |= 1ull << entry.next;
        }
        return order;
    }
    PositionDp dp(ctx, policy == StepPolicy::early_irregular, start_size);
    if (!dp.solve(start_mask).feasible) throw std::logic_error("build_sequence: start does not extend");
    std::vector<int> order;
    std::uint64_t mask = start_mask;
    while (true) {
        const auto& entry = dp.solve(mask);
        if (entry.next < 0) break;
        order.push_back(entry.next);
        mask |= 1ull << entry.next;
    }
    return order;
}

TriangleSequence materialise(const Graph& t, StartKind kind, const std::vector<int>& start_vertices,
                             const std::vector<int>& order) {
    TriangleSequence seq;
    seq.start_kind = kind;
    seq.start_vertices = start_vertices;
    for (size_t i = 0; i < start_vertices.size(); ++i)
        for (size_t j = i + 1; j < start_vertices.size(); ++j) {
            int e = t.edge_id(start_vertices[i], start_vertices[j]);
            if (e >= 0) seq.start_edges.push_back(e);
        }
    std::sort(seq.start_edges.begin(), seq.start_edges.end());

    std::vector<bool> in(static_cast<size_t>(t.vertex_count()), false);
    for (int v : start_vertices) in[static_cast<size_t>(v)] = true;
    for (int v : order) {
        TriangleStep step;
        step.vertex = v;
        step.anchor = {-1, -1};
        for (int w : t.adjacency()[static_cast<size_t>(v)]) {
            if (!in[static_cast<size_t>(w)]) continue;
            step.added_edges.push_back(t.edge_id(v, w));
            if (step.anchor[0] < 0) {
                for (int x : t.adjacency()[static_cast<size_t>(v)]) {
                    if (x <= w || !in[static_cast<size_t>(x)] || !t.has_edge(w, x)) continue;
                    step.anchor = {w, x};
                    break;
                }
            }
        }
        if (step.anchor[0] < 0) {
            // Anchor may pair a later neighbour with an earlier one; rescan.
            std::vector<int> inside;
            for (int w : t.adjacency()[static_cast<size_t>(v)])
                if (in[static_cast<size_t>(w)]) inside.push_back(w);
            for (size_t i = 0; i < inside.size() && step.anchor[0] < 0; ++i)
                for (size_t j = i + 1; j < inside.size(); ++j)
                    if (t.has_edge(inside[i], inside[j])) { step.anchor = {inside[i], inside[j]}; break; }
        }
        if (step.anchor[0] < 0) throw std::logic_error("build_sequence: step without a triangle");
        std::sort(step.added_edges.begin(), step.added_edges.end());
        in[static_cast<size_t>(v)] = true;
        seq.steps.push_back(std::move(step));
    }
    return seq;
}

std::vector<std::vector<int>> induced_k5_minus_sets(const Graph& t) {
    std::vector<std::vector<int>> out;
    int n = t.vertex_count();
    if (n < 5) return out;
    std::vector<int> idx(5);
    std::vector<int> verts;
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == 5) {
            int e = 0;
            for (size_t i = 0; i < 5; ++i)
                for (size_t j = i + 1; j < 5; ++j)
                    if (t.has_edge(verts[i], verts[j])) ++e;
            if (e == 9) out.push_back(verts);
            return;
        }
        for (int v = start; v < n; ++v) {
            verts.push_back(v);
            rec(v + 1, depth + 1);
            verts.pop_back();
        }
    };
    rec(0, 0);
    return out;
}

std::vector<std::vector<int>> k4_sets(const Graph& t) {
    std::vector<std::vector<int>> out;
    for (const auto& [a, b] : t.edges()) {
        const auto& na = t.adjacency()[static_cast<size_t>(a)];
        for (int c : na) {
            if (c <= b || !t.has_edge(b, c)) continue;
            for (int d : na) {
                if (d <= c || !t.has_edge(b, d) || !t.has_edge(c, d)) continue;
                out.push_back({a, b, c, d});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t mask_of(const std::vector<int>& vertices) {
    std::uint64_t mask = 0;
    for (int v : vertices) mask |= 1ull << v;
    return mask;
}

}  // namespace

TriangleSequence build_sequence(const Graph& t, bool allow_rich_starts, StepPolicy policy) {
    if (!is_triangle_connected(t))
        throw std::invalid_argument("build_sequence: graph is not triangle-connected");
    if (t.vertex_count() > 63) throw std::invalid_argument("build_sequence: too many vertices");
    SequenceContext ctx(t);

    if (allow_rich_starts) {
        auto k5m = induced_k5_minus_sets(t);
        if (!k5m.empty()) {
            const auto& start = k5m.front();
            auto order = schedule_steps(ctx, mask_of(start), 5, policy);
            return materialise(t, StartKind::k5_minus, start, order);
        }
        auto k4 = k4_sets(t);
        if (!k4.empty()) {
            const auto& start = k4.front();
            auto order = schedule_steps(ctx, mask_of(start), 4, policy);
            return materialise(t, StartKind::k4, start, order);
        }
    }

    auto triangles = all_triangles(t);
    if (triangles.empty()) throw std::invalid_argument("build_sequence: no triangle");

    if (t.vertex_count() > kDpVertexLimit || policy == StepPolicy::avoid_degree4) {
        // One start suffices beyond the exact limit; for avoid_degree4 rank
        // starts by their exact degree-4 count when small enough.
        if (t.vertex_count() <= kDpVertexLimit) {
            Degree4Dp dp(ctx);
            std::vector<int> best_start;
            int best_cost = std::numeric_limits<int>::max();
            for (const auto& tri : triangles) {
                std::vector<int> start{tri[0], tri[1], tri[2]};
                const auto& entry = dp.solve(mask_of(start));
                if (entry.feasible && entry.degree4 < best_cost) {
                    best_cost = entry.degree4;
                    best_start = start;
                }
            }
            auto order = schedule_steps(ctx, mask_of(best_start), 3, policy);
            return materialise(t, StartKind::triangle, best_start, order);
        }
        std::vector<int> start{triangles[0][0], triangles[0][1], triangles[0][2]};
        auto order = greedy_order(ctx, mask_of(start), policy);
        return materialise(t, StartKind::triangle, start, order);
    }

    PositionDp dp(ctx, policy == StepPolicy::early_irregular, 3);
    std::vector<int> best_start;
    const std::vector<int>* best_key = nullptr;
    std::vector<int> best_key_storage;
    for (const auto& tri : triangles) {
        std::vector<int> start{tri[0], tri[1], tri[2]};
        const auto& entry = dp.solve(mask_of(start));
        if (!entry.feasible) continue;
        if (!best_key || positions_better(entry.key, *best_key, policy == StepPolicy::early_irregular)) {
            best_key_storage = entry.key;
            best_key = &best_key_storage;
            best_start = start;
        }
    }
    if (best_start.empty()) throw std::logic_error("build_sequence: no feasible start");
    auto order = schedule_steps(ctx, mask_of(best_start), 3, policy);
    return materialise(t, StartKind::triangle, best_start, order);
}

bool validate_sequence(const Graph& t, const TriangleSequence& seq) {
    size_t want_start = seq.start_kind == StartKind::triangle ? 3 : (seq.start_kind == StartKind::k4 ? 4 : 5);
    size_t want_edges = seq.start_kind == StartKind::triangle ? 3 : (seq.start_kind == StartKind::k4 ? 6 : 9);
    if (seq.start_vertices.size() != want_start) return false;
    // Starts are induced subgraphs.
    size_t induced = 0;
    for (size_t i = 0; i < seq.start_vertices.size(); ++i)
        for (size_t j = i + 1; j < seq.start_vertices.size(); ++j)
            if (t.has_edge(seq.start_vertices[i], seq.start_vertices[j])) ++induced;
    if (induced != want_edges || seq.start_edges.size() != want_edges) return false;

    std::vector<bool> in(static_cast<size_t>(t.vertex_count()), false);
    for (int v : seq.start_vertices) {
        if (v < 0 || v >= t.vertex_count() || in[static_cast<size_t>(v)]) return false;
        in[static_cast<size_t>(v)] = true;
    }
    for (const auto& step : seq.steps) {
        int v = step.vertex;
        if (v < 0 || v >= t.vertex_count() || in[static_cast<size_t>(v)]) return false;
        auto [a, b] = step.anchor;
        if (!in[static_cast<size_t>(a)] || !in[static_cast<size_t>(b)]) return false;
        if (!t.has_edge(a, b) || !t.has_edge(v, a) || !t.has_edge(v, b)) return false;
        std::vector<int> expect;
        for (int w : t.adjacency()[static_cast<size_t>(v)])
            if (in[static_cast<size_t>(w)]) expect.push_back(t.edge_id(v, w));
        std::sort(expect.begin(), expect.end());
        if (expect != step.added_edges) return false;
        in[static_cast<size_t>(v)] = true;
    }
    for (int v = 0; v < t.vertex_count(); ++v)
        if (!in[static_cast<size_t>(v)]) return false;
    return true;
}

int sequence_r(const Graph& t, const TriangleSequence& seq) {
    (void)t;
    int r = 0;
    for (const auto& step : seq.steps) r += static_cast<int>(step.added_edges.size()) - 2;
    return r;
}

namespace {

const Graph& triangle_pattern() {
    static const Graph k3 = make_named("K", {3});
    return k3;
}

struct ColourState {
    const Graph& t;
    EdgeColouring colouring;
    std::vector<std::array<int, 2>> pairs;                 // pair form per edge
    std::map<int, std::vector<int>> class_edges;           // colour -> edge ids

    explicit ColourState(const Graph& graph)
        : t(graph), colouring(graph.edge_count()),
          pairs(static_cast<size_t>(graph.edge_count()), {-1, -1}) {}

    void set(int edge, int colour, std::array<int, 2> pair = {-1, -1}) {
        colouring.colour[static_cast<size_t>(edge)] = colour;
        pairs[static_cast<size_t>(edge)] = pair;
        class_edges[colour].push_back(edge);
    }
    int colour_of(int u, int v) const { return colouring.colour[static_cast<size_t>(t.edge_id(u, v))]; }
    int class_size(int colour) const {
        auto it = class_edges.find(colour);
        return it == class_edges.end() ? 0 : static_cast<int>(it->second.size());
    }
    int incident_count(int v, int colour) const {
        auto it = class_edges.find(colour);
        if (it == class_edges.end()) return 0;
        int count = 0;
        for (int e : it->second)
            if (t.edge(e).first == v || t.edge(e).second == v) ++count;
        return count;
    }
    // Colour class forms a path with at most two edges.
    bool class_is_short_path(int colour) const {
        auto it = class_edges.find(colour);
        if (it == class_edges.end()) return false;
        const auto& edges = it->second;
        if (edges.size() == 1) return true;
        if (edges.size() != 2) return false;
        auto [a, b] = t.edge(edges[0]);
        auto [c, d] = t.edge(edges[1]);
        int shared = (a == c) + (a == d) + (b == c) + (b == d);
        return shared == 1;
    }
};

StarColouring finish_with_fallback(const Graph& t, int star_k, const SearchBudget& budget) {
    ColouringConstraints cons;
    cons.star_k = star_k;
    cons.pattern = &triangle_pattern();
    auto search = search_colouring(t, cons, budget, 1);
    if (search.status != SearchStatus::witness_found)
        throw std::runtime_error("triangle colouring fallback failed (" +
                                 std::string(search.status == SearchStatus::budget_exhausted
                                                 ? "budget exhausted"
                                                 : "no colouring exists") +
                                 ")");
    return StarColouring{search.witness, true, {}};
}

std::vector<int> step_vertices(const TriangleSequence& seq, const Graph& t) {
    std::vector<int> add_step(static_cast<size_t>(t.vertex_count()), -1);
    for (int v : seq.start_vertices) add_step[static_cast<size_t>(v)] = 0;
    for (size_t i = 0; i < seq.steps.size(); ++i)
        add_step[static_cast<size_t>(seq.steps[i].vertex)] = static_cast<int>(i) + 1;
    return add_step;
}

}  // namespace

StarColouring colour_k14(const Graph& t, const SearchBudget& fallback_budget) {
    if (!is_triangle_connected(t))
        throw std::invalid_argument("colour_k14: graph is not triangle-connected");
    if (t.edge_count() > 2 * t.vertex_count())
        throw std::invalid_argument("colour_k14: requires e <= 2v");

    auto seq = build_sequence(t, false, StepPolicy::early_irregular);
    auto add_step = step_vertices(seq, t);
    ColourState st(t);

    // Two edges of the start triangle share colour 0; the third stays open.
    st.set(seq.start_edges[0], 0);
    st.set(seq.start_edges[1], 0);

    std::vector<bool> in(static_cast<size_t>(t.vertex_count()), false);
    for (int v : seq.start_vertices) in[static_cast<size_t>(v)] = true;

    bool structured = true;
    for (size_t si = 0; si < seq.steps.size() && structured; ++si) {
        int i = static_cast<int>(si) + 1;
        int v = seq.steps[si].vertex;
        std::vector<int> inside;
        for (int w : t.adjacency()[static_cast<size_t>(v)])
            if (in[static_cast<size_t>(w)]) inside.push_back(w);

        // U: vertices covered by the edges spanned inside the neighbourhood.
        std::vector<int> u_set;
        for (size_t a = 0; a < inside.size(); ++a)
            for (size_t b = a + 1; b < inside.size(); ++b)
                if (t.has_edge(inside[a], inside[b])) {
                    u_set.push_back(inside[a]);
                    u_set.push_back(inside[b]);
                }
        std::sort(u_set.begin(), u_set.end());
        u_set.erase(std::unique(u_set.begin(), u_set.end()), u_set.end());

        if (u_set.size() <= 3) {
            if (inside.size() <= 3) {
                for (int w : inside) st.set(t.edge_id(v, w), i);
            } else {
                for (int w : u_set) st.set(t.edge_id(v, w), i);
            }
        } else if (u_set.size() == 4) {
            int last = u_set[0];
            for (int w : u_set)
                if (add_step[static_cast<size_t>(w)] > add_step[static_cast<size_t>(last)]) last = w;
            int j = add_step[static_cast<size_t>(last)];
            bool unique_last = true;
            for (int w : u_set)
                if (w != last && add_step[static_cast<size_t>(w)] == j) unique_last = false;
            if (j < 1 || !unique_last || st.class_size(j) != 3 ||
                seq.steps[static_cast<size_t>(j) - 1].added_edges.size() != 3) {
                structured = false;
                break;
            }
            for (int w : u_set)
                if (w != last) st.set(t.edge_id(v, w), j);
        } else {
            structured = false;
            break;
        }
        in[static_cast<size_t>(v)] = true;
    }

    if (structured) {
        int fresh = seq.ell() + 1;
        for (int e = 0; e < t.edge_count(); ++e)
            if (st.colouring.colour[static_cast<size_t>(e)] == EdgeColouring::kUncoloured)
                st.set(e, fresh++);
        if (!has_monochromatic_star(t, st.colouring, 4) &&
            !has_rainbow_copy(t, st.colouring, triangle_pattern()))
            return StarColouring{st.colouring, false, {}};
    }
    return finish_with_fallback(t, 4, fallback_budget);
}

StarColouring colour_k13(const Graph& t, const SearchBudget& fallback_budget) {
    if (!is_triangle_connected(t))
        throw std::invalid_argument("colour_k13: graph is not triangle-connected");
    if (t.edge_count() >= 2 * t.vertex_count())
        throw std::invalid_argument("colour_k13: requires e < 2v");

    auto seq = build_sequence(t, true, StepPolicy::avoid_degree4);
    ColourState st(t);
    auto flat = [](int step, int sub) { return step * 3 + sub; };
    auto set_pair = [&](int u, int v, int step, int sub) {
        st.set(t.edge_id(u, v), flat(step, sub), {step, sub});
    };

    std::vector<bool> in(static_cast<size_t>(t.vertex_count()), false);
    for (int v : seq.start_vertices) in[static_cast<size_t>(v)] = true;

    if (seq.start_kind == StartKind::triangle) {
        int a = seq.start_vertices[0], b = seq.start_vertices[1], c = seq.start_vertices[2];
        std::vector<int> es = {t.edge_id(a, b), t.edge_id(a, c), t.edge_id(b, c)};
        std::sort(es.begin(), es.end());
        st.set(es[0], flat(0, 0), {0, 0});
        st.set(es[1], flat(0, 0), {0, 0});
        st.set(es[2], flat(0, 1), {0, 1});
    } else if (seq.start_kind == StartKind::k4) {
        auto& s = seq.start_vertices;  // sorted 4-clique
        set_pair(s[0], s[1], 0, 0);
        set_pair(s[1], s[2], 0, 0);
        set_pair(s[2], s[3], 0, 0);
        set_pair(s[3], s[0], 0, 0);
        set_pair(s[0], s[2], 0, 1);
        set_pair(s[1], s[3], 0, 2);
    } else {
        auto& s = seq.start_vertices;
        int x = -1, y = -1;
        for (size_t i = 0; i < s.size() && x < 0; ++i)
            for (size_t j = i + 1; j < s.size(); ++j)
                if (!t.has_edge(s[i], s[j])) { x = s[i]; y = s[j]; break; }
        std::vector<int> rest;
        for (int v : s)
            if (v != x && v != y) rest.push_back(v);
        // 5-cycle through the non-edge's endpoints at distance two.
        int cycle[5] = {x, rest[0], y, rest[1], rest[2]};
        for (int i = 0; i < 5; ++i) set_pair(cycle[i], cycle[(i + 1) % 5], 0, 0);
        for (size_t i = 0; i < s.size(); ++i)
            for (size_t j = i + 1; j < s.size(); ++j) {
                int e = t.edge_id(s[i], s[j]);
                if (e >= 0 && st.colouring.colour[static_cast<size_t>(e)] == EdgeColouring::kUncoloured)
                    st.set(e, flat(0, 1), {0, 1});
            }
    }

    auto add_step = step_vertices(seq, t);
    bool structured = true;
    for (size_t si = 0; si < seq.steps.size() && structured; ++si) {
        int i = static_cast<int>(si) + 1;
        int v = seq.steps[si].vertex;
        std::vector<int> inside;
        for (int w : t.adjacency()[static_cast<size_t>(v)])
            if (in[static_cast<size_t>(w)]) inside.push_back(w);

        std::vector<std::array<int, 2>> spanned;
        for (size_t a = 0; a < inside.size(); ++a)
            for (size_t b = a + 1; b < inside.size(); ++b)
                if (t.has_edge(inside[a], inside[b])) spanned.push_back({inside[a], inside[b]});

        if (inside.size() == 2) {
            set_pair(v, inside[0], i, 0);
            set_pair(v, inside[1], i, 0);
        } else if (inside.size() == 3) {
            int u1 = inside[0], u2 = inside[1], u3 = inside[2];
            if (spanned.size() == 1) {
                auto [a, b] = spanned[0];
                int c = u1 + u2 + u3 - a - b;
                set_pair(v, a, i, 0);
                set_pair(v, b, i, 0);
                set_pair(v, c, i, 1);
            } else if (spanned.size() == 3) {
                // Triangle: some two of its edges share a colour; reuse it on
                // the two far ends.
                int middle = -1, c1 = -1;
                for (int w : inside) {
                    int p = -1, q = -1;
                    for (int z : inside)
                        if (z != w) (p < 0 ? p : q) = z;
                    if (st.colour_of(w, p) == st.colour_of(w, q)) { middle = w; c1 = st.colour_of(w, p); break; }
                }
                if (middle < 0 || st.class_size(c1) != 2) { structured = false; break; }
                for (int w : inside)
                    if (w != middle) st.set(t.edge_id(v, w), c1, st.pairs[static_cast<size_t>(t.edge_id(middle, w))]);
                set_pair(v, middle, i, 0);
            } else if (spanned.size() == 2) {
                int middle = -1;
                if (spanned[0][0] == spanned[1][0] || spanned[0][0] == spanned[1][1]) middle = spanned[0][0];
                else middle = spanned[0][1];
                int p = spanned[0][0] + spanned[0][1] - middle;
                int q = spanned[1][0] + spanned[1][1] - middle;
                if (p > q) std::swap(p, q);
                int cp = st.colour_of(p, middle), cq = st.colour_of(middle, q);
                if (cp == cq) {
                    // Reuse the path colour on whichever end carries no other
                    // edge of that colour.
                    int end = -1;
                    if (st.incident_count(p, cp) == 1) end = p;
                    else if (st.incident_count(q, cp) == 1) end = q;
                    if (end < 0) { structured = false; break; }
                    st.set(t.edge_id(v, end), cp, st.pairs[static_cast<size_t>(t.edge_id(p, middle))]);
                    for (int w : inside)
                        if (w != end) set_pair(v, w, i, 0);
                } else {
                    int u1 = -1, u2 = middle, u3 = -1, c1 = -1;
                    if (st.class_is_short_path(cp)) { u1 = p; u3 = q; c1 = cp; }
                    else if (st.class_is_short_path(cq)) { u1 = q; u3 = p; c1 = cq; }
                    if (u1 < 0) { structured = false; break; }
                    auto c1_pair = st.pairs[static_cast<size_t>(t.edge_id(u1, u2))];
                    if (st.incident_count(u1, c1) == 1) {
                        st.set(t.edge_id(v, u1), c1, c1_pair);
                        set_pair(v, u2, i, 0);
                        set_pair(v, u3, i, 0);
                    } else if (st.incident_count(u2, c1) == 1) {
                        set_pair(v, u1, i, 0);
                        st.set(t.edge_id(v, u2), c1, c1_pair);
                        st.set(t.edge_id(v, u3), c1, c1_pair);
                    } else {
                        structured = false;
                        break;
                    }
                }
            } else {
                structured = false;
                break;
            }
        } else if (inside.size() == 4) {
            int last = inside[0];
            for (int w : inside)
                if (add_step[static_cast<size_t>(w)] > add_step[static_cast<size_t>(last)]) last = w;
            bool unique_last = true;
            for (int w : inside)
                if (w != last && add_step[static_cast<size_t>(w)] == add_step[static_cast<size_t>(last)])
                    unique_last = false;
            if (spanned.size() != 1 || !unique_last ||
                (spanned[0][0] != last && spanned[0][1] != last)) {
                structured = false;
                break;
            }
            int u3 = spanned[0][0] + spanned[0][1] - last;
            std::vector<int> independent;
            for (int w : inside)
                if (w != last && w != u3) independent.push_back(w);
            set_pair(v, independent[0], i, 0);
            set_pair(v, independent[1], i, 0);
            set_pair(v, u3, i, 1);
            set_pair(v, last, i, 1);
        } else {
            structured = false;
            break;
        }
        in[static_cast<size_t>(v)] = true;
    }

    if (structured && !has_monochromatic_star(t, st.colouring, 3) &&
        !has_rainbow_copy(t, st.colouring, triangle_pattern()))
        return StarColouring{st.colouring, false, st.pairs};
    return finish_with_fallback(t, 3, fallback_budget);
}

TriangleModeResult colour_graph_triangle_mode(const Graph& g, int k,
                                              const SearchBudget& fallback_budget, int jobs) {
    if (k != 3 && k != 4) throw std::invalid_argument("colour_graph_triangle_mode: k must be 3 or 4");
    auto components = triangle_components(g);

    TriangleModeResult result;
    result.ok = true;
    result.component_count = static_cast<int>(components.size());
    result.colouring = EdgeColouring(g.edge_count());

    std::vector<Subgraph> subs(components.size());
    for (size_t i = 0; i < components.size(); ++i) {
        subs[i] = subgraph_by_edges(g, components[i]);
        const Graph& comp = subs[i].graph;
        bool bad = (k == 4) ? comp.edge_count() > 2 * comp.vertex_count()
                            : comp.edge_count() >= 2 * comp.vertex_count();
        if (bad) {
            result.ok = false;
            result.offending_component = components[i];
            return result;
        }
    }

    std::vector<StarColouring> coloured(components.size());
    parallel_for(jobs, static_cast<std::int64_t>(components.size()), [&](std::int64_t i) {
        coloured[static_cast<size_t>(i)] = (k == 4) ? colour_k14(subs[static_cast<size_t>(i)].graph, fallback_budget)
                                                    : colour_k13(subs[static_cast<size_t>(i)].graph, fallback_budget);
    });

    int base = 0;
    for (size_t i = 0; i < components.size(); ++i) {
        const auto& sc = coloured[i];
        if (sc.used_fallback) ++result.fallback_count;
        for (int e = 0; e < subs[i].graph.edge_count(); ++e) {
            int host_edge = subs[i].edge_map[static_cast<size_t>(e)];
            result.colouring.colour[static_cast<size_t>(host_edge)] =
                base + sc.colouring.colour[static_cast<size_t>(e)];
        }
        base += sc.colouring.max_colour() + 1;
    }
    for (int e = 0; e < g.edge_count(); ++e)
        if (result.colouring.colour[static_cast<size_t>(e)] == EdgeColouring::kUncoloured)
            result.colouring.colour[static_cast<size_t>(e)] = base++;
    return result;
}

}  // namespace ramsey
