#include "ramseylab/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ramsey {

Graph::Graph(int n, std::vector<VertexPair> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    for (auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n) throw std::invalid_argument("Graph: endpoint out of range");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("Graph: duplicate edge");
    edges_ = std::move(edges);
    adj_.assign(static_cast<size_t>(n_), {});
    for (const auto& [u, v] : edges_) {
        adj_[static_cast<size_t>(u)].push_back(v);
        adj_[static_cast<size_t>(v)].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

int Graph::edge_id(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), VertexPair{u, v});
    if (it == edges_.end() || *it != VertexPair{u, v}) return -1;
    return static_cast<int>(it - edges_.begin());
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(static_cast<size_t>(n_));
    for (int v = 0; v < n_; ++v) d[static_cast<size_t>(v)] = degree(v);
    return d;
}

int Graph::max_degree() const {
    int m = 0;
    for (int v = 0; v < n_; ++v) m = std::max(m, degree(v));
    return m;
}

int Graph::min_degree() const {
    if (n_ == 0) return 0;
    int m = degree(0);
    for (int v = 1; v < n_; ++v) m = std::min(m, degree(v));
    return m;
}

bool Graph::is_regular() const { return n_ == 0 || max_degree() == min_degree(); }

namespace {

Graph complete(int n) {
    std::vector<VertexPair> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.push_back({u, v});
    return Graph(n, std::move(e));
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<VertexPair> e;
    for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
    return Graph(n, std::move(e));
}

Graph star(int k) {
    if (k < 1) throw std::invalid_argument("star needs k >= 1");
    std::vector<VertexPair> e;
    for (int i = 1; i <= k; ++i) e.push_back({0, i});
    return Graph(k + 1, std::move(e));
}

Graph path(int n) {
    if (n < 2) throw std::invalid_argument("path needs n >= 2");
    std::vector<VertexPair> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return Graph(n, std::move(e));
}

Graph complete_minus(int n, const std::vector<VertexPair>& missing) {
    std::vector<VertexPair> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (std::find(missing.begin(), missing.end(), VertexPair{u, v}) == missing.end())
                e.push_back({u, v});
        }
    return Graph(n, std::move(e));
}

Graph book(int t) {
    if (t < 1) throw std::invalid_argument("book needs t >= 1");
    std::vector<VertexPair> e{{0, 1}};
    for (int i = 0; i < t; ++i) {
        e.push_back({0, 2 + i});
        e.push_back({1, 2 + i});
    }
    return Graph(t + 2, std::move(e));
}

// k-blow-up of C_m: each cycle vertex becomes an independent k-set, with
// complete bipartite edges between consecutive classes.
Graph blowup_cycle(int m, int k) {
    if (m < 3 || k < 1) throw std::invalid_argument("blowup needs m >= 3, k >= 1");
    std::vector<VertexPair> e;
    for (int i = 0; i < m; ++i) {
        int j = (i + 1) % m;
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b) e.push_back({i * k + a, j * k + b});
    }
    return Graph(m * k, std::move(e));
}

Graph petersen() {
    std::vector<VertexPair> e;
    for (int i = 0; i < 5; ++i) {
        e.push_back({i, (i + 1) % 5});
        e.push_back({i, i + 5});
        e.push_back({5 + i, 5 + (i + 2) % 5});
    }
    return Graph(10, std::move(e));
}

Graph cube() {
    std::vector<VertexPair> e;
    for (int u = 0; u < 8; ++u)
        for (int b = 0; b < 3; ++b) {
            int v = u ^ (1 << b);
            if (u < v) e.push_back({u, v});
        }
    return Graph(8, std::move(e));
}

void expect_params(const std::string& name, const std::vector<int>& params, size_t want) {
    if (params.size() != want)
        throw std::invalid_argument("make_named: " + name + " expects " + std::to_string(want) +
                                    " parameter(s)");
}

}  // namespace

Graph make_named(const std::string& name, const std::vector<int>& params) {
    if (name == "K") {
        expect_params(name, params, 1);
        if (params[0] < 1) throw std::invalid_argument("K needs n >= 1");
        return complete(params[0]);
    }
    if (name == "C") {
        expect_params(name, params, 1);
        return cycle(params[0]);
    }
    if (name == "star") {
        expect_params(name, params, 1);
        return star(params[0]);
    }
    if (name == "P") {
        expect_params(name, params, 1);
        return path(params[0]);
    }
    if (name == "P3") {
        expect_params(name, params, 0);
        return path(3);  // the cherry: two edges
    }
    if (name == "K4-minus-edge") {
        expect_params(name, params, 0);
        return complete_minus(4, {{2, 3}});
    }
    if (name == "K5-minus") {
        expect_params(name, params, 0);
        return complete_minus(5, {{3, 4}});
    }
    if (name == "K6-minus-triangle") {
        expect_params(name, params, 0);
        // Vertices 1..6 with 13, 35, 15 as the removed triangle, shifted to
        // 0-based labels.
        return complete_minus(6, {{0, 2}, {2, 4}, {0, 4}});
    }
    if (name == "book") {
        expect_params(name, params, 1);
        return book(params[0]);
    }
    if (name == "blowup") {
        expect_params(name, params, 2);
        return blowup_cycle(params[0], params[1]);
    }
    if (name == "Petersen") {
        expect_params(name, params, 0);
        return petersen();
    }
    if (name == "Q3") {
        expect_params(name, params, 0);
        return cube();
    }
    if (name == "bowtie") {
        expect_params(name, params, 0);
        return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
    }
    throw std::invalid_argument("make_named: unknown family '" + name + "'");
}

Graph parse_named(const std::string& text) {
    static const std::vector<std::string> plain = {"K6-minus-triangle", "K5-minus", "K4-minus-edge",
                                                   "Petersen", "Q3", "bowtie", "P3"};
    for (const auto& p : plain)
        if (text == p) return make_named(p, {});

    auto parse_int = [&](const std::string& s) {
        size_t pos = 0;
        int value = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("parse_named: bad integer in '" + text + "'");
        return value;
    };

    if (text.rfind("book:", 0) == 0) return make_named("book", {parse_int(text.substr(5))});
    if (text.rfind("blowup:C", 0) == 0) {
        auto rest = text.substr(8);
        auto colon = rest.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("parse_named: expected blowup:Cm:k");
        return make_named("blowup", {parse_int(rest.substr(0, colon)), parse_int(rest.substr(colon + 1))});
    }
    if (text.rfind("K1,", 0) == 0) return make_named("star", {parse_int(text.substr(3))});
    if (text.size() > 1 && text[0] == 'K') return make_named("K", {parse_int(text.substr(1))});
    if (text.size() > 1 && text[0] == 'C') return make_named("C", {parse_int(text.substr(1))});
    throw std::invalid_argument("parse_named: unknown graph name '" + text + "'");
}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1;
    std::vector<VertexPair> edges;
    std::set<VertexPair> seen;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        if (n < 0) {
            std::string tag;
            if (!(ls >> tag >> n) || tag != "n" || n < 0)
                throw std::invalid_argument("parse_graph: expected header 'n <count>' on line " +
                                            std::to_string(line_no));
            continue;
        }
        int u, v;
        if (!(ls >> u >> v))
            throw std::invalid_argument("parse_graph: malformed edge line " + std::to_string(line_no));
        std::string trailing;
        if (ls >> trailing)
            throw std::invalid_argument("parse_graph: trailing tokens on line " + std::to_string(line_no));
        if (u == v) throw std::invalid_argument("parse_graph: self-loop on line " + std::to_string(line_no));
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n)
            throw std::invalid_argument("parse_graph: endpoint out of range on line " + std::to_string(line_no));
        if (!seen.insert({u, v}).second)
            throw std::invalid_argument("parse_graph: duplicate edge on line " + std::to_string(line_no));
        edges.push_back({u, v});
    }
    if (n < 0) throw std::invalid_argument("parse_graph: missing 'n <count>' header");
    return Graph(n, std::move(edges));
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.vertex_count() << "\n";
    for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

namespace {

// Pattern vertex order for the copy search: greedily append the vertex with
// the most already-ordered neighbours (ties to the higher degree, then the
// smaller id), so each step can anchor on a mapped neighbour when one exists.
std::vector<int> search_order(const Graph& pattern) {
    int pn = pattern.vertex_count();
    std::vector<int> order;
    std::vector<bool> chosen(static_cast<size_t>(pn), false);
    for (int step = 0; step < pn; ++step) {
        int best = -1, best_back = -1, best_deg = -1;
        for (int v = 0; v < pn; ++v) {
            if (chosen[static_cast<size_t>(v)]) continue;
            int back = 0;
            for (int w : pattern.adjacency()[static_cast<size_t>(v)])
                if (chosen[static_cast<size_t>(w)]) ++back;
            int deg = pattern.degree(v);
            if (back > best_back || (back == best_back && deg > best_deg)) {
                best = v;
                best_back = back;
                best_deg = deg;
            }
        }
        order.push_back(best);
        chosen[static_cast<size_t>(best)] = true;
    }
    return order;
}

struct CopySearch {
    const Graph& pattern;
    const Graph& host;
    std::vector<int> order;           // pattern vertices in mapping order
    std::vector<int> pos_of;          // pattern vertex -> position in order
    std::vector<int> mapping;         // pattern vertex -> host vertex
    std::vector<bool> used;           // host vertex used
    std::set<CopySet>* out = nullptr; // nullptr: existence check only
    bool found = false;
    bool first_by_degree = false;

    CopySearch(const Graph& p, const Graph& h) : pattern(p), host(h) {
        order = search_order(p);
        pos_of.assign(static_cast<size_t>(p.vertex_count()), -1);
        for (size_t i = 0; i < order.size(); ++i) pos_of[static_cast<size_t>(order[i])] = static_cast<int>(i);
        mapping.assign(static_cast<size_t>(p.vertex_count()), -1);
        used.assign(static_cast<size_t>(h.vertex_count()), false);
    }

    bool feasible(int pv, int hv) const {
        if (used[static_cast<size_t>(hv)]) return false;
        if (host.degree(hv) < pattern.degree(pv)) return false;
        for (int q : pattern.adjacency()[static_cast<size_t>(pv)]) {
            int qpos = pos_of[static_cast<size_t>(q)];
            if (qpos < pos_of[static_cast<size_t>(pv)] && mapping[static_cast<size_t>(q)] >= 0 &&
                !host.has_edge(mapping[static_cast<size_t>(q)], hv))
                return false;
        }
        return true;
    }

    void record() {
        CopySet ids;
        for (const auto& [u, v] : pattern.edges())
            ids.push_back(host.edge_id(mapping[static_cast<size_t>(u)], mapping[static_cast<size_t>(v)]));
        std::sort(ids.begin(), ids.end());
        if (out) out->insert(std::move(ids));
        found = true;
    }

    void run(size_t depth) {
        if (found && !out) return;
        if (depth == order.size()) {
            record();
            return;
        }
        int pv = order[depth];
        int anchor = -1;
        for (int q : pattern.adjacency()[static_cast<size_t>(pv)])
            if (pos_of[static_cast<size_t>(q)] < static_cast<int>(depth)) { anchor = q; break; }
        auto try_vertex = [&](int hv) {
            if (!feasible(pv, hv)) return;
            mapping[static_cast<size_t>(pv)] = hv;
            used[static_cast<size_t>(hv)] = true;
            run(depth + 1);
            used[static_cast<size_t>(hv)] = false;
            mapping[static_cast<size_t>(pv)] = -1;
        };
        if (anchor >= 0) {
            for (int hv : host.adjacency()[static_cast<size_t>(mapping[static_cast<size_t>(anchor)])]) {
                if (found && !out) return;
                try_vertex(hv);
            }
        } else if (first_by_degree && depth == 0) {
            // Existence checks start at high-degree host vertices.
            std::vector<int> verts(static_cast<size_t>(host.vertex_count()));
            for (int v = 0; v < host.vertex_count(); ++v) verts[static_cast<size_t>(v)] = v;
            std::stable_sort(verts.begin(), verts.end(),
                             [&](int a, int b) { return host.degree(a) > host.degree(b); });
            for (int hv : verts) {
                if (found && !out) return;
                try_vertex(hv);
            }
        } else {
            for (int hv = 0; hv < host.vertex_count(); ++hv) {
                if (found && !out) return;
                try_vertex(hv);
            }
        }
    }
};

}  // namespace

std::vector<CopySet> enumerate_copies(const Graph& pattern, const Graph& host) {
    if (pattern.edge_count() < 1) throw std::invalid_argument("enumerate_copies: pattern needs an edge");
    std::set<CopySet> copies;
    if (pattern.vertex_count() <= host.vertex_count() && pattern.edge_count() <= host.edge_count()) {
        CopySearch search(pattern, host);
        search.out = &copies;
        search.run(0);
    }
    return {copies.begin(), copies.end()};
}

bool contains_copy(const Graph& pattern, const Graph& host) {
    if (pattern.edge_count() < 1) throw std::invalid_argument("contains_copy: pattern needs an edge");
    if (pattern.vertex_count() > host.vertex_count() || pattern.edge_count() > host.edge_count())
        return false;
    CopySearch search(pattern, host);
    search.first_by_degree = true;
    search.run(0);
    return search.found;
}

namespace {

bool extend_iso(const Graph& a, const Graph& b, std::vector<int>& map_ab, std::vector<bool>& used_b,
                size_t depth, const std::vector<int>& order) {
    if (depth == order.size()) return true;
    int av = order[depth];
    for (int bv = 0; bv < b.vertex_count(); ++bv) {
        if (used_b[static_cast<size_t>(bv)]) continue;
        if (a.degree(av) != b.degree(bv)) continue;
        bool ok = true;
        for (size_t i = 0; i < depth && ok; ++i) {
            int aw = order[i];
            bool ae = a.has_edge(av, aw);
            bool be = b.has_edge(bv, map_ab[static_cast<size_t>(aw)]);
            if (ae != be) ok = false;
        }
        if (!ok) continue;
        map_ab[static_cast<size_t>(av)] = bv;
        used_b[static_cast<size_t>(bv)] = true;
        if (extend_iso(a, b, map_ab, used_b, depth + 1, order)) return true;
        used_b[static_cast<size_t>(bv)] = false;
        map_ab[static_cast<size_t>(av)] = -1;
    }
    return false;
}

}  // namespace

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    auto da = a.degrees(), db = b.degrees();
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    // Map high-degree vertices first; order vertices to keep the mapped set
    // connected where possible.
    std::vector<int> order = search_order(a);
    std::vector<int> map_ab(static_cast<size_t>(a.vertex_count()), -1);
    std::vector<bool> used_b(static_cast<size_t>(b.vertex_count()), false);
    return extend_iso(a, b, map_ab, used_b, 0, order);
}

Subgraph subgraph_by_edges(const Graph& g, const std::vector<int>& edge_ids) {
    std::vector<int> verts;
    for (int id : edge_ids) {
        verts.push_back(g.edge(id).first);
        verts.push_back(g.edge(id).second);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::vector<int> back(static_cast<size_t>(g.vertex_count()), -1);
    for (size_t i = 0; i < verts.size(); ++i) back[static_cast<size_t>(verts[i])] = static_cast<int>(i);

    std::vector<int> sorted_ids = edge_ids;
    std::sort(sorted_ids.begin(), sorted_ids.end());
    std::vector<VertexPair> edges;
    for (int id : sorted_ids)
        edges.push_back({back[static_cast<size_t>(g.edge(id).first)], back[static_cast<size_t>(g.edge(id).second)]});

    Subgraph out;
    out.graph = Graph(static_cast<int>(verts.size()), std::move(edges));
    out.vertex_map = std::move(verts);
    // The compact graph re-sorts edges; rebuild the id mapping explicitly.
    out.edge_map.assign(static_cast<size_t>(out.graph.edge_count()), -1);
    for (int id : sorted_ids) {
        int u = back[static_cast<size_t>(g.edge(id).first)];
        int v = back[static_cast<size_t>(g.edge(id).second)];
        out.edge_map[static_cast<size_t>(out.graph.edge_id(u, v))] = id;
    }
    return out;
}

Graph spanning_subgraph(const Graph& g, const std::vector<int>& edge_ids) {
    std::vector<VertexPair> edges;
    for (int id : edge_ids) edges.push_back(g.edge(id));
    return Graph(g.vertex_count(), std::move(edges));
}

}  // namespace ramsey
