#include "ramseylab/oracle.hpp"

#include "ramseylab/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <mutex>
#include <stdexcept>

namespace ramsey {

namespace {

void require_total(const Graph& host, const EdgeColouring& c, const char* who) {
    if (static_cast<int>(c.colour.size()) != host.edge_count() || !c.is_total())
        throw std::invalid_argument(std::string(who) + ": colouring is not total on the host");
}

}  // namespace

int EdgeColouring::colour_count() const {
    std::vector<int> used(colour);
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    if (!used.empty() && used.front() == kUncoloured) used.erase(used.begin());
    return static_cast<int>(used.size());
}

bool has_monochromatic_star(const Graph& host, const EdgeColouring& c, int k) {
    require_total(host, c, "has_monochromatic_star");
    if (k < 1) throw std::invalid_argument("has_monochromatic_star: k >= 1 required");
    for (int v = 0; v < host.vertex_count(); ++v) {
        std::vector<int> at;
        for (int w : host.adjacency()[static_cast<size_t>(v)])
            at.push_back(c.colour[static_cast<size_t>(host.edge_id(v, w))]);
        std::sort(at.begin(), at.end());
        int run = 1;
        for (size_t i = 1; i < at.size(); ++i) {
            run = (at[i] == at[i - 1]) ? run + 1 : 1;
            if (run >= k) return true;
        }
        if (!at.empty() && k == 1) return true;
    }
    return false;
}

bool has_rainbow_copy(const Graph& host, const EdgeColouring& c, const Graph& pattern) {
    require_total(host, c, "has_rainbow_copy");
    for (const auto& copy : enumerate_copies(pattern, host)) {
        std::vector<int> cols;
        for (int e : copy) cols.push_back(c.colour[static_cast<size_t>(e)]);
        std::sort(cols.begin(), cols.end());
        if (std::adjacent_find(cols.begin(), cols.end()) == cols.end()) return true;
    }
    return false;
}

bool is_proper(const Graph& host, const EdgeColouring& c) {
    require_total(host, c, "is_proper");
    return !has_monochromatic_star(host, c, 2);
}

EdgeColouring min_label_colouring(const Graph& g) {
    EdgeColouring c(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) c.colour[static_cast<size_t>(e)] = g.edge(e).first;
    return c;
}

namespace {

// Canonical restricted-growth search: edge i gets a colour in
// [0, max_used + 1]. Partial colourings are discarded only when the new
// edge completes a monochromatic star / properness clash, or when a fully
// coloured pattern copy is rainbow (no extension can repair either).
struct Searcher {
    const Graph& host;
    const ColouringConstraints& cons;
    std::uint64_t max_nodes;
    std::atomic<std::uint64_t>* shared_nodes = nullptr;  // set when running in parallel
    std::atomic<bool>* cancel = nullptr;

    int m, n;
    std::vector<CopySet> copies;
    std::vector<std::vector<int>> copies_by_last;  // edge id -> copies whose max edge is it
    std::vector<int> colour;
    std::vector<int> counts;  // vertex-colour incidence counts, stride m+1
    std::uint64_t explored = 0;
    std::uint64_t last_flush = 0;
    bool budget_hit = false;
    bool found = false;
    EdgeColouring witness;

    Searcher(const Graph& h, const ColouringConstraints& c, std::uint64_t nodes)
        : host(h), cons(c), max_nodes(nodes), m(h.edge_count()), n(h.vertex_count()) {
        if (cons.pattern && cons.pattern->edge_count() >= 1) {
            copies = enumerate_copies(*cons.pattern, host);
            copies_by_last.assign(static_cast<size_t>(m), {});
            for (size_t i = 0; i < copies.size(); ++i)
                copies_by_last[static_cast<size_t>(copies[i].back())].push_back(static_cast<int>(i));
        } else {
            copies_by_last.assign(static_cast<size_t>(m), {});
        }
        colour.assign(static_cast<size_t>(m), EdgeColouring::kUncoloured);
        counts.assign(static_cast<size_t>(n) * static_cast<size_t>(m + 1), 0);
    }

    int& count(int v, int c) { return counts[static_cast<size_t>(v) * static_cast<size_t>(m + 1) + static_cast<size_t>(c)]; }

    bool violates(int i, int c) {
        auto [u, v] = host.edge(i);
        if (cons.proper && (count(u, c) > 0 || count(v, c) > 0)) return true;
        if (cons.star_k > 0 && (count(u, c) + 1 >= cons.star_k || count(v, c) + 1 >= cons.star_k))
            return true;
        for (int ci : copies_by_last[static_cast<size_t>(i)]) {
            std::uint64_t seen = 0;
            bool rainbow = true;
            for (int e : copies[static_cast<size_t>(ci)]) {
                int ec = (e == i) ? c : colour[static_cast<size_t>(e)];
                std::uint64_t bit = 1ull << ec;
                if (seen & bit) { rainbow = false; break; }
                seen |= bit;
            }
            if (rainbow) return true;
        }
        return false;
    }

    void assign(int i, int c) {
        colour[static_cast<size_t>(i)] = c;
        ++count(host.edge(i).first, c);
        ++count(host.edge(i).second, c);
    }
    void unassign(int i, int c) {
        colour[static_cast<size_t>(i)] = EdgeColouring::kUncoloured;
        --count(host.edge(i).first, c);
        --count(host.edge(i).second, c);
    }

    bool over_budget() {
        if (explored > max_nodes) return true;
        if (shared_nodes && explored - last_flush >= 4096) {
            shared_nodes->fetch_add(explored - last_flush, std::memory_order_relaxed);
            last_flush = explored;
            if (shared_nodes->load(std::memory_order_relaxed) > max_nodes) return true;
        }
        return false;
    }

    void flush_nodes() {
        if (shared_nodes) {
            shared_nodes->fetch_add(explored - last_flush, std::memory_order_relaxed);
            last_flush = explored;
        }
    }

    void dfs(int i, int max_used) {
        if (budget_hit || found) return;
        if (cancel && cancel->load(std::memory_order_relaxed)) return;
        if (i == m) {
            witness.colour = colour;
            found = true;
            return;
        }
        int limit = std::min(max_used + 1, m - 1);
        for (int c = 0; c <= limit; ++c) {
            ++explored;
            if (over_budget()) { budget_hit = true; return; }
            if (violates(i, c)) continue;
            assign(i, c);
            dfs(i + 1, std::max(max_used, c));
            unassign(i, c);
            if (budget_hit || found) return;
            if (cancel && cancel->load(std::memory_order_relaxed)) return;
        }
    }

    // Enumerates all valid partial colourings of edges [0, depth); used to
    // split the tree for the worker pool.
    void prefixes(int i, int max_used, int depth, std::vector<std::pair<std::vector<int>, int>>& out) {
        if (i == depth) {
            out.emplace_back(colour, max_used);
            return;
        }
        int limit = std::min(max_used + 1, m - 1);
        for (int c = 0; c <= limit; ++c) {
            ++explored;
            if (violates(i, c)) continue;
            assign(i, c);
            prefixes(i + 1, std::max(max_used, c), depth, out);
            unassign(i, c);
        }
    }

    void load_prefix(const std::vector<int>& prefix, int depth) {
        for (int i = 0; i < depth; ++i) assign(i, prefix[static_cast<size_t>(i)]);
    }
};

}  // namespace

ColouringSearchResult search_colouring(const Graph& host, const ColouringConstraints& constraints,
                                       const SearchBudget& budget, int jobs) {
    ColouringSearchResult result{SearchStatus::space_exhausted, EdgeColouring(host.edge_count()), 0};
    int m = host.edge_count();
    if (m > budget.max_edges || m > 63) {
        result.status = SearchStatus::budget_exhausted;
        return result;
    }
    if (m == 0) {
        result.status = SearchStatus::witness_found;
        return result;
    }

    if (jobs <= 1 || m <= 7) {
        Searcher s(host, constraints, budget.max_nodes);
        s.dfs(0, -1);
        result.explored = s.explored;
        if (s.budget_hit) result.status = SearchStatus::budget_exhausted;
        else if (s.found) { result.status = SearchStatus::witness_found; result.witness = s.witness; }
        return result;
    }

    // Split at a fixed prefix depth; each valid prefix becomes one task.
    int depth = std::min(m - 1, 6);
    Searcher splitter(host, constraints, budget.max_nodes);
    std::vector<std::pair<std::vector<int>, int>> tasks;
    splitter.prefixes(0, -1, depth, tasks);

    std::atomic<std::uint64_t> total_nodes{splitter.explored};
    std::atomic<bool> cancel{false};
    std::atomic<bool> any_budget{false};
    std::mutex witness_mutex;
    std::optional<EdgeColouring> best_witness;

    parallel_for(jobs, static_cast<std::int64_t>(tasks.size()), [&](std::int64_t t) {
        if (cancel.load(std::memory_order_relaxed)) return;
        Searcher s(host, constraints, budget.max_nodes);
        s.shared_nodes = &total_nodes;
        s.cancel = &cancel;
        s.load_prefix(tasks[static_cast<size_t>(t)].first, depth);
        s.dfs(depth, tasks[static_cast<size_t>(t)].second);
        s.flush_nodes();
        if (s.budget_hit) any_budget.store(true, std::memory_order_relaxed);
        if (s.found) {
            std::scoped_lock lock(witness_mutex);
            if (!best_witness) best_witness = s.witness;
            cancel.store(true, std::memory_order_relaxed);
        }
    });

    result.explored = total_nodes.load();
    if (best_witness) {
        result.status = SearchStatus::witness_found;
        result.witness = *best_witness;
    } else if (any_budget.load()) {
        result.status = SearchStatus::budget_exhausted;
    } else {
        result.status = SearchStatus::space_exhausted;
    }
    return result;
}

DecideResult decide_cram(const Graph& g, int k, const Graph& pattern, const SearchBudget& budget,
                         int jobs) {
    if (k < 2) throw std::invalid_argument("decide_cram: k >= 2 required");
    ColouringConstraints cons{false, k, &pattern};
    auto search = search_colouring(g, cons, budget, jobs);
    if (search.status == SearchStatus::budget_exhausted)
        return {DecideStatus::budget_exhausted, Verdict{false, std::nullopt, search.explored}};
    if (search.status == SearchStatus::witness_found)
        return {DecideStatus::decided, Verdict{false, search.witness, search.explored}};
    return {DecideStatus::decided, Verdict{true, std::nullopt, search.explored}};
}

DecideResult decide_aram(const Graph& g, const Graph& pattern, const SearchBudget& budget, int jobs) {
    ColouringConstraints cons{true, 0, &pattern};
    auto search = search_colouring(g, cons, budget, jobs);
    if (search.status == SearchStatus::budget_exhausted)
        return {DecideStatus::budget_exhausted, Verdict{false, std::nullopt, search.explored}};
    if (search.status == SearchStatus::witness_found)
        return {DecideStatus::decided, Verdict{false, search.witness, search.explored}};
    return {DecideStatus::decided, Verdict{true, std::nullopt, search.explored}};
}

}  // namespace ramsey
