#include "psum/recursive.hpp"

#include <bit>
#include <stdexcept>

#include "psum/canonical.hpp"

namespace psum {

namespace {

// (matchings leaving v uncovered, all matchings) for the subtree at v
struct TreeDp {
    Int free_v;
    Int all;
};

TreeDp tree_dp(const Graph& g, int v, int parent) {
    TreeDp dp{1, 1};
    std::uint64_t nb = g.neighbors(v);
    std::vector<TreeDp> kids;
    std::vector<int> kid_ids;
    while (nb) {
        int w = std::countr_zero(nb);
        nb &= nb - 1;
        if (w == parent) continue;
        kids.push_back(tree_dp(g, w, v));
        kid_ids.push_back(w);
    }
    for (const auto& k : kids) dp.free_v *= k.all;
    dp.all = dp.free_v;
    for (std::size_t i = 0; i < kids.size(); ++i) {
        // match v along the edge to child i
        Int term = kids[i].free_v;
        for (std::size_t j = 0; j < kids.size(); ++j)
            if (j != i) term *= kids[j].all;
        dp.all += term;
    }
    return dp;
}

// lexicographically smallest edge that lies on a cycle = smallest non-bridge edge
struct BridgeFinder {
    const Graph& g;
    std::vector<int> disc, low;
    int timer = 0;
    std::pair<int, int> best{-1, -1};

    explicit BridgeFinder(const Graph& graph)
        : g(graph),
          disc(static_cast<std::size_t>(graph.order()), -1),
          low(static_cast<std::size_t>(graph.order()), 0) {}

    void dfs(int v, int parent_edge_to) {
        disc[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = timer++;
        std::uint64_t nb = g.neighbors(v);
        bool skipped_parent = false;
        while (nb) {
            int w = std::countr_zero(nb);
            nb &= nb - 1;
            if (w == parent_edge_to && !skipped_parent) {
                skipped_parent = true; // one parallel edge at most in a simple graph
                continue;
            }
            if (disc[static_cast<std::size_t>(w)] < 0) {
                dfs(w, v);
                low[static_cast<std::size_t>(v)] =
                    std::min(low[static_cast<std::size_t>(v)], low[static_cast<std::size_t>(w)]);
                if (low[static_cast<std::size_t>(w)] > disc[static_cast<std::size_t>(v)])
                    continue; // bridge
                note(v, w);
            } else {
                low[static_cast<std::size_t>(v)] =
                    std::min(low[static_cast<std::size_t>(v)], disc[static_cast<std::size_t>(w)]);
                note(v, w);
            }
        }
    }

    void note(int u, int v) {
        if (u > v) std::swap(u, v);
        if (best.first < 0 || std::pair{u, v} < best) best = {u, v};
    }

    std::pair<int, int> smallest_cycle_edge() {
        for (int v = 0; v < g.order(); ++v)
            if (disc[static_cast<std::size_t>(v)] < 0) dfs(v, -1);
        return best;
    }
};

Int ps_impl(const Graph& g, PsCache* cache, const EdgeSelector& select);

Int ps_connected(const Graph& g, PsCache* cache, const EdgeSelector& select) {
    if (is_acyclic(g)) return forest_ps(g);
    std::string cert;
    if (cache) {
        cert = certificate(g);
        if (const Int* hit = cache->find(cert)) return *hit;
    }
    auto [u, v] = select ? select(g) : BridgeFinder(g).smallest_cycle_edge();
    if (!g.has_edge(u, v)) throw std::logic_error("ps_recursive: selector returned a non-edge");
    Int result = ps_impl(remove_edge_copy(g, u, v), cache, select) +
                 ps_impl(remove_vertices(g, {u, v}), cache, select);
    // group cycles by their vertex set so each residual graph recurses once
    std::unordered_map<std::uint64_t, Int> by_mask;
    std::uint64_t full = g.order() == 64 ? ~std::uint64_t{0}
                                         : (std::uint64_t{1} << g.order()) - 1;
    for (const auto& cyc : cycles_through_edge(g, u, v)) {
        std::uint64_t mask = 0;
        for (int w : cyc) mask |= std::uint64_t{1} << w;
        by_mask[full & ~mask] += 2;
    }
    for (const auto& [keep, mult] : by_mask)
        result += mult * ps_impl(induced_subgraph(g, keep), cache, select);
    if (cache) cache->insert(cert, result);
    return result;
}

Int ps_impl(const Graph& g, PsCache* cache, const EdgeSelector& select) {
    if (g.order() == 0) return 1;
    if (is_acyclic(g)) return forest_ps(g);
    Int result = 1;
    for (const auto& comp : connected_components(g)) {
        std::uint64_t mask = 0;
        for (int v : comp) mask |= std::uint64_t{1} << v;
        result *= ps_connected(induced_subgraph(g, mask), cache, select);
    }
    return result;
}

} // namespace

Int forest_ps(const Graph& g) {
    if (!is_acyclic(g)) throw std::invalid_argument("forest_ps: graph has a cycle");
    Int result = 1;
    for (const auto& comp : connected_components(g)) {
        std::uint64_t mask = 0;
        for (int v : comp) mask |= std::uint64_t{1} << v;
        Graph t = induced_subgraph(g, mask);
        result *= tree_dp(t, 0, -1).all;
    }
    return result;
}

Int ps_recursive(const Graph& g) {
    PsCache cache;
    return ps_impl(g, &cache, nullptr);
}

Int ps_recursive(const Graph& g, PsCache* cache) { return ps_impl(g, cache, nullptr); }

Int ps_recursive(const Graph& g, PsCache* cache, const EdgeSelector& select) {
    return ps_impl(g, cache, select);
}

Int ps_vertex_rule(const Graph& g, int v) {
    if (v < 0 || v >= g.order()) throw std::out_of_range("ps_vertex_rule: bad vertex");
    Int result = ps_recursive(remove_vertices(g, {v}));
    std::uint64_t nb = g.neighbors(v);
    while (nb) {
        int u = std::countr_zero(nb);
        nb &= nb - 1;
        result += ps_recursive(remove_vertices(g, {v, u}));
    }
    for (const auto& cyc : all_cycles(g)) {
        bool through_v = false;
        for (int x : cyc) through_v = through_v || x == v;
        if (through_v) result += 2 * ps_recursive(remove_vertices(g, cyc));
    }
    return result;
}

} // namespace psum
