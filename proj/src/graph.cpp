#include "psum/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "psum/bigint.hpp"

namespace psum {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
    if (n < 0 || n > kMaxOrder)
        throw LimitError("graph order out of range: " + std::to_string(n));
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("vertex " + std::to_string(v) + " not in 0.." + std::to_string(n_ - 1));
}

int Graph::size() const {
    int m = 0;
    for (auto mask : adj_) m += std::popcount(mask);
    return m / 2;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[static_cast<std::size_t>(u)] >> v) & 1u;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop rejected");
    adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[static_cast<std::size_t>(u)] &= ~(std::uint64_t{1} << v);
    adj_[static_cast<std::size_t>(v)] &= ~(std::uint64_t{1} << u);
}

int Graph::degree(int v) const {
    check_vertex(v);
    return std::popcount(adj_[static_cast<std::size_t>(v)]);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u) {
        std::uint64_t m = adj_[static_cast<std::size_t>(u)] >> (u + 1) << (u + 1);
        while (m) {
            int v = std::countr_zero(m);
            out.emplace_back(u, v);
            m &= m - 1;
        }
    }
    return out;
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> d(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) d[static_cast<std::size_t>(v)] = degree(v);
    std::sort(d.begin(), d.end());
    return d;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    Graph out(g.order() + h.order());
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    for (auto [u, v] : h.edges()) out.add_edge(u + g.order(), v + g.order());
    return out;
}

Graph identify(const Graph& g, int u, const Graph& h, int v) {
    if (u < 0 || u >= g.order() || v < 0 || v >= h.order())
        throw std::out_of_range("identify: vertex out of range");
    // vertices of h other than v follow g's vertices, in ascending order
    std::vector<int> map(static_cast<std::size_t>(h.order()));
    int next = g.order();
    for (int w = 0; w < h.order(); ++w) map[static_cast<std::size_t>(w)] = (w == v) ? u : next++;
    Graph out(g.order() + h.order() - 1);
    for (auto [a, b] : g.edges()) out.add_edge(a, b);
    for (auto [a, b] : h.edges())
        out.add_edge(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)]);
    return out;
}

Graph bridge(const Graph& g, int u, const Graph& h, int v) {
    if (u < 0 || u >= g.order() || v < 0 || v >= h.order())
        throw std::out_of_range("bridge: vertex out of range");
    Graph out = disjoint_union(g, h);
    out.add_edge(u, v + g.order());
    return out;
}

Graph induced_subgraph(const Graph& g, std::uint64_t keep) {
    std::vector<int> map(static_cast<std::size_t>(g.order()), -1);
    int next = 0;
    for (int v = 0; v < g.order(); ++v)
        if ((keep >> v) & 1u) map[static_cast<std::size_t>(v)] = next++;
    Graph out(next);
    for (auto [u, v] : g.edges())
        if (((keep >> u) & 1u) && ((keep >> v) & 1u))
            out.add_edge(map[static_cast<std::size_t>(u)], map[static_cast<std::size_t>(v)]);
    return out;
}

Graph remove_vertices(const Graph& g, const std::vector<int>& verts) {
    std::uint64_t keep = (g.order() == 64) ? ~std::uint64_t{0}
                                           : (std::uint64_t{1} << g.order()) - 1;
    for (int v : verts) {
        if (v < 0 || v >= g.order()) throw std::out_of_range("remove_vertices: bad vertex");
        keep &= ~(std::uint64_t{1} << v);
    }
    return induced_subgraph(g, keep);
}

Graph remove_edge_copy(const Graph& g, int u, int v) {
    Graph out = g;
    out.remove_edge(u, v);
    return out;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::uint64_t seen = 0;
    for (int s = 0; s < g.order(); ++s) {
        if ((seen >> s) & 1u) continue;
        std::uint64_t comp = std::uint64_t{1} << s;
        std::uint64_t frontier = comp;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            std::uint64_t fresh = g.neighbors(v) & ~comp;
            comp |= fresh;
            frontier |= fresh;
        }
        seen |= comp;
        std::vector<int> vs;
        for (int v = s; v < g.order(); ++v)
            if ((comp >> v) & 1u) vs.push_back(v);
        comps.push_back(std::move(vs));
    }
    return comps;
}

bool is_connected(const Graph& g) {
    return g.order() == 0 || connected_components(g).size() == 1;
}

bool is_acyclic(const Graph& g) {
    int m = g.size();
    auto comps = connected_components(g);
    return m + static_cast<int>(comps.size()) == g.order();
}

TwoCore two_core(const Graph& g) {
    std::uint64_t keep = (g.order() == 64) ? ~std::uint64_t{0}
                                           : (std::uint64_t{1} << g.order()) - 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < g.order(); ++v) {
            if (!((keep >> v) & 1u)) continue;
            if (std::popcount(g.neighbors(v) & keep) <= 1) {
                keep &= ~(std::uint64_t{1} << v);
                changed = true;
            }
        }
    }
    TwoCore out;
    out.core = induced_subgraph(g, keep);
    for (int v = 0; v < g.order(); ++v)
        if ((keep >> v) & 1u) out.orig_vertex.push_back(v);
    return out;
}

namespace {

// DFS over simple u->v paths in g (edge uv itself removed by the caller)
void path_dfs(const Graph& g, int v, int target, std::uint64_t used,
              std::vector<int>& path, std::vector<std::vector<int>>& out) {
    std::uint64_t nb = g.neighbors(v);
    if ((nb >> target) & 1u && path.size() >= 3) out.push_back(path);
    nb &= ~used;
    nb &= ~(std::uint64_t{1} << target);
    while (nb) {
        int w = std::countr_zero(nb);
        nb &= nb - 1;
        path.push_back(w);
        path_dfs(g, w, target, used | (std::uint64_t{1} << w), path, out);
        path.pop_back();
    }
}

void sort_cycles(std::vector<std::vector<int>>& cycles) {
    std::sort(cycles.begin(), cycles.end(), [](const auto& a, const auto& b) {
        std::vector<int> sa = a, sb = b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return sa < sb;
        return a < b;
    });
}

} // namespace

std::vector<std::vector<int>> cycles_through_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("cycles_through_edge: not an edge");
    Graph h = remove_edge_copy(g, u, v);
    std::vector<std::vector<int>> out;
    std::vector<int> path{u, v};
    // walk from v back to u; cycle sequence starts at u
    std::uint64_t used = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
    path_dfs(h, v, u, used, path, out);
    sort_cycles(out);
    return out;
}

std::vector<std::vector<int>> all_cycles(const Graph& g) {
    std::vector<std::vector<int>> out;
    for (int s = 0; s < g.order(); ++s) {
        // cycles whose smallest vertex is s; dedup orientation by second < last
        std::uint64_t low = (std::uint64_t{1} << (s + 1)) - 1; // vertices <= s
        std::uint64_t nb = g.neighbors(s) & ~low;
        while (nb) {
            int w = std::countr_zero(nb);
            nb &= nb - 1;
            std::vector<int> path{s, w};
            std::vector<std::vector<int>> found;
            path_dfs(g, w, s, low | (std::uint64_t{1} << w), path, found);
            for (auto& c : found)
                if (c[1] < c.back()) out.push_back(std::move(c));
        }
    }
    sort_cycles(out);
    return out;
}

} // namespace psum
