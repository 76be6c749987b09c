#include "psum/transforms.hpp"

#include <stdexcept>

#include "psum/families.hpp"

namespace psum {

std::pair<Graph, Graph> transform_type_I(const Graph& g, int v, const Graph& tree, int u) {
    if (g.order() <= 1) throw std::invalid_argument("type I: G must not be P1");
    if (tree.order() <= 2) throw std::invalid_argument("type I: |T| > 2 required");
    if (!is_connected(tree) || !is_acyclic(tree))
        throw std::invalid_argument("type I: T must be a tree");
    Graph g1 = identify(g, v, tree, u);
    Graph g2 = identify(g, v, make_path(tree.order()), 0);
    return {g1, g2};
}

TypeIIInstance transform_type_II(const Graph& host, const std::vector<int>& path, int s, int t) {
    if (path.size() < 4) throw std::invalid_argument("type II: path u,u_1..u_p,v with p >= 2 required");
    if (s < 1 || t < 1) throw std::invalid_argument("type II: s,t >= 1 required");
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (!host.has_edge(path[i], path[i + 1]))
            throw std::invalid_argument("type II: given vertices do not form a path in the host");
    for (std::size_t i = 1; i + 1 < path.size(); ++i)
        if (host.degree(path[i]) != 2)
            throw std::invalid_argument("type II: interior path vertices must have degree 2");
    int u1 = path[1];
    int up = path[path.size() - 2];

    TypeIIInstance out;
    out.g1 = bridge(bridge(host, u1, make_path(s), 0), up, make_path(t), 0);
    out.g2 = bridge(host, up, make_path(s + t), 0);
    out.g3 = bridge(host, u1, make_path(s + t), 0);
    return out;
}

} // namespace psum
