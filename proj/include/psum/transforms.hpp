#ifndef PSUM_TRANSFORMS_HPP
#define PSUM_TRANSFORMS_HPP

#include <utility>
#include <vector>

#include "psum/graph.hpp"

namespace psum {

// Type I: G1 glues tree T at its vertex u onto vertex v of G;
// G2 glues a path of the same order at a pendant vertex instead.
// Requires G != P1 and T a tree with |T| > 2.
std::pair<Graph, Graph> transform_type_I(const Graph& g, int v, const Graph& tree, int u);

struct TypeIIInstance {
    Graph g1; // internal path with pendant paths P_s at the first and P_t at
              // the last internal vertex
    Graph g2; // P_s moved to the free end of P_t
    Graph g3; // P_t moved to the free end of P_s
};

// Type II, built from a host graph plus an internal path u,u_1..u_p,v whose
// interior vertices all have degree 2 in the host (p >= 2) and pendant path
// lengths s,t >= 1.
TypeIIInstance transform_type_II(const Graph& host, const std::vector<int>& path, int s, int t);

} // namespace psum

#endif
