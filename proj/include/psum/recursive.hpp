#ifndef PSUM_RECURSIVE_HPP
#define PSUM_RECURSIVE_HPP

#include <functional>
#include <string>
#include <unordered_map>

#include "psum/bigint.hpp"
#include "psum/graph.hpp"

namespace psum {

// Isomorphism-level cache: canonical certificate -> PS.
class PsCache {
  public:
    const Int* find(const std::string& cert) const {
        auto it = map_.find(cert);
        return it == map_.end() ? nullptr : &it->second;
    }
    void insert(const std::string& cert, Int value) { map_.emplace(cert, std::move(value)); }
    std::size_t size() const { return map_.size(); }

  private:
    std::unordered_map<std::string, Int> map_;
};

// picks the cycle edge the recursion deletes; must return an edge lying on a cycle
using EdgeSelector = std::function<std::pair<int, int>(const Graph&)>;

// Deletion-identity engine: empty graph -> 1, components multiply, forests
// by matching-count DP, paths by the Fibonacci closed form, otherwise
// PS(G) = PS(G-uv) + PS(G-u-v) + 2 * sum_{C with uv} PS(G - V(C))
// for the lexicographically smallest edge uv lying on a cycle.
Int ps_recursive(const Graph& g);
Int ps_recursive(const Graph& g, PsCache* cache);
Int ps_recursive(const Graph& g, PsCache* cache, const EdgeSelector& select);

// Vertex deletion identity, exposed for testing it directly:
// PS(G) = PS(G-v) + sum_{u in N(v)} PS(G-v-u) + 2 * sum_{C with v} PS(G-V(C))
Int ps_vertex_rule(const Graph& g, int v);

// matching-count DP over a forest (PS of a forest = its Hosoya index)
Int forest_ps(const Graph& g);

} // namespace psum

#endif
