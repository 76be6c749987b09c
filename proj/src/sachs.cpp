#include "psum/sachs.hpp"

#include <bit>
#include <unordered_map>

namespace psum {

namespace {

// Weight vectors indexed by covered-vertex count, memoized per vertex mask.
// Branch on the lowest uncovered vertex v: leave it uncovered, match it
// along an incident edge, or close a cycle anchored at v (v is the cycle
// minimum by construction; orientation dedup: second vertex < last).
struct SachsSolver {
    const Graph& g;
    std::unordered_map<std::uint32_t, std::vector<Int>> memo;

    const std::vector<Int>& solve(std::uint32_t mask) {
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        std::vector<Int> w(static_cast<std::size_t>(std::popcount(mask)) + 1);
        if (mask == 0) {
            w[0] = 1;
        } else {
            int v = std::countr_zero(mask);
            std::uint32_t rest = mask & (mask - 1);
            add(w, solve(rest), 0, 1);
            std::uint32_t nb = static_cast<std::uint32_t>(g.neighbors(v)) & rest;
            std::uint32_t nbit = nb;
            while (nbit) {
                int u = std::countr_zero(nbit);
                nbit &= nbit - 1;
                add(w, solve(mask & ~(1u << v) & ~(1u << u)), 2, 1);
            }
            // cycles through v inside mask
            std::vector<int> path{v};
            cycle_dfs(v, v, mask & ~(1u << v), path, mask, w);
        }
        return memo.emplace(mask, std::move(w)).first->second;
    }

    void cycle_dfs(int cur, int anchor, std::uint32_t avail, std::vector<int>& path,
                   std::uint32_t mask, std::vector<Int>& w) {
        std::uint32_t nb = static_cast<std::uint32_t>(g.neighbors(cur)) & mask;
        if (path.size() >= 3 && ((nb >> anchor) & 1u) && path[1] < path.back()) {
            std::uint32_t cyc = 0;
            for (int x : path) cyc |= 1u << x;
            add(w, solve(mask & ~cyc), static_cast<int>(path.size()), 2);
        }
        nb &= avail;
        while (nb) {
            int nxt = std::countr_zero(nb);
            nb &= nb - 1;
            path.push_back(nxt);
            cycle_dfs(nxt, anchor, avail & ~(1u << nxt), path, mask, w);
            path.pop_back();
        }
    }

    static void add(std::vector<Int>& w, const std::vector<Int>& sub, int shift, int factor) {
        for (std::size_t k = 0; k < sub.size(); ++k)
            w[k + static_cast<std::size_t>(shift)] += factor * sub[k];
    }
};

} // namespace

std::vector<Int> sachs_weights(const Graph& g) {
    if (g.order() > kSachsOrderLimit)
        throw LimitError("sachs engine: order " + std::to_string(g.order()) +
                         " above limit " + std::to_string(kSachsOrderLimit));
    SachsSolver solver{g, {}};
    std::uint32_t full = (g.order() == 0) ? 0 : ((1u << g.order()) - 1);
    return solver.solve(full);
}

Int sachs_weight(const Graph& g, int k) {
    if (k < 0 || k > g.order()) throw std::out_of_range("sachs_weight: k out of range");
    return sachs_weights(g)[static_cast<std::size_t>(k)];
}

Polynomial coefficients_sachs(const Graph& g) {
    auto w = sachs_weights(g);
    Polynomial p;
    p.coeff.resize(w.size());
    for (std::size_t k = 0; k < w.size(); ++k)
        p.coeff[k] = (k % 2 == 0) ? w[k] : -w[k];
    return p;
}

Int ps_sachs(const Graph& g) {
    Int total = 0;
    for (const Int& x : sachs_weights(g)) total += x;
    return total;
}

} // namespace psum
