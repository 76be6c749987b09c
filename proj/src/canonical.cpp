#include "psum/canonical.hpp"

#include <algorithm>
#include <utility>

#include "psum/bigint.hpp"
#include "psum/graph6.hpp"

namespace psum {

namespace {

constexpr int kCanonLimit = 32;

// Stable iterated neighbour-colour refinement. Colours are dense ranks;
// the new colour order extends the old one.
void refine(const Graph& g, std::vector<int>& color) {
    int n = g.order();
    for (;;) {
        std::vector<std::pair<std::vector<int>, int>> sig(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::vector<int> s{color[static_cast<std::size_t>(v)]};
            std::uint64_t nb = g.neighbors(v);
            std::vector<int> ncols;
            while (nb) {
                int w = std::countr_zero(nb);
                nb &= nb - 1;
                ncols.push_back(color[static_cast<std::size_t>(w)]);
            }
            std::sort(ncols.begin(), ncols.end());
            s.insert(s.end(), ncols.begin(), ncols.end());
            sig[static_cast<std::size_t>(v)] = {std::move(s), v};
        }
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> next(static_cast<std::size_t>(n));
        int rank = -1;
        const std::vector<int>* prev = nullptr;
        for (auto& [s, v] : sorted) {
            if (!prev || *prev != s) ++rank;
            next[static_cast<std::size_t>(v)] = rank;
            prev = &s;
        }
        if (next == color) return;
        color = std::move(next);
    }
}

struct Search {
    const Graph& g;
    std::string best;
    std::vector<int> best_label;

    void run(std::vector<int> color) {
        refine(g, color);
        int n = g.order();
        // smallest non-singleton colour class
        std::vector<int> count(static_cast<std::size_t>(n), 0);
        for (int v = 0; v < n; ++v) ++count[static_cast<std::size_t>(color[static_cast<std::size_t>(v)])];
        int target = -1;
        for (int c = 0; c < n; ++c)
            if (count[static_cast<std::size_t>(c)] > 1) { target = c; break; }
        if (target < 0) {
            // discrete: colour is the labeling
            Graph cand(n);
            for (auto [u, v] : g.edges())
                cand.add_edge(color[static_cast<std::size_t>(u)], color[static_cast<std::size_t>(v)]);
            std::string cert = encode_graph6(cand);
            if (best.empty() || cert < best) {
                best = std::move(cert);
                best_label = color;
            }
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (color[static_cast<std::size_t>(v)] != target) continue;
            std::vector<int> child = color;
            for (int w = 0; w < n; ++w)
                if (child[static_cast<std::size_t>(w)] > target ||
                    (child[static_cast<std::size_t>(w)] == target && w != v))
                    ++child[static_cast<std::size_t>(w)];
            run(std::move(child));
        }
    }
};

} // namespace

CanonicalForm canonical_form(const Graph& g) {
    if (g.order() > kCanonLimit)
        throw LimitError("canonical_form: order above practical limit " + std::to_string(kCanonLimit));
    Search s{g, {}, {}};
    s.run(std::vector<int>(static_cast<std::size_t>(g.order()), 0));
    CanonicalForm out;
    out.relabeling = s.best_label.empty() ? std::vector<int>{} : s.best_label;
    out.graph = Graph(g.order());
    for (auto [u, v] : g.edges())
        out.graph.add_edge(out.relabeling[static_cast<std::size_t>(u)],
                           out.relabeling[static_cast<std::size_t>(v)]);
    out.certificate = encode_graph6(out.graph);
    return out;
}

std::string certificate(const Graph& g) { return canonical_form(g).certificate; }

} // namespace psum
