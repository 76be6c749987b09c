// Acceptance suite: one line per criterion, nonzero exit on any failure.
#include <cstdint>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "psum/bigint.hpp"
#include "psum/bounds.hpp"
#include "psum/canonical.hpp"
#include "psum/enumerate.hpp"
#include "psum/families.hpp"
#include "psum/graph.hpp"
#include "psum/graph6.hpp"
#include "psum/recursive.hpp"
#include "psum/ryser.hpp"
#include "psum/sachs.hpp"
#include "psum/transforms.hpp"
#include "psum/verify.hpp"

using namespace psum;

namespace {

int g_failures = 0;

void report(int criterion, const char* what, bool ok) {
    std::printf("criterion %2d: %s  (%s)\n", criterion, ok ? "PASS" : "FAIL", what);
    if (!ok) ++g_failures;
}

// connected graphs of order 1..8 from the baseline generator
const std::vector<Graph>& corpus8() {
    static const std::vector<Graph> c = [] {
        std::vector<Graph> out;
        for (int n = 1; n <= 8; ++n)
            for (const Graph& g : all_graphs(n))
                if (is_connected(g)) out.push_back(g);
        return out;
    }();
    return c;
}

Graph random_sparse_connected(std::mt19937& rng, int n, int extra) {
    Graph g(n);
    for (int v = 1; v < n; ++v)
        g.add_edge(v, static_cast<int>(rng() % static_cast<unsigned>(v)));
    int slack = n * (n - 1) / 2 - (n - 1); // non-edges left after the spanning tree
    if (extra > slack) extra = slack;
    while (extra > 0) {
        int u = static_cast<int>(rng() % static_cast<unsigned>(n));
        int v = static_cast<int>(rng() % static_cast<unsigned>(n));
        if (u != v && !g.has_edge(u, v)) {
            g.add_edge(u, v);
            --extra;
        }
    }
    return g;
}

bool fixed_values() {
    Graph h = bridge(make_B3(1, 1, 1), 2, make_path(1), 0); // pendant at a degree-2 vertex
    Graph m = bridge(make_B3(1, 1, 1), 0, make_path(1), 0); // pendant at a degree-3 vertex
    struct Row {
        Graph g;
        long long ps;
    };
    const Row table[] = {
        {make_B1(3, 4), 30},
        {make_B1A(3, 3, 1, B1Attach::Rim), 28},
        {make_D(3, 2), 14},
        {make_B3(2, 2, 0), 32},
        {make_B3(1, 3, 0), 31},
        {make_B3P(2), 34},
        {make_B3(1, 1, 1), 19},
        {make_B3P(1), 20},
        {make_B3(1, 1, 2), 29},
        {h, 28},
        {m, 23},
        {make_cycle(4), 9},
    };
    for (const Row& row : table)
        if (ps_sachs(row.g) != row.ps || ps_permanent(row.g) != row.ps ||
            ps_recursive(row.g) != row.ps)
            return false;
    return true;
}

bool engine_triple() {
    PsCache cache;
    for (const Graph& g : corpus8()) {
        Int a = ps_sachs(g);
        if (ps_permanent(g) != a || ps_recursive(g, &cache) != a) return false;
    }
    for (int n = 4; n <= 10; ++n)
        for (const Graph& g : enumerate_bicyclic(n)) {
            Int a = ps_sachs(g);
            if (ps_permanent(g) != a || ps_recursive(g, &cache) != a) return false;
        }
    std::mt19937 rng(2024);
    for (int it = 0; it < 500; ++it) {
        int n = 10 + static_cast<int>(rng() % 3);
        Graph g = random_sparse_connected(rng, n, static_cast<int>(rng() % 4));
        Int a = ps_sachs(g);
        if (ps_permanent(g) != a || ps_recursive(g, &cache) != a) return false;
    }
    return true;
}

bool verify_range(const char* claim, int lo, int hi) {
    for (int n = lo; n <= hi; ++n) {
        VerificationReport r = verify(claim, n);
        if (!r.pass || r.status != "ok") return false;
    }
    return true;
}

bool property_suites() {
    // Deletion identities on every (graph, edge) and (graph, vertex) pair.
    // One cycle listing per graph; residual PS values memoized by vertex mask.
    for (const Graph& g : corpus8()) {
        Int total = ps_permanent(g);
        std::uint64_t full = (std::uint64_t{1} << g.order()) - 1;
        std::vector<std::pair<std::uint64_t, std::vector<int>>> cycles;
        for (const auto& cyc : all_cycles(g)) {
            std::uint64_t mask = 0;
            for (int w : cyc) mask |= std::uint64_t{1} << w;
            cycles.emplace_back(mask, cyc);
        }
        std::map<std::uint64_t, Int> residual;
        auto ps_of = [&](std::uint64_t keep) -> const Int& {
            auto it = residual.find(keep);
            if (it == residual.end())
                it = residual.emplace(keep, ps_permanent(induced_subgraph(g, keep))).first;
            return it->second;
        };
        auto on_cycle = [](const std::vector<int>& cyc, int u, int v) {
            std::size_t len = cyc.size();
            for (std::size_t i = 0; i < len; ++i) {
                int a = cyc[i], b = cyc[(i + 1) % len];
                if ((a == u && b == v) || (a == v && b == u)) return true;
            }
            return false;
        };
        for (auto [u, v] : g.edges()) {
            Int rhs = ps_permanent(remove_edge_copy(g, u, v));
            rhs += ps_of(full & ~(std::uint64_t{1} << u) & ~(std::uint64_t{1} << v));
            for (const auto& [mask, cyc] : cycles)
                if (on_cycle(cyc, u, v)) rhs += 2 * ps_of(full & ~mask);
            if (rhs != total) return false;
        }
        for (int v = 0; v < g.order(); ++v) {
            std::uint64_t vbit = std::uint64_t{1} << v;
            Int rhs = ps_of(full & ~vbit);
            std::uint64_t nb = g.neighbors(v);
            while (nb) {
                std::uint64_t ubit = nb & (0 - nb);
                nb &= nb - 1;
                rhs += ps_of(full & ~vbit & ~ubit);
            }
            for (const auto& [mask, cyc] : cycles)
                if (mask & vbit) rhs += 2 * ps_of(full & ~mask);
            if (rhs != total) return false;
        }
    }

    // Multiplicativity on random component pairs.
    std::mt19937 rng(77);
    for (int it = 0; it < 1000; ++it) {
        Graph a = random_sparse_connected(rng, 1 + static_cast<int>(rng() % 7),
                                          static_cast<int>(rng() % 3));
        Graph b = random_sparse_connected(rng, 1 + static_cast<int>(rng() % 7),
                                          static_cast<int>(rng() % 3));
        if (ps_permanent(disjoint_union(a, b)) != ps_permanent(a) * ps_permanent(b)) return false;
    }

    // Pendant-tree replacement monotonicity on randomized instances.
    int done = 0;
    while (done < 200) {
        Graph g = random_sparse_connected(rng, 3 + static_cast<int>(rng() % 5),
                                          static_cast<int>(rng() % 3));
        int order = 3 + static_cast<int>(rng() % 4);
        Graph t = random_sparse_connected(rng, order, 0);
        int u = static_cast<int>(rng() % static_cast<unsigned>(order));
        if (t.degree_sequence().back() <= 2 && t.degree(u) == 1) continue; // identity case
        int v = static_cast<int>(rng() % static_cast<unsigned>(g.order()));
        auto [g1, g2] = transform_type_I(g, v, t, u);
        if (!(ps_recursive(g1) < ps_recursive(g2))) return false;
        ++done;
    }

    // Internal-path pendant-shift monotonicity on randomized instances.
    for (int it = 0; it < 200; ++it) {
        int p = 2 + static_cast<int>(rng() % 3);
        int k = p + 2 + static_cast<int>(rng() % 3);
        Graph host = make_cycle(k);
        if (rng() % 2) host = bridge(host, 0, make_path(1 + rng() % 2), 0);
        std::vector<int> path;
        for (int i = 0; i <= p + 1; ++i) path.push_back(i);
        int s = 1 + static_cast<int>(rng() % 3), t = 1 + static_cast<int>(rng() % 3);
        TypeIIInstance inst = transform_type_II(host, path, s, t);
        Int best = ps_recursive(inst.g2);
        Int other = ps_recursive(inst.g3);
        if (other > best) best = other;
        if (!(ps_recursive(inst.g1) < best)) return false;
    }

    // Coefficient invariants across the corpus.
    for (const Graph& g : corpus8()) {
        Polynomial poly = coefficients_sachs(g);
        if (poly.coeff[0] != 1) return false;
        if (g.order() >= 1 && poly.coeff[1] != 0) return false;
        if (g.order() >= 2 && abs(poly.coeff[2]) != g.size()) return false;
        if (g.order() >= 3) {
            Int triangles = 0;
            for (int a = 0; a < g.order(); ++a)
                for (int b = a + 1; b < g.order(); ++b)
                    for (int c = b + 1; c < g.order(); ++c)
                        if (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)) ++triangles;
            if (abs(poly.coeff[3]) != 2 * triangles) return false;
        }
        for (int j = 0; j < static_cast<int>(poly.coeff.size()); ++j)
            if ((j % 2 == 0 && poly.coeff[static_cast<std::size_t>(j)] < 0) ||
                (j % 2 == 1 && poly.coeff[static_cast<std::size_t>(j)] > 0))
                return false;
    }
    return true;
}

bool roundtrip_and_generators() {
    for (int n = 0; n <= 8; ++n)
        for (const Graph& g : all_graphs(n))
            if (decode_graph6(encode_graph6(g)) != g) return false;
    for (int n = 6; n <= 8; ++n) {
        std::set<std::string> structured, naive;
        for (const Graph& g : enumerate_bicyclic(n)) structured.insert(certificate(g));
        for (const Graph& g : enumerate_naive(n, n + 1, true)) naive.insert(certificate(g));
        if (structured != naive) return false;
    }
    return true;
}

} // namespace

int main() {
    report(1, "fixed values, three engines", fixed_values());
    report(2, "engine-triple equivalence", engine_triple());
    report(3, "TypeB1 maximum, n=7..11", verify_range("thm1.1", 7, 11));
    report(4, "TypeB2 maximum n=8..11 and second maximum n=11",
           verify_range("lem4.1", 8, 11) && verify_range("thm1.2", 11, 11));
    report(5, "TypeB3 maximum, n=6..11", verify_range("thm1.3", 6, 11));
    report(6, "overall bicyclic second maximum, n=11", verify_range("thm1.4", 11, 11));
    report(7, "forest and unicyclic extrema",
           verify_range("lem2.8", 6, 10) && verify_range("lem2.9", 5, 11) &&
               verify_range("lem2.10", 8, 11));
    bool gap = lemma46_gap(9) == 0;
    for (int n = 10; n <= 60 && gap; ++n) gap = lemma46_gap(n) > 0;
    report(8, "bound-gap pinning, n=9..60", gap);
    report(9, "pendant-path monotonicity, n=5..11", verify_range("lem5.1", 5, 11));
    report(10, "identity and invariant property suites", property_suites());
    report(11, "graph6 round-trip and generator agreement", roundtrip_and_generators());

    if (g_failures != 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
