#include "psum/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "psum/canonical.hpp"
#include "psum/families.hpp"
#include "psum/graph6.hpp"

#include <json.hpp>

namespace psum {

namespace {

std::vector<Graph> sorted_by_certificate(std::map<std::string, Graph> byCert) {
    std::vector<Graph> out;
    out.reserve(byCert.size());
    for (auto& [cert, g] : byCert) out.push_back(std::move(g));
    return out;
}

// one layer of pendant growth: every way of hanging one new leaf
std::map<std::string, Graph> grow_leaf(const std::map<std::string, Graph>& level) {
    std::map<std::string, Graph> next;
    for (const auto& [cert, g] : level) {
        for (int v = 0; v < g.order(); ++v) {
            Graph h(g.order() + 1);
            for (auto [a, b] : g.edges()) h.add_edge(a, b);
            h.add_edge(v, g.order());
            auto cf = canonical_form(h);
            next.emplace(cf.certificate, std::move(cf.graph));
        }
    }
    return next;
}

// all graphs whose 2-core is `base`, grown to order n by pendant vertices
std::vector<Graph> decorations(const Graph& base, int n) {
    auto cf = canonical_form(base);
    std::map<std::string, Graph> level{{cf.certificate, cf.graph}};
    for (int k = base.order(); k < n; ++k) level = grow_leaf(level);
    return sorted_by_certificate(std::move(level));
}

} // namespace

std::vector<Graph> all_graphs(int n) {
    if (n < 0 || n > kNaiveOrderLimit)
        throw LimitError("all_graphs: order must be 0.." + std::to_string(kNaiveOrderLimit));
    static std::mutex mu;
    static std::vector<std::vector<Graph>> cache; // cache[n]
    std::lock_guard<std::mutex> lock(mu);
    if (cache.empty()) cache.push_back({Graph(0)});
    while (static_cast<int>(cache.size()) <= n) {
        int k = static_cast<int>(cache.size());
        std::map<std::string, Graph> level;
        for (const Graph& g : cache[static_cast<std::size_t>(k - 1)]) {
            for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << (k - 1)); ++nb) {
                Graph h(k);
                for (auto [a, b] : g.edges()) h.add_edge(a, b);
                for (int v = 0; v < k - 1; ++v)
                    if ((nb >> v) & 1u) h.add_edge(v, k - 1);
                auto cf = canonical_form(h);
                level.emplace(cf.certificate, std::move(cf.graph));
            }
        }
        cache.push_back(sorted_by_certificate(std::move(level)));
    }
    return cache[static_cast<std::size_t>(n)];
}

std::vector<Graph> enumerate_naive(int n, int m, bool connected_only) {
    std::vector<Graph> out;
    for (const Graph& g : all_graphs(n)) {
        if (g.size() != m) continue;
        if (connected_only && !is_connected(g)) continue;
        out.push_back(g);
    }
    return out;
}

std::vector<Graph> enumerate_trees(int n) {
    if (n < 1 || n > kStructuredOrderLimit)
        throw LimitError("enumerate_trees: order must be 1.." + std::to_string(kStructuredOrderLimit));
    std::map<std::string, Graph> level;
    auto cf = canonical_form(Graph(1));
    level.emplace(cf.certificate, cf.graph);
    for (int k = 1; k < n; ++k) level = grow_leaf(level);
    return sorted_by_certificate(std::move(level));
}

std::vector<Graph> enumerate_forests(int n) {
    if (n < 1 || n > kForestOrderLimit)
        throw LimitError("enumerate_forests: order must be 1.." + std::to_string(kForestOrderLimit));
    // trees per order, then every multiset of trees over every partition of n
    std::vector<std::vector<Graph>> trees(static_cast<std::size_t>(n) + 1);
    for (int k = 1; k <= n; ++k) trees[static_cast<std::size_t>(k)] = enumerate_trees(k);

    std::map<std::string, Graph> found;
    // parts chosen in non-increasing size; equal sizes use non-decreasing
    // tree indices, so each multiset appears exactly once
    struct Rec {
        std::vector<std::vector<Graph>>& trees;
        std::map<std::string, Graph>& found;
        void go(int remaining, int max_part, int last_size, std::size_t last_idx, const Graph& acc) {
            if (remaining == 0) {
                auto cf = canonical_form(acc);
                found.emplace(cf.certificate, cf.graph);
                return;
            }
            for (int part = std::min(remaining, max_part); part >= 1; --part) {
                const auto& ts = trees[static_cast<std::size_t>(part)];
                std::size_t start = (part == last_size) ? last_idx : 0;
                for (std::size_t i = start; i < ts.size(); ++i)
                    go(remaining - part, part, part, i, disjoint_union(acc, ts[i]));
            }
        }
    } rec{trees, found};
    rec.go(n, n, 0, 0, Graph(0));
    return sorted_by_certificate(std::move(found));
}

std::vector<Graph> enumerate_unicyclic(int n) {
    if (n < 3 || n > kStructuredOrderLimit)
        throw LimitError("enumerate_unicyclic: order must be 3.." + std::to_string(kStructuredOrderLimit));
    std::map<std::string, Graph> found;
    for (int k = 3; k <= n; ++k)
        for (const Graph& g : decorations(make_cycle(k), n)) found.emplace(encode_graph6(g), g);
    return sorted_by_certificate(std::move(found));
}

std::vector<Graph> enumerate_bicyclic(int n) {
    if (n < 4 || n > kStructuredOrderLimit)
        throw LimitError("enumerate_bicyclic: order must be 4.." + std::to_string(kStructuredOrderLimit));
    std::vector<Graph> bases;
    for (int p = 3; p <= n; ++p)
        for (int q = p; p + q - 1 <= n; ++q) bases.push_back(make_B1(p, q));
    for (int p = 3; p <= n; ++p)
        for (int q = p; p + q <= n; ++q)
            for (int r = 0; p + q + r <= n; ++r) bases.push_back(make_B2(p, q, r));
    for (int p = 1; p + 2 <= n; ++p)
        for (int q = 1; q <= p && p + q + 2 <= n; ++q)
            for (int r = 0; r <= q && p + q + r + 2 <= n; ++r) bases.push_back(make_B3(p, q, r));
    std::map<std::string, Graph> found;
    for (const Graph& base : bases)
        for (const Graph& g : decorations(base, n)) found.emplace(encode_graph6(g), g);
    return sorted_by_certificate(std::move(found));
}

std::vector<EnumerationRecord> make_records(const std::vector<Graph>& graphs,
                                            const std::string& cls, PsCache* cache) {
    PsCache local;
    if (!cache) cache = &local;
    std::vector<EnumerationRecord> out;
    out.reserve(graphs.size());
    for (const Graph& g : graphs) {
        EnumerationRecord rec;
        rec.g6 = certificate(g);
        rec.n = g.order();
        rec.cls = (cls == "auto") ? to_string(classify_bicyclic(g)) : cls;
        rec.ps = ps_recursive(g, cache);
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<EnumerationRecord> rank(std::vector<EnumerationRecord> records, std::size_t top_k) {
    std::sort(records.begin(), records.end(), [](const auto& a, const auto& b) {
        if (a.ps != b.ps) return a.ps > b.ps;
        return a.g6 < b.g6;
    });
    if (records.size() > top_k) records.resize(top_k);
    for (std::size_t i = 0; i < records.size(); ++i) records[i].rank = static_cast<int>(i) + 1;
    return records;
}

std::string to_csv(const std::vector<EnumerationRecord>& records) {
    std::ostringstream out;
    out << "graph6,n,class,ps,rank\n";
    for (const auto& r : records)
        out << r.g6 << ',' << r.n << ',' << r.cls << ',' << r.ps << ',' << r.rank << '\n';
    return out.str();
}

std::string to_json(const std::vector<EnumerationRecord>& records) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : records)
        arr.push_back({{"graph6", r.g6},
                       {"n", r.n},
                       {"class", r.cls},
                       {"ps", r.ps.str()},
                       {"rank", r.rank}});
    return arr.dump();
}

} // namespace psum
