#ifndef PSUM_GRAPH_HPP
#define PSUM_GRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace psum {

// Simple undirected graph on vertices 0..n-1, n <= 64.
// Adjacency is stored as one 64-bit neighbour mask per vertex.
class Graph {
  public:
    static constexpr int kMaxOrder = 64;

    Graph() = default;
    explicit Graph(int n);

    int order() const { return n_; }
    int size() const; // edge count

    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    std::uint64_t neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const;

    std::vector<std::pair<int, int>> edges() const; // sorted, u < v
    std::vector<int> degree_sequence() const;       // sorted ascending

    bool operator==(const Graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }

  private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<std::uint64_t> adj_;
};

// --- composition (deterministic relabeling: G keeps 0..n_G-1, H shifts upward) ---
Graph disjoint_union(const Graph& g, const Graph& h);
// glue vertex u of g with vertex v of h; the merged vertex keeps label u
Graph identify(const Graph& g, int u, const Graph& h, int v);
// join g and h by the single new edge {u, v+order(g)}
Graph bridge(const Graph& g, int u, const Graph& h, int v);

// induced subgraph on the vertices of `keep` (ascending relabeling)
Graph induced_subgraph(const Graph& g, std::uint64_t keep);
Graph remove_vertices(const Graph& g, const std::vector<int>& verts);
Graph remove_edge_copy(const Graph& g, int u, int v);

// --- structure queries ---
std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g); // true for the empty graph
bool is_acyclic(const Graph& g);

struct TwoCore {
    Graph core;
    std::vector<int> orig_vertex; // core vertex i was g's orig_vertex[i]
};
// repeatedly strip degree <= 1 vertices; may be empty
TwoCore two_core(const Graph& g);

// every simple cycle through edge uv, found as u-v paths in G-uv;
// each cycle is a vertex sequence starting at u; order is deterministic
// (lexicographic by sorted vertex set, then by sequence)
std::vector<std::vector<int>> cycles_through_edge(const Graph& g, int u, int v);
// all simple cycles; each reported once, anchored at its smallest vertex,
// with the orientation tie-break second < last
std::vector<std::vector<int>> all_cycles(const Graph& g);

} // namespace psum

#endif
