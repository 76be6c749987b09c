#ifndef PSUM_ENUMERATE_HPP
#define PSUM_ENUMERATE_HPP

#include <string>
#include <vector>

#include "psum/bigint.hpp"
#include "psum/graph.hpp"
#include "psum/recursive.hpp"

namespace psum {

struct EnumerationRecord {
    std::string g6; // canonical graph6
    int n = 0;
    std::string cls; // tree | forest | unicyclic | TypeB1 | TypeB2 | TypeB3
    Int ps;
    int rank = 0; // dense, PS-descending, certificate tie-break; 1-based
};

inline constexpr int kNaiveOrderLimit = 9;
inline constexpr int kStructuredOrderLimit = 12;
inline constexpr int kForestOrderLimit = 10;

// every unlabeled simple graph of order n (canonical representatives,
// certificate-sorted); baseline generator, n <= 9
std::vector<Graph> all_graphs(int n);

// all simple graphs with n vertices and m edges, optionally connected,
// deduplicated by canonical form; n <= 9
std::vector<Graph> enumerate_naive(int n, int m, bool connected_only);

std::vector<Graph> enumerate_trees(int n);     // n <= 12
std::vector<Graph> enumerate_forests(int n);   // n <= 10, includes one-component forests
std::vector<Graph> enumerate_unicyclic(int n); // 3 <= n <= 12
// structural generation: 2-core bases plus pendant attachments; 4 <= n <= 12
std::vector<Graph> enumerate_bicyclic(int n);

// attach PS values and class tags; class "auto" classifies bicyclic graphs
std::vector<EnumerationRecord> make_records(const std::vector<Graph>& graphs,
                                            const std::string& cls, PsCache* cache = nullptr);

// stable descending PS sort with certificate tie-break; returns top_k
std::vector<EnumerationRecord> rank(std::vector<EnumerationRecord> records, std::size_t top_k);

std::string to_csv(const std::vector<EnumerationRecord>& records); // with header
std::string to_json(const std::vector<EnumerationRecord>& records);

} // namespace psum

#endif
