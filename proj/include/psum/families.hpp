#ifndef PSUM_FAMILIES_HPP
#define PSUM_FAMILIES_HPP

#include <string>
#include <string_view>
#include <vector>

#include "psum/graph.hpp"

namespace psum {

// The three bicyclic bases: two cycles sharing a hub vertex; two disjoint
// cycles joined by a path; and the theta graph.
enum class BicyclicClass { TypeB1, TypeB2, TypeB3 };

std::string to_string(BicyclicClass c);

enum class B1Attach { Hub, Rim };

// Parsed family instance: NAME "(" INT ("," INT)* ")", with B1A taking a
// trailing "hub"|"rim" token.
struct FamilySpec {
    std::string tag;        // P, C, D, DP, B1, B2, B3, B1A, B2P, B3P, B3H
    std::vector<int> args;
    B1Attach attach = B1Attach::Rim; // B1A only
};

FamilySpec parse_family(std::string_view text); // throws ParseError
Graph build_family(const FamilySpec& spec);     // throws ParseError on bad ranges

// --- constructors (deterministic vertex numbering, documented per builder) ---

Graph make_empty(int n);            // n isolated vertices (n >= 0)
Graph make_path(int n);             // vertices 0..n-1, edges {i,i+1}; n >= 1
Graph make_cycle(int n);            // vertices 0..n-1 around the cycle; n >= 3

// cycle C_r on 0..r-1 with a pendant path r..r+s-1 hung off vertex 0
Graph make_D(int r, int s);
// path v_1..v_{n-3} on vertices 0..n-4, triangle on n-3,n-2,n-1 attached
// through the edge {r-1, n-3}; 1 <= r <= n-3
Graph make_Dprime(int n, int r);
// cycles C_p (0..p-1) and C_q sharing hub 0; order p+q-1
Graph make_B1(int p, int q);
// C_p on 0..p-1, C_q on p..p+q-1, joined through r path vertices
// p+q..p+q+r-1 (r = 0: single bridge edge {0,p})
Graph make_B2(int p, int q, int r);
// theta: ends 0 and 1, internal paths of p, q, r vertices numbered
// 2.., in that order; at most one of p,q,r may be 0
Graph make_B3(int p, int q, int r);
// B1(p,q) plus a pendant path of r vertices bridged at the hub (vertex 0)
// or at rim vertex 1 (a degree-2 neighbour of the hub on the first cycle)
Graph make_B1A(int p, int q, int r, B1Attach at);
// B2(3,3,1) with a pendant path of k vertices bridged at the central
// path vertex 6; order 7+k
Graph make_B2P(int k);
// B3(1,1,0) with a pendant path of k vertices bridged at a degree-2
// vertex (B3P) or at a degree-3 vertex (B3H); order 4+k
Graph make_B3P(int k);
Graph make_B3H(int k);

// classification of a connected graph with m = n+1 by its 2-core
BicyclicClass classify_bicyclic(const Graph& g); // throws on non-bicyclic input

} // namespace psum

#endif
