#ifndef PSUM_BOUNDS_HPP
#define PSUM_BOUNDS_HPP

#include <string_view>
#include <vector>

#include "psum/bigint.hpp"

namespace psum {

// Fibonacci under the convention F(0)=0, F(1)=F(2)=1 (pinned by the
// equality of lemma46_gap at n=9 and by the unicyclic maximum at n=3).
const Int& fib(int n); // n >= 0

// Closed-form extremal bounds, keyed by stable claim identifiers shared
// with the CLI:
//   lem2.7  F(n+1)                forest maximum
//   lem2.8  2F(n-1)               forest with >= 2 components
//   lem2.9  6F(n-2)+2F(n-3)       unicyclic maximum
//   lem2.10 6F(n-2)+4F(n-5)       unicyclic second maximum
//   thm1.1  8F(n-3)+12F(n-4)      TypeB1 maximum
//   lem4.1  20F(n-3)              TypeB2 maximum
//   thm1.2  36F(n-5)+24F(n-6)     TypeB2 second maximum
//   thm1.3  14F(n-3)+6F(n-4)      TypeB3 maximum
//   thm1.4  36F(n-5)+24F(n-6)     overall bicyclic second maximum
//   lem4.2  54F(n-6)+18F(n-7)     union of two unicyclic graphs
//   lem4.3  9                     order-4 unicyclic maximum
//   lem4.5  6F(n-2)               forest plus unicyclic union
Int bound(std::string_view claim, int n); // throws ParseError on unknown claim

bool is_known_claim(std::string_view claim); // includes lem4.6 and lem5.1

// RHS - LHS of 54F(n-6)+18F(n-7)+6F(n-4) <= 36F(n-5)+24F(n-6); n >= 9,
// zero exactly at n=9
Int lemma46_gap(int n);

// PS(D(r, n-r)) for r = 3..n-1, computed by the recursive engine.
// Strictly decreasing while the pendant path keeps >= 3 vertices and
// strictly dominated by the head D(3, n-3); the tail can tie or reverse
// (n = 10: 119, 119; n = 11: 189, 190).
std::vector<Int> d_family_monotonicity(int n); // n >= 5

} // namespace psum

#endif
