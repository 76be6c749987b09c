#ifndef PSUM_SACHS_HPP
#define PSUM_SACHS_HPP

#include <vector>

#include "psum/bigint.hpp"
#include "psum/graph.hpp"

namespace psum {

// Coefficients b_0..b_n of per(xI - A), b_0 = 1, sign pattern (-1)^k b_k >= 0.
struct Polynomial {
    std::vector<Int> coeff;

    bool operator==(const Polynomial& other) const = default;
};

// Ground-truth engine: direct enumeration of Sachs subgraphs (every
// component a single edge or a cycle), weight 2^(#cycles).
// Order limit 16; larger inputs are rejected.
inline constexpr int kSachsOrderLimit = 16;

// w[k] = sum over Sachs subgraphs on exactly k vertices of 2^(#cycles)
std::vector<Int> sachs_weights(const Graph& g);
Int sachs_weight(const Graph& g, int k);
Polynomial coefficients_sachs(const Graph& g); // b_k = (-1)^k w[k]
Int ps_sachs(const Graph& g);                  // sum_k w[k]

} // namespace psum

#endif
