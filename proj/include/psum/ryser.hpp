#ifndef PSUM_RYSER_HPP
#define PSUM_RYSER_HPP

#include <vector>

#include "psum/bigint.hpp"
#include "psum/graph.hpp"
#include "psum/sachs.hpp"

namespace psum {

// Square integer matrix, row-major.
struct IntMatrix {
    int dim = 0;
    std::vector<Int> data;

    explicit IntMatrix(int d) : dim(d), data(static_cast<std::size_t>(d) * static_cast<std::size_t>(d)) {}
    Int& at(int i, int j) { return data[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim) + static_cast<std::size_t>(j)]; }
    const Int& at(int i, int j) const { return data[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim) + static_cast<std::size_t>(j)]; }
};

inline constexpr int kPermanentDimLimit = 24;
inline constexpr int kCoefficientOrderLimit = 16;

IntMatrix adjacency_matrix(const Graph& g);

// Exact permanent via Ryser's inclusion-exclusion with Gray-code
// incremental row sums; O(2^d * d) big-int operations, d <= 24.
Int permanent(const IntMatrix& m);

// b_k = (-1)^k sum_{|S|=k} per(A[S]); order <= 16
Polynomial coefficients_permanent(const Graph& g);

// PS(G) = per(I + A(G)); order <= 24
Int ps_permanent(const Graph& g);

} // namespace psum

#endif
