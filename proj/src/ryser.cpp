#include "psum/ryser.hpp"

#include <bit>

namespace psum {

IntMatrix adjacency_matrix(const Graph& g) {
    IntMatrix m(g.order());
    for (auto [u, v] : g.edges()) {
        m.at(u, v) = 1;
        m.at(v, u) = 1;
    }
    return m;
}

Int permanent(const IntMatrix& m) {
    int d = m.dim;
    if (d > kPermanentDimLimit)
        throw LimitError("permanent: dimension " + std::to_string(d) + " above limit " +
                         std::to_string(kPermanentDimLimit));
    if (d == 0) return 1;
    // per(M) = (-1)^d sum_{S subseteq cols} (-1)^{|S|} prod_i rowsum_i(S),
    // visiting subsets in Gray-code order so each step updates one column.
    std::vector<Int> rowsum(static_cast<std::size_t>(d));
    Int total = 0;
    std::uint32_t prev = 0;
    for (std::uint32_t k = 1; k < (1u << d); ++k) {
        std::uint32_t gray = k ^ (k >> 1);
        std::uint32_t diff = gray ^ prev;
        int col = std::countr_zero(diff);
        bool added = gray & diff;
        for (int i = 0; i < d; ++i) {
            if (added)
                rowsum[static_cast<std::size_t>(i)] += m.at(i, col);
            else
                rowsum[static_cast<std::size_t>(i)] -= m.at(i, col);
        }
        prev = gray;
        Int prod = 1;
        for (int i = 0; i < d && prod != 0; ++i) prod *= rowsum[static_cast<std::size_t>(i)];
        if ((d - std::popcount(gray)) % 2 == 0)
            total += prod;
        else
            total -= prod;
    }
    return total;
}

Polynomial coefficients_permanent(const Graph& g) {
    int n = g.order();
    if (n > kCoefficientOrderLimit)
        throw LimitError("coefficients_permanent: order above limit " +
                         std::to_string(kCoefficientOrderLimit));
    IntMatrix a = adjacency_matrix(g);
    Polynomial p;
    p.coeff.assign(static_cast<std::size_t>(n) + 1, 0);
    for (std::uint32_t s = 0; s < (n == 0 ? 1u : (1u << n)); ++s) {
        int k = std::popcount(s);
        IntMatrix sub(k);
        int ri = 0;
        for (int i = 0; i < n; ++i) {
            if (!((s >> i) & 1u)) continue;
            int cj = 0;
            for (int j = 0; j < n; ++j) {
                if (!((s >> j) & 1u)) continue;
                sub.at(ri, cj) = a.at(i, j);
                ++cj;
            }
            ++ri;
        }
        Int per = permanent(sub);
        if (k % 2 == 0)
            p.coeff[static_cast<std::size_t>(k)] += per;
        else
            p.coeff[static_cast<std::size_t>(k)] -= per;
    }
    return p;
}

Int ps_permanent(const Graph& g) {
    int n = g.order();
    if (n > kPermanentDimLimit)
        throw LimitError("ps_permanent: order above limit " + std::to_string(kPermanentDimLimit));
    IntMatrix m = adjacency_matrix(g);
    for (int i = 0; i < n; ++i) m.at(i, i) += 1;
    return permanent(m);
}

} // namespace psum
