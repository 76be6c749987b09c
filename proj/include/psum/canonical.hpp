#ifndef PSUM_CANONICAL_HPP
#define PSUM_CANONICAL_HPP

#include <string>
#include <vector>

#include "psum/graph.hpp"

namespace psum {

struct CanonicalForm {
    Graph graph;                 // canonically relabeled copy
    std::string certificate;     // graph6 of the canonical copy
    std::vector<int> relabeling; // original vertex v -> canonical label relabeling[v]
};

// Isomorphism-invariant relabeling via degree refinement plus
// backtracking over the refined partition. Two graphs are isomorphic
// iff their certificates are equal. Practical up to order ~32.
CanonicalForm canonical_form(const Graph& g);
std::string certificate(const Graph& g);

} // namespace psum

#endif
