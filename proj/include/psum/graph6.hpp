#ifndef PSUM_GRAPH6_HPP
#define PSUM_GRAPH6_HPP

#include <string>
#include <string_view>

#include "psum/graph.hpp"

namespace psum {

// graph6 text format, bit-exact: 6-bit chunks of the column-major
// upper-triangular adjacency bitstring, each offset by 63.
std::string encode_graph6(const Graph& g);
Graph decode_graph6(std::string_view text); // throws ParseError

} // namespace psum

#endif
