#ifndef PSUM_BIGINT_HPP
#define PSUM_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace psum {

// Exact arithmetic everywhere; PS values grow like Fibonacci multiples.
using Int = boost::multiprecision::cpp_int;

// Malformed input (graph6 text, family specs, unknown claim ids).
struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An engine or generator was asked for more than its documented size limit.
struct LimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace psum

#endif
