#include "psum/bounds.hpp"

#include <mutex>
#include <stdexcept>
#include <string>

#include "psum/families.hpp"
#include "psum/recursive.hpp"

namespace psum {

const Int& fib(int n) {
    if (n < 0) throw std::out_of_range("fib: negative index");
    static std::vector<Int> table = [] {
        std::vector<Int> t{0, 1};
        while (t.size() < 512) t.push_back(t[t.size() - 1] + t[t.size() - 2]);
        return t;
    }();
    if (static_cast<std::size_t>(n) >= table.size())
        throw std::out_of_range("fib: index above table size");
    return table[static_cast<std::size_t>(n)];
}

namespace {

// guarded Fibonacci: formulas below never reach negative indices inside
// their validity ranges, but bound() is callable outside them for reporting
Int f(int n) { return n < 0 ? Int(0) : fib(n); }

} // namespace

Int bound(std::string_view claim, int n) {
    if (claim == "lem2.7") return f(n + 1);
    if (claim == "lem2.8") return 2 * f(n - 1);
    if (claim == "lem2.9") return 6 * f(n - 2) + 2 * f(n - 3);
    if (claim == "lem2.10") return 6 * f(n - 2) + 4 * f(n - 5);
    if (claim == "thm1.1") return 8 * f(n - 3) + 12 * f(n - 4);
    if (claim == "lem4.1") return 20 * f(n - 3);
    if (claim == "thm1.2" || claim == "thm1.4") return 36 * f(n - 5) + 24 * f(n - 6);
    if (claim == "thm1.3") return 14 * f(n - 3) + 6 * f(n - 4);
    if (claim == "lem4.2") return 54 * f(n - 6) + 18 * f(n - 7);
    if (claim == "lem4.3") return 9;
    if (claim == "lem4.5") return 6 * f(n - 2);
    throw ParseError("unknown claim id '" + std::string(claim) + "'");
}

bool is_known_claim(std::string_view claim) {
    static const char* kIds[] = {"lem2.7", "lem2.8", "lem2.9", "lem2.10", "thm1.1",
                                 "lem4.1", "thm1.2", "thm1.3", "thm1.4", "lem4.2",
                                 "lem4.3", "lem4.5", "lem4.6", "lem5.1"};
    for (auto* id : kIds)
        if (claim == id) return true;
    return false;
}

Int lemma46_gap(int n) {
    if (n < 9) throw std::out_of_range("lemma46_gap: n >= 9 required");
    return (36 * fib(n - 5) + 24 * fib(n - 6)) -
           (54 * fib(n - 6) + 18 * fib(n - 7) + 6 * fib(n - 4));
}

std::vector<Int> d_family_monotonicity(int n) {
    if (n < 5) throw std::out_of_range("d_family_monotonicity: n >= 5 required");
    std::vector<Int> out;
    for (int r = 3; r <= n - 1; ++r) out.push_back(ps_recursive(make_D(r, n - r)));
    return out;
}

} // namespace psum
