#ifndef PSUM_VERIFY_HPP
#define PSUM_VERIFY_HPP

#include <string>
#include <string_view>
#include <vector>

#include "psum/bigint.hpp"

namespace psum {

struct VerificationReport {
    std::string claim;
    int n = 0;
    Int expected;                               // closed-form value (or bound)
    Int observed;                               // enumerated extremum
    std::string extremal_expected;              // certificate, empty for pure inequalities
    std::vector<std::string> extremal_observed; // certificates attaining the extremum
    bool pass = false;
    std::string status; // "ok", "informational: ...", or "unverifiable: ..."

    bool unverifiable() const { return status.rfind("unverifiable", 0) == 0; }
};

// Machine-check one extremal claim at order n by exhaustive enumeration.
// Known ids: thm1.1 thm1.2 thm1.3 thm1.4 lem2.8 lem2.9 lem2.10 lem4.1
// lem4.2 lem4.3 lem4.5 lem4.6 lem5.1. Unknown ids throw ParseError;
// out-of-range n yields an explicit "unverifiable" report, never a pass.
VerificationReport verify(std::string_view claim, int n);

std::string to_json(const VerificationReport& report);
std::string to_text(const VerificationReport& report);

} // namespace psum

#endif
