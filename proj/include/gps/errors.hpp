#pragma once

#include <stdexcept>
#include <string>

namespace gps {

// Error taxonomy mirrors the CLI exit codes: parse errors exit 2,
// budget exhaustion exits 3, verification failures exit 4.
struct parse_error : std::runtime_error {
    int line = 0;
    int column = 0;
    parse_error(const std::string& msg, int line_, int col_)
        : std::runtime_error(msg + " at " + std::to_string(line_) + ":" + std::to_string(col_)),
          line(line_), column(col_) {}
};

struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a decision would have to read series terms beyond the
// recorded truncation order.
struct truncation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Anything that indicates inconsistent input (basis mismatch, signature
// mismatch, undivisible monomial, non-unit inversion, ...).
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A comparison that interval refinement cannot certify within the depth
// budget; signals a dishonest independence declaration in the basis.
struct unresolvable_comparison : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace gps
