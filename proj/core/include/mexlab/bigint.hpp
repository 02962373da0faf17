#pragma once

#include <gmpxx.h>

#include <string>

namespace mexlab {

// Exact signed integers for series coefficients and weighted census sums.
// Partition counts leave the 64-bit range shortly after n = 400, so anything
// that touches a generating function stays arbitrary precision.
using Int = mpz_class;

inline std::string to_string(const Int& v) { return v.get_str(); }

inline bool is_odd(const Int& v) { return mpz_odd_p(v.get_mpz_t()) != 0; }

}  // namespace mexlab
