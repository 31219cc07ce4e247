#pragma once

#include <cstdint>

namespace pathforge {

/// Exact non-negative count. Every operation that could wrap throws
/// Error{ArithmeticOverflow} instead.
using Count = std::uint64_t;

Count checked_add(Count a, Count b);
Count checked_mul(Count a, Count b);

/// Binomial coefficient; 0 when k < 0 or k > n.
Count binomial(int n, int k);
Count catalan(int n);

/// N(n,v) = C(n,v) C(n-1,v) / (v+1), the number of Dyck paths of length 2n
/// with v+1 peaks. Requires 0 <= v <= n.
Count narayana(int n, int v);
/// C(n,v)^2. Requires 0 <= v <= n.
Count bilateral_coeff(int n, int v);

}  // namespace pathforge
