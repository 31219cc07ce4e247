#include "pathforge/arithmetic.hpp"

#include <numeric>
#include <string>
#include <vector>

#include "pathforge/error.hpp"

namespace pathforge {

Count checked_add(Count a, Count b) {
  Count r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    throw Error(ErrorCode::ArithmeticOverflow,
                "overflow adding " + std::to_string(a) + " + " + std::to_string(b));
  }
  return r;
}

Count checked_mul(Count a, Count b) {
  Count r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw Error(ErrorCode::ArithmeticOverflow,
                "overflow multiplying " + std::to_string(a) + " * " + std::to_string(b));
  }
  return r;
}

Count binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  // Pascal row up to column k; only additions, each checked.
  std::vector<Count> row(static_cast<std::size_t>(k) + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, k); j >= 1; --j) {
      row[static_cast<std::size_t>(j)] =
          checked_add(row[static_cast<std::size_t>(j)], row[static_cast<std::size_t>(j - 1)]);
    }
  }
  return row[static_cast<std::size_t>(k)];
}

Count catalan(int n) {
  if (n < 0) return 0;
  // C(2n, n) - C(2n, n+1) avoids the division.
  return binomial(2 * n, n) - binomial(2 * n, n + 1);
}

namespace {

void require_range(int n, int v) {
  if (n < 1 || v < 0 || v > n) {
    throw Error(ErrorCode::InvalidArgument,
                "coefficient index out of range: n=" + std::to_string(n) + ", v=" + std::to_string(v));
  }
}

}  // namespace

Count narayana(int n, int v) {
  require_range(n, v);
  // (v+1) divides the product; cancel through gcd so the multiply is exact.
  const Count left = binomial(n, v);
  const Count right = binomial(n - 1, v);
  const Count g = std::gcd(left, static_cast<Count>(v + 1));
  return checked_mul(left / g, right / (static_cast<Count>(v + 1) / g));
}

Count bilateral_coeff(int n, int v) {
  require_range(n, v);
  const Count c = binomial(n, v);
  return checked_mul(c, c);
}

}  // namespace pathforge
