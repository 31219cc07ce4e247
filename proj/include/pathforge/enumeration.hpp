#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pathforge/arithmetic.hpp"
#include "pathforge/error.hpp"
#include "pathforge/path.hpp"

namespace pathforge {

enum class Scheme { BiBanded, PeakCounting };

const char* to_string(Scheme scheme);
Scheme parse_scheme(std::string_view text);

inline constexpr int kDefaultMaxN = 14;

struct EnumerationOptions {
  int max_n = kDefaultMaxN;
  /// Worker threads for weight_polynomial; 0 picks automatically (one thread
  /// for small n). Results do not depend on this value.
  unsigned threads = 0;
};

/// Coefficients keyed by v: a^{2n-2v} b^{2v} (BiBanded) or m^{v+1}
/// (PeakCounting). Only nonzero coefficients are stored.
struct WeightPolynomial {
  Scheme scheme = Scheme::BiBanded;
  int n = 0;
  std::map<int, Count> coefficients;

  Count coefficient(int v) const;
  /// Sum of coefficients, i.e. the number of paths.
  Count total() const;
  /// Adds `amount` to the coefficient of v, dropping zero entries.
  void add(int v, Count amount);

  friend bool operator==(const WeightPolynomial&, const WeightPolynomial&) = default;
};

/// "a^6 + 3a^4b^2 + a^2b^4" (descending a-powers) or "m^3 + 3m^2 + m".
std::string to_string(const WeightPolynomial& poly);

using PathVisitor = std::function<void(PathView)>;

/// Visits every path of length 2n on the lattice once, lexicographically with
/// Up < Down. Dyck enumeration prunes prefixes that dip below zero.
void for_each_path(int n, Lattice lattice, const PathVisitor& visit,
                   const EnumerationOptions& options = {});
std::vector<Path> enumerate_paths(int n, Lattice lattice, const EnumerationOptions& options = {});

/// Weight polynomial by exhaustive enumeration.
WeightPolynomial weight_polynomial(int n, Lattice lattice, Scheme scheme,
                                   const EnumerationOptions& options = {});

/// Closed form with c_{n,v} = N(n,v) on the Dyck lattice (v = 0..n-1) and
/// C(n,v)^2 on the bilateral lattice (v = 0..n).
WeightPolynomial closed_form_polynomial(int n, Lattice lattice, Scheme scheme);
/// Closed form with the summation range v = 0..n-1 on both lattices.
WeightPolynomial stated_closed_form_polynomial(int n, Lattice lattice, Scheme scheme);

struct VerifyReport {
  int n = 0;
  Lattice lattice = Lattice::Dyck;
  Scheme scheme = Scheme::BiBanded;
  WeightPolynomial enumerated;
  WeightPolynomial closed_form;
  /// Present only when the v <= n-1 form differs from closed_form.
  std::optional<WeightPolynomial> stated_form;
  bool match = false;
  Count path_count = 0;
  std::chrono::nanoseconds elapsed{0};
  std::optional<ErrorCode> error;
  std::string error_message;
};

/// One report per n in [n_min, n_max]. Per-item limit and overflow errors are
/// recorded in the report and the sweep continues.
std::vector<VerifyReport> verify(int n_min, int n_max, Lattice lattice, Scheme scheme,
                                 const EnumerationOptions& options = {});

}  // namespace pathforge
