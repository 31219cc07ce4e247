#include "pathforge/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "pathforge/weighting.hpp"

namespace pathforge {

const char* to_string(Scheme scheme) {
  return scheme == Scheme::BiBanded ? "bibanded" : "peaks";
}

Scheme parse_scheme(std::string_view text) {
  if (text == "bibanded") return Scheme::BiBanded;
  if (text == "peaks" || text == "peak-counting" || text == "peakcounting") {
    return Scheme::PeakCounting;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown scheme '" + std::string(text) + "'");
}

Count WeightPolynomial::coefficient(int v) const {
  const auto it = coefficients.find(v);
  return it == coefficients.end() ? 0 : it->second;
}

Count WeightPolynomial::total() const {
  Count sum = 0;
  for (const auto& [v, c] : coefficients) sum = checked_add(sum, c);
  return sum;
}

void WeightPolynomial::add(int v, Count amount) {
  if (amount == 0) return;
  auto& slot = coefficients[v];
  slot = checked_add(slot, amount);
}

namespace {

void append_term(std::string& out, Count coeff, const std::string& monomial) {
  if (!out.empty()) out += " + ";
  if (coeff != 1 || monomial.empty()) out += std::to_string(coeff);
  out += monomial;
}

}  // namespace

std::string to_string(const WeightPolynomial& poly) {
  std::string out;
  if (poly.scheme == Scheme::BiBanded) {
    // Ascending v is descending powers of a.
    for (const auto& [v, c] : poly.coefficients) {
      BiBandedMonomial m{2 * poly.n - 2 * v, 2 * v, poly.n};
      append_term(out, c, m.exp_a == 0 && m.exp_b == 0 ? "" : to_string(m));
    }
  } else {
    for (auto it = poly.coefficients.rbegin(); it != poly.coefficients.rend(); ++it) {
      append_term(out, it->second, to_string(PeakMonomial{it->first + 1, poly.n}));
    }
  }
  return out.empty() ? "0" : out;
}

namespace {

void check_n(int n, const EnumerationOptions& options) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be at least 1, got " + std::to_string(n));
  if (n > options.max_n) {
    throw Error(ErrorCode::LimitExceeded, "n=" + std::to_string(n) + " exceeds the enumeration limit " +
                                              std::to_string(options.max_n));
  }
}

/// Depth-first walk over balanced words extending a fixed prefix. `steps` and
/// `heights` must already hold the prefix (heights has one more entry).
class Walker {
 public:
  Walker(int n, Lattice lattice) : n_(n), lattice_(lattice) {
    steps_.reserve(static_cast<std::size_t>(2 * n));
    heights_.reserve(static_cast<std::size_t>(2 * n + 1));
  }

  /// Resets to `prefix`; returns false if the prefix cannot be extended.
  bool reset(std::span<const Step> prefix) {
    steps_.clear();
    heights_.assign(1, 0);
    ups_ = downs_ = 0;
    for (Step s : prefix) {
      if (!can_take(s)) return false;
      push(s);
    }
    return true;
  }

  /// Calls fn(PathView) for each completion, or for each extension to exactly
  /// `depth` steps when depth < 2n.
  template <class Fn>
  void run(std::size_t depth, Fn& fn) {
    if (steps_.size() == depth) {
      fn(PathView{steps_, heights_});
      return;
    }
    for (Step s : {Step::Up, Step::Down}) {
      if (!can_take(s)) continue;
      push(s);
      run(depth, fn);
      pop();
    }
  }

 private:
  bool can_take(Step s) const {
    if (s == Step::Up) return ups_ < n_;
    if (downs_ >= n_) return false;
    return lattice_ == Lattice::Bilateral || heights_.back() > 0;
  }
  void push(Step s) {
    (s == Step::Up ? ups_ : downs_) += 1;
    heights_.push_back(heights_.back() + delta(s));
    steps_.push_back(s);
  }
  void pop() {
    (steps_.back() == Step::Up ? ups_ : downs_) -= 1;
    steps_.pop_back();
    heights_.pop_back();
  }

  int n_;
  Lattice lattice_;
  std::vector<Step> steps_;
  std::vector<int> heights_;
  int ups_ = 0;
  int downs_ = 0;
};

std::vector<std::vector<Step>> prefixes(int n, Lattice lattice, std::size_t depth) {
  std::vector<std::vector<Step>> out;
  Walker walker(n, lattice);
  walker.reset({});
  auto collect = [&](PathView p) { out.emplace_back(p.steps.begin(), p.steps.end()); };
  walker.run(depth, collect);
  return out;
}

int monomial_key(PathView p, Scheme scheme) {
  return scheme == Scheme::BiBanded ? bibanded_monomial(p).v() : peak_monomial(p).v();
}

}  // namespace

void for_each_path(int n, Lattice lattice, const PathVisitor& visit,
                   const EnumerationOptions& options) {
  check_n(n, options);
  Walker walker(n, lattice);
  walker.reset({});
  walker.run(static_cast<std::size_t>(2 * n), visit);
}

std::vector<Path> enumerate_paths(int n, Lattice lattice, const EnumerationOptions& options) {
  std::vector<Path> out;
  for_each_path(n, lattice, [&](PathView p) { out.push_back(to_path(p)); }, options);
  return out;
}

WeightPolynomial weight_polynomial(int n, Lattice lattice, Scheme scheme,
                                   const EnumerationOptions& options) {
  check_n(n, options);
  unsigned threads = options.threads;
  if (threads == 0) threads = n >= 11 ? std::max(1u, std::thread::hardware_concurrency()) : 1u;

  const std::size_t depth = std::min<std::size_t>(static_cast<std::size_t>(2 * n), threads > 1 ? 8 : 0);
  const auto tasks = prefixes(n, lattice, depth);
  std::vector<std::vector<Count>> partial(tasks.size(),
                                          std::vector<Count>(static_cast<std::size_t>(n) + 1, 0));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    try {
      Walker walker(n, lattice);
      for (std::size_t t = next++; t < tasks.size(); t = next++) {
        if (!walker.reset(tasks[t])) continue;
        auto& counts = partial[t];
        auto tally = [&](PathView p) {
          const int v = monomial_key(p, scheme);
          if (v < 0 || v > n) {
            throw Error(ErrorCode::InternalConsistency, "monomial key " + std::to_string(v) +
                                                            " outside 0.." + std::to_string(n));
          }
          auto& slot = counts[static_cast<std::size_t>(v)];
          slot = checked_add(slot, 1);
        };
        walker.run(static_cast<std::size_t>(2 * n), tally);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };

  const auto workers = std::min<std::size_t>(threads, tasks.size());
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  WeightPolynomial poly{scheme, n, {}};
  for (const auto& counts : partial) {
    for (int v = 0; v <= n; ++v) poly.add(v, counts[static_cast<std::size_t>(v)]);
  }
  return poly;
}

namespace {

WeightPolynomial closed_form(int n, Lattice lattice, Scheme scheme, int v_max) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be at least 1, got " + std::to_string(n));
  WeightPolynomial poly{scheme, n, {}};
  for (int v = 0; v <= v_max; ++v) {
    poly.add(v, lattice == Lattice::Dyck ? narayana(n, v) : bilateral_coeff(n, v));
  }
  return poly;
}

}  // namespace

WeightPolynomial closed_form_polynomial(int n, Lattice lattice, Scheme scheme) {
  return closed_form(n, lattice, scheme, lattice == Lattice::Dyck ? n - 1 : n);
}

WeightPolynomial stated_closed_form_polynomial(int n, Lattice lattice, Scheme scheme) {
  return closed_form(n, lattice, scheme, n - 1);
}

std::vector<VerifyReport> verify(int n_min, int n_max, Lattice lattice, Scheme scheme,
                                 const EnumerationOptions& options) {
  if (n_min < 1 || n_max < n_min) {
    throw Error(ErrorCode::InvalidArgument, "invalid range " + std::to_string(n_min) + ".." +
                                                std::to_string(n_max));
  }
  std::vector<VerifyReport> reports;
  for (int n = n_min; n <= n_max; ++n) {
    VerifyReport r;
    r.n = n;
    r.lattice = lattice;
    r.scheme = scheme;
    const auto start = std::chrono::steady_clock::now();
    try {
      r.enumerated = weight_polynomial(n, lattice, scheme, options);
      r.closed_form = closed_form_polynomial(n, lattice, scheme);
      auto stated = stated_closed_form_polynomial(n, lattice, scheme);
      if (!(stated == r.closed_form)) r.stated_form = std::move(stated);
      r.path_count = r.enumerated.total();
      r.match = r.enumerated == r.closed_form;
    } catch (const Error& e) {
      r.error = e.code();
      r.error_message = e.what();
      r.match = false;
    }
    r.elapsed = std::chrono::steady_clock::now() - start;
    reports.push_back(std::move(r));
  }
  return reports;
}

}  // namespace pathforge
