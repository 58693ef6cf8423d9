#include "cavityqed/quadrature.hpp"

#include <cmath>
#include <vector>

namespace cavityqed {

void QuadSpec::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || max_subdivisions < 1) {
    throw ConfigError("QuadSpec: require rel_tol > 0, abs_tol > 0, max_subdivisions >= 1");
  }
}

void SeriesSpec::validate() const {
  if (!(rel_tol > 0.0) || n_max < 1 || consecutive_small_terms < 1 || abs_floor < 0.0) {
    throw ConfigError("SeriesSpec: require rel_tol > 0, n_max >= 1, consecutive_small_terms >= 1");
  }
}

SeriesResult sum_until_converged(const std::function<double(long)>& term, const SeriesSpec& spec) {
  spec.validate();
  double sum = 0.0;
  double prev = 0.0;
  int small = 0;
  for (long n = 1; n <= spec.n_max; ++n) {
    const double t = term(n);
    sum += t;
    const double a = std::abs(t);
    // Geometric bound on the remaining tail from the ratio of successive terms.
    const double rho = n > 1 && prev > 0.0 ? a / prev : 1.0;
    const double tail = rho < 1.0 ? a * rho / (1.0 - rho) : a;
    prev = a;
    if (a <= spec.abs_floor || (a <= spec.rel_tol * std::abs(sum) && tail <= spec.rel_tol * std::abs(sum))) {
      if (++small >= spec.consecutive_small_terms) return {sum, n};
    } else {
      small = 0;
    }
  }
  throw ConvergenceError("sum_until_converged: n_max reached", sum, 0.0);
}

namespace {

template <class T>
T wynn_impl(const std::vector<T>& s) {
  const std::size_t n = s.size();
  if (n == 0) return T{};
  if (n < 3) return s.back();
  // Columns of the epsilon table; only even columns are estimates.
  std::vector<T> prev(n + 1, T{});
  std::vector<T> cur(s);
  T best = s.back();
  int column = 0;
  while (cur.size() > 1) {
    std::vector<T> next(cur.size() - 1);
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      const T diff = cur[i + 1] - cur[i];
      const double scale = std::max(std::abs(cur[i + 1]), 1e-300);
      if (std::abs(diff) <= 1e-15 * scale) {
        // Differences at rounding level: the table has converged (or broken down).
        return column % 2 == 0 ? cur[i + 1] : best;
      }
      next[i] = prev[i + 1] + T(1.0) / diff;
    }
    prev = std::move(cur);
    cur = std::move(next);
    ++column;
    if (column % 2 == 0) {
      if (!std::isfinite(std::abs(cur.back()))) return best;
      best = cur.back();
    }
  }
  return best;
}

}  // namespace

std::complex<double> wynn_epsilon(const std::vector<std::complex<double>>& partial_sums) {
  return wynn_impl(partial_sums);
}

double wynn_epsilon(const std::vector<double>& partial_sums) { return wynn_impl(partial_sums); }

}  // namespace cavityqed
