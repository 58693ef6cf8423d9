#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "cavityqed/errors.hpp"

namespace cavityqed {

struct QuadSpec {
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  int max_subdivisions = 2000;

  void validate() const;
};

struct SeriesSpec {
  double rel_tol = 1e-10;
  long n_max = 1000000;
  int consecutive_small_terms = 3;
  // Terms at or below this magnitude always count as small.
  double abs_floor = 1e-300;

  void validate() const;
};

// Fixed-size bundle of values integrated together so that one quadrature
// pass serves several tensor components sharing the same nodes.
template <class T, std::size_t N>
struct Components {
  std::array<T, N> v{};

  T& operator[](std::size_t i) { return v[i]; }
  const T& operator[](std::size_t i) const { return v[i]; }

  Components& operator+=(const Components& o) {
    for (std::size_t i = 0; i < N; ++i) v[i] += o.v[i];
    return *this;
  }
  Components& operator-=(const Components& o) {
    for (std::size_t i = 0; i < N; ++i) v[i] -= o.v[i];
    return *this;
  }
  Components& operator*=(double s) {
    for (auto& x : v) x *= s;
    return *this;
  }
  friend Components operator+(Components a, const Components& b) { return a += b; }
  friend Components operator-(Components a, const Components& b) { return a -= b; }
  friend Components operator*(Components a, double s) { return a *= s; }
  friend Components operator*(double s, Components a) { return a *= s; }
};

using Triple = Components<double, 3>;
using CTriple = Components<std::complex<double>, 3>;

// Runtime-sized bundle (one entry per atomic channel). A default-constructed
// value is an empty vector and behaves as zero of any length.
struct DynVector {
  std::vector<double> v;

  DynVector() = default;
  explicit DynVector(std::size_t n) : v(n, 0.0) {}

  std::size_t size() const { return v.size(); }
  double& operator[](std::size_t i) { return v[i]; }
  double operator[](std::size_t i) const { return v[i]; }

  DynVector& operator+=(const DynVector& o) {
    if (v.empty()) v.assign(o.v.size(), 0.0);
    for (std::size_t i = 0; i < o.v.size(); ++i) v[i] += o.v[i];
    return *this;
  }
  DynVector& operator-=(const DynVector& o) {
    if (v.empty()) v.assign(o.v.size(), 0.0);
    for (std::size_t i = 0; i < o.v.size(); ++i) v[i] -= o.v[i];
    return *this;
  }
  DynVector& operator*=(double s) {
    for (auto& x : v) x *= s;
    return *this;
  }
  friend DynVector operator+(DynVector a, const DynVector& b) { return a += b; }
  friend DynVector operator-(DynVector a, const DynVector& b) { return a -= b; }
  friend DynVector operator*(DynVector a, double s) { return a *= s; }
  friend DynVector operator*(double s, DynVector a) { return a *= s; }
};

inline double magnitude(double x) { return std::abs(x); }
inline double magnitude(const DynVector& x) {
  double m = 0.0;
  for (double e : x.v) m = std::max(m, std::abs(e));
  return m;
}
inline double magnitude(const std::complex<double>& x) { return std::abs(x); }
template <class T, std::size_t N>
double magnitude(const Components<T, N>& c) {
  double m = 0.0;
  for (const auto& x : c.v) m = std::max(m, magnitude(x));
  return m;
}

template <class T>
struct QuadResult {
  T value{};
  double error = 0.0;
  int evaluations = 0;
  int subdivisions = 0;
};

struct SeriesResult {
  double value = 0.0;
  long n_used = 0;
};

namespace detail {

// 21-point Kronrod rule with its embedded 10-point Gauss rule.
inline constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
inline constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077600335498636, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
inline constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

template <class T>
struct Panel {
  double a, b;
  T value;
  double error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

template <class T, class F>
Panel<T> gk21(F& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  T fc = f(c);
  T kron = fc * kWgk[10];
  T gauss{};
  for (int j = 0; j < 10; ++j) {
    const double dx = h * kXgk[j];
    T f1 = f(c - dx);
    T f2 = f(c + dx);
    T s = f1 + f2;
    kron += s * kWgk[j];
    if (j % 2 == 1) gauss += s * kWg[j / 2];
  }
  kron *= h;
  gauss *= h;
  double err = magnitude(kron - gauss);
  // Floor the estimate at the rounding level of the panel sum.
  err = std::max(err, 50.0 * std::numeric_limits<double>::epsilon() * magnitude(kron));
  return {a, b, kron, err};
}

}  // namespace detail

// Globally adaptive Gauss-Kronrod (10/21) integration over [a, b], optionally
// pre-split at interior breakpoints.
template <class T, class F>
QuadResult<T> integrate_finite(F&& f, double a, double b, const QuadSpec& spec,
                               const std::vector<double>& breakpoints = {}) {
  spec.validate();
  if (!(a < b)) {
    if (a == b) return {};
    throw DomainError("integrate_finite: require a < b");
  }
  std::vector<double> cuts{a};
  for (double p : breakpoints) {
    if (p > a && p < b) cuts.push_back(p);
  }
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());

  std::priority_queue<detail::Panel<T>> heap;
  T total{};
  double total_err = 0.0;
  int evals = 0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (!(cuts[i] < cuts[i + 1])) continue;
    auto p = detail::gk21<T>(f, cuts[i], cuts[i + 1]);
    evals += 21;
    total += p.value;
    total_err += p.error;
    heap.push(p);
  }
  int subdivisions = 0;
  auto target = [&] { return std::max(spec.abs_tol, spec.rel_tol * magnitude(total)); };
  while (total_err > target()) {
    if (subdivisions >= spec.max_subdivisions) {
      throw ConvergenceError("integrate_finite: subdivision limit reached", magnitude(total),
                             total_err);
    }
    auto worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b) ||
        (worst.b - worst.a) < 1e3 * std::numeric_limits<double>::epsilon() *
                                  std::max(std::abs(worst.a), std::abs(worst.b))) {
      // Panel cannot be refined further in double precision.
      if (worst.error <= 10.0 * target() / std::max<std::size_t>(heap.size(), 1)) break;
      throw ConvergenceError("integrate_finite: panel width at rounding limit", magnitude(total),
                             total_err);
    }
    heap.pop();
    auto left = detail::gk21<T>(f, worst.a, mid);
    auto right = detail::gk21<T>(f, mid, worst.b);
    evals += 42;
    ++subdivisions;
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }
  // Re-sum from the panels to shed the drift of the running total.
  T fresh{};
  double err = 0.0;
  while (!heap.empty()) {
    fresh += heap.top().value;
    err += heap.top().error;
    heap.pop();
  }
  return {fresh, err, evals, subdivisions};
}

// Integral of g(q) / sqrt(1 - q^2) over [0, 1], computed as the integral of
// g(sin t) over [0, pi/2].
template <class T, class G>
QuadResult<T> integrate_unit_sqrt_weight(G&& g, const QuadSpec& spec) {
  auto h = [&](double t) { return g(std::sin(t)); };
  return integrate_finite<T>(h, 0.0, 0.5 * M_PI, spec);
}

// Integral over [a, inf) of f, where |f(x)| <= C exp(-scale x). The range is
// cut where the envelope falls below abs_tol / 10, then extended panel by
// panel until the extension is negligible.
template <class T, class F>
QuadResult<T> integrate_semi_infinite_damped(F&& f, double a, double damping_scale,
                                             const QuadSpec& spec,
                                             const std::vector<double>& breakpoints = {}) {
  spec.validate();
  if (!(damping_scale > 0.0) || !std::isfinite(damping_scale)) {
    throw DomainError("integrate_semi_infinite_damped: damping scale must be positive");
  }
  const double width = std::log(10.0 / spec.abs_tol) / damping_scale;
  double cut = a + width;
  auto res = integrate_finite<T>(f, a, cut, spec, breakpoints);
  const double step = std::log(10.0) * 4.0 / damping_scale;
  for (int ext = 0; ext < 200; ++ext) {
    QuadSpec tail_spec = spec;
    tail_spec.abs_tol = std::max(spec.abs_tol, spec.rel_tol * magnitude(res.value)) * 0.1;
    auto tail = integrate_finite<T>(f, cut, cut + step, tail_spec);
    res.value += tail.value;
    res.error += tail.error;
    res.evaluations += tail.evaluations;
    res.subdivisions += tail.subdivisions;
    cut += step;
    if (magnitude(tail.value) <= 0.1 * std::max(spec.abs_tol, spec.rel_tol * magnitude(res.value))) {
      return res;
    }
  }
  throw ConvergenceError("integrate_semi_infinite_damped: tail did not decay", magnitude(res.value),
                         res.error);
}

// Sum term(n) for n = 1, 2, ... until consecutive_small_terms successive
// terms are each below rel_tol * |partial sum| (or abs_floor), with the tail
// bounded geometrically from the ratio of successive term magnitudes.
SeriesResult sum_until_converged(const std::function<double(long)>& term, const SeriesSpec& spec);

// Wynn epsilon extrapolation of a sequence of partial sums. Returns the
// estimate from the deepest usable even column.
std::complex<double> wynn_epsilon(const std::vector<std::complex<double>>& partial_sums);
double wynn_epsilon(const std::vector<double>& partial_sums);

}  // namespace cavityqed
