#include "cavityqed/green_tensor.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cavityqed/errors.hpp"
#include "cavityqed/special_functions.hpp"

namespace cavityqed {

namespace {

constexpr double kPi = M_PI;

void check_k(double k) {
  if (!(k > 0.0) || !std::isfinite(k)) {
    throw DomainError("wavenumber must be a positive finite number");
  }
}

// Sum over odd n >= first_odd of term(n).
double odd_tail(long first_odd, const std::function<double(long)>& term, const SeriesSpec& spec) {
  return sum_until_converged([&](long j) { return term(first_odd + 2 * (j - 1)); }, spec).value;
}

long first_odd_above(long n) { return (n % 2 == 0) ? n + 1 : n + 2; }

}  // namespace

void CavityGeometry::validate() const {
  if (!(r > 0.0) || !(d > 0.0) || !std::isfinite(r) || !std::isfinite(d)) {
    throw DomainError("CavityGeometry: require r > 0 and d > 0");
  }
}

CartesianGreen real_part(const CartesianGreenC& g) {
  return {g.par.real(), g.perp.real(), g.g00.real()};
}

CartesianGreen imag_part(const CartesianGreenC& g) {
  return {g.par.imag(), g.perp.imag(), g.g00.imag()};
}

double threshold_distance(const CavityGeometry& geom, double k) {
  const double step = kPi / geom.d;
  const double n = std::max(1.0, std::round(k / step));
  return std::abs(k - n * step);
}

void check_threshold(const CavityGeometry& geom, double k, const GreenOptions& opts) {
  geom.validate();
  check_k(k);
  const double step = kPi / geom.d;
  const double dist = threshold_distance(geom, k);
  if (dist < opts.guard_band * step) {
    const double n = std::max(1.0, std::round(k / step));
    std::ostringstream msg;
    msg << "k*d = " << k * geom.d << " lies within the guard band of the cavity threshold n*pi"
        << " (n = " << static_cast<long>(n) << ")";
    throw ThresholdError(msg.str(), k, n * step);
  }
}

CartesianGreen im_green_modesum(const CavityGeometry& geom, double k, const GreenOptions& opts) {
  check_threshold(geom, k, opts);
  const double r = geom.r, d = geom.d, k2 = k * k;
  const long n_prop = static_cast<long>(std::floor(k * d / kPi));
  CartesianGreen g;
  for (long n = 1; n <= n_prop; n += 2) {
    const double kn = n * kPi / d;
    const double p2 = k2 - kn * kn;
    const double p = std::sqrt(p2);
    const double c = -2.0 / (4.0 * d * k2);
    const double jz = j0(r * p);
    const double jx = p2 * j1_over_x(r * p);  // (p/r) J1(r p)
    g.par += c * (kn * kn * jz + jx);
    g.perp += c * (k2 * jz - jx);
  }
  g.g00 = -j0(k * r) / (4.0 * d);
  const long n_prop2 = static_cast<long>(std::floor(k * d / (2.0 * kPi)));
  for (long n = 1; n <= n_prop2; ++n) {
    const double kn = 2.0 * n * kPi / d;
    const double p2 = k2 - kn * kn;
    g.g00 -= p2 * j0(r * std::sqrt(p2)) / (2.0 * k2 * d);
  }
  return g;
}

CartesianGreen k2_re_green_modesum(const CavityGeometry& geom, double k, const GreenOptions& opts) {
  check_threshold(geom, k, opts);
  const double r = geom.r, d = geom.d, k2 = k * k;
  const long n_prop = static_cast<long>(std::floor(k * d / kPi));
  CartesianGreen g;
  for (long n = 1; n <= n_prop; n += 2) {
    const double kn = n * kPi / d;
    const double p = std::sqrt(k2 - kn * kn);
    const double c = -2.0 / (4.0 * d);
    const double yz = y0(r * p);
    const double yx = p / r * y1(r * p);
    g.par -= c * (kn * kn * yz + yx);
    g.perp -= c * (k2 * yz - yx);
  }
  const long first = first_odd_above(n_prop);
  const double ce = -2.0 / (2.0 * kPi * d);
  g.par += odd_tail(
      first,
      [&](long n) {
        const double kn = n * kPi / d;
        const double q = std::sqrt(kn * kn - k2);
        return ce * (kn * kn * k0(r * q) + q / r * k1(r * q));
      },
      opts.series);
  g.perp += odd_tail(
      first,
      [&](long n) {
        const double kn = n * kPi / d;
        const double q = std::sqrt(kn * kn - k2);
        return ce * (k2 * k0(r * q) - q / r * k1(r * q));
      },
      opts.series);

  g.g00 = k2 * y0(k * r) / (4.0 * d);
  const long n_prop2 = static_cast<long>(std::floor(k * d / (2.0 * kPi)));
  for (long n = 1; n <= n_prop2; ++n) {
    const double kn = 2.0 * n * kPi / d;
    const double p2 = k2 - kn * kn;
    g.g00 += p2 * y0(r * std::sqrt(p2)) / (2.0 * d);
  }
  g.g00 += sum_until_converged(
               [&](long j) {
                 const double kn = 2.0 * (n_prop2 + j) * kPi / d;
                 const double q2 = kn * kn - k2;
                 return q2 * k0(r * std::sqrt(q2)) / (kPi * d);
               },
               opts.series)
               .value;
  return g;
}

CartesianGreen re_green_modesum(const CavityGeometry& geom, double k, const GreenOptions& opts) {
  CartesianGreen g = k2_re_green_modesum(geom, k, opts);
  const double inv = 1.0 / (k * k);
  return {g.par * inv, g.perp * inv, g.g00 * inv};
}

CartesianGreenC green_modesum(const CavityGeometry& geom, double k, const GreenOptions& opts) {
  const CartesianGreen re = re_green_modesum(geom, k, opts);
  const CartesianGreen im = im_green_modesum(geom, k, opts);
  return {{re.par, im.par}, {re.perp, im.perp}, {re.g00, im.g00}};
}

CartesianGreenC free_space_green(double r, double k) {
  if (!(r > 0.0)) throw DomainError("free_space_green: r must be > 0");
  check_k(k);
  using C = std::complex<double>;
  const C i(0.0, 1.0);
  const C pref = std::exp(i * (k * r)) / (-4.0 * kPi * k * k);
  const C par = pref * (2.0 / (r * r * r) - 2.0 * i * k / (r * r));
  const C perp = pref * (-1.0 / (r * r * r) + i * k / (r * r) + k * k / r);
  return {par, perp, perp};
}

CartesianGreen free_space_green_imag(double r, double u) {
  if (!(r > 0.0)) throw DomainError("free_space_green_imag: r must be > 0");
  check_k(u);
  const double e = std::exp(-u * r) / (u * u);
  const double r2 = r * r, r3 = r2 * r;
  const double pm = e / (8.0 * kPi) * (1.0 / r3 + u / r2 - u * u / r);
  const double pp = e / (8.0 * kPi) * (3.0 / r3 + 3.0 * u / r2 + u * u / r);
  const double g00 = -e / (4.0 * kPi) * (1.0 / r3 + u / r2 + u * u / r);
  return {pm + pp, pm - pp, g00};
}

CartesianGreen d_dk_k2_re_free_space(double r, double k) {
  if (!(r > 0.0)) throw DomainError("d_dk_k2_re_free_space: r must be > 0");
  check_k(k);
  using C = std::complex<double>;
  const C i(0.0, 1.0);
  const C e = std::exp(i * (k * r)) / (-4.0 * kPi);
  const double r2 = r * r, r3 = r2 * r;
  const C p_par = 2.0 / r3 - 2.0 * i * k / r2;
  const C dp_par = -2.0 * i / r2;
  const C p_perp = -1.0 / r3 + i * k / r2 + k * k / r;
  const C dp_perp = i / r2 + 2.0 * k / r;
  const double par = (e * (i * r * p_par + dp_par)).real();
  const double perp = (e * (i * r * p_perp + dp_perp)).real();
  return {par, perp, perp};
}

CartesianGreen d_dk_k2_re_green_analytic(const CavityGeometry& geom, double k,
                                         const GreenOptions& opts) {
  check_threshold(geom, k, opts);
  const double r = geom.r, d = geom.d, k2 = k * k, k3 = k2 * k;
  const long n_prop = static_cast<long>(std::floor(k * d / kPi));
  CartesianGreen g;
  for (long n = 1; n <= n_prop; n += 2) {
    const double kn = n * kPi / d;
    const double p = std::sqrt(k2 - kn * kn);
    const double c = -2.0 / (4.0 * d);
    const double yz = y0(r * p), yo = y1(r * p);
    g.par -= c * (-kn * kn * r * k * yo / p + k * yz);
    g.perp -= c * (k * yz - r * k3 * yo / p);
  }
  const long first = first_odd_above(n_prop);
  const double ce = -2.0 / (2.0 * kPi * d);
  g.par += odd_tail(
      first,
      [&](long n) {
        const double kn = n * kPi / d;
        const double q = std::sqrt(kn * kn - k2);
        return ce * (kn * kn * r * k * k1(r * q) / q + k * k0(r * q));
      },
      opts.series);
  g.perp += odd_tail(
      first,
      [&](long n) {
        const double kn = n * kPi / d;
        const double q = std::sqrt(kn * kn - k2);
        return ce * (k * k0(r * q) + r * k3 * k1(r * q) / q);
      },
      opts.series);

  g.g00 = (2.0 * k * y0(k * r) - k2 * r * y1(k * r)) / (4.0 * d);
  const long n_prop2 = static_cast<long>(std::floor(k * d / (2.0 * kPi)));
  for (long n = 1; n <= n_prop2; ++n) {
    const double kn = 2.0 * n * kPi / d;
    const double p = std::sqrt(k2 - kn * kn);
    g.g00 += (2.0 * k * y0(r * p) - r * k * p * y1(r * p)) / (2.0 * d);
  }
  g.g00 += sum_until_converged(
               [&](long j) {
                 const double kn = 2.0 * (n_prop2 + j) * kPi / d;
                 const double q = std::sqrt(kn * kn - k2);
                 return (-2.0 * k * k0(r * q) + r * k * q * k1(r * q)) / (kPi * d);
               },
               opts.series)
               .value;
  return g;
}

CartesianGreen d_dk_k2_re_green_fd(const CavityGeometry& geom, double k, const GreenOptions& opts) {
  check_threshold(geom, k, opts);
  // The stencil must stay on one side of the nearest threshold.
  const double dist = threshold_distance(geom, k);
  const double h = std::min(1e-3 * k, dist / 32.0);
  auto f = [&](double kk) { return k2_re_green_modesum(geom, kk, opts); };
  auto central = [&](double step) {
    const CartesianGreen a = f(k + step), b = f(k - step);
    const double s = 0.5 / step;
    return CartesianGreen{(a.par - b.par) * s, (a.perp - b.perp) * s, (a.g00 - b.g00) * s};
  };
  // Two Richardson levels on steps h, h/2, h/4.
  const CartesianGreen d1 = central(h), d2 = central(0.5 * h), d3 = central(0.25 * h);
  auto rich = [](double c1, double c2, double c3) {
    const double e1 = (4.0 * c2 - c1) / 3.0, e2 = (4.0 * c3 - c2) / 3.0;
    return (16.0 * e2 - e1) / 15.0;
  };
  return {rich(d1.par, d2.par, d3.par), rich(d1.perp, d2.perp, d3.perp), rich(d1.g00, d2.g00, d3.g00)};
}

DerivativeResult d_dk_k2_re_green(const CavityGeometry& geom, double k, const GreenOptions& opts,
                                  double tolerance) {
  DerivativeResult res;
  res.analytic = d_dk_k2_re_green_analytic(geom, k, opts);
  res.finite_difference = d_dk_k2_re_green_fd(geom, k, opts);
  const double a[3] = {res.analytic.par, res.analytic.perp, res.analytic.g00};
  const double b[3] = {res.finite_difference.par, res.finite_difference.perp,
                       res.finite_difference.g00};
  double scale = 0.0;
  for (double x : a) scale = std::max(scale, std::abs(x));
  for (int c = 0; c < 3; ++c) {
    // Components passing through zero are judged against the tensor scale.
    const double ref = std::max(std::abs(a[c]), 1e-3 * scale);
    if (ref > 0.0) res.max_rel_discrepancy = std::max(res.max_rel_discrepancy, std::abs(a[c] - b[c]) / ref);
  }
  if (res.max_rel_discrepancy > tolerance) {
    std::ostringstream msg;
    msg << "d/dk[k^2 Re G]: analytic and finite-difference values disagree by "
        << res.max_rel_discrepancy << " (relative) at k*d = " << k * geom.d;
    throw DerivativeMismatchError(msg.str(), res.max_rel_discrepancy);
  }
  return res;
}

std::string to_string(ReflectionSign s) {
  switch (s) {
    case ReflectionSign::alternate_horizontal:
      return "alternate_horizontal";
    case ReflectionSign::alternate_all:
      return "alternate_all";
    case ReflectionSign::none:
      return "none";
  }
  return "unknown";
}

}  // namespace cavityqed
