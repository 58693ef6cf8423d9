#include <cmath>
#include <functional>
#include <vector>

#include "cavityqed/errors.hpp"
#include "cavityqed/green_tensor.hpp"
#include "cavityqed/special_functions.hpp"

namespace cavityqed {

namespace {

constexpr double kPi = M_PI;

double fermi_like(double x) {
  const double e = std::exp(-x);
  return e / (1.0 + e);
}
double bose_like(double x) { return x > 700.0 ? 0.0 : 1.0 / std::expm1(x); }

// Principal value of the integral over s in [0, inf) of f(s) / (s^2 - p2).
// For p2 > 0 the pole at s = p is excised symmetrically and the excised
// window folded into a regular integrand; the oscillatory tail is summed in
// half-period panels and extrapolated.
double pv_integral(const std::function<double(double)>& f, double p2, double r,
                   const QuadSpec& spec) {
  if (!(r > 0.0)) throw DomainError("kk_principal_value: r must be > 0");
  auto g = [&](double s) { return f(s) / (s * s - p2); };
  double total = 0.0;
  double start = 0.0;
  if (p2 > 0.0) {
    const double p = std::sqrt(p2);
    const double delta = 0.5 * std::min(p, 1.0 / r);
    auto h = [&](double s) { return f(s) / (s + p); };
    auto folded = [&](double t) { return (h(p + t) - h(p - t)) / t; };
    total += integrate_finite<double>(folded, 0.0, delta, spec).value;
    if (p - delta > 0.0) total += integrate_finite<double>(g, 0.0, p - delta, spec).value;
    start = p + delta;
  }
  const double step = kPi / r;
  constexpr int kPanels = 48;
  constexpr int kWindow = 24;
  std::vector<double> sums;
  double b = start;
  double acc = total;
  for (int i = 0; i < kPanels; ++i) {
    acc += integrate_finite<double>(g, b, b + step, spec).value;
    b += step;
    sums.push_back(acc);
  }
  return wynn_epsilon(std::vector<double>(sums.end() - kWindow, sums.end()));
}

}  // namespace

double kk_principal_value(const std::function<double(double)>& f, double p2, double r,
                          const QuadSpec& spec) {
  return pv_integral(f, p2, r, spec);
}

CartesianGreen static_k2_green(const CavityGeometry& geom) {
  geom.validate();
  const double r = geom.r, d = geom.d;
  auto R = [&](long m) { return std::hypot(r, m * d); };
  // m = 0: the direct (free-space) term.
  CartesianGreen g{-2.0 / (4.0 * kPi * r * r * r), 1.0 / (4.0 * kPi * r * r * r),
                   1.0 / (4.0 * kPi * r * r * r)};
  constexpr long kM = 4000;
  double sx = 0.0, sy = 0.0, sz = 0.0, last_x = 0.0, last_y = 0.0;
  for (long m = 1; m <= kM; ++m) {
    const double Rm = R(m), R3 = Rm * Rm * Rm;
    const double z = m * d;
    const double sgn = (m % 2 == 0) ? 1.0 : -1.0;
    last_x = sgn * (1.0 - 3.0 * r * r / (Rm * Rm)) / (4.0 * kPi * R3);
    last_y = sgn / (4.0 * kPi * R3);
    sx += last_x;
    sy += last_y;
    sz += (1.0 - 3.0 * z * z / (Rm * Rm)) / (4.0 * kPi * R3);
  }
  // Alternating tails: average of the last two partial sums.
  sx -= 0.5 * last_x;
  sy -= 0.5 * last_y;
  // Monotone tail of the normal component: Euler-Maclaurin with the exact
  // antiderivative z / R^3 of (r^2 - 2 z^2) / R^5.
  {
    const double Rm = R(kM);
    const double fM = (1.0 - 3.0 * (kM * d) * (kM * d) / (Rm * Rm)) / (4.0 * kPi * Rm * Rm * Rm);
    sz += -static_cast<double>(kM) / (4.0 * kPi * Rm * Rm * Rm) - 0.5 * fM;
  }
  g.par += 2.0 * sx;
  g.perp += 2.0 * sy;
  g.g00 += 2.0 * sz;
  return g;
}

CartesianGreen kramers_kronig_re(const CavityGeometry& geom, double k, const QuadSpec& spec) {
  geom.validate();
  if (!(k > 0.0)) throw DomainError("kramers_kronig_re: k must be > 0");
  const double r = geom.r, d = geom.d, k2 = k * k;
  const CartesianGreen a = static_k2_green(geom);
  CartesianGreen out{a.par / k2, a.perp / k2, a.g00 / k2};
  QuadSpec inner = spec;
  inner.abs_tol = spec.abs_tol * 1e-2;
  // Modes whose evanescent decay e^{-r q_n} is below this contribute nothing.
  constexpr double kCutoff = 40.0;
  const double w = 2.0 / kPi;

  for (long n = 1;; n += 2) {
    const double kn = n * kPi / d;
    const double p2 = k2 - kn * kn;
    if (p2 < 0.0 && r * std::sqrt(-p2) > kCutoff) break;
    const double c = -2.0 / (4.0 * d);
    auto fpar = [&](double s) {
      const double kp2 = s * s + kn * kn;
      return s * c * (kn * kn * j0(r * s) + s * s * j1_over_x(r * s)) / kp2;
    };
    auto fperp = [&](double s) {
      const double kp2 = s * s + kn * kn;
      return s * c * (kp2 * j0(r * s) - s * s * j1_over_x(r * s)) / kp2;
    };
    out.par += w * pv_integral(fpar, p2, r, inner);
    out.perp += w * pv_integral(fperp, p2, r, inner);
  }

  auto f0 = [&](double s) { return -s * j0(r * s) / (4.0 * d); };
  out.g00 += w * pv_integral(f0, k2, r, inner);
  for (long n = 1;; ++n) {
    const double kn = 2.0 * n * kPi / d;
    const double p2 = k2 - kn * kn;
    if (p2 < 0.0 && r * std::sqrt(-p2) > kCutoff) break;
    auto f = [&](double s) {
      return s * (-(s * s) * j0(r * s) / (2.0 * d)) / (s * s + kn * kn);
    };
    out.g00 += w * pv_integral(f, p2, r, inner);
  }
  return out;
}

CartesianGreen greens_q_integral_oracle(const CavityGeometry& geom, double u,
                                        const QuadSpec& spec) {
  geom.validate();
  if (!(u > 0.0)) throw DomainError("greens_q_integral_oracle: u must be > 0");
  const double r = geom.r, d = geom.d, u2 = u * u;
  auto f = [&](double q) {
    const double kappa = std::sqrt(u2 + q * q);
    const double x = q * r;
    const double jz = j0(x), jx = j1_over_x(x);
    const double a = 2.0 * fermi_like(kappa * d) / (u2 * kappa);
    const double b = 2.0 * bose_like(kappa * d) / (u2 * kappa);
    Triple v;
    v[0] = q * a * (q * q * (jz - jx) + u2 * jz) / (4.0 * kPi);
    v[1] = q * a * (q * q * jx + u2 * jz) / (4.0 * kPi);
    v[2] = q * b * q * q * jz / (4.0 * kPi);
    return v;
  };
  auto res = integrate_semi_infinite_damped<Triple>(f, 0.0, d, spec);
  const CartesianGreen free = free_space_green_imag(r, u);
  return {free.par + res.value[0], free.perp + res.value[1], free.g00 + res.value[2]};
}

}  // namespace cavityqed
