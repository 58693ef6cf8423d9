#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>

#include "cavityqed/errors.hpp"
#include "cavityqed/green_tensor.hpp"
#include "cavityqed/special_functions.hpp"

namespace cavityqed {

namespace {

constexpr double kPi = M_PI;
using C = std::complex<double>;

// 1/(e^x + 1) and 1/(e^x - 1) without overflow.
double fermi_like(double x) {
  const double e = std::exp(-x);
  return e / (1.0 + e);
}
double bose_like(double x) { return x > 700.0 ? 0.0 : 1.0 / std::expm1(x); }

std::vector<double> uniform_breaks(double a, double b, int panels) {
  std::vector<double> out;
  for (int i = 1; i < panels; ++i) out.push_back(a + (b - a) * i / panels);
  return out;
}

double sign_factor(ReflectionSign s, int m, bool horizontal) {
  const double alt = (m % 2 == 0) ? 1.0 : -1.0;
  switch (s) {
    case ReflectionSign::alternate_horizontal:
      return horizontal ? alt : 1.0;
    case ReflectionSign::alternate_all:
      return alt;
    case ReflectionSign::none:
      return 1.0;
  }
  return 1.0;
}

}  // namespace

CartesianGreenC reflection_term(const CavityGeometry& geom, double k, int m, const QuadSpec& quad) {
  const double kr = k * geom.r;
  const double kmd = k * m * geom.d;

  // Propagating part, q in [0, 1], phase e^{i q k m d}.
  auto prop = [&](double q) {
    const double s = std::sqrt(std::max(0.0, 1.0 - q * q));
    const double x = kr * s;
    const double jx = j1_over_x(x), jt = j2(x), jz = j0(x);
    const C ph = std::polar(1.0, q * kmd);
    CTriple v;
    v[0] = ph * ((1.0 + q * q) * jx - q * q * jt);
    v[1] = ph * ((1.0 + q * q) * jx - jt);
    v[2] = ph * ((1.0 - q * q) * jz);
    return v;
  };
  // Panels sized to the fastest oscillation, about one period each.
  const int panels = std::max(1, static_cast<int>(std::ceil(std::max(kmd, kr) / (2.0 * kPi))));
  auto p = integrate_finite<CTriple>(prop, 0.0, 1.0, quad, uniform_breaks(0.0, 1.0, panels));

  // Evanescent part, q in [0, inf), damping e^{-q k m d}.
  auto evan = [&](double q) {
    const double x = kr * std::sqrt(1.0 + q * q);
    const double jx = j1_over_x(x), jt = j2(x), jz = j0(x);
    const double damp = std::exp(-q * kmd);
    CTriple v;
    v[0] = damp * ((1.0 - q * q) * jx + q * q * jt);
    v[1] = damp * ((1.0 - q * q) * jx - jt);
    v[2] = damp * ((1.0 + q * q) * jz);
    return v;
  };
  auto e = integrate_semi_infinite_damped<CTriple>(evan, 0.0, kmd, quad);

  const C cp(0.0, -k / (2.0 * kPi));
  const double ce = -k / (2.0 * kPi);
  CartesianGreenC out;
  out.par = cp * p.value[0] + ce * e.value[0];
  out.perp = cp * p.value[1] + ce * e.value[1];
  out.g00 = cp * p.value[2] + ce * e.value[2];
  return out;
}

ReflectionResult green_reflection_series(const CavityGeometry& geom, double k,
                                         const ReflectionOptions& opts) {
  geom.validate();
  if (!(k > 0.0)) throw DomainError("green_reflection_series: k must be > 0");
  if (opts.m_max < 0) throw ConfigError("green_reflection_series: m_max must be >= 0");

  ReflectionResult res;
  res.value = free_space_green(geom.r, k);
  if (opts.m_max == 0) return res;

  constexpr std::size_t kWindow = 40;
  std::deque<C> sums[3];
  C partial[3] = {res.value.par, res.value.perp, res.value.g00};
  C estimate[3] = {partial[0], partial[1], partial[2]};
  for (int c = 0; c < 3; ++c) sums[c].push_back(partial[c]);

  int settled = 0;
  for (int m = 1; m <= opts.m_max; ++m) {
    const CartesianGreenC t = reflection_term(geom, k, m, opts.quad);
    const C terms[3] = {sign_factor(opts.sign, m, true) * t.par,
                        sign_factor(opts.sign, m, true) * t.perp,
                        sign_factor(opts.sign, m, false) * t.g00};
    double change = 0.0, scale = 0.0;
    double deltas[3];
    for (int c = 0; c < 3; ++c) {
      partial[c] += terms[c];
      sums[c].push_back(partial[c]);
      if (sums[c].size() > kWindow) sums[c].pop_front();
      C next = partial[c];
      if (opts.accelerate && m >= 3) {
        next = wynn_epsilon(std::vector<C>(sums[c].begin(), sums[c].end()));
      }
      deltas[c] = opts.accelerate ? std::abs(next - estimate[c]) : std::abs(terms[c]);
      estimate[c] = next;
      change = std::max(change, deltas[c]);
      scale = std::max(scale, std::abs(next));
    }
    // Components that vanish in the limit are judged against the tensor scale.
    bool ok = true;
    for (int c = 0; c < 3; ++c) {
      if (deltas[c] > opts.series_tol * std::max(std::abs(estimate[c]), 1e-3 * scale)) ok = false;
    }
    res.truncation_estimate = change;
    res.m_used = m;
    res.value = {estimate[0], estimate[1], estimate[2]};
    settled = ok ? settled + 1 : 0;
    if (settled >= 2 && m >= 4) return res;
  }
  std::ostringstream msg;
  msg << "green_reflection_series: series not settled after m_max = " << opts.m_max
      << " (last change " << res.truncation_estimate << ")";
  throw ConvergenceError(msg.str(), std::abs(res.value.g00), res.truncation_estimate);
}

CartesianGreen green_imaginary_freq_scattering(const CavityGeometry& geom, double u,
                                               const QuadSpec& spec) {
  geom.validate();
  if (!(u > 0.0)) throw DomainError("green_imaginary_freq: u must be > 0");
  const double ur = u * geom.r, ud = u * geom.d;
  auto f = [&](double z) {
    const double x = ur * std::sqrt(std::max(0.0, z * z - 1.0));
    const double a = fermi_like(ud * z), b = bose_like(ud * z);
    const double jz = j0(x);
    Triple v;
    v[0] = a * u * (1.0 + z * z) * jz / (4.0 * kPi);
    v[1] = a * u * (1.0 - z * z) * j2(x) / (4.0 * kPi);
    v[2] = b * u * (z * z - 1.0) * jz / (2.0 * kPi);
    return v;
  };
  auto res = integrate_semi_infinite_damped<Triple>(f, 1.0, ud, spec);
  const double pm = res.value[0], pp = res.value[1];
  return {pm + pp, pm - pp, res.value[2]};
}

namespace {

CartesianGreen imag_freq_mode_sum(const CavityGeometry& geom, double u, const SeriesSpec& series) {
  const double r = geom.r, d = geom.d, u2 = u * u;
  const double pref = 1.0 / (kPi * d * u2);
  auto odd = [&](auto&& term) {
    return sum_until_converged([&](long j) { return term(2 * j - 1); }, series).value;
  };
  CartesianGreen g;
  g.par = odd([&](long n) {
    const double kn = n * kPi / d;
    const double q = std::sqrt(kn * kn + u2);
    return pref * (kn * kn * k0(r * q) + q / r * k1(r * q));
  });
  g.perp = odd([&](long n) {
    const double kn = n * kPi / d;
    const double q = std::sqrt(kn * kn + u2);
    return -pref * (u2 * k0(r * q) + q / r * k1(r * q));
  });
  g.g00 = -k0(u * r) / (2.0 * kPi * d) -
          sum_until_converged(
              [&](long n) {
                const double kn = 2.0 * n * kPi / d;
                const double q2 = kn * kn + u2;
                return pref * q2 * k0(r * std::sqrt(q2));
              },
              series)
              .value;
  return g;
}

}  // namespace

CartesianGreen green_imaginary_freq(const CavityGeometry& geom, double u, const QuadSpec& spec,
                                    ImagFreqMethod method, const SeriesSpec& series) {
  geom.validate();
  if (!(u > 0.0) || !std::isfinite(u)) throw DomainError("green_imaginary_freq: u must be > 0");
  if (method == ImagFreqMethod::automatic) {
    // The zeta integral loses accuracy to cancellation once d < r; the
    // evanescent mode sum converges fastest exactly there.
    method = geom.d < geom.r ? ImagFreqMethod::mode_sum : ImagFreqMethod::zeta_integral;
  }
  if (method == ImagFreqMethod::mode_sum) return imag_freq_mode_sum(geom, u, series);
  const CartesianGreen f = free_space_green_imag(geom.r, u);
  const CartesianGreen s = green_imaginary_freq_scattering(geom, u, spec);
  return {f.par + s.par, f.perp + s.perp, f.g00 + s.g00};
}

CartesianGreen green_reflection_series_imaginary(const CavityGeometry& geom, double u,
                                                 const QuadSpec& spec, int m_max,
                                                 double series_tol) {
  geom.validate();
  if (!(u > 0.0)) throw DomainError("green_reflection_series_imaginary: u must be > 0");
  const double ur = u * geom.r, ud = u * geom.d;
  CartesianGreen g = free_space_green_imag(geom.r, u);
  double pm = (g.par + g.perp) / 2.0, pp = (g.par - g.perp) / 2.0, g00 = g.g00;
  for (int m = 1; m <= m_max; ++m) {
    const double alt = (m % 2 == 1) ? 1.0 : -1.0;  // (-1)^(m+1)
    auto f = [&](double z) {
      const double x = ur * std::sqrt(std::max(0.0, z * z - 1.0));
      const double damp = std::exp(-ud * m * z);
      const double jz = j0(x);
      Triple v;
      v[0] = damp * u * (1.0 + z * z) * jz / (4.0 * kPi);
      v[1] = damp * u * (1.0 - z * z) * j2(x) / (4.0 * kPi);
      v[2] = damp * u * (z * z - 1.0) * jz / (2.0 * kPi);
      return v;
    };
    QuadSpec s = spec;
    s.abs_tol = std::min(spec.abs_tol, 1e-3 * std::exp(-ud * m) + 1e-300);
    auto t = integrate_semi_infinite_damped<Triple>(f, 1.0, ud * m, s);
    pm += alt * t.value[0];
    pp += alt * t.value[1];
    g00 += t.value[2];
    const double scale = std::max({std::abs(pm), std::abs(pp), std::abs(g00)});
    if (magnitude(t.value) <= series_tol * scale) return {pm + pp, pm - pp, g00};
  }
  throw ConvergenceError("green_reflection_series_imaginary: not settled by m_max");
}

}  // namespace cavityqed
