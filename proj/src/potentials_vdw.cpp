#include "cavityqed/potentials_vdw.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cavityqed/errors.hpp"

namespace cavityqed {

namespace {

using C = std::complex<double>;
using PC = PhysicalConstants;
constexpr double kPi = M_PI;

// Per-component absolute floor: components may be exponentially small
// compared with their siblings (d << r) and are integrated separately so
// each carries its own relative accuracy.
constexpr double kComponentAbsTol = 1e-40;

double component(const SphericalGreen& g, int c) { return c == 0 ? g.g00 : (c == 1 ? g.pp : g.pm); }

PotentialTensor integrate_components(const std::function<SphericalGreen(double)>& green, double scale,
                                     const QuadSpec& spec) {
  QuadSpec s = spec;
  s.abs_tol = std::min(spec.abs_tol, kComponentAbsTol);
  double out[3];
  for (int c = 0; c < 3; ++c) {
    auto f = [&](double q) {
      const double g = component(green(q), c);
      const double w = q * q / (1.0 + q * q);
      return w * w * g * g;
    };
    out[c] = integrate_semi_infinite_damped<double>(f, 0.0, scale, s, {1.0}).value;
  }
  return {out[0], out[1], out[2]};
}

double sign_of(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

double pair_product(const SphericalDipole& x1, const SphericalGreen& g, const SphericalDipole& x2,
                    const SphericalDipole& y1, const SphericalGreen& h, const SphericalDipole& y2) {
  return std::real(contract(x1, g, x2) * contract(y1, h, y2));
}

struct RealFreqGreen {
  SphericalGreen re;
  SphericalGreen im;
};

// Green tensor at real k for SI geometry, evaluated in units of r.
RealFreqGreen green_at(const CavityGeometry& geom, double k, const ResonantOptions& opts) {
  const double r = geom.r;
  const CartesianGreenC g = opts.free_space ? free_space_green(1.0, k * r)
                                            : green_modesum({1.0, geom.d / r}, k * r, opts.green);
  const SphericalGreen re = to_spherical(real_part(g));
  const SphericalGreen im = to_spherical(imag_part(g));
  return {{re.pm / r, re.pp / r, re.g00 / r}, {im.pm / r, im.pp / r, im.g00 / r}};
}

// d/dk [k^2 Re G] at real k for SI geometry.
SphericalGreen derivative_at(const CavityGeometry& geom, double k, const ResonantOptions& opts) {
  const double r = geom.r, x = k * r;
  CartesianGreen d;
  if (opts.free_space) {
    d = d_dk_k2_re_free_space(1.0, x);
  } else {
    const CavityGeometry g{1.0, geom.d / r};
    switch (opts.derivative) {
      case DerivativeMethod::checked:
        d = d_dk_k2_re_green(g, x, opts.green, opts.derivative_tolerance).analytic;
        break;
      case DerivativeMethod::analytic:
        d = d_dk_k2_re_green_analytic(g, x, opts.green);
        break;
      case DerivativeMethod::finite_difference:
        d = d_dk_k2_re_green_fd(g, x, opts.green);
        break;
    }
  }
  const SphericalGreen s = to_spherical(d);
  const double r2 = r * r;
  return {s.pm / r2, s.pp / r2, s.g00 / r2};
}

void require_nonzero(double denom, const std::string& what) {
  if (denom == 0.0) throw DegenerateError(what + ": vanishing frequency denominator");
}

std::string threshold_reason(const ThresholdError& e) {
  std::ostringstream s;
  s << "threshold: " << e.what();
  return s.str();
}

void accumulate(EnergyResult& res, const ChannelContribution& c) {
  res.w_a += c.w_a;
  res.w_b += c.w_b;
  res.phase_shift += c.phase_shift;
  res.breakdown.push_back(c);
}

}  // namespace

PotentialTensor v_off_integrand(const CavityGeometry& geom, double K, double q) {
  const CavityGeometry g{K * geom.r, K * geom.d};
  const SphericalGreen s = to_spherical(green_imaginary_freq(g, q));
  const double w = q * q / (1.0 + q * q);
  return {w * w * s.g00 * s.g00, w * w * s.pp * s.pp, w * w * s.pm * s.pm};
}

PotentialTensor v_off_dimensionless(const CavityGeometry& geom, double K, const QuadSpec& spec) {
  geom.validate();
  if (!(K > 0.0) || !std::isfinite(K)) throw DomainError("v_off_dimensionless: K must be > 0");
  const CavityGeometry g{K * geom.r, K * geom.d};
  auto green = [&](double q) { return to_spherical(green_imaginary_freq(g, q, spec)); };
  return integrate_components(green, 2.0 * g.r, spec);
}

PotentialTensor v_off_free(double r, double K, const QuadSpec& spec) {
  if (!(r > 0.0) || !(K > 0.0)) throw DomainError("v_off_free: r and K must be > 0");
  const double kr = K * r;
  auto green = [&](double q) { return to_spherical(free_space_green_imag(kr, q)); };
  return integrate_components(green, 2.0 * kr, spec);
}

EnergyResult w_off_full(const TwoAtomConfig& config, const QuadSpec& spec, bool free_space) {
  require_valid(config);
  const AtomSpec& A = config.atom_a;
  const AtomSpec& B = config.atom_b;
  const int a = config.state_a, b = config.state_b;
  const double r = config.geometry.r;

  struct Channel {
    int i, j;
    double w_ia, w_jb;
    SphericalDipole d_ai, d_ia, d_jb, d_bj;
  };
  std::vector<Channel> channels;
  double dscale = 0.0;
  for (const auto& li : A.levels) {
    if (li.index == a || A.dipole(a, li.index).is_zero()) continue;
    for (const auto& lj : B.levels) {
      if (lj.index == b || B.dipole(lj.index, b).is_zero()) continue;
      Channel c{li.index, lj.index, li.omega - A.omega(a), lj.omega - B.omega(b),
                A.dipole(a, li.index), A.dipole(li.index, a), B.dipole(lj.index, b), B.dipole(b, lj.index)};
      require_nonzero(c.w_ia * c.w_jb, "w_off_full");
      dscale = std::max({dscale, std::sqrt(c.d_ai.norm2()), std::sqrt(c.d_jb.norm2())});
      channels.push_back(c);
    }
  }
  EnergyResult res;
  if (channels.empty()) return res;

  // Work with dipoles in units of dscale and lengths in units of r.
  auto scaled = [&](SphericalDipole d) {
    d.d0 /= dscale;
    d.dplus /= dscale;
    d.dminus /= dscale;
    return d;
  };
  for (auto& c : channels) {
    c.d_ai = scaled(c.d_ai);
    c.d_ia = scaled(c.d_ia);
    c.d_jb = scaled(c.d_jb);
    c.d_bj = scaled(c.d_bj);
  }
  std::vector<double> breaks{1.0};
  for (const auto& c : channels) {
    breaks.push_back(std::abs(c.w_ia) * r / PC::c);
    breaks.push_back(std::abs(c.w_jb) * r / PC::c);
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  const CavityGeometry unit{1.0, config.geometry.d / r};
  auto f = [&](double x) {
    const SphericalGreen g = to_spherical(free_space ? free_space_green_imag(1.0, x)
                                                     : green_imaginary_freq(unit, x, spec));
    DynVector v(channels.size());
    const double x2 = x * x;
    for (std::size_t n = 0; n < channels.size(); ++n) {
      const auto& c = channels[n];
      const double ka = c.w_ia * r / PC::c, kb = c.w_jb * r / PC::c;
      const double kernel = x2 * x2 / ((x2 + ka * ka) * (x2 + kb * kb));
      v[n] = kernel * pair_product(c.d_ai, g, c.d_jb, c.d_bj, g, c.d_ia);
    }
    return v;
  };
  const DynVector integral = integrate_semi_infinite_damped<DynVector>(f, 0.0, 2.0, spec, breaks).value;

  const double d4 = dscale * dscale * dscale * dscale;
  const double pref = -2.0 / (kPi * PC::hbar * PC::epsilon0 * PC::epsilon0 * PC::c * PC::c * PC::c) * d4 /
                      (r * r * r);
  for (std::size_t n = 0; n < channels.size(); ++n) {
    const auto& c = channels[n];
    const double w = pref * c.w_ia * c.w_jb * integral[n];
    accumulate(res, {"off", c.i, c.j, w, w, w});
  }
  return res;
}

EnergyResult w_off_factorized(const TwoAtomConfig& config, double K, const ChannelFactors& factors,
                              const QuadSpec& spec) {
  require_valid(config);
  if (!(K > 0.0) || !std::isfinite(K)) throw DomainError("w_off_factorized: K must be > 0");
  const AtomSpec& A = config.atom_a;
  const AtomSpec& B = config.atom_b;
  const int a = config.state_a, b = config.state_b;
  EnergyResult res;
  bool any = false;
  for (const auto& li : A.levels) {
    if (li.index != a && !A.dipole(a, li.index).is_zero()) any = true;
  }
  if (!any) return res;
  const PotentialTensor V = v_off_dimensionless(config.geometry, K, spec);
  const double K5 = std::pow(K, 5);
  const double pref = -2.0 * K5 / (kPi * PC::hbar * PC::epsilon0 * PC::epsilon0 * PC::c);
  for (const auto& li : A.levels) {
    const SphericalDipole da = A.dipole(a, li.index);
    if (li.index == a || da.is_zero()) continue;
    for (const auto& lj : B.levels) {
      const SphericalDipole db = B.dipole(lj.index, b);
      if (lj.index == b || db.is_zero()) continue;
      const double w_ia = li.omega - A.omega(a), w_jb = lj.omega - B.omega(b);
      require_nonzero(w_ia * w_jb, "w_off_factorized");
      auto it = factors.find({li.index, lj.index});
      const double cij = it != factors.end() ? it->second : sign_of(w_ia * w_jb);
      const double t00 = std::norm(da.d0) * std::norm(db.d0);
      const double tpp = std::norm(da.dplus) * std::norm(db.dplus) + std::norm(da.dminus) * std::norm(db.dminus);
      const double tpm = std::norm(da.dplus) * std::norm(db.dminus) + std::norm(da.dminus) * std::norm(db.dplus);
      const double w = pref * cij * (t00 * V.v00 + tpp * V.vpp + tpm * V.vpm);
      accumulate(res, {"off-factorized", li.index, lj.index, w, w, w});
    }
  }
  return res;
}

ResonantTensors v_res_dimensionless(const CavityGeometry& geom, double K, const GreenOptions& opts) {
  geom.validate();
  if (!(K > 0.0) || !std::isfinite(K)) throw DomainError("v_res_dimensionless: K must be > 0");
  const CartesianGreenC g = green_modesum({K * geom.r, K * geom.d}, 1.0, opts);
  const SphericalGreen re = to_spherical(real_part(g));
  const SphericalGreen im = to_spherical(imag_part(g));
  auto va = [](double x, double y) { return x * x - y * y; };
  auto vb = [](double x, double y) { return x * x + y * y; };
  return {{va(re.g00, im.g00), va(re.pp, im.pp), va(re.pm, im.pm)},
          {vb(re.g00, im.g00), vb(re.pp, im.pp), vb(re.pm, im.pm)}};
}

ResonantTensors v_res_free(double r, double K) {
  if (!(r > 0.0) || !(K > 0.0)) throw DomainError("v_res_free: r and K must be > 0");
  const CartesianGreenC g = free_space_green(K * r, 1.0);
  const SphericalGreen re = to_spherical(real_part(g));
  const SphericalGreen im = to_spherical(imag_part(g));
  auto va = [](double x, double y) { return x * x - y * y; };
  auto vb = [](double x, double y) { return x * x + y * y; };
  return {{va(re.g00, im.g00), va(re.pp, im.pp), va(re.pm, im.pm)},
          {vb(re.g00, im.g00), vb(re.pp, im.pp), vb(re.pm, im.pm)}};
}

namespace {

constexpr double kEps2Hbar = PC::epsilon0 * PC::epsilon0 * PC::hbar;

EnergyResult one_excited_impl(const AtomSpec& X, int x, const AtomSpec& Y, int y,
                              const CavityGeometry& geom, const ResonantOptions& opts) {
  EnergyResult res;
  const double wx = X.omega(x), wy = Y.omega(y);
  for (const auto& li : X.levels) {
    const SphericalDipole d_ai = X.dipole(x, li.index);
    if (!(li.omega < wx) || d_ai.is_zero()) continue;
    const SphericalDipole d_ia = X.dipole(li.index, x);
    const double w_ai = wx - li.omega, k = w_ai / PC::c;
    RealFreqGreen G;
    try {
      G = green_at(geom, k, opts);
    } catch (const ThresholdError& e) {
      res.skipped.push_back({"resonant", li.index, -1, threshold_reason(e)});
      continue;
    }
    for (const auto& lj : Y.levels) {
      const SphericalDipole d_0j = Y.dipole(y, lj.index);
      if (lj.index == y || d_0j.is_zero()) continue;
      const SphericalDipole d_j0 = Y.dipole(lj.index, y);
      const double w_j0 = lj.omega - wy;
      const double denom = w_ai * w_ai - w_j0 * w_j0;
      require_nonzero(denom, "w_res_one_excited");
      const double kern = 2.0 * w_j0 * k * k * k * k / (kEps2Hbar * denom);
      const double rr = pair_product(d_ai, G.re, d_0j, d_j0, G.re, d_ia);
      const double ii = pair_product(d_ai, G.im, d_0j, d_j0, G.im, d_ia);
      const double wa = kern * (rr - ii);
      accumulate(res, {"resonant", li.index, lj.index, wa, kern * (rr + ii), wa});
    }
  }
  return res;
}

EnergyResult swap_roles(EnergyResult r) {
  std::swap(r.w_a, r.w_b);
  for (auto& c : r.breakdown) {
    std::swap(c.w_a, c.w_b);
    std::swap(c.i, c.j);
  }
  for (auto& s : r.skipped) std::swap(s.i, s.j);
  return r;
}

}  // namespace

EnergyResult w_res_one_excited(const TwoAtomConfig& config, const ResonantOptions& opts) {
  require_valid(config);
  if (config.scenario() != Scenario::one_excited) {
    throw ConfigError("w_res_one_excited: scenario is " + to_string(config.scenario()));
  }
  if (config.state_a != config.atom_a.ground_index()) {
    return one_excited_impl(config.atom_a, config.state_a, config.atom_b, config.state_b, config.geometry,
                            opts);
  }
  EnergyResult r = one_excited_impl(config.atom_b, config.state_b, config.atom_a, config.state_a,
                                    config.geometry, opts);
  // The excited atom is B here; its potential is the phase shift.
  return swap_roles(std::move(r));
}

EnergyResult w_res_two_excited_dissimilar(const TwoAtomConfig& config, const ResonantOptions& opts) {
  require_valid(config);
  const AtomSpec& A = config.atom_a;
  const AtomSpec& B = config.atom_b;
  const int a = config.state_a, b = config.state_b;
  const double wa = A.omega(a), wb = B.omega(b);
  EnergyResult res;

  // Green tensors at the downward transition wavenumbers, evaluated once.
  std::map<int, RealFreqGreen> ga, gb;
  std::map<int, std::string> bad_a, bad_b;
  for (const auto& l : A.levels) {
    if (l.omega < wa && !A.dipole(a, l.index).is_zero()) {
      try {
        ga[l.index] = green_at(config.geometry, (wa - l.omega) / PC::c, opts);
      } catch (const ThresholdError& e) {
        bad_a[l.index] = threshold_reason(e);
      }
    }
  }
  for (const auto& l : B.levels) {
    if (l.omega < wb && !B.dipole(b, l.index).is_zero()) {
      try {
        gb[l.index] = green_at(config.geometry, (wb - l.omega) / PC::c, opts);
      } catch (const ThresholdError& e) {
        bad_b[l.index] = threshold_reason(e);
      }
    }
  }

  for (const auto& li : A.levels) {
    const int i = li.index;
    const SphericalDipole d_ai = A.dipole(a, i), d_ia = A.dipole(i, a);
    if (i == a || d_ai.is_zero()) continue;
    for (const auto& lj : B.levels) {
      const int j = lj.index;
      const SphericalDipole d_bj = B.dipole(b, j), d_jb = B.dipole(j, b);
      if (j == b || d_bj.is_zero()) continue;
      const double w_ai = wa - li.omega, w_bj = wb - lj.omega;
      const bool i_below = li.omega < wa, i_above = li.omega > wa;
      const bool j_below = lj.omega < wb, j_above = lj.omega > wb;

      if (i_below && j_above) {
        if (bad_a.count(i)) {
          res.skipped.push_back({"F1", i, j, bad_a[i]});
        } else {
          const auto& G = ga[i];
          const double w_jb = -w_bj, k = w_ai / PC::c;
          const double denom = w_ai * w_ai - w_jb * w_jb;
          require_nonzero(denom, "w_res_two_excited_dissimilar");
          const double kern = 2.0 * w_jb * k * k * k * k / (kEps2Hbar * denom);
          const double rr = pair_product(d_ai, G.re, d_bj, d_jb, G.re, d_ia);
          const double ii = pair_product(d_ai, G.im, d_bj, d_jb, G.im, d_ia);
          accumulate(res, {"F1", i, j, kern * (rr - ii), kern * (rr + ii), kern * (rr - ii)});
        }
      }
      if (i_above && j_below) {
        if (bad_b.count(j)) {
          res.skipped.push_back({"F2", i, j, bad_b[j]});
        } else {
          const auto& G = gb[j];
          const double w_ia = -w_ai, k = w_bj / PC::c;
          const double denom = w_bj * w_bj - w_ia * w_ia;
          require_nonzero(denom, "w_res_two_excited_dissimilar");
          const double kern = 2.0 * w_ia * k * k * k * k / (kEps2Hbar * denom);
          const double rr = pair_product(d_bj, G.re, d_ai, d_ia, G.re, d_jb);
          const double ii = pair_product(d_bj, G.im, d_ai, d_ia, G.im, d_jb);
          accumulate(res, {"F2", i, j, kern * (rr + ii), kern * (rr - ii), kern * (rr - ii)});
        }
      }
      if (i_below && j_below) {
        const double denom = w_ai * w_ai - w_bj * w_bj;
        require_nonzero(denom, "w_res_two_excited_dissimilar");
        if (bad_a.count(i)) {
          res.skipped.push_back({"F3", i, j, bad_a[i]});
        } else {
          const auto& G = ga[i];
          const double k = w_ai / PC::c;
          const double kern = -2.0 * w_bj * k * k * k * k / (kEps2Hbar * denom);
          const double rr = pair_product(d_ai, G.re, d_jb, d_bj, G.re, d_ia);
          const double ii = pair_product(d_ai, G.im, d_jb, d_bj, G.im, d_ia);
          accumulate(res, {"F3", i, j, kern * (rr - ii), kern * (rr + ii), kern * (rr - ii)});
        }
        if (bad_b.count(j)) {
          res.skipped.push_back({"F4", i, j, bad_b[j]});
        } else {
          const auto& G = gb[j];
          const double k = w_bj / PC::c;
          const double kern = 2.0 * w_ai * k * k * k * k / (kEps2Hbar * denom);
          const double rr = pair_product(d_bj, G.re, d_ai, d_ia, G.re, d_jb);
          const double ii = pair_product(d_bj, G.im, d_ai, d_ia, G.im, d_jb);
          accumulate(res, {"F4", i, j, kern * (rr + ii), kern * (rr - ii), kern * (rr - ii)});
        }
      }
    }
  }
  return res;
}

EnergyResult w_res_two_excited_identical(const TwoAtomConfig& config, const ResonantOptions& opts) {
  require_valid(config);
  if (config.scenario() != Scenario::both_excited_identical) {
    throw ConfigError("w_res_two_excited_identical: scenario is " + to_string(config.scenario()));
  }
  const AtomSpec& A = config.atom_a;
  const int a = config.state_a;
  const double wa = A.omega(a);
  EnergyResult res;
  for (const auto& li : A.levels) {
    const int i = li.index;
    const SphericalDipole d_ai = A.dipole(a, i), d_ia = A.dipole(i, a);
    if (!(li.omega < wa) || d_ai.is_zero()) continue;
    const double w_ai = wa - li.omega, k = w_ai / PC::c;
    RealFreqGreen G;
    SphericalGreen D;
    try {
      G = green_at(config.geometry, k, opts);
      D = derivative_at(config.geometry, k, opts);
    } catch (const ThresholdError& e) {
      res.skipped.push_back({"identical", i, -1, threshold_reason(e)});
      continue;
    }
    for (const auto& lj : A.levels) {
      const int j = lj.index;
      if (j == i || j == a) continue;
      const SphericalDipole d_ja = A.dipole(j, a), d_aj = A.dipole(a, j);
      if (d_ja.is_zero()) continue;
      const double w_ja = lj.omega - wa;
      const double denom = w_ai * w_ai - w_ja * w_ja;
      require_nonzero(denom, "w_res_two_excited_identical");
      const double kern = 4.0 * w_ja * k * k * k * k / (kEps2Hbar * denom);
      const double rr = pair_product(d_ai, G.re, d_ja, d_aj, G.re, d_ia);
      const double ii = pair_product(d_ai, G.im, d_ja, d_aj, G.im, d_ia);
      accumulate(res, {"identical-single-pole", i, j, kern * rr, kern * rr, kern * (rr - ii)});
    }
    // Double pole, j = i.
    const double kern = k * k / (PC::epsilon0 * PC::epsilon0 * PC::c * PC::hbar);
    const double rr = pair_product(d_ai, G.re, d_ia, d_ai, G.re, d_ia);
    const double ii = pair_product(d_ai, G.im, d_ia, d_ai, G.im, d_ia);
    const double rd = pair_product(d_ai, G.re, d_ia, d_ai, D, d_ia);
    const double w = kern * (k * rr - 2.0 * rd);
    accumulate(res, {"identical-double-pole", i, i, w, w, kern * (k * rr - k * ii - 2.0 * rd)});
  }
  return res;
}

EnergyResult w_res(const TwoAtomConfig& config, const ResonantOptions& opts) {
  require_valid(config);
  switch (config.scenario()) {
    case Scenario::both_ground:
      return {};
    case Scenario::one_excited:
      return w_res_one_excited(config, opts);
    case Scenario::both_excited_dissimilar:
      return w_res_two_excited_dissimilar(config, opts);
    case Scenario::both_excited_identical:
      return w_res_two_excited_identical(config, opts);
  }
  return {};
}

}  // namespace cavityqed
