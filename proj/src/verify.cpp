#include "cavityqed/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include <json.hpp>

#include "cavityqed/errors.hpp"
#include "cavityqed/potentials_static.hpp"
#include "cavityqed/potentials_vdw.hpp"
#include "cavityqed/special_functions.hpp"
#include "cavityqed/sweep.hpp"

namespace cavityqed {

namespace {

constexpr double kPi = M_PI;

CheckResult timed(int criterion, const std::string& name, const std::function<bool(std::ostringstream&)>& body) {
  CheckResult r;
  r.criterion = criterion;
  r.name = name;
  std::ostringstream detail;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    r.passed = body(detail);
  } catch (const std::exception& e) {
    r.passed = false;
    detail << " exception: " << e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.detail = detail.str();
  const auto first = r.detail.find_first_not_of(' ');
  r.detail.erase(0, first == std::string::npos ? r.detail.size() : first);
  return r;
}

// Relative difference with an absolute floor.
double rel_diff(double a, double b, double floor) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), floor});
}

std::vector<double> flatten(const CartesianGreenC& g) {
  return {g.par.real(), g.par.imag(), g.perp.real(), g.perp.imag(), g.g00.real(), g.g00.imag()};
}
std::vector<double> flatten(const CartesianGreen& g) { return {g.par, g.perp, g.g00}; }

std::vector<double> column(const SweepResult& r, const std::string& name) {
  auto it = std::find(r.columns.begin(), r.columns.end(), name);
  if (it == r.columns.end()) throw Error("missing sweep column " + name);
  const std::size_t c = static_cast<std::size_t>(it - r.columns.begin());
  std::vector<double> out;
  for (const auto& row : r.rows) out.push_back(row.values[c]);
  return out;
}

std::vector<double> xs_of(const SweepResult& r) {
  std::vector<double> out;
  for (const auto& row : r.rows) out.push_back(row.x);
  return out;
}

// Monotonicity allowing relative jitter tol.
bool nonincreasing(const std::vector<double>& v, std::size_t from, std::size_t to, double tol) {
  for (std::size_t i = from + 1; i < to; ++i) {
    if (v[i] > v[i - 1] + tol * std::max(std::abs(v[i]), std::abs(v[i - 1]))) return false;
  }
  return true;
}
bool nondecreasing(const std::vector<double>& v, std::size_t from, std::size_t to, double tol) {
  for (std::size_t i = from + 1; i < to; ++i) {
    if (v[i] < v[i - 1] - tol * std::max(std::abs(v[i]), std::abs(v[i - 1]))) return false;
  }
  return true;
}

// Number of strict local maxima, ignoring steps below tol (relative).
int count_local_maxima(const std::vector<double>& v, double tol) {
  int count = 0;
  int last = 0;  // +1 rising, -1 falling
  for (std::size_t i = 1; i < v.size(); ++i) {
    const double dv = v[i] - v[i - 1];
    if (std::abs(dv) <= tol * std::max(std::abs(v[i]), std::abs(v[i - 1]))) continue;
    const int s = dv > 0 ? 1 : -1;
    if (last == 1 && s == -1) ++count;
    last = s;
  }
  return count;
}

AtomSpec two_level(double omega, const SphericalDipole& d, const std::string& label) {
  AtomSpec a;
  a.label = label;
  a.levels = {{0, 0.0}, {1, omega}};
  a.dipoles[{0, 1}] = d;
  a.dipoles[{1, 0}] = d.hermitian_partner();
  return a;
}

AtomSpec three_level(double w1, double w2, const SphericalDipole& d01, const SphericalDipole& d12,
                     const SphericalDipole& d02, const std::string& label) {
  AtomSpec a;
  a.label = label;
  a.levels = {{0, 0.0}, {1, w1}, {2, w2}};
  a.dipoles[{0, 1}] = d01;
  a.dipoles[{1, 2}] = d12;
  a.dipoles[{0, 2}] = d02;
  a.complete_hermitian();
  return a;
}

constexpr double kOmegaRef = 2.0 * kPi * PhysicalConstants::c / 1e-6;  // 1 um transition
constexpr double kDip = 1e-29;

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string VerifyReport::to_json() const {
  nlohmann::ordered_json j;
  j["tool"] = kToolVersion;
  j["level"] = level == VerifyLevel::quick ? "quick" : "full";
  j["passed"] = passed();
  j["seconds"] = seconds;
  std::vector<int> covered;
  for (const auto& c : checks) {
    if (std::find(covered.begin(), covered.end(), c.criterion) == covered.end()) covered.push_back(c.criterion);
  }
  j["criteria"] = covered;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json o;
    o["criterion"] = c.criterion;
    o["name"] = c.name;
    o["passed"] = c.passed;
    o["seconds"] = c.seconds;
    o["detail"] = c.detail;
    arr.push_back(o);
  }
  j["checks"] = arr;
  return j.dump(2);
}

CheckResult check_representation_equivalence(const std::vector<double>& kr_values,
                                             const std::vector<double>& kd_values, ReflectionSign sign) {
  return timed(1, "representation equivalence: mode sums vs reflection series", [&](std::ostringstream& d) {
    bool ok = true;
    double worst = 0.0;
    int compared = 0;
    for (double kr : kr_values) {
      for (double kd : kd_values) {
        const CavityGeometry g{kr, kd};
        try {
          check_threshold(g, 1.0);
        } catch (const ThresholdError&) {
          d << " skipped (" << kr << "," << kd << ") in guard band;";
          continue;
        }
        ReflectionOptions o;
        o.m_max = 500;
        o.sign = sign;
        o.quad.rel_tol = 1e-9;
        const auto a = flatten(green_modesum(g, 1.0));
        std::vector<double> b;
        try {
          b = flatten(green_reflection_series(g, 1.0, o).value);
        } catch (const ConvergenceError& e) {
          d << " (" << kr << "," << kd << ") series: " << e.what() << ";";
          ok = false;
          continue;
        }
        for (std::size_t c = 0; c < a.size(); ++c) {
          const double diff = std::abs(a[c] - b[c]);
          const double allowed = std::max(1e-5 * std::abs(a[c]), 1e-8);
          worst = std::max(worst, diff / std::max(std::abs(a[c]), 1e-8 / 1e-5));
          if (diff > allowed) {
            ok = false;
            d << " (" << kr << "," << kd << ") component " << c << ": " << a[c] << " vs " << b[c] << ";";
          }
        }
        ++compared;
      }
    }
    d << " points=" << compared << " worst_rel=" << worst << " sign=" << to_string(sign);
    return ok && compared > 0;
  });
}

CheckResult check_kramers_kronig() {
  return timed(2, "Kramers-Kronig round trip", [](std::ostringstream& d) {
    const std::vector<std::pair<double, double>> pts = {{1, 5}, {0.2, 2}, {2, 20}, {1, 2}, {0.5, 8}};
    bool ok = true;
    double worst = 0.0;
    for (auto [kr, kd] : pts) {
      const CavityGeometry g{kr, kd};
      const auto a = flatten(re_green_modesum(g, 1.0));
      const auto b = flatten(kramers_kronig_re(g, 1.0));
      for (std::size_t c = 0; c < a.size(); ++c) {
        const double e = rel_diff(a[c], b[c], 1e-8);
        worst = std::max(worst, e);
        if (e > 1e-4) {
          ok = false;
          d << " (" << kr << "," << kd << ") c" << c << ": " << a[c] << " vs " << b[c] << ";";
        }
      }
    }
    d << " worst_rel=" << worst;
    return ok;
  });
}

CheckResult check_subthreshold(int points) {
  return timed(3, "sub-threshold exactness (kd < pi)", [&](std::ostringstream& d) {
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> ukr(0.05, 20.0), ukd(0.05, kPi * (1.0 - 1e-3));
    bool ok = true;
    double worst = 0.0;
    for (int n = 0; n < points; ++n) {
      const double kr = ukr(rng), kd = ukd(rng);
      const CartesianGreen im = im_green_modesum({kr, kd}, 1.0);
      const double expect = -j0(kr) / (4.0 * kd);
      const double e = rel_diff(im.g00, expect, 1e-300);
      worst = std::max(worst, e);
      if (im.par != 0.0 || im.perp != 0.0 || e > 1e-12) {
        ok = false;
        d << " (" << kr << "," << kd << ") im_par=" << im.par << " im_perp=" << im.perp << " im00 rel=" << e << ";";
      }
    }
    d << " points=" << points << " worst_rel_00=" << worst;
    return ok;
  });
}

CheckResult check_imaginary_frequency_oracle() {
  return timed(4, "imaginary-frequency Green tensor vs defining-integral oracle", [](std::ostringstream& d) {
    bool ok = true;
    double worst = 0.0;
    for (double ur : {0.5, 2.0}) {
      for (double ud : {2.0, 10.0}) {
        const CavityGeometry g{ur, ud};
        const auto a = flatten(green_imaginary_freq(g, 1.0));
        const auto b = flatten(greens_q_integral_oracle(g, 1.0));
        const double scale = std::max({std::abs(b[0]), std::abs(b[1]), std::abs(b[2])});
        for (std::size_t c = 0; c < 3; ++c) {
          const double e = rel_diff(a[c], b[c], 1e-12 * scale);
          worst = std::max(worst, e);
          if (e > 1e-7) {
            ok = false;
            d << " (" << ur << "," << ud << ") c" << c << ": " << a[c] << " vs " << b[c] << ";";
          }
        }
      }
    }
    d << " worst_rel=" << worst;
    return ok;
  });
}

CheckResult check_free_space_reductions() {
  return timed(5, "free-space reductions at Kd = 200", [](std::ostringstream& d) {
    constexpr double kd = 200.0;
    bool ok = true;
    double worst = 0.0;
    double kr = 0.0;
    auto cmp = [&](const std::string& what, double a, double b) {
      const double e = rel_diff(a, b, 0.0);
      worst = std::max(worst, e);
      if (e > 1e-2) {
        ok = false;
        d << " Kr=" << kr << " " << what << ": " << a << " vs " << b << " (rel " << e << ");";
      }
    };
    // Sub-wavelength separations: the cavity shifts each real-frequency
    // component by roughly 1/(4 pi d) in absolute terms, so r must stay
    // small against both d and the wavelength for a 1% comparison.
    for (double x : {0.1, 0.2, 0.5}) {
      kr = x;
      const auto g = flatten(green_modesum({kr, kd}, 1.0));
      const auto f = flatten(free_space_green(kr, 1.0));
      for (std::size_t c = 0; c < g.size(); ++c) cmp("G c" + std::to_string(c), g[c], f[c]);
      const PotentialTensor vo = v_off_dimensionless({kr, kd}, 1.0), vf = v_off_free(kr, 1.0);
      cmp("v_off 00", vo.v00, vf.v00);
      cmp("v_off ++", vo.vpp, vf.vpp);
      cmp("v_off +-", vo.vpm, vf.vpm);
      const ResonantTensors vr = v_res_dimensionless({kr, kd}, 1.0), vrf = v_res_free(kr, 1.0);
      cmp("v_resA 00", vr.res_a.v00, vrf.res_a.v00);
      cmp("v_resA ++", vr.res_a.vpp, vrf.res_a.vpp);
      cmp("v_resA +-", vr.res_a.vpm, vrf.res_a.vpm);
      cmp("v_resB 00", vr.res_b.v00, vrf.res_b.v00);
      cmp("v_resB ++", vr.res_b.vpp, vrf.res_b.vpp);
      cmp("v_resB +-", vr.res_b.vpm, vrf.res_b.vpm);
      const StaticPotentialTensor vs = v_static_dimensionless({kr, kd}), vsf = v_static_free({kr, kd});
      cmp("v_static 00", vs.v00, vsf.v00);
      cmp("v_static ++", vs.vpp, vsf.vpp);
      cmp("v_static +-", vs.vpm, vsf.vpm);
    }
    d << " Kr in {0.1, 0.2, 0.5}; worst_rel=" << worst;
    return ok;
  });
}

CheckResult check_resonant_algebra(int threads) {
  return timed(6, "resonant algebra: V_B - V_A = 2 Im^2, V_B >= |V_A|", [&](std::ostringstream& d) {
    bool ok = true;
    double worst_identity = 0.0;
    std::size_t rows = 0;
    for (const char* name : {"fig6-d2", "fig6-d20"}) {
      SweepConfig cfg = preset(name);
      cfg.free_reference = false;
      const SweepResult r = run_sweep(cfg, threads);
      const double kd = cfg.fixed.at("Kd");
      const auto xs = xs_of(r);
      const std::vector<std::vector<double>> a = {column(r, "a_00"), column(r, "a_pp"), column(r, "a_pm")};
      const std::vector<std::vector<double>> b = {column(r, "b_00"), column(r, "b_pp"), column(r, "b_pm")};
      for (std::size_t n = 0; n < xs.size(); ++n) {
        const SphericalGreen im = to_spherical(im_green_modesum({xs[n], kd}, 1.0));
        const double ims[3] = {im.g00, im.pp, im.pm};
        for (int c = 0; c < 3; ++c) {
          const double va = a[c][n], vb = b[c][n];
          const double e = std::abs((vb - va) - 2.0 * ims[c] * ims[c]) / std::max(vb, 1e-300);
          worst_identity = std::max(worst_identity, e);
          if (e > 1e-12 || vb < std::abs(va) * (1.0 - 1e-14)) {
            ok = false;
            d << " " << name << " Kr=" << xs[n] << " c" << c << " A=" << va << " B=" << vb << ";";
          }
        }
      }
      rows += xs.size();
      if (!r.skipped.empty()) d << " " << name << " skipped " << r.skipped.size() << " rows;";
    }
    d << " rows=" << rows << " worst_identity_rel=" << worst_identity;
    return ok && rows > 0;
  });
}

CheckResult check_off_resonant_shape(int threads) {
  return timed(7, "off-resonant potential shape vs d at Kr = 0.2", [&](std::ostringstream& d) {
    const SweepConfig cfg = preset("fig4");
    const double kr = cfg.fixed.at("Kr");
    const SweepResult r = run_sweep(cfg, threads);
    const auto kd = xs_of(r);
    const auto v00 = column(r, "v00"), vpp = column(r, "vpp"), vpm = column(r, "vpm");
    const auto f00 = column(r, "free_v00"), fpp = column(r, "free_vpp");
    const std::size_t n = kd.size();
    bool ok = n >= 10;
    // ++ decreases monotonically to zero as d decreases.
    const bool pp_mono = nondecreasing(vpp, 0, n, 1e-8);
    const bool pp_zero = vpp.front() < 1e-6 * fpp.front();
    // +- has an interior bump near d ~ r and falls off for d << r.
    const std::size_t ipm = static_cast<std::size_t>(std::max_element(vpm.begin(), vpm.end()) - vpm.begin());
    const bool pm_bump = ipm > 0 && ipm + 1 < n && kd[ipm] > kr / 4.0 && kd[ipm] < 4.0 * kr &&
                         vpm[ipm] > vpm.back() && vpm.front() < 1e-3 * vpm[ipm];
    // 00 has an interior minimum near d ~ r, below free space, and rises as d decreases.
    const std::size_t i00 = static_cast<std::size_t>(std::min_element(v00.begin(), v00.end()) - v00.begin());
    const bool m00 = i00 > 0 && i00 + 1 < n && kd[i00] > kr / 4.0 && kd[i00] < 4.0 * kr && v00[i00] < f00[i00] &&
                     nonincreasing(v00, 0, i00 + 1, 1e-8) && v00.front() > f00.front();
    ok = ok && pp_mono && pp_zero && pm_bump && m00;
    d << " ++ monotone=" << pp_mono << " ++(Kd_min)/free=" << vpp.front() / fpp.front() << "; +- max at Kd="
      << kd[ipm] << " value=" << vpm[ipm] << " ok=" << pm_bump << "; 00 min at Kd=" << kd[i00]
      << " value=" << v00[i00] << " ok=" << m00 << "; rows=" << n;
    return ok;
  });
}

CheckResult check_static_shape(int threads) {
  return timed(8, "electrostatic ratios to free space vs r/d", [&](std::ostringstream& d) {
    const SweepResult r = run_sweep(preset("fig7"), threads);
    const auto x = xs_of(r);
    const auto r00 = column(r, "ratio_00"), rpp = column(r, "ratio_pp"), rpm = column(r, "ratio_pm");
    const std::size_t n = x.size();
    const std::size_t ipm = static_cast<std::size_t>(std::max_element(rpm.begin(), rpm.end()) - rpm.begin());
    const int maxima = count_local_maxima(rpm, 1e-12);
    const bool pm_ok = maxima == 1 && ipm > 0 && ipm + 1 < n && x[ipm] > 0.25 && x[ipm] < 4.0 && rpm[ipm] > 1.0;
    const bool mono = nonincreasing(r00, 0, n, 1e-12) && nonincreasing(rpp, 0, n, 1e-12);
    const bool to_zero = r00.back() < 1e-3 && rpp.back() < 1e-3 && rpm.back() < 1e-3;
    d << " +- local maxima=" << maxima << " at r/d=" << x[ipm] << " peak=" << rpm[ipm] << "; 00/++ monotone=" << mono
      << "; ratios at r/d=" << x.back() << ": " << r00.back() << ", " << rpp.back() << ", " << rpm.back();
    return pm_ok && mono && to_zero;
  });
}

CheckResult check_static_free_limit() {
  return timed(9, "electrostatic free-space limit at r/d = 0.01", [](std::ostringstream& d) {
    const CavityGeometry g{0.01, 1.0};
    const StaticPotentialTensor v = v_static_dimensionless(g), f = v_static_free(g);
    const double e00 = std::abs(v.v00 / f.v00 - 1.0), epp = std::abs(v.vpp / f.vpp - 1.0),
                 epm = std::abs(v.vpm / f.vpm - 1.0);
    d << " ratio deviations: 00 " << e00 << ", ++ " << epp << ", +- " << epm << "; terms " << v.n00 << "/" << v.npp
      << "/" << v.npm;
    return !v.free_space_limit && e00 < 1e-2 && epp < 1e-2 && epm < 1e-2;
  });
}

CheckResult check_double_pole() {
  return timed(10, "double-pole derivative: analytic vs finite difference", [](std::ostringstream& d) {
    const std::vector<std::pair<double, double>> pts = {{0.3, 2},  {1, 2},   {2, 5},   {0.7, 5},   {1.5, 8},
                                                        {3, 8},    {0.5, 12}, {4, 12}, {2.5, 20}, {6, 20}};
    bool ok = true;
    double worst = 0.0;
    for (auto [kr, kd] : pts) {
      const CavityGeometry g{kr, kd};
      const auto a = flatten(d_dk_k2_re_green_analytic(g, 1.0));
      const auto f = flatten(d_dk_k2_re_green_fd(g, 1.0));
      const double scale = std::max({std::abs(a[0]), std::abs(a[1]), std::abs(a[2])});
      for (std::size_t c = 0; c < 3; ++c) {
        const double e = rel_diff(a[c], f[c], 1e-6 * scale);
        worst = std::max(worst, e);
        if (e > 1e-6) {
          ok = false;
          d << " (" << kr << "," << kd << ") c" << c << ": " << a[c] << " vs " << f[c] << ";";
        }
      }
    }
    d << " derivative worst_rel=" << worst << ";";
    // Identical-atom potential through either derivative path.
    const double K = kOmegaRef / PhysicalConstants::c;
    double worst_w = 0.0;
    const SphericalDipole mixed{{0.6 * kDip, 0.0}, {0.5 * kDip, 0.1 * kDip}, {0.3 * kDip, 0.0}};
    for (auto [kr, kd] : std::vector<std::pair<double, double>>{{0.5, 2}, {1, 5}, {3, 20}}) {
      const AtomSpec at = two_level(kOmegaRef, mixed, "Rb");
      const TwoAtomConfig cfg{at, at, 1, 1, {kr / K, kd / K}};
      ResonantOptions oa, of;
      oa.derivative = DerivativeMethod::analytic;
      of.derivative = DerivativeMethod::finite_difference;
      const EnergyResult wa = w_res_two_excited_identical(cfg, oa), wf = w_res_two_excited_identical(cfg, of);
      const double e = rel_diff(wa.w_a, wf.w_a, 0.0);
      worst_w = std::max(worst_w, e);
      if (e > 1e-6) {
        ok = false;
        d << " identical potential (" << kr << "," << kd << "): " << wa.w_a << " vs " << wf.w_a << ";";
      }
    }
    d << " identical-atom potential worst_rel=" << worst_w;
    return ok;
  });
}

CheckResult check_scenario_reductions() {
  return timed(11, "scenario reductions and off-resonant equalities", [](std::ostringstream& d) {
    bool ok = true;
    const double K = kOmegaRef / PhysicalConstants::c;
    const SphericalDipole p{{kDip, 0.0}, {0.4 * kDip, 0.2 * kDip}, {0.1 * kDip, -0.3 * kDip}};
    const SphericalDipole q{{0.3 * kDip, 0.1 * kDip}, {0.7 * kDip, 0.0}, {0.2 * kDip, 0.0}};
    const AtomSpec A = three_level(kOmegaRef, 1.7 * kOmegaRef, p, q, SphericalDipole{{0.2 * kDip, 0.0}, {}, {}}, "A");
    const AtomSpec B = three_level(1.3 * kOmegaRef, 2.9 * kOmegaRef, q, p, SphericalDipole{}, "B");
    double worst = 0.0;
    int compared = 0;
    for (auto [kr, kd] : std::vector<std::pair<double, double>>{{0.5, 2}, {1, 5}, {3, 20}}) {
      for (int a : {1, 2}) {
        const TwoAtomConfig cfg{A, B, a, 0, {kr / K, kd / K}};
        const EnergyResult one = w_res_one_excited(cfg), dis = w_res_two_excited_dissimilar(cfg);
        if (one.breakdown.size() != dis.breakdown.size()) {
          ok = false;
          d << " channel count differs;";
          continue;
        }
        for (std::size_t n = 0; n < one.breakdown.size(); ++n) {
          const auto& x = one.breakdown[n];
          const auto& y = dis.breakdown[n];
          const double e = std::max({rel_diff(x.w_a, y.w_a, 0.0), rel_diff(x.w_b, y.w_b, 0.0),
                                     rel_diff(x.phase_shift, y.phase_shift, 0.0)});
          worst = std::max(worst, e);
          if (x.i != y.i || x.j != y.j || e > 1e-13) {
            ok = false;
            d << " term (" << x.i << "," << x.j << ") differs by " << e << ";";
          }
          ++compared;
        }
      }
    }
    d << " one-excited vs dissimilar terms=" << compared << " worst_rel=" << worst << ";";
    int equal = 0;
    for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {0, 1}, {2, 1}, {1, 2}}) {
      const TwoAtomConfig cfg{A, B, a, b, {1.0 / K, 5.0 / K}};
      const EnergyResult w = w_off_full(cfg);
      if (!(w.w_a == w.w_b && w.w_b == w.phase_shift)) {
        ok = false;
        d << " off-resonant (" << a << "," << b << ") not equal;";
      } else {
        ++equal;
      }
    }
    d << " off-resonant equalities=" << equal;
    return ok && compared > 0;
  });
}

VerifyReport run_verify(const VerifyOptions& opts) {
  VerifyReport rep;
  rep.level = opts.level;
  const auto t0 = std::chrono::steady_clock::now();
  if (opts.level == VerifyLevel::quick) {
    rep.checks.push_back(check_representation_equivalence({0.2, 2.0}, {2.0, 20.0}, opts.sign));
    rep.checks.push_back(check_subthreshold());
    rep.checks.push_back(check_resonant_algebra(opts.threads));
    rep.checks.push_back(check_static_free_limit());
  } else {
    rep.checks.push_back(check_representation_equivalence({0.2, 1.0, 2.0}, {2.0, 5.0, 20.0}, opts.sign));
    rep.checks.push_back(check_kramers_kronig());
    rep.checks.push_back(check_subthreshold());
    rep.checks.push_back(check_imaginary_frequency_oracle());
    rep.checks.push_back(check_free_space_reductions());
    rep.checks.push_back(check_resonant_algebra(opts.threads));
    rep.checks.push_back(check_off_resonant_shape(opts.threads));
    rep.checks.push_back(check_static_shape(opts.threads));
    rep.checks.push_back(check_static_free_limit());
    rep.checks.push_back(check_double_pole());
    rep.checks.push_back(check_scenario_reductions());
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace cavityqed
