#include "cavityqed/potentials_static.hpp"

#include <cmath>

#include "cavityqed/errors.hpp"
#include "cavityqed/special_functions.hpp"

namespace cavityqed {

namespace {

constexpr double kPi = M_PI;

}  // namespace

StaticPotentialTensor v_static_free(const CavityGeometry& geom) {
  geom.validate();
  const double t = std::pow(geom.d / geom.r, 3);
  StaticPotentialTensor v;
  v.v00 = t / (4.0 * kPi * kPi);
  v.vpp = -3.0 * t / (8.0 * kPi * kPi);
  v.vpm = -t / (8.0 * kPi * kPi);
  v.free_space_limit = true;
  return v;
}

StaticPotentialTensor v_static_dimensionless(const CavityGeometry& geom, const SeriesSpec& spec) {
  geom.validate();
  spec.validate();
  const double x = geom.r / geom.d;
  if (x < kStaticFreeSwitch) {
    // Leading correction relative to the free-space form: the sums differ
    // from their integral approximation by terms of order (r/d)^3, bounded
    // by the relative difference observed at the switch point.
    StaticPotentialTensor v = v_static_free(geom);
    const StaticPotentialTensor at = v_static_dimensionless({kStaticFreeSwitch, 1.0}, spec);
    const StaticPotentialTensor fr = v_static_free({kStaticFreeSwitch, 1.0});
    const double e = std::max({std::abs(at.v00 / fr.v00 - 1.0), std::abs(at.vpp / fr.vpp - 1.0),
                               std::abs(at.vpm / fr.vpm - 1.0)});
    v.error_bound = e * std::pow(x / kStaticFreeSwitch, 3);
    return v;
  }
  StaticPotentialTensor v;
  auto s00 = sum_until_converged(
      [&](long n) {
        const double nn = static_cast<double>(n);
        return 4.0 * nn * nn * k0(2.0 * kPi * x * nn);
      },
      spec);
  // (-1)^n - 1 vanishes for even n and is -2 for odd n.
  auto spp = sum_until_converged(
      [&](long m) {
        const double n = static_cast<double>(2 * m - 1);
        const double z = kPi * x * n;
        return -0.5 * (n * n * k0(z) + 2.0 / (kPi * x) * n * k1(z));
      },
      spec);
  auto spm = sum_until_converged(
      [&](long m) {
        const double n = static_cast<double>(2 * m - 1);
        return -0.5 * n * n * k0(kPi * x * n);
      },
      spec);
  v.v00 = s00.value;
  v.vpp = spp.value;
  v.vpm = spm.value;
  v.n00 = s00.n_used;
  v.npp = 2 * spp.n_used - 1;
  v.npm = 2 * spm.n_used - 1;
  return v;
}

EnergyResult w_static_full(const TwoAtomConfig& config, const StaticField& field, const SeriesSpec& spec,
                           bool free_space) {
  require_valid(config);
  field.validate();
  const AtomSpec& A = config.atom_a;
  const AtomSpec& B = config.atom_b;
  const int a = config.state_a, b = config.state_b;
  EnergyResult res;
  if (field.e0 == 0.0 && field.eplus == 0.0 && field.eminus == 0.0) return res;
  const StaticPotentialTensor V =
      free_space ? v_static_free(config.geometry) : v_static_dimensionless(config.geometry, spec);
  const double d = config.geometry.d;
  using PC = PhysicalConstants;
  const double pref = 4.0 * kPi / (PC::epsilon0 * PC::hbar * PC::hbar * d * d * d);
  for (const auto& li : A.levels) {
    const SphericalDipole da = A.dipole(li.index, a);
    if (li.index == a || da.is_zero()) continue;
    const double w_ia = li.omega - A.omega(a);
    if (w_ia == 0.0) throw DegenerateError("w_static_full: zero transition frequency in atom A");
    for (const auto& lj : B.levels) {
      const SphericalDipole db = B.dipole(lj.index, b);
      if (lj.index == b || db.is_zero()) continue;
      const double w_jb = lj.omega - B.omega(b);
      if (w_jb == 0.0) throw DegenerateError("w_static_full: zero transition frequency in atom B");
      const double ap = std::norm(da.dplus), am = std::norm(da.dminus), a0 = std::norm(da.d0);
      const double bp = std::norm(db.dplus), bm = std::norm(db.dminus), b0 = std::norm(db.d0);
      const double bracket =
          (ap * bp * field.eplus * field.eplus + am * bm * field.eminus * field.eminus) * V.vpp +
          a0 * b0 * field.e0 * field.e0 * V.v00 + (ap * bm + am * bp) * field.eminus * field.eplus * V.vpm;
      const double w = pref * bracket / (w_ia * w_jb);
      res.w_a += w;
      res.w_b += w;
      res.phase_shift += w;
      res.breakdown.push_back({"static", li.index, lj.index, w, w, w});
    }
  }
  return res;
}

}  // namespace cavityqed
