#pragma once

#include "cavityqed/atomic_system.hpp"
#include "cavityqed/potentials_vdw.hpp"
#include "cavityqed/quadrature.hpp"

namespace cavityqed {

// Dimensionless electrostatic potentials (modified-Bessel sums in r/d).
struct StaticPotentialTensor {
  double v00 = 0.0;
  double vpp = 0.0;
  double vpm = 0.0;
  long n00 = 0;
  long npp = 0;
  long npm = 0;
  // Set when the free-space closed forms were used (r/d below the switch).
  bool free_space_limit = false;
  double error_bound = 0.0;  // relative, meaningful when free_space_limit
};

// Below this r/d the sums are replaced by their free-space limits.
inline constexpr double kStaticFreeSwitch = 0.005;

StaticPotentialTensor v_static_dimensionless(const CavityGeometry& geom, const SeriesSpec& spec = {});

// d^3/(4 pi^2 r^3), -3 d^3/(8 pi^2 r^3), -d^3/(8 pi^2 r^3).
StaticPotentialTensor v_static_free(const CavityGeometry& geom);

// Interaction of the two dipoles induced by a static field; equal for both
// atoms and equal to the phase shift. With free_space the cavity potentials
// are replaced by their free-space forms.
EnergyResult w_static_full(const TwoAtomConfig& config, const StaticField& field,
                           const SeriesSpec& spec = {}, bool free_space = false);

}  // namespace cavityqed
