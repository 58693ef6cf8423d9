#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cavityqed/atomic_system.hpp"
#include "cavityqed/green_tensor.hpp"

namespace cavityqed {

// Dimensionless tensor potential in the spherical basis.
struct PotentialTensor {
  double v00 = 0.0;
  double vpp = 0.0;
  double vpm = 0.0;
};

struct ChannelContribution {
  std::string family;
  int i = 0;  // level of atom A
  int j = 0;  // level of atom B
  double w_a = 0.0;
  double w_b = 0.0;
  double phase_shift = 0.0;
};

struct SkippedChannel {
  std::string family;
  int i = 0;
  int j = 0;
  std::string reason;
};

// Potentials of each atom and the phase-shift rate of the pair, in joules.
// Half of the second-order energy shift is reported for each atom.
struct EnergyResult {
  double w_a = 0.0;
  double w_b = 0.0;
  double phase_shift = 0.0;
  std::vector<ChannelContribution> breakdown;
  std::vector<SkippedChannel> skipped;

  double phase_shift_rate() const { return phase_shift / PhysicalConstants::hbar; }  // rad/s
};

// Integral over q of q^4 G_pq(r; iKq)^2 / [K (q^2 + 1)]^2.
PotentialTensor v_off_dimensionless(const CavityGeometry& geom, double K, const QuadSpec& spec = {});

// Same integral with the free-space Green tensor.
PotentialTensor v_off_free(double r, double K, const QuadSpec& spec = {});

// Integrand of v_off_dimensionless at q.
PotentialTensor v_off_integrand(const CavityGeometry& geom, double K, double q);

// Off-resonant potential from the imaginary-frequency integral over every
// pair of transitions. w_a = w_b = phase_shift.
EnergyResult w_off_full(const TwoAtomConfig& config, const QuadSpec& spec = {},
                        bool free_space = false);

// Channel factors C_ij keyed by (i, j); missing entries default to
// sgn(omega_ia omega_jb).
using ChannelFactors = std::map<std::pair<int, int>, double>;

// Off-resonant potential with every transition wavenumber replaced by K, so
// that the frequency integral factors into v_off_dimensionless.
EnergyResult w_off_factorized(const TwoAtomConfig& config, double K,
                              const ChannelFactors& factors = {}, const QuadSpec& spec = {});

struct ResonantTensors {
  PotentialTensor res_a;  // (Re^2 - Im^2) G_pq(r, K) / K^2
  PotentialTensor res_b;  // (Re^2 + Im^2) G_pq(r, K) / K^2
};

ResonantTensors v_res_dimensionless(const CavityGeometry& geom, double K,
                                    const GreenOptions& opts = {});
ResonantTensors v_res_free(double r, double K);

enum class DerivativeMethod {
  checked,            // analytic, cross-checked against finite differences
  analytic,
  finite_difference,
};

struct ResonantOptions {
  GreenOptions green{};
  DerivativeMethod derivative = DerivativeMethod::checked;
  double derivative_tolerance = 1e-6;
  // Evaluate with the free-space Green tensor instead of the cavity one.
  bool free_space = false;
};

// Resonant potentials for atom A excited and atom B in its ground state (or
// the mirror case). phase_shift equals the excited atom's potential.
EnergyResult w_res_one_excited(const TwoAtomConfig& config, const ResonantOptions& opts = {});

// Both atoms excited, dissimilar: the four channel families of the
// dissimilar-pair formulas. Also valid when one atom is in its ground state,
// where the families with a lower level of that atom are empty.
EnergyResult w_res_two_excited_dissimilar(const TwoAtomConfig& config,
                                          const ResonantOptions& opts = {});

// Identical atoms in the same excited state, including the double-pole
// channels i = j.
EnergyResult w_res_two_excited_identical(const TwoAtomConfig& config,
                                         const ResonantOptions& opts = {});

// Dispatch on the scenario; both-ground configurations give zero.
EnergyResult w_res(const TwoAtomConfig& config, const ResonantOptions& opts = {});

}  // namespace cavityqed
