#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cavityqed/green_tensor.hpp"

namespace cavityqed {

// CODATA 2018 values, SI.
struct PhysicalConstants {
  static constexpr double hbar = 1.054571817e-34;
  static constexpr double epsilon0 = 8.8541878128e-12;
  static constexpr double c = 299792458.0;
  static constexpr double elementary_charge = 1.602176634e-19;
  static constexpr double bohr_radius = 5.29177210903e-11;
  static constexpr double debye = 3.33564095198152e-30;
};

// Spherical components of a dipole matrix element,
// d = d0 z + dplus (x + i y)/sqrt2 + dminus (x - i y)/sqrt2.
struct SphericalDipole {
  std::complex<double> d0{};
  std::complex<double> dplus{};
  std::complex<double> dminus{};

  static SphericalDipole from_cartesian(std::complex<double> dx, std::complex<double> dy,
                                        std::complex<double> dz);
  // Components of the transposed matrix element <j|d|i> given <i|d|j>.
  SphericalDipole hermitian_partner() const;
  double norm2() const;
  bool is_zero() const;
};

// Bilinear contraction x . G . y in the spherical basis.
std::complex<double> contract(const SphericalDipole& x, const SphericalGreen& g,
                              const SphericalDipole& y);

struct Level {
  int index = 0;
  double omega = 0.0;  // rad/s
};

struct AtomSpec {
  std::string label;
  std::vector<Level> levels;
  // (i, j) -> <i|d|j> in C m.
  std::map<std::pair<int, int>, SphericalDipole> dipoles;

  bool has_level(int index) const;
  double omega(int index) const;
  int ground_index() const;
  // <i|d|j>, zero when not listed.
  SphericalDipole dipole(int i, int j) const;
  // Fill in missing (j, i) entries from their (i, j) partners.
  void complete_hermitian();
  bool same_as(const AtomSpec& other) const;
};

enum class Scenario { both_ground, one_excited, both_excited_dissimilar, both_excited_identical };

std::string to_string(Scenario s);

struct TwoAtomConfig {
  AtomSpec atom_a;
  AtomSpec atom_b;
  int state_a = 0;
  int state_b = 0;
  CavityGeometry geometry;  // metres

  Scenario scenario() const;
};

struct ResonantChannel {
  char atom = 'A';
  int from = 0;  // excited state
  int to = 0;    // lower level reached
};

struct ValidationReport {
  std::vector<std::string> violations;
  std::optional<Scenario> scenario;
  std::vector<ResonantChannel> resonant_channels;

  bool ok() const { return violations.empty(); }
};

ValidationReport validate(const TwoAtomConfig& config);

// Throws ConfigError listing every violation when the config is invalid.
void require_valid(const TwoAtomConfig& config);

struct RegimeEntry {
  std::string channel;
  double detuning = 0.0;  // rad/s, absolute
  double ratio = 0.0;     // |W| / (hbar |detuning|)
  bool flagged = false;
};

struct RegimeReport {
  std::vector<RegimeEntry> entries;
  double max_ratio = 0.0;
  bool any_flagged = false;
};

// Compares |w_estimate| (J) with hbar times each detuning that the resonant
// formulas divide by. DegenerateError on an exactly vanishing detuning.
RegimeReport check_perturbative_regime(const TwoAtomConfig& config, double w_estimate,
                                       double flag_ratio = 0.1);

// alpha(0) = (2/hbar) sum_i |<state|d|i>|^2 / omega_{i,state}.
double static_polarisability(const AtomSpec& atom, int state,
                             double hbar = PhysicalConstants::hbar);

// Static external field, spherical components in V/m. Only real fields
// (no y component in the frame of the cavity) are representable.
struct StaticField {
  double e0 = 0.0;
  double eplus = 0.0;
  double eminus = 0.0;

  static StaticField from_cartesian(double ex, double ey, double ez);
  void validate() const;
};

// Parsed input document: the atoms, the two-atom configuration and the
// optional extras used by the potentials.
struct SystemDocument {
  std::vector<AtomSpec> atoms;
  TwoAtomConfig config;
  std::optional<StaticField> field;
  std::optional<double> reference_wavenumber;  // 1/m
  std::map<std::pair<int, int>, double> channel_factors;
};

SystemDocument parse_system_json(const std::string& text);
SystemDocument load_system_json(const std::string& path);

double frequency_to_rad_per_s(double value, const std::string& unit);
double length_to_metres(double value, const std::string& unit);
double dipole_to_si(double value, const std::string& unit);

}  // namespace cavityqed
