#include <doctest.h>

#include <cmath>
#include <complex>

#include "cavityqed/atomic_system.hpp"
#include "cavityqed/errors.hpp"
#include "test_helpers.hpp"

using namespace cavityqed;
using C = std::complex<double>;

namespace {

AtomSpec two_level(double omega, SphericalDipole d) {
  AtomSpec a;
  a.label = "two-level";
  a.levels = {{0, 0.0}, {1, omega}};
  a.dipoles[{0, 1}] = d;
  a.complete_hermitian();
  return a;
}

const SphericalDipole kDip{{1e-29, 0.0}, {0.0, 0.0}, {0.0, 0.0}};

}  // namespace

TEST_CASE("Spherical dipole components from Cartesian ones") {
  const SphericalDipole d = SphericalDipole::from_cartesian(C(1.0, 0.0), C(0.0, 0.0), C(2.0, 0.0));
  CHECK(d.d0 == C(2.0, 0.0));
  CHECK(std::abs(d.dplus - C(1.0 / std::sqrt(2.0), 0.0)) < 1e-15);
  CHECK(std::abs(d.dminus - C(1.0 / std::sqrt(2.0), 0.0)) < 1e-15);
  const SphericalDipole y = SphericalDipole::from_cartesian(C(0.0, 0.0), C(1.0, 0.0), C(0.0, 0.0));
  CHECK(std::abs(y.dplus - C(0.0, -1.0 / std::sqrt(2.0))) < 1e-15);
  CHECK(std::abs(y.dminus - C(0.0, 1.0 / std::sqrt(2.0))) < 1e-15);
  CHECK(y.norm2() == doctest::Approx(1.0));
}

TEST_CASE("Hermitian partner of a dipole matrix element") {
  const SphericalDipole d{C(1.0, 2.0), C(3.0, -1.0), C(0.5, 0.25)};
  const SphericalDipole h = d.hermitian_partner();
  CHECK(h.d0 == std::conj(d.d0));
  CHECK(h.dplus == std::conj(d.dminus));
  CHECK(h.dminus == std::conj(d.dplus));
  const SphericalDipole back = h.hermitian_partner();
  CHECK(back.d0 == d.d0);
  CHECK(back.dplus == d.dplus);
  CHECK(back.dminus == d.dminus);
}

TEST_CASE("Spherical contraction") {
  const SphericalGreen g{2.0, 3.0, 5.0};  // pm, pp, 00
  const SphericalDipole x{C(1.0, 0.0), C(0.0, 0.0), C(0.0, 0.0)};
  CHECK(contract(x, g, x) == C(5.0, 0.0));
  const SphericalDipole p{C(0.0, 0.0), C(1.0, 0.0), C(0.0, 0.0)};
  const SphericalDipole m{C(0.0, 0.0), C(0.0, 0.0), C(1.0, 0.0)};
  CHECK(contract(p, g, p) == C(3.0, 0.0));
  CHECK(contract(p, g, m) == C(2.0, 0.0));
  // Equals the Cartesian contraction with G = diag(par, perp, 00).
  const C dx(0.3, 0.1), dy(-0.2, 0.4), dz(0.7, 0.0), ex(1.1, -0.5), ey(0.2, 0.2), ez(-0.4, 0.3);
  const CartesianGreen cg = from_spherical(g);
  const C cart = dx * cg.par * ex + dy * cg.perp * ey + dz * cg.g00 * ez;
  const C sph = contract(SphericalDipole::from_cartesian(dx, dy, dz), g, SphericalDipole::from_cartesian(ex, ey, ez));
  CHECK(std::abs(cart - sph) < 1e-14);
}

TEST_CASE("Scenario classification and resonant channels") {
  const AtomSpec a = two_level(1e15, kDip);
  TwoAtomConfig cfg{a, two_level(1.3e15, kDip), 1, 0, {1e-7, 1e-6}};
  ValidationReport rep = validate(cfg);
  REQUIRE(rep.ok());
  CHECK(*rep.scenario == Scenario::one_excited);
  CHECK(rep.resonant_channels.size() == 1);
  CHECK(to_string(*rep.scenario) == "one-excited");

  cfg.state_a = 0;
  rep = validate(cfg);
  CHECK(*rep.scenario == Scenario::both_ground);
  CHECK(rep.resonant_channels.empty());

  cfg.state_a = 1;
  cfg.state_b = 1;
  CHECK(validate(cfg).scenario == Scenario::both_excited_dissimilar);
  cfg.atom_b = a;
  CHECK(validate(cfg).scenario == Scenario::both_excited_identical);
}

TEST_CASE("Validation violations") {
  AtomSpec a = two_level(1e15, kDip);
  a.dipoles.erase({1, 0});
  TwoAtomConfig cfg{a, a, 0, 0, {1e-7, 1e-6}};
  CHECK_FALSE(validate(cfg).ok());
  CHECK_THROWS_AS(require_valid(cfg), ConfigError);

  AtomSpec b = two_level(1e15, kDip);
  b.dipoles[{1, 0}] = SphericalDipole{C(2e-29, 0.0), {}, {}};
  CHECK_FALSE(validate({b, b, 0, 0, {1e-7, 1e-6}}).ok());

  AtomSpec c = two_level(1e15, kDip);
  c.dipoles[{0, 5}] = kDip;
  CHECK_FALSE(validate({c, c, 0, 0, {1e-7, 1e-6}}).ok());

  const AtomSpec good = two_level(1e15, kDip);
  CHECK_FALSE(validate({good, good, 3, 0, {1e-7, 1e-6}}).ok());
  CHECK_FALSE(validate({good, good, 0, 0, {-1e-7, 1e-6}}).ok());
}

TEST_CASE("Perturbative regime check") {
  const double two_pi = 2.0 * M_PI;
  const double wa = two_pi * 400e12;
  const AtomSpec A = two_level(wa, kDip);
  const AtomSpec B = two_level(wa + two_pi * 1e9, kDip);
  const TwoAtomConfig cfg{A, B, 1, 0, {1e-7, 1e-6}};
  const double w = PhysicalConstants::hbar * two_pi * 1e6;
  const RegimeReport rep = check_perturbative_regime(cfg, w);
  REQUIRE(rep.entries.size() == 1);
  CHECK(rep.max_ratio == doctest::Approx(1e-3).epsilon(1e-6));
  CHECK_FALSE(rep.any_flagged);

  const RegimeReport flagged = check_perturbative_regime(cfg, 500.0 * w);
  CHECK(flagged.max_ratio == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(flagged.any_flagged);

  const TwoAtomConfig degenerate{A, two_level(wa, kDip), 1, 0, {1e-7, 1e-6}};
  CHECK_THROWS_AS(check_perturbative_regime(degenerate, w), DegenerateError);
}

TEST_CASE("Static polarisability") {
  AtomSpec none;
  none.levels = {{0, 0.0}, {1, 1.0}};
  CHECK(static_polarisability(none, 0) == 0.0);

  const AtomSpec unit = two_level(1.0, SphericalDipole{C(1.0, 0.0), {}, {}});
  CHECK(static_polarisability(unit, 0, 1.0) == doctest::Approx(2.0));

  const double w = 2.0 * M_PI * 384e12;
  const double d = 2.5e-29;
  const AtomSpec desk = two_level(w, SphericalDipole{C(d, 0.0), {}, {}});
  CHECK(rel_err(static_polarisability(desk, 0), 2.0 * d * d / (PhysicalConstants::hbar * w)) < 1e-15);
}

TEST_CASE("Static field from Cartesian components") {
  const StaticField f = StaticField::from_cartesian(2.0, 0.0, 3.0);
  CHECK(f.e0 == 3.0);
  CHECK(f.eplus == doctest::Approx(2.0 / std::sqrt(2.0)));
  CHECK(f.eminus == doctest::Approx(2.0 / std::sqrt(2.0)));
  CHECK_THROWS_AS(StaticField::from_cartesian(0.0, 1.0, 0.0), ConfigError);
}

TEST_CASE("Unit conversions") {
  CHECK(frequency_to_rad_per_s(1.0, "Hz") == doctest::Approx(2.0 * M_PI));
  CHECK(rel_err(frequency_to_rad_per_s(1.0, "eV"), PhysicalConstants::elementary_charge / PhysicalConstants::hbar) <
        1e-15);
  CHECK(length_to_metres(3.0, "nm") == doctest::Approx(3e-9));
  CHECK(length_to_metres(1.0, "a0") == PhysicalConstants::bohr_radius);
  CHECK(dipole_to_si(1.0, "debye") == PhysicalConstants::debye);
  CHECK(rel_err(dipole_to_si(1.0, "e*a0"), PhysicalConstants::elementary_charge * PhysicalConstants::bohr_radius) <
        1e-15);
  CHECK_THROWS_AS(frequency_to_rad_per_s(1.0, "furlong"), ConfigError);
  CHECK_THROWS_AS(length_to_metres(1.0, "parsec"), ConfigError);
}

TEST_CASE("System document parsing") {
  const char* text = R"({
    "atoms": [
      {"label": "Rb", "levels": [{"index": 0, "omega": 0}, {"index": 1, "omega": 384.23, "unit": "Hz"}],
       "dipole_unit": "e*a0",
       "dipoles": [{"from": 0, "to": 1, "dx": 2.0, "dz": [1.0, 0.5]}],
       "complete_hermitian": true},
      {"label": "Cs", "levels": [{"index": 0, "omega": 0}, {"index": 1, "omega": 1.5, "unit": "eV"}],
       "dipoles": [{"from": 0, "to": 1, "d0": 1e-29}, {"from": 1, "to": 0, "d0": 1e-29}]}
    ],
    "config": {"state_a": 1, "state_b": 0, "r": 100, "d": 500, "length_unit": "nm"},
    "field": {"Ex": 1e5, "Ez": 2e5},
    "K": 0.01,
    "channel_factors": [{"i": 0, "j": 1, "value": -0.5}]
  })";
  const SystemDocument doc = parse_system_json(text);
  REQUIRE(doc.atoms.size() == 2);
  CHECK(doc.config.atom_a.label == "Rb");
  CHECK(doc.config.atom_b.label == "Cs");
  CHECK(doc.config.atom_a.omega(1) == doctest::Approx(2.0 * M_PI * 384.23));
  CHECK(doc.config.geometry.r == doctest::Approx(1e-7));
  CHECK(doc.config.geometry.d == doctest::Approx(5e-7));
  const double ea0 = PhysicalConstants::elementary_charge * PhysicalConstants::bohr_radius;
  const SphericalDipole d01 = doc.config.atom_a.dipole(0, 1);
  CHECK(std::abs(d01.d0 - C(ea0, 0.5 * ea0)) < 1e-45);
  const SphericalDipole d10 = doc.config.atom_a.dipole(1, 0);
  CHECK(std::abs(d10.d0 - C(ea0, -0.5 * ea0)) < 1e-45);
  REQUIRE(doc.field.has_value());
  CHECK(doc.field->e0 == 2e5);
  REQUIRE(doc.reference_wavenumber.has_value());
  CHECK(*doc.reference_wavenumber == doctest::Approx(1e7));  // 0.01 per nm
  CHECK(doc.channel_factors.at({0, 1}) == -0.5);
  CHECK(validate(doc.config).ok());
}

TEST_CASE("A single atom is used for both positions") {
  const SystemDocument doc = parse_system_json(R"({
    "atoms": [{"levels": [{"index": 0, "omega": 0}, {"index": 1, "omega": 1e15}],
               "dipoles": [{"from": 0, "to": 1, "d0": 1e-29}], "complete_hermitian": true}],
    "config": {"state_a": 1, "state_b": 1, "r": 1e-7, "d": 1e-6}})");
  CHECK(doc.config.scenario() == Scenario::both_excited_identical);
}

TEST_CASE("Malformed or invalid documents raise ConfigError") {
  CHECK_THROWS_AS(parse_system_json("{not json"), ConfigError);
  CHECK_THROWS_AS(parse_system_json("[]"), ConfigError);
  CHECK_THROWS_AS(parse_system_json(R"({"atoms": []})"), ConfigError);
  CHECK_THROWS_AS(parse_system_json(R"({"atoms": [{"levels": [{"index": 0, "omega": 0}]}]})"), ConfigError);
  CHECK_THROWS_AS(parse_system_json(R"({
    "atoms": [{"levels": [{"index": 0, "omega": 0}, {"index": 1, "omega": 1}],
               "dipoles": [{"from": 0, "to": 1, "d0": 1, "dx": 1}]}],
    "config": {"state_a": 0, "state_b": 0, "r": 1, "d": 1}})"),
                  ConfigError);
  CHECK_THROWS_AS(load_system_json("/nonexistent/system.json"), ConfigError);
}
