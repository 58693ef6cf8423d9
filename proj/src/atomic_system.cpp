#include "cavityqed/atomic_system.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "cavityqed/errors.hpp"

namespace cavityqed {

namespace {

using C = std::complex<double>;
using nlohmann::json;

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

bool close(C a, C b, double scale) { return std::abs(a - b) <= 1e-9 * scale; }

}  // namespace

SphericalDipole SphericalDipole::from_cartesian(C dx, C dy, C dz) {
  // dx = (d+ + d-)/sqrt2, dy = i (d+ - d-)/sqrt2.
  const C i(0.0, 1.0);
  return {dz, (dx - i * dy) * kInvSqrt2, (dx + i * dy) * kInvSqrt2};
}

SphericalDipole SphericalDipole::hermitian_partner() const {
  return {std::conj(d0), std::conj(dminus), std::conj(dplus)};
}

double SphericalDipole::norm2() const {
  return std::norm(d0) + std::norm(dplus) + std::norm(dminus);
}

bool SphericalDipole::is_zero() const { return norm2() == 0.0; }

C contract(const SphericalDipole& x, const SphericalGreen& g, const SphericalDipole& y) {
  return x.d0 * y.d0 * g.g00 + (x.dplus * y.dplus + x.dminus * y.dminus) * g.pp +
         (x.dplus * y.dminus + x.dminus * y.dplus) * g.pm;
}

bool AtomSpec::has_level(int index) const {
  return std::any_of(levels.begin(), levels.end(), [&](const Level& l) { return l.index == index; });
}

double AtomSpec::omega(int index) const {
  for (const auto& l : levels) {
    if (l.index == index) return l.omega;
  }
  throw ConfigError("atom '" + label + "': no level with index " + std::to_string(index));
}

int AtomSpec::ground_index() const {
  if (levels.empty()) throw ConfigError("atom '" + label + "' has no levels");
  auto it = std::min_element(levels.begin(), levels.end(), [](const Level& a, const Level& b) {
    return a.omega < b.omega || (a.omega == b.omega && a.index < b.index);
  });
  return it->index;
}

SphericalDipole AtomSpec::dipole(int i, int j) const {
  auto it = dipoles.find({i, j});
  return it == dipoles.end() ? SphericalDipole{} : it->second;
}

void AtomSpec::complete_hermitian() {
  std::vector<std::pair<std::pair<int, int>, SphericalDipole>> extra;
  for (const auto& [key, d] : dipoles) {
    const std::pair<int, int> partner{key.second, key.first};
    if (!dipoles.count(partner)) extra.push_back({partner, d.hermitian_partner()});
  }
  for (auto& e : extra) dipoles.insert(e);
}

bool AtomSpec::same_as(const AtomSpec& o) const {
  if (levels.size() != o.levels.size() || dipoles.size() != o.dipoles.size()) return false;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (levels[i].index != o.levels[i].index || levels[i].omega != o.levels[i].omega) return false;
  }
  for (const auto& [key, d] : dipoles) {
    auto it = o.dipoles.find(key);
    if (it == o.dipoles.end()) return false;
    if (it->second.d0 != d.d0 || it->second.dplus != d.dplus || it->second.dminus != d.dminus) {
      return false;
    }
  }
  return true;
}

std::string to_string(Scenario s) {
  switch (s) {
    case Scenario::both_ground:
      return "both-ground";
    case Scenario::one_excited:
      return "one-excited";
    case Scenario::both_excited_dissimilar:
      return "both-excited-dissimilar";
    case Scenario::both_excited_identical:
      return "both-excited-identical";
  }
  return "unknown";
}

Scenario TwoAtomConfig::scenario() const {
  const bool ea = state_a != atom_a.ground_index();
  const bool eb = state_b != atom_b.ground_index();
  if (!ea && !eb) return Scenario::both_ground;
  if (ea != eb) return Scenario::one_excited;
  if (state_a == state_b && atom_a.same_as(atom_b)) return Scenario::both_excited_identical;
  return Scenario::both_excited_dissimilar;
}

namespace {

void validate_atom(const AtomSpec& atom, const std::string& name, std::vector<std::string>& out) {
  const std::string tag = "atom " + name + " ('" + atom.label + "'): ";
  if (atom.levels.empty()) {
    out.push_back(tag + "no levels");
    return;
  }
  std::set<int> seen;
  for (const auto& l : atom.levels) {
    if (!seen.insert(l.index).second) out.push_back(tag + "duplicate level index " + std::to_string(l.index));
    if (!std::isfinite(l.omega)) out.push_back(tag + "non-finite omega at level " + std::to_string(l.index));
  }
  std::vector<Level> sorted = atom.levels;
  std::sort(sorted.begin(), sorted.end(), [](const Level& a, const Level& b) { return a.index < b.index; });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i].omega < sorted[i - 1].omega) {
      out.push_back(tag + "omega decreases between levels " + std::to_string(sorted[i - 1].index) +
                    " and " + std::to_string(sorted[i].index));
    }
  }
  for (const auto& [key, d] : atom.dipoles) {
    const auto [i, j] = key;
    const std::string pair = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    if (i == j) out.push_back(tag + "self dipole " + pair);
    if (!seen.count(i) || !seen.count(j)) out.push_back(tag + "dipole " + pair + " refers to a missing level");
    if (!std::isfinite(d.norm2())) out.push_back(tag + "non-finite dipole " + pair);
    auto it = atom.dipoles.find({j, i});
    if (it == atom.dipoles.end()) {
      out.push_back(tag + "dipole " + pair + " has no Hermitian partner (" + std::to_string(j) + "," +
                    std::to_string(i) + ")");
      continue;
    }
    const SphericalDipole h = d.hermitian_partner();
    const double scale = std::sqrt(std::max(d.norm2(), it->second.norm2()));
    if (!close(h.d0, it->second.d0, scale) || !close(h.dplus, it->second.dplus, scale) ||
        !close(h.dminus, it->second.dminus, scale)) {
      out.push_back(tag + "dipoles " + pair + " and its partner are not Hermitian conjugates");
    }
  }
}

void add_channels(const AtomSpec& atom, int state, char name, std::vector<ResonantChannel>& out) {
  const double w = atom.omega(state);
  for (const auto& l : atom.levels) {
    if (l.omega < w && !atom.dipole(state, l.index).is_zero()) out.push_back({name, state, l.index});
  }
}

}  // namespace

ValidationReport validate(const TwoAtomConfig& config) {
  ValidationReport rep;
  validate_atom(config.atom_a, "A", rep.violations);
  validate_atom(config.atom_b, "B", rep.violations);
  if (!(config.geometry.r > 0.0) || !std::isfinite(config.geometry.r)) {
    rep.violations.push_back("geometry: r must be positive and finite");
  }
  if (!(config.geometry.d > 0.0) || !std::isfinite(config.geometry.d)) {
    rep.violations.push_back("geometry: d must be positive and finite");
  }
  const bool sa = !config.atom_a.levels.empty() && config.atom_a.has_level(config.state_a);
  const bool sb = !config.atom_b.levels.empty() && config.atom_b.has_level(config.state_b);
  if (!sa) rep.violations.push_back("state_a " + std::to_string(config.state_a) + " is not a level of atom A");
  if (!sb) rep.violations.push_back("state_b " + std::to_string(config.state_b) + " is not a level of atom B");
  if (sa && sb) {
    rep.scenario = config.scenario();
    add_channels(config.atom_a, config.state_a, 'A', rep.resonant_channels);
    add_channels(config.atom_b, config.state_b, 'B', rep.resonant_channels);
  }
  return rep;
}

void require_valid(const TwoAtomConfig& config) {
  const ValidationReport rep = validate(config);
  if (rep.ok()) return;
  std::ostringstream msg;
  msg << "invalid configuration:";
  for (const auto& v : rep.violations) msg << "\n  - " << v;
  throw ConfigError(msg.str());
}

namespace {

void add_detuning(RegimeReport& rep, const std::string& channel, double detuning, double w,
                  double flag_ratio) {
  if (detuning == 0.0) throw DegenerateError("zero detuning in channel " + channel);
  RegimeEntry e;
  e.channel = channel;
  e.detuning = std::abs(detuning);
  e.ratio = std::abs(w) / (PhysicalConstants::hbar * e.detuning);
  e.flagged = e.ratio > flag_ratio;
  rep.max_ratio = std::max(rep.max_ratio, e.ratio);
  rep.any_flagged = rep.any_flagged || e.flagged;
  rep.entries.push_back(e);
}

std::string chan(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

}  // namespace

RegimeReport check_perturbative_regime(const TwoAtomConfig& config, double w_estimate,
                                       double flag_ratio) {
  require_valid(config);
  RegimeReport rep;
  const AtomSpec& A = config.atom_a;
  const AtomSpec& B = config.atom_b;
  const int a = config.state_a, b = config.state_b;
  const double wa = A.omega(a), wb = B.omega(b);
  auto coupled = [](const AtomSpec& at, int s, int i) { return !at.dipole(s, i).is_zero(); };

  switch (config.scenario()) {
    case Scenario::both_ground:
      break;
    case Scenario::one_excited: {
      const bool a_excited = a != A.ground_index();
      const AtomSpec& X = a_excited ? A : B;
      const AtomSpec& Y = a_excited ? B : A;
      const int x = a_excited ? a : b, y = a_excited ? b : a;
      const double wx = X.omega(x), wy = Y.omega(y);
      for (const auto& li : X.levels) {
        if (!(li.omega < wx) || !coupled(X, x, li.index)) continue;
        for (const auto& lj : Y.levels) {
          if (lj.index == y || !coupled(Y, y, lj.index)) continue;
          add_detuning(rep, chan(li.index, lj.index), (wx - li.omega) - (lj.omega - wy), w_estimate,
                       flag_ratio);
        }
      }
      break;
    }
    case Scenario::both_excited_dissimilar:
      for (const auto& li : A.levels) {
        if (li.index == a || !coupled(A, a, li.index)) continue;
        for (const auto& lj : B.levels) {
          if (lj.index == b || !coupled(B, b, lj.index)) continue;
          const double w_ai = wa - li.omega, w_bj = wb - lj.omega;
          // Channels with i<a, j>b or i>a, j<b or i<a, j<b; the formulas
          // divide by omega_ai^2 - omega_bj^2 in each.
          if (w_ai > 0.0 || w_bj > 0.0) {
            add_detuning(rep, chan(li.index, lj.index), std::abs(w_ai) - std::abs(w_bj), w_estimate,
                         flag_ratio);
          }
        }
      }
      break;
    case Scenario::both_excited_identical:
      for (const auto& li : A.levels) {
        if (!(li.omega < wa) || !coupled(A, a, li.index)) continue;
        for (const auto& lj : A.levels) {
          if (lj.index == li.index || lj.index == a || !coupled(A, a, lj.index)) continue;
          add_detuning(rep, chan(li.index, lj.index), (wa - li.omega) - (lj.omega - wa), w_estimate,
                       flag_ratio);
        }
      }
      break;
  }
  return rep;
}

double static_polarisability(const AtomSpec& atom, int state, double hbar) {
  if (!atom.has_level(state)) throw ConfigError("static_polarisability: unknown state");
  const double ws = atom.omega(state);
  double alpha = 0.0;
  for (const auto& l : atom.levels) {
    if (l.index == state) continue;
    const double d2 = atom.dipole(state, l.index).norm2();
    if (d2 == 0.0) continue;
    const double w = l.omega - ws;
    if (w == 0.0) throw DegenerateError("static_polarisability: zero transition frequency");
    alpha += d2 / w;
  }
  return 2.0 * alpha / hbar;
}

StaticField StaticField::from_cartesian(double ex, double ey, double ez) {
  if (ey != 0.0) {
    throw ConfigError("static field: a y component makes the spherical components complex; "
                      "rotate the frame so that the field lies in the x-z plane");
  }
  return {ez, ex * kInvSqrt2, ex * kInvSqrt2};
}

void StaticField::validate() const {
  if (!std::isfinite(e0) || !std::isfinite(eplus) || !std::isfinite(eminus)) {
    throw ConfigError("static field components must be finite");
  }
}

double frequency_to_rad_per_s(double value, const std::string& unit) {
  if (unit == "rad/s") return value;
  if (unit == "Hz") return 2.0 * M_PI * value;
  if (unit == "eV") return value * PhysicalConstants::elementary_charge / PhysicalConstants::hbar;
  throw ConfigError("unknown frequency unit '" + unit + "' (expected rad/s, Hz or eV)");
}

double length_to_metres(double value, const std::string& unit) {
  if (unit == "m") return value;
  if (unit == "mm") return value * 1e-3;
  if (unit == "um") return value * 1e-6;
  if (unit == "nm") return value * 1e-9;
  if (unit == "a0") return value * PhysicalConstants::bohr_radius;
  throw ConfigError("unknown length unit '" + unit + "' (expected m, mm, um, nm or a0)");
}

double dipole_to_si(double value, const std::string& unit) {
  if (unit == "C*m") return value;
  if (unit == "e*a0") return value * PhysicalConstants::elementary_charge * PhysicalConstants::bohr_radius;
  if (unit == "debye") return value * PhysicalConstants::debye;
  throw ConfigError("unknown dipole unit '" + unit + "' (expected C*m, e*a0 or debye)");
}

namespace {

C read_complex(const json& j, const std::string& what) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw ConfigError(what + ": expected a number or [re, im]");
}

template <class T>
T required(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) throw ConfigError(where + ": missing field '" + key + "'");
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(where + ": field '" + key + "' has the wrong type");
  }
}

AtomSpec parse_atom(const json& j, std::size_t n) {
  const std::string where = "atoms[" + std::to_string(n) + "]";
  if (!j.is_object()) throw ConfigError(where + ": expected an object");
  AtomSpec atom;
  atom.label = j.value("label", std::string("atom") + std::to_string(n));
  if (!j.contains("levels") || !j["levels"].is_array()) throw ConfigError(where + ": missing 'levels' array");
  for (const auto& l : j["levels"]) {
    Level lv;
    lv.index = required<int>(l, "index", where + ".levels");
    const std::string unit = l.value("unit", std::string("rad/s"));
    lv.omega = frequency_to_rad_per_s(required<double>(l, "omega", where + ".levels"), unit);
    atom.levels.push_back(lv);
  }
  std::sort(atom.levels.begin(), atom.levels.end(),
            [](const Level& a, const Level& b) { return a.index < b.index; });
  const std::string dunit = j.value("dipole_unit", std::string("C*m"));
  const double scale = dipole_to_si(1.0, dunit);
  if (j.contains("dipoles")) {
    if (!j["dipoles"].is_array()) throw ConfigError(where + ": 'dipoles' must be an array");
    for (const auto& d : j["dipoles"]) {
      const std::string dw = where + ".dipoles";
      const int from = required<int>(d, "from", dw);
      const int to = required<int>(d, "to", dw);
      const bool spherical = d.contains("d0") || d.contains("dplus") || d.contains("dminus");
      const bool cartesian = d.contains("dx") || d.contains("dy") || d.contains("dz");
      if (spherical && cartesian) throw ConfigError(dw + ": mix of spherical and Cartesian components");
      auto get = [&](const char* key) { return d.contains(key) ? read_complex(d[key], dw + "." + key) : C{}; };
      SphericalDipole sd = cartesian ? SphericalDipole::from_cartesian(get("dx"), get("dy"), get("dz"))
                                     : SphericalDipole{get("d0"), get("dplus"), get("dminus")};
      sd.d0 *= scale;
      sd.dplus *= scale;
      sd.dminus *= scale;
      if (!atom.dipoles.insert({{from, to}, sd}).second) {
        throw ConfigError(dw + ": duplicate entry (" + std::to_string(from) + "," + std::to_string(to) + ")");
      }
    }
  }
  if (j.value("complete_hermitian", false)) atom.complete_hermitian();
  return atom;
}

}  // namespace

SystemDocument parse_system_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("top level must be a JSON object");
  if (!doc.contains("atoms") || !doc["atoms"].is_array() || doc["atoms"].empty() ||
      doc["atoms"].size() > 2) {
    throw ConfigError("'atoms' must be an array of one or two atoms");
  }
  SystemDocument out;
  for (std::size_t n = 0; n < doc["atoms"].size(); ++n) out.atoms.push_back(parse_atom(doc["atoms"][n], n));
  if (!doc.contains("config") || !doc["config"].is_object()) throw ConfigError("missing 'config' object");
  const json& c = doc["config"];
  const std::string lunit = c.value("length_unit", std::string("m"));
  out.config.atom_a = out.atoms[0];
  out.config.atom_b = out.atoms.size() > 1 ? out.atoms[1] : out.atoms[0];
  out.config.state_a = required<int>(c, "state_a", "config");
  out.config.state_b = required<int>(c, "state_b", "config");
  out.config.geometry.r = length_to_metres(required<double>(c, "r", "config"), lunit);
  out.config.geometry.d = length_to_metres(required<double>(c, "d", "config"), lunit);

  if (doc.contains("field")) {
    const json& f = doc["field"];
    const bool sph = f.contains("E0") || f.contains("Eplus") || f.contains("Eminus");
    const bool cart = f.contains("Ex") || f.contains("Ey") || f.contains("Ez");
    if (sph && cart) throw ConfigError("field: mix of spherical and Cartesian components");
    auto num = [&](const char* k) {
      if (!f.contains(k)) return 0.0;
      if (!f[k].is_number()) throw ConfigError(std::string("field.") + k + " must be a real number");
      return f[k].get<double>();
    };
    out.field = cart ? StaticField::from_cartesian(num("Ex"), num("Ey"), num("Ez"))
                     : StaticField{num("E0"), num("Eplus"), num("Eminus")};
    out.field->validate();
  }
  if (doc.contains("K")) {
    const double k = required<double>(doc, "K", "document");
    // K is given in inverse units of config.length_unit.
    const double kk = k / length_to_metres(1.0, lunit);
    if (!(kk > 0.0) || !std::isfinite(kk)) throw ConfigError("K must be positive");
    out.reference_wavenumber = kk;
  }
  if (doc.contains("channel_factors")) {
    for (const auto& e : doc["channel_factors"]) {
      out.channel_factors[{required<int>(e, "i", "channel_factors"), required<int>(e, "j", "channel_factors")}] =
          required<double>(e, "value", "channel_factors");
    }
  }
  return out;
}

SystemDocument load_system_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_system_json(ss.str());
}

}  // namespace cavityqed
