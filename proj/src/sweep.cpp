#include "cavityqed/sweep.hpp"

#include <omp.h>

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <exception>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cavityqed/errors.hpp"
#include "cavityqed/potentials_static.hpp"
#include "cavityqed/potentials_vdw.hpp"

namespace cavityqed {

namespace {

const std::map<Quantity, std::string> kQuantityNames = {
    {Quantity::green_modesum, "green_modesum"}, {Quantity::green_series, "green_series"},
    {Quantity::green_imagfreq, "green_imagfreq"}, {Quantity::v_off, "v_off"},
    {Quantity::v_res, "v_res"},                 {Quantity::v_static, "v_static"},
    {Quantity::w_off, "w_off"},                 {Quantity::w_res, "w_res"},
    {Quantity::w_static, "w_static"}};

bool needs_system(Quantity q) {
  return q == Quantity::w_off || q == Quantity::w_res || q == Quantity::w_static;
}

std::string formula_description(Quantity q) {
  switch (q) {
    case Quantity::green_modesum:
      return "cavity-mode sums: J-Bessel imaginary parts, Y/K-Bessel real parts";
    case Quantity::green_series:
      return "multiple-reflection series over image orders, Wynn-accelerated";
    case Quantity::green_imagfreq:
      return "imaginary-frequency Green tensor: zeta integral (d >= r) or K-Bessel mode sum (d < r)";
    case Quantity::v_off:
      return "off-resonant tensor potential: integral of q^4 G(iq)^2/(1+q^2)^2";
    case Quantity::v_res:
      return "resonant tensor potentials: (Re^2 -+ Im^2) G(K)/K^2";
    case Quantity::v_static:
      return "electrostatic tensor potentials: K0/K1 Bessel sums in r/d";
    case Quantity::w_off:
      return "off-resonant potential: imaginary-frequency channel integral";
    case Quantity::w_res:
      return "resonant potentials and phase shift: scenario channel families";
    case Quantity::w_static:
      return "induced-dipole electrostatic potential";
  }
  return "";
}

std::string timestamp() {
  std::time_t t = std::time(nullptr);
  if (const char* sde = std::getenv("SOURCE_DATE_EPOCH")) {
    try {
      t = static_cast<std::time_t>(std::stoll(sde));
    } catch (...) {
    }
  }
  char buf[32];
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

double fixed_value(const SweepConfig& c, const std::string& key) {
  auto it = c.fixed.find(key);
  if (it == c.fixed.end()) throw ConfigError("sweep: fixed parameter '" + key + "' is required");
  return it->second;
}

// (Kr, Kd) of a grid point. For r_over_d sweeps Kd is held fixed (Kd = 1
// when only the ratio matters).
std::pair<double, double> point_geometry(const SweepConfig& c, double x) {
  switch (c.grid.variable) {
    case SweepVariable::Kr:
      if (c.fixed.count("Kd")) return {x, fixed_value(c, "Kd")};
      return {x, x / fixed_value(c, "r_over_d")};
    case SweepVariable::Kd:
      if (c.fixed.count("Kr")) return {fixed_value(c, "Kr"), x};
      return {x * fixed_value(c, "r_over_d"), x};
    case SweepVariable::r_over_d:
      if (c.fixed.count("Kd")) return {x * fixed_value(c, "Kd"), fixed_value(c, "Kd")};
      if (c.fixed.count("Kr")) return {fixed_value(c, "Kr"), fixed_value(c, "Kr") / x};
      return {x, 1.0};
  }
  return {x, 1.0};
}

// Reference wavenumber for dimensional quantities: the document's K, or the
// smallest transition wavenumber out of atom A's state.
double reference_k(const SystemDocument& doc) {
  if (doc.reference_wavenumber) return *doc.reference_wavenumber;
  const AtomSpec& A = doc.config.atom_a;
  const double wa = A.omega(doc.config.state_a);
  double best = 0.0;
  for (const auto& l : A.levels) {
    if (l.index == doc.config.state_a || A.dipole(doc.config.state_a, l.index).is_zero()) continue;
    const double k = std::abs(l.omega - wa) / PhysicalConstants::c;
    if (k > 0.0 && (best == 0.0 || k < best)) best = k;
  }
  if (best == 0.0) throw ConfigError("sweep: cannot infer K; give 'K' in the system document");
  return best;
}

void append(std::vector<double>& v, const CartesianGreenC& g) {
  v.insert(v.end(), {g.par.real(), g.par.imag(), g.perp.real(), g.perp.imag(), g.g00.real(), g.g00.imag()});
}
void append(std::vector<double>& v, const PotentialTensor& p) { v.insert(v.end(), {p.v00, p.vpp, p.vpm}); }
void append(std::vector<double>& v, const EnergyResult& e) {
  v.insert(v.end(), {e.w_a, e.w_b, e.phase_shift, e.phase_shift_rate()});
}

std::string skipped_summary(const EnergyResult& e) {
  std::ostringstream s;
  for (const auto& k : e.skipped) s << "skip " << k.family << "(" << k.i << "," << k.j << ");";
  return s.str();
}

SweepResult make_header(const SweepConfig& c, int threads) {
  SweepResult r;
  r.variable = to_string(c.grid.variable);
  r.columns = sweep_columns(c);
  auto& m = r.metadata;
  m.push_back(std::string("tool: ") + kToolVersion);
  if (!c.name.empty()) m.push_back("preset: " + c.name);
  m.push_back("quantity: " + to_string(c.quantity));
  m.push_back("formulas: " + formula_description(c.quantity));
  if (c.free_reference) m.push_back("reference: free-space closed forms (columns prefixed free_)");
  m.push_back("grid: " + r.variable + " " + format_double(c.grid.start) + " .. " + format_double(c.grid.stop) + ", " +
              std::to_string(c.grid.points) + " points, " +
              (c.grid.spacing == Spacing::log ? "log" : "linear"));
  for (const auto& [k, v] : c.fixed) m.push_back("fixed: " + k + " = " + format_double(v));
  m.push_back("units: lengths in units of 1/K (K = 1 for dimensionless quantities); energies in J");
  m.push_back("quad_tolerance: rel " + format_double(c.quad.rel_tol) + ", abs " + format_double(c.quad.abs_tol));
  m.push_back("series_tolerance: rel " + format_double(c.series.rel_tol));
  m.push_back("guard_band: " + format_double(c.green.guard_band) + " (units of pi/d)");
  if (c.quantity == Quantity::green_series) m.push_back("m_max: " + std::to_string(c.m_max));
  m.push_back("reflection_sign: (-1)^m on the in-plane components, none on the normal component");
  m.push_back("spherical_basis: d = d0 z + d+ (x+iy)/sqrt2 + d- (x-iy)/sqrt2");
  m.push_back("threads: " + std::to_string(threads));
  m.push_back("timestamp: " + timestamp());
  return r;
}

void finish(SweepResult& r, const std::vector<double>& xs, std::vector<std::optional<SweepRow>>& rows,
            const std::vector<std::string>& skip_reason) {
  for (std::size_t n = 0; n < xs.size(); ++n) {
    if (rows[n]) {
      r.rows.push_back(std::move(*rows[n]));
    } else {
      r.skipped.push_back(r.variable + " = " + format_double(xs[n]) + ": " + skip_reason[n]);
    }
  }
}

}  // namespace

std::string to_string(Quantity q) { return kQuantityNames.at(q); }

std::string to_string(SweepVariable v) {
  switch (v) {
    case SweepVariable::Kr:
      return "Kr";
    case SweepVariable::Kd:
      return "Kd";
    case SweepVariable::r_over_d:
      return "r_over_d";
  }
  return "";
}

Quantity parse_quantity(const std::string& s) {
  for (const auto& [q, name] : kQuantityNames) {
    if (name == s) return q;
  }
  throw ConfigError("unknown quantity '" + s + "'");
}

SweepVariable parse_variable(const std::string& s) {
  if (s == "Kr") return SweepVariable::Kr;
  if (s == "Kd") return SweepVariable::Kd;
  if (s == "r_over_d") return SweepVariable::r_over_d;
  throw ConfigError("unknown sweep variable '" + s + "' (expected Kr, Kd or r_over_d)");
}

Spacing parse_spacing(const std::string& s) {
  if (s == "linear") return Spacing::linear;
  if (s == "log") return Spacing::log;
  throw ConfigError("unknown spacing '" + s + "' (expected linear or log)");
}

OutputFormat parse_format(const std::string& s) {
  if (s == "csv") return OutputFormat::csv;
  if (s == "json") return OutputFormat::json;
  throw ConfigError("unknown format '" + s + "' (expected csv or json)");
}

std::vector<double> SweepGrid::values() const {
  std::vector<double> v(points);
  for (int i = 0; i < points; ++i) {
    const double t = points == 1 ? 0.0 : static_cast<double>(i) / (points - 1);
    v[i] = spacing == Spacing::log ? std::exp(std::log(start) + t * (std::log(stop) - std::log(start)))
                                   : start + t * (stop - start);
  }
  v.front() = start;
  v.back() = stop;
  return v;
}

void SweepConfig::validate() const {
  if (grid.points < 2) throw ConfigError("sweep: points must be >= 2");
  if (!(grid.start < grid.stop)) throw ConfigError("sweep: start must be < stop");
  if (!(grid.start > 0.0)) throw ConfigError("sweep: start must be > 0");
  if (fixed.count(to_string(grid.variable))) {
    throw ConfigError("sweep: fixed parameters must exclude the swept variable " + to_string(grid.variable));
  }
  for (const auto& [k, v] : fixed) {
    if (k != "Kr" && k != "Kd" && k != "r_over_d") throw ConfigError("sweep: unknown fixed parameter '" + k + "'");
    if (!(v > 0.0) || !std::isfinite(v)) throw ConfigError("sweep: fixed parameter '" + k + "' must be > 0");
  }
  const bool static_like = quantity == Quantity::v_static || quantity == Quantity::w_static;
  if (!(static_like && grid.variable == SweepVariable::r_over_d)) {
    const bool has = grid.variable == SweepVariable::r_over_d
                         ? (fixed.count("Kd") || fixed.count("Kr"))
                         : (fixed.count("Kd") || fixed.count("Kr") || fixed.count("r_over_d"));
    if (!has) throw ConfigError("sweep: a fixed Kr, Kd or r_over_d is required");
  }
  if (needs_system(quantity) && !system) throw ConfigError("sweep: quantity " + to_string(quantity) + " needs --config");
  if (quantity == Quantity::w_static && system && !system->field) {
    throw ConfigError("sweep: w_static needs a 'field' entry in the system document");
  }
  quad.validate();
  series.validate();
  if (!(green.guard_band >= 0.0)) throw ConfigError("sweep: guard band must be >= 0");
  if (m_max < 0) throw ConfigError("sweep: m_max must be >= 0");
}

std::vector<std::string> sweep_columns(const SweepConfig& c) {
  std::vector<std::string> cols;
  auto add = [&](std::initializer_list<const char*> names, const std::string& prefix = "") {
    for (const char* n : names) cols.push_back(prefix + n);
  };
  const std::initializer_list<const char*> green = {"re_par", "im_par", "re_perp", "im_perp", "re_00", "im_00"};
  const std::initializer_list<const char*> tensor = {"v00", "vpp", "vpm"};
  const std::initializer_list<const char*> energy = {"w_a_J", "w_b_J", "phase_shift_J", "phase_shift_rate_rad_s"};
  switch (c.quantity) {
    case Quantity::green_modesum:
    case Quantity::green_series:
      add(green);
      if (c.free_reference) add(green, "free_");
      break;
    case Quantity::green_imagfreq:
      add({"par", "perp", "g00"});
      if (c.free_reference) add({"par", "perp", "g00"}, "free_");
      break;
    case Quantity::v_off:
      add(tensor);
      if (c.free_reference) add(tensor, "free_");
      break;
    case Quantity::v_res:
      add({"a_00", "a_pp", "a_pm", "b_00", "b_pp", "b_pm"});
      if (c.free_reference) add({"a_00", "a_pp", "a_pm", "b_00", "b_pp", "b_pm"}, "free_");
      break;
    case Quantity::v_static:
      add(tensor);
      if (c.free_reference) {
        add(tensor, "free_");
        add({"ratio_00", "ratio_pp", "ratio_pm"});
      }
      break;
    case Quantity::w_off:
    case Quantity::w_res:
    case Quantity::w_static:
      add(energy);
      if (c.free_reference) add(energy, "free_");
      break;
  }
  return cols;
}

double system_reference_k(const SystemDocument& doc) { return reference_k(doc); }

CavityGeometry sweep_point_geometry(const SweepConfig& c, double x) {
  const auto [kr, kd] = point_geometry(c, x);
  return {kr, kd};
}

EnergyResult evaluate_energy(const SweepConfig& c, const CavityGeometry& g, bool free_space) {
  if (!c.system) throw ConfigError("quantity " + to_string(c.quantity) + " needs a system document");
  TwoAtomConfig cfg = c.system->config;
  const double K = reference_k(*c.system);
  cfg.geometry = {g.r / K, g.d / K};
  switch (c.quantity) {
    case Quantity::w_off:
      return w_off_full(cfg, c.quad, free_space);
    case Quantity::w_static:
      if (!c.system->field) throw ConfigError("w_static needs a 'field' entry in the system document");
      return w_static_full(cfg, *c.system->field, c.series, free_space);
    case Quantity::w_res: {
      ResonantOptions o;
      o.green = c.green;
      o.free_space = free_space;
      return w_res(cfg, o);
    }
    default:
      throw ConfigError("quantity " + to_string(c.quantity) + " is not an energy");
  }
}

SweepRow evaluate_point(const SweepConfig& c, double x) {
  SweepRow row;
  row.x = x;
  const auto [kr, kd] = point_geometry(c, x);
  const CavityGeometry g{kr, kd};
  std::ostringstream diag;
  auto& v = row.values;
  switch (c.quantity) {
    case Quantity::green_modesum:
      append(v, green_modesum(g, 1.0, c.green));
      if (c.free_reference) append(v, free_space_green(kr, 1.0));
      diag << "ok";
      break;
    case Quantity::green_series: {
      ReflectionOptions o;
      o.m_max = c.m_max;
      o.quad = c.quad;
      o.series_tol = c.series.rel_tol;
      const ReflectionResult rr = green_reflection_series(g, 1.0, o);
      append(v, rr.value);
      if (c.free_reference) append(v, free_space_green(kr, 1.0));
      diag << "m_used=" << rr.m_used << ";truncation=" << format_double(rr.truncation_estimate);
      break;
    }
    case Quantity::green_imagfreq: {
      const CartesianGreen gi = green_imaginary_freq(g, 1.0, c.quad, ImagFreqMethod::automatic, c.series);
      v.insert(v.end(), {gi.par, gi.perp, gi.g00});
      if (c.free_reference) {
        const CartesianGreen f = free_space_green_imag(kr, 1.0);
        v.insert(v.end(), {f.par, f.perp, f.g00});
      }
      diag << "method=" << (g.d < g.r ? "mode_sum" : "zeta_integral");
      break;
    }
    case Quantity::v_off:
      append(v, v_off_dimensionless(g, 1.0, c.quad));
      if (c.free_reference) append(v, v_off_free(kr, 1.0, c.quad));
      diag << "ok";
      break;
    case Quantity::v_res: {
      const ResonantTensors t = v_res_dimensionless(g, 1.0, c.green);
      append(v, t.res_a);
      append(v, t.res_b);
      if (c.free_reference) {
        const ResonantTensors f = v_res_free(kr, 1.0);
        append(v, f.res_a);
        append(v, f.res_b);
      }
      diag << "threshold_distance=" << format_double(threshold_distance(g, 1.0));
      break;
    }
    case Quantity::v_static: {
      const StaticPotentialTensor s = v_static_dimensionless(g, c.series);
      v.insert(v.end(), {s.v00, s.vpp, s.vpm});
      if (c.free_reference) {
        const StaticPotentialTensor f = v_static_free(g);
        v.insert(v.end(), {f.v00, f.vpp, f.vpm, s.v00 / f.v00, s.vpp / f.vpp, s.vpm / f.vpm});
      }
      diag << "n_used=" << s.n00 << "/" << s.npp << "/" << s.npm;
      if (s.free_space_limit) diag << ";free_space_limit;error_bound=" << format_double(s.error_bound);
      break;
    }
    case Quantity::w_off:
    case Quantity::w_res:
    case Quantity::w_static: {
      const EnergyResult e = evaluate_energy(c, g, false);
      append(v, e);
      diag << "channels=" << e.breakdown.size() << ";" << skipped_summary(e);
      if (c.free_reference) append(v, evaluate_energy(c, g, true));
      break;
    }
  }
  row.diagnostics = diag.str();
  return row;
}

SweepResult run_sweep_serial(const SweepConfig& config) {
  config.validate();
  SweepResult r = make_header(config, 1);
  const std::vector<double> xs = config.grid.values();
  std::vector<std::optional<SweepRow>> rows(xs.size());
  std::vector<std::string> reason(xs.size());
  for (std::size_t n = 0; n < xs.size(); ++n) {
    try {
      rows[n] = evaluate_point(config, xs[n]);
    } catch (const ThresholdError& e) {
      reason[n] = e.what();
    }
  }
  finish(r, xs, rows, reason);
  return r;
}

SweepResult run_sweep(const SweepConfig& config, int threads) {
  config.validate();
  const int nt = threads > 0 ? threads : omp_get_max_threads();
  SweepResult r = make_header(config, nt);
  const std::vector<double> xs = config.grid.values();
  const long n_points = static_cast<long>(xs.size());
  std::vector<std::optional<SweepRow>> rows(xs.size());
  std::vector<std::string> reason(xs.size());
  std::vector<std::exception_ptr> errors(xs.size());

#pragma omp parallel for schedule(dynamic, 1) num_threads(nt)
  for (long n = 0; n < n_points; ++n) {
    try {
      rows[n] = evaluate_point(config, xs[n]);
    } catch (const ThresholdError& e) {
      reason[n] = e.what();
    } catch (...) {
      errors[n] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  finish(r, xs, rows, reason);
  return r;
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

void write_csv(std::ostream& out, const SweepResult& r) {
  for (const auto& m : r.metadata) out << "# " << m << "\n";
  for (const auto& s : r.skipped) out << "# skipped: " << s << "\n";
  out << r.variable;
  for (const auto& c : r.columns) out << "," << c;
  out << ",diagnostics\n";
  for (const auto& row : r.rows) {
    out << format_double(row.x);
    for (double v : row.values) out << "," << format_double(v);
    out << "," << row.diagnostics << "\n";
  }
}

void write_json(std::ostream& out, const SweepResult& r) {
  nlohmann::ordered_json j;
  j["metadata"] = r.metadata;
  j["variable"] = r.variable;
  j["columns"] = r.columns;
  j["skipped"] = r.skipped;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : r.rows) {
    nlohmann::ordered_json o;
    o[r.variable] = row.x;
    for (std::size_t c = 0; c < r.columns.size(); ++c) o[r.columns[c]] = row.values[c];
    o["diagnostics"] = row.diagnostics;
    rows.push_back(o);
  }
  j["rows"] = rows;
  out << j.dump(2) << "\n";
}

void write_plot_script(std::ostream& out, const SweepResult& r, const std::string& csv_path) {
  out << "import csv\nimport matplotlib.pyplot as plt\n\n";
  out << "rows = [l for l in open(" << nlohmann::json(csv_path).dump() << ") if not l.startswith('#')]\n";
  out << "data = list(csv.DictReader(rows))\n";
  out << "x = [float(d['" << r.variable << "']) for d in data]\n";
  out << "for col in " << nlohmann::json(r.columns).dump() << ":\n";
  out << "    plt.plot(x, [float(d[col]) for d in data], label=col)\n";
  out << "plt.xlabel('" << r.variable << "')\nplt.legend()\nplt.show()\n";
}

SweepConfig parse_sweep_json(const std::string& text, const std::string& base_dir) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("sweep config: malformed JSON: ") + e.what());
  }
  try {
    SweepConfig c;
    if (!j.is_object()) throw ConfigError("sweep config: top level must be an object");
    c.quantity = parse_quantity(j.at("quantity").get<std::string>());
    const auto& g = j.at("grid");
    c.grid.variable = parse_variable(g.at("variable").get<std::string>());
    c.grid.start = g.at("start").get<double>();
    c.grid.stop = g.at("stop").get<double>();
    c.grid.points = g.at("points").get<int>();
    c.grid.spacing = parse_spacing(g.value("spacing", std::string("linear")));
    if (j.contains("fixed")) {
      for (const auto& [k, v] : j.at("fixed").items()) c.fixed[k] = v.get<double>();
    }
    if (j.contains("tolerances")) {
      const auto& t = j.at("tolerances");
      c.quad.rel_tol = t.value("quad_rel", c.quad.rel_tol);
      c.quad.abs_tol = t.value("quad_abs", c.quad.abs_tol);
      c.series.rel_tol = t.value("series_rel", c.series.rel_tol);
    }
    c.green.series = c.series;
    c.m_max = j.value("m_max", c.m_max);
    c.green.guard_band = j.value("guard_band", c.green.guard_band);
    c.free_reference = j.value("free_reference", false);
    c.name = j.value("name", std::string());
    if (j.contains("system")) {
      const auto& s = j.at("system");
      if (s.is_string()) {
        const std::filesystem::path p = s.get<std::string>();
        c.system = load_system_json(p.is_absolute() ? p.string() : (std::filesystem::path(base_dir) / p).string());
      } else {
        c.system = parse_system_json(s.dump());
      }
    }
    if (j.contains("output")) {
      const auto& o = j.at("output");
      c.output_path = o.value("path", std::string());
      c.format = parse_format(o.value("format", std::string("csv")));
    }
    c.validate();
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("sweep config: ") + e.what());
  }
}

SweepConfig load_sweep_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open sweep config '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_sweep_json(ss.str(), std::filesystem::path(path).parent_path().string());
}

std::string sweep_config_to_json(const SweepConfig& c) {
  nlohmann::ordered_json j;
  if (!c.name.empty()) j["name"] = c.name;
  j["quantity"] = to_string(c.quantity);
  j["grid"] = {{"variable", to_string(c.grid.variable)},
               {"start", c.grid.start},
               {"stop", c.grid.stop},
               {"points", c.grid.points},
               {"spacing", c.grid.spacing == Spacing::log ? "log" : "linear"}};
  j["fixed"] = c.fixed;
  j["tolerances"] = {{"quad_rel", c.quad.rel_tol}, {"quad_abs", c.quad.abs_tol}, {"series_rel", c.series.rel_tol}};
  j["m_max"] = c.m_max;
  j["guard_band"] = c.green.guard_band;
  j["free_reference"] = c.free_reference;
  j["output"] = {{"path", c.output_path}, {"format", c.format == OutputFormat::json ? "json" : "csv"}};
  return j.dump(2);
}

std::vector<std::string> preset_names() { return {"fig4", "fig6-d2", "fig6-d20", "fig7"}; }

SweepConfig preset(const std::string& name) {
  SweepConfig c;
  c.name = name;
  c.free_reference = true;
  if (name == "fig4") {
    c.quantity = Quantity::v_off;
    c.grid = {SweepVariable::Kd, 0.02, 20.0, 200, Spacing::log};
    c.fixed = {{"Kr", 0.2}};
  } else if (name == "fig6-d2" || name == "fig6-d20") {
    c.quantity = Quantity::v_res;
    c.grid = {SweepVariable::Kr, 0.2, 20.0, 200, Spacing::linear};
    c.fixed = {{"Kd", name == "fig6-d2" ? 2.0 : 20.0}};
  } else if (name == "fig7") {
    c.quantity = Quantity::v_static;
    c.grid = {SweepVariable::r_over_d, 0.01, 5.0, 200, Spacing::log};
  } else {
    throw ConfigError("unknown preset '" + name + "'");
  }
  return c;
}

}  // namespace cavityqed
