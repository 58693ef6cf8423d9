#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cavityqed/errors.hpp"
#include "cavityqed/sweep.hpp"
#include "cavityqed/verify.hpp"

using namespace cavityqed;

namespace {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kConfig = 2,
  kThreshold = 3,
  kConvergence = 4,
  kDegenerate = 5,
  kInternal = 6,
};

struct CommonFlags {
  std::string out;
  std::string format = "csv";
  std::optional<double> rel_tol;
  std::optional<int> m_max;
  std::optional<double> guard_band;
  int threads = 0;
  std::string plot_script;
};

void add_common(CLI::App* app, CommonFlags& f) {
  app->add_option("--out", f.out, "Output file (default: stdout)");
  app->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"csv", "json", "text"}));
  app->add_option("--rel-tol", f.rel_tol, "Relative tolerance for quadrature and series");
  app->add_option("--m-max", f.m_max, "Maximum reflection order for the reflection series");
  app->add_option("--guard-band", f.guard_band, "Half-width of the threshold guard band, in units of pi/d");
  app->add_option("--threads", f.threads, "Worker threads (0 = OpenMP default)");
}

void apply_common(SweepConfig& c, const CommonFlags& f) {
  if (f.rel_tol) {
    c.quad.rel_tol = *f.rel_tol;
    c.series.rel_tol = *f.rel_tol;
    c.green.series.rel_tol = *f.rel_tol;
  }
  if (f.m_max) c.m_max = *f.m_max;
  if (f.guard_band) c.green.guard_band = *f.guard_band;
}

void with_output(const std::string& path, const std::function<void(std::ostream&)>& body) {
  if (path.empty() || path == "-") {
    body(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open output file '" + path + "'");
  body(out);
}

int cmd_eval(const std::string& quantity, std::optional<double> kr, std::optional<double> kd,
             std::optional<double> r_over_d, const std::string& system_path, bool free_reference,
             const CommonFlags& f) {
  SweepConfig c;
  c.quantity = parse_quantity(quantity);
  c.free_reference = free_reference;
  apply_common(c, f);
  if (!system_path.empty()) c.system = load_system_json(system_path);
  if (c.system && !kr && !kd && !r_over_d) {
    const double K = system_reference_k(*c.system);
    kr = K * c.system->config.geometry.r;
    kd = K * c.system->config.geometry.d;
  }
  double x = 0.0;
  if (kr) {
    c.grid = {SweepVariable::Kr, *kr, *kr * 2.0, 2, Spacing::linear};
    x = *kr;
    if (kd) c.fixed["Kd"] = *kd;
    if (r_over_d) c.fixed["r_over_d"] = *r_over_d;
  } else if (kd) {
    c.grid = {SweepVariable::Kd, *kd, *kd * 2.0, 2, Spacing::linear};
    x = *kd;
    if (r_over_d) c.fixed["r_over_d"] = *r_over_d;
  } else if (r_over_d) {
    c.grid = {SweepVariable::r_over_d, *r_over_d, *r_over_d * 2.0, 2, Spacing::linear};
    x = *r_over_d;
  } else {
    throw ConfigError("eval: give at least one of --Kr, --Kd, --r-over-d");
  }
  c.validate();
  const auto cols = sweep_columns(c);
  const SweepRow row = evaluate_point(c, x);
  std::optional<EnergyResult> energy;
  if (c.quantity == Quantity::w_off || c.quantity == Quantity::w_res || c.quantity == Quantity::w_static) {
    energy = evaluate_energy(c, sweep_point_geometry(c, x), false);
  }

  with_output(f.out, [&](std::ostream& out) {
    if (f.format == "json") {
      nlohmann::ordered_json j;
      j["tool"] = kToolVersion;
      j["quantity"] = quantity;
      j[to_string(c.grid.variable)] = x;
      j["fixed"] = c.fixed;
      for (std::size_t n = 0; n < cols.size(); ++n) j["values"][cols[n]] = row.values[n];
      j["diagnostics"] = row.diagnostics;
      if (energy) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& ch : energy->breakdown) {
          arr.push_back({{"family", ch.family},
                         {"i", ch.i},
                         {"j", ch.j},
                         {"w_a_J", ch.w_a},
                         {"w_b_J", ch.w_b},
                         {"phase_shift_J", ch.phase_shift}});
        }
        j["channels"] = arr;
        auto sk = nlohmann::ordered_json::array();
        for (const auto& s : energy->skipped) sk.push_back({{"family", s.family}, {"i", s.i}, {"j", s.j}, {"reason", s.reason}});
        j["skipped_channels"] = sk;
      }
      out << j.dump(2) << "\n";
      return;
    }
    out << "quantity " << quantity << " at " << to_string(c.grid.variable) << " = " << format_double(x);
    for (const auto& [k, v] : c.fixed) out << ", " << k << " = " << format_double(v);
    out << "\n";
    for (std::size_t n = 0; n < cols.size(); ++n) out << "  " << cols[n] << " = " << format_double(row.values[n]) << "\n";
    out << "  diagnostics: " << row.diagnostics << "\n";
    if (energy) {
      out << "channels:\n";
      for (const auto& ch : energy->breakdown) {
        out << "  " << ch.family << " (" << ch.i << "," << ch.j << "): w_a = " << format_double(ch.w_a)
            << " J, w_b = " << format_double(ch.w_b) << " J, phase_shift = " << format_double(ch.phase_shift) << " J\n";
      }
      for (const auto& s : energy->skipped) {
        out << "  skipped " << s.family << " (" << s.i << "," << s.j << "): " << s.reason << "\n";
      }
    }
  });
  return kOk;
}

int cmd_sweep(const std::string& config_path, const std::string& preset_name, bool free_reference,
              const std::string& system_path, bool serial, const CommonFlags& f, bool format_given) {
  SweepConfig c;
  if (!config_path.empty()) {
    c = load_sweep_json(config_path);
  } else if (!preset_name.empty()) {
    c = preset(preset_name);
  } else {
    throw ConfigError("sweep: give --config or --preset");
  }
  if (free_reference) c.free_reference = true;
  if (!system_path.empty()) c.system = load_system_json(system_path);
  apply_common(c, f);
  if (!f.out.empty()) c.output_path = f.out;
  if (format_given) c.format = parse_format(f.format);
  c.validate();
  const SweepResult r = serial ? run_sweep_serial(c) : run_sweep(c, f.threads);
  with_output(c.output_path, [&](std::ostream& out) {
    if (c.format == OutputFormat::json) {
      write_json(out, r);
    } else {
      write_csv(out, r);
    }
  });
  if (!f.plot_script.empty()) {
    with_output(f.plot_script, [&](std::ostream& out) { write_plot_script(out, r, c.output_path); });
  }
  if (!r.skipped.empty()) {
    std::cerr << "sweep: " << r.skipped.size() << " point(s) skipped inside threshold guard bands\n";
  }
  return kOk;
}

int cmd_verify(const std::string& level, const std::string& mutate_sign, const CommonFlags& f) {
  VerifyOptions o;
  o.level = level == "full" ? VerifyLevel::full : VerifyLevel::quick;
  o.threads = f.threads;
  if (mutate_sign == "alternate_all") {
    o.sign = ReflectionSign::alternate_all;
  } else if (mutate_sign == "none") {
    o.sign = ReflectionSign::none;
  }
  const VerifyReport rep = run_verify(o);
  with_output(f.out, [&](std::ostream& out) {
    if (f.format == "json") {
      out << rep.to_json() << "\n";
      return;
    }
    for (const auto& c : rep.checks) {
      out << (c.passed ? "PASS" : "FAIL") << " [" << c.criterion << "] " << c.name << " (" << c.seconds << " s)\n"
          << "     " << c.detail << "\n";
    }
    out << (rep.passed() ? "verify: all checks passed" : "verify: FAILED") << " in " << rep.seconds << " s\n";
  });
  return rep.passed() ? kOk : kVerifyFailed;
}

int cmd_presets(const std::string& dump) {
  if (!dump.empty()) {
    std::cout << sweep_config_to_json(preset(dump)) << "\n";
    return kOk;
  }
  for (const auto& n : preset_names()) {
    const SweepConfig c = preset(n);
    std::cout << n << ": " << to_string(c.quantity) << " vs " << to_string(c.grid.variable) << " ["
              << format_double(c.grid.start) << ", " << format_double(c.grid.stop) << "], " << c.grid.points
              << " points";
    for (const auto& [k, v] : c.fixed) std::cout << ", " << k << " = " << format_double(v);
    std::cout << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-atom van der Waals and electrostatic potentials between perfectly conducting plates"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  CommonFlags eval_f, sweep_f, verify_f;
  eval_f.format = "text";
  verify_f.format = "text";

  auto* eval = app.add_subcommand("eval", "Evaluate one quantity at a single point");
  std::string quantity, eval_system;
  std::optional<double> kr, kd, r_over_d;
  bool eval_free = false;
  eval->add_option("quantity", quantity, "green_modesum, green_series, green_imagfreq, v_off, v_res, v_static, "
                                         "w_off, w_res or w_static")
      ->required();
  eval->add_option("--Kr", kr, "K times the interatomic distance");
  eval->add_option("--Kd", kd, "K times the plate separation");
  eval->add_option("--r-over-d", r_over_d, "Interatomic distance over plate separation");
  eval->add_option("--config", eval_system, "Atomic system JSON (needed by w_off, w_res, w_static)");
  eval->add_flag("--free", eval_free, "Also print the free-space reference");
  add_common(eval, eval_f);

  auto* sweep = app.add_subcommand("sweep", "Run a parameter sweep and write CSV or JSON");
  std::string sweep_config, sweep_preset, sweep_system;
  bool sweep_free = false, sweep_serial = false;
  auto* cfg_opt = sweep->add_option("--config", sweep_config, "Sweep description JSON");
  sweep->add_option("--preset", sweep_preset, "Built-in sweep (see 'presets')")->excludes(cfg_opt);
  sweep->add_option("--system", sweep_system, "Atomic system JSON overriding the sweep's own");
  sweep->add_flag("--free", sweep_free, "Add free-space reference columns");
  sweep->add_flag("--serial", sweep_serial, "Use the single-threaded reference driver");
  add_common(sweep, sweep_f);
  sweep->add_option("--plot-script", sweep_f.plot_script, "Also write a matplotlib script for the CSV");

  auto* verify = app.add_subcommand("verify", "Run the built-in verification suite");
  std::string level = "quick", mutate_sign;
  verify->add_option("level", level, "quick or full")->check(CLI::IsMember({"quick", "full"}));
  add_common(verify, verify_f);
  verify->add_option("--mutate-sign", mutate_sign)
      ->check(CLI::IsMember({"alternate_all", "none"}))
      ->group("");

  auto* presets = app.add_subcommand("presets", "List the built-in sweeps");
  std::string dump;
  presets->add_option("--dump", dump, "Print the named preset as sweep JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfig;
  }

  try {
    if (*eval) return cmd_eval(quantity, kr, kd, r_over_d, eval_system, eval_free, eval_f);
    if (*sweep) {
      return cmd_sweep(sweep_config, sweep_preset, sweep_free, sweep_system, sweep_serial, sweep_f,
                       sweep->count("--format") > 0);
    }
    if (*verify) return cmd_verify(level, mutate_sign, verify_f);
    if (*presets) return cmd_presets(dump);
  } catch (const ThresholdError& e) {
    std::cerr << "threshold: " << e.what() << "\n";
    return kThreshold;
  } catch (const ConvergenceError& e) {
    std::cerr << "convergence: " << e.what() << "\n";
    return kConvergence;
  } catch (const DerivativeMismatchError& e) {
    std::cerr << "derivative mismatch: " << e.what() << "\n";
    return kConvergence;
  } catch (const DegenerateError& e) {
    std::cerr << "degenerate: " << e.what() << "\n";
    return kDegenerate;
  } catch (const ConfigError& e) {
    std::cerr << "config: " << e.what() << "\n";
    return kConfig;
  } catch (const DomainError& e) {
    std::cerr << "domain: " << e.what() << "\n";
    return kConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
  return kOk;
}
