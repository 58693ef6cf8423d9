#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cavityqed/atomic_system.hpp"
#include "cavityqed/green_tensor.hpp"
#include "cavityqed/potentials_vdw.hpp"

namespace cavityqed {

inline constexpr const char* kToolVersion = "cavityqed 0.1.0";

enum class Quantity {
  green_modesum,
  green_series,
  green_imagfreq,
  v_off,
  v_res,
  v_static,
  w_off,
  w_res,
  w_static,
};

enum class SweepVariable { Kr, Kd, r_over_d };
enum class Spacing { linear, log };
enum class OutputFormat { csv, json };

std::string to_string(Quantity q);
std::string to_string(SweepVariable v);
Quantity parse_quantity(const std::string& s);
SweepVariable parse_variable(const std::string& s);
Spacing parse_spacing(const std::string& s);
OutputFormat parse_format(const std::string& s);

struct SweepGrid {
  SweepVariable variable = SweepVariable::Kr;
  double start = 0.0;
  double stop = 1.0;
  int points = 2;
  Spacing spacing = Spacing::linear;

  std::vector<double> values() const;
};

struct SweepConfig {
  Quantity quantity = Quantity::green_modesum;
  SweepGrid grid;
  // Held-fixed dimensionless parameters: "Kr", "Kd", "r_over_d".
  std::map<std::string, double> fixed;
  QuadSpec quad{};
  SeriesSpec series{};
  GreenOptions green{};
  int m_max = 500;
  bool free_reference = false;
  // Atoms and configuration, required by w_off, w_res and w_static.
  std::optional<SystemDocument> system;
  std::string output_path;
  OutputFormat format = OutputFormat::csv;
  std::string name;  // preset name, if any

  void validate() const;
};

struct SweepRow {
  double x = 0.0;
  std::vector<double> values;
  std::string diagnostics;
};

struct SweepResult {
  std::vector<std::string> metadata;  // "key: value" lines
  std::string variable;
  std::vector<std::string> columns;
  std::vector<SweepRow> rows;
  std::vector<std::string> skipped;  // one entry per threshold-skipped point
};

// Evaluates every grid point; rows hit by a ThresholdError are dropped and
// listed in `skipped`. Any other error aborts the sweep (the error of the
// lowest-index failing point is rethrown). threads <= 0 uses the OpenMP default.
SweepResult run_sweep(const SweepConfig& config, int threads = 0);

// Single-threaded reference driver.
SweepResult run_sweep_serial(const SweepConfig& config);

// Column names and one row of values at swept value x.
std::vector<std::string> sweep_columns(const SweepConfig& config);
SweepRow evaluate_point(const SweepConfig& config, double x);

// K used to convert (Kr, Kd) into SI lengths for the w_* quantities.
double system_reference_k(const SystemDocument& doc);
// Dimensionless (Kr, Kd) of the grid point with swept value x.
CavityGeometry sweep_point_geometry(const SweepConfig& config, double x);
// Two-atom energy at dimensionless geometry g = (Kr, Kd).
EnergyResult evaluate_energy(const SweepConfig& config, const CavityGeometry& g, bool free_space);

void write_csv(std::ostream& out, const SweepResult& result);
void write_json(std::ostream& out, const SweepResult& result);
// Minimal matplotlib script plotting every column of a CSV file against the
// swept variable.
void write_plot_script(std::ostream& out, const SweepResult& result, const std::string& csv_path);

// Shortest round-trip decimal representation.
std::string format_double(double x);

// Sweep description as JSON: {"quantity", "grid": {"variable", "start", "stop",
// "points", "spacing"}, "fixed": {...}, "tolerances": {"quad_rel", "quad_abs",
// "series_rel"}, "m_max", "guard_band", "free_reference", "system" (inline
// object or path relative to base_dir), "output": {"path", "format"}}.
SweepConfig parse_sweep_json(const std::string& text, const std::string& base_dir = ".");
SweepConfig load_sweep_json(const std::string& path);
std::string sweep_config_to_json(const SweepConfig& config);

std::vector<std::string> preset_names();
SweepConfig preset(const std::string& name);

}  // namespace cavityqed
