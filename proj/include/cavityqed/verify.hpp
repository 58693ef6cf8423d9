#pragma once

#include <string>
#include <vector>

#include "cavityqed/green_tensor.hpp"

namespace cavityqed {

enum class VerifyLevel { quick, full };

struct CheckResult {
  int criterion = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct VerifyReport {
  VerifyLevel level = VerifyLevel::quick;
  std::vector<CheckResult> checks;
  double seconds = 0.0;

  bool passed() const;
  std::string to_json() const;
};

struct VerifyOptions {
  VerifyLevel level = VerifyLevel::quick;
  // Reflection-series sign used by the representation check; anything other
  // than alternate_horizontal is a deliberate mutation that must fail.
  ReflectionSign sign = ReflectionSign::alternate_horizontal;
  int threads = 0;
};

// Mode sums against the reflection series on (Kr, Kd) grid points.
CheckResult check_representation_equivalence(const std::vector<double>& kr_values,
                                             const std::vector<double>& kd_values,
                                             ReflectionSign sign = ReflectionSign::alternate_horizontal);
CheckResult check_kramers_kronig();
CheckResult check_subthreshold(int points = 20);
CheckResult check_imaginary_frequency_oracle();
CheckResult check_free_space_reductions();
CheckResult check_resonant_algebra(int threads = 0);
CheckResult check_off_resonant_shape(int threads = 0);
CheckResult check_static_shape(int threads = 0);
CheckResult check_static_free_limit();
CheckResult check_double_pole();
CheckResult check_scenario_reductions();

// quick: criteria 1 (reduced grid), 3, 6, 9. full: criteria 1 to 11.
VerifyReport run_verify(const VerifyOptions& opts);

}  // namespace cavityqed
