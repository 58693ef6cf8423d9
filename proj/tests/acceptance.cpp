#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

#include <json.hpp>

#include "cavityqed/verify.hpp"

using namespace cavityqed;

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

Outcome from_check(const CheckResult& r, double budget_seconds = 0.0) {
  std::string detail = r.detail;
  bool ok = r.passed;
  if (budget_seconds > 0.0) {
    detail += "; " + std::to_string(r.seconds) + " s (budget " + std::to_string(budget_seconds) + " s)";
    ok = ok && r.seconds < budget_seconds;
  }
  return {ok, detail};
}

Outcome representation() {
  const std::vector<double> kr{0.2, 1.0, 2.0}, kd{2.0, 5.0, 20.0};
  Outcome out = from_check(check_representation_equivalence(kr, kd), 30.0);
  // A wrong reflection sign must be caught.
  for (ReflectionSign s : {ReflectionSign::alternate_all, ReflectionSign::none}) {
    if (check_representation_equivalence(kr, kd, s).passed) {
      out.passed = false;
      out.detail += "; sign mutation not detected";
    }
  }
  return out;
}

Outcome verify_quick_cli() {
  const std::string cmd = std::string(CAVITYQED_CLI_PATH) + " verify quick --format json";
  const auto t0 = std::chrono::steady_clock::now();
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {false, "could not start " + cmd};
  std::string text;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) text.append(buf, n);
  const int status = pclose(pipe);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (status != 0) return {false, "exit status " + std::to_string(status)};
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    return {false, std::string("unparsable output: ") + e.what()};
  }
  bool covered[13] = {};
  bool all_passed = j.value("passed", false);
  for (const auto& c : j["checks"]) {
    const int n = c.value("criterion", 0);
    if (n >= 1 && n <= 12) covered[n] = true;
    all_passed = all_passed && c.value("passed", false);
  }
  const bool ok = seconds < 60.0 && all_passed && covered[1] && covered[3] && covered[6] && covered[9];
  return {ok, "criteria 1, 3, 6, 9 in " + std::to_string(seconds) + " s"};
}

}  // namespace

int main() {
  const std::vector<std::pair<int, std::function<Outcome()>>> criteria = {
      {1, representation},
      {2, [] { return from_check(check_kramers_kronig(), 60.0); }},
      {3, [] { return from_check(check_subthreshold()); }},
      {4, [] { return from_check(check_imaginary_frequency_oracle()); }},
      {5, [] { return from_check(check_free_space_reductions()); }},
      {6, [] { return from_check(check_resonant_algebra()); }},
      {7, [] { return from_check(check_off_resonant_shape()); }},
      {8, [] { return from_check(check_static_shape()); }},
      {9, [] { return from_check(check_static_free_limit()); }},
      {10, [] { return from_check(check_double_pole()); }},
      {11, [] { return from_check(check_scenario_reductions()); }},
      {12, verify_quick_cli},
  };
  int failures = 0;
  for (const auto& [n, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.passed) ++failures;
    std::cout << (o.passed ? "PASS" : "FAIL") << " criterion " << n << ": " << o.detail << std::endl;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
