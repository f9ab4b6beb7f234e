#pragma once
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace aniso {

enum class VerifySuite { All, Metric, Connection, Curvature, Dynamics, Closedform };

VerifySuite suite_from_string(const std::string& s);

struct CheckResult {
  std::string name;
  double value = 0.0;      // measured max residual (or magnitude for nonzero checks)
  double threshold = 0.0;
  bool greater_is_pass = false;  // nonzero-witness checks pass when value > threshold
  bool pass = false;
};

// deterministic for a given seed; ordering of the returned checks is by name
std::vector<CheckResult> run_verify(VerifySuite suite, uint64_t seed);

// one line per check: [PASS]/[FAIL], name, measured value vs threshold
void print_report(std::ostream& os, const std::vector<CheckResult>& results);

}  // namespace aniso
