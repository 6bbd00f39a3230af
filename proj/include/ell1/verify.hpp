#pragma once

#include <string>
#include <vector>

namespace ell1::verify {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

using Suite = std::vector<CheckResult>;

/// Names accepted by run_suite.
std::vector<std::string> suite_names();

/// Run a named suite; throws spec_error for unknown names.
Suite run_suite(const std::string& name);

/// The full acceptance battery, in order.
Suite run_acceptance();

}  // namespace ell1::verify
