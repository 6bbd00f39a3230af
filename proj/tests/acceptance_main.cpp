// Acceptance battery: one pass/fail line per criterion; nonzero exit on any
// failure.
#include "ell1/verify.hpp"

#include <cstdio>

int main() {
  const ell1::verify::Suite results = ell1::verify::run_acceptance();
  bool all_pass = true;
  int index = 0;
  for (const auto& check : results) {
    std::printf("criterion %02d %s: %s (%s)\n", ++index, check.name.c_str(),
                check.pass ? "PASS" : "FAIL", check.detail.c_str());
    all_pass = all_pass && check.pass;
  }
  std::printf(all_pass ? "acceptance: all %d criteria PASS\n"
                       : "acceptance: FAILURES above\n",
              index);
  return all_pass ? 0 : 1;
}
