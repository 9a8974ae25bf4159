// Acceptance gate: runs the full verification suite and prints one line per
// check. Exit status is nonzero when any check fails.
#include <cstdio>

#include "dcat/verify.hpp"

int main() {
  dcat::VerifyOptions opt;
  auto results = dcat::run_checks(dcat::suite_ids("all"), opt);
  bool ok = true;
  for (auto& r : results) {
    std::printf("%s  %2d %-26s %7.2fs  %s\n", r.pass ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.seconds, r.detail.c_str());
    ok = ok && r.pass;
  }
  std::printf("%s\n", ok ? "ALL CHECKS PASSED" : "CHECKS FAILED");
  return ok ? 0 : 1;
}
