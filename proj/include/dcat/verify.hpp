// The verification suite: every closed-form rule of the model is swept
// against the linear-algebra oracle, plus the structural property checks
// (Serre duality, directedness, additivity, probe laws, sectional laws,
// tilting fixtures). Each check returns a machine-readable result.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dcat/field.hpp"

namespace dcat {

struct CheckResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct VerifyOptions {
  FieldChoice field;     // used by the oracle-backed checks
  int jobs = 0;          // 0 = hardware concurrency
  std::uint64_t seed = 12345;
  bool sabotage = false; // negative control: breaks the Ext rule in the
                         // oracle agreement sweep so it must fail
};

// Check ids for a suite name: all | hom | ar | probe | tilt.
std::vector<int> suite_ids(const std::string& suite);

std::vector<CheckResult> run_checks(const std::vector<int>& ids,
                                    const VerifyOptions& opt);

bool all_pass(const std::vector<CheckResult>& rs);

}  // namespace dcat
