// Run configuration: the poset spec read from a JSON config document plus
// the command-line knobs (field, shift range, margin, seed, jobs).
#pragma once

#include <cstdint>
#include <string>

#include "dcat/field.hpp"
#include "dcat/model.hpp"
#include "dcat/order.hpp"

namespace dcat {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  PosetSpec poset;
  int shift_lo = -2, shift_hi = 2;  // within [-4, 4]
  FieldChoice field;                // rational by default
  std::uint64_t seed = 0;
  int margin = 2;  // >= 1
  int jobs = 1;
};

// Keys: kind ("A"|"D"), t_labels (array of strings), z_window ([lo, hi]).
// Optional: shift_range ([lo, hi] within [-4, 4]).
RunConfig load_config(const std::string& path);
RunConfig parse_config(const std::string& json_text);

// "rational", "gf2", "gf<p>" for an odd prime p.
FieldChoice parse_field(const std::string& name);

Model make_model(const RunConfig& c);

}  // namespace dcat
