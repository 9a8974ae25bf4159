#include "dcat/config.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace dcat {

namespace {
using nlohmann::json;
}

FieldChoice parse_field(const std::string& name) {
  FieldChoice f;
  if (name == "rational") return f;
  if (name.rfind("gf", 0) == 0) {
    f.rational = false;
    try {
      size_t used = 0;
      f.p = std::stol(name.substr(2), &used);
      if (used != name.size() - 2) throw std::invalid_argument(name);
    } catch (const std::exception&) {
      throw ConfigError("bad field name: " + name);
    }
    for (long d = 2; d * d <= f.p; ++d)
      if (f.p % d == 0) throw ConfigError("field modulus must be prime");
    if (f.p < 2) throw ConfigError("field modulus must be prime");
    return f;
  }
  throw ConfigError("bad field name: " + name +
                    " (expected rational, gf2 or gf<p>)");
}

RunConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("kind") || !j.contains("t_labels") ||
      !j.contains("z_window"))
    throw ConfigError("config needs keys kind, t_labels, z_window");
  RunConfig c;
  try {
    std::string kind = j.at("kind").get<std::string>();
    if (kind != "A" && kind != "D")
      throw ConfigError("kind must be \"A\" or \"D\"");
    auto labels = j.at("t_labels").get<std::vector<std::string>>();
    auto zw = j.at("z_window").get<std::vector<long>>();
    if (zw.size() != 2) throw ConfigError("z_window must be [lo, hi]");
    c.poset = PosetSpec(kind == "A" ? Kind::TypeA : Kind::TypeD,
                        std::move(labels), zw[0], zw[1]);
    if (j.contains("shift_range")) {
      auto sr = j.at("shift_range").get<std::vector<int>>();
      if (sr.size() != 2) throw ConfigError("shift_range must be [lo, hi]");
      c.shift_lo = sr[0];
      c.shift_hi = sr[1];
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad config value: ") + e.what());
  } catch (const OrderError& e) {
    throw ConfigError(e.what());
  }
  if (c.shift_lo > c.shift_hi || c.shift_lo < -4 || c.shift_hi > 4)
    throw ConfigError("shift_range must lie within [-4, 4]");
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

Model make_model(const RunConfig& c) {
  if (c.margin < 1) throw ConfigError("margin must be >= 1");
  Model m(c.poset);
  m.shift_lo = c.shift_lo;
  m.shift_hi = c.shift_hi;
  m.margin = c.margin;
  return m;
}

}  // namespace dcat
