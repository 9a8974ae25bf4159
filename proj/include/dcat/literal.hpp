// Wire format for objects:
//   A[(t,z),(t,z)]@s   A1[(t,z)]@s   A2[(t,z)]@s   B[(t,z),(t,z)]@s
// with t a label, z and s integers; @0 may be omitted. DObj literals are
// '+'-joined; the zero object prints as "0".
#pragma once

#include <stdexcept>
#include <string>

#include "dcat/model.hpp"

namespace dcat {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string to_literal(const PosetSpec& spec, const IndClass& x);
std::string to_literal(const PosetSpec& spec, const IndObj& x);
std::string to_literal(const PosetSpec& spec, const DObj& x);

IndObj parse_ind(const PosetSpec& spec, const std::string& s);
DObj parse_dobj(const PosetSpec& spec, const std::string& s);

}  // namespace dcat
