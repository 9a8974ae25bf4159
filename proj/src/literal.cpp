#include "dcat/literal.hpp"

#include <cctype>
#include <cstdlib>

namespace dcat {

namespace {

std::string point_str(const PosetSpec& spec, LPoint p) {
  return "(" + spec.t_labels[p.t] + "," + std::to_string(p.z) + ")";
}

struct Cursor {
  const std::string& s;
  size_t i = 0;
  void ws() {
    while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
  }
  bool eat(char c) {
    ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c))
      throw ParseError("expected '" + std::string(1, c) + "' at position " +
                       std::to_string(i) + " in \"" + s + "\"");
  }
  bool done() {
    ws();
    return i >= s.size();
  }
};

long parse_int(Cursor& c) {
  c.ws();
  size_t start = c.i;
  if (c.i < c.s.size() && (c.s[c.i] == '-' || c.s[c.i] == '+')) ++c.i;
  size_t digits = c.i;
  while (c.i < c.s.size() && std::isdigit((unsigned char)c.s[c.i])) ++c.i;
  if (c.i == digits) throw ParseError("expected integer in \"" + c.s + "\"");
  return std::strtol(c.s.substr(start, c.i - start).c_str(), nullptr, 10);
}

LPoint parse_point(const PosetSpec& spec, Cursor& c) {
  c.expect('(');
  c.ws();
  size_t start = c.i;
  while (c.i < c.s.size() && c.s[c.i] != ',' && c.s[c.i] != ')') ++c.i;
  std::string label = c.s.substr(start, c.i - start);
  while (!label.empty() && std::isspace((unsigned char)label.back()))
    label.pop_back();
  int t;
  try {
    t = spec.t_index(label);
  } catch (const OrderError& e) {
    throw ParseError(e.what());
  }
  c.expect(',');
  long z = parse_int(c);
  c.expect(')');
  return {t, z};
}

IndObj parse_one(const PosetSpec& spec, Cursor& c) {
  c.ws();
  Cls cls;
  if (c.s.compare(c.i, 2, "A1") == 0) {
    cls = Cls::IA1;
    c.i += 2;
  } else if (c.s.compare(c.i, 2, "A2") == 0) {
    cls = Cls::IA2;
    c.i += 2;
  } else if (c.i < c.s.size() && c.s[c.i] == 'A') {
    cls = Cls::IA;
    ++c.i;
  } else if (c.i < c.s.size() && c.s[c.i] == 'B') {
    cls = Cls::IB;
    ++c.i;
  } else {
    throw ParseError("expected class tag A/A1/A2/B in \"" + c.s + "\"");
  }
  c.expect('[');
  IndClass x;
  x.c = cls;
  if (cls == Cls::IA1 || cls == Cls::IA2) {
    x.j = parse_point(spec, c);
  } else {
    x.i = parse_point(spec, c);
    c.expect(',');
    x.j = parse_point(spec, c);
  }
  c.expect(']');
  int shift = 0;
  if (c.eat('@')) shift = (int)parse_int(c);
  validate(spec, x);
  return {x, shift};
}

}  // namespace

std::string to_literal(const PosetSpec& spec, const IndClass& x) {
  switch (x.c) {
    case Cls::IA:
      return "A[" + point_str(spec, x.i) + "," + point_str(spec, x.j) + "]";
    case Cls::IA1:
      return "A1[" + point_str(spec, x.j) + "]";
    case Cls::IA2:
      return "A2[" + point_str(spec, x.j) + "]";
    case Cls::IB:
      return "B[" + point_str(spec, x.i) + "," + point_str(spec, x.j) + "]";
  }
  return {};
}

std::string to_literal(const PosetSpec& spec, const IndObj& x) {
  std::string s = to_literal(spec, x.cls);
  if (x.shift != 0) s += "@" + std::to_string(x.shift);
  return s;
}

std::string to_literal(const PosetSpec& spec, const DObj& x) {
  if (x.is_zero()) return "0";
  std::string s;
  for (size_t i = 0; i < x.summands.size(); ++i) {
    if (i) s += " + ";
    s += to_literal(spec, x.summands[i]);
  }
  return s;
}

IndObj parse_ind(const PosetSpec& spec, const std::string& s) {
  Cursor c{s};
  IndObj x = parse_one(spec, c);
  if (!c.done()) throw ParseError("trailing input in \"" + s + "\"");
  return x;
}

DObj parse_dobj(const PosetSpec& spec, const std::string& s) {
  Cursor c{s};
  c.ws();
  if (c.s.compare(c.i, 1, "0") == 0) {
    ++c.i;
    if (!c.done()) throw ParseError("trailing input after zero object");
    return {};
  }
  std::vector<IndObj> parts;
  parts.push_back(parse_one(spec, c));
  while (c.eat('+')) parts.push_back(parse_one(spec, c));
  if (!c.done()) throw ParseError("trailing input in \"" + s + "\"");
  return make_dobj(std::move(parts));
}

}  // namespace dcat
