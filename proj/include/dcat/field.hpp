// Exact coefficient fields for the oracle: arbitrary-precision rationals and
// prime fields. No floating point anywhere.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace dcat {

// Field of rationals.
struct QF {
  using Elt = boost::multiprecision::cpp_rational;
  Elt zero() const { return Elt(0); }
  Elt one() const { return Elt(1); }
  Elt from_int(long n) const { return Elt(n); }
  Elt add(const Elt& a, const Elt& b) const { return a + b; }
  Elt sub(const Elt& a, const Elt& b) const { return a - b; }
  Elt mul(const Elt& a, const Elt& b) const { return a * b; }
  Elt div(const Elt& a, const Elt& b) const { return a / b; }
  Elt neg(const Elt& a) const { return -a; }
  bool is_zero(const Elt& a) const { return a == 0; }
  std::string name() const { return "rational"; }
};

// Prime field GF(p) with runtime modulus.
struct PF {
  long p;
  explicit PF(long prime) : p(prime) {
    if (p < 2) throw std::invalid_argument("prime must be >= 2");
    for (long d = 2; d * d <= p; ++d)
      if (p % d == 0) throw std::invalid_argument("gf modulus must be prime");
  }
  using Elt = long;
  Elt zero() const { return 0; }
  Elt one() const { return 1 % p; }
  Elt from_int(long n) const { return ((n % p) + p) % p; }
  Elt add(Elt a, Elt b) const { return (a + b) % p; }
  Elt sub(Elt a, Elt b) const { return (a - b + p) % p; }
  Elt mul(Elt a, Elt b) const {
    return (long)((__int128)a * b % p);
  }
  Elt inv(Elt a) const {  // Fermat
    if (a == 0) throw std::domain_error("division by zero in GF(p)");
    Elt r = 1, base = a;
    long e = p - 2;
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }
  Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }
  Elt neg(Elt a) const { return (p - a) % p; }
  bool is_zero(Elt a) const { return a == 0; }
  std::string name() const { return "gf" + std::to_string(p); }
};

// Runtime field selector used by the facade layer.
struct FieldChoice {
  bool rational = true;
  long p = 2;
  std::string name() const {
    return rational ? "rational" : "gf" + std::to_string(p);
  }
};

}  // namespace dcat
