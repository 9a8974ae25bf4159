// Locally discrete linear orders L = T x Z (lexicographic), the poset D_L
// (L plus two incomparable bottom points), and finite convex truncations.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dcat {

enum class Kind { TypeA, TypeD };

struct OrderError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct WindowExceeded : OrderError {
  using OrderError::OrderError;
};

// kind, the finite chain T (labels listed in increasing order) and the
// z-window applied to every fiber. Immutable after construction.
struct PosetSpec {
  Kind kind = Kind::TypeA;
  std::vector<std::string> t_labels;
  long zlo = 0, zhi = 0;

  PosetSpec() = default;
  PosetSpec(Kind k, std::vector<std::string> labels, long lo, long hi);

  int t_count() const { return (int)t_labels.size(); }
  int t_index(const std::string& lbl) const;  // throws OrderError if unknown
};

// A point (t, z) of L; order is lexicographic.
struct LPoint {
  int t = 0;
  long z = 0;
  friend bool operator==(const LPoint&, const LPoint&) = default;
  friend auto operator<=>(const LPoint& a, const LPoint& b) {
    if (a.t != b.t) return a.t <=> b.t;
    return a.z <=> b.z;
  }
};

inline LPoint successor(LPoint p) { return {p.t, p.z + 1}; }
inline LPoint predecessor(LPoint p) { return {p.t, p.z - 1}; }
inline LPoint step(LPoint p, long n) { return {p.t, p.z + n}; }

// A point of D_L: Q1, Q2 or an element of L.
struct DPoint {
  enum Tag { Q1, Q2, In } tag = In;
  LPoint p{};  // valid when tag == In
  static DPoint q1() { return {Q1, {}}; }
  static DPoint q2() { return {Q2, {}}; }
  static DPoint in(LPoint q) { return {In, q}; }
  friend bool operator==(const DPoint& a, const DPoint& b) {
    if (a.tag != b.tag) return false;
    return a.tag != In || a.p == b.p;
  }
};

// Q1, Q2 sit strictly below every element of L and are incomparable.
bool leq(const DPoint& a, const DPoint& b);

// A finite poset given by its Hasse diagram plus the origin of each vertex
// in the ambient A_L / D_L. Truncations are trees: a single chain, with the
// two Q-sources feeding its minimum in the D case.
struct FinPoset {
  std::vector<DPoint> origin;                // per vertex
  std::vector<std::pair<int, int>> hasse;    // arrows u -> v, u < v in order
  std::vector<LPoint> chain;                 // the chain part, ascending
  int chain_offset = 0;                      // vertex id of chain[0]
  bool has_q = false;                        // vertices 0,1 are Q1,Q2

  int size() const { return (int)origin.size(); }
  // vertex id of a chain point, or nullopt when outside the truncation
  std::optional<int> vertex_of(LPoint p) const;
  std::optional<int> vertex_of(const DPoint& d) const;
  bool vleq(int u, int v) const;  // order relation between vertices
};

bool is_forest(const FinPoset& p);

// Convex truncation between support_lo - margin and support_hi + margin
// (successor steps inside each touched fiber; interior fibers contribute
// their full window). Q1, Q2 are added for TypeD. Errors with
// WindowExceeded when the margin extension leaves z_window.
FinPoset truncate(const PosetSpec& spec, LPoint support_lo, LPoint support_hi,
                  int margin);

// Same construction without the z_window precondition. Oracle computations
// use this so that margin-extended truncations exist around any in-window
// support; the public truncate above keeps the documented contract.
FinPoset truncate_unchecked(const PosetSpec& spec, LPoint support_lo,
                            LPoint support_hi, int margin);

}  // namespace dcat
