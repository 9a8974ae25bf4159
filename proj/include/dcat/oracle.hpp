// Facade over the representation oracle: every query realizes symbolic
// classes on a margin-padded truncation, runs exact linear algebra, and
// lifts results back to symbolic classes. This layer never consults the
// closed-form hom/tau rules; it is the independent witness against them.
#pragma once

#include <cstdint>
#include <vector>

#include "dcat/field.hpp"
#include "dcat/model.hpp"
#include "dcat/order.hpp"
#include "dcat/rep.hpp"

namespace dcat {

// Truncation holding all listed classes with the given margin, plus the
// catalog of classes realizable on it (used for decomposition).
FinPoset span_truncation(const PosetSpec& spec,
                         const std::vector<IndClass>& classes, int margin);
std::vector<IndClass> truncation_catalog(const PosetSpec& spec,
                                         const FinPoset& P);

long o_hom(const FieldChoice& k, const PosetSpec& spec, const IndClass& x,
           const IndClass& y, int margin);
long o_ext(const FieldChoice& k, const PosetSpec& spec, const IndClass& x,
           const IndClass& y, int margin);
long o_end(const FieldChoice& k, const PosetSpec& spec, const IndClass& x,
           int margin);
long o_euler(const PosetSpec& spec, const IndClass& x, const IndClass& y,
             int margin);

// Decomposed AR translate (DTr) of a class; computed at margin and margin+1
// and compared (MarginTooSmall on disagreement).
std::vector<IndClass> o_tau(const FieldChoice& k, const PosetSpec& spec,
                            const IndClass& x, int margin);

struct OracleCone {
  std::vector<IndClass> coker, ker;
};
// Cone data of the evaluation map x^h -> y where h = dim Hom(x, y) >= 1
// (h = 1 gives the cone of the canonical map).
OracleCone o_cone_eval(const FieldChoice& k, const PosetSpec& spec,
                       const IndClass& x, const IndClass& y, int margin);

// Decomposed middle term of the universal extension of x by y
// (0 -> y -> E -> x^h -> 0, h = dim Ext(x,y) >= 1).
std::vector<IndClass> o_ext_middle(const FieldChoice& k, const PosetSpec& spec,
                                   const IndClass& x, const IndClass& y,
                                   int margin);

struct ARCertificate {
  bool ext_dim_one = false;   // dim Ext(z, DTr z) = 1
  bool exact = false;         // vertexwise short exactness of the sequence
  bool non_split = false;     // the epi admits no section
  bool lifting_ok = false;    // sampled non-isos into z factor through M
  int samples_run = 0;
  std::vector<IndClass> tau;      // decomposed DTr z
  std::vector<IndClass> middle;   // decomposed middle term
};
ARCertificate o_ar_certificate(const FieldChoice& k, const PosetSpec& spec,
                               const IndClass& z, int margin, int samples,
                               std::uint64_t seed);

// Random maps between sums of standard projectives have projective kernels.
bool o_semihereditary(const FieldChoice& k, const PosetSpec& spec, LPoint lo,
                      LPoint hi, int margin, int trials, std::uint64_t seed);

}  // namespace dcat
