#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "ramond/bmodule.hpp"
#include "ramond/normal_form.hpp"
#include "ramond/svector.hpp"

namespace ramond {

struct InducedKey {
  SVector sv;
  BasisLabel label;

  bool operator==(const InducedKey&) const = default;
  bool operator<(const InducedKey& other) const {
    if (sv != other.sv) return sv < other.sv;
    return label < other.label;
  }
};

// Element of Ind_{B,c}(V) in the unique normal form of Eq. (2.3): a finite
// sum of coeff * g_i (x) u.
class InducedElement {
 public:
  InducedElement() = default;
  InducedElement(const SVector& sv, const BasisLabel& u,
                 const ScalarPoly& coeff = ScalarPoly::one());

  void add(const InducedKey& key, const ScalarPoly& coeff);
  InducedElement& operator+=(const InducedElement& other);
  InducedElement operator-(const InducedElement& other) const;
  InducedElement operator*(const ScalarPoly& s) const;

  bool is_zero() const { return terms_.empty(); }
  const std::map<InducedKey, ScalarPoly>& terms() const { return terms_; }
  bool operator==(const InducedElement& other) const { return terms_ == other.terms_; }

 private:
  std::map<InducedKey, ScalarPoly> terms_;
};

// Action of any Ramond generator: straighten g * g_i, push the raising part
// into V (rightmost letter first), keep the lowering part as the new SVector.
InducedElement induced_act(const Generator& g, const InducedElement& w, const BModule& V);
InducedElement induced_act(const LinearCombo& lc, const InducedElement& w, const BModule& V);

std::set<SVector> supp(const InducedElement& w);
std::set<SVector> supp_m(const InducedElement& w, long m);
// Maximum of supp under the principal order; throws std::domain_error for w = 0.
SVector deg(const InducedElement& w);
long weight_W(const InducedElement& w);  // W(deg(w))

struct ProbeStep {
  Generator applied;
  SVector deg_after;
};

struct ProbeTrace {
  std::vector<ProbeStep> steps;
  InducedElement terminal;
  bool falsified = false;       // a step yielded 0 under the stated hypotheses
  std::string falsified_detail;
};

// The constructive degree-reduction loop from the proof of Theorem 3.4:
// apply L_{r+k} when the minimal nonzero position of deg(w) is 2k-1, and
// G_{r+k-1} when it is 2k, until the degree is the zero vector.
ProbeTrace simplicity_probe(InducedElement w, int r, const BModule& V);

// Basis of {w in slice : L_m w = G_n w = 0, m in (b, b+window], n in
// (b-1, b-1+window]} over the slice spanned by W <= weight_cap and
// enumerate_labels(label_cap); exact over the rational-function field Q(c).
std::vector<InducedElement> annihilator_space(const BModule& V, int b, long weight_cap,
                                              int index_window, int label_cap);

struct RestrictedBound {
  long k = 0;
  bool verified = false;
  std::string detail;
};

// k = W(w) + r, with exhaustive annihilation verification over the window.
RestrictedBound restricted_bound(const InducedElement& w, const BModule& V, int r,
                                 int index_window);

// Least n with g^n w = 0; throws std::runtime_error if the Lemma 3.2 bound
// is exceeded.
int nilpotency_probe(const Generator& g, InducedElement w, const BModule& V, int r);

std::string format_induced(const InducedElement& w, const BModule& V);
InducedElement parse_induced(const std::string& text, const BModule& V);

}  // namespace ramond
