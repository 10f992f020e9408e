#pragma once

#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "ramond/algebra.hpp"
#include "ramond/generator.hpp"
#include "ramond/laurent.hpp"
#include "ramond/scalar_poly.hpp"

namespace ramond {

// Classical Whittaker basis L_0^a v_tau.
struct WhittakerLabel {
  int a = 0;
  int tau = 0;  // 0 = v0 (even), 1 = v1 = G_1 v0 (odd)
  auto operator<=>(const WhittakerLabel&) const = default;
};

// High-order basis L_0^{a_0}..L_{s-1}^{a_{s-1}} G_1^{e_1}..G_{s-1}^{e_{s-1}} v_tau,
// where v_tau is the state of the 2-dimensional graded seed (v1 = G_s-partner).
struct HighOrderLabel {
  std::vector<int> l_exp;   // size s, exponents of L_0..L_{s-1}
  std::vector<int> g_flags; // size s-1, 0/1 flags of G_1..G_{s-1}
  int tau = 0;
  auto operator<=>(const HighOrderLabel&) const = default;
};

// Solvable-module basis: d^n/(d-1), or its G_1-partner.
struct SolvableLabel {
  int n = 0;
  int partner = 0;
  auto operator<=>(const SolvableLabel&) const = default;
};

using BasisLabel = std::variant<WhittakerLabel, HighOrderLabel, SolvableLabel>;

class BModuleElement {
 public:
  BModuleElement() = default;
  explicit BModuleElement(const BasisLabel& u, const ScalarPoly& coeff = ScalarPoly::one());

  void add(const BasisLabel& u, const ScalarPoly& coeff);
  BModuleElement& operator+=(const BModuleElement& other);
  BModuleElement operator-(const BModuleElement& other) const;
  BModuleElement operator*(const ScalarPoly& s) const;

  bool is_zero() const { return terms_.empty(); }
  const std::map<BasisLabel, ScalarPoly>& terms() const { return terms_; }
  bool operator==(const BModuleElement& other) const { return terms_ == other.terms_; }

 private:
  std::map<BasisLabel, ScalarPoly> terms_;
};

// A module over B = R_+ (+) C L_0 (+) C C. C acts as the symbol c (fold into
// the ScalarPoly coefficient), so only L/G letters appear here.
class BModule {
 public:
  virtual ~BModule() = default;
  virtual std::string name() const = 0;
  // Action of g in B on a basis label; throws std::domain_error for g not in B.
  virtual BModuleElement act(const Generator& g, const BasisLabel& u) const = 0;
  virtual int label_parity(const BasisLabel& u) const = 0;
  virtual std::vector<BasisLabel> enumerate_labels(int cap) const = 0;
  virtual std::string format_label(const BasisLabel& u) const = 0;
  virtual BasisLabel parse_label(const std::string& text) const = 0;

  BModuleElement act(const Generator& g, const BModuleElement& e) const;
};

class WhittakerModule : public BModule {
 public:
  // Only phi(L_1), phi(L_2) may be nonzero; anything else is rejected.
  WhittakerModule(const Rational& phi_L1, const Rational& phi_L2);
  // Negative-control constructor: arbitrary phi assignments, unvalidated.
  static WhittakerModule unchecked(std::map<long, Rational> phi_L);

  std::string name() const override { return "whittaker"; }
  BModuleElement act(const Generator& g, const BasisLabel& u) const override;
  int label_parity(const BasisLabel& u) const override;
  std::vector<BasisLabel> enumerate_labels(int cap) const override;
  std::string format_label(const BasisLabel& u) const override;
  BasisLabel parse_label(const std::string& text) const override;

  Rational phi(long m) const;

 private:
  WhittakerModule() = default;
  std::map<long, Rational> phi_L_;
};

class HighOrderModule : public BModule {
 public:
  // phi may be nonzero only on L_s..L_{2s}.
  HighOrderModule(int s, std::map<long, Rational> phi_L);

  std::string name() const override { return "highorder"; }
  BModuleElement act(const Generator& g, const BasisLabel& u) const override;
  int label_parity(const BasisLabel& u) const override;
  std::vector<BasisLabel> enumerate_labels(int cap) const override;
  std::string format_label(const BasisLabel& u) const override;
  BasisLabel parse_label(const std::string& text) const override;

  int s() const { return s_; }
  Rational phi(long m) const;

 private:
  // Seed action on the 2-dimensional graded head {v0, v1}.
  BModuleElement seed_act(const Generator& g, int tau) const;

  int s_ = 2;
  std::map<long, Rational> phi_L_;
};

class SolvableModule : public BModule {
 public:
  SolvableModule() = default;

  std::string name() const override { return "solvable"; }
  BModuleElement act(const Generator& g, const BasisLabel& u) const override;
  int label_parity(const BasisLabel& u) const override;
  std::vector<BasisLabel> enumerate_labels(int cap) const override;
  std::string format_label(const BasisLabel& u) const override;
  BasisLabel parse_label(const std::string& text) const override;
};

// Conversions between the label-coefficient view and Laurent fractions, for
// the solvable module.
LaurentFraction solvable_to_fraction(const BModuleElement& e, int partner);
BModuleElement solvable_from_fraction(const LaurentFraction& f, int partner);

struct AxiomFailure {
  std::string pair_id;
  std::string label_id;
  std::string detail;
};

struct AxiomReport {
  long cases_checked = 0;
  std::vector<AxiomFailure> failures;
  bool passed() const { return failures.empty(); }
};

// Verifies x(yv) - (-1)^{|x||y|} y(xv) = [x,y]v exactly for all generator
// pairs in B with index <= index_bound, over sampled basis labels.
AxiomReport bmodule_axiom_check(const BModule& module, long index_bound,
                                int sample_size, unsigned seed);

}  // namespace ramond
