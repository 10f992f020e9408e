#pragma once

#include <map>
#include <string>
#include <vector>

#include "ramond/generator.hpp"
#include "ramond/scalar_poly.hpp"

namespace ramond {

// Finite linear combination of generators plus a central part (the
// coefficient of C, read as a multiple of c when applied to a module).
struct LinearCombo {
  std::map<Generator, ScalarPoly> terms;
  ScalarPoly central;

  bool is_zero() const { return terms.empty() && central.is_zero(); }
  LinearCombo& add(const Generator& g, const ScalarPoly& coeff);
  LinearCombo& operator+=(const LinearCombo& other);
  LinearCombo operator*(const ScalarPoly& s) const;
  bool operator==(const LinearCombo& other) const {
    return terms == other.terms && central == other.central;
  }
};

enum class AlgebraKind { Ramond, NeveuSchwarz };

class AlgebraSpec {
 public:
  static AlgebraSpec ramond() { return AlgebraSpec(AlgebraKind::Ramond, false); }
  static AlgebraSpec neveu_schwarz() { return AlgebraSpec(AlgebraKind::NeveuSchwarz, false); }
  // Negative control: negates the Virasoro cocycle term, breaking Jacobi.
  static AlgebraSpec corrupted(AlgebraKind kind) { return AlgebraSpec(kind, true); }

  AlgebraKind kind() const { return kind_; }
  std::string name() const;

  // Ramond: all integer indices. NS: L any integer, G odd doubled index.
  bool in_domain(const Generator& g) const;

  // Z-degree in grading units (doubled for NS so G half-integers stay integral).
  long grading_degree(const Generator& g) const;

  // [a,b] per the structure constants; throws std::domain_error if an index
  // is outside the algebra's domain.
  LinearCombo bracket(const Generator& a, const Generator& b) const;
  LinearCombo bracket(const LinearCombo& a, const Generator& b) const;

  // All generators with |index| <= bound (NS G: |doubled index| <= 2*bound-1).
  std::vector<Generator> generators_within(long bound) const;

 private:
  AlgebraSpec(AlgebraKind kind, bool negate_cocycle)
      : kind_(kind), negate_cocycle_(negate_cocycle) {}

  AlgebraKind kind_;
  bool negate_cocycle_;
};

struct JacobiFailure {
  Generator a, b, c;
  std::string residual;
};

struct JacobiReport {
  long cases_checked = 0;
  std::vector<JacobiFailure> failures;
  bool passed() const { return failures.empty(); }
};

// Checks the graded Jacobi identity exactly on all generator triples within
// the index bound.
JacobiReport check_super_jacobi(const AlgebraSpec& alg, long index_bound);

std::string format_linear_combo(const LinearCombo& lc);

}  // namespace ramond
