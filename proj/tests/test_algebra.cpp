#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "ramond/algebra.hpp"

using namespace ramond;

namespace {
const AlgebraSpec kRamond = AlgebraSpec::ramond();
const AlgebraSpec kNS = AlgebraSpec::neveu_schwarz();
}  // namespace

TEST_CASE("Ramond bracket examples") {
  CHECK(format_linear_combo(kRamond.bracket(Lgen(1), Lgen(-1))) == "-2*L(0)");
  // The L-L central term is (m^3 - m)/12: the unique sign compatible with
  // the printed G-G cocycle (4m^2 - 1)/12 under the super-Jacobi identity.
  CHECK(format_linear_combo(kRamond.bracket(Lgen(2), Lgen(-2))) == "-4*L(0) + 1/2*C");
  CHECK(format_linear_combo(kRamond.bracket(Ggen(1), Ggen(-1))) == "-2*L(0) + 1/4*C");
  CHECK(format_linear_combo(kRamond.bracket(Lgen(2), Ggen(0))) == "-1*G(2)");
  CHECK(format_linear_combo(kRamond.bracket(Ggen(0), Ggen(0))) == "-2*L(0) + -1/12*C");
}

TEST_CASE("antisupersymmetry within bound 5") {
  for (const auto& a : kRamond.generators_within(5)) {
    for (const auto& b : kRamond.generators_within(5)) {
      LinearCombo lhs = kRamond.bracket(a, b);
      LinearCombo rhs = kRamond.bracket(b, a);
      // [a,b] = -(-1)^{|a||b|} [b,a]: symmetric when both are odd.
      const int sign = (parity(a) & parity(b)) ? -1 : 1;
      rhs = rhs * ScalarPoly(Rational(sign));
      lhs += rhs;
      CHECK(lhs.is_zero());
    }
  }
}

TEST_CASE("grading: bracket lands in degree m+n, central only at m+n=0") {
  for (const auto& a : kRamond.generators_within(4)) {
    for (const auto& b : kRamond.generators_within(4)) {
      const LinearCombo out = kRamond.bracket(a, b);
      for (const auto& [g, s] : out.terms) CHECK(g.index == a.index + b.index);
      if (a.index + b.index != 0) CHECK(out.central.is_zero());
    }
  }
}

TEST_CASE("super-Jacobi holds for both algebras at bound 4") {
  CHECK(check_super_jacobi(kRamond, 4).passed());
  CHECK(check_super_jacobi(kNS, 4).passed());
}

TEST_CASE("corrupted cocycle fails super-Jacobi (negative control)") {
  const JacobiReport bad = check_super_jacobi(AlgebraSpec::corrupted(AlgebraKind::Ramond), 4);
  CHECK_FALSE(bad.passed());
}

TEST_CASE("Neveu-Schwarz structure constants (doubled G-indices)") {
  // [G_{1/2}, G_{-1/2}] = -2 L_0 + ((4*(1/2)^2 - 1)/12) C = -2 L_0.
  CHECK(format_linear_combo(kNS.bracket(Ggen(1), Ggen(-1))) == "-2*L(0)");
  // [G_{3/2}, G_{-3/2}] = -2 L_0 + (2/3) C.
  CHECK(format_linear_combo(kNS.bracket(Ggen(3), Ggen(-3))) == "-2*L(0) + 2/3*C");
  // [L_1, G_{1/2}] = (1/2 - 1/2) G_{3/2} = 0.
  CHECK(kNS.bracket(Lgen(1), Ggen(1)).is_zero());
  CHECK_THROWS_AS(kNS.bracket(Ggen(2), Ggen(0)), std::domain_error);
}

TEST_CASE("generator text grammar") {
  CHECK(format_generator(Lgen(-2)) == "L(-2)");
  CHECK(parse_generator("G(0)") == Ggen(0));
  CHECK(parse_generator(format_generator(Ggen(-7))) == Ggen(-7));
}
