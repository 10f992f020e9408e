#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include <random>

#include "ramond/bmodule.hpp"

using namespace ramond;

namespace {

BModuleElement basis(const BasisLabel& u) { return BModuleElement(u); }

const WhittakerLabel v0{0, 0};
const WhittakerLabel v1{0, 1};

}  // namespace

TEST_CASE("classical Whittaker action examples (phi(L1)=0, phi(L2)=1)") {
  const WhittakerModule V(Rational(0), Rational(1));
  CHECK(V.act(Ggen(1), BasisLabel(v0)) == basis(BasisLabel(v1)));
  CHECK(V.act(Ggen(1), BasisLabel(v1)) ==
        basis(BasisLabel(v0)) * ScalarPoly(Rational(-1)));
  // L_2 (L_0 v_0) = (L_0 - 2) v_0.
  BModuleElement expected = basis(BasisLabel(WhittakerLabel{1, 0}));
  expected += basis(BasisLabel(v0)) * ScalarPoly(Rational(-2));
  CHECK(V.act(Lgen(2), BasisLabel(WhittakerLabel{1, 0})) == expected);
  CHECK(V.act(Lgen(3), BasisLabel(v0)).is_zero());
  CHECK(V.act(Ggen(3), BasisLabel(v0)).is_zero());
  // L_0 raises the exponent.
  CHECK(V.act(Lgen(0), BasisLabel(v0)) == basis(BasisLabel(WhittakerLabel{1, 0})));
  CHECK_THROWS_AS(V.act(Lgen(-1), BasisLabel(v0)), std::domain_error);
}

TEST_CASE("Whittaker label text grammar") {
  const WhittakerModule V(Rational(0), Rational(1));
  CHECK(V.format_label(BasisLabel(WhittakerLabel{2, 1})) == "L0^2 v1");
  CHECK(V.format_label(BasisLabel(v0)) == "v0");
  for (const auto& u : V.enumerate_labels(3))
    CHECK(V.parse_label(V.format_label(u)) == u);
}

TEST_CASE("Whittaker module satisfies the B-module axiom at bound 6") {
  const WhittakerModule V(Rational(0), Rational(1));
  CHECK(bmodule_axiom_check(V, 6, 12, 1).passed());
  const WhittakerModule V2(Rational(1), Rational(1));
  CHECK(bmodule_axiom_check(V2, 6, 12, 1).passed());
}

TEST_CASE("corrupted phi fails the axiom check (negative control)") {
  const WhittakerModule bad = WhittakerModule::unchecked(
      {{1, Rational(0)}, {2, Rational(1)}, {3, Rational(1)}});
  CHECK_FALSE(bmodule_axiom_check(bad, 6, 12, 1).passed());
}

TEST_CASE("L_2 is injective on Whittaker slices (Theorem 3.4 hypothesis, r=2)") {
  // Upper-triangular with phi(L_2)=1 on the diagonal: L_2(L_0^a v_tau) has
  // leading term 1 * L_0^a v_tau.
  const WhittakerModule V(Rational(0), Rational(1));
  for (const auto& u : V.enumerate_labels(4)) {
    const BModuleElement img = V.act(Lgen(2), u);
    auto it = img.terms().find(u);
    REQUIRE(it != img.terms().end());
    CHECK(it->second == ScalarPoly::one());
  }
}

TEST_CASE("high-order module s=2 (phi_2(L4)=1)") {
  const HighOrderModule V(2, {{4, Rational(1)}});
  const HighOrderLabel h0{{0, 0}, {0}, 0};
  const HighOrderLabel h1{{0, 0}, {0}, 1};
  CHECK(V.act(Lgen(4), BasisLabel(h0)) == basis(BasisLabel(h0)));
  CHECK(V.act(Lgen(5), BasisLabel(h0)).is_zero());
  CHECK(V.act(Ggen(4), BasisLabel(h1)).is_zero());
  // G_2 v_0 = v_1 (the seed pairing) and G_2 v_1 = -phi_2(L_4) v_0.
  CHECK(V.act(Ggen(2), BasisLabel(h0)) == basis(BasisLabel(h1)));
  CHECK(V.act(Ggen(2), BasisLabel(h1)) ==
        basis(BasisLabel(h0)) * ScalarPoly(Rational(-1)));
  CHECK(bmodule_axiom_check(V, 6, 12, 1).passed());
  CHECK_THROWS_AS(HighOrderModule(2, {{1, Rational(1)}}), std::invalid_argument);
}

TEST_CASE("solvable x/y calculus") {
  const LaurentFraction one = LaurentFraction::monomial(0);
  CHECK(solvable_xy(SolvableGen::Y, one) == LaurentFraction::monomial(1));
  LaurentFraction x_one;
  x_one.add(0, Rational(-1));
  x_one.add(-1, Rational(-1));
  x_one.add(-2, Rational(-1));
  CHECK(solvable_xy(SolvableGen::X, one) == x_one);
  // [x,y] = y on q = d^2 + 3 and on 30 seeded numerators.
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> expn(-4, 4);
  std::uniform_int_distribution<int> coeff(-5, 5);
  auto check_xy = [](const LaurentFraction& f) {
    const LaurentFraction lhs = solvable_xy(SolvableGen::X, solvable_xy(SolvableGen::Y, f)) -
                                solvable_xy(SolvableGen::Y, solvable_xy(SolvableGen::X, f));
    CHECK(lhs == solvable_xy(SolvableGen::Y, f));
  };
  LaurentFraction q;
  q.add(2, Rational(1));
  q.add(0, Rational(3));
  check_xy(q);
  for (int t = 0; t < 30; ++t) {
    LaurentFraction f;
    for (int j = 0; j < 3; ++j) f.add(expn(rng), Rational(coeff(rng)));
    check_xy(f);
    // Closed form equals the paper's fraction formula after clearing (d-1).
    CHECK(solvable_xy(SolvableGen::X, f) == solvable_x_fraction_oracle(f));
  }
}

TEST_CASE("solvable module action examples") {
  const SolvableModule V;
  const SolvableLabel plain0{0, 0};
  const SolvableLabel partner0{0, 1};
  CHECK(V.act(Lgen(2), BasisLabel(plain0)) == basis(BasisLabel(SolvableLabel{1, 0})));
  CHECK(V.act(Ggen(1), BasisLabel(partner0)) ==
        basis(BasisLabel(SolvableLabel{1, 0})) * ScalarPoly(Rational(-1)));
  CHECK(V.act(Lgen(3), BasisLabel(plain0)).is_zero());
  CHECK(V.act(Lgen(3), BasisLabel(partner0)).is_zero());
  CHECK(V.act(Lgen(1), BasisLabel(plain0)).is_zero());
  CHECK(V.act(Ggen(2), BasisLabel(plain0)).is_zero());
  CHECK(bmodule_axiom_check(V, 6, 12, 1).passed());
}

TEST_CASE("y-action (multiplication by d) is injective on the truncation") {
  const SolvableModule V;
  for (const auto& u : V.enumerate_labels(4))
    if (std::get<SolvableLabel>(u).partner == 0)
      CHECK_FALSE(V.act(Lgen(2), u).is_zero());
}

TEST_CASE("parity consistency of all three families") {
  const WhittakerModule W(Rational(0), Rational(1));
  const HighOrderModule H(2, {{4, Rational(1)}});
  const SolvableModule S;
  for (const BModule* V : {static_cast<const BModule*>(&W),
                           static_cast<const BModule*>(&H),
                           static_cast<const BModule*>(&S)}) {
    for (const auto& u : V->enumerate_labels(2)) {
      for (long m = 0; m <= 4; ++m) {
        for (const Generator g : {Lgen(m), Ggen(m)}) {
          if (!in_B(g)) continue;
          const BModuleElement img = V->act(g, u);
          for (const auto& [lab, coeff] : img.terms())
            CHECK(V->label_parity(lab) == ((V->label_parity(u) + parity(g)) & 1));
        }
      }
    }
  }
}
