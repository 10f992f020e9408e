#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include <random>

#include "ramond/induced.hpp"

using namespace ramond;

namespace {

const WhittakerLabel v0{0, 0};

InducedElement term(const SVector& sv, const ScalarPoly& coeff = ScalarPoly::one()) {
  return InducedElement(sv, BasisLabel(v0), coeff);
}

}  // namespace

TEST_CASE("induced action examples (Whittaker, phi(L1)=0, phi(L2)=1)") {
  const WhittakerModule V(Rational(0), Rational(1));
  CHECK(induced_act(Lgen(3), term(SVector::unit(1)), V) ==
        term(SVector(), ScalarPoly(Rational(-4))));
  CHECK(induced_act(Ggen(2), term(SVector::unit(2)), V) ==
        term(SVector(), ScalarPoly(Rational(-2))));
  CHECK(induced_act(Lgen(-1), term(SVector()), V) == term(SVector::unit(1)));
}

TEST_CASE("supp, deg, W") {
  const WhittakerModule V(Rational(0), Rational(1));
  InducedElement w = term(SVector::unit(1));
  w += term(SVector::unit(2));
  CHECK(deg(w) == SVector::unit(1));
  CHECK(weight_W(w) == 1);
  CHECK(deg(term(SVector())) == SVector());
  CHECK_THROWS_AS(deg(InducedElement()), std::domain_error);
  InducedElement u = term(SVector::unit(1));
  u += term(SVector::unit(4));
  u += term(SVector::unit(3));
  const auto s1 = supp_m(u, 1);
  CHECK(s1 == std::set<SVector>{SVector::unit(1), SVector::unit(4)});
  CHECK(supp(u).size() == 3);
}

TEST_CASE("module axiom on Ind for |index| <= 4 and W <= 3") {
  const WhittakerModule V(Rational(0), Rational(1));
  const AlgebraSpec alg = AlgebraSpec::ramond();
  std::mt19937 rng(3);
  auto svs = enumerate_svectors(3);
  std::shuffle(svs.begin(), svs.end(), rng);
  svs.resize(6);
  for (long mi = -4; mi <= 4; mi += 2) {
    for (long ni = -3; ni <= 4; ni += 3) {
      for (const Generator g : {Lgen(mi), Ggen(mi)}) {
        for (const Generator h : {Lgen(ni), Ggen(ni)}) {
          for (const auto& sv : svs) {
            const InducedElement w = term(sv);
            InducedElement lhs = induced_act(g, induced_act(h, w, V), V);
            const int sign = (parity(g) & parity(h)) ? 1 : -1;
            lhs += induced_act(h, induced_act(g, w, V), V) * ScalarPoly(Rational(sign));
            const InducedElement rhs = induced_act(alg.bracket(g, h), w, V);
            CHECK(lhs - rhs == InducedElement());
          }
        }
      }
    }
  }
}

TEST_CASE("simplicity probe examples (r=2)") {
  const WhittakerModule V(Rational(0), Rational(1));
  ProbeTrace t1 = simplicity_probe(term(SVector::unit(1)), 2, V);
  REQUIRE(t1.steps.size() == 1);
  CHECK(t1.steps[0].applied == Lgen(3));
  CHECK(t1.terminal == term(SVector(), ScalarPoly(Rational(-4))));
  CHECK_FALSE(t1.falsified);

  ProbeTrace t2 = simplicity_probe(term(SVector::unit(2)), 2, V);
  REQUIRE(t2.steps.size() == 1);
  CHECK(t2.steps[0].applied == Ggen(2));
  CHECK(t2.terminal == term(SVector(), ScalarPoly(Rational(-2))));

  ProbeTrace t3 = simplicity_probe(term(SVector()), 2, V);
  CHECK(t3.steps.empty());
  CHECK(t3.terminal == term(SVector()));

  ProbeTrace t4 = simplicity_probe(term(SVector::unit(3)), 2, V);
  REQUIRE(t4.steps.size() == 1);
  CHECK(t4.steps[0].applied == Lgen(4));
  CHECK(t4.terminal == term(SVector(), ScalarPoly(Rational(-6))));

  ProbeTrace bad = simplicity_probe(InducedElement(), 2, V);
  CHECK(bad.falsified);
}

TEST_CASE("annihilator space: M_1 = 0, M_2 = 1 (x) V slice") {
  const WhittakerModule V(Rational(0), Rational(1));
  CHECK(annihilator_space(V, 1, 2, 4, 1).empty());
  const auto m2 = annihilator_space(V, 2, 2, 4, 1);
  CHECK(m2.size() == V.enumerate_labels(1).size());
  for (const auto& vec : m2)
    for (const auto& [key, coeff] : vec.terms()) CHECK(key.sv.is_zero());
  // weight_cap 0: the slice of 1 (x) V itself.
  CHECK(annihilator_space(V, 2, 0, 4, 1).size() == V.enumerate_labels(1).size());
}

TEST_CASE("restricted bound (Definition 2.2 via Lemma 3.2)") {
  const WhittakerModule V(Rational(0), Rational(1));
  const RestrictedBound b1 = restricted_bound(term(SVector::unit(1)), V, 2, 6);
  CHECK(b1.k == 3);
  CHECK(b1.verified);
  const RestrictedBound b0 = restricted_bound(term(SVector()), V, 2, 6);
  CHECK(b0.k == 2);
  CHECK(b0.verified);
  SVector w4;
  w4.set(3, 2);  // L_{-2}^2, W = 4
  const RestrictedBound b4 = restricted_bound(term(w4), V, 2, 6);
  CHECK(b4.k == 6);
  CHECK(b4.verified);
}

TEST_CASE("nilpotency probe bounds (Proposition 4.1)") {
  const WhittakerModule V(Rational(0), Rational(1));
  const int n = nilpotency_probe(Lgen(4), term(SVector::unit(1)), V, 2);
  CHECK(n >= 1);
  CHECK(n <= 3);  // ceil(1/2) + 2
  CHECK(nilpotency_probe(Lgen(5), term(SVector()), V, 2) == 1);
  CHECK_THROWS_AS(nilpotency_probe(Lgen(2), term(SVector()), V, 2),
                  std::invalid_argument);
  std::mt19937 rng(9);
  auto svs = enumerate_svectors(4);
  std::shuffle(svs.begin(), svs.end(), rng);
  for (std::size_t i = 0; i < 8 && i < svs.size(); ++i) {
    const long W = svs[i].weight_W();
    CHECK(nilpotency_probe(Lgen(4), term(svs[i]), V, 2) <= (W + 1) / 2 + 2);
  }
}

TEST_CASE("induced element literal round trip") {
  const WhittakerModule V(Rational(0), Rational(1));
  InducedElement w = term(SVector::unit(1));
  w.add(InducedKey{SVector::unit(2), BasisLabel(WhittakerLabel{2, 1})},
        ScalarPoly::c() * Rational(-1, 2));
  const std::string text = format_induced(w, V);
  CHECK(parse_induced(text, V) == w);
  CHECK(parse_induced("1*[1] v0 + -1/2*c*[0,1] L0^2 v1", V) == w);
  CHECK(format_induced(InducedElement(), V) == "0");
  CHECK(parse_induced("0", V).is_zero());
}
