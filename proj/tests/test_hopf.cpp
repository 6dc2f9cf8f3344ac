#include "hgc/hopf.hpp"

#include "doctest.h"
#include "hgc/demo.hpp"

using namespace hgc;

namespace {
const Field Q = Field::rationals();

Vec elem(const Field& f, std::size_t dim, std::size_t i) {
  return basis_vec(f, dim, i);
}
}  // namespace

// ---- frozen structure-constant oracles (checked before any machinery) ----

TEST_CASE("frozen table: the two-dimensional group algebra") {
  const OrdinaryHopf h = kc2_hopf(Q);
  // s*s = 1, Delta(s) = s (x) s, eps(s) = 1, S(s) = s
  CHECK(h.mult.apply(Q, elem(Q, 2, 1), elem(Q, 2, 1)) == elem(Q, 2, 0));
  const auto ds = h.comult.on_basis(1);
  REQUIRE(ds.size() == 1);
  CHECK(ds[0].i == 1);
  CHECK(ds[0].j == 1);
  CHECK(h.counit[1].is_one());
  CHECK(h.antipode.apply(Q, elem(Q, 2, 1)) == elem(Q, 2, 1));
}

TEST_CASE("frozen table: the four-dimensional algebra") {
  const OrdinaryHopf h = sweedler4_hopf(Q);
  const auto e = [&](std::size_t i) { return elem(Q, 4, i); };
  // indices: 1, g, x, gx
  CHECK(h.mult.apply(Q, e(1), e(1)) == e(0));           // g g = 1
  CHECK(is_zero_vec(h.mult.apply(Q, e(2), e(2))));      // x x = 0
  CHECK(h.mult.apply(Q, e(2), e(1)) ==
        scaled(Q.from_int(-1), e(3)));                  // x g = -gx
  CHECK(h.mult.apply(Q, e(1), e(2)) == e(3));           // g x = gx
  CHECK(is_zero_vec(h.mult.apply(Q, e(3), e(3))));      // gx gx = 0
  // S(x) = -gx, S(gx) = x, so S^2(x) = -x and S has order four
  const Vec sx = h.antipode.apply(Q, e(2));
  CHECK(sx == scaled(Q.from_int(-1), e(3)));
  const Vec s2x = h.antipode.apply(Q, sx);
  CHECK(s2x == scaled(Q.from_int(-1), e(2)));
  const Vec s4x = h.antipode.apply(Q, h.antipode.apply(Q, s2x));
  CHECK(s4x == e(2));
  // counit kills x and gx
  CHECK(h.counit[2].is_zero());
  CHECK(h.counit[3].is_zero());
  CHECK_THROWS_AS(sweedler4_hopf(Field::prime(2)), Error);
}

// ---- axiom checkers on the demo families ----

TEST_CASE("trivial families satisfy every axiom") {
  for (const char* name : {"e", "c2", "c3", "s3"}) {
    const HopfGC h = trivial_family(Q, demo_group(name));
    const ValidationReport r = check_hopf(h);
    INFO(name, ": ", r.summary());
    CHECK(r.ok());
  }
}

TEST_CASE("constant families satisfy every axiom") {
  const HopfGC a = constant_family(Q, demo_group("c2"), kc2_hopf(Q));
  CHECK(check_hopf(a).ok());
  const Field f5 = Field::prime(5);
  const HopfGC b = constant_family(f5, demo_group("c2"), kc2_hopf(f5));
  CHECK(check_hopf(b).ok());
  const HopfGC c = ordinary_as_family(Q, sweedler4_hopf(Q));
  CHECK(check_hopf(c).ok());
  const HopfGC d = constant_family(Q, demo_group("c2"), sweedler4_hopf(Q));
  CHECK(check_hopf(d).ok());
}

TEST_CASE("twisted antipode derivation inverts the antipode") {
  const HopfGC h0 = ordinary_as_family(Q, sweedler4_hopf(Q));
  CHECK_FALSE(h0.antipode_tw.empty());  // constant_family already derives
  // S^-1(x) = gx since S(gx) = x
  const Vec sbar_x = h0.antipode_tw[0].apply(Q, elem(Q, 4, 2));
  CHECK(sbar_x == elem(Q, 4, 3));
  // and S^-1 agrees with S^3 because S has order four
  const LinMap& s = h0.antipode[0];
  const LinMap s3 = compose(Q, s, compose(Q, s, s));
  CHECK(h0.antipode_tw[0] == s3);
}

TEST_CASE("antipode inversion fails loudly when singular") {
  HopfGC h = ordinary_as_family(Q, sweedler4_hopf(Q));
  h.antipode[0].entries.clear();          // the zero map
  h.antipode_tw.clear();
  try {
    derive_twisted_antipode(h);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == "SingularAntipode");
  }
}

TEST_CASE("opposite family transposes multiplication and swaps antipodes") {
  const HopfGC h = ordinary_as_family(Q, sweedler4_hopf(Q));
  const HopfGC op = opposite_hgc(h);
  CHECK(check_hopf(op).ok());
  // (x . g) in the opposite algebra = g x = gx in the original
  CHECK(op.mult[0].apply(Q, elem(Q, 4, 2), elem(Q, 4, 1)) == elem(Q, 4, 3));
  CHECK(op.antipode[0] == h.antipode_tw[0]);
  CHECK(op.antipode_tw[0] == h.antipode[0]);
  // double opposite restores the family
  const HopfGC opop = opposite_hgc(op);
  CHECK(opop.mult[0] == h.mult[0]);
  CHECK(opop.antipode[0] == h.antipode[0]);
}

TEST_CASE("tensor families multiply componentwise with the middle flip") {
  const HopfGC a = constant_family(Q, demo_group("c2"), kc2_hopf(Q));
  const HopfGC b = trivial_family(Q, demo_group("c3"));
  const HopfGC t = tensor_hgc(a, b);
  CHECK(t.grading.size() == 6);
  CHECK(t.at(0).dim() == 2);
  const ValidationReport r = check_hopf(t);
  INFO(r.summary());
  CHECK(r.ok());

  const HopfGC big = tensor_hgc(opposite_hgc(a), a);
  const ValidationReport r2 = check_hopf(big);
  INFO(r2.summary());
  CHECK(r2.ok());
}

// ---- negative controls: every corrupted law is detected ----

TEST_CASE("corrupting one multiplication constant breaks the checker") {
  HopfGC h = constant_family(Q, demo_group("c2"), kc2_hopf(Q));
  h.mult[1].entries[{1, 1, 0}] = Q.from_int(2);  // s*s = 2 in one component
  const ValidationReport r = check_hopf(h);
  CHECK_FALSE(r.ok());
}

TEST_CASE("corrupting one comultiplication constant breaks coassociativity") {
  HopfGC h = constant_family(Q, demo_group("c2"), kc2_hopf(Q));
  h.comult.at({0, 1}).entries[{1, 1, 1}] = Q.from_int(3);
  const ValidationReport r = check_group_coalgebra(h);
  CHECK_FALSE(r.ok());
  bool saw = false;
  for (const auto& fl : r.failures())
    if (fl.check == "gc.coassoc" || fl.check == "gc.counit") saw = true;
  CHECK(saw);
}

TEST_CASE("corrupting the antipode is caught by the cancellation laws") {
  HopfGC h = constant_family(Q, demo_group("c2"), sweedler4_hopf(Q));
  h.antipode[0].entries[{1, 1}] = Q.from_int(-1);  // S(g) = -g at identity
  const ValidationReport r = check_hopf(h);
  CHECK_FALSE(r.ok());
  bool saw = false;
  for (const auto& fl : r.failures())
    if (fl.check.rfind("hopf.antipode", 0) == 0) saw = true;
  CHECK(saw);
}

TEST_CASE("a wrong counit fails the counit law") {
  HopfGC h = trivial_family(Q, demo_group("c3"));
  h.counit[0] = Q.from_int(2);
  CHECK_FALSE(check_group_coalgebra(h).ok());
}
