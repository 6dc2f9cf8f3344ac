#include "hgc/linalg.hpp"

#include "doctest.h"

using namespace hgc;

namespace {
const Field Q = Field::rationals();

Space kc2_space() { return Space{"kC2", {"1", "s"}}; }

/// Group-like comultiplication c |-> c (x) c on the two-dimensional space.
CoMultTensor kc2_comult() {
  const Space s = kc2_space();
  return CoMultTensor{s, s, s, {{{0, 0, 0}, Q.one()}, {{1, 1, 1}, Q.one()}}};
}
}  // namespace

TEST_CASE("tensor space names compose associatively") {
  const Space a{"A", {"p", "q"}};
  const Space b{"B", {"u"}};
  const Space c{"C", {"x", "y"}};
  const Space ab_c = tensor_space(tensor_space(a, b), c);
  const Space a_bc = tensor_space(a, tensor_space(b, c));
  CHECK(ab_c.basis == a_bc.basis);
  CHECK(ab_c.dim() == 4);
  CHECK(ab_c.basis[0] == "p,u,x");
  CHECK(flat(1, 1, 2) == 3);
}

TEST_CASE("duplicate or empty basis names are rejected") {
  CHECK_THROWS_AS(validate_space(Space{"A", {"x", "x"}}), Error);
  CHECK_THROWS_AS(validate_space(Space{"A", {""}}), Error);
  CHECK_NOTHROW(validate_space(Space{"A", {"x", "y"}}));
}

TEST_CASE("linear maps apply, compose and invert exactly") {
  const Space s{"V", {"a", "b"}};
  // m = [[1, 2], [3, 4]] acting on columns
  LinMap m{s, s, {}};
  m.entries[{0, 0}] = Q.from_int(1);
  m.entries[{0, 1}] = Q.from_int(2);
  m.entries[{1, 0}] = Q.from_int(3);
  m.entries[{1, 1}] = Q.from_int(4);
  const Vec v{Q.from_int(1), Q.from_int(1)};
  const Vec mv = m.apply(Q, v);
  CHECK(mv[0].str() == "3");
  CHECK(mv[1].str() == "7");

  const LinMap minv = invert(Q, m, "Singular");
  CHECK(compose(Q, minv, m) == identity_map(s, Q));
  CHECK(compose(Q, m, minv) == identity_map(s, Q));
  const Vec back = minv.apply(Q, mv);
  CHECK(back[0].str() == "1");
  CHECK(back[1].str() == "1");

  LinMap sing{s, s, {}};
  sing.entries[{0, 0}] = Q.one();
  sing.entries[{1, 0}] = Q.one();
  try {
    invert(Q, sing, "SingularAntipode");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == "SingularAntipode");
  }
}

TEST_CASE("multiplication tensors evaluate bilinearly") {
  const Space s = kc2_space();
  MultTensor m{s, s, s, {}};
  m.entries[{0, 0, 0}] = Q.one();
  m.entries[{0, 1, 1}] = Q.one();
  m.entries[{1, 0, 1}] = Q.one();
  m.entries[{1, 1, 0}] = Q.one();
  const Vec a{Q.from_int(2), Q.from_int(3)};   // 2 + 3s
  const Vec b{Q.from_int(1), Q.from_int(-1)};  // 1 - s
  const Vec ab = m.apply(Q, a, b);             // (2-3) + (3-2)s
  CHECK(ab[0].str() == "-1");
  CHECK(ab[1].str() == "1");
  const auto terms = m.on_basis(1, 1);
  REQUIRE(terms.size() == 1);
  CHECK(terms[0].i == 0);
  CHECK(terms[0].c.is_one());
}

TEST_CASE("comultiplication tensors expand and flatten") {
  const CoMultTensor d = kc2_comult();
  const Vec v{Q.from_int(5), Q.from_int(-2)};
  const auto terms = d.apply(Q, v);
  REQUIRE(terms.size() == 2);
  const Vec fl = d.apply_flat(Q, v);
  REQUIRE(fl.size() == 4);
  CHECK(fl[0].str() == "5");
  CHECK(fl[3].str() == "-2");
  CHECK(fl[1].is_zero());
}

TEST_CASE("dual pairing and dual spaces share the index set") {
  const Space s = kc2_space();
  const DualBasis db = dual_basis(s);
  CHECK(db.dual.dim() == s.dim());
  const Vec xi{Q.from_int(2), Q.from_int(7)};
  const Vec v{Q.one(), Q.one()};
  CHECK(pair_dual(Q, xi, v).str() == "9");
}

// Frozen by hand from the pointwise product of functions on the two-point
// group: the functionals dual to the group-like basis multiply as
// delta_i . delta_j = [i == j] delta_i, in either convolution order.
TEST_CASE("opposite convolution on a group-like comultiplication") {
  const CoMultTensor d = kc2_comult();
  const Vec d1{Q.one(), Q.zero()};
  const Vec ds{Q.zero(), Q.one()};
  CHECK(opposite_convolution(Q, d, d1, d1) == d1);
  CHECK(opposite_convolution(Q, d, ds, ds) == ds);
  CHECK(is_zero_vec(opposite_convolution(Q, d, d1, ds)));
  CHECK(is_zero_vec(opposite_convolution(Q, d, ds, d1)));
}

// Frozen by hand on the four-dimensional comultiplication
//   D(x) = x (x) 1 + g (x) x  (basis order 1, g, x, gx):
// with xi = delta_1, eta = delta_x the opposite convolution gives
// (xi.eta)(x) = xi(1) eta(x) = 1 while (eta.xi)(x) = eta(1) xi(x) = 0,
// so the order of the legs is observable.
TEST_CASE("opposite convolution pairs xi with the right leg") {
  const Space s{"H4", {"1", "g", "x", "gx"}};
  CoMultTensor d{s, s, s, {}};
  d.entries[{0, 0, 0}] = Q.one();
  d.entries[{1, 1, 1}] = Q.one();
  d.entries[{2, 2, 0}] = Q.one();
  d.entries[{2, 1, 2}] = Q.one();
  d.entries[{3, 3, 1}] = Q.one();
  d.entries[{3, 0, 3}] = Q.one();
  const Vec delta1 = basis_vec(Q, 4, 0);
  const Vec deltax = basis_vec(Q, 4, 2);
  const Vec p = opposite_convolution(Q, d, delta1, deltax);
  const Vec q = opposite_convolution(Q, d, deltax, delta1);
  CHECK(p[2].str() == "1");
  CHECK(q[2].str() == "0");
}

TEST_CASE("prime-field vectors flow through the same helpers") {
  const Field f5 = Field::prime(5);
  const Space s{"V", {"a", "b"}};
  LinMap m{s, s, {}};
  m.entries[{0, 0}] = f5.from_int(2);
  m.entries[{1, 1}] = f5.from_int(3);
  const LinMap mi = invert(f5, m, "Singular");
  CHECK(compose(f5, mi, m) == identity_map(s, f5));
  Vec acc = zero_vec(f5, 2);
  axpy(acc, f5.from_int(4), basis_vec(f5, 2, 0));
  axpy(acc, f5.from_int(3), basis_vec(f5, 2, 0));
  CHECK(acc[0].str() == "2");
}
