#include "hgc/double.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "classical_double_oracle.hpp"
#include "doctest.h"
#include "hgc/accum.hpp"
#include "hgc/demo.hpp"

using namespace hgc;

namespace {
const Field Q = Field::rationals();

bool has_failure(const ValidationReport& r, const std::string& prefix) {
  for (const CheckFailure& cf : r.failures())
    if (cf.check.rfind(prefix, 0) == 0) return true;
  return false;
}

std::string thrown_code(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

Vec unit_vec(std::size_t n, std::size_t i) { return basis_vec(Q, n, i); }

/// Column c of a dense matrix as a vector.
Vec col_of(const oracle::Mat& m, std::size_t c) {
  Vec out;
  out.reserve(m.size());
  for (const auto& row : m) out.push_back(row[c]);
  return out;
}

/// Row-major flattening of one slice of a dense structure tensor.
Vec flat_slice(const oracle::Mat& m) {
  Vec out;
  for (const auto& row : m)
    for (const Scalar& c : row) out.push_back(c);
  return out;
}
}  // namespace

// ---------------------------------------------------------------------------
// Frozen oracles.  Every value below was computed by hand from the structure
// constants before the construction code was wired up.  The flat basis of a
// one-point double of a d-dimensional algebra is d_u # e_v at index u*d + v.
// ---------------------------------------------------------------------------

TEST_CASE("frozen: one-point double of the two-element group algebra") {
  const oracle::DenseDouble d = classical_double(Q, oracle::dense_kc2(Q));
  REQUIRE(d.dim == 4);
  // indices: 0 = d_1#1, 1 = d_1#s, 2 = d_s#1, 3 = d_s#s
  const auto prod = [&](std::size_t a, std::size_t b) {
    return oracle::mul_vec(Q, d.mult, unit_vec(4, a), unit_vec(4, b));
  };
  CHECK(is_zero_vec(prod(0, 2)));        // (d_1#1)(d_s#1) = 0
  CHECK(prod(1, 1) == unit_vec(4, 0));   // (d_1#s)(d_1#s) = d_1#1
  CHECK(is_zero_vec(prod(2, 0)));        // (d_s#1)(d_1#1) = 0
  CHECK(is_zero_vec(prod(1, 2)));        // (d_1#s)(d_s#1) = 0
  CHECK(is_zero_vec(prod(1, 3)));        // (d_1#s)(d_s#s) = 0
  CHECK(prod(3, 3) == unit_vec(4, 2));   // (d_s#s)(d_s#s) = d_s#1
  CHECK(prod(0, 0) == unit_vec(4, 0));   // (d_1#1)(d_1#1) = d_1#1

  Vec unit = zero_vec(Q, 4);
  unit[0] = Q.one();
  unit[2] = Q.one();
  CHECK(d.unit == unit);  // eps # 1 = (d_1 + d_s) # 1

  // Delta(d_1#s) = (d_1#s)(x)(d_1#s) + (d_s#s)(x)(d_s#s)
  CHECK(d.comult[1][1][1] == Q.one());
  CHECK(d.comult[1][3][3] == Q.one());
  CHECK(d.comult[1][1][3].is_zero());
  CHECK(d.comult[1][0][0].is_zero());

  Vec counit = zero_vec(Q, 4);
  counit[0] = Q.one();
  counit[1] = Q.one();
  CHECK(d.counit == counit);  // d_w(1) eps(e_s)

  // with everything commutative and involutive the antipode is the identity
  for (std::size_t c = 0; c < 4; ++c) {
    CHECK(col_of(d.antipode, c) == unit_vec(4, c));
    CHECK(col_of(d.antipode_tw, c) == unit_vec(4, c));
  }

  // R = (d_1#1)(x)(eps#1) + (d_s#1)(x)(eps#s)
  Vec r = zero_vec(Q, 16);
  r[0 * 4 + 0] = Q.one();
  r[0 * 4 + 2] = Q.one();
  r[2 * 4 + 1] = Q.one();
  r[2 * 4 + 3] = Q.one();
  CHECK(d.rmat == r);
  CHECK(d.qmat == r);  // S is the identity here, so Q = R
}

TEST_CASE("frozen: one-point double of the four-dimensional algebra") {
  const oracle::DenseDouble d = classical_double(Q, oracle::dense_sweedler4(Q));
  REQUIRE(d.dim == 16);
  // family basis (1, g, x, gx) at 0..3; double index u*4 + v
  const auto prod = [&](std::size_t a, std::size_t b) {
    return oracle::mul_vec(Q, d.mult, unit_vec(16, a), unit_vec(16, b));
  };
  // (d_1#x)(d_g#1) = d_1#x: only the middle split leg survives the pairing
  CHECK(prod(2, 4) == unit_vec(16, 2));
  // (d_g#x)(d_g#1) = 0: the functional factors pair to zero
  CHECK(is_zero_vec(prod(6, 4)));
  // (d_1#x)(d_1#1) = 0
  CHECK(is_zero_vec(prod(2, 0)));
  // (d_gx#1)(d_1#x) = d_gx#x: picks the 1 (x) gx leg of the coproduct of gx,
  // which separates the two convolution orders
  CHECK(prod(12, 2) == unit_vec(16, 14));

  // S(d_1#x) = -d_g#gx and S(d_g#x) = -d_1#gx
  CHECK(col_of(d.antipode, 2) == scaled(-Q.one(), unit_vec(16, 7)));
  CHECK(col_of(d.antipode, 6) == scaled(-Q.one(), unit_vec(16, 3)));
}

// ---------------------------------------------------------------------------
// The module construction at a one-point grading agrees with the dense
// reference on every structure constant, in both presentations.
// ---------------------------------------------------------------------------

namespace {
void compare_with_reference(const std::string& family,
                            const oracle::DenseHopf& ref) {
  const oracle::DenseDouble cd = classical_double(Q, ref);
  const HopfGC h = demo_hopf(family, "e", Q);
  for (DoubleForm form : {DoubleForm::Smash, DoubleForm::Koppinen}) {
    const DrinfeldDouble d = build_double(h, form);
    const GradedAlgebra& core = d.alg.core;
    const std::size_t dd = cd.dim;
    REQUIRE(core.comp.size() == 1);
    REQUIRE(core.at(0, 0).dim() == dd);

    const MultTensor& m = core.mul(0, 0, 0);
    for (std::size_t i = 0; i < dd; ++i)
      for (std::size_t j = 0; j < dd; ++j)
        CHECK(m.apply(Q, unit_vec(dd, i), unit_vec(dd, j)) == cd.mult[i][j]);
    CHECK(core.unit[0] == cd.unit);

    const CoMultTensor& dl = d.alg.delta(0, 0, 0);
    for (std::size_t k = 0; k < dd; ++k)
      CHECK(dl.apply_flat(Q, unit_vec(dd, k)) == flat_slice(cd.comult[k]));
    CHECK(d.alg.counit[0] == cd.counit);

    const LinMap& s = d.alg.s_at(0, 0);
    const LinMap& st = d.alg.s_tw_at(0, 0);
    for (std::size_t c = 0; c < dd; ++c) {
      CHECK(s.apply(Q, unit_vec(dd, c)) == col_of(cd.antipode, c));
      CHECK(st.apply(Q, unit_vec(dd, c)) == col_of(cd.antipode_tw, c));
    }

    const Elem2& r = d.alg.r_at(0, 0);
    CHECK(r.l1 == 0);
    CHECK(r.x1 == 0);
    CHECK(r.coeff == cd.rmat);
    CHECK(d.alg.q_at(0, 0).coeff == cd.qmat);
  }
}
}  // namespace

TEST_CASE("one-point double matches the dense reference: group algebra") {
  compare_with_reference("kc2", oracle::dense_kc2(Q));
}

TEST_CASE("one-point double matches the dense reference: four-dimensional") {
  compare_with_reference("sweedler4", oracle::dense_sweedler4(Q));
}

// ---------------------------------------------------------------------------
// The direct datum construction and the folded two-sided construction are
// the same object, field for field.
// ---------------------------------------------------------------------------

TEST_CASE("the double datum equals the folded two-sided datum") {
  for (const auto& [family, group] :
       std::vector<std::pair<std::string, std::string>>{
           {"kc2", "c2"}, {"kc2", "c3"}, {"sweedler4", "e"}, {"trivial", "s3"}}) {
    const HopfGC h = demo_hopf(family, group, Q);
    CHECK(same_doihopf_datum(double_datum(h),
                             fold_two_sided(two_sided_from_hopf(h))));
  }
}

// ---------------------------------------------------------------------------
// Frozen facts for the double of the two-element group algebra over its own
// group (hand-computed: components are spanned by d_u # e_v with the product
// (d_u#e_v)(d_u'#e_v') = [u = u'] d_u # e_v e_v', identity antipode).
// ---------------------------------------------------------------------------

TEST_CASE("frozen: double of the group algebra over the two-element group") {
  const HopfGC h = demo_hopf("kc2", "c2", Q);
  const DrinfeldDouble d = build_double(h, DoubleForm::Koppinen);
  REQUIRE(d.alg.core.comp.size() == 4);
  for (const Space& s : d.alg.core.comp) REQUIRE(s.dim() == 4);

  for (int l = 0; l < 2; ++l)
    for (int x = 0; x < 2; ++x)
      for (int l2 = 0; l2 < 2; ++l2) {
        const MultTensor& m = d.alg.core.mul(l, x, l2);
        // (d_1#s)(d_1#s) = d_1#1 in every component pair
        CHECK(m.apply(Q, unit_vec(4, 1), unit_vec(4, 1)) == unit_vec(4, 0));
        // (d_1#1)(d_s#1) = 0
        CHECK(is_zero_vec(m.apply(Q, unit_vec(4, 0), unit_vec(4, 2))));
        // (d_s#1)(d_s#s) = d_s#s
        CHECK(m.apply(Q, unit_vec(4, 2), unit_vec(4, 3)) == unit_vec(4, 3));
      }

  // Delta_{t,e,t}(d_s#1) = (d_1#1)(x)(d_s#1) + (d_s#1)(x)(d_1#1)
  {
    const CoMultTensor& dl = d.alg.delta(1, 0, 1);
    Vec expect = zero_vec(Q, 16);
    expect[0 * 4 + 2] = Q.one();
    expect[2 * 4 + 0] = Q.one();
    CHECK(dl.apply_flat(Q, unit_vec(4, 2)) == expect);
  }

  // eps_l(d_w#e_s) = [w = 1] for every degree l
  Vec counit = zero_vec(Q, 4);
  counit[0] = Q.one();
  counit[1] = Q.one();
  for (int l = 0; l < 2; ++l) CHECK(d.alg.counit[static_cast<std::size_t>(l)] == counit);

  // the antipodes are identity maps on every component
  for (int l = 0; l < 2; ++l)
    for (int g = 0; g < 2; ++g) {
      CHECK(d.alg.s_at(l, g).entries ==
            identity_map(d.alg.s_at(l, g).domain, Q).entries);
      CHECK(d.alg.s_tw_at(l, g).entries ==
            identity_map(d.alg.s_tw_at(l, g).domain, Q).entries);
    }

  // every braiding element has the hand-computed coordinates
  Vec r = zero_vec(Q, 16);
  r[0 * 4 + 0] = Q.one();
  r[0 * 4 + 2] = Q.one();
  r[2 * 4 + 1] = Q.one();
  r[2 * 4 + 3] = Q.one();
  for (int g = 0; g < 2; ++g)
    for (int g2 = 0; g2 < 2; ++g2) {
      CHECK(d.alg.r_at(g, g2).coeff == r);
      CHECK(d.alg.q_at(g, g2).coeff == r);
    }
}

// ---------------------------------------------------------------------------
// The two presentations carry identical installed structure and isomorphic
// product tensors.
// ---------------------------------------------------------------------------

TEST_CASE("both presentations share all structure over the comparison maps") {
  const HopfGC h = demo_hopf("kc2", "c2", Q);
  const DrinfeldDouble ds = build_double(h, DoubleForm::Smash);
  const DrinfeldDouble dk = build_double(h, DoubleForm::Koppinen);

  const AlphaIso ai = alpha_iso(double_datum(ds.h));
  CHECK(check_alpha(ai).ok());
  CHECK(same_graded_algebra(ds.alg.core, ai.smash));
  CHECK(same_graded_algebra(dk.alg.core, ai.koppinen));

  // flat indexing is shared, so the non-product structure agrees entry-wise
  for (const auto& [key, t] : ds.alg.comult)
    CHECK(t.entries == dk.alg.comult.at(key).entries);
  CHECK(ds.alg.counit == dk.alg.counit);
  for (const auto& [key, s] : ds.alg.antipode)
    CHECK(s.entries == dk.alg.antipode.at(key).entries);
  for (const auto& [key, s] : ds.alg.antipode_tw)
    CHECK(s.entries == dk.alg.antipode_tw.at(key).entries);
  CHECK(ds.alg.rmat == dk.alg.rmat);
  CHECK(ds.alg.qmat == dk.alg.qmat);
}

// ---------------------------------------------------------------------------
// The comultiplication of the double is characterized against the family by
// an evaluation identity: for an elementary map f and all h1, h2 in the
// functional-leg component, Delta(f) evaluated pairwise on (h1, h2) equals
// the split of f(h1 h2).  This pins the dual expansion without using the
// stored tensors' own construction route.
// ---------------------------------------------------------------------------

namespace {
void check_comult_evaluation(const DrinfeldDouble& d) {
  const HopfGC& h = d.h;
  const FiniteGroup g0{h.grading, h.inv};
  const int n = static_cast<int>(g0.size());
  for (int l = 0; l < n; ++l) {
    const int li = g0.inv[static_cast<std::size_t>(l)];
    const std::size_t dfun = h.at(li).dim();
    for (int ga = 0; ga < n; ++ga)
      for (int gb = 0; gb < n; ++gb) {
        const int x = g0.op(ga, gb);
        const std::size_t dx = h.at(x).dim();
        const std::size_t dga = h.at(ga).dim(), dgb = h.at(gb).dim();
        const CoMultTensor& dl = d.alg.delta(l, ga, gb);
        for (std::size_t u0 = 0; u0 < dfun; ++u0)
          for (std::size_t v0 = 0; v0 < dx; ++v0) {
            const std::size_t fi = flat(u0, v0, dx);
            for (std::size_t h1 = 0; h1 < dfun; ++h1)
              for (std::size_t h2 = 0; h2 < dfun; ++h2) {
                Scalar c0 = Q.zero();
                for (const Term& t :
                     h.mult[static_cast<std::size_t>(li)].on_basis(h1, h2))
                  if (t.i == static_cast<int>(u0)) c0 += t.c;
                Acc2 lhs, rhs;
                for (const Term2& s : split2(h, ga, gb, static_cast<int>(v0)))
                  lhs.add(c0 * s.c, s.i, s.j);
                for (const Term2& t : dl.on_basis(fi)) {
                  const std::size_t u1 = static_cast<std::size_t>(t.i) / dga;
                  const std::size_t i1 = static_cast<std::size_t>(t.i) % dga;
                  const std::size_t u2 = static_cast<std::size_t>(t.j) / dgb;
                  const std::size_t j2 = static_cast<std::size_t>(t.j) % dgb;
                  if (u1 == h1 && u2 == h2)
                    rhs.add(t.c, static_cast<int>(i1), static_cast<int>(j2));
                }
                CHECK(lhs.dense(Q, dga, dgb) == rhs.dense(Q, dga, dgb));
              }
          }
      }
  }
}
}  // namespace

TEST_CASE("comultiplication evaluation identity on elementary tensors") {
  check_comult_evaluation(build_double(demo_hopf("kc2", "c2", Q),
                                       DoubleForm::Koppinen));
  check_comult_evaluation(build_double(demo_hopf("sweedler4", "e", Q),
                                       DoubleForm::Smash));
}

// ---------------------------------------------------------------------------
// Axiom suites.
// ---------------------------------------------------------------------------

TEST_CASE("the bialgebra, antipode and braiding laws hold on the doubles") {
  for (const auto& [family, group] :
       std::vector<std::pair<std::string, std::string>>{{"trivial", "c2"},
                                                        {"trivial", "s3"},
                                                        {"kc2", "c2"},
                                                        {"kc2", "c3"},
                                                        {"sweedler4", "e"}}) {
    const DrinfeldDouble d =
        build_double(demo_hopf(family, group, Q), DoubleForm::Koppinen);
    const ValidationReport b = check_graded_bialgebra(d.alg);
    CHECK_MESSAGE(b.ok(), family, "/", group, ": ", b.summary());
    const ValidationReport hp = check_graded_hopf(d.alg);
    CHECK_MESSAGE(hp.ok(), family, "/", group, ": ", hp.summary());
    const ValidationReport qt = check_quasitriangular(d.alg);
    CHECK_MESSAGE(qt.ok(), family, "/", group, ": ", qt.summary());
  }
}

TEST_CASE("the four-dimensional family over the two-element group") {
  const DrinfeldDouble d =
      build_double(demo_hopf("sweedler4", "c2", Q), DoubleForm::Koppinen);
  const ValidationReport b = check_graded_bialgebra(d.alg);
  CHECK_MESSAGE(b.ok(), b.summary());
  const ValidationReport qt = check_quasitriangular(d.alg);
  CHECK_MESSAGE(qt.ok(), qt.summary());
}

TEST_CASE("doubles over a prime field") {
  const Field f5 = Field::prime(5);
  const DrinfeldDouble d =
      build_double(demo_hopf("sweedler4", "e", f5), DoubleForm::Koppinen);
  CHECK(check_graded_bialgebra(d.alg).ok());
  CHECK(check_quasitriangular(d.alg).ok());
}

// ---------------------------------------------------------------------------
// Mutations: each corruption of a single structure family must be caught by
// the checker that owns the law it breaks.
// ---------------------------------------------------------------------------

TEST_CASE("corrupted unit splitting is caught") {
  DrinfeldDouble d = build_double(demo_hopf("kc2", "c2", Q), DoubleForm::Koppinen);
  CHECK(check_graded_bialgebra(d.alg).ok());
  // add a spurious term to the identity-degree comultiplication on the
  // basis vector supporting the local unit
  d.alg.comult.at({0, 0, 1}).entries[{0, 0, 0}] += Q.one();
  const ValidationReport rep = check_graded_bialgebra(d.alg);
  CHECK(!rep.ok());
  CHECK(has_failure(rep, "bialg."));
}

TEST_CASE("a scaled antipode fails the cancellation laws with a witness") {
  DrinfeldDouble d = build_double(demo_hopf("kc2", "c2", Q), DoubleForm::Koppinen);
  CHECK(check_graded_hopf(d.alg).ok());
  for (auto& [rc, c] : d.alg.antipode.at({1, 0}).entries) c *= Q.from_int(2);
  const ValidationReport rep = check_graded_hopf(d.alg);
  CHECK(has_failure(rep, "ghopf.antipode_right"));
  CHECK(has_failure(rep, "ghopf.antipode_left"));
  CHECK(!rep.failures().empty());
  CHECK(!rep.failures().front().witness.empty());
}

TEST_CASE("a dropped braiding term fails the cancellation identity") {
  DrinfeldDouble d = build_double(demo_hopf("kc2", "c2", Q), DoubleForm::Koppinen);
  CHECK(check_quasitriangular(d.alg).ok());
  d.alg.rmat.at({1, 0}).coeff[0] = Q.zero();
  const ValidationReport rep = check_quasitriangular(d.alg);
  CHECK(has_failure(rep, "qt.cancel_right"));
  CHECK(has_failure(rep, "qt.comult_first"));
}

TEST_CASE("a corrupted counit fails the unit pairing") {
  DrinfeldDouble d = build_double(demo_hopf("kc2", "c2", Q), DoubleForm::Koppinen);
  d.alg.counit[0][0] = Q.zero();
  const ValidationReport rep = check_graded_bialgebra(d.alg);
  CHECK(has_failure(rep, "bialg."));
}

TEST_CASE("installing antipodes over a broken family is refused") {
  DrinfeldDouble d = build_double(demo_hopf("kc2", "c2", Q), DoubleForm::Koppinen);
  for (auto& [rc, c] : d.h.antipode[1].entries) c *= Q.from_int(3);
  CHECK(thrown_code([&] { double_antipodes(d); }) == "AntipodeFailure");
}

TEST_CASE("missing structure raises the matching accessor errors") {
  GradedBialgebra empty;
  CHECK(thrown_code([&] { (void)empty.delta(0, 0, 0); }) ==
        "MissingComultiplication");
  CHECK(thrown_code([&] { (void)empty.s_at(0, 0); }) == "MissingAntipode");
  CHECK(thrown_code([&] { (void)empty.r_at(0, 0); }) == "MissingBraiding");
  CHECK(thrown_code([&] { (void)empty.eps(0); }) == "MissingCounit");
}
