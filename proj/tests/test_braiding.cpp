#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "hgc/demo.hpp"
#include "hgc/double.hpp"

using namespace hgc;

namespace {
const Field Q = Field::rationals();

bool has_failure(const ValidationReport& r, const std::string& prefix) {
  for (const CheckFailure& cf : r.failures())
    if (cf.check.rfind(prefix, 0) == 0) return true;
  return false;
}

/// The conjugation-orbit submodule of the regular module of the double:
/// the points (l, g^l) for fixed g, read back as a crossed module.
YDModule adjoint_module(const DrinfeldDouble& d, int g) {
  const FiniteGroup grp{d.h.grading, d.h.inv};
  const int n = static_cast<int>(grp.size());
  std::vector<int> points;
  for (int l = 0; l < n; ++l) points.push_back(l * n + grp.conj(g, l));
  std::sort(points.begin(), points.end());
  const GradedModule rm = regular_graded_module(d.alg.core);
  return graded_to_yd(d.h, restrict_module(rm, points));
}

/// Entry-level equality of two crossed modules under the flat index
/// identification, ignoring basis labels (used where the point carriers
/// are reassociated or padded by the unit object).
void check_same_tensors(const YDModule& a, const YDModule& b) {
  REQUIRE(a.comp.size() == b.comp.size());
  for (std::size_t p = 0; p < a.comp.size(); ++p) {
    CHECK(a.comp[p].dim() == b.comp[p].dim());
    CHECK(a.action[p].entries == b.action[p].entries);
  }
  REQUIRE(a.coaction.size() == b.coaction.size());
  for (const auto& [key, t] : a.coaction)
    CHECK(t.entries == b.coaction.at(key).entries);
  CHECK(a.v.nu == b.v.nu);
  CHECK(a.v.action == b.v.action);
}
}  // namespace

TEST_CASE("the unit object and the orbit modules are crossed modules") {
  const DrinfeldDouble d =
      build_double(demo_hopf("kc2", "c2", Q), DoubleForm::Koppinen);
  CHECK(check_yd_module(yd_unit(d.h)).ok());
  for (int g = 0; g < 2; ++g) {
    const YDModule m = adjoint_module(d, g);
    CHECK(m.comp.size() == 2);
    CHECK(m.at(0).dim() == 4);
    const ValidationReport rep = check_yd_module(m);
    CHECK_MESSAGE(rep.ok(), rep.summary());
  }
}

TEST_CASE("orbit modules over a nonabelian grading are crossed modules") {
  const DrinfeldDouble d =
      build_double(demo_hopf("trivial", "s3", Q), DoubleForm::Koppinen);
  for (int g = 0; g < 6; ++g)
    CHECK(check_yd_module(adjoint_module(d, g)).ok());
}

TEST_CASE("crossed-module round trips through the point-indexed form") {
  const DrinfeldDouble d =
      build_double(demo_hopf("kc2", "c2", Q), DoubleForm::Koppinen);
  const YDModule m = adjoint_module(d, 1);
  CHECK(same_yd_module(doihopf_as_yd(d.h, yd_as_doihopf(m)), m));
  CHECK(same_yd_module(graded_to_yd(d.h, yd_to_graded(m)), m));

  const FiniteGroup grp{d.h.grading, d.h.inv};
  std::vector<int> points;
  for (int l = 0; l < 2; ++l) points.push_back(l * 2 + grp.conj(1, l));
  const GradedModule rm =
      restrict_module(regular_graded_module(d.alg.core), points);
  CHECK(same_graded_module(yd_to_graded(graded_to_yd(d.h, rm)), rm));
}

TEST_CASE("the braiding and its inverse cancel on every basis tensor") {
  const DrinfeldDouble d =
      build_double(demo_hopf("kc2", "c2", Q), DoubleForm::Koppinen);
  const YDModule u = yd_unit(d.h);
  const YDModule me = adjoint_module(d, 0);
  const YDModule mt = adjoint_module(d, 1);
  for (const auto& [a, b] : std::vector<std::pair<const YDModule*, const YDModule*>>{
           {&me, &mt}, {&mt, &mt}, {&mt, &me}, {&u, &mt}, {&mt, &u}}) {
    const ValidationReport rep = check_yd_braiding(*a, *b, yd_braiding(*a, *b));
    CHECK_MESSAGE(rep.ok(), rep.summary());
  }
}

TEST_CASE("braiding cancellation over a nonabelian grading") {
  const DrinfeldDouble d =
      build_double(demo_hopf("trivial", "s3", Q), DoubleForm::Koppinen);
  const YDModule a = adjoint_module(d, 1);  // a transposition
  const YDModule b = adjoint_module(d, 4);  // a three-cycle
  CHECK(check_yd_braiding(a, b, yd_braiding(a, b)).ok());
  CHECK(check_yd_braiding(b, a, yd_braiding(b, a)).ok());
}

TEST_CASE("the element-induced braiding agrees with the crossed-module one") {
  const DrinfeldDouble d =
      build_double(demo_hopf("kc2", "c2", Q), DoubleForm::Koppinen);
  const YDModule me = adjoint_module(d, 0);
  const YDModule mt = adjoint_module(d, 1);
  for (const auto& [a, b] : std::vector<std::pair<const YDModule*, const YDModule*>>{
           {&me, &mt}, {&mt, &mt}, {&mt, &me}}) {
    const GradedModule ga = yd_to_graded(*a), gb = yd_to_graded(*b);
    const Braiding from_elems = braiding_from_r(d.alg, ga, gb);
    const Braiding from_structure = yd_braiding(*a, *b);
    REQUIRE(from_elems.fwd.size() == from_structure.fwd.size());
    for (const auto& [key, f] : from_structure.fwd)
      CHECK(from_elems.fwd.at(key) == f);
    for (const auto& [key, f] : from_structure.inv)
      CHECK(from_elems.inv.at(key) == f);
    CHECK(check_graded_braiding(ga, gb, from_elems).ok());
  }
}

TEST_CASE("the braiding elements are recovered from the regular braiding") {
  for (const auto& [family, group] :
       std::vector<std::pair<std::string, std::string>>{{"kc2", "c2"},
                                                        {"trivial", "s3"},
                                                        {"sweedler4", "e"}}) {
    const DrinfeldDouble d =
        build_double(demo_hopf(family, group, Q), DoubleForm::Koppinen);
    const GradedModule rm = regular_graded_module(d.alg.core);
    const Braiding b = braiding_from_r(d.alg, rm, rm);
    const auto [r, q] = extract_rq_from_braiding(d.alg.core, b);
    CHECK(r == d.alg.rmat);
    CHECK(q == d.alg.qmat);
  }
}

TEST_CASE("tensor products of crossed modules are crossed modules") {
  const DrinfeldDouble d =
      build_double(demo_hopf("kc2", "c2", Q), DoubleForm::Koppinen);
  const YDModule me = adjoint_module(d, 0);
  const YDModule mt = adjoint_module(d, 1);
  const YDModule t = yd_tensor(me, mt);
  CHECK(t.comp.size() == 4);
  CHECK(t.at(0).dim() == 16);
  CHECK(check_yd_module(t).ok());
  CHECK(check_yd_module(yd_tensor(mt, yd_unit(d.h))).ok());
}

TEST_CASE("tensoring with the unit object changes nothing but labels") {
  const DrinfeldDouble d =
      build_double(demo_hopf("kc2", "c2", Q), DoubleForm::Koppinen);
  const YDModule mt = adjoint_module(d, 1);
  check_same_tensors(yd_tensor(mt, yd_unit(d.h)), mt);
  check_same_tensors(yd_tensor(yd_unit(d.h), mt), mt);
}

TEST_CASE("the tensor product reassociates on the nose") {
  const DrinfeldDouble d =
      build_double(demo_hopf("trivial", "s3", Q), DoubleForm::Koppinen);
  const YDModule a = adjoint_module(d, 1);
  const YDModule b = adjoint_module(d, 4);
  const YDModule c = adjoint_module(d, 0);
  check_same_tensors(yd_tensor(yd_tensor(a, b), c),
                     yd_tensor(a, yd_tensor(b, c)));
}

TEST_CASE("the module functor carries tensor products to tensor products") {
  const DrinfeldDouble d =
      build_double(demo_hopf("kc2", "c2", Q), DoubleForm::Koppinen);
  const YDModule u = yd_unit(d.h);
  const YDModule me = adjoint_module(d, 0);
  const YDModule mt = adjoint_module(d, 1);
  for (const auto& [a, b] : std::vector<std::pair<const YDModule*, const YDModule*>>{
           {&me, &mt}, {&mt, &mt}, {&u, &mt}, {&mt, &u}}) {
    const GradedModule lhs = yd_to_graded(yd_tensor(*a, *b));
    const GradedModule rhs =
        graded_module_tensor(d.alg, yd_to_graded(*a), yd_to_graded(*b));
    CHECK(same_graded_module(lhs, rhs));
    CHECK(check_graded_module(rhs).ok());
  }
  CHECK(check_graded_module(graded_unit_module(d.alg)).ok());
}

TEST_CASE("corrupted modules and braidings are caught") {
  const DrinfeldDouble d =
      build_double(demo_hopf("kc2", "c2", Q), DoubleForm::Koppinen);
  YDModule m = adjoint_module(d, 1);
  const YDModule n = adjoint_module(d, 0);

  Braiding b = yd_braiding(m, n);
  b.fwd.at({0, 0}).entries.clear();
  CHECK(has_failure(check_yd_braiding(m, n, b), "braiding."));

  m.action[0].entries[{0, 1, 2}] += Q.one();
  const ValidationReport rep = check_yd_module(m);
  CHECK(!rep.ok());
  CHECK(has_failure(rep, "yd."));
}
