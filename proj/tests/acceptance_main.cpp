// Acceptance gate: one timed pass/fail line per criterion, exit 0 only when
// every criterion holds.  All comparisons are exact; the budgets are wall
// clock seconds.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "classical_double_oracle.hpp"
#include "hgc/demo.hpp"
#include "hgc/doihopf.hpp"
#include "hgc/double.hpp"
#include "hgc/graded.hpp"
#include "hgc/json_io.hpp"
#include "hgc/verify.hpp"

namespace {

using namespace hgc;

const Field Q = Field::rationals();

Vec unit_vec(std::size_t n, std::size_t i) { return basis_vec(Q, n, i); }

Vec col_of(const oracle::Mat& m, std::size_t c) {
  Vec out;
  out.reserve(m.size());
  for (const auto& row : m) out.push_back(row[c]);
  return out;
}

Vec flat_slice(const oracle::Mat& m) {
  Vec out;
  for (const auto& row : m)
    for (const Scalar& s : row) out.push_back(s);
  return out;
}

/// Every structure constant of the one-point double against the dense
/// reference construction, in both presentations.
bool matches_reference(const std::string& family, const oracle::DenseHopf& ref,
                       std::string& detail) {
  const oracle::DenseDouble cd = oracle::classical_double(Q, ref);
  const HopfGC h = demo_hopf(family, "e", Q);
  for (const DoubleForm form : {DoubleForm::Smash, DoubleForm::Koppinen}) {
    const DrinfeldDouble d = build_double(h, form);
    const GradedAlgebra& core = d.alg.core;
    const std::size_t dd = cd.dim;
    if (core.comp.size() != 1 || core.at(0, 0).dim() != dd) {
      detail = family + ": unexpected component layout";
      return false;
    }
    const MultTensor& m = core.mul(0, 0, 0);
    for (std::size_t i = 0; i < dd; ++i)
      for (std::size_t j = 0; j < dd; ++j)
        if (m.apply(Q, unit_vec(dd, i), unit_vec(dd, j)) != cd.mult[i][j]) {
          detail = family + ": product constant differs at (" +
                   std::to_string(i) + "," + std::to_string(j) + ")";
          return false;
        }
    if (core.unit[0] != cd.unit) {
      detail = family + ": unit differs";
      return false;
    }
    const CoMultTensor& dl = d.alg.delta(0, 0, 0);
    for (std::size_t k = 0; k < dd; ++k)
      if (dl.apply_flat(Q, unit_vec(dd, k)) != flat_slice(cd.comult[k])) {
        detail = family + ": comultiplication differs at " + std::to_string(k);
        return false;
      }
    if (d.alg.counit[0] != cd.counit) {
      detail = family + ": counit differs";
      return false;
    }
    const LinMap& s = d.alg.s_at(0, 0);
    const LinMap& st = d.alg.s_tw_at(0, 0);
    for (std::size_t c = 0; c < dd; ++c) {
      if (s.apply(Q, unit_vec(dd, c)) != col_of(cd.antipode, c) ||
          st.apply(Q, unit_vec(dd, c)) != col_of(cd.antipode_tw, c)) {
        detail = family + ": antipode differs at column " + std::to_string(c);
        return false;
      }
    }
    if (d.alg.r_at(0, 0).coeff != cd.rmat || d.alg.q_at(0, 0).coeff != cd.qmat) {
      detail = family + ": braiding elements differ";
      return false;
    }
  }
  return true;
}

/// Adjoint-type crossed module: the restriction of the regular module to
/// the conjugation orbit of group element g, read back as a crossed module.
YDModule adjoint_module(const DrinfeldDouble& d, int g) {
  const FiniteGroup grp{d.h.grading, d.h.inv};
  const int n = static_cast<int>(grp.size());
  std::vector<int> points;
  for (int l = 0; l < n; ++l) points.push_back(l * n + grp.conj(g, l));
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return graded_to_yd(d.h,
                      restrict_module(regular_graded_module(d.alg.core), points));
}

/// Collects pointers to every scalar string in the numeric sections of a
/// document, skipping labels, basis names and carrier names.
void collect_scalars(Json& node, bool numeric, std::vector<Json*>& out) {
  static const std::set<std::string> numeric_keys = {
      "mult", "comult",           "counit", "antipode",
      "unit", "twisted_antipode", "coeff",  "action"};
  static const std::set<std::string> text_keys = {
      "basis", "label", "elements", "carrier", "kind", "form", "field"};
  if (node.is_object()) {
    for (auto& [key, value] : node.items()) {
      bool flag = numeric;
      if (numeric_keys.count(key) != 0) flag = true;
      if (text_keys.count(key) != 0) flag = false;
      collect_scalars(value, flag, out);
    }
  } else if (node.is_array()) {
    for (auto& value : node) collect_scalars(value, numeric, out);
  } else if (node.is_string() && numeric) {
    out.push_back(&node);
  }
}

bool same_report(const ValidationReport& a, const ValidationReport& b) {
  const auto& sa = a.stats();
  const auto& sb = b.stats();
  if (sa.size() != sb.size()) return false;
  for (auto ia = sa.begin(), ib = sb.begin(); ia != sa.end(); ++ia, ++ib)
    if (ia->first != ib->first || ia->second.instances != ib->second.instances ||
        ia->second.failures != ib->second.failures)
      return false;
  const auto& fa = a.failures();
  const auto& fb = b.failures();
  if (fa.size() != fb.size()) return false;
  for (std::size_t i = 0; i < fa.size(); ++i)
    if (fa[i].check != fb[i].check || fa[i].witness != fb[i].witness ||
        fa[i].lhs != fb[i].lhs || fa[i].rhs != fb[i].rhs)
      return false;
  return true;
}

// -------------------------------------------------------------------------

bool criterion_axiom_suites(std::string& detail) {
  const std::vector<std::pair<std::string, std::string>> demos = {
      {"trivial", "c2"}, {"trivial", "c3"}, {"trivial", "s3"},
      {"kc2", "c2"},     {"sweedler4", "e"}};
  for (const auto& [family, group] : demos) {
    const HopfGC h = demo_hopf(family, group, Q);
    const DoiHopfDatumTk d = datum_hhh(h);
    ValidationReport rep = check_hopf(h);
    rep.merge(check_doihopf_datum(d));
    rep.merge(check_doihopf_module(d, hopf_module_over(d)));
    if (!rep.ok()) {
      detail = family + " over " + group + ": " + rep.summary(1);
      return false;
    }
  }
  return true;
}

bool criterion_two_presentations(std::string& detail) {
  const HopfGC h = demo_hopf("kc2", "c2", Q);
  const AlphaIso ai = alpha_iso(double_datum(h));
  ValidationReport rep = check_graded_algebra(ai.smash);
  rep.merge(check_graded_algebra(ai.koppinen));
  rep.merge(check_alpha(ai));
  if (!rep.ok()) detail = rep.summary(1);
  return rep.ok();
}

bool criterion_functor_round_trips(std::string& detail) {
  const HopfGC h = demo_hopf("kc2", "c2", Q);
  const DoiHopfDatumTk d = datum_hhh(h);
  const DoiHopfModule m = hopf_module_over(d);
  if (!same_doihopf_module(inverse_functor(d, functor_tz(d, m)), m)) {
    detail = "reading the image of the standard module back changed it";
    return false;
  }
  const GradedModule rm = regular_graded_module(koppinen_smash(d));
  if (!same_graded_module(functor_tz(d, inverse_functor(d, rm)), rm)) {
    detail = "rebuilding the regular graded module changed it";
    return false;
  }
  return true;
}

bool criterion_classical_oracle(std::string& detail) {
  return matches_reference("kc2", oracle::dense_kc2(Q), detail) &&
         matches_reference("sweedler4", oracle::dense_sweedler4(Q), detail);
}

bool criterion_double_laws(std::string& detail) {
  const HopfGC h = demo_hopf("kc2", "c2", Q);
  for (const DoubleForm form : {DoubleForm::Koppinen, DoubleForm::Smash}) {
    const DrinfeldDouble d = build_double(h, form);
    ValidationReport rep = check_graded_bialgebra(d.alg);
    rep.merge(check_graded_hopf(d.alg));
    rep.merge(check_quasitriangular(d.alg));
    if (!rep.ok()) {
      detail = rep.summary(1);
      return false;
    }
  }
  return true;
}

bool criterion_braiding(std::string& detail) {
  const DrinfeldDouble d = build_double(demo_hopf("kc2", "c2", Q),
                                        DoubleForm::Koppinen);
  const YDModule me = adjoint_module(d, 0);
  const YDModule mt = adjoint_module(d, 1);
  const std::vector<std::pair<const YDModule*, const YDModule*>> pairs = {
      {&mt, &me}, {&me, &mt}, {&mt, &mt}};
  for (const auto& [a, b] : pairs) {
    const Braiding bs = yd_braiding(*a, *b);
    if (!check_yd_braiding(*a, *b, bs).ok()) {
      detail = "a braiding composite failed to cancel";
      return false;
    }
    const Braiding be = braiding_from_r(d.alg, yd_to_graded(*a), yd_to_graded(*b));
    if (!(be.fwd == bs.fwd && be.inv == bs.inv)) {
      detail = "element-induced and structural braidings disagree";
      return false;
    }
  }
  const GradedModule reg = regular_graded_module(d.alg.core);
  const auto extracted =
      extract_rq_from_braiding(d.alg.core, braiding_from_r(d.alg, reg, reg));
  if (!(extracted.first == d.alg.rmat && extracted.second == d.alg.qmat)) {
    detail = "element families were not recovered from the regular braiding";
    return false;
  }
  return true;
}

bool criterion_monoidal(std::string& detail) {
  const DrinfeldDouble d = build_double(demo_hopf("kc2", "c2", Q),
                                        DoubleForm::Koppinen);
  const YDModule me = adjoint_module(d, 0);
  const YDModule mt = adjoint_module(d, 1);
  const YDModule u = yd_unit(d.h);
  const std::vector<std::pair<const YDModule*, const YDModule*>> pairs = {
      {&me, &mt}, {&mt, &mt}, {&mt, &me}, {&u, &mt}};
  for (const auto& [a, b] : pairs) {
    const GradedModule lhs = yd_to_graded(yd_tensor(*a, *b));
    const GradedModule rhs =
        graded_module_tensor(d.alg, yd_to_graded(*a), yd_to_graded(*b));
    if (!same_graded_module(lhs, rhs)) {
      detail = "tensor image differs from the tensor of images";
      return false;
    }
  }
  return true;
}

bool criterion_mutation_sensitivity(std::string& detail) {
  const DrinfeldDouble d = build_double(demo_hopf("kc2", "c2", Q),
                                        DoubleForm::Koppinen);
  const Json pristine = emit_double(d);
  {
    std::vector<Json*> probe;
    Json copy = pristine;
    collect_scalars(copy, false, probe);
    if (probe.size() < 100) {
      detail = "too few scalar positions found (" + std::to_string(probe.size()) + ")";
      return false;
    }
  }
  for (unsigned seed = 0; seed < 20; ++seed) {
    Json doc = pristine;
    std::vector<Json*> leaves;
    collect_scalars(doc, false, leaves);
    std::mt19937 rng(seed);
    Json& leaf = *leaves[rng() % leaves.size()];
    leaf = leaf.get<std::string>() == "1" ? "2" : "1";
    const DrinfeldDouble corrupted = parse_double(doc);
    const ValidationReport rep = run_suite(corrupted, "all");
    bool witnessed = false;
    for (const CheckFailure& f : rep.failures())
      if (!f.witness.empty()) witnessed = true;
    if (rep.ok() || !witnessed) {
      detail = "seed " + std::to_string(seed) +
               (rep.ok() ? ": corruption slipped through every check"
                         : ": failures carry no witness");
      return false;
    }
  }
  return true;
}

bool criterion_determinism(std::string& detail) {
  const auto stable = [](const Json& doc,
                         const std::function<Json(const Json&)>& reparse) {
    const std::string once = to_bytes(doc);
    return once == to_bytes(reparse(from_bytes(once)));
  };
  const HopfGC kc2 = demo_hopf("kc2", "c2", Q);
  const HopfGC triv = demo_hopf("trivial", "s3", Q);
  const HopfGC sw5 = demo_hopf("sweedler4", "e", Field::prime(5));
  const auto hopf_again = [](const Json& j) { return emit_hopf(parse_hopf(j)); };
  for (const HopfGC* h : {&kc2, &triv, &sw5})
    if (!stable(emit_hopf(*h), hopf_again)) {
      detail = "family file changed across a parse/emit cycle";
      return false;
    }
  const DoiHopfDatumTk dd = double_datum(kc2);
  if (!stable(emit_doihopf_datum(dd), [](const Json& j) {
        return emit_doihopf_datum(parse_doihopf_datum(j));
      })) {
    detail = "datum file changed across a parse/emit cycle";
    return false;
  }
  const GradedAlgebra kop = koppinen_smash(dd);
  if (!stable(emit_graded_algebra(kop), [](const Json& j) {
        return emit_graded_algebra(parse_graded_algebra(j));
      })) {
    detail = "algebra file changed across a parse/emit cycle";
    return false;
  }
  if (!stable(emit_graded_module(regular_graded_module(kop)), [](const Json& j) {
        return emit_graded_module(parse_graded_module(j));
      })) {
    detail = "module file changed across a parse/emit cycle";
    return false;
  }
  const DrinfeldDouble dk = build_double(kc2, DoubleForm::Koppinen);
  const DrinfeldDouble dsm = build_double(kc2, DoubleForm::Smash);
  const auto double_again = [](const Json& j) { return emit_double(parse_double(j)); };
  for (const DrinfeldDouble* d : {&dk, &dsm})
    if (!stable(emit_double(*d), double_again)) {
      detail = "double file changed across a parse/emit cycle";
      return false;
    }
  if (!stable(emit_yd_module(adjoint_module(dk, 1)), [&](const Json& j) {
        return emit_yd_module(parse_yd_module(j));
      })) {
    detail = "crossed-module file changed across a parse/emit cycle";
    return false;
  }

  // Identical runs give identical reports, on clean and on corrupted input.
  if (!same_report(run_suite(dk, "all"), run_suite(dk, "all"))) {
    detail = "two clean verification runs differ";
    return false;
  }
  Json doc = emit_double(dk);
  std::vector<Json*> leaves;
  collect_scalars(doc, false, leaves);
  std::mt19937 rng(0);
  Json& leaf = *leaves[rng() % leaves.size()];
  leaf = leaf.get<std::string>() == "1" ? "2" : "1";
  const DrinfeldDouble corrupted = parse_double(doc);
  if (!same_report(run_suite(corrupted, "all"), run_suite(corrupted, "all"))) {
    detail = "two verification runs over the same corrupted file differ";
    return false;
  }
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* label;
    double budget_s;
    bool (*body)(std::string&);
  };
  const std::vector<Criterion> criteria = {
      {1, "axiom suites on every demo input", 5.0, criterion_axiom_suites},
      {2, "both product presentations and their comparison isomorphism", 1.0,
       criterion_two_presentations},
      {3, "module functor round trips", 1.0, criterion_functor_round_trips},
      {4, "one-point double equals the dense reference construction", 5.0,
       criterion_classical_oracle},
      {5, "bialgebra, antipode and braiding-element laws on the 16-dim double",
       10.0, criterion_double_laws},
      {6, "braiding cancellation, element agreement and readback", 5.0,
       criterion_braiding},
      {7, "tensor products commute with the module functor", 5.0,
       criterion_monoidal},
      {8, "20 seeded single-constant corruptions each trip a witnessed check",
       30.0, criterion_mutation_sensitivity},
      {9, "byte-stable files and identical repeated reports", 30.0,
       criterion_determinism},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    std::string detail;
    bool ok = false;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      ok = c.body(detail);
    } catch (const Error& e) {
      ok = false;
      detail = e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    const bool in_budget = secs < c.budget_s;
    if (ok && in_budget) {
      std::printf("criterion %d: PASS  (%.2fs)  %s\n", c.id, secs, c.label);
    } else {
      ++failed;
      std::printf("criterion %d: FAIL  (%.2fs)  %s%s%s%s\n", c.id, secs, c.label,
                  detail.empty() ? "" : " — ", detail.c_str(),
                  in_budget ? "" : " [over budget]");
    }
  }
  if (failed == 0)
    std::printf("acceptance: all %zu criteria hold\n", criteria.size());
  else
    std::printf("acceptance: %d of %zu criteria FAILED\n", failed,
                criteria.size());
  return failed == 0 ? 0 : 1;
}
