#include "hgc/verify.hpp"

#include <algorithm>
#include <functional>
#include <utility>

#include "hgc/graded.hpp"

namespace hgc {
namespace {

/// Runs a checker and folds any structural Error it throws into the report
/// as a failed check, so a corrupted input still produces a full report.
void guarded(ValidationReport& rep, const std::string& id,
             const std::function<ValidationReport()>& body) {
  try {
    rep.merge(body());
  } catch (const Error& e) {
    rep.count(id);
    rep.fail(id, e.what(), "", "");
  }
}

ValidationReport suite_bialgebra(const DrinfeldDouble& d) {
  ValidationReport rep;
  rep.expect_true("bialgebra.sections", "comultiplication and counit",
                  !d.alg.comult.empty() && !d.alg.counit.empty(),
                  "MissingComultiplication");
  if (!rep.ok()) return rep;
  guarded(rep, "bialgebra.integrity",
          [&] { return check_graded_bialgebra(d.alg); });
  return rep;
}

ValidationReport suite_hopf(const DrinfeldDouble& d) {
  ValidationReport rep;
  rep.expect_true("hopf.sections", "antipode and twisted antipode",
                  d.alg.has_antipodes(), "MissingAntipode");
  if (!rep.ok()) return rep;
  guarded(rep, "hopf.integrity", [&] { return check_graded_hopf(d.alg); });
  return rep;
}

ValidationReport suite_qt(const DrinfeldDouble& d) {
  ValidationReport rep;
  rep.expect_true("qt.sections", "braiding element families", d.alg.has_rq(),
                  "MissingBraiding");
  if (!rep.ok()) return rep;
  guarded(rep, "qt.integrity",
          [&] { return check_quasitriangular(d.alg); });
  return rep;
}

ValidationReport suite_modules(const DrinfeldDouble& d) {
  ValidationReport rep;
  guarded(rep, "modules.integrity", [&] {
    ValidationReport r;
    r.merge(check_graded_module(regular_graded_module(d.alg.core)));

    // Reading graded modules back as crossed modules round-trips through
    // the map presentation, so build the scaffolding over that core.
    const GradedAlgebra ydcore = d.form == DoubleForm::Koppinen
                                     ? d.alg.core
                                     : koppinen_smash(double_datum(d.h));
    const GradedModule reg = regular_graded_module(ydcore);

    const FiniteGroup grp{d.h.grading, d.h.inv};
    const int n = static_cast<int>(grp.size());
    std::vector<YDModule> orbits;
    orbits.reserve(static_cast<std::size_t>(n));
    for (int g = 0; g < n; ++g) {
      std::vector<int> points;
      points.reserve(static_cast<std::size_t>(n));
      for (int l = 0; l < n; ++l) points.push_back(l * n + grp.conj(g, l));
      std::sort(points.begin(), points.end());
      points.erase(std::unique(points.begin(), points.end()), points.end());
      const GradedModule sub = restrict_module(reg, points);
      YDModule yd = graded_to_yd(d.h, sub);
      r.merge(check_yd_module(yd));
      r.count("modules.round_trip");
      if (!same_graded_module(yd_to_graded(yd), sub))
        r.fail("modules.round_trip",
               "conjugation orbit of " + grp.monoid.elements[g], "", "");
      orbits.push_back(std::move(yd));
    }

    const YDModule& a = orbits.front();
    const YDModule& b = orbits[n > 1 ? 1 : 0];
    const Braiding byd = yd_braiding(a, b);
    r.merge(check_yd_braiding(a, b, byd));

    if (d.alg.has_rq()) {
      const Braiding bfr =
          braiding_from_r(d.alg, yd_to_graded(a), yd_to_graded(b));
      r.count("modules.braiding_agreement");
      if (!(bfr.fwd == byd.fwd && bfr.inv == byd.inv))
        r.fail("modules.braiding_agreement",
               "element-induced vs crossed-module braiding on orbit pair", "",
               "");

      const Braiding on_regular = braiding_from_r(d.alg, reg, reg);
      const auto extracted = extract_rq_from_braiding(ydcore, on_regular);
      r.count("modules.extraction");
      if (!(extracted.first == d.alg.rmat && extracted.second == d.alg.qmat))
        r.fail("modules.extraction",
               "families read back from the regular braiding", "", "");
    }
    return r;
  });
  return rep;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"bialgebra", "hopf", "qt", "modules", "all"};
}

ValidationReport run_suite(const DrinfeldDouble& d, const std::string& suite) {
  if (suite == "bialgebra") return suite_bialgebra(d);
  if (suite == "hopf") return suite_hopf(d);
  if (suite == "qt") return suite_qt(d);
  if (suite == "modules") return suite_modules(d);
  if (suite == "all") {
    ValidationReport rep;
    guarded(rep, "family.integrity", [&] { return check_hopf(d.h); });
    rep.merge(suite_bialgebra(d));
    rep.merge(suite_hopf(d));
    rep.merge(suite_qt(d));
    rep.merge(suite_modules(d));
    return rep;
  }
  throw Error("UnsupportedSuite", "unknown suite '" + suite +
                                      "' (expected bialgebra, hopf, qt, "
                                      "modules or all)");
}

}  // namespace hgc
