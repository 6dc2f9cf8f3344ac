#include "hgc/graded.hpp"

#include <string>
#include <utility>

#include "hgc/accum.hpp"

namespace hgc {

namespace {

std::string lbl(const std::vector<std::string>& names, int i) {
  return names.at(static_cast<std::size_t>(i));
}

/// Dense result of a mult tensor on two basis vectors.
Vec mul_bb(const Field& f, const MultTensor& m, std::size_t i, std::size_t j) {
  Vec out = zero_vec(f, m.w.dim());
  for (const Term& t : m.on_basis(i, j)) out[static_cast<std::size_t>(t.i)] += t.c;
  return out;
}

/// Block layout of the one-index collapse over the structure monoid:
/// degree-l part is the direct sum of the components (l, x) over all x.
struct Collapse {
  std::vector<std::vector<std::size_t>> off;  // off[l][x]
  std::vector<std::size_t> dim;               // per l
};

Collapse collapse_of(const GradedAlgebra& a) {
  Collapse c;
  c.off.assign(a.nl(), std::vector<std::size_t>(a.nx(), 0));
  c.dim.assign(a.nl(), 0);
  for (std::size_t l = 0; l < a.nl(); ++l) {
    std::size_t off = 0;
    for (std::size_t x = 0; x < a.nx(); ++x) {
      c.off[l][x] = off;
      off += a.at(static_cast<int>(l), static_cast<int>(x)).dim();
    }
    c.dim[l] = off;
  }
  return c;
}

/// Collapse-level product of u (over degree l) and v (over degree l2),
/// treating absent component tables and non-composable block pairs as zero.
Vec collapse_mul(const GradedAlgebra& a, const Collapse& c, int l, const Vec& u,
                 int l2, const Vec& v) {
  const Field& f = a.field;
  const int ll2 = a.datum.lambda.op(l, l2);
  Vec out = zero_vec(f, c.dim[static_cast<std::size_t>(ll2)]);
  for (int x = 0; x < static_cast<int>(a.nx()); ++x) {
    const int x2 = a.datum.x.act(x, a.datum.gamma.at(static_cast<std::size_t>(l2)));
    auto it = a.mult.find({l, x, l2});
    if (it == a.mult.end()) continue;
    const MultTensor& t = it->second;
    const std::size_t ou =
        c.off[static_cast<std::size_t>(l)][static_cast<std::size_t>(x)];
    const std::size_t ov =
        c.off[static_cast<std::size_t>(l2)][static_cast<std::size_t>(x2)];
    const std::size_t ow =
        c.off[static_cast<std::size_t>(ll2)][static_cast<std::size_t>(x2)];
    for (std::size_t i = 0; i < t.u.dim(); ++i) {
      if (u[ou + i].is_zero()) continue;
      for (std::size_t j = 0; j < t.v.dim(); ++j) {
        if (v[ov + j].is_zero()) continue;
        for (const Term& tm : t.on_basis(i, j))
          out[ow + static_cast<std::size_t>(tm.i)] +=
              tm.c * u[ou + i] * v[ov + j];
      }
    }
  }
  return out;
}

/// Action of a degree-l collapse element on a module vector at point y,
/// treating blocks away from the fibre point and absent tables as zero.
Vec collapse_act(const GradedModule& m, const Collapse& c, int y, const Vec& mv,
                 int l, const Vec& av) {
  const Field& f = m.alg.field;
  const int yl = m.y.act(y, l);
  const int x = m.y.beta.at(static_cast<std::size_t>(yl));
  Vec out = zero_vec(f, m.at(yl).dim());
  auto it = m.action.find({y, l});
  if (it == m.action.end()) return out;
  const MultTensor& t = it->second;
  const std::size_t oa =
      c.off[static_cast<std::size_t>(l)][static_cast<std::size_t>(x)];
  for (std::size_t i = 0; i < t.u.dim(); ++i) {
    if (mv[i].is_zero()) continue;
    for (std::size_t j = 0; j < t.v.dim(); ++j) {
      if (av[oa + j].is_zero()) continue;
      for (const Term& tm : t.on_basis(i, j))
        out[static_cast<std::size_t>(tm.i)] += tm.c * mv[i] * av[oa + j];
    }
  }
  return out;
}

}  // namespace

const Space& GradedAlgebra::at(int l, int x) const {
  return comp.at(static_cast<std::size_t>(cidx(l, x)));
}

const MultTensor& GradedAlgebra::mul(int l, int x, int l2) const {
  auto it = mult.find({l, x, l2});
  if (it == mult.end())
    throw Error("MissingProduct",
                "no graded product at (" + lbl(datum.lambda.elements, l) + "," +
                    lbl(datum.x.carrier, x) + ") times degree " +
                    lbl(datum.lambda.elements, l2));
  return it->second;
}

const MultTensor& GradedModule::act(int yi, int l) const {
  auto it = action.find({yi, l});
  if (it == action.end())
    throw Error("MissingProduct",
                "no graded action at point " + lbl(y.carrier, yi) +
                    ", degree " + lbl(alg.datum.lambda.elements, l));
  return it->second;
}

ValidationReport check_graded_algebra(const GradedAlgebra& a) {
  ValidationReport r;
  r.merge(validate_discrete(a.datum));
  if (!r.ok()) return r;
  const Field& f = a.field;
  const int nl = static_cast<int>(a.nl());
  const int nx = static_cast<int>(a.nx());
  const int e = a.datum.lambda.identity;
  const auto& lel = a.datum.lambda.elements;
  const auto& xel = a.datum.x.carrier;
  auto xg = [&](int x, int l) {
    return a.datum.x.act(x, a.datum.gamma.at(static_cast<std::size_t>(l)));
  };

  r.count("graded_algebra.shape");
  bool shape = static_cast<int>(a.comp.size()) == nl * nx &&
               static_cast<int>(a.unit.size()) == nx;
  std::string why = shape ? "" : "component/unit table sizes";
  for (int x = 0; x < nx && shape; ++x)
    if (a.unit[static_cast<std::size_t>(x)].size() != a.at(e, x).dim()) {
      shape = false;
      why = "unit coordinate length at " + lbl(xel, x);
    }
  if (shape && a.mult.size() != static_cast<std::size_t>(nl * nx * nl)) {
    shape = false;
    why = "expected one product table per composable key";
  }
  for (const auto& [key, t] : a.mult) {
    if (!shape) break;
    const auto& [l, x, l2] = key;
    if (l < 0 || l >= nl || x < 0 || x >= nx || l2 < 0 || l2 >= nl) {
      shape = false;
      why = "product key out of range";
      break;
    }
    const int x2 = xg(x, l2);
    if (t.u != a.at(l, x) || t.v != a.at(l2, x2) ||
        t.w != a.at(a.datum.lambda.op(l, l2), x2)) {
      shape = false;
      why = "product spaces at (" + lbl(lel, l) + "," + lbl(xel, x) +
            ") times degree " + lbl(lel, l2);
    }
  }
  if (!shape) {
    r.fail("graded_algebra.shape", why, "", "");
    return r;
  }

  for (int l1 = 0; l1 < nl; ++l1)
    for (int x = 0; x < nx; ++x)
      for (int l2 = 0; l2 < nl; ++l2)
        for (int l3 = 0; l3 < nl; ++l3) {
          const int x2 = xg(x, l2);
          const int x3 = xg(x2, l3);
          const int l12 = a.datum.lambda.op(l1, l2);
          const int l23 = a.datum.lambda.op(l2, l3);
          const int l123 = a.datum.lambda.op(l12, l3);
          const MultTensor& m12 = a.mul(l1, x, l2);
          const MultTensor& m12_3 = a.mul(l12, x2, l3);
          const MultTensor& m23 = a.mul(l2, x2, l3);
          const MultTensor& m1_23 = a.mul(l1, x, l23);
          const std::size_t du = a.at(l1, x).dim();
          const std::size_t dv = a.at(l2, x2).dim();
          const std::size_t dw = a.at(l3, x3).dim();
          const std::size_t dt = a.at(l123, x3).dim();
          for (std::size_t i = 0; i < du; ++i)
            for (std::size_t j = 0; j < dv; ++j)
              for (std::size_t k = 0; k < dw; ++k) {
                Vec lhs = zero_vec(f, dt);
                for (const Term& t1 : m12.on_basis(i, j))
                  for (const Term& t2 :
                       m12_3.on_basis(static_cast<std::size_t>(t1.i), k))
                    lhs[static_cast<std::size_t>(t2.i)] += t1.c * t2.c;
                Vec rhs = zero_vec(f, dt);
                for (const Term& t1 : m23.on_basis(j, k))
                  for (const Term& t2 :
                       m1_23.on_basis(i, static_cast<std::size_t>(t1.i)))
                    rhs[static_cast<std::size_t>(t2.i)] += t1.c * t2.c;
                r.expect_eq("graded_algebra.assoc",
                            "(" + lbl(lel, l1) + "|" + lbl(xel, x) + ")(" +
                                lbl(lel, l2) + ")(" + lbl(lel, l3) + ") basis " +
                                std::to_string(i) + "," + std::to_string(j) +
                                "," + std::to_string(k),
                            lhs, rhs);
              }
        }

  for (int l = 0; l < nl; ++l)
    for (int x = 0; x < nx; ++x) {
      const MultTensor& mr = a.mul(l, x, e);
      const std::size_t d = a.at(l, x).dim();
      for (std::size_t i = 0; i < d; ++i)
        r.expect_eq("graded_algebra.unit_right",
                    "(" + lbl(lel, l) + "|" + lbl(xel, x) + ") basis " +
                        std::to_string(i),
                    mr.apply(f, basis_vec(f, d, i), a.unit[static_cast<std::size_t>(x)]),
                    basis_vec(f, d, i));
      const int xl = xg(x, l);
      const MultTensor& ml = a.mul(e, x, l);
      const std::size_t db = a.at(l, xl).dim();
      for (std::size_t i = 0; i < db; ++i)
        r.expect_eq("graded_algebra.unit_left",
                    "1_" + lbl(xel, x) + " on (" + lbl(lel, l) + "|" +
                        lbl(xel, xl) + ") basis " + std::to_string(i),
                    ml.apply(f, a.unit[static_cast<std::size_t>(x)],
                             basis_vec(f, db, i)),
                    basis_vec(f, db, i));
    }
  return r;
}

LocalUnitsReport local_units_report(const GradedAlgebra& a) {
  if (!try_group(a.datum.acting) && !try_group(a.datum.lambda))
    throw Error("NotAGroup",
                "local_units_report needs the acting monoid or the structure "
                "monoid to be a group");
  LocalUnitsReport out;
  ValidationReport& r = out.checks;
  r.merge(validate_discrete(a.datum));
  if (!r.ok()) return out;
  const Field& f = a.field;
  const int nl = static_cast<int>(a.nl());
  const int nx = static_cast<int>(a.nx());
  const int e = a.datum.lambda.identity;
  const auto& lel = a.datum.lambda.elements;
  const auto& xel = a.datum.x.carrier;

  bool sized = static_cast<int>(a.comp.size()) == nl * nx &&
               static_cast<int>(a.unit.size()) == nx;
  for (int x = 0; x < nx && sized; ++x)
    sized = a.unit[static_cast<std::size_t>(x)].size() == a.at(e, x).dim();
  r.expect_true("local_units.layout", "component/unit tables", sized);
  if (!sized) return out;

  const Collapse c = collapse_of(a);
  out.collapse_dims = c.dim;

  auto unit_in_collapse = [&](int x) {
    Vec v = zero_vec(f, c.dim[static_cast<std::size_t>(e)]);
    const Vec& ux = a.unit[static_cast<std::size_t>(x)];
    for (std::size_t i = 0; i < ux.size(); ++i)
      v[c.off[static_cast<std::size_t>(e)][static_cast<std::size_t>(x)] + i] =
          ux[i];
    return v;
  };
  std::vector<Vec> units;
  units.reserve(static_cast<std::size_t>(nx));
  for (int x = 0; x < nx; ++x) units.push_back(unit_in_collapse(x));

  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < nx; ++y) {
      Vec p = collapse_mul(a, c, e, units[static_cast<std::size_t>(x)], e,
                           units[static_cast<std::size_t>(y)]);
      const std::string w = "1_" + lbl(xel, x) + " 1_" + lbl(xel, y);
      if (x == y)
        r.expect_eq("local_units.idempotent", w, p,
                    units[static_cast<std::size_t>(x)]);
      else
        r.expect_eq("local_units.orthogonal", w, p,
                    zero_vec(f, c.dim[static_cast<std::size_t>(e)]));
    }

  Vec global = zero_vec(f, c.dim[static_cast<std::size_t>(e)]);
  for (int x = 0; x < nx; ++x) axpy(global, f.one(), units[static_cast<std::size_t>(x)]);

  for (int l = 0; l < nl; ++l) {
    const std::size_t d = c.dim[static_cast<std::size_t>(l)];
    for (std::size_t i = 0; i < d; ++i) {
      const Vec b = basis_vec(f, d, i);
      const std::string w = "degree " + lbl(lel, l) + " basis " + std::to_string(i);
      r.expect_eq("local_units.global_unit", "left unit on " + w,
                  collapse_mul(a, c, e, global, l, b), b);
      r.expect_eq("local_units.global_unit", "right unit on " + w,
                  collapse_mul(a, c, l, b, e, global), b);
    }
  }

  for (int l1 = 0; l1 < nl; ++l1)
    for (int l2 = 0; l2 < nl; ++l2)
      for (int l3 = 0; l3 < nl; ++l3) {
        const int l12 = a.datum.lambda.op(l1, l2);
        const int l23 = a.datum.lambda.op(l2, l3);
        for (std::size_t i = 0; i < c.dim[static_cast<std::size_t>(l1)]; ++i)
          for (std::size_t j = 0; j < c.dim[static_cast<std::size_t>(l2)]; ++j)
            for (std::size_t k = 0; k < c.dim[static_cast<std::size_t>(l3)];
                 ++k) {
              const Vec u = basis_vec(f, c.dim[static_cast<std::size_t>(l1)], i);
              const Vec v = basis_vec(f, c.dim[static_cast<std::size_t>(l2)], j);
              const Vec w = basis_vec(f, c.dim[static_cast<std::size_t>(l3)], k);
              Vec lhs = collapse_mul(a, c, l12, collapse_mul(a, c, l1, u, l2, v),
                                     l3, w);
              Vec rhs = collapse_mul(a, c, l1, u, l23,
                                     collapse_mul(a, c, l2, v, l3, w));
              r.expect_eq("local_units.collapse_assoc",
                          "(" + lbl(lel, l1) + "," + lbl(lel, l2) + "," +
                              lbl(lel, l3) + ") basis " + std::to_string(i) +
                              "," + std::to_string(j) + "," + std::to_string(k),
                          lhs, rhs);
            }
      }

  for (int l = 0; l < nl; ++l)
    for (int x = 0; x < nx; ++x) {
      const std::size_t d = a.at(l, x).dim();
      const std::size_t base =
          c.off[static_cast<std::size_t>(l)][static_cast<std::size_t>(x)];
      for (std::size_t i = 0; i < d; ++i) {
        const Vec b = basis_vec(f, c.dim[static_cast<std::size_t>(l)], base + i);
        const std::string w = "(" + lbl(lel, l) + "|" + lbl(xel, x) +
                              ") basis " + std::to_string(i);
        for (int x2 = 0; x2 < nx; ++x2) {
          Vec got = collapse_mul(a, c, l, b, e, units[static_cast<std::size_t>(x2)]);
          Vec want = (x2 == x) ? b : zero_vec(f, c.dim[static_cast<std::size_t>(l)]);
          r.expect_eq("local_units.kron_right", w + " times 1_" + lbl(xel, x2),
                      got, want);
        }
        const int gl = a.datum.gamma.at(static_cast<std::size_t>(l));
        for (int x0 = 0; x0 < nx; ++x0) {
          Vec got = collapse_mul(a, c, e, units[static_cast<std::size_t>(x0)], l, b);
          Vec want = (a.datum.x.act(x0, gl) == x)
                         ? b
                         : zero_vec(f, c.dim[static_cast<std::size_t>(l)]);
          r.expect_eq("local_units.kron_left", "1_" + lbl(xel, x0) + " times " + w,
                      got, want);
        }
      }
    }
  return out;
}

GradedAlgebra smash_product(const HopfGC& h, const LambdaGradedAlgebra& b,
                            const ComoduleAlgebra& a) {
  const Field& f = h.field;
  const FiniteGroup& lam = b.lambda;
  const int nl = static_cast<int>(lam.size());
  const int nx = static_cast<int>(a.x.size());
  const int e = lam.identity();
  const int he = h.grading.identity;
  auto gam = [&](int l) { return b.gamma.at(static_cast<std::size_t>(l)); };

  if (!b.has_action())
    throw Error("ActionAxiomFailure",
                "the graded algebra carries no action to smash with");

  // The action must split over products, with the actor comultiplied so
  // that its first leg reaches the right-hand factor.
  for (int l = 0; l < nl; ++l)
    for (int l2 = 0; l2 < nl; ++l2) {
      const int l12 = lam.op(l, l2);
      const MultTensor& mb = b.mul(l, l2);
      const std::size_t dh = h.at(h.ginv(gam(l12))).dim();
      for (std::size_t hk = 0; hk < dh; ++hk)
        for (std::size_t bi = 0; bi < b.at(l).dim(); ++bi)
          for (std::size_t bj = 0; bj < b.at(l2).dim(); ++bj) {
            Vec prod = mul_bb(f, mb, bi, bj);
            Vec lhs = b.hact[static_cast<std::size_t>(l12)].apply(
                f, basis_vec(f, dh, hk), prod);
            Vec rhs = zero_vec(f, b.at(l12).dim());
            for (const Term2& t :
                 split2(h, h.ginv(gam(l2)), h.ginv(gam(l)), static_cast<int>(hk))) {
              Vec lb = mul_bb(f, b.hact[static_cast<std::size_t>(l)],
                              static_cast<std::size_t>(t.j), bi);
              Vec rb = mul_bb(f, b.hact[static_cast<std::size_t>(l2)],
                              static_cast<std::size_t>(t.i), bj);
              axpy(rhs, t.c, mb.apply(f, lb, rb));
            }
            if (lhs != rhs)
              throw Error("ActionAxiomFailure",
                          "action does not split over the product at degrees (" +
                              lbl(lam.monoid.elements, l) + "," +
                              lbl(lam.monoid.elements, l2) + "), actor " +
                              h.at(h.ginv(gam(l12))).basis[hk] + ", factors " +
                              b.at(l).basis[bi] + ", " + b.at(l2).basis[bj]);
          }
    }
  for (std::size_t hk = 0; hk < h.at(he).dim(); ++hk) {
    Vec lhs = b.hact[static_cast<std::size_t>(e)].apply(
        f, basis_vec(f, h.at(he).dim(), hk), b.unit);
    Vec rhs = scaled(h.counit[hk], b.unit);
    if (lhs != rhs)
      throw Error("ActionAxiomFailure",
                  "action on the unit is not by the counit, actor " +
                      h.at(he).basis[hk]);
  }

  GradedAlgebra out;
  out.field = f;
  out.datum = DiscreteDoiHopfDatum{h.grading, lam.monoid, b.gamma, a.x};
  out.comp.reserve(static_cast<std::size_t>(nl * nx));
  for (int l = 0; l < nl; ++l)
    for (int x = 0; x < nx; ++x)
      out.comp.push_back(tensor_space(b.at(l), a.at(x)));
  out.unit.reserve(static_cast<std::size_t>(nx));
  for (int x = 0; x < nx; ++x)
    out.unit.push_back(outer(f, b.unit, a.unit[static_cast<std::size_t>(x)]));

  for (int l = 0; l < nl; ++l)
    for (int x = 0; x < nx; ++x)
      for (int l2 = 0; l2 < nl; ++l2) {
        const int x2 = a.x.act(x, gam(l2));
        const int l12 = lam.op(l, l2);
        const CoMultTensor& rho = a.rho(x2, h.ginv(gam(l2)));
        const MultTensor& mb = b.mul(l, l2);
        const MultTensor& ma = a.mult[static_cast<std::size_t>(x2)];
        const std::size_t da = a.at(x).dim();
        const std::size_t da2 = a.at(x2).dim();
        const std::size_t dbt = b.at(l12).dim();
        MultTensor t = make_mult(
            f, out.at(l, x), out.at(l2, x2), out.at(l12, x2),
            [&](std::size_t p, std::size_t q) {
              const std::size_t bi = p / da, ai = p % da;
              const std::size_t bj = q / da2, aj = q % da2;
              Acc2 acc;
              for (const Term2& ct : rho.on_basis(ai))
                for (const Term& ht :
                     b.hact[static_cast<std::size_t>(l2)].on_basis(
                         static_cast<std::size_t>(ct.j), bj))
                  for (const Term& bt :
                       mb.on_basis(bi, static_cast<std::size_t>(ht.i)))
                    for (const Term& at :
                         ma.on_basis(static_cast<std::size_t>(ct.i), aj))
                      acc.add(ct.c * ht.c * bt.c * at.c, bt.i, at.i);
              return acc.dense(f, dbt, da2);
            });
        out.mult.emplace(std::make_tuple(l, x, l2), std::move(t));
      }
  return out;
}

GradedAlgebra koppinen_smash(const DoiHopfDatumTk& d) {
  const FiniteGroup lam = require_group(d.discrete.lambda, "koppinen_smash");
  const Field& f = d.h.field;
  const int nl = static_cast<int>(lam.size());
  const int nx = static_cast<int>(d.a.x.size());
  auto gam = [&](int l) { return d.discrete.gamma.at(static_cast<std::size_t>(l)); };
  auto linv = [&](int l) { return lam.inv.at(static_cast<std::size_t>(l)); };

  GradedAlgebra out;
  out.field = f;
  out.datum = d.discrete;
  out.comp.reserve(static_cast<std::size_t>(nl * nx));
  for (int l = 0; l < nl; ++l)
    for (int x = 0; x < nx; ++x) {
      const Space& cs = d.c.at(linv(l));
      const Space& as = d.a.at(x);
      Space s{"Hom(" + cs.label + "," + as.label + ")", {}};
      s.basis.reserve(cs.dim() * as.dim());
      for (const std::string& cu : cs.basis)
        for (const std::string& av : as.basis) s.basis.push_back(cu + "->" + av);
      out.comp.push_back(std::move(s));
    }
  out.unit.reserve(static_cast<std::size_t>(nx));
  for (int x = 0; x < nx; ++x)
    out.unit.push_back(outer(f, d.c.c.counit, d.a.unit[static_cast<std::size_t>(x)]));

  for (int l = 0; l < nl; ++l)
    for (int x = 0; x < nx; ++x)
      for (int l2 = 0; l2 < nl; ++l2) {
        const int x2 = d.a.x.act(x, gam(l2));
        const int l12 = lam.op(l, l2);
        const std::size_t da = d.a.at(x).dim();
        const std::size_t da2 = d.a.at(x2).dim();
        const std::size_t dct = d.c.at(linv(l12)).dim();
        const CoMultTensor& rho = d.a.rho(x2, d.h.ginv(gam(l2)));
        const MultTensor& cact = d.c.action.at(static_cast<std::size_t>(linv(l2)));
        const MultTensor& ma = d.a.mult[static_cast<std::size_t>(x2)];
        MultTensor t = make_mult(
            f, out.at(l, x), out.at(l2, x2), out.at(l12, x2),
            [&](std::size_t p, std::size_t q) {
              const std::size_t u = p / da, v = p % da;
              const std::size_t pz = q / da2, qz = q % da2;
              Acc2 acc;
              for (std::size_t cw = 0; cw < dct; ++cw)
                for (const Term2& sp :
                     split2(d.c.c, linv(l2), linv(l), static_cast<int>(cw))) {
                  if (sp.j != static_cast<int>(u)) continue;
                  for (const Term2& ct : rho.on_basis(v))
                    for (const Term& ca :
                         cact.on_basis(static_cast<std::size_t>(sp.i),
                                       static_cast<std::size_t>(ct.j))) {
                      if (ca.i != static_cast<int>(pz)) continue;
                      for (const Term& am :
                           ma.on_basis(static_cast<std::size_t>(ct.i), qz))
                        acc.add(sp.c * ct.c * ca.c * am.c,
                                static_cast<int>(cw), am.i);
                    }
                }
              return acc.dense(f, dct, da2);
            });
        out.mult.emplace(std::make_tuple(l, x, l2), std::move(t));
      }
  return out;
}

AlphaIso alpha_iso(const DoiHopfDatumTk& d) {
  AlphaIso ai;
  ai.koppinen = koppinen_smash(d);
  const LambdaGradedAlgebra b = dual_b_algebra(d.h, d.discrete, d.c);
  ai.smash = smash_product(d.h, b, d.a);
  const FiniteGroup lam = require_group(d.discrete.lambda, "alpha_iso");
  const Field& f = d.h.field;
  const int nl = static_cast<int>(lam.size());
  const int nx = static_cast<int>(d.a.x.size());
  for (int l = 0; l < nl; ++l)
    for (int x = 0; x < nx; ++x) {
      const Space& sm = ai.smash.at(l, x);
      const Space& ko = ai.koppinen.at(l, x);
      const std::size_t dc = d.c.at(lam.inv.at(static_cast<std::size_t>(l))).dim();
      const std::size_t da = d.a.at(x).dim();
      LinMap fwd = make_linmap(f, sm, ko, [&](std::size_t p) {
        const std::size_t u = p / da, v = p % da;
        Vec out = zero_vec(f, dc * da);
        const Vec xi = basis_vec(f, dc, u);
        for (std::size_t w = 0; w < dc; ++w) {
          const Scalar cw = pair_dual(f, xi, basis_vec(f, dc, w));
          if (!cw.is_zero()) out[flat(w, v, da)] += cw;
        }
        return out;
      });
      LinMap bwd = make_linmap(f, ko, sm, [&](std::size_t q) {
        const std::size_t pz = q / da, qz = q % da;
        Vec out = zero_vec(f, dc * da);
        for (std::size_t u = 0; u < dc; ++u) {
          // value of the elementary map on the u-th basis vector
          if (u == pz) out[flat(u, qz, da)] += f.one();
        }
        return out;
      });
      ai.fwd.emplace(std::make_pair(l, x), std::move(fwd));
      ai.bwd.emplace(std::make_pair(l, x), std::move(bwd));
    }
  return ai;
}

ValidationReport check_alpha(const AlphaIso& ai) {
  ValidationReport r;
  const Field& f = ai.smash.field;
  const int nl = static_cast<int>(ai.smash.nl());
  const int nx = static_cast<int>(ai.smash.nx());
  const int e = ai.smash.datum.lambda.identity;
  const auto& lel = ai.smash.datum.lambda.elements;
  const auto& xel = ai.smash.datum.x.carrier;

  r.count("alpha.shape");
  bool shape = ai.smash.datum.lambda == ai.koppinen.datum.lambda &&
               ai.smash.datum.acting == ai.koppinen.datum.acting &&
               ai.smash.datum.gamma == ai.koppinen.datum.gamma &&
               ai.smash.datum.x.carrier == ai.koppinen.datum.x.carrier &&
               static_cast<int>(ai.smash.comp.size()) == nl * nx &&
               ai.koppinen.comp.size() == ai.smash.comp.size();
  for (int l = 0; l < nl && shape; ++l)
    for (int x = 0; x < nx && shape; ++x) {
      auto itf = ai.fwd.find({l, x});
      auto itb = ai.bwd.find({l, x});
      if (itf == ai.fwd.end() || itb == ai.bwd.end()) {
        shape = false;
        break;
      }
      shape = itf->second.domain == ai.smash.at(l, x) &&
              itf->second.codomain == ai.koppinen.at(l, x) &&
              itb->second.domain == ai.koppinen.at(l, x) &&
              itb->second.codomain == ai.smash.at(l, x);
    }
  if (!shape) {
    r.fail("alpha.shape", "presentation tables", "", "");
    return r;
  }

  for (int l = 0; l < nl; ++l)
    for (int x = 0; x < nx; ++x) {
      const LinMap& F = ai.fwd.at({l, x});
      const LinMap& B = ai.bwd.at({l, x});
      const std::string w = "(" + lbl(lel, l) + "|" + lbl(xel, x) + ")";
      r.expect_true("alpha.inverse", w,
                    compose(f, F, B) == identity_map(F.codomain, f) &&
                        compose(f, B, F) == identity_map(F.domain, f),
                    "round trips differ from the identity");
    }

  for (int x = 0; x < nx; ++x)
    r.expect_eq("alpha.unit", "1_" + lbl(xel, x),
                ai.fwd.at({e, x}).apply(f, ai.smash.unit[static_cast<std::size_t>(x)]),
                ai.koppinen.unit[static_cast<std::size_t>(x)]);

  for (int l = 0; l < nl; ++l)
    for (int x = 0; x < nx; ++x)
      for (int l2 = 0; l2 < nl; ++l2) {
        const int x2 = ai.smash.datum.x.act(
            x, ai.smash.datum.gamma.at(static_cast<std::size_t>(l2)));
        const int l12 = ai.smash.datum.lambda.op(l, l2);
        const MultTensor& ms = ai.smash.mul(l, x, l2);
        const MultTensor& mk = ai.koppinen.mul(l, x, l2);
        const LinMap& fu = ai.fwd.at({l, x});
        const LinMap& fv = ai.fwd.at({l2, x2});
        const LinMap& fw = ai.fwd.at({l12, x2});
        for (std::size_t i = 0; i < ms.u.dim(); ++i)
          for (std::size_t j = 0; j < ms.v.dim(); ++j) {
            Vec lhs = fw.apply(f, mul_bb(f, ms, i, j));
            Vec rhs = mk.apply(f, fu.apply(f, basis_vec(f, ms.u.dim(), i)),
                               fv.apply(f, basis_vec(f, ms.v.dim(), j)));
            r.expect_eq("alpha.mult",
                        "(" + lbl(lel, l) + "|" + lbl(xel, x) + ")(" +
                            lbl(lel, l2) + ") basis " + std::to_string(i) +
                            "," + std::to_string(j),
                        lhs, rhs);
          }
      }
  return r;
}

GradedModule regular_graded_module(const GradedAlgebra& a) {
  GradedModule m;
  m.alg = a;
  m.y = regular_datum_set(a.datum);
  m.comp = a.comp;
  const int nl = static_cast<int>(a.nl());
  const int nx = static_cast<int>(a.nx());
  for (int l = 0; l < nl; ++l)
    for (int x = 0; x < nx; ++x)
      for (int l2 = 0; l2 < nl; ++l2)
        m.action.emplace(std::make_pair(a.cidx(l, x), l2), a.mul(l, x, l2));
  return m;
}

GradedModule restrict_module(const GradedModule& m,
                             const std::vector<int>& points) {
  const int nl = static_cast<int>(m.alg.nl());
  const int ny = static_cast<int>(m.y.size());
  std::map<int, int> pos;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const int z = points[i];
    if (z < 0 || z >= ny)
      throw Error("NotClosed", "point index " + std::to_string(z) +
                                   " outside the point set");
    if (!pos.emplace(z, static_cast<int>(i)).second)
      throw Error("MalformedTable",
                  "duplicate point " + m.y.carrier[static_cast<std::size_t>(z)] +
                      " in the restriction subset");
  }
  for (const int z : points)
    for (int l = 0; l < nl; ++l) {
      const int t = m.y.act(z, l);
      if (!pos.count(t))
        throw Error("NotClosed",
                    "subset is not closed: point " +
                        m.y.carrier[static_cast<std::size_t>(z)] + ", degree " +
                        lbl(m.alg.datum.lambda.elements, l) + " lands outside");
    }

  GradedModule out;
  out.alg = m.alg;
  out.y.carrier.reserve(points.size());
  out.y.action.reserve(points.size());
  out.y.beta.reserve(points.size());
  out.comp.reserve(points.size());
  for (const int z : points) {
    out.y.carrier.push_back(m.y.carrier[static_cast<std::size_t>(z)]);
    std::vector<int> row(static_cast<std::size_t>(nl));
    for (int l = 0; l < nl; ++l)
      row[static_cast<std::size_t>(l)] = pos.at(m.y.act(z, l));
    out.y.action.push_back(std::move(row));
    out.y.beta.push_back(m.y.beta[static_cast<std::size_t>(z)]);
    out.comp.push_back(m.comp[static_cast<std::size_t>(z)]);
  }
  for (std::size_t i = 0; i < points.size(); ++i)
    for (int l = 0; l < nl; ++l)
      out.action.emplace(std::make_pair(static_cast<int>(i), l),
                         m.act(points[i], l));
  return out;
}

ValidationReport check_graded_module(const GradedModule& m) {
  ValidationReport r;
  r.merge(validate_datum_set(m.alg.datum, m.y));
  if (!r.ok()) return r;
  const Field& f = m.alg.field;
  const int nl = static_cast<int>(m.alg.nl());
  const int nx = static_cast<int>(m.alg.nx());
  const int ny = static_cast<int>(m.y.size());
  const int e = m.alg.datum.lambda.identity;
  const auto& lel = m.alg.datum.lambda.elements;

  r.count("graded_module.shape");
  bool shape = static_cast<int>(m.comp.size()) == ny &&
               static_cast<int>(m.alg.comp.size()) == nl * nx &&
               static_cast<int>(m.alg.unit.size()) == nx &&
               m.action.size() == static_cast<std::size_t>(ny * nl);
  for (int x = 0; x < nx && shape; ++x)
    shape = m.alg.unit[static_cast<std::size_t>(x)].size() == m.alg.at(e, x).dim();
  for (int y = 0; y < ny && shape; ++y)
    for (int l = 0; l < nl && shape; ++l) {
      auto it = m.action.find({y, l});
      if (it == m.action.end()) {
        shape = false;
        break;
      }
      const int yl = m.y.act(y, l);
      const int x = m.y.beta.at(static_cast<std::size_t>(yl));
      shape = it->second.u == m.at(y) && it->second.v == m.alg.at(l, x) &&
              it->second.w == m.at(yl);
    }
  if (!shape) {
    r.fail("graded_module.shape", "action tables", "", "");
    return r;
  }

  ValidationReport primary;
  for (int y = 0; y < ny; ++y) {
    const MultTensor& t = m.act(y, e);
    const std::size_t d = m.at(y).dim();
    const int x = m.y.beta.at(static_cast<std::size_t>(y));
    for (std::size_t i = 0; i < d; ++i)
      primary.expect_eq(
          "graded_module.unit", lbl(m.y.carrier, y) + " basis " + std::to_string(i),
          t.apply(f, basis_vec(f, d, i), m.alg.unit[static_cast<std::size_t>(x)]),
          basis_vec(f, d, i));
  }
  for (int y = 0; y < ny; ++y)
    for (int l = 0; l < nl; ++l)
      for (int l2 = 0; l2 < nl; ++l2) {
        const int yl = m.y.act(y, l);
        const int yl2 = m.y.act(yl, l2);
        const int l12 = m.alg.datum.lambda.op(l, l2);
        const int x1 = m.y.beta.at(static_cast<std::size_t>(yl));
        const MultTensor& act1 = m.act(y, l);
        const MultTensor& act2 = m.act(yl, l2);
        const MultTensor& act12 = m.act(y, l12);
        const MultTensor& amul = m.alg.mul(l, x1, l2);
        const std::size_t dm = m.at(y).dim();
        const std::size_t da = act1.v.dim();
        const std::size_t db = act2.v.dim();
        const std::size_t dt = m.at(yl2).dim();
        for (std::size_t i = 0; i < dm; ++i)
          for (std::size_t j = 0; j < da; ++j)
            for (std::size_t k = 0; k < db; ++k) {
              Vec lhs = zero_vec(f, dt);
              for (const Term& t1 : act1.on_basis(i, j))
                for (const Term& t2 :
                     act2.on_basis(static_cast<std::size_t>(t1.i), k))
                  lhs[static_cast<std::size_t>(t2.i)] += t1.c * t2.c;
              Vec rhs = zero_vec(f, dt);
              for (const Term& t1 : amul.on_basis(j, k))
                for (const Term& t2 :
                     act12.on_basis(i, static_cast<std::size_t>(t1.i)))
                  rhs[static_cast<std::size_t>(t2.i)] += t1.c * t2.c;
              primary.expect_eq("graded_module.assoc",
                                lbl(m.y.carrier, y) + " degrees (" +
                                    lbl(lel, l) + "," + lbl(lel, l2) +
                                    ") basis " + std::to_string(i) + "," +
                                    std::to_string(j) + "," + std::to_string(k),
                                lhs, rhs);
            }
      }

  // Independent route: the one-index collapse acts with absent blocks as
  // zero; the unit conditions become Kronecker statements.
  ValidationReport alt;
  const Collapse c = collapse_of(m.alg);
  Vec global = zero_vec(f, c.dim[static_cast<std::size_t>(e)]);
  std::vector<Vec> units;
  units.reserve(static_cast<std::size_t>(nx));
  for (int x = 0; x < nx; ++x) {
    Vec v = zero_vec(f, c.dim[static_cast<std::size_t>(e)]);
    const Vec& ux = m.alg.unit[static_cast<std::size_t>(x)];
    for (std::size_t i = 0; i < ux.size(); ++i)
      v[c.off[static_cast<std::size_t>(e)][static_cast<std::size_t>(x)] + i] = ux[i];
    axpy(global, f.one(), v);
    units.push_back(std::move(v));
  }
  for (int y = 0; y < ny; ++y) {
    const std::size_t d = m.at(y).dim();
    for (std::size_t i = 0; i < d; ++i) {
      const Vec mv = basis_vec(f, d, i);
      const std::string w = lbl(m.y.carrier, y) + " basis " + std::to_string(i);
      alt.expect_eq("graded_module_alt.global_unit", w,
                    collapse_act(m, c, y, mv, e, global), mv);
      for (int x = 0; x < nx; ++x) {
        Vec want = (x == m.y.beta.at(static_cast<std::size_t>(y)))
                       ? mv
                       : zero_vec(f, d);
        alt.expect_eq("graded_module_alt.unit_kron",
                      w + " times 1_" + lbl(m.alg.datum.x.carrier, x),
                      collapse_act(m, c, y, mv, e, units[static_cast<std::size_t>(x)]),
                      want);
      }
    }
  }
  for (int y = 0; y < ny; ++y)
    for (int l = 0; l < nl; ++l)
      for (int l2 = 0; l2 < nl; ++l2) {
        const int yl = m.y.act(y, l);
        const int l12 = m.alg.datum.lambda.op(l, l2);
        const std::size_t dm = m.at(y).dim();
        for (std::size_t i = 0; i < dm; ++i) {
          const Vec mv = basis_vec(f, dm, i);
          for (std::size_t j = 0; j < c.dim[static_cast<std::size_t>(l)]; ++j)
            for (std::size_t k = 0; k < c.dim[static_cast<std::size_t>(l2)];
                 ++k) {
              const Vec av = basis_vec(f, c.dim[static_cast<std::size_t>(l)], j);
              const Vec bv = basis_vec(f, c.dim[static_cast<std::size_t>(l2)], k);
              Vec lhs = collapse_act(m, c, yl, collapse_act(m, c, y, mv, l, av),
                                     l2, bv);
              Vec rhs = collapse_act(m, c, y, mv, l12,
                                     collapse_mul(m.alg, c, l, av, l2, bv));
              alt.expect_eq("graded_module_alt.assoc",
                            lbl(m.y.carrier, y) + " degrees (" + lbl(lel, l) +
                                "," + lbl(lel, l2) + ") basis " +
                                std::to_string(i) + "," + std::to_string(j) +
                                "," + std::to_string(k),
                            lhs, rhs);
            }
        }
      }

  const bool agree = primary.ok() == alt.ok();
  r.merge(primary);
  r.merge(alt);
  r.expect_true("graded_module.routes_agree",
                "keyed-action route vs collapsed route", agree);
  return r;
}

GradedModule functor_tz(const DoiHopfDatumTk& d, const DoiHopfModule& m) {
  GradedModule out;
  out.alg = koppinen_smash(d);
  const FiniteGroup lam = require_group(d.discrete.lambda, "functor_tz");
  const Field& f = d.h.field;
  out.y = m.y;
  out.comp = m.comp;
  const int ny = static_cast<int>(m.y.size());
  const int nl = static_cast<int>(lam.size());
  for (int y = 0; y < ny; ++y)
    for (int l = 0; l < nl; ++l) {
      const int yl = m.y.act(y, l);
      const int x = m.y.beta.at(static_cast<std::size_t>(yl));
      const int li = lam.inv.at(static_cast<std::size_t>(l));
      const std::size_t da = d.a.at(x).dim();
      const CoMultTensor& rho = m.rho(yl, li);
      const MultTensor& act = m.action.at(static_cast<std::size_t>(yl));
      MultTensor t = make_mult(
          f, m.at(y), out.alg.at(l, x), m.at(yl),
          [&](std::size_t mi, std::size_t q) {
            const std::size_t u = q / da, v = q % da;
            Vec outv = zero_vec(f, m.at(yl).dim());
            for (const Term2& ct : rho.on_basis(mi)) {
              if (ct.j != static_cast<int>(u)) continue;
              for (const Term& at :
                   act.on_basis(static_cast<std::size_t>(ct.i), v))
                outv[static_cast<std::size_t>(at.i)] += ct.c * at.c;
            }
            return outv;
          });
      out.action.emplace(std::make_pair(y, l), std::move(t));
    }
  return out;
}

DoiHopfModule inverse_functor(const DoiHopfDatumTk& d, const GradedModule& m) {
  const FiniteGroup lam = require_group(d.discrete.lambda, "inverse_functor");
  const Field& f = d.h.field;
  const int ny = static_cast<int>(m.y.size());
  const int nl = static_cast<int>(lam.size());
  const int e = lam.identity();
  DoiHopfModule out;
  out.y = m.y;
  out.comp = m.comp;

  out.action.reserve(static_cast<std::size_t>(ny));
  for (int y = 0; y < ny; ++y) {
    const int x = m.y.beta.at(static_cast<std::size_t>(y));
    const std::size_t da = d.a.at(x).dim();
    const std::size_t dce = d.c.at(e).dim();
    const std::size_t dm = m.at(y).dim();
    const MultTensor& ge = m.act(y, e);
    out.action.push_back(make_mult(
        f, m.at(y), d.a.at(x), m.at(y), [&](std::size_t mi, std::size_t aj) {
          Vec hom = zero_vec(f, dce * da);
          for (std::size_t u = 0; u < dce; ++u)
            hom[flat(u, aj, da)] = d.c.c.counit[u];
          return ge.apply(f, basis_vec(f, dm, mi), hom);
        }));
  }

  for (int y = 0; y < ny; ++y)
    for (int l = 0; l < nl; ++l) {
      const int yl = m.y.act(y, l);
      const int li = lam.inv.at(static_cast<std::size_t>(l));
      const int x = m.y.beta.at(static_cast<std::size_t>(y));
      const std::size_t dc = d.c.at(l).dim();
      const std::size_t da = d.a.at(x).dim();
      const std::size_t ds = m.at(yl).dim();
      const MultTensor& g = m.act(yl, li);
      CoMultTensor co = make_comult(
          f, m.at(yl), m.at(y), d.c.at(l), [&](std::size_t s) {
            std::vector<Term2> terms;
            for (std::size_t u = 0; u < dc; ++u) {
              Vec hom = zero_vec(f, dc * da);
              const Vec& ux = d.a.unit[static_cast<std::size_t>(x)];
              for (std::size_t w = 0; w < da; ++w) hom[flat(u, w, da)] = ux[w];
              Vec img = g.apply(f, basis_vec(f, ds, s), hom);
              for (std::size_t i = 0; i < img.size(); ++i)
                if (!img[i].is_zero())
                  terms.push_back({img[i], static_cast<int>(i),
                                   static_cast<int>(u)});
            }
            return terms;
          });
      out.coaction.emplace(std::make_pair(y, l), std::move(co));
    }
  return out;
}

ValidationReport check_graded_morphism(MorphFlavor flavor,
                                       const GradedModule& m,
                                       const GradedModule& mp,
                                       const std::vector<int>& eta,
                                       const std::vector<LinMap>& phi) {
  const bool is_t = flavor == MorphFlavor::T;
  const DatumSet& idx_set = is_t ? mp.y : m.y;
  const DatumSet& other = is_t ? m.y : mp.y;
  if (eta.size() != idx_set.size() || phi.size() != idx_set.size())
    throw Error("IndexMismatch",
                "point map and component maps must be indexed by the " +
                    std::string(is_t ? "target" : "source") + " point set");
  for (const int v : eta)
    if (v < 0 || v >= static_cast<int>(other.size()))
      throw Error("IndexMismatch", "point map value out of range");

  ValidationReport r;
  r.expect_true("gmorph.same_algebra", "underlying graded algebras",
                same_graded_algebra(m.alg, mp.alg));
  if (!r.ok()) return r;
  const Field& f = m.alg.field;
  const int nl = static_cast<int>(m.alg.nl());
  const int ni = static_cast<int>(idx_set.size());
  const auto& lel = m.alg.datum.lambda.elements;

  bool eta_ok = true;
  for (int i = 0; i < ni; ++i) {
    for (int l = 0; l < nl; ++l) {
      const bool ok = eta[static_cast<std::size_t>(idx_set.act(i, l))] ==
                      other.act(eta[static_cast<std::size_t>(i)], l);
      r.expect_true("gmorph.eta_equivariant",
                    lbl(idx_set.carrier, i) + ", degree " + lbl(lel, l), ok);
      eta_ok = eta_ok && ok;
    }
    const bool ok = other.beta.at(static_cast<std::size_t>(
                        eta[static_cast<std::size_t>(i)])) ==
                    idx_set.beta.at(static_cast<std::size_t>(i));
    r.expect_true("gmorph.eta_beta", lbl(idx_set.carrier, i), ok);
    eta_ok = eta_ok && ok;
  }
  if (!eta_ok) return r;

  auto dom_point = [&](int i) {
    return is_t ? eta[static_cast<std::size_t>(i)] : i;
  };
  auto cod_point = [&](int i) {
    return is_t ? i : eta[static_cast<std::size_t>(i)];
  };
  bool shapes = true;
  for (int i = 0; i < ni && shapes; ++i)
    shapes = phi[static_cast<std::size_t>(i)].domain == m.at(dom_point(i)) &&
             phi[static_cast<std::size_t>(i)].codomain == mp.at(cod_point(i));
  r.expect_true("gmorph.phi_shape", "component map spaces", shapes);
  if (!shapes) return r;

  for (int i = 0; i < ni; ++i)
    for (int l = 0; l < nl; ++l) {
      const int il = idx_set.act(i, l);
      const MultTensor& am = m.act(dom_point(i), l);
      const MultTensor& apm = mp.act(cod_point(i), l);
      const std::size_t dm = am.u.dim();
      const std::size_t da = am.v.dim();
      for (std::size_t mi = 0; mi < dm; ++mi)
        for (std::size_t aj = 0; aj < da; ++aj) {
          Vec lhs = phi[static_cast<std::size_t>(il)].apply(
              f, mul_bb(f, am, mi, aj));
          Vec rhs = apm.apply(
              f,
              phi[static_cast<std::size_t>(i)].apply(f, basis_vec(f, dm, mi)),
              basis_vec(f, da, aj));
          r.expect_eq("gmorph.square",
                      lbl(idx_set.carrier, i) + ", degree " + lbl(lel, l) +
                          " basis " + std::to_string(mi) + "," +
                          std::to_string(aj),
                      lhs, rhs);
        }
    }
  return r;
}

bool same_graded_algebra(const GradedAlgebra& a, const GradedAlgebra& b) {
  return a.field == b.field && a.datum.acting == b.datum.acting &&
         a.datum.lambda == b.datum.lambda && a.datum.gamma == b.datum.gamma &&
         a.datum.x.acting == b.datum.x.acting &&
         a.datum.x.carrier == b.datum.x.carrier &&
         a.datum.x.action == b.datum.x.action && a.comp == b.comp &&
         a.mult == b.mult && a.unit == b.unit;
}

bool same_graded_module(const GradedModule& a, const GradedModule& b) {
  return same_graded_algebra(a.alg, b.alg) && a.y.carrier == b.y.carrier &&
         a.y.action == b.y.action && a.y.beta == b.y.beta &&
         a.comp == b.comp && a.action == b.action;
}

}  // namespace hgc
