#include "hgc/double.hpp"

#include <cstddef>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hgc/accum.hpp"

namespace hgc {

namespace {

std::string lbl(const std::vector<std::string>& names, int i) {
  return names.at(static_cast<std::size_t>(i));
}

FiniteGroup group_of(const HopfGC& h) { return FiniteGroup{h.grading, h.inv}; }

/// Per-domain-basis column lists of a sparse linear map: column j holds the
/// (codomain index, coefficient) pairs of the image of basis vector j.
std::vector<std::vector<std::pair<int, Scalar>>> columns(const LinMap& m) {
  std::vector<std::vector<std::pair<int, Scalar>>> out(m.domain.dim());
  for (const auto& [rc, c] : m.entries)
    out.at(static_cast<std::size_t>(rc.second)).emplace_back(rc.first, c);
  return out;
}

void add_entry(std::map<std::tuple<int, int, int>, Scalar>& acc,
               const std::tuple<int, int, int>& key, const Scalar& c) {
  auto it = acc.find(key);
  if (it == acc.end()) {
    if (!c.is_zero()) acc.emplace(key, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

/// Iterates the nonzero terms of a two-leg element as (left index, right
/// index, coefficient).
template <typename F>
void for_terms(const Elem2& el, std::size_t dim_right, F&& fn) {
  for (std::size_t k = 0; k < el.coeff.size(); ++k)
    if (!el.coeff[k].is_zero())
      fn(static_cast<int>(k / dim_right), static_cast<int>(k % dim_right),
         el.coeff[k]);
}

}  // namespace

const CoMultTensor& GradedBialgebra::delta(int l, int g, int g2) const {
  auto it = comult.find({l, g, g2});
  if (it == comult.end())
    throw Error("MissingComultiplication",
                "no comultiplication at key (" + std::to_string(l) + "," +
                    std::to_string(g) + "," + std::to_string(g2) + ")");
  return it->second;
}

const Vec& GradedBialgebra::eps(int l) const {
  if (l < 0 || static_cast<std::size_t>(l) >= counit.size())
    throw Error("MissingCounit", "no counit at degree " + std::to_string(l));
  return counit[static_cast<std::size_t>(l)];
}

const LinMap& GradedBialgebra::s_at(int l, int g) const {
  auto it = antipode.find({l, g});
  if (it == antipode.end())
    throw Error("MissingAntipode", "no antipode at key (" + std::to_string(l) +
                                       "," + std::to_string(g) + ")");
  return it->second;
}

const LinMap& GradedBialgebra::s_tw_at(int l, int g) const {
  auto it = antipode_tw.find({l, g});
  if (it == antipode_tw.end())
    throw Error("MissingAntipode",
                "no twisted antipode at key (" + std::to_string(l) + "," +
                    std::to_string(g) + ")");
  return it->second;
}

const Elem2& GradedBialgebra::r_at(int g, int g2) const {
  auto it = rmat.find({g, g2});
  if (it == rmat.end())
    throw Error("MissingBraiding", "no R element at key (" +
                                       std::to_string(g) + "," +
                                       std::to_string(g2) + ")");
  return it->second;
}

const Elem2& GradedBialgebra::q_at(int g, int g2) const {
  auto it = qmat.find({g, g2});
  if (it == qmat.end())
    throw Error("MissingBraiding", "no Q element at key (" +
                                       std::to_string(g) + "," +
                                       std::to_string(g2) + ")");
  return it->second;
}

// ---------------------------------------------------------------------------
// the conjugation-type datum of a Hopf family
// ---------------------------------------------------------------------------

DoiHopfDatumTk double_datum(const HopfGC& h) {
  const HopfGC hs = h.has_twisted() ? h : derive_twisted_antipode(h);
  const Field& f = hs.field;
  const FiniteGroup g = group_of(hs);
  const GDatum gd = make_crossed_datum(g);
  const int n = static_cast<int>(g.size());

  DoiHopfDatumTk d;
  d.h = tensor_hgc(opposite_hgc(hs), hs);
  d.discrete = gd.datum;

  d.a.field = f;
  d.a.x = gd.datum.x;
  d.a.comp = hs.comp;
  d.a.mult = hs.mult;
  d.a.unit = hs.unit;
  for (int x = 0; x < n; ++x)
    for (int ga = 0; ga < n; ++ga)
      for (int gb = 0; gb < n; ++gb) {
        const int k = gd.pair_index(ga, gb);
        const int src = gd.datum.x.act(x, k);
        const std::size_t dright = hs.at(gb).dim();
        const auto scols = columns(hs.antipode[static_cast<std::size_t>(ga)]);
        CoMultTensor rho{hs.at(src), hs.at(x), d.h.at(k), {}};
        for (std::size_t s = 0; s < hs.at(src).dim(); ++s) {
          Acc2 acc;
          for (const Term3& t :
               split3(hs, g.inv[static_cast<std::size_t>(ga)], x, gb,
                      static_cast<int>(s)))
            for (const auto& [r, cs] : scols[static_cast<std::size_t>(t.i)])
              acc.add(t.c * cs, t.j,
                      static_cast<int>(flat(static_cast<std::size_t>(r),
                                            static_cast<std::size_t>(t.k),
                                            dright)));
          for (const auto& [ij, c] : acc.m)
            rho.entries[{static_cast<int>(s), ij.first, ij.second}] = c;
        }
        d.a.coaction.emplace(std::make_pair(x, k), std::move(rho));
      }

  d.c.c = static_cast<const GroupCoalgebra&>(hs);
  d.c.gamma = gd.datum.gamma;
  for (int l = 0; l < n; ++l) {
    const Space& cs = hs.at(l);
    const std::size_t dl = cs.dim();
    MultTensor act{cs, d.h.at(gd.pair_index(l, l)), cs, {}};
    std::map<std::tuple<int, int, int>, Scalar> acc;
    for (std::size_t i = 0; i < dl; ++i)
      for (std::size_t u = 0; u < dl; ++u)
        for (const Term& t1 : hs.mult[static_cast<std::size_t>(l)].on_basis(u, i))
          for (std::size_t v = 0; v < dl; ++v)
            for (const Term& t2 : hs.mult[static_cast<std::size_t>(l)].on_basis(
                     static_cast<std::size_t>(t1.i), v))
              add_entry(acc,
                        {static_cast<int>(i), static_cast<int>(flat(u, v, dl)),
                         t2.i},
                        t1.c * t2.c);
    act.entries = std::move(acc);
    d.c.action.push_back(std::move(act));
  }
  return d;
}

// ---------------------------------------------------------------------------
// installed structure of the double
// ---------------------------------------------------------------------------

void double_comult_counit(DrinfeldDouble& d) {
  const HopfGC& h = d.h;
  const Field& f = h.field;
  const FiniteGroup g = group_of(h);
  const int n = static_cast<int>(g.size());
  GradedAlgebra& core = d.alg.core;

  d.alg.comult.clear();
  for (int l = 0; l < n; ++l) {
    const int li = g.inv[static_cast<std::size_t>(l)];
    const auto& mdual = h.mult[static_cast<std::size_t>(li)].entries;
    for (int ga = 0; ga < n; ++ga)
      for (int gb = 0; gb < n; ++gb) {
        const int x = g.op(ga, gb);
        const std::size_t dx = h.at(x).dim();
        const std::size_t dga = h.at(ga).dim(), dgb = h.at(gb).dim();
        CoMultTensor t{core.at(l, x), core.at(l, ga), core.at(l, gb), {}};
        std::map<std::tuple<int, int, int>, Scalar> acc;
        for (std::size_t s = 0; s < dx; ++s) {
          const auto terms = split2(h, ga, gb, static_cast<int>(s));
          for (const auto& [uvw, cm] : mdual) {
            const auto& [u, v, w] = uvw;
            for (const Term2& t2 : terms)
              add_entry(
                  acc,
                  {static_cast<int>(flat(static_cast<std::size_t>(w), s, dx)),
                   static_cast<int>(flat(static_cast<std::size_t>(u),
                                         static_cast<std::size_t>(t2.i), dga)),
                   static_cast<int>(flat(static_cast<std::size_t>(v),
                                         static_cast<std::size_t>(t2.j), dgb))},
                  cm * t2.c);
          }
        }
        t.entries = std::move(acc);
        d.alg.comult.emplace(std::make_tuple(l, ga, gb), std::move(t));
      }
  }

  const int e = g.identity();
  const std::size_t de = h.at(e).dim();
  d.alg.counit.assign(static_cast<std::size_t>(n), {});
  for (int l = 0; l < n; ++l) {
    const int li = g.inv[static_cast<std::size_t>(l)];
    const std::size_t dd = h.at(li).dim();
    Vec eps = zero_vec(f, dd * de);
    for (std::size_t w = 0; w < dd; ++w)
      for (std::size_t s = 0; s < de; ++s)
        eps[flat(w, s, de)] =
            h.unit[static_cast<std::size_t>(li)][w] * h.counit[s];
    d.alg.counit[static_cast<std::size_t>(l)] = std::move(eps);
  }
}

void double_antipodes(DrinfeldDouble& d) {
  const HopfGC& h = d.h;
  const Field& f = h.field;
  const FiniteGroup g = group_of(h);
  const int n = static_cast<int>(g.size());
  const int e = g.identity();
  const std::size_t de = h.at(e).dim();
  GradedAlgebra& core = d.alg.core;

  d.alg.antipode.clear();
  d.alg.antipode_tw.clear();
  for (int l = 0; l < n; ++l) {
    const int li = g.inv[static_cast<std::size_t>(l)];
    for (int ga = 0; ga < n; ++ga) {
      const int gi = g.inv[static_cast<std::size_t>(ga)];
      const int xt = g.op(l, g.op(ga, li));  // l ga l^-1
      const std::size_t ddual = h.at(li).dim();  // functional leg of the domain
      const std::size_t dh = h.at(gi).dim();     // family leg of the domain
      const std::size_t dtw = h.at(l).dim();  // functional leg of the codomain
      const MultTensor& prod = core.mul(e, ga, li);

      // columns of the family antipodes entering the first product factor
      const auto scols = columns(h.antipode[static_cast<std::size_t>(ga)]);
      const auto sbcols = columns(h.antipode_tw[static_cast<std::size_t>(ga)]);
      // row lists of the functional twists: row w of S~_{l^-1} (and of
      // S_{l^-1}) gives the dual-basis coordinates of d_w composed with it
      std::vector<std::vector<std::pair<int, Scalar>>> tw_rows(ddual),
          s_rows(ddual);
      for (const auto& [rc, c] :
           h.antipode_tw[static_cast<std::size_t>(li)].entries)
        tw_rows.at(static_cast<std::size_t>(rc.first))
            .emplace_back(rc.second, c);
      for (const auto& [rc, c] :
           h.antipode[static_cast<std::size_t>(li)].entries)
        s_rows.at(static_cast<std::size_t>(rc.first))
            .emplace_back(rc.second, c);

      const Vec& unit_t = h.unit[static_cast<std::size_t>(xt)];
      const std::size_t dxt = unit_t.size();

      auto build = [&](const std::vector<std::vector<std::pair<int, Scalar>>>&
                           fam_cols,
                       const std::vector<std::vector<std::pair<int, Scalar>>>&
                           fun_rows) {
        LinMap m{core.at(l, gi), core.at(li, xt), {}};
        for (std::size_t w = 0; w < ddual; ++w) {
          // second product factor: (d_w o twist) # local unit
          Vec right = zero_vec(f, dtw * dxt);
          for (const auto& [tcol, c] : fun_rows[w])
            for (std::size_t v = 0; v < dxt; ++v)
              if (!unit_t[v].is_zero())
                right[flat(static_cast<std::size_t>(tcol), v, dxt)] +=
                    c * unit_t[v];
          for (std::size_t s = 0; s < dh; ++s) {
            // first product factor: counit # twisted basis image
            Vec left = zero_vec(f, de * h.at(ga).dim());
            for (const auto& [r, c] : fam_cols[s])
              for (std::size_t u = 0; u < de; ++u)
                if (!h.counit[u].is_zero())
                  left[flat(u, static_cast<std::size_t>(r),
                            h.at(ga).dim())] += h.counit[u] * c;
            const Vec out = prod.apply(f, left, right);
            for (std::size_t r = 0; r < out.size(); ++r)
              if (!out[r].is_zero())
                m.entries[{static_cast<int>(r),
                           static_cast<int>(flat(w, s, dh))}] = out[r];
          }
        }
        return m;
      };

      d.alg.antipode.emplace(std::make_pair(l, ga), build(scols, tw_rows));
      d.alg.antipode_tw.emplace(std::make_pair(l, ga), build(sbcols, s_rows));
    }
  }

  const ValidationReport rep = check_graded_hopf(d.alg);
  if (!rep.ok()) throw Error("AntipodeFailure", rep.summary());
}

void double_rq(DrinfeldDouble& d) {
  const HopfGC& h = d.h;
  const FiniteGroup g = group_of(h);
  const int n = static_cast<int>(g.size());
  const int e = g.identity();
  const std::size_t de = h.at(e).dim();
  const Field& f = h.field;
  GradedAlgebra& core = d.alg.core;

  d.alg.rmat.clear();
  d.alg.qmat.clear();
  for (int ga = 0; ga < n; ++ga) {
    const int gi = g.inv[static_cast<std::size_t>(ga)];
    const std::size_t dg = h.at(ga).dim(), dgi = h.at(gi).dim();
    const auto sbcols = columns(h.antipode_tw[static_cast<std::size_t>(ga)]);
    for (int gb = 0; gb < n; ++gb) {
      {
        // R: sum over a basis of H_{ga} of (dual vector # unit) (x)
        // (counit # basis vector)
        const int x1 = g.op(ga, g.op(gb, gi));
        Elem2 r{gi, x1, e, ga, {}};
        const std::size_t dx1 = h.at(x1).dim();
        const std::size_t d2 = core.at(e, ga).dim();
        r.coeff = zero_vec(f, core.at(gi, x1).dim() * d2);
        const Vec& u1 = h.unit[static_cast<std::size_t>(x1)];
        for (std::size_t i = 0; i < dg; ++i)
          for (std::size_t v = 0; v < dx1; ++v) {
            if (u1[v].is_zero()) continue;
            for (std::size_t u = 0; u < de; ++u)
              if (!h.counit[u].is_zero())
                r.coeff[flat(flat(i, v, dx1), flat(u, i, dg), d2)] +=
                    u1[v] * h.counit[u];
          }
        d.alg.rmat.emplace(std::make_pair(ga, gb), std::move(r));
      }
      {
        // Q: sum over a basis of H_{ga^-1} of (dual vector # unit) (x)
        // (counit # twisted antipode image)
        const int x1 = g.op(gi, g.op(gb, ga));
        Elem2 q{ga, x1, e, ga, {}};
        const std::size_t dx1 = h.at(x1).dim();
        const std::size_t d2 = core.at(e, ga).dim();
        q.coeff = zero_vec(f, core.at(ga, x1).dim() * d2);
        const Vec& u1 = h.unit[static_cast<std::size_t>(x1)];
        for (std::size_t i = 0; i < dgi; ++i)
          for (const auto& [r, cs] : sbcols[i])
            for (std::size_t v = 0; v < dx1; ++v) {
              if (u1[v].is_zero()) continue;
              for (std::size_t u = 0; u < de; ++u)
                if (!h.counit[u].is_zero())
                  q.coeff[flat(flat(i, v, dx1),
                               flat(u, static_cast<std::size_t>(r), dg), d2)] +=
                      cs * u1[v] * h.counit[u];
            }
        d.alg.qmat.emplace(std::make_pair(ga, gb), std::move(q));
      }
    }
  }
}

DrinfeldDouble build_double(const HopfGC& h, DoubleForm form) {
  DrinfeldDouble d;
  d.h = h.has_twisted() ? h : derive_twisted_antipode(h);
  d.form = form;
  const DoiHopfDatumTk dd = double_datum(d.h);
  if (form == DoubleForm::Smash)
    d.alg.core =
        smash_product(dd.h, dual_b_algebra(dd.h, dd.discrete, dd.c), dd.a);
  else
    d.alg.core = koppinen_smash(dd);
  double_comult_counit(d);
  double_antipodes(d);
  double_rq(d);
  return d;
}

// ---------------------------------------------------------------------------
// checkers
// ---------------------------------------------------------------------------

ValidationReport check_graded_bialgebra(const GradedBialgebra& a) {
  ValidationReport rep;
  rep.merge(check_graded_algebra(a.core));
  if (!rep.ok()) return rep;
  const GradedAlgebra& core = a.core;
  const Field& f = core.field;
  const GDatum gd = as_gdatum(core.datum);
  const FiniteGroup& b = gd.base;
  const int n = static_cast<int>(b.size());
  const int e = b.identity();
  const auto& el = b.monoid.elements;

  rep.count("bialg.shape");
  bool shape = a.counit.size() == static_cast<std::size_t>(n) &&
               a.comult.size() ==
                   static_cast<std::size_t>(n) * static_cast<std::size_t>(n) *
                       static_cast<std::size_t>(n);
  std::string why = shape ? "" : "comultiplication/counit table sizes";
  for (int l = 0; l < n && shape; ++l)
    if (a.counit[static_cast<std::size_t>(l)].size() != core.at(l, e).dim()) {
      shape = false;
      why = "counit coordinate length at degree " + lbl(el, l);
    }
  for (const auto& [key, t] : a.comult) {
    if (!shape) break;
    const auto& [l, ga, gb] = key;
    if (l < 0 || l >= n || ga < 0 || ga >= n || gb < 0 || gb >= n) {
      shape = false;
      why = "comultiplication key out of range";
      break;
    }
    if (t.src != core.at(l, b.op(ga, gb)) || t.left != core.at(l, ga) ||
        t.right != core.at(l, gb)) {
      shape = false;
      why = "comultiplication spaces at (" + lbl(el, l) + "," + lbl(el, ga) +
            "," + lbl(el, gb) + ")";
    }
  }
  if (!shape) {
    rep.fail("bialg.shape", why, "", "");
    return rep;
  }

  // componentwise coalgebra laws for every fixed first degree
  for (int l = 0; l < n; ++l) {
    GroupCoalgebra slice;
    slice.field = f;
    slice.grading = core.datum.lambda;
    for (int ga = 0; ga < n; ++ga) slice.comp.push_back(core.at(l, ga));
    for (int ga = 0; ga < n; ++ga)
      for (int gb = 0; gb < n; ++gb)
        slice.comult.emplace(std::make_pair(ga, gb), a.delta(l, ga, gb));
    slice.counit = a.counit[static_cast<std::size_t>(l)];
    const ValidationReport sub = check_group_coalgebra(slice);
    rep.expect_true("bialg.slice_coalgebra", "degree " + lbl(el, l), sub.ok(),
                    sub.summary());
  }

  // the comultiplications are multiplicative across degrees
  for (int l = 0; l < n; ++l)
    for (int l2 = 0; l2 < n; ++l2)
      for (int ga = 0; ga < n; ++ga)
        for (int gb = 0; gb < n; ++gb) {
          const int x = b.op(ga, gb);
          const int xr = b.conj(x, l2);
          const int gar = b.conj(ga, l2), gbr = b.conj(gb, l2);
          const int ll2 = b.op(l, l2);
          const MultTensor& mbig = core.mul(l, x, l2);
          const CoMultTensor& dout = a.delta(ll2, gar, gbr);
          const CoMultTensor& da = a.delta(l, ga, gb);
          const CoMultTensor& da2 = a.delta(l2, gar, gbr);
          const MultTensor& m1 = core.mul(l, ga, l2);
          const MultTensor& m2 = core.mul(l, gb, l2);
          const std::size_t dl = dout.left.dim(), dr = dout.right.dim();
          for (std::size_t ai = 0; ai < core.at(l, x).dim(); ++ai)
            for (std::size_t bi = 0; bi < core.at(l2, xr).dim(); ++bi) {
              Acc2 lhs;
              for (const Term& p : mbig.on_basis(ai, bi))
                for (const Term2& t :
                     dout.on_basis(static_cast<std::size_t>(p.i)))
                  lhs.add(p.c * t.c, t.i, t.j);
              Acc2 rhs;
              for (const Term2& ta : da.on_basis(ai))
                for (const Term2& tb : da2.on_basis(bi)) {
                  const Scalar cab = ta.c * tb.c;
                  for (const Term& p1 :
                       m1.on_basis(static_cast<std::size_t>(ta.i),
                                   static_cast<std::size_t>(tb.i)))
                    for (const Term& p2 :
                         m2.on_basis(static_cast<std::size_t>(ta.j),
                                     static_cast<std::size_t>(tb.j)))
                      rhs.add(cab * p1.c * p2.c, p1.i, p2.i);
                }
              rep.expect_eq("bialg.mult_comult",
                            "degrees (" + lbl(el, l) + "," + lbl(el, l2) +
                                ") split (" + lbl(el, ga) + "," + lbl(el, gb) +
                                ") basis (" + std::to_string(ai) + "," +
                                std::to_string(bi) + ")",
                            lhs.dense(f, dl, dr), rhs.dense(f, dl, dr));
            }
        }

  // the counits are multiplicative across degrees
  for (int l = 0; l < n; ++l)
    for (int l2 = 0; l2 < n; ++l2) {
      const MultTensor& m = core.mul(l, e, l2);
      const Vec& el1 = a.counit[static_cast<std::size_t>(l)];
      const Vec& el2v = a.counit[static_cast<std::size_t>(l2)];
      const Vec& elp = a.counit[static_cast<std::size_t>(b.op(l, l2))];
      for (std::size_t ai = 0; ai < core.at(l, e).dim(); ++ai)
        for (std::size_t bi = 0; bi < core.at(l2, e).dim(); ++bi) {
          Scalar lhs = f.zero();
          for (const Term& p : m.on_basis(ai, bi))
            lhs += p.c * elp[static_cast<std::size_t>(p.i)];
          rep.expect_scalar_eq("bialg.counit_mult",
                               "degrees (" + lbl(el, l) + "," + lbl(el, l2) +
                                   ") basis (" + std::to_string(ai) + "," +
                                   std::to_string(bi) + ")",
                               lhs, el1[ai] * el2v[bi]);
        }
    }

  // the comultiplications split local units
  for (int ga = 0; ga < n; ++ga)
    for (int gb = 0; gb < n; ++gb)
      rep.expect_eq(
          "bialg.unit_comult", "split (" + lbl(el, ga) + "," + lbl(el, gb) + ")",
          a.delta(e, ga, gb).apply_flat(
              f, core.unit[static_cast<std::size_t>(b.op(ga, gb))]),
          outer(f, core.unit[static_cast<std::size_t>(ga)],
                core.unit[static_cast<std::size_t>(gb)]));

  // the identity counit evaluates to one on the identity local unit
  rep.expect_scalar_eq(
      "bialg.unit_counit", "",
      pair_dual(f, a.counit[static_cast<std::size_t>(e)],
                core.unit[static_cast<std::size_t>(e)]),
      f.one());
  return rep;
}

ValidationReport check_graded_hopf(const GradedBialgebra& a) {
  ValidationReport rep;
  const GradedAlgebra& core = a.core;
  const Field& f = core.field;
  const GDatum gd = as_gdatum(core.datum);
  const FiniteGroup& b = gd.base;
  const int n = static_cast<int>(b.size());
  const int e = b.identity();
  const auto& el = b.monoid.elements;

  rep.count("ghopf.shape");
  bool shape =
      a.antipode.size() == static_cast<std::size_t>(n) *
                               static_cast<std::size_t>(n) &&
      a.antipode_tw.size() == a.antipode.size() && !a.comult.empty() &&
      a.counit.size() == static_cast<std::size_t>(n);
  std::string why = shape ? "" : "antipode table sizes";
  for (int l = 0; l < n && shape; ++l)
    for (int ga = 0; ga < n && shape; ++ga) {
      const int gi = b.inv[static_cast<std::size_t>(ga)];
      const int li = b.inv[static_cast<std::size_t>(l)];
      const int xt = b.op(l, b.op(ga, li));
      auto is = a.antipode.find({l, ga});
      auto it = a.antipode_tw.find({l, ga});
      if (is == a.antipode.end() || it == a.antipode_tw.end()) {
        shape = false;
        why = "missing antipode at (" + lbl(el, l) + "," + lbl(el, ga) + ")";
        break;
      }
      if (is->second.domain != core.at(l, gi) ||
          is->second.codomain != core.at(li, xt) ||
          it->second.domain != core.at(l, gi) ||
          it->second.codomain != core.at(li, xt)) {
        shape = false;
        why = "antipode spaces at (" + lbl(el, l) + "," + lbl(el, ga) + ")";
      }
    }
  if (!shape) {
    rep.fail("ghopf.shape", why, "", "");
    return rep;
  }

  for (int l = 0; l < n; ++l) {
    const int li = b.inv[static_cast<std::size_t>(l)];
    const Vec& eps = a.counit[static_cast<std::size_t>(l)];
    for (int ga = 0; ga < n; ++ga) {
      const int gi = b.inv[static_cast<std::size_t>(ga)];
      const int xt = b.op(l, b.op(ga, li));
      const auto scols = columns(a.s_at(l, ga));
      const auto sbcols = columns(a.s_tw_at(l, ga));
      const CoMultTensor& d_fwd = a.delta(l, ga, gi);
      const CoMultTensor& d_bwd = a.delta(l, gi, ga);
      const MultTensor& m_right = core.mul(l, ga, li);
      const MultTensor& m_left = core.mul(li, xt, l);
      const std::size_t d_xt = core.at(e, xt).dim();
      const std::size_t d_g = core.at(e, ga).dim();
      const std::string at = "(" + lbl(el, l) + "," + lbl(el, ga) + ")";

      for (std::size_t ai = 0; ai < core.at(l, e).dim(); ++ai) {
        const std::string w = at + " basis " + std::to_string(ai);
        const Vec want_r =
            scaled(eps[ai], core.unit[static_cast<std::size_t>(xt)]);
        const Vec want_l =
            scaled(eps[ai], core.unit[static_cast<std::size_t>(ga)]);

        Vec acc = zero_vec(f, d_xt);
        for (const Term2& t : d_fwd.on_basis(ai))
          for (const auto& [r, cs] : scols[static_cast<std::size_t>(t.j)])
            for (const Term& p : m_right.on_basis(
                     static_cast<std::size_t>(t.i), static_cast<std::size_t>(r)))
              acc[static_cast<std::size_t>(p.i)] += t.c * cs * p.c;
        rep.expect_eq("ghopf.antipode_right", w, acc, want_r);

        acc = zero_vec(f, d_xt);
        for (const Term2& t : d_bwd.on_basis(ai))
          for (const auto& [r, cs] : sbcols[static_cast<std::size_t>(t.i)])
            for (const Term& p : m_right.on_basis(
                     static_cast<std::size_t>(t.j), static_cast<std::size_t>(r)))
              acc[static_cast<std::size_t>(p.i)] += t.c * cs * p.c;
        rep.expect_eq("ghopf.antipode_tw_right", w, acc, want_r);

        acc = zero_vec(f, d_g);
        for (const Term2& t : d_bwd.on_basis(ai))
          for (const auto& [r, cs] : scols[static_cast<std::size_t>(t.i)])
            for (const Term& p : m_left.on_basis(static_cast<std::size_t>(r),
                                                 static_cast<std::size_t>(t.j)))
              acc[static_cast<std::size_t>(p.i)] += t.c * cs * p.c;
        rep.expect_eq("ghopf.antipode_left", w, acc, want_l);

        acc = zero_vec(f, d_g);
        for (const Term2& t : d_fwd.on_basis(ai))
          for (const auto& [r, cs] : sbcols[static_cast<std::size_t>(t.j)])
            for (const Term& p : m_left.on_basis(static_cast<std::size_t>(r),
                                                 static_cast<std::size_t>(t.i)))
              acc[static_cast<std::size_t>(p.i)] += t.c * cs * p.c;
        rep.expect_eq("ghopf.antipode_tw_left", w, acc, want_l);
      }
    }
  }
  return rep;
}

ValidationReport check_quasitriangular(const GradedBialgebra& a) {
  ValidationReport rep;
  const GradedAlgebra& core = a.core;
  const Field& f = core.field;
  const GDatum gd = as_gdatum(core.datum);
  const FiniteGroup& b = gd.base;
  const int n = static_cast<int>(b.size());
  const int e = b.identity();
  const auto& el = b.monoid.elements;

  rep.count("qt.shape");
  bool shape = a.rmat.size() ==
                   static_cast<std::size_t>(n) * static_cast<std::size_t>(n) &&
               a.qmat.size() == a.rmat.size() && !a.comult.empty();
  std::string why = shape ? "" : "braiding element table sizes";
  for (int ga = 0; ga < n && shape; ++ga) {
    const int gi = b.inv[static_cast<std::size_t>(ga)];
    for (int gb = 0; gb < n && shape; ++gb) {
      auto ir = a.rmat.find({ga, gb});
      auto iq = a.qmat.find({ga, gb});
      if (ir == a.rmat.end() || iq == a.qmat.end()) {
        shape = false;
        why = "missing braiding element at (" + lbl(el, ga) + "," +
              lbl(el, gb) + ")";
        break;
      }
      const Elem2& r = ir->second;
      const Elem2& q = iq->second;
      const int rx = b.op(ga, b.op(gb, gi));
      const int qx = b.op(gi, b.op(gb, ga));
      if (r.l1 != gi || r.x1 != rx || r.l2 != e || r.x2 != ga ||
          r.coeff.size() != core.at(gi, rx).dim() * core.at(e, ga).dim()) {
        shape = false;
        why = "R membership at (" + lbl(el, ga) + "," + lbl(el, gb) + ")";
        break;
      }
      if (q.l1 != ga || q.x1 != qx || q.l2 != e || q.x2 != ga ||
          q.coeff.size() != core.at(ga, qx).dim() * core.at(e, ga).dim()) {
        shape = false;
        why = "Q membership at (" + lbl(el, ga) + "," + lbl(el, gb) + ")";
      }
    }
  }
  if (!shape) {
    rep.fail("qt.shape", why, "", "");
    return rep;
  }

  for (int ga = 0; ga < n; ++ga) {
    const int gi = b.inv[static_cast<std::size_t>(ga)];
    for (int gb = 0; gb < n; ++gb) {
      const std::string at = "(" + lbl(el, ga) + "," + lbl(el, gb) + ")";
      const std::size_t d2g = core.at(e, ga).dim();
      const std::size_t d2g2 = core.at(e, gb).dim();

      {
        // applying the braiding and then its inverse to a unit pair
        const int s = b.op(ga, b.op(gb, gi));
        const Elem2& r = a.r_at(ga, gb);
        const Elem2& q = a.q_at(ga, s);
        const MultTensor& m22 = core.mul(e, ga, e);
        const MultTensor& m11 = core.mul(gi, s, ga);
        Acc2 acc;
        for_terms(r, d2g, [&](int i1, int i2, const Scalar& cr) {
          for_terms(q, d2g, [&](int p1, int p2, const Scalar& cq) {
            const Scalar c = cr * cq;
            for (const Term& u :
                 m22.on_basis(static_cast<std::size_t>(i2),
                              static_cast<std::size_t>(p2)))
              for (const Term& v :
                   m11.on_basis(static_cast<std::size_t>(i1),
                                static_cast<std::size_t>(p1)))
                acc.add(c * u.c * v.c, u.i, v.i);
          });
        });
        rep.expect_eq("qt.cancel_right", at, acc.dense(f, d2g, d2g2),
                      outer(f, core.unit[static_cast<std::size_t>(ga)],
                            core.unit[static_cast<std::size_t>(gb)]));
      }
      {
        // applying the inverse and then the braiding to a unit pair
        const int gc = b.op(gi, b.op(gb, ga));
        const Elem2& q = a.q_at(ga, gb);
        const Elem2& r = a.r_at(ga, gc);
        const MultTensor& m11 = core.mul(ga, gc, gi);
        const MultTensor& m22 = core.mul(e, ga, e);
        Acc2 acc;
        for_terms(q, d2g, [&](int p1, int p2, const Scalar& cq) {
          for_terms(r, d2g, [&](int i1, int i2, const Scalar& cr) {
            const Scalar c = cq * cr;
            for (const Term& u :
                 m11.on_basis(static_cast<std::size_t>(p1),
                              static_cast<std::size_t>(i1)))
              for (const Term& v :
                   m22.on_basis(static_cast<std::size_t>(p2),
                                static_cast<std::size_t>(i2)))
                acc.add(c * u.c * v.c, u.i, v.i);
          });
        });
        rep.expect_eq("qt.cancel_left", at, acc.dense(f, d2g2, d2g),
                      outer(f, core.unit[static_cast<std::size_t>(gb)],
                            core.unit[static_cast<std::size_t>(ga)]));
      }
    }
  }

  // comultiplication applied to the first braiding leg
  for (int ga = 0; ga < n; ++ga) {
    const int gi = b.inv[static_cast<std::size_t>(ga)];
    const std::size_t d2g = core.at(e, ga).dim();
    const MultTensor& m22 = core.mul(e, ga, e);
    for (int gb = 0; gb < n; ++gb)
      for (int gc = 0; gc < n; ++gc) {
        const Elem2& rbig = a.r_at(ga, b.op(gb, gc));
        const Elem2& ra = a.r_at(ga, gb);
        const Elem2& rb = a.r_at(ga, gc);
        const CoMultTensor& dl =
            a.delta(gi, b.conj(gb, gi), b.conj(gc, gi));
        const std::size_t du = dl.left.dim(), dv = dl.right.dim();
        Acc3 lhs;
        for_terms(rbig, d2g, [&](int i1, int i2, const Scalar& c) {
          for (const Term2& t : dl.on_basis(static_cast<std::size_t>(i1)))
            lhs.add(c * t.c, t.i, t.j, i2);
        });
        Acc3 rhs;
        for_terms(ra, d2g, [&](int a1, int a2, const Scalar& c1) {
          for_terms(rb, d2g, [&](int b1, int b2, const Scalar& c2) {
            for (const Term& u : m22.on_basis(static_cast<std::size_t>(a2),
                                              static_cast<std::size_t>(b2)))
              rhs.add(c1 * c2 * u.c, a1, b1, u.i);
          });
        });
        rep.expect_eq("qt.comult_first",
                      "(" + lbl(el, ga) + ";" + lbl(el, gb) + "," +
                          lbl(el, gc) + ")",
                      lhs.dense(f, du, dv, d2g), rhs.dense(f, du, dv, d2g));
      }
  }

  // comultiplication applied to the second braiding leg
  for (int ga = 0; ga < n; ++ga)
    for (int gb = 0; gb < n; ++gb) {
      const int gab = b.op(ga, gb);
      const int gbi = b.inv[static_cast<std::size_t>(gb)];
      for (int gc = 0; gc < n; ++gc) {
        const Elem2& rbig = a.r_at(gab, gc);
        const Elem2& ra = a.r_at(gb, gc);
        const int z = b.op(gb, b.op(gc, gbi));
        const Elem2& rb = a.r_at(ga, z);
        const CoMultTensor& dl = a.delta(e, ga, gb);
        const MultTensor& m11 =
            core.mul(gbi, z, b.inv[static_cast<std::size_t>(ga)]);
        const std::size_t dgab = core.at(e, gab).dim();
        const std::size_t dga2 = core.at(e, ga).dim();
        const std::size_t dgb2 = core.at(e, gb).dim();
        const std::size_t d1 =
            core.at(b.inv[static_cast<std::size_t>(gab)],
                    b.op(gab, b.op(gc, b.inv[static_cast<std::size_t>(gab)])))
                .dim();
        Acc3 lhs;
        for_terms(rbig, dgab, [&](int i1, int i2, const Scalar& c) {
          for (const Term2& t : dl.on_basis(static_cast<std::size_t>(i2)))
            lhs.add(c * t.c, i1, t.i, t.j);
        });
        Acc3 rhs;
        for_terms(ra, dgb2, [&](int a1, int a2, const Scalar& c1) {
          for_terms(rb, dga2, [&](int b1, int b2, const Scalar& c2) {
            for (const Term& u : m11.on_basis(static_cast<std::size_t>(a1),
                                              static_cast<std::size_t>(b1)))
              rhs.add(c1 * c2 * u.c, u.i, b2, a2);
          });
        });
        rep.expect_eq("qt.comult_second",
                      "(" + lbl(el, ga) + "," + lbl(el, gb) + ";" +
                          lbl(el, gc) + ")",
                      lhs.dense(f, d1, dga2, dgb2),
                      rhs.dense(f, d1, dga2, dgb2));
      }
    }

  // the braiding elements intertwine the comultiplication with its flip
  for (int l = 0; l < n; ++l)
    for (int ga = 0; ga < n; ++ga)
      for (int gb = 0; gb < n; ++gb) {
        const int gl = b.conj(ga, l), g2l = b.conj(gb, l);
        const int gli = b.inv[static_cast<std::size_t>(gl)];
        const int gi = b.inv[static_cast<std::size_t>(ga)];
        const int xsrc = b.op(gl, g2l);
        const int s = b.op(ga, b.op(gb, gi));  // ga gb ga^-1
        const Elem2& rs = a.r_at(gl, g2l);
        const Elem2& r = a.r_at(ga, gb);
        const CoMultTensor& d_lhs = a.delta(l, gl, g2l);
        const CoMultTensor& d_rhs = a.delta(l, b.conj(s, l), gl);
        const MultTensor& m_l1 = core.mul(l, g2l, gli);
        const MultTensor& m_l2 = core.mul(l, gl, e);
        const MultTensor& m_r1 = core.mul(gi, s, l);
        const MultTensor& m_r2 = core.mul(e, ga, l);
        const std::size_t dgl2 = core.at(e, gl).dim();
        const std::size_t dga2 = core.at(e, ga).dim();
        const std::size_t dslot1 = core.at(b.op(l, gli), b.conj(g2l, gli)).dim();
        const std::size_t dslot2 = core.at(l, gl).dim();
        for (std::size_t ai = 0; ai < core.at(l, xsrc).dim(); ++ai) {
          Acc2 lhs;
          for (const Term2& t : d_lhs.on_basis(ai))
            for_terms(rs, dgl2, [&](int i1, int i2, const Scalar& c) {
              for (const Term& u : m_l1.on_basis(static_cast<std::size_t>(t.j),
                                                 static_cast<std::size_t>(i1)))
                for (const Term& v :
                     m_l2.on_basis(static_cast<std::size_t>(t.i),
                                   static_cast<std::size_t>(i2)))
                  lhs.add(t.c * c * u.c * v.c, u.i, v.i);
            });
          Acc2 rhs;
          for (const Term2& t : d_rhs.on_basis(ai))
            for_terms(r, dga2, [&](int i1, int i2, const Scalar& c) {
              for (const Term& u : m_r1.on_basis(static_cast<std::size_t>(i1),
                                                 static_cast<std::size_t>(t.i)))
                for (const Term& v :
                     m_r2.on_basis(static_cast<std::size_t>(i2),
                                   static_cast<std::size_t>(t.j)))
                  rhs.add(t.c * c * u.c * v.c, u.i, v.i);
            });
          rep.expect_eq("qt.intertwine",
                        "(" + lbl(el, l) + ";" + lbl(el, ga) + "," +
                            lbl(el, gb) + ") basis " + std::to_string(ai),
                        lhs.dense(f, dslot1, dslot2),
                        rhs.dense(f, dslot1, dslot2));
        }
      }
  return rep;
}

// ---------------------------------------------------------------------------
// crossed modules
// ---------------------------------------------------------------------------

const CoMultTensor& YDModule::rho(int vi, int g) const {
  auto it = coaction.find({vi, g});
  if (it == coaction.end())
    throw Error("MissingCoaction", "no coaction at key (" + std::to_string(vi) +
                                       "," + std::to_string(g) + ")");
  return it->second;
}

ValidationReport check_yd_module(const YDModule& m) {
  ValidationReport rep;
  rep.merge(validate_crossed_gset(m.v));
  if (!rep.ok()) return rep;
  const HopfGC& h = m.h;
  const Field& f = h.field;
  const FiniteGroup& b = m.v.group;
  const int n = static_cast<int>(b.size());
  const int nv = static_cast<int>(m.v.size());
  const int e = b.identity();

  rep.count("yd.shape");
  bool shape = h.grading == b.monoid && h.inv == b.inv &&
               m.comp.size() == static_cast<std::size_t>(nv) &&
               m.action.size() == static_cast<std::size_t>(nv) &&
               m.coaction.size() ==
                   static_cast<std::size_t>(nv) * static_cast<std::size_t>(n);
  std::string why = shape ? "" : "family grading or table sizes";
  for (int v = 0; v < nv && shape; ++v) {
    const MultTensor& act = m.act(v);
    if (act.u != m.at(v) || act.v != h.at(m.v.nu[static_cast<std::size_t>(v)]) ||
        act.w != m.at(v)) {
      shape = false;
      why = "action spaces at point " + lbl(m.v.carrier, v);
    }
  }
  for (const auto& [key, t] : m.coaction) {
    if (!shape) break;
    const auto& [v, g] = key;
    if (v < 0 || v >= nv || g < 0 || g >= n) {
      shape = false;
      why = "coaction key out of range";
      break;
    }
    if (t.src != m.at(m.v.act(v, g)) || t.left != m.at(v) ||
        t.right != h.at(g)) {
      shape = false;
      why = "coaction spaces at (" + lbl(m.v.carrier, v) + "," +
            lbl(b.monoid.elements, g) + ")";
    }
  }
  if (!shape) {
    rep.fail("yd.shape", why, "", "");
    return rep;
  }

  for (int v = 0; v < nv; ++v) {
    const int nu = m.v.nu[static_cast<std::size_t>(v)];
    const MultTensor& act = m.act(v);
    const std::size_t dm = m.at(v).dim();
    const std::size_t dh = h.at(nu).dim();
    const std::string pt = "point " + lbl(m.v.carrier, v);
    for (std::size_t mi = 0; mi < dm; ++mi)
      rep.expect_eq("yd.action_unit", pt + " basis " + std::to_string(mi),
                    act.apply(f, basis_vec(f, dm, mi),
                              h.unit[static_cast<std::size_t>(nu)]),
                    basis_vec(f, dm, mi));
    for (std::size_t mi = 0; mi < dm; ++mi)
      for (std::size_t ai = 0; ai < dh; ++ai)
        for (std::size_t bi = 0; bi < dh; ++bi) {
          Vec lhs = zero_vec(f, dm), rhs = zero_vec(f, dm);
          for (const Term& t1 : act.on_basis(mi, ai))
            for (const Term& t2 :
                 act.on_basis(static_cast<std::size_t>(t1.i), bi))
              lhs[static_cast<std::size_t>(t2.i)] += t1.c * t2.c;
          for (const Term& tm :
               h.mult[static_cast<std::size_t>(nu)].on_basis(ai, bi))
            for (const Term& t : act.on_basis(mi, static_cast<std::size_t>(tm.i)))
              rhs[static_cast<std::size_t>(t.i)] += tm.c * t.c;
          rep.expect_eq("yd.action_assoc",
                        pt + " basis (" + std::to_string(mi) + "," +
                            std::to_string(ai) + "," + std::to_string(bi) + ")",
                        lhs, rhs);
        }
  }

  for (int v = 0; v < nv; ++v) {
    const CoMultTensor& r = m.rho(v, e);
    const std::size_t dm = m.at(v).dim();
    for (std::size_t mi = 0; mi < dm; ++mi) {
      Vec out = zero_vec(f, dm);
      for (const Term2& t : r.on_basis(mi))
        out[static_cast<std::size_t>(t.i)] +=
            t.c * h.counit[static_cast<std::size_t>(t.j)];
      rep.expect_eq("yd.coaction_counit",
                    "point " + lbl(m.v.carrier, v) + " basis " +
                        std::to_string(mi),
                    out, basis_vec(f, dm, mi));
    }
  }

  for (int v = 0; v < nv; ++v)
    for (int ga = 0; ga < n; ++ga)
      for (int gb = 0; gb < n; ++gb) {
        const int vg = m.v.act(v, ga);
        const int w = m.v.act(vg, gb);
        const std::size_t d0 = m.at(v).dim();
        const std::size_t d1 = h.at(ga).dim(), d2 = h.at(gb).dim();
        const CoMultTensor& inner = m.rho(vg, gb);
        const CoMultTensor& outer_r = m.rho(v, ga);
        const CoMultTensor& whole = m.rho(v, b.op(ga, gb));
        for (std::size_t mi = 0; mi < m.at(w).dim(); ++mi) {
          Acc3 lhs, rhs;
          for (const Term2& t : inner.on_basis(mi))
            for (const Term2& t2 :
                 outer_r.on_basis(static_cast<std::size_t>(t.i)))
              lhs.add(t.c * t2.c, t2.i, t2.j, t.j);
          for (const Term2& t : whole.on_basis(mi))
            for (const Term2& s : split2(h, ga, gb, t.j))
              rhs.add(t.c * s.c, t.i, s.i, s.j);
          rep.expect_eq("yd.coaction_coassoc",
                        "point " + lbl(m.v.carrier, v) + " split (" +
                            lbl(b.monoid.elements, ga) + "," +
                            lbl(b.monoid.elements, gb) + ") basis " +
                            std::to_string(mi),
                        lhs.dense(f, d0, d1, d2), rhs.dense(f, d0, d1, d2));
        }
      }

  for (int ga = 0; ga < n; ++ga) {
    const int gi = b.inv[static_cast<std::size_t>(ga)];
    const auto scols = columns(h.antipode[static_cast<std::size_t>(ga)]);
    const MultTensor& hm = h.mult[static_cast<std::size_t>(ga)];
    for (int v = 0; v < nv; ++v) {
      const int vg = m.v.act(v, ga);
      const int nu = m.v.nu[static_cast<std::size_t>(v)];
      const int nuvg = m.v.nu[static_cast<std::size_t>(vg)];
      const CoMultTensor& r = m.rho(v, ga);
      const MultTensor& act_vg = m.act(vg);
      const MultTensor& act_v = m.act(v);
      const std::size_t d0 = m.at(v).dim();
      const std::size_t dhg = h.at(ga).dim();
      for (std::size_t mi = 0; mi < m.at(vg).dim(); ++mi)
        for (std::size_t hi = 0; hi < h.at(nuvg).dim(); ++hi) {
          Acc2 lhs, rhs;
          for (const Term& t1 : act_vg.on_basis(mi, hi))
            for (const Term2& t2 :
                 r.on_basis(static_cast<std::size_t>(t1.i)))
              lhs.add(t1.c * t2.c, t2.i, t2.j);
          for (const Term3& s :
               split3(h, gi, nu, ga, static_cast<int>(hi)))
            for (const auto& [sr, sc] : scols[static_cast<std::size_t>(s.i)])
              for (const Term2& t0 : r.on_basis(mi))
                for (const Term& ta :
                     act_v.on_basis(static_cast<std::size_t>(t0.i),
                                    static_cast<std::size_t>(s.j)))
                  for (const Term& u1 :
                       hm.on_basis(static_cast<std::size_t>(sr),
                                   static_cast<std::size_t>(t0.j)))
                    for (const Term& u2 :
                         hm.on_basis(static_cast<std::size_t>(u1.i),
                                     static_cast<std::size_t>(s.k)))
                      rhs.add(s.c * sc * t0.c * ta.c * u1.c * u2.c, ta.i,
                              u2.i);
          rep.expect_eq("yd.compat",
                        "point " + lbl(m.v.carrier, v) + " direction " +
                            lbl(b.monoid.elements, ga) + " basis (" +
                            std::to_string(mi) + "," + std::to_string(hi) +
                            ")",
                        lhs.dense(f, d0, dhg), rhs.dense(f, d0, dhg));
        }
    }
  }
  return rep;
}

DoiHopfModule yd_as_doihopf(const YDModule& m) {
  const GDatum gd = make_crossed_datum(m.v.group);
  DoiHopfModule out;
  out.y = datum_set_from_crossed(gd, m.v);
  out.comp = m.comp;
  out.action = m.action;
  out.coaction = m.coaction;
  return out;
}

YDModule doihopf_as_yd(const HopfGC& h, const DoiHopfModule& m) {
  YDModule out;
  out.h = h.has_twisted() ? h : derive_twisted_antipode(h);
  const GDatum gd = make_crossed_datum(group_of(out.h));
  out.v = crossed_from_datum_set(gd, m.y);
  out.comp = m.comp;
  out.action = m.action;
  out.coaction = m.coaction;
  return out;
}

GradedModule yd_to_graded(const YDModule& m) {
  return functor_tz(double_datum(m.h), yd_as_doihopf(m));
}

YDModule graded_to_yd(const HopfGC& h, const GradedModule& m) {
  return doihopf_as_yd(h, inverse_functor(double_datum(h), m));
}

YDModule yd_tensor(const YDModule& m, const YDModule& n) {
  const HopfGC& h = m.h;
  const FiniteGroup& b = m.v.group;
  const int ng = static_cast<int>(b.size());
  const int nm = static_cast<int>(m.v.size());
  const int nn = static_cast<int>(n.v.size());

  YDModule out;
  out.h = h;
  out.v = product_crossed_gset(m.v, n.v);
  for (int p = 0; p < nm; ++p)
    for (int q = 0; q < nn; ++q)
      out.comp.push_back(tensor_space(m.at(p), n.at(q)));

  for (int p = 0; p < nm; ++p) {
    const int num = m.v.nu[static_cast<std::size_t>(p)];
    for (int q = 0; q < nn; ++q) {
      const int nun = n.v.nu[static_cast<std::size_t>(q)];
      const int pq = p * nn + q;
      const int nupq = out.v.nu[static_cast<std::size_t>(pq)];
      const Space& sp = out.comp[static_cast<std::size_t>(pq)];
      const std::size_t dm = m.at(p).dim(), dn = n.at(q).dim();
      MultTensor act{sp, h.at(nupq), sp, {}};
      std::map<std::tuple<int, int, int>, Scalar> acc;
      for (std::size_t hi = 0; hi < h.at(nupq).dim(); ++hi) {
        const auto terms = split2(h, num, nun, static_cast<int>(hi));
        for (std::size_t mi = 0; mi < dm; ++mi)
          for (std::size_t ni = 0; ni < dn; ++ni)
            for (const Term2& s : terms)
              for (const Term& t1 :
                   m.act(p).on_basis(mi, static_cast<std::size_t>(s.i)))
                for (const Term& t2 :
                     n.act(q).on_basis(ni, static_cast<std::size_t>(s.j)))
                  add_entry(acc,
                            {static_cast<int>(flat(mi, ni, dn)),
                             static_cast<int>(hi),
                             static_cast<int>(
                                 flat(static_cast<std::size_t>(t1.i),
                                      static_cast<std::size_t>(t2.i), dn))},
                            s.c * t1.c * t2.c);
      }
      act.entries = std::move(acc);
      out.action.push_back(std::move(act));
    }
  }

  for (int p = 0; p < nm; ++p)
    for (int q = 0; q < nn; ++q) {
      const int pq = p * nn + q;
      const std::size_t dn = n.at(q).dim();
      for (int g = 0; g < ng; ++g) {
        const int ps = m.v.act(p, g), qs = n.v.act(q, g);
        const int src = ps * nn + qs;
        const std::size_t dns = n.at(qs).dim();
        const CoMultTensor& rm = m.rho(p, g);
        const CoMultTensor& rn = n.rho(q, g);
        CoMultTensor rho{out.comp[static_cast<std::size_t>(src)],
                         out.comp[static_cast<std::size_t>(pq)], h.at(g), {}};
        std::map<std::tuple<int, int, int>, Scalar> acc;
        for (std::size_t mi = 0; mi < m.at(ps).dim(); ++mi)
          for (std::size_t ni = 0; ni < dns; ++ni) {
            const int s = static_cast<int>(flat(mi, ni, dns));
            for (const Term2& ta : rm.on_basis(mi))
              for (const Term2& tb : rn.on_basis(ni))
                for (const Term& tm : h.mult[static_cast<std::size_t>(g)]
                                          .on_basis(static_cast<std::size_t>(ta.j),
                                                    static_cast<std::size_t>(tb.j)))
                  add_entry(acc,
                            {s,
                             static_cast<int>(
                                 flat(static_cast<std::size_t>(ta.i),
                                      static_cast<std::size_t>(tb.i), dn)),
                             tm.i},
                            ta.c * tb.c * tm.c);
          }
        rho.entries = std::move(acc);
        out.coaction.emplace(std::make_pair(pq, g), std::move(rho));
      }
    }
  return out;
}

YDModule yd_unit(const HopfGC& h) {
  YDModule out;
  out.h = h.has_twisted() ? h : derive_twisted_antipode(h);
  const FiniteGroup b = group_of(out.h);
  const int n = static_cast<int>(b.size());
  const int e = b.identity();
  out.v.group = b;
  out.v.carrier = {"*"};
  out.v.action = {std::vector<int>(static_cast<std::size_t>(n), 0)};
  out.v.nu = {e};
  const Space k{"k", {"1"}};
  out.comp = {k};
  MultTensor act{k, out.h.at(e), k, {}};
  for (std::size_t j = 0; j < out.h.at(e).dim(); ++j)
    if (!out.h.counit[j].is_zero())
      act.entries[{0, static_cast<int>(j), 0}] = out.h.counit[j];
  out.action = {act};
  for (int g = 0; g < n; ++g) {
    CoMultTensor rho{k, k, out.h.at(g), {}};
    const Vec& u = out.h.unit[static_cast<std::size_t>(g)];
    for (std::size_t j = 0; j < u.size(); ++j)
      if (!u[j].is_zero()) rho.entries[{0, 0, static_cast<int>(j)}] = u[j];
    out.coaction.emplace(std::make_pair(0, g), std::move(rho));
  }
  return out;
}

GradedModule graded_module_tensor(const GradedBialgebra& a,
                                  const GradedModule& p,
                                  const GradedModule& q) {
  const GradedAlgebra& core = a.core;
  const GDatum gd = as_gdatum(core.datum);
  const int n = static_cast<int>(gd.n());
  const int np = static_cast<int>(p.y.size());
  const int nq = static_cast<int>(q.y.size());

  GradedModule out;
  out.alg = core;
  out.y = datum_set_from_crossed(
      gd, product_crossed_gset(crossed_from_datum_set(gd, p.y),
                               crossed_from_datum_set(gd, q.y)));
  for (int vp = 0; vp < np; ++vp)
    for (int vq = 0; vq < nq; ++vq)
      out.comp.push_back(tensor_space(p.at(vp), q.at(vq)));

  for (int vp = 0; vp < np; ++vp) {
    const int bp = p.y.beta[static_cast<std::size_t>(vp)];
    for (int vq = 0; vq < nq; ++vq) {
      const int bq = q.y.beta[static_cast<std::size_t>(vq)];
      const int pq = vp * nq + vq;
      const std::size_t dnq = q.at(vq).dim();
      for (int l = 0; l < n; ++l) {
        const int vpl = p.y.act(vp, l), vql = q.y.act(vq, l);
        const int tgt = vpl * nq + vql;
        const std::size_t dq_out = q.at(vql).dim();
        const int betal = gd.base.conj(gd.base.op(bp, bq), l);
        const CoMultTensor& dl =
            a.delta(l, gd.base.conj(bp, l), gd.base.conj(bq, l));
        const MultTensor& actp = p.act(vp, l);
        const MultTensor& actq = q.act(vq, l);
        MultTensor act{out.comp[static_cast<std::size_t>(pq)],
                       core.at(l, betal),
                       out.comp[static_cast<std::size_t>(tgt)], {}};
        std::map<std::tuple<int, int, int>, Scalar> acc;
        for (std::size_t ai = 0; ai < core.at(l, betal).dim(); ++ai) {
          const auto terms = dl.on_basis(ai);
          for (std::size_t mi = 0; mi < p.at(vp).dim(); ++mi)
            for (std::size_t ni = 0; ni < dnq; ++ni)
              for (const Term2& s : terms)
                for (const Term& t1 :
                     actp.on_basis(mi, static_cast<std::size_t>(s.i)))
                  for (const Term& t2 :
                       actq.on_basis(ni, static_cast<std::size_t>(s.j)))
                    add_entry(
                        acc,
                        {static_cast<int>(flat(mi, ni, dnq)),
                         static_cast<int>(ai),
                         static_cast<int>(
                             flat(static_cast<std::size_t>(t1.i),
                                  static_cast<std::size_t>(t2.i), dq_out))},
                        s.c * t1.c * t2.c);
        }
        act.entries = std::move(acc);
        out.action.emplace(std::make_pair(pq, l), std::move(act));
      }
    }
  }
  return out;
}

GradedModule graded_unit_module(const GradedBialgebra& a) {
  const GradedAlgebra& core = a.core;
  const GDatum gd = as_gdatum(core.datum);
  const int n = static_cast<int>(gd.n());
  const int e = gd.base.identity();

  GradedModule out;
  out.alg = core;
  out.y.carrier = {"*"};
  out.y.action = {std::vector<int>(static_cast<std::size_t>(n), 0)};
  out.y.beta = {e};
  const Space k{"k", {"1"}};
  out.comp = {k};
  for (int l = 0; l < n; ++l) {
    MultTensor act{k, core.at(l, e), k, {}};
    const Vec& eps = a.eps(l);
    for (std::size_t s = 0; s < eps.size(); ++s)
      if (!eps[s].is_zero()) act.entries[{0, static_cast<int>(s), 0}] = eps[s];
    out.action.emplace(std::make_pair(0, l), std::move(act));
  }
  return out;
}

bool same_yd_module(const YDModule& a, const YDModule& b) {
  const auto same_hopf = [](const HopfGC& x, const HopfGC& y) {
    return x.field == y.field && x.grading == y.grading && x.comp == y.comp &&
           x.comult == y.comult && x.counit == y.counit && x.mult == y.mult &&
           x.unit == y.unit && x.inv == y.inv && x.antipode == y.antipode;
  };
  return same_hopf(a.h, b.h) && a.v.group.monoid == b.v.group.monoid &&
         a.v.group.inv == b.v.group.inv && a.v.carrier == b.v.carrier &&
         a.v.action == b.v.action && a.v.nu == b.v.nu && a.comp == b.comp &&
         a.action == b.action && a.coaction == b.coaction;
}

// ---------------------------------------------------------------------------
// braidings
// ---------------------------------------------------------------------------

Braiding yd_braiding(const YDModule& m, const YDModule& n) {
  const HopfGC h = m.h.has_twisted() ? m.h : derive_twisted_antipode(m.h);
  const FiniteGroup& b = m.v.group;
  const int nm = static_cast<int>(m.v.size());
  const int nn = static_cast<int>(n.v.size());

  Braiding out;
  for (int p = 0; p < nm; ++p) {
    const int g = m.v.nu[static_cast<std::size_t>(p)];
    const int gi = b.inv[static_cast<std::size_t>(g)];
    const auto tw = columns(h.antipode_tw[static_cast<std::size_t>(g)]);
    const MultTensor& actp = m.act(p);
    const std::size_t dm = m.at(p).dim();
    for (int q = 0; q < nn; ++q) {
      {
        const int qo = n.v.act(q, gi);
        const std::size_t dn = n.at(q).dim();
        const CoMultTensor& r = n.rho(qo, g);
        LinMap mp{tensor_space(m.at(p), n.at(q)),
                  tensor_space(n.at(qo), m.at(p)), {}};
        for (std::size_t mi = 0; mi < dm; ++mi)
          for (std::size_t ni = 0; ni < dn; ++ni) {
            const int col = static_cast<int>(flat(mi, ni, dn));
            for (const Term2& t : r.on_basis(ni))
              for (const Term& ta :
                   actp.on_basis(mi, static_cast<std::size_t>(t.j))) {
                const Scalar c = t.c * ta.c;
                if (c.is_zero()) continue;
                auto& cell =
                    mp.entries[{static_cast<int>(
                                    flat(static_cast<std::size_t>(t.i),
                                         static_cast<std::size_t>(ta.i), dm)),
                                col}];
                cell += c;
                if (cell.is_zero())
                  mp.entries.erase(
                      {static_cast<int>(flat(static_cast<std::size_t>(t.i),
                                             static_cast<std::size_t>(ta.i),
                                             dm)),
                       col});
              }
          }
        out.fwd.emplace(std::make_pair(p, q), std::move(mp));
      }
      {
        const int qg = n.v.act(q, g);
        const std::size_t dn = n.at(q).dim();
        const std::size_t dno = n.at(qg).dim();
        const CoMultTensor& r = n.rho(qg, gi);
        LinMap mp{tensor_space(n.at(q), m.at(p)),
                  tensor_space(m.at(p), n.at(qg)), {}};
        for (std::size_t ni = 0; ni < dn; ++ni)
          for (std::size_t mi = 0; mi < dm; ++mi) {
            const int col = static_cast<int>(flat(ni, mi, dm));
            for (const Term2& t : r.on_basis(ni))
              for (const auto& [sr, sc] : tw[static_cast<std::size_t>(t.j)])
                for (const Term& ta :
                     actp.on_basis(mi, static_cast<std::size_t>(sr))) {
                  const Scalar c = t.c * sc * ta.c;
                  if (c.is_zero()) continue;
                  const int row = static_cast<int>(
                      flat(static_cast<std::size_t>(ta.i),
                           static_cast<std::size_t>(t.i), dno));
                  auto& cell = mp.entries[{row, col}];
                  cell += c;
                  if (cell.is_zero()) mp.entries.erase({row, col});
                }
          }
        out.inv.emplace(std::make_pair(q, p), std::move(mp));
      }
    }
  }
  return out;
}

ValidationReport check_yd_braiding(const YDModule& m, const YDModule& n,
                                   const Braiding& b) {
  ValidationReport rep;
  const Field& f = m.h.field;
  const FiniteGroup& bg = m.v.group;
  const int nm = static_cast<int>(m.v.size());
  const int nn = static_cast<int>(n.v.size());

  rep.count("braiding.shape");
  bool shape = b.fwd.size() ==
                   static_cast<std::size_t>(nm) * static_cast<std::size_t>(nn) &&
               b.inv.size() == b.fwd.size();
  std::string why = shape ? "" : "map table sizes";
  for (int p = 0; p < nm && shape; ++p) {
    const int g = m.v.nu[static_cast<std::size_t>(p)];
    const int gi = bg.inv[static_cast<std::size_t>(g)];
    for (int q = 0; q < nn && shape; ++q) {
      auto itf = b.fwd.find({p, q});
      auto iti = b.inv.find({q, p});
      if (itf == b.fwd.end() || iti == b.inv.end()) {
        shape = false;
        why = "missing map at (" + lbl(m.v.carrier, p) + "," +
              lbl(n.v.carrier, q) + ")";
        break;
      }
      if (itf->second.domain != tensor_space(m.at(p), n.at(q)) ||
          itf->second.codomain !=
              tensor_space(n.at(n.v.act(q, gi)), m.at(p)) ||
          iti->second.domain != tensor_space(n.at(q), m.at(p)) ||
          iti->second.codomain !=
              tensor_space(m.at(p), n.at(n.v.act(q, g)))) {
        shape = false;
        why = "map spaces at (" + lbl(m.v.carrier, p) + "," +
              lbl(n.v.carrier, q) + ")";
      }
    }
  }
  if (!shape) {
    rep.fail("braiding.shape", why, "", "");
    return rep;
  }

  for (int p = 0; p < nm; ++p) {
    const int g = m.v.nu[static_cast<std::size_t>(p)];
    const int gi = bg.inv[static_cast<std::size_t>(g)];
    for (int q = 0; q < nn; ++q) {
      const std::string at =
          "(" + lbl(m.v.carrier, p) + "," + lbl(n.v.carrier, q) + ")";
      {
        const LinMap& fw = b.fwd.at({p, q});
        const LinMap& bw = b.inv.at({n.v.act(q, gi), p});
        rep.expect_true("braiding.inverse_right", at,
                        compose(f, bw, fw) == identity_map(fw.domain, f),
                        "inverse after forward is not the identity");
      }
      {
        const LinMap& bw = b.inv.at({q, p});
        const LinMap& fw = b.fwd.at({p, n.v.act(q, g)});
        rep.expect_true("braiding.inverse_left", at,
                        compose(f, fw, bw) == identity_map(bw.domain, f),
                        "forward after inverse is not the identity");
      }
    }
  }
  return rep;
}

Braiding braiding_from_r(const GradedBialgebra& a, const GradedModule& p,
                         const GradedModule& q) {
  const GradedAlgebra& core = a.core;
  const GDatum gd = as_gdatum(core.datum);
  const int e = gd.base.identity();
  const int np = static_cast<int>(p.y.size());
  const int nq = static_cast<int>(q.y.size());

  Braiding out;
  for (int vp = 0; vp < np; ++vp) {
    const int g = p.y.beta[static_cast<std::size_t>(vp)];
    const int gi = gd.base.inv[static_cast<std::size_t>(g)];
    const std::size_t d2 = core.at(e, g).dim();
    const MultTensor& actm = p.act(vp, e);
    const std::size_t dm = p.at(vp).dim();
    for (int vq = 0; vq < nq; ++vq) {
      const int gp = q.y.beta[static_cast<std::size_t>(vq)];
      {
        const Elem2& r = a.r_at(g, gp);
        const int vqo = q.y.act(vq, gi);
        const std::size_t dn = q.at(vq).dim();
        const MultTensor& actn = q.act(vq, gi);
        LinMap mp{tensor_space(p.at(vp), q.at(vq)),
                  tensor_space(q.at(vqo), p.at(vp)), {}};
        std::map<std::pair<int, int>, Scalar> acc;
        for (std::size_t mi = 0; mi < dm; ++mi)
          for (std::size_t ni = 0; ni < dn; ++ni) {
            const int col = static_cast<int>(flat(mi, ni, dn));
            for_terms(r, d2, [&](int i1, int i2, const Scalar& c) {
              for (const Term& t1 :
                   actn.on_basis(ni, static_cast<std::size_t>(i1)))
                for (const Term& t2 :
                     actm.on_basis(mi, static_cast<std::size_t>(i2))) {
                  auto key = std::make_pair(
                      static_cast<int>(flat(static_cast<std::size_t>(t1.i),
                                            static_cast<std::size_t>(t2.i),
                                            dm)),
                      col);
                  auto it = acc.find(key);
                  if (it == acc.end())
                    acc.emplace(key, c * t1.c * t2.c);
                  else
                    it->second += c * t1.c * t2.c;
                }
            });
          }
        for (const auto& [k, c] : acc)
          if (!c.is_zero()) mp.entries.emplace(k, c);
        out.fwd.emplace(std::make_pair(vp, vq), std::move(mp));
      }
      {
        const Elem2& qe = a.q_at(g, gp);
        const int vqg = q.y.act(vq, g);
        const std::size_t dn = q.at(vq).dim();
        const std::size_t dno = q.at(vqg).dim();
        const MultTensor& actn = q.act(vq, g);
        LinMap mp{tensor_space(q.at(vq), p.at(vp)),
                  tensor_space(p.at(vp), q.at(vqg)), {}};
        std::map<std::pair<int, int>, Scalar> acc;
        for (std::size_t ni = 0; ni < dn; ++ni)
          for (std::size_t mi = 0; mi < dm; ++mi) {
            const int col = static_cast<int>(flat(ni, mi, dm));
            for_terms(qe, d2, [&](int i1, int i2, const Scalar& c) {
              for (const Term& t2 :
                   actm.on_basis(mi, static_cast<std::size_t>(i2)))
                for (const Term& t1 :
                     actn.on_basis(ni, static_cast<std::size_t>(i1))) {
                  auto key = std::make_pair(
                      static_cast<int>(flat(static_cast<std::size_t>(t2.i),
                                            static_cast<std::size_t>(t1.i),
                                            dno)),
                      col);
                  auto it = acc.find(key);
                  if (it == acc.end())
                    acc.emplace(key, c * t1.c * t2.c);
                  else
                    it->second += c * t1.c * t2.c;
                }
            });
          }
        for (const auto& [k, c] : acc)
          if (!c.is_zero()) mp.entries.emplace(k, c);
        out.inv.emplace(std::make_pair(vq, vp), std::move(mp));
      }
    }
  }
  return out;
}

ValidationReport check_graded_braiding(const GradedModule& p,
                                       const GradedModule& q,
                                       const Braiding& b) {
  ValidationReport rep;
  const Field& f = p.alg.field;
  const GDatum gd = as_gdatum(p.alg.datum);
  const int np = static_cast<int>(p.y.size());
  const int nq = static_cast<int>(q.y.size());

  rep.count("braiding.shape");
  bool shape = b.fwd.size() ==
                   static_cast<std::size_t>(np) * static_cast<std::size_t>(nq) &&
               b.inv.size() == b.fwd.size();
  std::string why = shape ? "" : "map table sizes";
  for (int vp = 0; vp < np && shape; ++vp) {
    const int g = p.y.beta[static_cast<std::size_t>(vp)];
    const int gi = gd.base.inv[static_cast<std::size_t>(g)];
    for (int vq = 0; vq < nq && shape; ++vq) {
      auto itf = b.fwd.find({vp, vq});
      auto iti = b.inv.find({vq, vp});
      if (itf == b.fwd.end() || iti == b.inv.end()) {
        shape = false;
        why = "missing map at (" + lbl(p.y.carrier, vp) + "," +
              lbl(q.y.carrier, vq) + ")";
        break;
      }
      if (itf->second.domain != tensor_space(p.at(vp), q.at(vq)) ||
          itf->second.codomain !=
              tensor_space(q.at(q.y.act(vq, gi)), p.at(vp)) ||
          iti->second.domain != tensor_space(q.at(vq), p.at(vp)) ||
          iti->second.codomain !=
              tensor_space(p.at(vp), q.at(q.y.act(vq, g)))) {
        shape = false;
        why = "map spaces at (" + lbl(p.y.carrier, vp) + "," +
              lbl(q.y.carrier, vq) + ")";
      }
    }
  }
  if (!shape) {
    rep.fail("braiding.shape", why, "", "");
    return rep;
  }

  for (int vp = 0; vp < np; ++vp) {
    const int g = p.y.beta[static_cast<std::size_t>(vp)];
    const int gi = gd.base.inv[static_cast<std::size_t>(g)];
    for (int vq = 0; vq < nq; ++vq) {
      const std::string at =
          "(" + lbl(p.y.carrier, vp) + "," + lbl(q.y.carrier, vq) + ")";
      {
        const LinMap& fw = b.fwd.at({vp, vq});
        const LinMap& bw = b.inv.at({q.y.act(vq, gi), vp});
        rep.expect_true("braiding.inverse_right", at,
                        compose(f, bw, fw) == identity_map(fw.domain, f),
                        "inverse after forward is not the identity");
      }
      {
        const LinMap& bw = b.inv.at({vq, vp});
        const LinMap& fw = b.fwd.at({vp, q.y.act(vq, g)});
        rep.expect_true("braiding.inverse_left", at,
                        compose(f, fw, bw) == identity_map(bw.domain, f),
                        "forward after inverse is not the identity");
      }
    }
  }
  return rep;
}

std::pair<std::map<std::pair<int, int>, Elem2>,
          std::map<std::pair<int, int>, Elem2>>
extract_rq_from_braiding(const GradedAlgebra& core, const Braiding& b) {
  const GDatum gd = as_gdatum(core.datum);
  const Field& f = core.field;
  const int n = static_cast<int>(gd.n());
  const int e = gd.base.identity();
  const auto pt = [&](int g) { return e * n + g; };

  std::map<std::pair<int, int>, Elem2> rmat, qmat;
  for (int g = 0; g < n; ++g) {
    const int gi = gd.base.inv[static_cast<std::size_t>(g)];
    for (int g2 = 0; g2 < n; ++g2) {
      {
        const int x1 = gd.base.op(g, gd.base.op(g2, gi));
        const LinMap& fw = b.fwd.at({pt(g), pt(g2)});
        Elem2 r{gi, x1, e, g,
                fw.apply(f, outer(f, core.unit[static_cast<std::size_t>(g)],
                                  core.unit[static_cast<std::size_t>(g2)]))};
        rmat.emplace(std::make_pair(g, g2), std::move(r));
      }
      {
        const int x1 = gd.base.op(gi, gd.base.op(g2, g));
        const LinMap& bw = b.inv.at({pt(g2), pt(g)});
        const Vec out =
            bw.apply(f, outer(f, core.unit[static_cast<std::size_t>(g2)],
                              core.unit[static_cast<std::size_t>(g)]));
        const std::size_t d1 = core.at(g, x1).dim();
        const std::size_t d2 = core.at(e, g).dim();
        Elem2 q{g, x1, e, g, zero_vec(f, d1 * d2)};
        for (std::size_t i1 = 0; i1 < d1; ++i1)
          for (std::size_t i2 = 0; i2 < d2; ++i2)
            q.coeff[flat(i1, i2, d2)] = out[flat(i2, i1, d1)];
        qmat.emplace(std::make_pair(g, g2), std::move(q));
      }
    }
  }
  return {std::move(rmat), std::move(qmat)};
}

}  // namespace hgc
