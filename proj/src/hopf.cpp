#include "hgc/hopf.hpp"

#include <tuple>

#include "hgc/accum.hpp"

namespace hgc {

namespace {

std::string wit1(const FiniteMonoid& m, int g, const Space& s, int h) {
  return "g=" + m.elements.at(g) + ", h=" + s.basis.at(h);
}

std::string wit_pair(const FiniteMonoid& m, int g1, int g2) {
  return "(" + m.elements.at(g1) + "," + m.elements.at(g2) + ")";
}

/// Structural conformance of one family-of-comultiplications entry.
bool delta_shape_ok(const GroupCoalgebra& c, int g1, int g2) {
  auto it = c.comult.find({g1, g2});
  if (it == c.comult.end()) return false;
  const CoMultTensor& d = it->second;
  return d.src == c.at(c.grading.op(g1, g2)) && d.left == c.at(g1) &&
         d.right == c.at(g2);
}

}  // namespace

const CoMultTensor& GroupCoalgebra::delta(int g1, int g2) const {
  auto it = comult.find({g1, g2});
  if (it == comult.end())
    throw Error("MissingComultiplication",
                "no component for (" + grading.elements.at(g1) + "," +
                    grading.elements.at(g2) + ")");
  return it->second;
}

std::vector<Term2> split2(const GroupCoalgebra& c, int g1, int g2, int h) {
  return c.delta(g1, g2).on_basis(static_cast<std::size_t>(h));
}

std::vector<Term3> split3(const GroupCoalgebra& c, int g1, int g2, int g3,
                          int h) {
  std::vector<Term3> out;
  const CoMultTensor& inner = c.delta(g2, g3);
  for (const Term2& t : split2(c, g1, c.grading.op(g2, g3), h))
    for (const Term2& s : inner.on_basis(static_cast<std::size_t>(t.j)))
      out.push_back({t.c * s.c, t.i, s.i, s.j});
  return out;
}

ValidationReport check_group_coalgebra(const GroupCoalgebra& c) {
  ValidationReport r;
  r.merge(validate_monoid(c.grading));
  const int n = static_cast<int>(c.grading.size());

  r.count("gc.shape");
  bool shape_ok = static_cast<int>(c.comp.size()) == n;
  if (shape_ok) {
    try {
      for (const Space& s : c.comp) validate_space(s);
    } catch (const Error&) {
      shape_ok = false;
    }
    if (c.counit.size() != c.at(c.grading.identity).dim()) shape_ok = false;
    for (int g1 = 0; g1 < n && shape_ok; ++g1)
      for (int g2 = 0; g2 < n && shape_ok; ++g2)
        if (!delta_shape_ok(c, g1, g2)) shape_ok = false;
  }
  if (!shape_ok) {
    r.fail("gc.shape", "component/comultiplication tables",
           "conforming spaces for every pair", "");
    return r;
  }
  if (!r.ok()) return r;

  const Field& f = c.field;
  for (int g1 = 0; g1 < n; ++g1)
    for (int g2 = 0; g2 < n; ++g2)
      for (int g3 = 0; g3 < n; ++g3) {
        const Space& src = c.at(c.grading.op(c.grading.op(g1, g2), g3));
        const CoMultTensor& d23 = c.delta(g2, g3);
        const CoMultTensor& d12 = c.delta(g1, g2);
        const CoMultTensor& d1_23 = c.delta(g1, c.grading.op(g2, g3));
        const CoMultTensor& d12_3 = c.delta(c.grading.op(g1, g2), g3);
        for (std::size_t h = 0; h < src.dim(); ++h) {
          Acc3 lhs, rhs;
          for (const Term2& t : d1_23.on_basis(h))
            for (const Term2& s : d23.on_basis(static_cast<std::size_t>(t.j)))
              lhs.add(t.c * s.c, t.i, s.i, s.j);
          for (const Term2& t : d12_3.on_basis(h))
            for (const Term2& s : d12.on_basis(static_cast<std::size_t>(t.i)))
              rhs.add(t.c * s.c, s.i, s.j, t.j);
          r.expect_eq(
              "gc.coassoc",
              wit_pair(c.grading, g1, g2) + "," + c.grading.elements.at(g3) +
                  "; " + src.basis.at(h),
              lhs.dense(f, c.at(g1).dim(), c.at(g2).dim(), c.at(g3).dim()),
              rhs.dense(f, c.at(g1).dim(), c.at(g2).dim(), c.at(g3).dim()));
        }
      }

  const int e = c.grading.identity;
  for (int g = 0; g < n; ++g) {
    const Space& s = c.at(g);
    for (std::size_t h = 0; h < s.dim(); ++h) {
      Vec left = zero_vec(f, s.dim());
      for (const Term2& t : c.delta(e, g).on_basis(h))
        left[t.j] += c.counit.at(t.i) * t.c;
      Vec right = zero_vec(f, s.dim());
      for (const Term2& t : c.delta(g, e).on_basis(h))
        right[t.i] += c.counit.at(t.j) * t.c;
      const Vec id = basis_vec(f, s.dim(), h);
      r.expect_eq("gc.counit", wit1(c.grading, g, s, static_cast<int>(h)),
                  left, id);
      r.expect_eq("gc.counit", wit1(c.grading, g, s, static_cast<int>(h)),
                  right, id);
    }
  }
  return r;
}

ValidationReport check_semi_hopf(const SemiHopfGC& h) {
  ValidationReport r = check_group_coalgebra(h);
  if (!r.ok()) return r;
  const Field& f = h.field;
  const int n = static_cast<int>(h.grading.size());

  r.count("semi.shape");
  bool shape_ok =
      static_cast<int>(h.mult.size()) == n && static_cast<int>(h.unit.size()) == n;
  for (int g = 0; g < n && shape_ok; ++g) {
    const MultTensor& m = h.mult[g];
    if (m.u != h.at(g) || m.v != h.at(g) || m.w != h.at(g)) shape_ok = false;
    if (h.unit[g].size() != h.at(g).dim()) shape_ok = false;
  }
  if (!shape_ok) {
    r.fail("semi.shape", "multiplication/unit tables",
           "one mult tensor and unit per component", "");
    return r;
  }

  for (int g = 0; g < n; ++g) {
    const Space& s = h.at(g);
    const MultTensor& m = h.mult[g];
    for (std::size_t i = 0; i < s.dim(); ++i) {
      for (std::size_t j = 0; j < s.dim(); ++j)
        for (std::size_t k = 0; k < s.dim(); ++k) {
          Vec lhs = zero_vec(f, s.dim());
          for (const Term& t : m.on_basis(i, j))
            axpy(lhs, t.c, m.apply(f, basis_vec(f, s.dim(), t.i),
                                   basis_vec(f, s.dim(), k)));
          Vec rhs = zero_vec(f, s.dim());
          for (const Term& t : m.on_basis(j, k))
            axpy(rhs, t.c, m.apply(f, basis_vec(f, s.dim(), i),
                                   basis_vec(f, s.dim(), t.i)));
          r.expect_eq("semi.mult_assoc",
                      h.grading.elements.at(g) + "; " + s.basis[i] + "," +
                          s.basis[j] + "," + s.basis[k],
                      lhs, rhs);
        }
      const Vec ei = basis_vec(f, s.dim(), i);
      r.expect_eq("semi.unit", wit1(h.grading, g, s, static_cast<int>(i)),
                  m.apply(f, h.unit[g], ei), ei);
      r.expect_eq("semi.unit", wit1(h.grading, g, s, static_cast<int>(i)),
                  m.apply(f, ei, h.unit[g]), ei);
    }
  }

  for (int g1 = 0; g1 < n; ++g1)
    for (int g2 = 0; g2 < n; ++g2) {
      const int g12 = h.grading.op(g1, g2);
      const Space& src = h.at(g12);
      const CoMultTensor& d = h.delta(g1, g2);
      const MultTensor& m1 = h.mult[g1];
      const MultTensor& m2 = h.mult[g2];
      for (std::size_t i = 0; i < src.dim(); ++i)
        for (std::size_t j = 0; j < src.dim(); ++j) {
          Acc2 lhs, rhs;
          for (const Term& t : h.mult[g12].on_basis(i, j))
            for (const Term2& s : d.on_basis(static_cast<std::size_t>(t.i)))
              lhs.add(t.c * s.c, s.i, s.j);
          for (const Term2& a : d.on_basis(i))
            for (const Term2& b : d.on_basis(j))
              for (const Term& ta : m1.on_basis(static_cast<std::size_t>(a.i),
                                                static_cast<std::size_t>(b.i)))
                for (const Term& tb :
                     m2.on_basis(static_cast<std::size_t>(a.j),
                                 static_cast<std::size_t>(b.j)))
                  rhs.add(a.c * b.c * ta.c * tb.c, ta.i, tb.i);
          r.expect_eq("semi.comult_mult",
                      wit_pair(h.grading, g1, g2) + "; " + src.basis[i] + "," +
                          src.basis[j],
                      lhs.dense(f, h.at(g1).dim(), h.at(g2).dim()),
                      rhs.dense(f, h.at(g1).dim(), h.at(g2).dim()));
        }
      Acc2 du;
      for (const Term2& t : d.apply(f, h.unit[g12])) du.add(t.c, t.i, t.j);
      r.expect_eq("semi.comult_unit", wit_pair(h.grading, g1, g2),
                  du.dense(f, h.at(g1).dim(), h.at(g2).dim()),
                  outer(f, h.unit[g1], h.unit[g2]));
    }

  const int e = h.grading.identity;
  const Space& he = h.at(e);
  for (std::size_t i = 0; i < he.dim(); ++i)
    for (std::size_t j = 0; j < he.dim(); ++j) {
      Scalar lhs = f.zero();
      for (const Term& t : h.mult[e].on_basis(i, j))
        lhs += t.c * h.counit[t.i];
      r.expect_scalar_eq("semi.counit_mult", he.basis[i] + "," + he.basis[j],
                         lhs, h.counit[i] * h.counit[j]);
    }
  r.expect_scalar_eq("semi.counit_unit", "1",
                     pair_dual(f, h.counit, h.unit[e]), f.one());
  return r;
}

ValidationReport check_hopf(const HopfGC& h) {
  ValidationReport r = check_semi_hopf(h);
  if (!r.ok()) return r;
  const Field& f = h.field;
  const int n = static_cast<int>(h.grading.size());
  const int e = h.grading.identity;

  bool group_ok = static_cast<int>(h.inv.size()) == n;
  for (int g = 0; g < n && group_ok; ++g) {
    r.count("hopf.inverse_table");
    if (h.inv[g] < 0 || h.inv[g] >= n || h.grading.op(g, h.inv[g]) != e ||
        h.grading.op(h.inv[g], g) != e) {
      r.fail("hopf.inverse_table", h.grading.elements.at(g),
             "two-sided inverse", "");
      group_ok = false;
    }
  }
  if (!group_ok) return r;

  r.count("hopf.antipode_shape");
  bool shape_ok = static_cast<int>(h.antipode.size()) == n;
  for (int g = 0; g < n && shape_ok; ++g)
    if (h.antipode[g].domain != h.at(h.ginv(g)) ||
        h.antipode[g].codomain != h.at(g))
      shape_ok = false;
  if (h.has_twisted()) {
    if (static_cast<int>(h.antipode_tw.size()) != n) shape_ok = false;
    for (int g = 0; g < n && shape_ok; ++g)
      if (h.antipode_tw[g].domain != h.at(h.ginv(g)) ||
          h.antipode_tw[g].codomain != h.at(g))
        shape_ok = false;
  }
  if (!shape_ok) {
    r.fail("hopf.antipode_shape", "antipode tables",
           "S_g : H_{g^-1} -> H_g per component", "");
    return r;
  }

  const std::vector<LinMap>* tw = nullptr;
  HopfGC derived;
  if (h.has_twisted()) {
    tw = &h.antipode_tw;
  } else {
    r.count("hopf.twisted_derivable");
    try {
      derived = derive_twisted_antipode(h);
      tw = &derived.antipode_tw;
    } catch (const Error& err) {
      r.fail("hopf.twisted_derivable", "antipode family", err.what(), "");
    }
  }

  const Space& hec = h.at(e);
  for (int g = 0; g < n; ++g) {
    const Space& sg = h.at(g);
    const MultTensor& m = h.mult[g];
    const int gi = h.ginv(g);
    for (std::size_t x = 0; x < hec.dim(); ++x) {
      const Vec rhs = scaled(h.counit[x], h.unit[g]);
      const std::string w = wit1(h.grading, g, hec, static_cast<int>(x));

      Vec s1 = zero_vec(f, sg.dim());
      for (const Term2& t : split2(h, gi, g, static_cast<int>(x)))
        axpy(s1, t.c,
             m.apply(f,
                     h.antipode[g].apply(
                         f, basis_vec(f, h.at(gi).dim(), t.i)),
                     basis_vec(f, sg.dim(), t.j)));
      r.expect_eq("hopf.antipode_s1", w, s1, rhs);

      Vec s2 = zero_vec(f, sg.dim());
      for (const Term2& t : split2(h, g, gi, static_cast<int>(x)))
        axpy(s2, t.c,
             m.apply(f, basis_vec(f, sg.dim(), t.i),
                     h.antipode[g].apply(
                         f, basis_vec(f, h.at(gi).dim(), t.j))));
      r.expect_eq("hopf.antipode_s2", w, s2, rhs);

      if (tw != nullptr) {
        Vec b1 = zero_vec(f, sg.dim());
        for (const Term2& t : split2(h, gi, g, static_cast<int>(x)))
          axpy(b1, t.c,
               m.apply(f, basis_vec(f, sg.dim(), t.j),
                       (*tw)[g].apply(f, basis_vec(f, h.at(gi).dim(), t.i))));
        r.expect_eq("hopf.antipode_sbar1", w, b1, rhs);

        Vec b2 = zero_vec(f, sg.dim());
        for (const Term2& t : split2(h, g, gi, static_cast<int>(x)))
          axpy(b2, t.c,
               m.apply(f,
                       (*tw)[g].apply(f, basis_vec(f, h.at(gi).dim(), t.j)),
                       basis_vec(f, sg.dim(), t.i)));
        r.expect_eq("hopf.antipode_sbar2", w, b2, rhs);
      }
    }
    if (tw != nullptr) {
      r.count("hopf.sbar_inverse");
      const LinMap fwd = compose(f, (*tw)[g], h.antipode[gi]);
      const LinMap bwd = compose(f, h.antipode[gi], (*tw)[g]);
      if (!(fwd == identity_map(h.at(g), f)) ||
          !(bwd == identity_map(h.at(gi), f)))
        r.fail("hopf.sbar_inverse", h.grading.elements.at(g),
               "twisted antipode inverts S_{g^-1}", "");
    }
  }
  return r;
}

HopfGC derive_twisted_antipode(const HopfGC& h) {
  HopfGC out = h;
  out.antipode_tw.clear();
  const int n = static_cast<int>(h.grading.size());
  for (int g = 0; g < n; ++g)
    out.antipode_tw.push_back(
        invert(h.field, h.antipode.at(h.ginv(g)), "SingularAntipode"));
  return out;
}

HopfGC opposite_hgc(const HopfGC& h) {
  HopfGC out = h.has_twisted() ? h : derive_twisted_antipode(h);
  for (MultTensor& m : out.mult) {
    std::map<std::tuple<int, int, int>, Scalar> flipped;
    for (const auto& [key, c] : m.entries)
      flipped[{std::get<1>(key), std::get<0>(key), std::get<2>(key)}] = c;
    m.entries = std::move(flipped);
  }
  std::swap(out.antipode, out.antipode_tw);
  return out;
}

FiniteMonoid product_monoid(const FiniteMonoid& a, const FiniteMonoid& b) {
  FiniteMonoid p;
  const std::size_t na = a.size(), nb = b.size();
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      p.elements.push_back(a.elements[i] + "," + b.elements[j]);
  p.mult.resize(na * nb, std::vector<int>(na * nb));
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t k = 0; k < na; ++k)
        for (std::size_t l = 0; l < nb; ++l)
          p.mult[flat(i, j, nb)][flat(k, l, nb)] = static_cast<int>(
              flat(a.op(static_cast<int>(i), static_cast<int>(k)),
                   b.op(static_cast<int>(j), static_cast<int>(l)), nb));
  p.identity = static_cast<int>(flat(a.identity, b.identity, nb));
  return p;
}

FiniteGroup product_group(const FiniteGroup& a, const FiniteGroup& b) {
  FiniteGroup g;
  g.monoid = product_monoid(a.monoid, b.monoid);
  const std::size_t nb = b.size();
  g.inv.resize(a.size() * nb);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < nb; ++j)
      g.inv[flat(i, j, nb)] = static_cast<int>(flat(a.inv[i], b.inv[j], nb));
  return g;
}

HopfGC tensor_hgc(const HopfGC& k, const HopfGC& h) {
  if (k.field != h.field)
    throw Error("FieldMismatch", "tensor factors over different fields");
  const Field& f = k.field;
  const HopfGC kk = k.has_twisted() ? k : derive_twisted_antipode(k);
  const HopfGC hh = h.has_twisted() ? h : derive_twisted_antipode(h);
  FiniteGroup gk{kk.grading, kk.inv};
  FiniteGroup gh{hh.grading, hh.inv};
  const FiniteGroup prod = product_group(gk, gh);
  const std::size_t nk = gk.size(), nh = gh.size();

  HopfGC out;
  out.field = f;
  out.grading = prod.monoid;
  out.inv = prod.inv;
  for (std::size_t a = 0; a < nk; ++a)
    for (std::size_t b = 0; b < nh; ++b)
      out.comp.push_back(tensor_space(kk.at(static_cast<int>(a)),
                                      hh.at(static_cast<int>(b))));

  auto tensor_mult = [&](int a, int b) {
    const Space& s = out.comp[flat(a, b, nh)];
    MultTensor m{s, s, s, {}};
    const std::size_t db = hh.at(b).dim();
    for (const auto& [ka, ca] : kk.mult[a].entries)
      for (const auto& [kb, cb] : hh.mult[b].entries)
        m.entries[{static_cast<int>(
                       flat(std::get<0>(ka), std::get<0>(kb), db)),
                   static_cast<int>(flat(std::get<1>(ka), std::get<1>(kb), db)),
                   static_cast<int>(
                       flat(std::get<2>(ka), std::get<2>(kb), db))}] = ca * cb;
    return m;
  };
  for (std::size_t a = 0; a < nk; ++a)
    for (std::size_t b = 0; b < nh; ++b) {
      out.mult.push_back(tensor_mult(static_cast<int>(a), static_cast<int>(b)));
      out.unit.push_back(outer(f, kk.unit[a], hh.unit[b]));
    }

  for (std::size_t a1 = 0; a1 < nk; ++a1)
    for (std::size_t b1 = 0; b1 < nh; ++b1)
      for (std::size_t a2 = 0; a2 < nk; ++a2)
        for (std::size_t b2 = 0; b2 < nh; ++b2) {
          const int a12 = gk.op(static_cast<int>(a1), static_cast<int>(a2));
          const int b12 = gh.op(static_cast<int>(b1), static_cast<int>(b2));
          const CoMultTensor& dk = kk.delta(static_cast<int>(a1),
                                            static_cast<int>(a2));
          const CoMultTensor& dh = hh.delta(static_cast<int>(b1),
                                            static_cast<int>(b2));
          CoMultTensor d{out.comp[flat(a12, b12, nh)],
                         out.comp[flat(a1, b1, nh)],
                         out.comp[flat(a2, b2, nh)],
                         {}};
          const std::size_t dhb1 = hh.at(static_cast<int>(b1)).dim();
          const std::size_t dhb2 = hh.at(static_cast<int>(b2)).dim();
          const std::size_t dhb12 = hh.at(b12).dim();
          for (const auto& [ka, ca] : dk.entries)
            for (const auto& [kb, cb] : dh.entries) {
              auto key = std::make_tuple(
                  static_cast<int>(flat(std::get<0>(ka), std::get<0>(kb),
                                        dhb12)),
                  static_cast<int>(flat(std::get<1>(ka), std::get<1>(kb),
                                        dhb1)),
                  static_cast<int>(flat(std::get<2>(ka), std::get<2>(kb),
                                        dhb2)));
              auto it = d.entries.find(key);
              if (it == d.entries.end())
                d.entries.emplace(key, ca * cb);
              else
                it->second += ca * cb;
            }
          out.comult.emplace(
              std::make_pair(static_cast<int>(flat(a1, b1, nh)),
                             static_cast<int>(flat(a2, b2, nh))),
              std::move(d));
        }

  out.counit = outer(f, kk.counit, hh.counit);

  auto tensor_map = [&](const LinMap& ma, const LinMap& mb, const Space& dom,
                        const Space& cod, std::size_t db_dom,
                        std::size_t db_cod) {
    LinMap m{dom, cod, {}};
    for (const auto& [ka, ca] : ma.entries)
      for (const auto& [kb, cb] : mb.entries)
        m.entries[{static_cast<int>(flat(ka.first, kb.first, db_cod)),
                   static_cast<int>(flat(ka.second, kb.second, db_dom))}] =
            ca * cb;
    return m;
  };
  for (std::size_t a = 0; a < nk; ++a)
    for (std::size_t b = 0; b < nh; ++b) {
      const int ai = gk.inv[a], bi = gh.inv[b];
      const Space& dom = out.comp[flat(ai, bi, nh)];
      const Space& cod = out.comp[flat(a, b, nh)];
      out.antipode.push_back(tensor_map(kk.antipode[a], hh.antipode[b], dom,
                                        cod, hh.at(bi).dim(),
                                        hh.at(static_cast<int>(b)).dim()));
      out.antipode_tw.push_back(
          tensor_map(kk.antipode_tw[a], hh.antipode_tw[b], dom, cod,
                     hh.at(bi).dim(), hh.at(static_cast<int>(b)).dim()));
    }
  return out;
}

HopfGC trivial_family(const Field& f, const FiniteGroup& g) {
  HopfGC out;
  out.field = f;
  out.grading = g.monoid;
  out.inv = g.inv;
  const int n = static_cast<int>(g.size());
  for (int i = 0; i < n; ++i) {
    Space s{"k[" + g.monoid.elements[i] + "]", {"1"}};
    out.comp.push_back(s);
    out.mult.push_back(MultTensor{s, s, s, {{{0, 0, 0}, f.one()}}});
    out.unit.push_back(Vec{f.one()});
    out.antipode.push_back(LinMap{out.comp[0], s, {{{0, 0}, f.one()}}});
    out.antipode_tw.push_back(LinMap{out.comp[0], s, {{{0, 0}, f.one()}}});
  }
  for (int g1 = 0; g1 < n; ++g1)
    for (int g2 = 0; g2 < n; ++g2)
      out.comult.emplace(
          std::make_pair(g1, g2),
          CoMultTensor{out.comp[g.op(g1, g2)],
                       out.comp[g1],
                       out.comp[g2],
                       {{{0, 0, 0}, f.one()}}});
  out.counit = Vec{f.one()};
  // antipode domains were set before all components existed; fix them up
  for (int i = 0; i < n; ++i) {
    out.antipode[i].domain = out.comp[g.inv[i]];
    out.antipode[i].codomain = out.comp[i];
    out.antipode_tw[i].domain = out.comp[g.inv[i]];
    out.antipode_tw[i].codomain = out.comp[i];
  }
  return out;
}

HopfGC constant_family(const Field& f, const FiniteGroup& g,
                       const OrdinaryHopf& h0) {
  HopfGC out;
  out.field = f;
  out.grading = g.monoid;
  out.inv = g.inv;
  const int n = static_cast<int>(g.size());
  for (int i = 0; i < n; ++i) {
    Space s = h0.space;
    s.label = h0.space.label + "[" + g.monoid.elements[i] + "]";
    out.comp.push_back(s);
  }
  for (int i = 0; i < n; ++i) {
    out.mult.push_back(
        MultTensor{out.comp[i], out.comp[i], out.comp[i], h0.mult.entries});
    out.unit.push_back(h0.unit);
    out.antipode.push_back(
        LinMap{out.comp[g.inv[i]], out.comp[i], h0.antipode.entries});
  }
  for (int g1 = 0; g1 < n; ++g1)
    for (int g2 = 0; g2 < n; ++g2)
      out.comult.emplace(std::make_pair(g1, g2),
                         CoMultTensor{out.comp[g.op(g1, g2)], out.comp[g1],
                                      out.comp[g2], h0.comult.entries});
  out.counit = h0.counit;
  return derive_twisted_antipode(out);
}

HopfGC ordinary_as_family(const Field& f, const OrdinaryHopf& h0) {
  FiniteGroup e;
  e.monoid.elements = {"e"};
  e.monoid.mult = {{0}};
  e.monoid.identity = 0;
  e.inv = {0};
  return constant_family(f, e, h0);
}

}  // namespace hgc
