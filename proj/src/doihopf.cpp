#include "hgc/doihopf.hpp"

#include "hgc/accum.hpp"

namespace hgc {

namespace {

std::string lbl(const std::vector<std::string>& names, int i) {
  return names.at(static_cast<std::size_t>(i));
}

/// Dense result of a mult tensor on two basis vectors.
Vec mul_bb(const Field& f, const MultTensor& m, std::size_t i, std::size_t j) {
  Vec out = zero_vec(f, m.w.dim());
  for (const Term& t : m.on_basis(i, j)) out[t.i] += t.c;
  return out;
}

}  // namespace

const CoMultTensor& ComoduleAlgebra::rho(int xi, int g) const {
  auto it = coaction.find({xi, g});
  if (it == coaction.end())
    throw Error("MissingCoaction", "no coaction at point " +
                                       lbl(x.carrier, xi) + ", degree " +
                                       lbl(x.acting.elements, g));
  return it->second;
}

const CoMultTensor& DoiHopfModule::rho(int yi, int l) const {
  auto it = coaction.find({yi, l});
  if (it == coaction.end())
    throw Error("MissingCoaction",
                "no module coaction at point " + lbl(y.carrier, yi));
  return it->second;
}

const MultTensor& LambdaGradedAlgebra::mul(int l1, int l2) const {
  auto it = mult.find({l1, l2});
  if (it == mult.end())
    throw Error("MissingProduct",
                "no graded product for (" + lbl(lambda.monoid.elements, l1) +
                    "," + lbl(lambda.monoid.elements, l2) + ")");
  return it->second;
}

ValidationReport check_comodule_algebra(const HopfGC& h,
                                        const ComoduleAlgebra& a) {
  ValidationReport r;
  r.merge(validate_gset(a.x));
  if (!r.ok()) return r;
  const Field& f = a.field;
  const int nx = static_cast<int>(a.x.size());
  const int ng = static_cast<int>(h.grading.size());

  r.count("comodalg.shape");
  bool shape = a.x.acting == h.grading && a.field == h.field &&
               static_cast<int>(a.comp.size()) == nx &&
               static_cast<int>(a.mult.size()) == nx &&
               static_cast<int>(a.unit.size()) == nx;
  for (int x = 0; x < nx && shape; ++x) {
    const MultTensor& m = a.mult[x];
    if (m.u != a.at(x) || m.v != a.at(x) || m.w != a.at(x)) shape = false;
    if (a.unit[x].size() != a.at(x).dim()) shape = false;
  }
  for (int x = 0; x < nx && shape; ++x)
    for (int g = 0; g < ng && shape; ++g) {
      auto it = a.coaction.find({x, g});
      if (it == a.coaction.end()) {
        shape = false;
        break;
      }
      const CoMultTensor& c = it->second;
      if (c.src != a.at(a.x.act(x, g)) || c.left != a.at(x) ||
          c.right != h.at(g))
        shape = false;
    }
  if (!shape) {
    r.fail("comodalg.shape", "component/coaction tables",
           "rho_{x,g} : A_{x.g} -> A_x (x) H_g for every pair", "");
    return r;
  }
  if (!r.ok()) return r;

  for (int x = 0; x < nx; ++x) {
    const Space& s = a.at(x);
    const MultTensor& m = a.mult[x];
    for (std::size_t i = 0; i < s.dim(); ++i) {
      for (std::size_t j = 0; j < s.dim(); ++j)
        for (std::size_t k = 0; k < s.dim(); ++k) {
          Vec lhs = zero_vec(f, s.dim());
          for (const Term& t : m.on_basis(i, j))
            axpy(lhs, t.c, mul_bb(f, m, static_cast<std::size_t>(t.i), k));
          Vec rhs = zero_vec(f, s.dim());
          for (const Term& t : m.on_basis(j, k))
            axpy(rhs, t.c, mul_bb(f, m, i, static_cast<std::size_t>(t.i)));
          r.expect_eq("comodalg.assoc",
                      lbl(a.x.carrier, x) + "; " + s.basis[i] + "," +
                          s.basis[j] + "," + s.basis[k],
                      lhs, rhs);
        }
      const Vec ei = basis_vec(f, s.dim(), i);
      r.expect_eq("comodalg.unit", lbl(a.x.carrier, x) + "; " + s.basis[i],
                  m.apply(f, a.unit[x], ei), ei);
      r.expect_eq("comodalg.unit", lbl(a.x.carrier, x) + "; " + s.basis[i],
                  m.apply(f, ei, a.unit[x]), ei);
    }
  }

  for (int x = 0; x < nx; ++x)
    for (int g1 = 0; g1 < ng; ++g1)
      for (int g2 = 0; g2 < ng; ++g2) {
        const int g12 = h.grading.op(g1, g2);
        const int xg1 = a.x.act(x, g1);
        const Space& src = a.at(a.x.act(x, g12));
        const CoMultTensor& outer_rho = a.rho(x, g12);
        const CoMultTensor& step = a.rho(xg1, g2);
        const CoMultTensor& inner = a.rho(x, g1);
        const CoMultTensor& dh = h.delta(g1, g2);
        const std::size_t d0 = a.at(x).dim(), d1 = h.at(g1).dim(),
                          d2 = h.at(g2).dim();
        for (std::size_t s = 0; s < src.dim(); ++s) {
          Acc3 lhs, rhs;
          for (const Term2& t : outer_rho.on_basis(s))
            for (const Term2& u : dh.on_basis(static_cast<std::size_t>(t.j)))
              lhs.add(t.c * u.c, t.i, u.i, u.j);
          for (const Term2& t : step.on_basis(s))
            for (const Term2& u : inner.on_basis(static_cast<std::size_t>(t.i)))
              rhs.add(t.c * u.c, u.i, u.j, t.j);
          r.expect_eq("comodalg.coassoc",
                      lbl(a.x.carrier, x) + ",(" +
                          lbl(h.grading.elements, g1) + "," +
                          lbl(h.grading.elements, g2) + "); " + src.basis[s],
                      lhs.dense(f, d0, d1, d2), rhs.dense(f, d0, d1, d2));
        }
      }

  const int e = h.grading.identity;
  for (int x = 0; x < nx; ++x) {
    const Space& s = a.at(x);
    for (std::size_t i = 0; i < s.dim(); ++i) {
      Vec got = zero_vec(f, s.dim());
      for (const Term2& t : a.rho(x, e).on_basis(i))
        got[t.i] += t.c * h.counit.at(t.j);
      r.expect_eq("comodalg.counit", lbl(a.x.carrier, x) + "; " + s.basis[i],
                  got, basis_vec(f, s.dim(), i));
    }
  }

  for (int x = 0; x < nx; ++x)
    for (int g = 0; g < ng; ++g) {
      const int xg = a.x.act(x, g);
      const Space& src = a.at(xg);
      const CoMultTensor& rho = a.rho(x, g);
      const std::size_t d0 = a.at(x).dim(), d1 = h.at(g).dim();
      for (std::size_t i = 0; i < src.dim(); ++i)
        for (std::size_t j = 0; j < src.dim(); ++j) {
          Acc2 lhs, rhs;
          for (const Term& t : a.mult[xg].on_basis(i, j))
            for (const Term2& u : rho.on_basis(static_cast<std::size_t>(t.i)))
              lhs.add(t.c * u.c, u.i, u.j);
          for (const Term2& u : rho.on_basis(i))
            for (const Term2& v : rho.on_basis(j))
              for (const Term& ta :
                   a.mult[x].on_basis(static_cast<std::size_t>(u.i),
                                      static_cast<std::size_t>(v.i)))
                for (const Term& th :
                     h.mult[g].on_basis(static_cast<std::size_t>(u.j),
                                        static_cast<std::size_t>(v.j)))
                  rhs.add(u.c * v.c * ta.c * th.c, ta.i, th.i);
          r.expect_eq("comodalg.coaction_mult",
                      lbl(a.x.carrier, x) + "," + lbl(h.grading.elements, g) +
                          "; " + src.basis[i] + "," + src.basis[j],
                      lhs.dense(f, d0, d1), rhs.dense(f, d0, d1));
        }
      Acc2 du;
      for (const Term2& t : rho.apply(f, a.unit[xg])) du.add(t.c, t.i, t.j);
      r.expect_eq("comodalg.coaction_unit",
                  lbl(a.x.carrier, x) + "," + lbl(h.grading.elements, g),
                  du.dense(f, d0, d1), outer(f, a.unit[x], h.unit[g]));
    }
  return r;
}

ValidationReport check_module_coalgebra(const HopfGC& h,
                                        const DiscreteDoiHopfDatum& d,
                                        const ModuleCoalgebra& c) {
  ValidationReport r = check_group_coalgebra(c.c);
  if (!r.ok()) return r;
  const Field& f = c.c.field;
  const int nl = static_cast<int>(c.c.grading.size());

  r.count("modcoalg.shape");
  bool shape = c.c.grading == d.lambda && c.gamma == d.gamma &&
               d.acting == h.grading && c.c.field == h.field &&
               static_cast<int>(c.action.size()) == nl;
  for (int l = 0; l < nl && shape; ++l) {
    const MultTensor& m = c.action[l];
    if (m.u != c.at(l) || m.v != h.at(c.gamma[l]) || m.w != c.at(l))
      shape = false;
  }
  if (!shape) {
    r.fail("modcoalg.shape", "action tables",
           "C_l (x) H_{gamma(l)} -> C_l for every l", "");
    return r;
  }

  for (int l = 0; l < nl; ++l) {
    const Space& cs = c.at(l);
    const Space& hs = h.at(c.gamma[l]);
    const MultTensor& act = c.action[l];
    const MultTensor& hm = h.mult[c.gamma[l]];
    for (std::size_t i = 0; i < cs.dim(); ++i) {
      for (std::size_t p = 0; p < hs.dim(); ++p)
        for (std::size_t q = 0; q < hs.dim(); ++q) {
          Vec lhs = zero_vec(f, cs.dim());
          for (const Term& t : act.on_basis(i, p))
            axpy(lhs, t.c, mul_bb(f, act, static_cast<std::size_t>(t.i), q));
          Vec rhs = zero_vec(f, cs.dim());
          for (const Term& t : hm.on_basis(p, q))
            axpy(rhs, t.c, mul_bb(f, act, i, static_cast<std::size_t>(t.i)));
          r.expect_eq("modcoalg.action_assoc",
                      lbl(c.c.grading.elements, l) + "; " + cs.basis[i] + "," +
                          hs.basis[p] + "," + hs.basis[q],
                      lhs, rhs);
        }
      const Vec ei = basis_vec(f, cs.dim(), i);
      r.expect_eq("modcoalg.action_unit",
                  lbl(c.c.grading.elements, l) + "; " + cs.basis[i],
                  act.apply(f, ei, h.unit[c.gamma[l]]), ei);
    }
  }

  for (int l1 = 0; l1 < nl; ++l1)
    for (int l2 = 0; l2 < nl; ++l2) {
      const int l12 = c.c.grading.op(l1, l2);
      const int g12 = c.gamma[l12];
      const Space& cs = c.at(l12);
      const Space& hs = h.at(g12);
      const CoMultTensor& dl = c.c.delta(l1, l2);
      const std::size_t d1 = c.at(l1).dim(), d2 = c.at(l2).dim();
      for (std::size_t i = 0; i < cs.dim(); ++i)
        for (std::size_t p = 0; p < hs.dim(); ++p) {
          Acc2 lhs, rhs;
          for (const Term& t : c.action[l12].on_basis(i, p))
            for (const Term2& u : dl.on_basis(static_cast<std::size_t>(t.i)))
              lhs.add(t.c * u.c, u.i, u.j);
          for (const Term2& u : dl.on_basis(i))
            for (const Term2& hsplit :
                 split2(h, c.gamma[l1], c.gamma[l2], static_cast<int>(p)))
              for (const Term& t1 :
                   c.action[l1].on_basis(static_cast<std::size_t>(u.i),
                                         static_cast<std::size_t>(hsplit.i)))
                for (const Term& t2 :
                     c.action[l2].on_basis(static_cast<std::size_t>(u.j),
                                           static_cast<std::size_t>(hsplit.j)))
                  rhs.add(u.c * hsplit.c * t1.c * t2.c, t1.i, t2.i);
          r.expect_eq("modcoalg.comult_compat",
                      "(" + lbl(c.c.grading.elements, l1) + "," +
                          lbl(c.c.grading.elements, l2) + "); " + cs.basis[i] +
                          "," + hs.basis[p],
                      lhs.dense(f, d1, d2), rhs.dense(f, d1, d2));
        }
    }

  const int le = c.c.grading.identity;
  const Space& ce = c.at(le);
  const Space& he = h.at(h.grading.identity);
  for (std::size_t i = 0; i < ce.dim(); ++i)
    for (std::size_t p = 0; p < he.dim(); ++p) {
      Scalar lhs = f.zero();
      for (const Term& t : c.action[le].on_basis(i, p))
        lhs += t.c * c.c.counit.at(t.i);
      r.expect_scalar_eq("modcoalg.counit_compat",
                         ce.basis[i] + "," + he.basis[p], lhs,
                         c.c.counit.at(i) * h.counit.at(p));
    }
  return r;
}

ValidationReport check_doihopf_datum(const DoiHopfDatumTk& d) {
  ValidationReport r;
  r.merge(validate_discrete(d.discrete));
  r.count("datum.members");
  if (!(d.h.grading == d.discrete.acting) ||
      !(d.a.x.carrier == d.discrete.x.carrier) ||
      !(d.a.x.action == d.discrete.x.action) ||
      !(d.c.c.grading == d.discrete.lambda) || d.c.gamma != d.discrete.gamma) {
    r.fail("datum.members", "cross references",
           "members agree with the discrete datum", "");
    return r;
  }
  r.merge(check_hopf(d.h));
  r.merge(check_comodule_algebra(d.h, d.a));
  r.merge(check_module_coalgebra(d.h, d.discrete, d.c));
  return r;
}

ValidationReport check_doihopf_module(const DoiHopfDatumTk& d,
                                      const DoiHopfModule& m) {
  ValidationReport r;
  r.merge(validate_datum_set(d.discrete, m.y));
  if (!r.ok()) return r;
  const Field& f = d.a.field;
  const int ny = static_cast<int>(m.y.size());
  const int nl = static_cast<int>(d.discrete.lambda.size());

  r.count("dhmod.shape");
  bool shape = static_cast<int>(m.comp.size()) == ny &&
               static_cast<int>(m.action.size()) == ny;
  for (int y = 0; y < ny && shape; ++y) {
    const MultTensor& act = m.action[y];
    if (act.u != m.at(y) || act.v != d.a.at(m.y.beta[y]) || act.w != m.at(y))
      shape = false;
  }
  for (int y = 0; y < ny && shape; ++y)
    for (int l = 0; l < nl && shape; ++l) {
      auto it = m.coaction.find({y, l});
      if (it == m.coaction.end()) {
        shape = false;
        break;
      }
      const CoMultTensor& c = it->second;
      if (c.src != m.at(m.y.act(y, l)) || c.left != m.at(y) ||
          c.right != d.c.at(l))
        shape = false;
    }
  if (!shape) {
    r.fail("dhmod.shape", "component/action/coaction tables",
           "right A_{beta(y)}-modules with coactions into M_y (x) C_l", "");
    return r;
  }

  for (int y = 0; y < ny; ++y) {
    const Space& s = m.at(y);
    const Space& as = d.a.at(m.y.beta[y]);
    const MultTensor& act = m.action[y];
    const MultTensor& am = d.a.mult[m.y.beta[y]];
    for (std::size_t i = 0; i < s.dim(); ++i) {
      for (std::size_t p = 0; p < as.dim(); ++p)
        for (std::size_t q = 0; q < as.dim(); ++q) {
          Vec lhs = zero_vec(f, s.dim());
          for (const Term& t : act.on_basis(i, p))
            axpy(lhs, t.c, mul_bb(f, act, static_cast<std::size_t>(t.i), q));
          Vec rhs = zero_vec(f, s.dim());
          for (const Term& t : am.on_basis(p, q))
            axpy(rhs, t.c, mul_bb(f, act, i, static_cast<std::size_t>(t.i)));
          r.expect_eq("dhmod.action_assoc",
                      lbl(m.y.carrier, y) + "; " + s.basis[i] + "," +
                          as.basis[p] + "," + as.basis[q],
                      lhs, rhs);
        }
      const Vec ei = basis_vec(f, s.dim(), i);
      r.expect_eq("dhmod.action_unit", lbl(m.y.carrier, y) + "; " + s.basis[i],
                  act.apply(f, ei, d.a.unit[m.y.beta[y]]), ei);
    }
  }

  for (int y = 0; y < ny; ++y)
    for (int l1 = 0; l1 < nl; ++l1)
      for (int l2 = 0; l2 < nl; ++l2) {
        const int l12 = d.discrete.lambda.op(l1, l2);
        const int yl1 = m.y.act(y, l1);
        const Space& src = m.at(m.y.act(y, l12));
        const CoMultTensor& full = m.rho(y, l12);
        const CoMultTensor& step = m.rho(yl1, l2);
        const CoMultTensor& inner = m.rho(y, l1);
        const CoMultTensor& dl = d.c.c.delta(l1, l2);
        const std::size_t d0 = m.at(y).dim(), d1 = d.c.at(l1).dim(),
                          d2 = d.c.at(l2).dim();
        for (std::size_t s = 0; s < src.dim(); ++s) {
          Acc3 lhs, rhs;
          for (const Term2& t : full.on_basis(s))
            for (const Term2& u : dl.on_basis(static_cast<std::size_t>(t.j)))
              lhs.add(t.c * u.c, t.i, u.i, u.j);
          for (const Term2& t : step.on_basis(s))
            for (const Term2& u : inner.on_basis(static_cast<std::size_t>(t.i)))
              rhs.add(t.c * u.c, u.i, u.j, t.j);
          r.expect_eq("dhmod.coassoc",
                      lbl(m.y.carrier, y) + ",(" +
                          lbl(d.discrete.lambda.elements, l1) + "," +
                          lbl(d.discrete.lambda.elements, l2) + "); " +
                          src.basis[s],
                      lhs.dense(f, d0, d1, d2), rhs.dense(f, d0, d1, d2));
        }
      }

  const int le = d.discrete.lambda.identity;
  for (int y = 0; y < ny; ++y) {
    const Space& s = m.at(y);
    for (std::size_t i = 0; i < s.dim(); ++i) {
      Vec got = zero_vec(f, s.dim());
      for (const Term2& t : m.rho(y, le).on_basis(i))
        got[t.i] += t.c * d.c.c.counit.at(t.j);
      r.expect_eq("dhmod.counit", lbl(m.y.carrier, y) + "; " + s.basis[i], got,
                  basis_vec(f, s.dim(), i));
    }
  }

  // mixed compatibility: the coaction of a module product expands both legs
  for (int y = 0; y < ny; ++y)
    for (int l = 0; l < nl; ++l) {
      const int yl = m.y.act(y, l);
      const int bx = m.y.beta[y];
      const int bxl = m.y.beta[yl];
      const int gl = d.discrete.gamma[l];
      const Space& ms = m.at(yl);
      const Space& as = d.a.at(bxl);
      const CoMultTensor& rho_m = m.rho(y, l);
      const CoMultTensor& rho_a = d.a.rho(bx, gl);
      const std::size_t d0 = m.at(y).dim(), d1 = d.c.at(l).dim();
      for (std::size_t i = 0; i < ms.dim(); ++i)
        for (std::size_t p = 0; p < as.dim(); ++p) {
          Acc2 lhs, rhs;
          for (const Term& t : m.action[yl].on_basis(i, p))
            for (const Term2& u : rho_m.on_basis(static_cast<std::size_t>(t.i)))
              lhs.add(t.c * u.c, u.i, u.j);
          for (const Term2& u : rho_m.on_basis(i))
            for (const Term2& v : rho_a.on_basis(p))
              for (const Term& tm :
                   m.action[y].on_basis(static_cast<std::size_t>(u.i),
                                        static_cast<std::size_t>(v.i)))
                for (const Term& tc :
                     d.c.action[l].on_basis(static_cast<std::size_t>(u.j),
                                            static_cast<std::size_t>(v.j)))
                  rhs.add(u.c * v.c * tm.c * tc.c, tm.i, tc.i);
          r.expect_eq("dhmod.compat",
                      lbl(m.y.carrier, y) + "," +
                          lbl(d.discrete.lambda.elements, l) + "; " +
                          ms.basis[i] + "," + as.basis[p],
                      lhs.dense(f, d0, d1), rhs.dense(f, d0, d1));
        }
    }
  return r;
}

ValidationReport check_dh_morphism(const DoiHopfDatumTk& d, MorphFlavor flavor,
                                   const DoiHopfModule& m,
                                   const DoiHopfModule& mp,
                                   const std::vector<int>& eta,
                                   const std::vector<LinMap>& phi) {
  ValidationReport r;
  const Field& f = d.a.field;
  const int nl = static_cast<int>(d.discrete.lambda.size());
  // Re-index so that `src` is the module phi maps out of at point
  // src_point(i), and `dst` the one it maps into at point i.
  const DoiHopfModule& src = (flavor == MorphFlavor::T) ? m : mp;
  const DoiHopfModule& idx = (flavor == MorphFlavor::T) ? mp : m;
  // For T: phi_i : M_{eta(i)} -> M'_i (i runs over Y').
  // For Z: phi_i : M_i -> M'_{eta(i)} (i runs over Y).
  const int ni = static_cast<int>(idx.y.size());

  r.count("dhmorph.shape");
  bool shape = static_cast<int>(eta.size()) == ni &&
               static_cast<int>(phi.size()) == ni;
  const int nother = static_cast<int>(src.y.size());
  for (int i = 0; i < ni && shape; ++i)
    if (eta[i] < 0 || eta[i] >= nother) shape = false;
  if (!shape) {
    r.fail("dhmorph.shape", "eta/phi tables", "one entry per point", "");
    return r;
  }

  // Under either flavor phi maps from m into mp; the points it is indexed by
  // live in idx.y, and eta supplies the matching point on the other side.
  const DoiHopfModule& dom_mod = m;
  const DoiHopfModule& cod_mod = mp;
  auto dom_point = [&](int i) { return flavor == MorphFlavor::T ? eta[i] : i; };
  auto cod_point = [&](int i) { return flavor == MorphFlavor::T ? i : eta[i]; };

  for (int i = 0; i < ni; ++i) {
    for (int l = 0; l < nl; ++l) {
      r.count("dhmorph.eta_equivariant");
      const int il = idx.y.act(i, l);
      const int want = (flavor == MorphFlavor::T)
                           ? m.y.act(eta[i], l)
                           : mp.y.act(eta[i], l);
      if (eta[il] != want)
        r.fail("dhmorph.eta_equivariant",
               lbl(idx.y.carrier, i) + "," +
                   lbl(d.discrete.lambda.elements, l),
               "eta(y.l) = eta(y).l", "");
    }
    r.count("dhmorph.eta_beta");
    const int bi = idx.y.beta[i];
    const int bo = (flavor == MorphFlavor::T) ? m.y.beta[eta[i]]
                                              : mp.y.beta[eta[i]];
    if (bi != bo)
      r.fail("dhmorph.eta_beta", lbl(idx.y.carrier, i),
             "beta is preserved by eta", "");
    r.count("dhmorph.phi_shape");
    if (phi[i].domain != dom_mod.at(dom_point(i)) ||
        phi[i].codomain != cod_mod.at(cod_point(i)))
      r.fail("dhmorph.phi_shape", lbl(idx.y.carrier, i),
             "phi maps M at the source point to M' at the target point", "");
  }
  if (!r.ok()) return r;

  for (int i = 0; i < ni; ++i) {
    const int dp = dom_point(i);
    const int cp = cod_point(i);
    const Space& ds = dom_mod.at(dp);
    const Space& as = d.a.at(idx.y.beta[i]);
    for (std::size_t v = 0; v < ds.dim(); ++v)
      for (std::size_t p = 0; p < as.dim(); ++p) {
        Vec lhs = phi[i].apply(
            f, dom_mod.action[dp].apply(f, basis_vec(f, ds.dim(), v),
                                        basis_vec(f, as.dim(), p)));
        Vec rhs = cod_mod.action[cp].apply(
            f, phi[i].apply(f, basis_vec(f, ds.dim(), v)),
            basis_vec(f, as.dim(), p));
        r.expect_eq("dhmorph.linear",
                    lbl(idx.y.carrier, i) + "; " + ds.basis[v] + "," +
                        as.basis[p],
                    lhs, rhs);
      }

    for (int l = 0; l < nl; ++l) {
      const int il = idx.y.act(i, l);
      const Space& srcs = dom_mod.at(dom_point(il));
      const std::size_t d0 = cod_mod.at(cp).dim();
      const std::size_t d1 = d.c.at(l).dim();
      for (std::size_t v = 0; v < srcs.dim(); ++v) {
        Acc2 lhs, rhs;
        const Vec moved = phi[il].apply(f, basis_vec(f, srcs.dim(), v));
        for (std::size_t w = 0; w < moved.size(); ++w) {
          if (moved[w].is_zero()) continue;
          for (const Term2& t : cod_mod.rho(cp, l).on_basis(w))
            lhs.add(moved[w] * t.c, t.i, t.j);
        }
        for (const Term2& t : dom_mod.rho(dp, l).on_basis(v)) {
          const Vec img =
              phi[i].apply(f, basis_vec(f, dom_mod.at(dp).dim(),
                                        static_cast<std::size_t>(t.i)));
          for (std::size_t w = 0; w < img.size(); ++w)
            if (!img[w].is_zero()) rhs.add(t.c * img[w], static_cast<int>(w), t.j);
        }
        r.expect_eq("dhmorph.square",
                    lbl(idx.y.carrier, i) + "," +
                        lbl(d.discrete.lambda.elements, l) + "; " +
                        srcs.basis[v],
                    lhs.dense(f, d0, d1), rhs.dense(f, d0, d1));
      }
    }
  }
  return r;
}

ValidationReport check_lambda_graded(const HopfGC& h,
                                     const LambdaGradedAlgebra& b) {
  ValidationReport r;
  r.merge(validate_monoid(b.lambda.monoid));
  if (!r.ok()) return r;
  const Field& f = b.field;
  const int nl = static_cast<int>(b.lambda.size());

  r.count("lambda_graded.shape");
  bool shape = static_cast<int>(b.comp.size()) == nl &&
               static_cast<int>(b.gamma.size()) == nl &&
               static_cast<int>(b.lambda.inv.size()) == nl &&
               b.unit.size() == b.at(b.lambda.identity()).dim() &&
               f == h.field;
  for (int l = 0; l < nl && shape; ++l) {
    if (b.lambda.op(l, b.lambda.inv[l]) != b.lambda.identity()) shape = false;
    if (b.gamma[l] < 0 ||
        b.gamma[l] >= static_cast<int>(h.grading.size()))
      shape = false;
  }
  for (int l1 = 0; l1 < nl && shape; ++l1)
    for (int l2 = 0; l2 < nl && shape; ++l2) {
      auto it = b.mult.find({l1, l2});
      if (it == b.mult.end() || it->second.u != b.at(l1) ||
          it->second.v != b.at(l2) || it->second.w != b.at(b.lambda.op(l1, l2)))
        shape = false;
    }
  if (shape && b.has_action()) {
    if (static_cast<int>(b.hact.size()) != nl) shape = false;
    for (int l = 0; l < nl && shape; ++l) {
      const MultTensor& a = b.hact[l];
      if (a.u != h.at(h.ginv(b.gamma[l])) || a.v != b.at(l) ||
          a.w != b.at(l))
        shape = false;
    }
  }
  if (!shape) {
    r.fail("lambda_graded.shape", "component/product/action tables",
           "graded products and (optional) degree-wise H-action", "");
    return r;
  }

  r.count("lambda_graded.gamma_hom");
  bool ghom = b.gamma[b.lambda.identity()] == h.grading.identity;
  for (int l1 = 0; l1 < nl && ghom; ++l1)
    for (int l2 = 0; l2 < nl && ghom; ++l2)
      if (b.gamma[b.lambda.op(l1, l2)] !=
          h.grading.op(b.gamma[l1], b.gamma[l2]))
        ghom = false;
  if (!ghom)
    r.fail("lambda_graded.gamma_hom", "gamma", "monoid map into the grading",
           "");

  for (int l1 = 0; l1 < nl; ++l1)
    for (int l2 = 0; l2 < nl; ++l2)
      for (int l3 = 0; l3 < nl; ++l3) {
        const MultTensor& m12 = b.mul(l1, l2);
        const MultTensor& m23 = b.mul(l2, l3);
        const MultTensor& m12_3 = b.mul(b.lambda.op(l1, l2), l3);
        const MultTensor& m1_23 = b.mul(l1, b.lambda.op(l2, l3));
        const std::size_t dw = b.at(b.lambda.op(b.lambda.op(l1, l2), l3)).dim();
        for (std::size_t i = 0; i < b.at(l1).dim(); ++i)
          for (std::size_t j = 0; j < b.at(l2).dim(); ++j)
            for (std::size_t k = 0; k < b.at(l3).dim(); ++k) {
              Vec lhs = zero_vec(f, dw);
              for (const Term& t : m12.on_basis(i, j))
                axpy(lhs, t.c,
                     mul_bb(f, m12_3, static_cast<std::size_t>(t.i), k));
              Vec rhs = zero_vec(f, dw);
              for (const Term& t : m23.on_basis(j, k))
                axpy(rhs, t.c,
                     mul_bb(f, m1_23, i, static_cast<std::size_t>(t.i)));
              r.expect_eq("lambda_graded.assoc",
                          "(" + lbl(b.lambda.monoid.elements, l1) + "," +
                              lbl(b.lambda.monoid.elements, l2) + "," +
                              lbl(b.lambda.monoid.elements, l3) + ")",
                          lhs, rhs);
            }
      }

  const int le = b.lambda.identity();
  for (int l = 0; l < nl; ++l) {
    const Space& s = b.at(l);
    for (std::size_t i = 0; i < s.dim(); ++i) {
      const Vec ei = basis_vec(f, s.dim(), i);
      r.expect_eq("lambda_graded.unit",
                  lbl(b.lambda.monoid.elements, l) + "; " + s.basis[i],
                  b.mul(le, l).apply(f, b.unit, ei), ei);
      r.expect_eq("lambda_graded.unit",
                  lbl(b.lambda.monoid.elements, l) + "; " + s.basis[i],
                  b.mul(l, le).apply(f, ei, b.unit), ei);
    }
  }

  if (b.has_action()) {
    for (int l = 0; l < nl; ++l) {
      const int gi = h.ginv(b.gamma[l]);
      const Space& hs = h.at(gi);
      const Space& bs = b.at(l);
      const MultTensor& act = b.hact[l];
      for (std::size_t p = 0; p < hs.dim(); ++p)
        for (std::size_t q = 0; q < hs.dim(); ++q)
          for (std::size_t i = 0; i < bs.dim(); ++i) {
            Vec lhs = zero_vec(f, bs.dim());
            for (const Term& t : act.on_basis(q, i))
              axpy(lhs, t.c, mul_bb(f, act, p, static_cast<std::size_t>(t.i)));
            Vec rhs = zero_vec(f, bs.dim());
            for (const Term& t : h.mult[gi].on_basis(p, q))
              axpy(rhs, t.c, mul_bb(f, act, static_cast<std::size_t>(t.i), i));
            r.expect_eq("lambda_graded.haction_assoc",
                        lbl(b.lambda.monoid.elements, l) + "; " + hs.basis[p] +
                            "," + hs.basis[q] + "," + bs.basis[i],
                        lhs, rhs);
          }
      for (std::size_t i = 0; i < bs.dim(); ++i) {
        const Vec ei = basis_vec(f, bs.dim(), i);
        r.expect_eq("lambda_graded.haction_unit",
                    lbl(b.lambda.monoid.elements, l) + "; " + bs.basis[i],
                    act.apply(f, h.unit[gi], ei), ei);
      }
    }
  }
  return r;
}

Vec left_dual_action(const Field& f, const ModuleCoalgebra& c, int l_inv,
                     const Vec& xi, const Vec& h) {
  const MultTensor& act = c.action[l_inv];
  const std::size_t dim = c.at(l_inv).dim();
  Vec out = zero_vec(f, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const Vec moved = act.apply(f, basis_vec(f, dim, i), h);
    out[i] = pair_dual(f, xi, moved);
  }
  return out;
}

LambdaGradedAlgebra dual_b_algebra(const HopfGC& h,
                                   const DiscreteDoiHopfDatum& d,
                                   const ModuleCoalgebra& c) {
  LambdaGradedAlgebra b;
  b.field = c.c.field;
  b.lambda = require_group(d.lambda, "the structure monoid of the dual");
  b.gamma = d.gamma;
  const Field& f = b.field;
  const int nl = static_cast<int>(b.lambda.size());
  for (int l = 0; l < nl; ++l) b.comp.push_back(dual_space(c.at(b.lambda.inv[l])));

  for (int l1 = 0; l1 < nl; ++l1)
    for (int l2 = 0; l2 < nl; ++l2) {
      const int l12 = b.lambda.op(l1, l2);
      const CoMultTensor& delta =
          c.c.delta(b.lambda.inv[l2], b.lambda.inv[l1]);
      MultTensor m{b.at(l1), b.at(l2), b.at(l12), {}};
      const std::size_t d1 = b.at(l1).dim(), d2 = b.at(l2).dim();
      for (std::size_t i = 0; i < d1; ++i)
        for (std::size_t j = 0; j < d2; ++j) {
          const Vec prod = opposite_convolution(
              f, delta, basis_vec(f, d1, i), basis_vec(f, d2, j));
          for (std::size_t k = 0; k < prod.size(); ++k)
            if (!prod[k].is_zero())
              m.entries[{static_cast<int>(i), static_cast<int>(j),
                         static_cast<int>(k)}] = prod[k];
        }
      b.mult.emplace(std::make_pair(l1, l2), std::move(m));
    }

  b.unit = c.c.counit;

  for (int l = 0; l < nl; ++l) {
    const int li = b.lambda.inv[l];
    const int gi = h.ginv(d.gamma[l]);
    MultTensor act{h.at(gi), b.at(l), b.at(l), {}};
    const std::size_t dh = h.at(gi).dim(), db = b.at(l).dim();
    for (std::size_t p = 0; p < dh; ++p)
      for (std::size_t i = 0; i < db; ++i) {
        const Vec moved = left_dual_action(f, c, li, basis_vec(f, db, i),
                                           basis_vec(f, dh, p));
        for (std::size_t k = 0; k < moved.size(); ++k)
          if (!moved[k].is_zero())
            act.entries[{static_cast<int>(p), static_cast<int>(i),
                         static_cast<int>(k)}] = moved[k];
      }
    b.hact.push_back(std::move(act));
  }
  return b;
}

ValidationReport check_phi_family(const HopfGC& h, PhiSide side, int x0,
                                  const std::vector<LinMap>& phi) {
  ValidationReport r;
  const Field& f = h.field;
  const int n = static_cast<int>(h.grading.size());
  const int x0i = h.ginv(x0);
  auto sigma = [&](int l) {
    return side == PhiSide::Left ? h.grading.op(h.grading.op(x0, l), x0i)
                                 : h.grading.op(h.grading.op(x0i, l), x0);
  };

  r.count("phi.shape");
  bool shape = static_cast<int>(phi.size()) == n;
  for (int l = 0; l < n && shape; ++l)
    if (phi[l].domain != h.at(sigma(l)) || phi[l].codomain != h.at(l))
      shape = false;
  if (!shape) {
    r.fail("phi.shape", "phi tables", "phi_l : H_{sigma(l)} -> H_l", "");
    return r;
  }

  for (int l = 0; l < n; ++l) {
    const int sl = sigma(l);
    const Space& ds = h.at(sl);
    const Space& cs = h.at(l);
    for (std::size_t i = 0; i < ds.dim(); ++i)
      for (std::size_t j = 0; j < ds.dim(); ++j) {
        Vec lhs = zero_vec(f, cs.dim());
        for (const Term& t : h.mult[sl].on_basis(i, j))
          axpy(lhs, t.c,
               phi[l].apply(f, basis_vec(f, ds.dim(),
                                         static_cast<std::size_t>(t.i))));
        const Vec rhs =
            h.mult[l].apply(f, phi[l].apply(f, basis_vec(f, ds.dim(), i)),
                            phi[l].apply(f, basis_vec(f, ds.dim(), j)));
        r.expect_eq("phi.algebra_map",
                    lbl(h.grading.elements, l) + "; " + ds.basis[i] + "," +
                        ds.basis[j],
                    lhs, rhs);
      }
    r.expect_eq("phi.unit", lbl(h.grading.elements, l),
                phi[l].apply(f, h.unit[sl]), h.unit[l]);
  }

  const int e = h.grading.identity;
  const Space& he = h.at(e);
  for (std::size_t i = 0; i < he.dim(); ++i) {
    r.expect_scalar_eq(
        "phi.counit", he.basis[i],
        pair_dual(f, h.counit, phi[e].apply(f, basis_vec(f, he.dim(), i))),
        h.counit.at(i));
  }

  for (int l1 = 0; l1 < n; ++l1)
    for (int l2 = 0; l2 < n; ++l2) {
      const int l12 = h.grading.op(l1, l2);
      const Space& src = h.at(sigma(l12));
      const std::size_t d1 = h.at(l1).dim(), d2 = h.at(l2).dim();
      for (std::size_t s = 0; s < src.dim(); ++s) {
        Acc2 lhs, rhs;
        const Vec moved = phi[l12].apply(f, basis_vec(f, src.dim(), s));
        for (std::size_t w = 0; w < moved.size(); ++w) {
          if (moved[w].is_zero()) continue;
          for (const Term2& t : h.delta(l1, l2).on_basis(w))
            lhs.add(moved[w] * t.c, t.i, t.j);
        }
        for (const Term2& t : split2(h, sigma(l1), sigma(l2),
                                     static_cast<int>(s))) {
          const Vec a = phi[l1].apply(
              f, basis_vec(f, h.at(sigma(l1)).dim(),
                           static_cast<std::size_t>(t.i)));
          const Vec bvec = phi[l2].apply(
              f, basis_vec(f, h.at(sigma(l2)).dim(),
                           static_cast<std::size_t>(t.j)));
          for (std::size_t p = 0; p < a.size(); ++p) {
            if (a[p].is_zero()) continue;
            for (std::size_t q = 0; q < bvec.size(); ++q)
              if (!bvec[q].is_zero())
                rhs.add(t.c * a[p] * bvec[q], static_cast<int>(p),
                        static_cast<int>(q));
          }
        }
        r.expect_eq("phi.comult",
                    "(" + lbl(h.grading.elements, l1) + "," +
                        lbl(h.grading.elements, l2) + "); " + src.basis[s],
                    lhs.dense(f, d1, d2), rhs.dense(f, d1, d2));
      }
    }
  return r;
}

std::vector<Term3> Co3Tensor::on_basis(std::size_t s) const {
  std::vector<Term3> out;
  auto it = entries.lower_bound({static_cast<int>(s), 0, 0, 0});
  for (; it != entries.end() && std::get<0>(it->first) == static_cast<int>(s);
       ++it)
    out.push_back({it->second, std::get<1>(it->first),
                   std::get<2>(it->first), std::get<3>(it->first)});
  return out;
}

namespace {

/// Right partial coaction (eps_K (x) id (x) id) rho_{e,x,g} of a two-sided
/// datum, as a coaction tensor A_{x.g} -> A_x (x) H_g.
CoMultTensor right_partial(const TwoSidedDatum& t, int x, int g) {
  const int ek = t.k.grading.identity;
  const Co3Tensor& co = t.a_coaction.at({ek, x, g});
  CoMultTensor out{co.src, co.second, co.third, {}};
  for (std::size_t s = 0; s < co.src.dim(); ++s)
    for (const Term3& u : co.on_basis(s)) {
      const Scalar c = u.c * t.k.counit.at(static_cast<std::size_t>(u.i));
      if (c.is_zero()) continue;
      auto key = std::make_tuple(static_cast<int>(s), u.j, u.k);
      auto it = out.entries.find(key);
      if (it == out.entries.end())
        out.entries.emplace(key, c);
      else if ((it->second += c).is_zero())
        out.entries.erase(it);
    }
  return out;
}

/// Left partial coaction (id (x) id (x) eps_H) rho_{l,x,e}, as a coaction
/// tensor A_{l.x} -> K_l (x) A_x.
CoMultTensor left_partial(const TwoSidedDatum& t, int l, int x) {
  const int eg = t.h.grading.identity;
  const Co3Tensor& co = t.a_coaction.at({l, x, eg});
  CoMultTensor out{co.src, co.first, co.second, {}};
  for (std::size_t s = 0; s < co.src.dim(); ++s)
    for (const Term3& u : co.on_basis(s)) {
      const Scalar c = u.c * t.h.counit.at(static_cast<std::size_t>(u.k));
      if (c.is_zero()) continue;
      auto key = std::make_tuple(static_cast<int>(s), u.i, u.j);
      auto it = out.entries.find(key);
      if (it == out.entries.end())
        out.entries.emplace(key, c);
      else if ((it->second += c).is_zero())
        out.entries.erase(it);
    }
  return out;
}

std::vector<int> iota(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
  return v;
}

}  // namespace

ValidationReport check_two_sided_datum(const TwoSidedDatum& t) {
  ValidationReport r;
  r.merge(check_hopf(t.k));
  r.merge(check_hopf(t.h));
  r.merge(check_group_coalgebra(t.c));
  if (!r.ok()) return r;
  const Field& f = t.c.field;
  const int nl = static_cast<int>(t.k.grading.size());
  const int ng = static_cast<int>(t.h.grading.size());
  const int nx = static_cast<int>(t.x_carrier.size());
  const int nc = static_cast<int>(t.c.grading.size());
  const int ek = t.k.grading.identity;
  const int eg = t.h.grading.identity;

  r.count("twosided.shape");
  bool shape = t.k.field == f && t.h.field == f &&
               static_cast<int>(t.left_act.size()) == nl &&
               static_cast<int>(t.right_act.size()) == nx &&
               static_cast<int>(t.a_comp.size()) == nx &&
               static_cast<int>(t.a_mult.size()) == nx &&
               static_cast<int>(t.a_unit.size()) == nx &&
               static_cast<int>(t.psi.size()) == nc &&
               static_cast<int>(t.gamma.size()) == nc &&
               static_cast<int>(t.c_left.size()) == nc &&
               static_cast<int>(t.c_right.size()) == nc;
  for (int l = 0; l < nl && shape; ++l) {
    if (static_cast<int>(t.left_act[l].size()) != nx) shape = false;
    for (int x = 0; x < nx && shape; ++x)
      if (t.left_act[l][x] < 0 || t.left_act[l][x] >= nx) shape = false;
  }
  for (int x = 0; x < nx && shape; ++x) {
    if (static_cast<int>(t.right_act[x].size()) != ng) shape = false;
    for (int g = 0; g < ng && shape; ++g)
      if (t.right_act[x][g] < 0 || t.right_act[x][g] >= nx) shape = false;
  }
  for (int x = 0; x < nx && shape; ++x) {
    const MultTensor& m = t.a_mult[x];
    if (m.u != t.a_comp[x] || m.v != t.a_comp[x] || m.w != t.a_comp[x])
      shape = false;
    if (t.a_unit[x].size() != t.a_comp[x].dim()) shape = false;
  }
  for (int lam = 0; lam < nc && shape; ++lam) {
    if (t.psi[lam] < 0 || t.psi[lam] >= nl || t.gamma[lam] < 0 ||
        t.gamma[lam] >= ng)
      shape = false;
    if (!shape) break;
    const MultTensor& cl = t.c_left[lam];
    const MultTensor& cr = t.c_right[lam];
    if (cl.u != t.k.at(t.psi[lam]) || cl.v != t.c.at(lam) ||
        cl.w != t.c.at(lam))
      shape = false;
    if (cr.u != t.c.at(lam) || cr.v != t.h.at(t.gamma[lam]) ||
        cr.w != t.c.at(lam))
      shape = false;
  }
  for (int l = 0; l < nl && shape; ++l)
    for (int x = 0; x < nx && shape; ++x)
      for (int g = 0; g < ng && shape; ++g) {
        auto it = t.a_coaction.find({l, x, g});
        if (it == t.a_coaction.end()) {
          shape = false;
          break;
        }
        const Co3Tensor& co = it->second;
        if (co.src != t.a_comp[t.left_act[l][t.right_act[x][g]]] ||
            co.first != t.k.at(l) || co.second != t.a_comp[x] ||
            co.third != t.h.at(g))
          shape = false;
      }
  if (!shape) {
    r.fail("twosided.shape", "tables",
           "three-leg coactions A_{l.x.g} -> K_l (x) A_x (x) H_g and "
           "two-sided C actions",
           "");
    return r;
  }

  for (int x = 0; x < nx; ++x) {
    r.expect_true("twosided.x_identity", t.x_carrier[x],
                  t.right_act[x][eg] == x && t.left_act[ek][x] == x,
                  "identity acts trivially");
    for (int g1 = 0; g1 < ng; ++g1)
      for (int g2 = 0; g2 < ng; ++g2)
        r.expect_true("twosided.x_right_assoc",
                      t.x_carrier[x] + "," + t.h.grading.elements[g1] + "," +
                          t.h.grading.elements[g2],
                      t.right_act[t.right_act[x][g1]][g2] ==
                          t.right_act[x][t.h.grading.op(g1, g2)],
                      "(x.g).g' = x.(gg')");
    for (int l1 = 0; l1 < nl; ++l1)
      for (int l2 = 0; l2 < nl; ++l2)
        r.expect_true("twosided.x_left_assoc",
                      t.k.grading.elements[l1] + "," +
                          t.k.grading.elements[l2] + "," + t.x_carrier[x],
                      t.left_act[l1][t.left_act[l2][x]] ==
                          t.left_act[t.k.grading.op(l1, l2)][x],
                      "l.(l'.x) = (ll').x");
    for (int l = 0; l < nl; ++l)
      for (int g = 0; g < ng; ++g)
        r.expect_true("twosided.x_commute",
                      t.k.grading.elements[l] + "," + t.x_carrier[x] + "," +
                          t.h.grading.elements[g],
                      t.left_act[l][t.right_act[x][g]] ==
                          t.right_act[t.left_act[l][x]][g],
                      "l.(x.g) = (l.x).g");
  }

  r.expect_true("twosided.maps", "identity",
                t.psi[t.c.grading.identity] == ek &&
                    t.gamma[t.c.grading.identity] == eg,
                "psi/gamma preserve the identity");
  for (int l1 = 0; l1 < nc; ++l1)
    for (int l2 = 0; l2 < nc; ++l2)
      r.expect_true(
          "twosided.maps",
          t.c.grading.elements[l1] + "," + t.c.grading.elements[l2],
          t.psi[t.c.grading.op(l1, l2)] ==
                  t.k.grading.op(t.psi[l1], t.psi[l2]) &&
              t.gamma[t.c.grading.op(l1, l2)] ==
                  t.h.grading.op(t.gamma[l1], t.gamma[l2]),
          "psi/gamma are monoid maps");
  if (!r.ok()) return r;

  // The right partial coactions assemble into a comodule algebra over H.
  ComoduleAlgebra right_ca;
  right_ca.field = f;
  right_ca.x = RightGSet{t.h.grading, t.x_carrier, t.right_act};
  right_ca.comp = t.a_comp;
  right_ca.mult = t.a_mult;
  right_ca.unit = t.a_unit;
  for (int x = 0; x < nx; ++x)
    for (int g = 0; g < ng; ++g)
      right_ca.coaction.emplace(std::make_pair(x, g), right_partial(t, x, g));
  r.merge(check_comodule_algebra(t.h, right_ca));

  // Left comodule axioms for the extracted left partial coactions.
  std::map<std::pair<int, int>, CoMultTensor> lam_co;
  for (int l = 0; l < nl; ++l)
    for (int x = 0; x < nx; ++x)
      lam_co.emplace(std::make_pair(l, x), left_partial(t, l, x));

  for (int l1 = 0; l1 < nl; ++l1)
    for (int l2 = 0; l2 < nl; ++l2)
      for (int x = 0; x < nx; ++x) {
        const int l12 = t.k.grading.op(l1, l2);
        const int l2x = t.left_act[l2][x];
        const CoMultTensor& full = lam_co.at({l12, x});
        const CoMultTensor& outer_la = lam_co.at({l1, l2x});
        const CoMultTensor& inner = lam_co.at({l2, x});
        const Space& src = t.a_comp[t.left_act[l12][x]];
        const std::size_t d1 = t.k.at(l1).dim(), d2 = t.k.at(l2).dim(),
                          d3 = t.a_comp[x].dim();
        for (std::size_t s = 0; s < src.dim(); ++s) {
          Acc3 lhs, rhs;
          for (const Term2& u : full.on_basis(s))
            for (const Term2& v : split2(t.k, l1, l2, u.i))
              lhs.add(u.c * v.c, v.i, v.j, u.j);
          for (const Term2& u : outer_la.on_basis(s))
            for (const Term2& v : inner.on_basis(static_cast<std::size_t>(u.j)))
              rhs.add(u.c * v.c, u.i, v.i, v.j);
          r.expect_eq("twosided.left_coassoc",
                      "(" + t.k.grading.elements[l1] + "," +
                          t.k.grading.elements[l2] + ")," + t.x_carrier[x] +
                          "; " + src.basis[s],
                      lhs.dense(f, d1, d2, d3), rhs.dense(f, d1, d2, d3));
        }
      }

  for (int x = 0; x < nx; ++x) {
    const Space& s = t.a_comp[x];
    const CoMultTensor& la = lam_co.at({ek, x});
    for (std::size_t i = 0; i < s.dim(); ++i) {
      Vec got = zero_vec(f, s.dim());
      for (const Term2& u : la.on_basis(i))
        got[u.j] += u.c * t.k.counit.at(static_cast<std::size_t>(u.i));
      r.expect_eq("twosided.left_counit", t.x_carrier[x] + "; " + s.basis[i],
                  got, basis_vec(f, s.dim(), i));
    }
  }

  for (int l = 0; l < nl; ++l)
    for (int x = 0; x < nx; ++x) {
      const int lx = t.left_act[l][x];
      const CoMultTensor& la = lam_co.at({l, x});
      const std::size_t d1 = t.k.at(l).dim(), d2 = t.a_comp[x].dim();
      const Space& src = t.a_comp[lx];
      for (std::size_t i = 0; i < src.dim(); ++i)
        for (std::size_t j = 0; j < src.dim(); ++j) {
          Acc2 lhs, rhs;
          for (const Term& u : t.a_mult[lx].on_basis(i, j))
            for (const Term2& v : la.on_basis(static_cast<std::size_t>(u.i)))
              lhs.add(u.c * v.c, v.i, v.j);
          for (const Term2& u : la.on_basis(i))
            for (const Term2& v : la.on_basis(j))
              for (const Term& tk :
                   t.k.mult[l].on_basis(static_cast<std::size_t>(u.i),
                                        static_cast<std::size_t>(v.i)))
                for (const Term& ta :
                     t.a_mult[x].on_basis(static_cast<std::size_t>(u.j),
                                          static_cast<std::size_t>(v.j)))
                  rhs.add(u.c * v.c * tk.c * ta.c, tk.i, ta.i);
          r.expect_eq("twosided.left_mult",
                      t.k.grading.elements[l] + "," + t.x_carrier[x] + "; " +
                          src.basis[i] + "," + src.basis[j],
                      lhs.dense(f, d1, d2), rhs.dense(f, d1, d2));
        }
      Acc2 du;
      for (const Term2& u : la.apply(f, t.a_unit[lx])) du.add(u.c, u.i, u.j);
      r.expect_eq("twosided.left_unit",
                  t.k.grading.elements[l] + "," + t.x_carrier[x],
                  du.dense(f, d1, d2), outer(f, t.k.unit[l], t.a_unit[x]));
    }

  // Both recombinations of the partial coactions reproduce the full tensor.
  for (int l = 0; l < nl; ++l)
    for (int x = 0; x < nx; ++x)
      for (int g = 0; g < ng; ++g) {
        const int xg = t.right_act[x][g];
        const int lx = t.left_act[l][x];
        const Co3Tensor& co = t.a_coaction.at({l, x, g});
        const CoMultTensor& la_outer = lam_co.at({l, xg});
        const CoMultTensor& rr_inner = right_ca.rho(x, g);
        const CoMultTensor& rr_outer = right_ca.rho(lx, g);
        const CoMultTensor& la_inner = lam_co.at({l, x});
        const std::size_t d1 = t.k.at(l).dim(), d2 = t.a_comp[x].dim(),
                          d3 = t.h.at(g).dim();
        const std::string where = t.k.grading.elements[l] + "," +
                                  t.x_carrier[x] + "," +
                                  t.h.grading.elements[g];
        for (std::size_t s = 0; s < co.src.dim(); ++s) {
          Acc3 full;
          for (const Term3& u : co.on_basis(s)) full.add(u.c, u.i, u.j, u.k);
          const Vec dense_full = full.dense(f, d1, d2, d3);
          Acc3 via_left, via_right;
          for (const Term2& u : la_outer.on_basis(s))
            for (const Term2& v :
                 rr_inner.on_basis(static_cast<std::size_t>(u.j)))
              via_left.add(u.c * v.c, u.i, v.i, v.j);
          for (const Term2& u : rr_outer.on_basis(s))
            for (const Term2& v :
                 la_inner.on_basis(static_cast<std::size_t>(u.i)))
              via_right.add(u.c * v.c, v.i, v.j, u.j);
          r.expect_eq("twosided.recombine_left_first",
                      where + "; " + co.src.basis[s], dense_full,
                      via_left.dense(f, d1, d2, d3));
          r.expect_eq("twosided.recombine_right_first",
                      where + "; " + co.src.basis[s], dense_full,
                      via_right.dense(f, d1, d2, d3));
        }

        // The three-leg coaction is itself an algebra map.
        const int src_idx = t.left_act[l][xg];
        const Space& src = t.a_comp[src_idx];
        for (std::size_t i = 0; i < src.dim(); ++i)
          for (std::size_t j = 0; j < src.dim(); ++j) {
            Acc3 lhs, rhs;
            for (const Term& u : t.a_mult[src_idx].on_basis(i, j))
              for (const Term3& v : co.on_basis(static_cast<std::size_t>(u.i)))
                lhs.add(u.c * v.c, v.i, v.j, v.k);
            for (const Term3& u : co.on_basis(i))
              for (const Term3& v : co.on_basis(j))
                for (const Term& tk :
                     t.k.mult[l].on_basis(static_cast<std::size_t>(u.i),
                                          static_cast<std::size_t>(v.i)))
                  for (const Term& ta :
                       t.a_mult[x].on_basis(static_cast<std::size_t>(u.j),
                                            static_cast<std::size_t>(v.j)))
                    for (const Term& th :
                         t.h.mult[g].on_basis(static_cast<std::size_t>(u.k),
                                              static_cast<std::size_t>(v.k)))
                      rhs.add(u.c * v.c * tk.c * ta.c * th.c, tk.i, ta.i,
                              th.i);
            r.expect_eq("twosided.coaction3_mult",
                        where + "; " + src.basis[i] + "," + src.basis[j],
                        lhs.dense(f, d1, d2, d3), rhs.dense(f, d1, d2, d3));
          }
        Acc3 du;
        for (std::size_t s = 0; s < src.dim(); ++s) {
          if (t.a_unit[src_idx][s].is_zero()) continue;
          for (const Term3& u : co.on_basis(s))
            du.add(t.a_unit[src_idx][s] * u.c, u.i, u.j, u.k);
        }
        Acc3 unit3;
        for (std::size_t p = 0; p < d1; ++p)
          for (std::size_t q = 0; q < d2; ++q)
            for (std::size_t w = 0; w < d3; ++w) {
              const Scalar c =
                  t.k.unit[l][p] * t.a_unit[x][q] * t.h.unit[g][w];
              if (!c.is_zero())
                unit3.add(c, static_cast<int>(p), static_cast<int>(q),
                          static_cast<int>(w));
            }
        r.expect_eq("twosided.coaction3_unit", where, du.dense(f, d1, d2, d3),
                    unit3.dense(f, d1, d2, d3));
      }

  // C is a (K, H)-bimodule coalgebra in every component.
  for (int lam = 0; lam < nc; ++lam) {
    const Space& cs = t.c.at(lam);
    const Space& ks = t.k.at(t.psi[lam]);
    const Space& hs = t.h.at(t.gamma[lam]);
    const MultTensor& cl = t.c_left[lam];
    const MultTensor& cr = t.c_right[lam];
    const std::string where = t.c.grading.elements[lam];
    for (std::size_t i = 0; i < cs.dim(); ++i) {
      for (std::size_t p = 0; p < ks.dim(); ++p)
        for (std::size_t q = 0; q < ks.dim(); ++q) {
          Vec lhs = zero_vec(f, cs.dim());
          for (const Term& u : cl.on_basis(q, i))
            axpy(lhs, u.c, mul_bb(f, cl, p, static_cast<std::size_t>(u.i)));
          Vec rhs = zero_vec(f, cs.dim());
          for (const Term& u :
               t.k.mult[t.psi[lam]].on_basis(p, q))
            axpy(rhs, u.c, mul_bb(f, cl, static_cast<std::size_t>(u.i), i));
          r.expect_eq("twosided.c_left_assoc",
                      where + "; " + ks.basis[p] + "," + ks.basis[q] + "," +
                          cs.basis[i],
                      lhs, rhs);
        }
      for (std::size_t p = 0; p < hs.dim(); ++p)
        for (std::size_t q = 0; q < hs.dim(); ++q) {
          Vec lhs = zero_vec(f, cs.dim());
          for (const Term& u : cr.on_basis(i, p))
            axpy(lhs, u.c, mul_bb(f, cr, static_cast<std::size_t>(u.i), q));
          Vec rhs = zero_vec(f, cs.dim());
          for (const Term& u :
               t.h.mult[t.gamma[lam]].on_basis(p, q))
            axpy(rhs, u.c, mul_bb(f, cr, i, static_cast<std::size_t>(u.i)));
          r.expect_eq("twosided.c_right_assoc",
                      where + "; " + cs.basis[i] + "," + hs.basis[p] + "," +
                          hs.basis[q],
                      lhs, rhs);
        }
      const Vec ei = basis_vec(f, cs.dim(), i);
      r.expect_eq("twosided.c_unit", where + "; " + cs.basis[i],
                  cl.apply(f, t.k.unit[t.psi[lam]], ei), ei);
      r.expect_eq("twosided.c_unit", where + "; " + cs.basis[i],
                  cr.apply(f, ei, t.h.unit[t.gamma[lam]]), ei);
      for (std::size_t p = 0; p < ks.dim(); ++p)
        for (std::size_t q = 0; q < hs.dim(); ++q) {
          Vec lhs = zero_vec(f, cs.dim());
          for (const Term& u : cl.on_basis(p, i))
            axpy(lhs, u.c, mul_bb(f, cr, static_cast<std::size_t>(u.i), q));
          Vec rhs = zero_vec(f, cs.dim());
          for (const Term& u : cr.on_basis(i, q))
            axpy(rhs, u.c, mul_bb(f, cl, p, static_cast<std::size_t>(u.i)));
          r.expect_eq("twosided.c_bimodule",
                      where + "; " + ks.basis[p] + "," + cs.basis[i] + "," +
                          hs.basis[q],
                      lhs, rhs);
        }
    }
  }

  // Comultiplication intertwines both actions leg by leg.
  for (int l1 = 0; l1 < nc; ++l1)
    for (int l2 = 0; l2 < nc; ++l2) {
      const int l12 = t.c.grading.op(l1, l2);
      const Space& cs = t.c.at(l12);
      const Space& ks = t.k.at(t.psi[l12]);
      const Space& hs = t.h.at(t.gamma[l12]);
      const CoMultTensor& dl = t.c.delta(l1, l2);
      const std::size_t d1 = t.c.at(l1).dim(), d2 = t.c.at(l2).dim();
      for (std::size_t i = 0; i < cs.dim(); ++i)
        for (std::size_t p = 0; p < ks.dim(); ++p)
          for (std::size_t q = 0; q < hs.dim(); ++q) {
            Acc2 lhs, rhs;
            Vec moved = zero_vec(f, cs.dim());
            for (const Term& u : t.c_left[l12].on_basis(p, i))
              axpy(moved, u.c,
                   mul_bb(f, t.c_right[l12], static_cast<std::size_t>(u.i),
                          q));
            for (std::size_t w = 0; w < moved.size(); ++w) {
              if (moved[w].is_zero()) continue;
              for (const Term2& u : dl.on_basis(w))
                lhs.add(moved[w] * u.c, u.i, u.j);
            }
            for (const Term2& u : dl.on_basis(i))
              for (const Term2& sk :
                   split2(t.k, t.psi[l1], t.psi[l2], static_cast<int>(p)))
                for (const Term2& sh :
                     split2(t.h, t.gamma[l1], t.gamma[l2],
                            static_cast<int>(q)))
                  for (const Term& a1 : t.c_left[l1].on_basis(
                           static_cast<std::size_t>(sk.i),
                           static_cast<std::size_t>(u.i)))
                    for (const Term& b1 : t.c_right[l1].on_basis(
                             static_cast<std::size_t>(a1.i),
                             static_cast<std::size_t>(sh.i)))
                      for (const Term& a2 : t.c_left[l2].on_basis(
                               static_cast<std::size_t>(sk.j),
                               static_cast<std::size_t>(u.j)))
                        for (const Term& b2 : t.c_right[l2].on_basis(
                                 static_cast<std::size_t>(a2.i),
                                 static_cast<std::size_t>(sh.j)))
                          rhs.add(u.c * sk.c * sh.c * a1.c * b1.c * a2.c *
                                      b2.c,
                                  b1.i, b2.i);
            r.expect_eq("twosided.c_comult_compat",
                        "(" + t.c.grading.elements[l1] + "," +
                            t.c.grading.elements[l2] + "); " + ks.basis[p] +
                            "," + cs.basis[i] + "," + hs.basis[q],
                        lhs.dense(f, d1, d2), rhs.dense(f, d1, d2));
          }
    }

  const int ec = t.c.grading.identity;
  {
    const Space& cs = t.c.at(ec);
    const Space& ks = t.k.at(ek);
    const Space& hs = t.h.at(eg);
    for (std::size_t i = 0; i < cs.dim(); ++i)
      for (std::size_t p = 0; p < ks.dim(); ++p)
        for (std::size_t q = 0; q < hs.dim(); ++q) {
          Scalar lhs = f.zero();
          for (const Term& u : t.c_left[ec].on_basis(p, i))
            for (const Term& v :
                 t.c_right[ec].on_basis(static_cast<std::size_t>(u.i), q))
              lhs += u.c * v.c * t.c.counit.at(static_cast<std::size_t>(v.i));
          r.expect_scalar_eq("twosided.c_counit_compat",
                             ks.basis[p] + "," + cs.basis[i] + "," +
                                 hs.basis[q],
                             lhs,
                             t.k.counit.at(p) * t.c.counit.at(i) *
                                 t.h.counit.at(q));
        }
  }
  return r;
}

DoiHopfDatumTk fold_two_sided(const TwoSidedDatum& t) {
  DoiHopfDatumTk d;
  d.h = tensor_hgc(opposite_hgc(t.k), t.h);
  const Field& f = t.c.field;
  const int nl = static_cast<int>(t.k.grading.size());
  const int ng = static_cast<int>(t.h.grading.size());
  const int nx = static_cast<int>(t.x_carrier.size());
  const int nc = static_cast<int>(t.c.grading.size());
  auto pair_idx = [&](int l, int g) { return l * ng + g; };

  d.discrete.acting = d.h.grading;
  d.discrete.lambda = t.c.grading;
  d.discrete.gamma.resize(static_cast<std::size_t>(nc));
  for (int lam = 0; lam < nc; ++lam)
    d.discrete.gamma[static_cast<std::size_t>(lam)] =
        pair_idx(t.psi[lam], t.gamma[lam]);
  d.discrete.x.acting = d.h.grading;
  d.discrete.x.carrier = t.x_carrier;
  d.discrete.x.action.assign(static_cast<std::size_t>(nx),
                             std::vector<int>(static_cast<std::size_t>(nl * ng)));
  for (int x = 0; x < nx; ++x)
    for (int l = 0; l < nl; ++l)
      for (int g = 0; g < ng; ++g)
        d.discrete.x.action[x][static_cast<std::size_t>(pair_idx(l, g))] =
            t.right_act[t.left_act[t.k.ginv(l)][x]][g];

  d.a.field = f;
  d.a.x = d.discrete.x;
  d.a.comp = t.a_comp;
  d.a.mult = t.a_mult;
  d.a.unit = t.a_unit;
  for (int x = 0; x < nx; ++x)
    for (int l = 0; l < nl; ++l)
      for (int g = 0; g < ng; ++g) {
        const int li = t.k.ginv(l);
        const Co3Tensor& co = t.a_coaction.at({li, x, g});
        const std::size_t dk = t.k.at(l).dim(), dh = t.h.at(g).dim();
        CoMultTensor rho{co.src, t.a_comp[x], d.h.at(pair_idx(l, g)), {}};
        for (std::size_t s = 0; s < co.src.dim(); ++s) {
          Acc2 acc;
          for (const Term3& u : co.on_basis(s)) {
            const Vec sk = t.k.antipode[static_cast<std::size_t>(l)].apply(
                f, basis_vec(f, t.k.at(li).dim(),
                             static_cast<std::size_t>(u.i)));
            for (std::size_t p = 0; p < dk; ++p)
              if (!(u.c * sk[p]).is_zero())
                acc.add(u.c * sk[p], u.j,
                        static_cast<int>(flat(p, static_cast<std::size_t>(u.k),
                                              dh)));
          }
          for (const auto& [ij, c] : acc.m)
            rho.entries[{static_cast<int>(s), ij.first, ij.second}] = c;
        }
        d.a.coaction.emplace(std::make_pair(x, pair_idx(l, g)),
                             std::move(rho));
      }

  d.c.c = t.c;
  d.c.gamma = d.discrete.gamma;
  for (int lam = 0; lam < nc; ++lam) {
    const int pl = t.psi[lam], pg = t.gamma[lam];
    const Space& cs = t.c.at(lam);
    const std::size_t dk = t.k.at(pl).dim(), dh = t.h.at(pg).dim();
    MultTensor act{cs, d.h.at(pair_idx(pl, pg)), cs, {}};
    for (std::size_t i = 0; i < cs.dim(); ++i)
      for (std::size_t kk = 0; kk < dk; ++kk)
        for (std::size_t hh = 0; hh < dh; ++hh) {
          Vec out = zero_vec(f, cs.dim());
          for (const Term& u : t.c_left[lam].on_basis(kk, i))
            axpy(out, u.c,
                 mul_bb(f, t.c_right[lam], static_cast<std::size_t>(u.i),
                        hh));
          for (std::size_t w = 0; w < out.size(); ++w)
            if (!out[w].is_zero())
              act.entries[{static_cast<int>(i),
                           static_cast<int>(flat(kk, hh, dh)),
                           static_cast<int>(w)}] = out[w];
        }
    d.c.action.push_back(std::move(act));
  }
  return d;
}

TwoSidedDatum two_sided_from_hopf(const HopfGC& h) {
  TwoSidedDatum t;
  t.k = h;
  t.h = h;
  const int n = static_cast<int>(h.grading.size());
  t.x_carrier = h.grading.elements;
  t.left_act.assign(static_cast<std::size_t>(n),
                    std::vector<int>(static_cast<std::size_t>(n)));
  t.right_act = h.grading.mult;
  for (int l = 0; l < n; ++l)
    for (int x = 0; x < n; ++x)
      t.left_act[l][x] = h.grading.op(l, x);
  t.a_comp = h.comp;
  t.a_mult = h.mult;
  t.a_unit = h.unit;
  for (int l = 0; l < n; ++l)
    for (int x = 0; x < n; ++x)
      for (int g = 0; g < n; ++g) {
        const int src = h.grading.op(h.grading.op(l, x), g);
        Co3Tensor co{h.at(src), h.at(l), h.at(x), h.at(g), {}};
        for (std::size_t s = 0; s < h.at(src).dim(); ++s)
          for (const Term3& u : split3(h, l, x, g, static_cast<int>(s))) {
            auto key = std::make_tuple(static_cast<int>(s), u.i, u.j, u.k);
            auto it = co.entries.find(key);
            if (it == co.entries.end())
              co.entries.emplace(key, u.c);
            else
              it->second += u.c;
          }
        t.a_coaction.emplace(std::make_tuple(l, x, g), std::move(co));
      }
  t.c = static_cast<const GroupCoalgebra&>(h);
  t.psi = iota(n);
  t.gamma = iota(n);
  t.c_left = h.mult;
  t.c_right = h.mult;
  return t;
}

DoiHopfDatumTk datum_hhh(const HopfGC& h) {
  DoiHopfDatumTk d;
  d.h = h;
  const int n = static_cast<int>(h.grading.size());
  d.discrete.acting = h.grading;
  d.discrete.lambda = h.grading;
  d.discrete.gamma = iota(n);
  d.discrete.x = RightGSet{h.grading, h.grading.elements, h.grading.mult};
  d.a.field = h.field;
  d.a.x = d.discrete.x;
  d.a.comp = h.comp;
  d.a.mult = h.mult;
  d.a.unit = h.unit;
  for (int x = 0; x < n; ++x)
    for (int g = 0; g < n; ++g)
      d.a.coaction.emplace(std::make_pair(x, g), h.delta(x, g));
  d.c.c = static_cast<const GroupCoalgebra&>(h);
  d.c.gamma = iota(n);
  d.c.action = h.mult;
  return d;
}

DoiHopfModule hopf_module_over(const DoiHopfDatumTk& d) {
  DoiHopfModule m;
  const FiniteMonoid& g = d.discrete.lambda;
  const int n = static_cast<int>(g.size());
  m.y.carrier = g.elements;
  m.y.action = g.mult;
  m.y.beta = iota(n);
  m.comp = d.a.comp;
  m.action = d.a.mult;
  for (int y = 0; y < n; ++y)
    for (int l = 0; l < n; ++l)
      m.coaction.emplace(std::make_pair(y, l), d.c.c.delta(y, l));
  return m;
}

bool same_doihopf_datum(const DoiHopfDatumTk& a, const DoiHopfDatumTk& b) {
  auto same_hopf = [](const HopfGC& x, const HopfGC& y) {
    return x.field == y.field && x.grading == y.grading && x.comp == y.comp &&
           x.comult == y.comult && x.counit == y.counit && x.mult == y.mult &&
           x.unit == y.unit && x.inv == y.inv && x.antipode == y.antipode &&
           x.antipode_tw == y.antipode_tw;
  };
  auto same_gset = [](const RightGSet& x, const RightGSet& y) {
    return x.acting == y.acting && x.carrier == y.carrier &&
           x.action == y.action;
  };
  return same_hopf(a.h, b.h) && a.discrete.acting == b.discrete.acting &&
         a.discrete.lambda == b.discrete.lambda &&
         a.discrete.gamma == b.discrete.gamma &&
         same_gset(a.discrete.x, b.discrete.x) && a.a.field == b.a.field &&
         same_gset(a.a.x, b.a.x) && a.a.comp == b.a.comp &&
         a.a.mult == b.a.mult && a.a.unit == b.a.unit &&
         a.a.coaction == b.a.coaction && a.c.c.field == b.c.c.field &&
         a.c.c.grading == b.c.c.grading && a.c.c.comp == b.c.c.comp &&
         a.c.c.comult == b.c.c.comult && a.c.c.counit == b.c.c.counit &&
         a.c.gamma == b.c.gamma && a.c.action == b.c.action;
}

bool same_doihopf_module(const DoiHopfModule& a, const DoiHopfModule& b) {
  return a.y.carrier == b.y.carrier && a.y.action == b.y.action &&
         a.y.beta == b.y.beta && a.comp == b.comp && a.action == b.action &&
         a.coaction == b.coaction;
}

}  // namespace hgc
