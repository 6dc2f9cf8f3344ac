#pragma once

#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "hgc/graded.hpp"

namespace hgc {

/// The conjugation-type compatibility datum attached to a Hopf family H over
/// a group G.  The ambient family is H^op (x) H over G x G; the point set is
/// G with x . (g, g') = g^-1 x g'; the comodule algebra keeps the components
/// H_x with coactions routed through the three-leg expansion
/// h |-> h_(2) (x) (S_g(h_(1)) (x) h_(3)) for h in H_{g^-1 x g'}; the module
/// coalgebra is H itself with gamma the diagonal and the sandwich action
/// k . (a (x) b) = a k b.
DoiHopfDatumTk double_datum(const HopfGC& h);

/// A two-leg tensor element of A_{l1,x1} (x) A_{l2,x2} over a datum-graded
/// algebra.  Coefficients are flat row-major: index of the left component
/// basis times the right dimension plus index of the right basis.
struct Elem2 {
  int l1 = 0, x1 = 0, l2 = 0, x2 = 0;
  Vec coeff;

  bool operator==(const Elem2& o) const {
    return l1 == o.l1 && x1 == o.x1 && l2 == o.l2 && x2 == o.x2 &&
           coeff == o.coeff;
  }
  bool operator!=(const Elem2& o) const { return !(*this == o); }
};

/// A datum-graded algebra with componentwise comultiplications
/// Delta_{l,g,g'} : A_{l,g g'} -> A_{l,g} (x) A_{l,g'} and counits eps_l on
/// A_{l,e}, plus optional antipode pairs
/// S_{l,g}, S~_{l,g} : A_{l,g^-1} -> A_{l^-1, l g l^-1} and optional braiding
/// element families R_{g,g'} in A_{g^-1, g g' g^-1} (x) A_{e,g} and
/// Q_{g,g'} in A_{g, g^-1 g' g} (x) A_{e,g}.
struct GradedBialgebra {
  GradedAlgebra core;
  std::map<std::tuple<int, int, int>, CoMultTensor> comult;  // key (l, g, g')
  std::vector<Vec> counit;                       // per l, functional on A_{l,e}
  std::map<std::pair<int, int>, LinMap> antipode;     // key (l, g)
  std::map<std::pair<int, int>, LinMap> antipode_tw;  // key (l, g)
  std::map<std::pair<int, int>, Elem2> rmat;          // key (g, g')
  std::map<std::pair<int, int>, Elem2> qmat;          // key (g, g')

  bool has_antipodes() const { return !antipode.empty(); }
  bool has_rq() const { return !rmat.empty(); }
  const CoMultTensor& delta(int l, int g, int g2) const;
  const Vec& eps(int l) const;
  const LinMap& s_at(int l, int g) const;
  const LinMap& s_tw_at(int l, int g) const;
  const Elem2& r_at(int g, int g2) const;
  const Elem2& q_at(int g, int g2) const;
};

/// Which of the two identified presentations carries the product tensors of
/// the double: the smash form (dual components tensored with H) or the
/// Koppinen form (components of linear maps).  Both use the same flat basis
/// indexing, so comultiplication, counit, antipodes and braiding elements
/// are shared verbatim.
enum class DoubleForm { Smash, Koppinen };

/// The quantum double of a Hopf family H over G: components
/// D_{l,x} = H*_{l^-1} (x) H_x graded by the conjugation-type datum,
/// with the full graded Hopf structure and canonical braiding elements.
struct DrinfeldDouble {
  HopfGC h;  // the input family, twisted antipodes filled
  DoubleForm form = DoubleForm::Koppinen;
  GradedBialgebra alg;
};

/// Installs the comultiplications (dual-basis expansion of the product of
/// H_{l^-1} on the functional leg, componentwise comultiplication of H on
/// the other) and the counits eps_l(xi # h) = xi(1_{l^-1}) eps(h).
void double_comult_counit(DrinfeldDouble& d);

/// Installs both antipodes
///   S_{l,g}(xi # h) = (eps # S_g(h)) . (xi o S~_{l^-1} # 1),
///   S~_{l,g}(xi # h) = (eps # S~_g(h)) . (xi o S_{l^-1} # 1),
/// then verifies all four cancellation laws on every basis vector of the
/// identity-point components; throws Error("AntipodeFailure") otherwise.
void double_antipodes(DrinfeldDouble& d);

/// Installs the braiding elements
///   R_{g,g'} = sum_i (d_i # 1) (x) (eps # e_i)        over a basis of H_g,
///   Q_{g,g'} = sum_i (d_i # 1) (x) (eps # S~_g(e_i))  over a basis of H_{g^-1}.
void double_rq(DrinfeldDouble& d);

/// Builds the double in the requested presentation and installs all of the
/// structure above.  Requires the grading of h to be a group.
DrinfeldDouble build_double(const HopfGC& h, DoubleForm form);

/// Componentwise coalgebra laws for every fixed first degree, and the four
/// compatibility laws between the product, local units, comultiplications
/// and counits of a graded bialgebra.
ValidationReport check_graded_bialgebra(const GradedBialgebra& a);

/// The four antipode cancellation laws on every basis vector of the
/// identity-point components, for every degree pair.
ValidationReport check_graded_hopf(const GradedBialgebra& a);

/// Membership of the braiding elements, the two-sided cancellation between
/// the R and Q families, both comultiplication expansion laws, and the
/// product intertwining law.
ValidationReport check_quasitriangular(const GradedBialgebra& a);

/// A crossed module over a Hopf family H: spaces M_v over a crossed G-set,
/// right actions M_v (x) H_{nu(v)} -> M_v, and coactions
/// rho_{v,g} : M_{v g} -> M_v (x) H_g compatible through the conjugation
/// exchange law.
struct YDModule {
  HopfGC h;
  CrossedGSet v;
  std::vector<Space> comp;
  std::vector<MultTensor> action;  // per v: M_v (x) H_{nu(v)} -> M_v
  std::map<std::pair<int, int>, CoMultTensor> coaction;  // key (v, g)

  const Space& at(int vi) const {
    return comp.at(static_cast<std::size_t>(vi));
  }
  const MultTensor& act(int vi) const {
    return action.at(static_cast<std::size_t>(vi));
  }
  const CoMultTensor& rho(int vi, int g) const;
};

/// Action axioms, coaction coassociativity and counit law, and the exchange
/// law rho(m h) = m_[0] h_(2) (x) S_g(h_(1)) m_[1] h_(3) over every
/// component and basis pair.
ValidationReport check_yd_module(const YDModule& m);

/// Reads a crossed module as a compatible module over double_datum(h);
/// pure re-indexing of the same tensors.
DoiHopfModule yd_as_doihopf(const YDModule& m);

/// Inverse re-indexing of yd_as_doihopf.
YDModule doihopf_as_yd(const HopfGC& h, const DoiHopfModule& m);

/// The graded module over the Koppinen-form double core attached to a
/// crossed module (through the module functor of the double datum).
GradedModule yd_to_graded(const YDModule& m);

/// Inverse of yd_to_graded.
YDModule graded_to_yd(const HopfGC& h, const GradedModule& m);

/// Tensor product of crossed modules: product crossed set, diagonal action
/// through the two-leg expansion, coaction with multiplied output legs.
YDModule yd_tensor(const YDModule& m, const YDModule& n);

/// The unit object: one point with nu = e, one-dimensional space, action
/// through the counit, coaction onto the local unit.
YDModule yd_unit(const HopfGC& h);

/// Tensor product of graded modules over a graded bialgebra: the action of
/// a is split by Delta_{l, nu(v)^l, nu(v')^l} across the factors.
GradedModule graded_module_tensor(const GradedBialgebra& a,
                                  const GradedModule& p,
                                  const GradedModule& q);

/// The unit object over a graded bialgebra: one point with beta = e, action
/// of A_{l,e} through eps_l.
GradedModule graded_unit_module(const GradedBialgebra& a);

bool same_yd_module(const YDModule& a, const YDModule& b);

/// A braiding between two modules: forward maps keyed by (point of the
/// first factor, point of the second) sending M_p (x) N_q to
/// N_{q nu(p)^-1} (x) M_p, and inverse maps keyed by (point of N, point of
/// M) sending N_q (x) M_p to M_p (x) N_{q nu(p)}.
struct Braiding {
  std::map<std::pair<int, int>, LinMap> fwd;
  std::map<std::pair<int, int>, LinMap> inv;
};

/// The crossed-module braiding t(m (x) n) = n_[0] (x) m n_[1] with inverse
/// built from the twisted antipode.
Braiding yd_braiding(const YDModule& m, const YDModule& n);

/// Both composites of the braiding against the identity, on every point
/// pair, plus domain bookkeeping.
ValidationReport check_yd_braiding(const YDModule& m, const YDModule& n,
                                   const Braiding& b);

/// The braiding induced on graded modules by the stored braiding elements:
/// t(m (x) n) = n R^1 (x) m R^2 and inverse
/// t^-1(n (x) m) = m Q^2 (x) n Q^1, with element subscripts taken at the
/// point degrees of m and n.
Braiding braiding_from_r(const GradedBialgebra& a, const GradedModule& p,
                         const GradedModule& q);

/// Inverse composites and bookkeeping for a braiding of graded modules.
ValidationReport check_graded_braiding(const GradedModule& p,
                                       const GradedModule& q,
                                       const Braiding& b);

/// Reads the braiding element families back off a braiding of the regular
/// module with itself: R_{g,g'} is the forward image of 1_g (x) 1_{g'} and
/// Q_{g,g'} the inverse image of 1_{g'} (x) 1_g with legs swapped into
/// declaration order.
std::pair<std::map<std::pair<int, int>, Elem2>,
          std::map<std::pair<int, int>, Elem2>>
extract_rq_from_braiding(const GradedAlgebra& core, const Braiding& b);

}  // namespace hgc
