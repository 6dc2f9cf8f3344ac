#pragma once

#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "hgc/hopf.hpp"

namespace hgc {

/// A family (A_x) of unital algebras over the points of the datum's G-set,
/// with coactions rho_{x,g} : A_{x.g} -> A_x (x) H_g that are algebra maps
/// and coassociative over the grading.
struct ComoduleAlgebra {
  Field field = Field::rationals();
  RightGSet x;
  std::vector<Space> comp;
  std::vector<MultTensor> mult;
  std::vector<Vec> unit;
  std::map<std::pair<int, int>, CoMultTensor> coaction;  // key (x, g)

  const Space& at(int xi) const { return comp.at(static_cast<std::size_t>(xi)); }
  const CoMultTensor& rho(int xi, int g) const;
};

/// A group coalgebra (C_l) whose components carry right actions of
/// H_{gamma(l)} compatible with comultiplication and counit.
struct ModuleCoalgebra {
  GroupCoalgebra c;
  std::vector<int> gamma;               // into the acting monoid
  std::vector<MultTensor> action;       // per l: C_l (x) H_{gamma(l)} -> C_l

  const Space& at(int l) const { return c.comp.at(static_cast<std::size_t>(l)); }
};

/// The full compatibility datum: a Hopf family H, its discrete part, a
/// comodule algebra A over X and a module coalgebra C over Lambda.
struct DoiHopfDatumTk {
  HopfGC h;
  DiscreteDoiHopfDatum discrete;
  ComoduleAlgebra a;
  ModuleCoalgebra c;
};

/// A compatible module family over a datum: right A_{beta(y)}-modules M_y
/// with coactions rho_{y,l} : M_{y.l} -> M_y (x) C_l satisfying the mixed
/// compatibility law.
struct DoiHopfModule {
  DatumSet y;
  std::vector<Space> comp;
  std::vector<MultTensor> action;  // per y: M_y (x) A_{beta(y)} -> M_y
  std::map<std::pair<int, int>, CoMultTensor> coaction;  // key (y, l)

  const Space& at(int yi) const { return comp.at(static_cast<std::size_t>(yi)); }
  const CoMultTensor& rho(int yi, int l) const;
};

ValidationReport check_comodule_algebra(const HopfGC& h,
                                        const ComoduleAlgebra& a);
ValidationReport check_module_coalgebra(const HopfGC& h,
                                        const DiscreteDoiHopfDatum& d,
                                        const ModuleCoalgebra& c);

/// Consistency of the four members plus all componentwise axioms.
ValidationReport check_doihopf_datum(const DoiHopfDatumTk& d);

ValidationReport check_doihopf_module(const DoiHopfDatumTk& d,
                                      const DoiHopfModule& m);

/// Morphism flavors: a T-morphism re-indexes along eta : Y' -> Y and maps
/// phi_{y'} : M_{eta(y')} -> M'_{y'}; a Z-morphism goes along eta : Y -> Y'
/// with phi_y : M_y -> M'_{eta(y)}.
enum class MorphFlavor { T, Z };

/// Checks equivariance of eta, compatibility with beta, A-linearity and the
/// coaction squares of a candidate morphism.
ValidationReport check_dh_morphism(const DoiHopfDatumTk& d, MorphFlavor flavor,
                                   const DoiHopfModule& m,
                                   const DoiHopfModule& mp,
                                   const std::vector<int>& eta,
                                   const std::vector<LinMap>& phi);

/// A Lambda-graded unital algebra B = (B_l) with multiplications
/// B_l (x) B_{l'} -> B_{l l'}, unit in the identity component, and an
/// optional left action of H_{gamma(l)^-1} on each B_l (empty when absent).
struct LambdaGradedAlgebra {
  Field field = Field::rationals();
  FiniteGroup lambda;
  std::vector<int> gamma;  // into the acting monoid of the attached family
  std::vector<Space> comp;
  std::map<std::pair<int, int>, MultTensor> mult;
  Vec unit;                          // element of comp[identity]
  std::vector<MultTensor> hact;      // per l: H_{gamma(l)^-1} (x) B_l -> B_l

  const Space& at(int l) const { return comp.at(static_cast<std::size_t>(l)); }
  const MultTensor& mul(int l1, int l2) const;
  bool has_action() const { return !hact.empty(); }
};

/// Associativity, unit and (when the action is present) the module axioms
/// for the H-action.
ValidationReport check_lambda_graded(const HopfGC& h,
                                     const LambdaGradedAlgebra& b);

/// The graded dual of a module coalgebra: B_l := C_{l^-1}^* under the
/// opposite convolution product, with unit the counit and the left H-action
/// (h -> xi)(c) = xi(c.h).  Requires Lambda to be a group (NotAGroup).
LambdaGradedAlgebra dual_b_algebra(const HopfGC& h,
                                   const DiscreteDoiHopfDatum& d,
                                   const ModuleCoalgebra& c);

/// One application of the left dual action: xi in B_l = C_{l^-1}^*,
/// h in H_{gamma(l)^-1}, result in B_l.
Vec left_dual_action(const Field& f, const ModuleCoalgebra& c, int l_inv,
                     const Vec& xi, const Vec& h);

/// A degree-shifting family phi_l : H_{x0 l x0^-1} -> H_l (left version) or
/// phi_l : H_{x0^-1 l x0} -> H_l (right version) of algebra maps compatible
/// with counit and comultiplication.
enum class PhiSide { Left, Right };

ValidationReport check_phi_family(const HopfGC& h, PhiSide side, int x0,
                                  const std::vector<LinMap>& phi);

/// Three-leg coaction tensor rho(a_s) = sum c . k_i (x) a_j (x) h_k used by
/// the two-sided datum below.
struct Co3Tensor {
  Space src, first, second, third;
  std::map<std::tuple<int, int, int, int>, Scalar> entries;  // (s, i, j, k)

  std::vector<Term3> on_basis(std::size_t s) const;
};

/// A two-sided datum (K, H, A, C): K and H are Hopf families over groups L
/// and G, X carries commuting left L- and right G-actions, the algebras A_x
/// have three-leg coactions rho_{l,x,g} : A_{l.x.g} -> K_l (x) A_x (x) H_g,
/// and the coalgebra C over Lambda has maps psi, gamma into L and G with a
/// left K-action and a right H-action on every component.
struct TwoSidedDatum {
  HopfGC k, h;
  std::vector<std::string> x_carrier;
  std::vector<std::vector<int>> left_act;   // [l][x] -> index of l.x
  std::vector<std::vector<int>> right_act;  // [x][g] -> index of x.g
  std::vector<Space> a_comp;
  std::vector<MultTensor> a_mult;
  std::vector<Vec> a_unit;
  std::map<std::tuple<int, int, int>, Co3Tensor> a_coaction;  // (l, x, g)
  GroupCoalgebra c;
  std::vector<int> psi, gamma;
  std::vector<MultTensor> c_left;   // per l: K_{psi(l)} (x) C_l -> C_l
  std::vector<MultTensor> c_right;  // per l: C_l (x) H_{gamma(l)} -> C_l
};

/// Structural and axiomatic validation of a two-sided datum.
ValidationReport check_two_sided_datum(const TwoSidedDatum& t);

/// Folds a two-sided datum into a one-sided one over K^op (x) H: the point
/// set becomes x.(l, g) = l^-1.x.g, the coaction twists the K-leg by the
/// antipode, and C is acted on through both sides.
DoiHopfDatumTk fold_two_sided(const TwoSidedDatum& t);

/// The two-sided datum (H, H, H, H) of a Hopf family over a group: X = G
/// with translation actions, A = C = H, coactions the three-leg
/// comultiplication splits, actions by multiplication.
TwoSidedDatum two_sided_from_hopf(const HopfGC& h);

/// The classical-style datum (H, A = H, C = H) over the one-sided grading:
/// beta-trivial module family M = H with action by right multiplication and
/// coactions the comultiplication splits.
DoiHopfDatumTk datum_hhh(const HopfGC& h);

/// The module (M = H, action by right multiplication, coaction the
/// comultiplication) over datum_hhh(h); its point set is the group itself
/// with beta the identity map.
DoiHopfModule hopf_module_over(const DoiHopfDatumTk& d);

bool same_doihopf_datum(const DoiHopfDatumTk& a, const DoiHopfDatumTk& b);
bool same_doihopf_module(const DoiHopfModule& a, const DoiHopfModule& b);

}  // namespace hgc
