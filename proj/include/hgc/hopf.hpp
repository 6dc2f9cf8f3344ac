#pragma once

#include <map>
#include <utility>
#include <vector>

#include "hgc/discrete.hpp"
#include "hgc/linalg.hpp"
#include "hgc/report.hpp"

namespace hgc {

/// A family of spaces (C_g) indexed by a finite monoid, with componentwise
/// comultiplications Delta_{g,g'} : C_{g g'} -> C_g (x) C_{g'} and a counit
/// on the identity component.
struct GroupCoalgebra {
  Field field = Field::rationals();
  FiniteMonoid grading;
  std::vector<Space> comp;
  std::map<std::pair<int, int>, CoMultTensor> comult;
  Vec counit;  // functional on comp[identity]

  const Space& at(int g) const { return comp.at(static_cast<std::size_t>(g)); }
  const CoMultTensor& delta(int g1, int g2) const;
};

/// Group coalgebra whose components are unital algebras and whose counit and
/// comultiplications are algebra maps.
struct SemiHopfGC : GroupCoalgebra {
  std::vector<MultTensor> mult;  // per component
  std::vector<Vec> unit;
};

/// Semi-Hopf family over a group with antipodes S_g : H_{g^-1} -> H_g and
/// optional twisted antipodes (empty vector when absent).
struct HopfGC : SemiHopfGC {
  std::vector<int> inv;  // group inverse table for the grading
  std::vector<LinMap> antipode;
  std::vector<LinMap> antipode_tw;

  bool has_twisted() const { return !antipode_tw.empty(); }
  int ginv(int g) const { return inv.at(static_cast<std::size_t>(g)); }
};

/// Two-leg expansion of basis vector h of C_{g1 g2} along (g1, g2).
std::vector<Term2> split2(const GroupCoalgebra& c, int g1, int g2, int h);

/// Three-leg expansion along (g1, g2, g3), nested as (id (x) Delta) Delta.
std::vector<Term3> split3(const GroupCoalgebra& c, int g1, int g2, int g3,
                          int h);

ValidationReport check_group_coalgebra(const GroupCoalgebra& c);
ValidationReport check_semi_hopf(const SemiHopfGC& h);

/// Antipode axioms for S and (when present or derivable) the twisted
/// antipode, plus the cross-check that the twisted antipode inverts S.
ValidationReport check_hopf(const HopfGC& h);

/// Fills antipode_tw[g] with the inverse of S_{g^-1}.
/// Throws Error("SingularAntipode") when some S_g is not invertible.
HopfGC derive_twisted_antipode(const HopfGC& h);

/// Same components with opposite componentwise multiplication; antipode and
/// twisted antipode swap roles (deriving the twisted one when absent).
HopfGC opposite_hgc(const HopfGC& h);

/// Componentwise tensor product family over the product group, with the
/// middle-flip comultiplication.
HopfGC tensor_hgc(const HopfGC& k, const HopfGC& h);

FiniteMonoid product_monoid(const FiniteMonoid& a, const FiniteMonoid& b);
FiniteGroup product_group(const FiniteGroup& a, const FiniteGroup& b);

/// Structure constants of an ordinary Hopf algebra (the one-point family).
struct OrdinaryHopf {
  Space space;
  MultTensor mult;
  Vec unit;
  CoMultTensor comult;
  Vec counit;
  LinMap antipode;
};

/// Every component is the ground field.
HopfGC trivial_family(const Field& f, const FiniteGroup& g);

/// Every component is the given ordinary Hopf algebra; all comultiplications
/// equal its comultiplication and all antipodes its antipode.
HopfGC constant_family(const Field& f, const FiniteGroup& g,
                       const OrdinaryHopf& h0);

/// The G = {e} family of an ordinary Hopf algebra.
HopfGC ordinary_as_family(const Field& f, const OrdinaryHopf& h0);

}  // namespace hgc
