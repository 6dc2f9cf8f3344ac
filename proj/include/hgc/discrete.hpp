#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hgc/report.hpp"

namespace hgc {

/// A finite monoid given by a materialized multiplication table over an
/// ordered list of opaque element labels.
struct FiniteMonoid {
  std::vector<std::string> elements;
  std::vector<std::vector<int>> mult;  // mult[i][j] = index of elements[i]*elements[j]
  int identity = 0;

  std::size_t size() const { return elements.size(); }
  int op(int i, int j) const { return mult.at(i).at(j); }
  int index_of(const std::string& label) const;
  bool operator==(const FiniteMonoid& o) const {
    return elements == o.elements && mult == o.mult && identity == o.identity;
  }
};

/// Table well-formedness plus monoid laws (associativity, two-sided identity).
ValidationReport validate_monoid(const FiniteMonoid& m);

struct FiniteGroup {
  FiniteMonoid monoid;
  std::vector<int> inv;

  std::size_t size() const { return monoid.size(); }
  int op(int i, int j) const { return monoid.op(i, j); }
  int identity() const { return monoid.identity; }
  /// l^-1 * g * l
  int conj(int g, int l) const { return op(op(inv[l], g), l); }
};

/// Derives inverse data; empty when some element has no two-sided inverse.
std::optional<FiniteGroup> try_group(const FiniteMonoid& m);

/// As try_group but throws Error("NotAGroup") with `who` in the message.
FiniteGroup require_group(const FiniteMonoid& m, const std::string& who);

/// A right action of a monoid on a finite carrier, both materialized.
struct RightGSet {
  FiniteMonoid acting;
  std::vector<std::string> carrier;
  std::vector<std::vector<int>> action;  // action[x][g] = index of x.g

  std::size_t size() const { return carrier.size(); }
  int act(int x, int g) const { return action.at(x).at(g); }
};

ValidationReport validate_gset(const RightGSet& s);

/// A right G-set for a group G together with nu: carrier -> G satisfying
/// nu(v.g) = g^-1 nu(v) g.
struct CrossedGSet {
  FiniteGroup group;
  std::vector<std::string> carrier;
  std::vector<std::vector<int>> action;
  std::vector<int> nu;

  std::size_t size() const { return carrier.size(); }
  int act(int v, int g) const { return action.at(v).at(g); }
};

ValidationReport validate_crossed_gset(const CrossedGSet& v);

/// Product of crossed G-sets over one group: pairwise carrier, diagonal
/// action, nu(v, v') = nu(v) nu'(v').  Throws GroupMismatch.
CrossedGSet product_crossed_gset(const CrossedGSet& a, const CrossedGSet& b);

/// The discrete part of a Doi-Hopf datum: an acting monoid G, a structure
/// monoid Lambda with a monoid map gamma into G, and a right G-set X.
struct DiscreteDoiHopfDatum {
  FiniteMonoid acting;  // "G"
  FiniteMonoid lambda;  // "Lambda"
  std::vector<int> gamma;  // gamma[l] = index into acting
  RightGSet x;             // x.acting must equal acting

  int act_x(int xi, int g) const { return x.act(xi, g); }
};

ValidationReport validate_discrete(const DiscreteDoiHopfDatum& d);

/// A Lambda-set fibred over X: carrier with right Lambda-action and
/// beta: Y -> X satisfying beta(y.l) = beta(y).gamma(l).
struct DatumSet {
  std::vector<std::string> carrier;
  std::vector<std::vector<int>> action;  // action[y][l]
  std::vector<int> beta;                 // beta[y] = index into X carrier

  std::size_t size() const { return carrier.size(); }
  int act(int y, int l) const { return action.at(y).at(l); }
};

ValidationReport validate_datum_set(const DiscreteDoiHopfDatum& d,
                                    const DatumSet& y);

/// The regular datum set Y = Lambda x X with beta(l, x) = x and
/// (l, x).l' = (l l', x.gamma(l')).  Element labels are "l|x".
DatumSet regular_datum_set(const DiscreteDoiHopfDatum& d);

/// The conjugation-type datum attached to a group G: acting monoid G x G
/// (labels "a,b"), Lambda = G with diagonal gamma, X = G with
/// x.(l, g) = l^-1 x g.  Keeps the base group for index arithmetic.
struct GDatum {
  FiniteGroup base;
  DiscreteDoiHopfDatum datum;

  std::size_t n() const { return base.size(); }
  /// index of (a, b) in the acting monoid G x G
  int pair_index(int a, int b) const {
    return a * static_cast<int>(n()) + b;
  }
};

GDatum make_crossed_datum(const FiniteGroup& g);

/// Recognizes a datum of the make_crossed_datum shape; throws
/// Error("GroupMismatch") when the datum is not of that shape.
GDatum as_gdatum(const DiscreteDoiHopfDatum& d);

/// Reads a datum set over a GDatum as a crossed G-set (nu := beta).
/// Validates the conjugation law.
CrossedGSet crossed_from_datum_set(const GDatum& g, const DatumSet& y);

/// Inverse of crossed_from_datum_set (beta := nu).
DatumSet datum_set_from_crossed(const GDatum& g, const CrossedGSet& v);

}  // namespace hgc
