#pragma once

#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hgc/report.hpp"
#include "hgc/scalar.hpp"

namespace hgc {

/// A finite-dimensional vector space presented by a named ordered basis.
struct Space {
  std::string label;
  std::vector<std::string> basis;

  std::size_t dim() const { return basis.size(); }
  bool operator==(const Space& o) const {
    return label == o.label && basis == o.basis;
  }
  bool operator!=(const Space& o) const { return !(*this == o); }
};

/// Throws MalformedTable unless basis names are unique and non-empty.
void validate_space(const Space& s);

/// Tensor product space.  Basis names are flat tuples joined left-to-right
/// with ',' so that nesting is strictly associative on names.
Space tensor_space(const Space& u, const Space& v);

/// Row-major index into tensor_space(u, v): (i, j) -> i * dim(v) + j.
inline std::size_t flat(std::size_t i, std::size_t j, std::size_t dim_j) {
  return i * dim_j + j;
}

/// Dual space: primal basis index set reused, label marked with '*'.
Space dual_space(const Space& v);

/// The canonical dual-basis pairing data for a space: functional i is dual
/// to basis vector i, so both sides share one index set.
struct DualBasis {
  Space primal;
  Space dual;
};

DualBasis dual_basis(const Space& v);

/// Evaluation of a functional (coordinates in the dual basis) on a vector.
Scalar pair_dual(const Field& f, const Vec& functional, const Vec& v);

// ---- dense vector helpers ----

Vec zero_vec(const Field& f, std::size_t n);
Vec basis_vec(const Field& f, std::size_t n, std::size_t i);
void axpy(Vec& acc, const Scalar& c, const Vec& v);  // acc += c * v
Vec scaled(const Scalar& c, const Vec& v);
bool is_zero_vec(const Vec& v);

/// Sparse summands of expansions in one, two or three tensor legs.
struct Term {
  Scalar c;
  int i;
};
struct Term2 {
  Scalar c;
  int i, j;
};
struct Term3 {
  Scalar c;
  int i, j, k;
};

/// A linear map stored sparsely by (codomain index, domain index).
struct LinMap {
  Space domain;
  Space codomain;
  std::map<std::pair<int, int>, Scalar> entries;

  Vec apply(const Field& f, const Vec& v) const;
  bool operator==(const LinMap& o) const {
    return domain == o.domain && codomain == o.codomain && entries == o.entries;
  }
};

LinMap identity_map(const Space& s, const Field& f);
LinMap make_linmap(const Field& f, const Space& dom, const Space& cod,
                   const std::function<Vec(std::size_t)>& on_basis);
LinMap compose(const Field& f, const LinMap& outer, const LinMap& inner);

/// Exact inverse of a square map; throws Error(code) when singular.
LinMap invert(const Field& f, const LinMap& m, const std::string& code);

/// A bilinear multiplication-like tensor u_i * v_j = sum_k c . w_k stored
/// sparsely by (i, j, k) in lexicographic order.
struct MultTensor {
  Space u, v, w;
  std::map<std::tuple<int, int, int>, Scalar> entries;

  std::vector<Term> on_basis(std::size_t i, std::size_t j) const;
  Vec apply(const Field& f, const Vec& a, const Vec& b) const;
  bool operator==(const MultTensor& o) const {
    return u == o.u && v == o.v && w == o.w && entries == o.entries;
  }
  bool operator!=(const MultTensor& o) const { return !(*this == o); }
};

MultTensor make_mult(const Field& f, const Space& u, const Space& v,
                     const Space& w,
                     const std::function<Vec(std::size_t, std::size_t)>& on_basis);

/// A comultiplication-like tensor delta(w_k) = sum c . u_i (x) v_j stored
/// sparsely by (k, i, j).
struct CoMultTensor {
  Space src, left, right;
  std::map<std::tuple<int, int, int>, Scalar> entries;

  std::vector<Term2> on_basis(std::size_t k) const;
  std::vector<Term2> apply(const Field& f, const Vec& a) const;
  /// Same data flattened to a vector over tensor_space(left, right).
  Vec apply_flat(const Field& f, const Vec& a) const;
  bool operator==(const CoMultTensor& o) const {
    return src == o.src && left == o.left && right == o.right &&
           entries == o.entries;
  }
  bool operator!=(const CoMultTensor& o) const { return !(*this == o); }
};

CoMultTensor make_comult(const Field& f, const Space& src, const Space& left,
                         const Space& right,
                         const std::function<std::vector<Term2>(std::size_t)>& on_basis);

/// (xi . eta)(c) = xi(c_(2)) eta(c_(1)): the opposite convolution product of
/// functionals along a comultiplication; xi pairs with the right leg, eta
/// with the left leg.  Returns a functional on delta.src.
Vec opposite_convolution(const Field& f, const CoMultTensor& delta,
                         const Vec& xi, const Vec& eta);

}  // namespace hgc
