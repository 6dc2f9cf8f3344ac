#include "hgc/linalg.hpp"

#include <set>

namespace hgc {

void validate_space(const Space& s) {
  std::set<std::string> seen;
  for (const auto& name : s.basis) {
    if (name.empty())
      throw Error("MalformedTable", "empty basis name in space " + s.label);
    if (!seen.insert(name).second)
      throw Error("MalformedTable",
                  "duplicate basis name '" + name + "' in space " + s.label);
  }
}

Space tensor_space(const Space& u, const Space& v) {
  Space t;
  t.label = u.label + "." + v.label;
  t.basis.reserve(u.dim() * v.dim());
  for (const auto& a : u.basis)
    for (const auto& b : v.basis) t.basis.push_back(a + "," + b);
  return t;
}

Space dual_space(const Space& v) {
  Space d;
  d.label = v.label + "*";
  d.basis = v.basis;  // index reuse: functional i is dual to vector i
  return d;
}

DualBasis dual_basis(const Space& v) { return DualBasis{v, dual_space(v)}; }

Scalar pair_dual(const Field& f, const Vec& functional, const Vec& v) {
  if (functional.size() != v.size())
    throw Error("ShapeMismatch", "dual pairing of mismatched dimensions");
  Scalar acc = f.zero();
  for (std::size_t i = 0; i < v.size(); ++i) acc += functional[i] * v[i];
  return acc;
}

Vec zero_vec(const Field& f, std::size_t n) { return Vec(n, f.zero()); }

Vec basis_vec(const Field& f, std::size_t n, std::size_t i) {
  Vec v = zero_vec(f, n);
  v.at(i) = f.one();
  return v;
}

void axpy(Vec& acc, const Scalar& c, const Vec& v) {
  if (acc.size() != v.size())
    throw Error("ShapeMismatch", "axpy on mismatched dimensions");
  for (std::size_t i = 0; i < v.size(); ++i) acc[i] += c * v[i];
}

Vec scaled(const Scalar& c, const Vec& v) {
  Vec out = v;
  for (auto& x : out) x = c * x;
  return out;
}

bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec LinMap::apply(const Field& f, const Vec& v) const {
  if (v.size() != domain.dim())
    throw Error("ShapeMismatch", "map " + domain.label + "->" +
                                     codomain.label + " applied to dim " +
                                     std::to_string(v.size()));
  Vec out = zero_vec(f, codomain.dim());
  for (const auto& [rc, c] : entries) out[rc.first] += c * v[rc.second];
  return out;
}

LinMap identity_map(const Space& s, const Field& f) {
  LinMap m{s, s, {}};
  for (std::size_t i = 0; i < s.dim(); ++i)
    m.entries[{static_cast<int>(i), static_cast<int>(i)}] = f.one();
  return m;
}

LinMap make_linmap(const Field& f, const Space& dom, const Space& cod,
                   const std::function<Vec(std::size_t)>& on_basis) {
  LinMap m{dom, cod, {}};
  for (std::size_t j = 0; j < dom.dim(); ++j) {
    Vec img = on_basis(j);
    if (img.size() != cod.dim())
      throw Error("ShapeMismatch", "basis image has wrong dimension");
    for (std::size_t i = 0; i < img.size(); ++i)
      if (!img[i].is_zero())
        m.entries[{static_cast<int>(i), static_cast<int>(j)}] = img[i];
  }
  (void)f;
  return m;
}

LinMap compose(const Field& f, const LinMap& outer, const LinMap& inner) {
  if (inner.codomain != outer.domain)
    throw Error("ShapeMismatch", "composition of non-composable maps " +
                                     inner.codomain.label + " vs " +
                                     outer.domain.label);
  return make_linmap(f, inner.domain, outer.codomain, [&](std::size_t j) {
    return outer.apply(f, inner.apply(f, basis_vec(f, inner.domain.dim(), j)));
  });
}

LinMap invert(const Field& f, const LinMap& m, const std::string& code) {
  const std::size_t n = m.domain.dim();
  if (m.codomain.dim() != n)
    throw Error("ShapeMismatch", "inverse of a non-square map");
  // Dense Gauss-Jordan over the exact field.
  std::vector<Vec> a(n, zero_vec(f, n)), inv(n, zero_vec(f, n));
  for (const auto& [rc, c] : m.entries) a[rc.first][rc.second] = c;
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = f.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) throw Error(code, "singular map on " + m.domain.label);
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Scalar d = a[col][col].inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] = d * a[col][j];
      inv[col][j] = d * inv[col][j];
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      Scalar factor = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= factor * a[col][j];
        inv[r][j] -= factor * inv[col][j];
      }
    }
  }
  LinMap out{m.codomain, m.domain, {}};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!inv[i][j].is_zero())
        out.entries[{static_cast<int>(i), static_cast<int>(j)}] = inv[i][j];
  return out;
}

std::vector<Term> MultTensor::on_basis(std::size_t i, std::size_t j) const {
  std::vector<Term> out;
  auto lo = entries.lower_bound({static_cast<int>(i), static_cast<int>(j), 0});
  for (auto it = lo; it != entries.end(); ++it) {
    const auto& [key, c] = *it;
    if (std::get<0>(key) != static_cast<int>(i) ||
        std::get<1>(key) != static_cast<int>(j))
      break;
    out.push_back({c, std::get<2>(key)});
  }
  return out;
}

Vec MultTensor::apply(const Field& f, const Vec& a, const Vec& b) const {
  if (a.size() != u.dim() || b.size() != v.dim())
    throw Error("ShapeMismatch", "product on " + u.label + " x " + v.label +
                                     " applied to wrong dimensions");
  Vec out = zero_vec(f, w.dim());
  for (const auto& [key, c] : entries) {
    const auto& [i, j, k] = key;
    Scalar coef = a[i] * b[j];
    if (!coef.is_zero()) out[k] += coef * c;
  }
  return out;
}

MultTensor make_mult(const Field& f, const Space& u, const Space& v,
                     const Space& w,
                     const std::function<Vec(std::size_t, std::size_t)>& on_basis) {
  MultTensor m{u, v, w, {}};
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (std::size_t j = 0; j < v.dim(); ++j) {
      Vec img = on_basis(i, j);
      if (img.size() != w.dim())
        throw Error("ShapeMismatch", "product image has wrong dimension");
      for (std::size_t k = 0; k < img.size(); ++k)
        if (!img[k].is_zero())
          m.entries[{static_cast<int>(i), static_cast<int>(j),
                     static_cast<int>(k)}] = img[k];
    }
  (void)f;
  return m;
}

std::vector<Term2> CoMultTensor::on_basis(std::size_t k) const {
  std::vector<Term2> out;
  auto lo = entries.lower_bound({static_cast<int>(k), 0, 0});
  for (auto it = lo; it != entries.end(); ++it) {
    const auto& [key, c] = *it;
    if (std::get<0>(key) != static_cast<int>(k)) break;
    out.push_back({c, std::get<1>(key), std::get<2>(key)});
  }
  return out;
}

std::vector<Term2> CoMultTensor::apply(const Field& f, const Vec& a) const {
  if (a.size() != src.dim())
    throw Error("ShapeMismatch", "comultiplication applied to wrong dimension");
  std::map<std::pair<int, int>, Scalar> acc;
  for (const auto& [key, c] : entries) {
    const auto& [k, i, j] = key;
    Scalar coef = a[k] * c;
    if (coef.is_zero()) continue;
    auto it = acc.find({i, j});
    if (it == acc.end())
      acc.emplace(std::make_pair(i, j), coef);
    else
      it->second += coef;
  }
  std::vector<Term2> out;
  for (const auto& [ij, c] : acc)
    if (!c.is_zero()) out.push_back({c, ij.first, ij.second});
  (void)f;
  return out;
}

Vec CoMultTensor::apply_flat(const Field& f, const Vec& a) const {
  Vec out = zero_vec(f, left.dim() * right.dim());
  for (const auto& t : apply(f, a)) out[flat(t.i, t.j, right.dim())] += t.c;
  return out;
}

CoMultTensor make_comult(const Field& f, const Space& src, const Space& left,
                         const Space& right,
                         const std::function<std::vector<Term2>(std::size_t)>& on_basis) {
  CoMultTensor d{src, left, right, {}};
  for (std::size_t k = 0; k < src.dim(); ++k) {
    std::map<std::pair<int, int>, Scalar> acc;
    for (const auto& t : on_basis(k)) {
      auto it = acc.find({t.i, t.j});
      if (it == acc.end())
        acc.emplace(std::make_pair(t.i, t.j), t.c);
      else
        it->second += t.c;
    }
    for (const auto& [ij, c] : acc)
      if (!c.is_zero())
        d.entries[{static_cast<int>(k), ij.first, ij.second}] = c;
  }
  (void)f;
  return d;
}

Vec opposite_convolution(const Field& f, const CoMultTensor& delta,
                         const Vec& xi, const Vec& eta) {
  if (xi.size() != delta.right.dim() || eta.size() != delta.left.dim())
    throw Error("ShapeMismatch", "convolution factors of wrong dimension");
  Vec out = zero_vec(f, delta.src.dim());
  for (const auto& [key, c] : delta.entries) {
    const auto& [k, i, j] = key;
    out[k] += c * xi[j] * eta[i];
  }
  return out;
}

}  // namespace hgc
