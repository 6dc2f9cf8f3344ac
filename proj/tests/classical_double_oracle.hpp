#pragma once

// Self-contained dense construction of the quantum double of an ordinary
// finite-dimensional Hopf algebra, used as an independent reference for the
// one-point case of the graded construction.  Everything here works on plain
// dense tables and shares only the exact scalar type with the library.

#include <cstddef>
#include <vector>

#include "hgc/scalar.hpp"

namespace oracle {

using hgc::Error;
using hgc::Field;
using hgc::Scalar;
using Vec = std::vector<Scalar>;
using Mat = std::vector<Vec>;
using Ten3 = std::vector<Mat>;

inline Vec zvec(const Field& f, std::size_t n) { return Vec(n, f.zero()); }
inline Mat zmat(const Field& f, std::size_t r, std::size_t c) {
  return Mat(r, zvec(f, c));
}
inline Ten3 zten(const Field& f, std::size_t a, std::size_t b, std::size_t c) {
  return Ten3(a, zmat(f, b, c));
}

/// Structure constants of an ordinary Hopf algebra on a fixed basis:
/// e_i e_j = sum_k mult[i][j][k] e_k, Delta(e_k) = sum comult[k][i][j]
/// e_i (x) e_j, S(e_c) = sum_r antipode[r][c] e_r.
struct DenseHopf {
  std::size_t d = 0;
  Ten3 mult;
  Vec unit;
  Ten3 comult;
  Vec counit;
  Mat antipode;
};

/// The double on the basis d_u # e_v, flat index u * d + v.
struct DenseDouble {
  std::size_t dim = 0;
  Ten3 mult;
  Vec unit;
  Ten3 comult;
  Vec counit;
  Mat antipode;
  Mat antipode_tw;
  Vec rmat;  // flat over (d_u # e_v) (x) (d_u # e_v), row-major
  Vec qmat;
};

/// Gauss-Jordan inverse; throws on a singular input.
inline Mat invert_mat(const Field& f, Mat m) {
  const std::size_t n = m.size();
  Mat inv = zmat(f, n, n);
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = f.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) throw Error("SingularMatrix", "no pivot");
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    const Scalar p = m[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] = m[col][j] / p;
      inv[col][j] = inv[col][j] / p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      const Scalar c = m[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= c * m[col][j];
        inv[r][j] -= c * inv[col][j];
      }
    }
  }
  return inv;
}

/// Dense product of two coordinate vectors through a structure tensor.
inline Vec mul_vec(const Field& f, const Ten3& t, const Vec& a, const Vec& b) {
  const std::size_t n = t.size();
  Vec out = zvec(f, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      for (std::size_t k = 0; k < n; ++k)
        out[k] += t[i][j][k] * a[i] * b[j];
    }
  }
  return out;
}

inline DenseDouble classical_double(const Field& f, const DenseHopf& h) {
  const std::size_t d = h.d;
  const std::size_t dd = d * d;
  const auto fl = [d](std::size_t u, std::size_t v) { return u * d + v; };

  // three-leg splits c3[k][p][q][r] via (id (x) Delta) Delta and triple
  // products m3[a][l][r][w]
  std::vector<Ten3> c3(d, zten(f, d, d, d)), m3(d, zten(f, d, d, d));
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t p = 0; p < d; ++p)
      for (std::size_t t = 0; t < d; ++t) {
        if (h.comult[k][p][t].is_zero()) continue;
        for (std::size_t q = 0; q < d; ++q)
          for (std::size_t r = 0; r < d; ++r)
            c3[k][p][q][r] += h.comult[k][p][t] * h.comult[t][q][r];
      }
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t l = 0; l < d; ++l)
      for (std::size_t t = 0; t < d; ++t) {
        if (h.mult[a][l][t].is_zero()) continue;
        for (std::size_t r = 0; r < d; ++r)
          for (std::size_t w = 0; w < d; ++w)
            m3[a][l][r][w] += h.mult[a][l][t] * h.mult[t][r][w];
      }
  const Mat sinv = invert_mat(f, h.antipode);

  DenseDouble out;
  out.dim = dd;
  out.mult = zten(f, dd, dd, dd);

  // (xi # h)(xi' # h') = xi . (h_3 -> xi' <- S(h_1)) # h_2 h', where
  // (k -> xi <- k')(l) = xi(k' l k) and the functional product is the
  // opposite convolution (xi phi)(c) = xi(c_2) phi(c_1).
  for (std::size_t u2 = 0; u2 < d; ++u2)
    for (std::size_t s = 0; s < d; ++s) {
      // depends only on (s, u2): fun[w] = coefficient of d_w in the
      // convolution-side factor before pairing with xi, per split term
      for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = 0; q < d; ++q)
          for (std::size_t r = 0; r < d; ++r) {
            if (c3[s][p][q][r].is_zero()) continue;
            Vec phi = zvec(f, d);
            for (std::size_t l = 0; l < d; ++l)
              for (std::size_t a = 0; a < d; ++a)
                phi[l] += h.antipode[a][p] * m3[a][l][r][u2];
            for (std::size_t u = 0; u < d; ++u) {
              Vec fun = zvec(f, d);
              for (std::size_t w = 0; w < d; ++w)
                for (std::size_t x = 0; x < d; ++x)
                  fun[w] += h.comult[w][x][u] * phi[x];
              for (std::size_t s2 = 0; s2 < d; ++s2)
                for (std::size_t t = 0; t < d; ++t) {
                  if (h.mult[q][s2][t].is_zero()) continue;
                  for (std::size_t w = 0; w < d; ++w)
                    out.mult[fl(u, s)][fl(u2, s2)][fl(w, t)] +=
                        c3[s][p][q][r] * fun[w] * h.mult[q][s2][t];
                }
            }
          }
    }

  out.unit = zvec(f, dd);
  for (std::size_t u = 0; u < d; ++u)
    for (std::size_t v = 0; v < d; ++v)
      out.unit[fl(u, v)] = h.counit[u] * h.unit[v];

  out.comult = zten(f, dd, dd, dd);
  for (std::size_t w = 0; w < d; ++w)
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t u = 0; u < d; ++u)
        for (std::size_t v = 0; v < d; ++v)
          for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
              out.comult[fl(w, k)][fl(u, i)][fl(v, j)] =
                  h.mult[u][v][w] * h.comult[k][i][j];

  out.counit = zvec(f, dd);
  for (std::size_t w = 0; w < d; ++w)
    for (std::size_t k = 0; k < d; ++k)
      out.counit[fl(w, k)] = h.unit[w] * h.counit[k];

  // S(d_w # e_k) = (eps # S(e_k)) . (d_w o S^-1 # 1); the twisted version
  // swaps S and S^-1.
  out.antipode = zmat(f, dd, dd);
  out.antipode_tw = zmat(f, dd, dd);
  for (std::size_t w = 0; w < d; ++w)
    for (std::size_t k = 0; k < d; ++k) {
      Vec left = zvec(f, dd), lefttw = zvec(f, dd);
      for (std::size_t u = 0; u < d; ++u)
        for (std::size_t r = 0; r < d; ++r) {
          left[fl(u, r)] = h.counit[u] * h.antipode[r][k];
          lefttw[fl(u, r)] = h.counit[u] * sinv[r][k];
        }
      Vec right = zvec(f, dd), righttw = zvec(f, dd);
      for (std::size_t t = 0; t < d; ++t)
        for (std::size_t v = 0; v < d; ++v) {
          right[fl(t, v)] = sinv[w][t] * h.unit[v];
          righttw[fl(t, v)] = h.antipode[w][t] * h.unit[v];
        }
      const Vec col = mul_vec(f, out.mult, left, right);
      const Vec coltw = mul_vec(f, out.mult, lefttw, righttw);
      for (std::size_t rho = 0; rho < dd; ++rho) {
        out.antipode[rho][fl(w, k)] = col[rho];
        out.antipode_tw[rho][fl(w, k)] = coltw[rho];
      }
    }

  // R = sum_i (d_i # 1) (x) (eps # e_i), Q = sum_i (d_i # 1) (x)
  // (eps # S^-1(e_i))
  out.rmat = zvec(f, dd * dd);
  out.qmat = zvec(f, dd * dd);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t v = 0; v < d; ++v) {
      if (h.unit[v].is_zero()) continue;
      for (std::size_t u = 0; u < d; ++u) {
        if (h.counit[u].is_zero()) continue;
        out.rmat[fl(i, v) * dd + fl(u, i)] += h.unit[v] * h.counit[u];
        for (std::size_t r = 0; r < d; ++r)
          out.qmat[fl(i, v) * dd + fl(u, r)] +=
              sinv[r][i] * h.unit[v] * h.counit[u];
      }
    }
  return out;
}

/// Group algebra of the two-element group on the basis (1, s).
inline DenseHopf dense_kc2(const Field& f) {
  DenseHopf h;
  h.d = 2;
  h.mult = zten(f, 2, 2, 2);
  h.mult[0][0][0] = f.one();
  h.mult[0][1][1] = f.one();
  h.mult[1][0][1] = f.one();
  h.mult[1][1][0] = f.one();
  h.unit = zvec(f, 2);
  h.unit[0] = f.one();
  h.comult = zten(f, 2, 2, 2);
  h.comult[0][0][0] = f.one();
  h.comult[1][1][1] = f.one();
  h.counit = {f.one(), f.one()};
  h.antipode = zmat(f, 2, 2);
  h.antipode[0][0] = f.one();
  h.antipode[1][1] = f.one();
  return h;
}

/// The four-dimensional algebra on the basis (1, g, x, gx) with g^2 = 1,
/// x^2 = 0, xg = -gx, g grouplike, x skew-primitive.
inline DenseHopf dense_sweedler4(const Field& f) {
  DenseHopf h;
  h.d = 4;
  h.mult = zten(f, 4, 4, 4);
  const Scalar one = f.one(), neg = -f.one();
  for (std::size_t j = 0; j < 4; ++j) {
    h.mult[0][j][j] = one;
    if (j != 0) h.mult[j][0][j] = one;
  }
  h.mult[1][1][0] = one;
  h.mult[1][2][3] = one;
  h.mult[1][3][2] = one;
  h.mult[2][1][3] = neg;
  h.mult[3][1][2] = neg;
  h.unit = zvec(f, 4);
  h.unit[0] = one;
  h.comult = zten(f, 4, 4, 4);
  h.comult[0][0][0] = one;
  h.comult[1][1][1] = one;
  h.comult[2][2][0] = one;
  h.comult[2][1][2] = one;
  h.comult[3][3][1] = one;
  h.comult[3][0][3] = one;
  h.counit = {one, one, f.zero(), f.zero()};
  h.antipode = zmat(f, 4, 4);
  h.antipode[0][0] = one;
  h.antipode[1][1] = one;
  h.antipode[3][2] = neg;
  h.antipode[2][3] = one;
  return h;
}

}  // namespace oracle
