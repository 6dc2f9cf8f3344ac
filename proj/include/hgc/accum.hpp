#pragma once

#include <map>
#include <tuple>
#include <utility>

#include "hgc/linalg.hpp"

namespace hgc {

/// Sparse accumulator over two tensor legs with zero pruning.
struct Acc2 {
  std::map<std::pair<int, int>, Scalar> m;

  void add(const Scalar& c, int i, int j) {
    auto it = m.find({i, j});
    if (it == m.end()) {
      if (!c.is_zero()) m.emplace(std::make_pair(i, j), c);
    } else {
      it->second += c;
      if (it->second.is_zero()) m.erase(it);
    }
  }

  Vec dense(const Field& f, std::size_t d1, std::size_t d2) const {
    Vec out = zero_vec(f, d1 * d2);
    for (const auto& [k, c] : m) out[flat(k.first, k.second, d2)] = c;
    return out;
  }
};

/// Sparse accumulator over three tensor legs with zero pruning.
struct Acc3 {
  std::map<std::tuple<int, int, int>, Scalar> m;

  void add(const Scalar& c, int i, int j, int k) {
    auto it = m.find({i, j, k});
    if (it == m.end()) {
      if (!c.is_zero()) m.emplace(std::make_tuple(i, j, k), c);
    } else {
      it->second += c;
      if (it->second.is_zero()) m.erase(it);
    }
  }

  Vec dense(const Field& f, std::size_t d1, std::size_t d2,
            std::size_t d3) const {
    Vec out = zero_vec(f, d1 * d2 * d3);
    for (const auto& [k, c] : m)
      out[flat(flat(std::get<0>(k), std::get<1>(k), d2), std::get<2>(k), d3)] =
          c;
    return out;
  }
};

/// Dense outer product a (x) b in row-major order.
inline Vec outer(const Field& f, const Vec& a, const Vec& b) {
  Vec out = zero_vec(f, a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      out[flat(i, j, b.size())] = a[i] * b[j];
  }
  return out;
}

}  // namespace hgc
