#include "hgc/demo.hpp"

#include <array>

namespace hgc {

namespace {

FiniteGroup cyclic_group(int n, const std::vector<std::string>& names) {
  FiniteGroup g;
  g.monoid.elements = names;
  g.monoid.identity = 0;
  g.monoid.mult.resize(n, std::vector<int>(n));
  g.inv.resize(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) g.monoid.mult[i][j] = (i + j) % n;
    g.inv[i] = (n - i) % n;
  }
  return g;
}

FiniteGroup symmetric3() {
  // permutations of {1,2,3}; p[i] = image of i
  const std::vector<std::array<int, 3>> perms = {
      {0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
  const std::vector<std::string> names = {"id",    "(12)",  "(23)",
                                          "(13)",  "(123)", "(132)"};
  auto compose = [&](int a, int b) {
    // right action convention: (a*b)(i) = b(a(i))
    std::array<int, 3> c{};
    for (int i = 0; i < 3; ++i) c[i] = perms[b][perms[a][i]];
    for (std::size_t k = 0; k < perms.size(); ++k)
      if (perms[k] == c) return static_cast<int>(k);
    throw Error("MalformedTable", "permutation composition fell outside S3");
  };
  FiniteGroup g;
  g.monoid.elements = names;
  g.monoid.identity = 0;
  g.monoid.mult.resize(6, std::vector<int>(6));
  g.inv.resize(6);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) g.monoid.mult[a][b] = compose(a, b);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      if (g.monoid.mult[a][b] == 0) g.inv[a] = b;
  return g;
}

}  // namespace

FiniteGroup demo_group(const std::string& name) {
  if (name == "e") return cyclic_group(1, {"e"});
  if (name == "c2") return cyclic_group(2, {"e", "t"});
  if (name == "c3") return cyclic_group(3, {"e", "r", "r2"});
  if (name == "s3") return symmetric3();
  throw Error("UnknownDemo", "unknown group '" + name + "'");
}

OrdinaryHopf kc2_hopf(const Field& f) {
  OrdinaryHopf h;
  h.space = Space{"kC2", {"1", "s"}};
  const Scalar one = f.one();
  h.mult = MultTensor{h.space,
                      h.space,
                      h.space,
                      {{{0, 0, 0}, one},
                       {{0, 1, 1}, one},
                       {{1, 0, 1}, one},
                       {{1, 1, 0}, one}}};
  h.unit = Vec{one, f.zero()};
  h.comult = CoMultTensor{
      h.space, h.space, h.space, {{{0, 0, 0}, one}, {{1, 1, 1}, one}}};
  h.counit = Vec{one, one};
  h.antipode =
      LinMap{h.space, h.space, {{{0, 0}, one}, {{1, 1}, one}}};
  return h;
}

OrdinaryHopf sweedler4_hopf(const Field& f) {
  if (f.characteristic() == 2)
    throw Error("CharacteristicConflict",
                "the four-dimensional demo algebra needs 1/2");
  OrdinaryHopf h;
  h.space = Space{"H4", {"1", "g", "x", "gx"}};
  const Scalar one = f.one();
  const Scalar neg = f.from_int(-1);
  // basis indices: 1 -> 0, g -> 1, x -> 2, gx -> 3
  MultTensor m{h.space, h.space, h.space, {}};
  auto set = [&](int i, int j, int k, const Scalar& c) {
    m.entries[{i, j, k}] = c;
  };
  for (int i = 0; i < 4; ++i) {
    set(0, i, i, one);             // 1 * a = a
    if (i != 0) set(i, 0, i, one); // a * 1 = a
  }
  set(1, 1, 0, one);   // g g = 1
  set(1, 2, 3, one);   // g x = gx
  set(1, 3, 2, one);   // g gx = x
  set(2, 1, 3, neg);   // x g = -gx
  set(3, 1, 2, neg);   // gx g = -x
  // x x = 0, x gx = 0, gx x = 0, gx gx = 0: no entries
  h.mult = m;
  h.unit = Vec{one, f.zero(), f.zero(), f.zero()};
  CoMultTensor d{h.space, h.space, h.space, {}};
  d.entries[{0, 0, 0}] = one;  // D(1) = 1 (x) 1
  d.entries[{1, 1, 1}] = one;  // D(g) = g (x) g
  d.entries[{2, 2, 0}] = one;  // D(x) = x (x) 1 + g (x) x
  d.entries[{2, 1, 2}] = one;
  d.entries[{3, 3, 1}] = one;  // D(gx) = gx (x) g + 1 (x) gx
  d.entries[{3, 0, 3}] = one;
  h.comult = d;
  h.counit = Vec{one, one, f.zero(), f.zero()};
  h.antipode = LinMap{h.space,
                      h.space,
                      {{{0, 0}, one},   // S(1) = 1
                       {{1, 1}, one},   // S(g) = g
                       {{3, 2}, neg},   // S(x) = -gx
                       {{2, 3}, one}}}; // S(gx) = x
  return h;
}

HopfGC demo_hopf(const std::string& family, const std::string& group,
                 const Field& f) {
  const FiniteGroup g = demo_group(group);
  if (family == "trivial") return trivial_family(f, g);
  if (family == "kc2") return constant_family(f, g, kc2_hopf(f));
  if (family == "sweedler4") return constant_family(f, g, sweedler4_hopf(f));
  throw Error("UnknownDemo", "unknown family '" + family + "'");
}

}  // namespace hgc
