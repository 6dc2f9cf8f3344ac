#include "hgc/discrete.hpp"

#include <set>

namespace hgc {

namespace {

std::string idx_label(const std::vector<std::string>& names, int i) {
  return names.at(static_cast<std::size_t>(i));
}

void check_table_shape(ValidationReport& r, const std::string& who,
                       std::size_t rows, std::size_t cols,
                       const std::vector<std::vector<int>>& table,
                       std::size_t range) {
  r.count(who + ".table_shape");
  if (table.size() != rows) {
    r.fail(who + ".table_shape", "rows", std::to_string(table.size()),
           std::to_string(rows));
    return;
  }
  for (std::size_t i = 0; i < rows; ++i) {
    if (table[i].size() != cols) {
      r.fail(who + ".table_shape", "row " + std::to_string(i),
             std::to_string(table[i].size()), std::to_string(cols));
      return;
    }
    for (std::size_t j = 0; j < cols; ++j)
      if (table[i][j] < 0 || static_cast<std::size_t>(table[i][j]) >= range) {
        r.fail(who + ".table_shape",
               "entry (" + std::to_string(i) + "," + std::to_string(j) + ")",
               std::to_string(table[i][j]), "0.." + std::to_string(range - 1));
        return;
      }
  }
}

void check_labels(ValidationReport& r, const std::string& who,
                  const std::vector<std::string>& labels) {
  r.count(who + ".labels");
  std::set<std::string> seen;
  for (const auto& l : labels)
    if (l.empty() || !seen.insert(l).second) {
      r.fail(who + ".labels", "'" + l + "'", "unique non-empty labels", "");
      return;
    }
}

}  // namespace

int FiniteMonoid::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == label) return static_cast<int>(i);
  throw Error("MalformedTable", "unknown element label '" + label + "'");
}

ValidationReport validate_monoid(const FiniteMonoid& m) {
  ValidationReport r;
  check_labels(r, "monoid", m.elements);
  check_table_shape(r, "monoid", m.size(), m.size(), m.mult, m.size());
  if (!r.ok()) return r;
  r.count("monoid.identity_range");
  if (m.identity < 0 || static_cast<std::size_t>(m.identity) >= m.size()) {
    r.fail("monoid.identity_range", "identity", std::to_string(m.identity), "");
    return r;
  }
  const int e = m.identity;
  for (std::size_t i = 0; i < m.size(); ++i) {
    r.count("monoid.identity");
    if (m.op(e, static_cast<int>(i)) != static_cast<int>(i) ||
        m.op(static_cast<int>(i), e) != static_cast<int>(i))
      r.fail("monoid.identity", idx_label(m.elements, static_cast<int>(i)),
             "e*a = a*e = a", "");
  }
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      for (std::size_t k = 0; k < m.size(); ++k) {
        r.count("monoid.assoc");
        int ij_k = m.op(m.op(i, j), static_cast<int>(k));
        int i_jk = m.op(static_cast<int>(i), m.op(j, k));
        if (ij_k != i_jk)
          r.fail("monoid.assoc",
                 "(" + idx_label(m.elements, i) + "," +
                     idx_label(m.elements, j) + "," +
                     idx_label(m.elements, k) + ")",
                 idx_label(m.elements, ij_k), idx_label(m.elements, i_jk));
      }
  return r;
}

std::optional<FiniteGroup> try_group(const FiniteMonoid& m) {
  if (!validate_monoid(m).ok()) return std::nullopt;
  FiniteGroup g{m, std::vector<int>(m.size(), -1)};
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m.op(i, j) == m.identity && m.op(j, i) == m.identity) {
        g.inv[i] = static_cast<int>(j);
        break;
      }
    if (g.inv[i] < 0) return std::nullopt;
  }
  return g;
}

FiniteGroup require_group(const FiniteMonoid& m, const std::string& who) {
  auto g = try_group(m);
  if (!g) throw Error("NotAGroup", who + " must be a group");
  return *g;
}

ValidationReport validate_gset(const RightGSet& s) {
  ValidationReport r;
  r.merge(validate_monoid(s.acting));
  check_labels(r, "gset", s.carrier);
  check_table_shape(r, "gset", s.size(), s.acting.size(), s.action, s.size());
  if (!r.ok()) return r;
  for (std::size_t x = 0; x < s.size(); ++x) {
    r.count("gset.identity");
    if (s.act(static_cast<int>(x), s.acting.identity) != static_cast<int>(x))
      r.fail("gset.identity", idx_label(s.carrier, static_cast<int>(x)),
             "x*e = x", "");
    for (std::size_t g = 0; g < s.acting.size(); ++g)
      for (std::size_t h = 0; h < s.acting.size(); ++h) {
        r.count("gset.assoc");
        int lhs = s.act(s.act(static_cast<int>(x), static_cast<int>(g)),
                        static_cast<int>(h));
        int rhs = s.act(static_cast<int>(x), s.acting.op(g, h));
        if (lhs != rhs)
          r.fail("gset.assoc",
                 "(" + idx_label(s.carrier, x) + "," +
                     idx_label(s.acting.elements, g) + "," +
                     idx_label(s.acting.elements, h) + ")",
                 idx_label(s.carrier, lhs), idx_label(s.carrier, rhs));
      }
  }
  return r;
}

ValidationReport validate_crossed_gset(const CrossedGSet& v) {
  ValidationReport r;
  RightGSet plain{v.group.monoid, v.carrier, v.action};
  r.merge(validate_gset(plain));
  r.count("crossed.nu_shape");
  if (v.nu.size() != v.size()) {
    r.fail("crossed.nu_shape", "nu", std::to_string(v.nu.size()),
           std::to_string(v.size()));
    return r;
  }
  for (std::size_t p = 0; p < v.size(); ++p)
    for (std::size_t g = 0; g < v.group.size(); ++g) {
      r.count("crossed.conjugation");
      int lhs = v.nu.at(v.act(static_cast<int>(p), static_cast<int>(g)));
      int rhs = v.group.conj(v.nu[p], static_cast<int>(g));
      if (lhs != rhs)
        r.fail("crossed.conjugation",
               "(" + idx_label(v.carrier, p) + "," +
                   idx_label(v.group.monoid.elements, g) + ")",
               idx_label(v.group.monoid.elements, lhs),
               idx_label(v.group.monoid.elements, rhs));
    }
  return r;
}

CrossedGSet product_crossed_gset(const CrossedGSet& a, const CrossedGSet& b) {
  if (!(a.group.monoid == b.group.monoid))
    throw Error("GroupMismatch", "crossed G-set product over distinct groups");
  CrossedGSet p;
  p.group = a.group;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      p.carrier.push_back(a.carrier[i] + "," + b.carrier[j]);
      p.nu.push_back(a.group.op(a.nu[i], b.nu[j]));
    }
  p.action.resize(p.carrier.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      auto& row = p.action[i * b.size() + j];
      row.resize(a.group.size());
      for (std::size_t g = 0; g < a.group.size(); ++g)
        row[g] = static_cast<int>(
            a.act(static_cast<int>(i), static_cast<int>(g)) * b.size() +
            b.act(static_cast<int>(j), static_cast<int>(g)));
    }
  return p;
}

ValidationReport validate_discrete(const DiscreteDoiHopfDatum& d) {
  ValidationReport r;
  r.merge(validate_monoid(d.acting));
  r.merge(validate_monoid(d.lambda));
  r.merge(validate_gset(d.x));
  r.count("datum.x_acting");
  if (!(d.x.acting == d.acting))
    r.fail("datum.x_acting", "X", "X carries the datum's acting monoid", "");
  r.count("datum.gamma_shape");
  if (d.gamma.size() != d.lambda.size()) {
    r.fail("datum.gamma_shape", "gamma", std::to_string(d.gamma.size()),
           std::to_string(d.lambda.size()));
    return r;
  }
  r.count("datum.gamma_identity");
  if (d.gamma[d.lambda.identity] != d.acting.identity)
    r.fail("datum.gamma_identity", "e", "gamma(e) = e", "");
  for (std::size_t l = 0; l < d.lambda.size(); ++l)
    for (std::size_t m = 0; m < d.lambda.size(); ++m) {
      r.count("datum.gamma_hom");
      int lhs = d.gamma.at(d.lambda.op(l, m));
      int rhs = d.acting.op(d.gamma[l], d.gamma[m]);
      if (lhs != rhs)
        r.fail("datum.gamma_hom",
               "(" + d.lambda.elements[l] + "," + d.lambda.elements[m] + ")",
               d.acting.elements.at(lhs), d.acting.elements.at(rhs));
    }
  return r;
}

ValidationReport validate_datum_set(const DiscreteDoiHopfDatum& d,
                                    const DatumSet& y) {
  ValidationReport r;
  check_labels(r, "datum_set", y.carrier);
  check_table_shape(r, "datum_set", y.size(), d.lambda.size(), y.action,
                    y.size());
  r.count("datum_set.beta_shape");
  if (y.beta.size() != y.size()) {
    r.fail("datum_set.beta_shape", "beta", std::to_string(y.beta.size()),
           std::to_string(y.size()));
    return r;
  }
  if (!r.ok()) return r;
  for (std::size_t p = 0; p < y.size(); ++p) {
    r.count("datum_set.identity");
    if (y.act(static_cast<int>(p), d.lambda.identity) != static_cast<int>(p))
      r.fail("datum_set.identity", y.carrier[p], "y*e = y", "");
    for (std::size_t l = 0; l < d.lambda.size(); ++l) {
      for (std::size_t m = 0; m < d.lambda.size(); ++m) {
        r.count("datum_set.assoc");
        int lhs = y.act(y.act(static_cast<int>(p), static_cast<int>(l)),
                        static_cast<int>(m));
        int rhs = y.act(static_cast<int>(p), d.lambda.op(l, m));
        if (lhs != rhs)
          r.fail("datum_set.assoc",
                 "(" + y.carrier[p] + "," + d.lambda.elements[l] + "," +
                     d.lambda.elements[m] + ")",
                 y.carrier.at(lhs), y.carrier.at(rhs));
      }
      r.count("datum_set.beta_equivariance");
      int lhs = y.beta.at(y.act(static_cast<int>(p), static_cast<int>(l)));
      int rhs = d.act_x(y.beta[p], d.gamma[l]);
      if (lhs != rhs)
        r.fail("datum_set.beta_equivariance",
               "(" + y.carrier[p] + "," + d.lambda.elements[l] + ")",
               d.x.carrier.at(lhs), d.x.carrier.at(rhs));
    }
  }
  return r;
}

DatumSet regular_datum_set(const DiscreteDoiHopfDatum& d) {
  DatumSet y;
  const std::size_t nl = d.lambda.size(), nx = d.x.size();
  for (std::size_t l = 0; l < nl; ++l)
    for (std::size_t x = 0; x < nx; ++x) {
      y.carrier.push_back(d.lambda.elements[l] + "|" + d.x.carrier[x]);
      y.beta.push_back(static_cast<int>(x));
    }
  y.action.resize(nl * nx);
  for (std::size_t l = 0; l < nl; ++l)
    for (std::size_t x = 0; x < nx; ++x) {
      auto& row = y.action[l * nx + x];
      row.resize(nl);
      for (std::size_t m = 0; m < nl; ++m)
        row[m] = static_cast<int>(d.lambda.op(l, m) * nx +
                                  d.act_x(static_cast<int>(x), d.gamma[m]));
    }
  return y;
}

GDatum make_crossed_datum(const FiniteGroup& g) {
  GDatum out;
  out.base = g;
  const std::size_t n = g.size();
  FiniteMonoid prod;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      prod.elements.push_back(g.monoid.elements[a] + "," +
                              g.monoid.elements[b]);
  prod.mult.resize(n * n, std::vector<int>(n * n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d)
          prod.mult[a * n + b][c * n + d] =
              static_cast<int>(g.op(a, c) * n + g.op(b, d));
  prod.identity = static_cast<int>(g.identity() * n + g.identity());

  DiscreteDoiHopfDatum& dd = out.datum;
  dd.acting = prod;
  dd.lambda = g.monoid;
  dd.gamma.resize(n);
  for (std::size_t l = 0; l < n; ++l)
    dd.gamma[l] = static_cast<int>(l * n + l);
  dd.x.acting = prod;
  dd.x.carrier = g.monoid.elements;
  dd.x.action.resize(n, std::vector<int>(n * n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t h = 0; h < n; ++h)
        dd.x.action[x][l * n + h] =
            g.op(g.op(g.inv[l], static_cast<int>(x)), static_cast<int>(h));
  return out;
}

GDatum as_gdatum(const DiscreteDoiHopfDatum& d) {
  FiniteGroup base = require_group(d.lambda, "datum's Lambda");
  GDatum expected = make_crossed_datum(base);
  const auto& e = expected.datum;
  bool same = e.acting == d.acting && e.lambda == d.lambda &&
              e.gamma == d.gamma && e.x.carrier == d.x.carrier &&
              e.x.action == d.x.action;
  if (!same)
    throw Error("GroupMismatch",
                "datum is not the conjugation datum of its Lambda group");
  return expected;
}

CrossedGSet crossed_from_datum_set(const GDatum& g, const DatumSet& y) {
  CrossedGSet v;
  v.group = g.base;
  v.carrier = y.carrier;
  v.action = y.action;
  v.nu = y.beta;
  validate_crossed_gset(v).require_ok("GroupMismatch");
  return v;
}

DatumSet datum_set_from_crossed(const GDatum& g, const CrossedGSet& v) {
  if (!(v.group.monoid == g.base.monoid))
    throw Error("GroupMismatch", "crossed set over a different group");
  DatumSet y;
  y.carrier = v.carrier;
  y.action = v.action;
  y.beta = v.nu;
  validate_datum_set(g.datum, y).require_ok("GroupMismatch");
  return y;
}

}  // namespace hgc
