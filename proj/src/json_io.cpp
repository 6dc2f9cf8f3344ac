#include "hgc/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace hgc {
namespace {

// ---------------------------------------------------------------------------
// Validating cursor: every descent extends a JSON path that is reported in
// schema errors.
// ---------------------------------------------------------------------------

struct Cur {
  const Json* j;
  std::string path;
};

[[noreturn]] void bad(const Cur& c, const std::string& why) {
  throw Error("SchemaViolation", c.path + ": " + why);
}

Cur member(const Cur& c, const std::string& key) {
  if (!c.j->is_object()) bad(c, "expected an object");
  const auto it = c.j->find(key);
  if (it == c.j->end()) bad(c, "missing member \"" + key + "\"");
  return Cur{&*it, c.path + "/" + key};
}

bool has_member(const Cur& c, const std::string& key) {
  return c.j->is_object() && c.j->contains(key);
}

/// Rejects members outside the allowed set, so typos surface as schema
/// errors instead of silently ignored data.
void only_members(const Cur& c, const std::set<std::string>& allowed) {
  if (!c.j->is_object()) bad(c, "expected an object");
  for (const auto& [key, value] : c.j->items())
    if (allowed.find(key) == allowed.end())
      bad(c, "unknown member \"" + key + "\"");
}

std::size_t arr_size(const Cur& c) {
  if (!c.j->is_array()) bad(c, "expected an array");
  return c.j->size();
}

Cur item(const Cur& c, std::size_t i) {
  return Cur{&(*c.j)[i], c.path + "/" + std::to_string(i)};
}

long want_int(const Cur& c) {
  if (!c.j->is_number_integer()) bad(c, "expected an integer");
  return c.j->get<long>();
}

int want_index(const Cur& c, std::size_t n, const std::string& what) {
  const long v = want_int(c);
  if (v < 0 || v >= static_cast<long>(n))
    bad(c, what + " index " + std::to_string(v) + " out of range [0, " +
               std::to_string(n) + ")");
  return static_cast<int>(v);
}

std::string want_str(const Cur& c) {
  if (!c.j->is_string()) bad(c, "expected a string");
  return c.j->get<std::string>();
}

Scalar want_scalar(const Cur& c, const Field& f) {
  const std::string text = want_str(c);
  try {
    return f.parse(text);
  } catch (const Error& e) {
    bad(c, e.what());
  }
}

std::vector<int> want_index_vec(const Cur& c, std::size_t len, std::size_t n,
                                const std::string& what) {
  if (arr_size(c) != len)
    bad(c, "expected " + std::to_string(len) + " entries, found " +
               std::to_string(c.j->size()));
  std::vector<int> out;
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i)
    out.push_back(want_index(item(c, i), n, what));
  return out;
}

std::vector<std::vector<int>> want_index_table(const Cur& c, std::size_t rows,
                                               std::size_t cols, std::size_t n,
                                               const std::string& what) {
  if (arr_size(c) != rows)
    bad(c, "expected " + std::to_string(rows) + " rows, found " +
               std::to_string(c.j->size()));
  std::vector<std::vector<int>> out;
  out.reserve(rows);
  for (std::size_t i = 0; i < rows; ++i)
    out.push_back(want_index_vec(item(c, i), cols, n, what));
  return out;
}

std::string key2(int a, int b) {
  return std::to_string(a) + "," + std::to_string(b);
}
std::string key3(int a, int b, int c) {
  return key2(a, b) + "," + std::to_string(c);
}
std::string keylx(int l, int x) {
  return std::to_string(l) + "|" + std::to_string(x);
}

/// Every expected key must be present and no other key may appear.
void exact_keys(const Cur& c, const std::set<std::string>& expected) {
  for (const std::string& key : expected) (void)member(c, key);
  if (c.j->size() != expected.size())
    for (const auto& [key, value] : c.j->items())
      if (expected.find(key) == expected.end())
        bad(c, "unexpected key \"" + key + "\"");
}

// ---------------------------------------------------------------------------
// Emit helpers.  All iteration happens over sorted containers, so the byte
// stream is canonical.
// ---------------------------------------------------------------------------

Json field_json(const Field& f) {
  Json out;
  if (f.is_rational()) {
    out["type"] = "rational";
  } else {
    out["type"] = "fp";
    out["p"] = f.characteristic();
  }
  return out;
}

Json monoid_json(const FiniteMonoid& m) {
  Json out;
  out["elements"] = m.elements;
  out["identity"] = m.identity;
  out["mult"] = m.mult;
  return out;
}

Json vec_json(const Vec& v) {
  Json out = Json::array();
  for (const Scalar& c : v) out.push_back(c.str());
  return out;
}

Json mult_entries_json(const MultTensor& t) {
  Json out = Json::array();
  for (const auto& [ijk, c] : t.entries) {
    if (c.is_zero()) continue;
    out.push_back(Json::array(
        {std::get<0>(ijk), std::get<1>(ijk), std::get<2>(ijk), c.str()}));
  }
  return out;
}

Json comult_entries_json(const CoMultTensor& t) {
  Json out = Json::array();
  for (const auto& [kij, c] : t.entries) {
    if (c.is_zero()) continue;
    out.push_back(Json::array(
        {std::get<0>(kij), std::get<1>(kij), std::get<2>(kij), c.str()}));
  }
  return out;
}

Json linmap_entries_json(const LinMap& m) {
  Json out = Json::array();
  for (const auto& [rc, c] : m.entries) {
    if (c.is_zero()) continue;
    out.push_back(Json::array({rc.first, rc.second, c.str()}));
  }
  return out;
}

Json space_json(const Space& s) {
  Json out;
  out["label"] = s.label;
  out["dim"] = s.basis.size();
  out["basis"] = s.basis;
  return out;
}

// ---------------------------------------------------------------------------
// Parse helpers.
// ---------------------------------------------------------------------------

Field parse_field(const Cur& c) {
  only_members(c, {"type", "p"});
  const std::string type = want_str(member(c, "type"));
  if (type == "rational") return Field::rationals();
  if (type == "fp") {
    const long p = want_int(member(c, "p"));
    if (p < 2) bad(member(c, "p"), "modulus must be at least 2");
    try {
      return Field::prime(static_cast<unsigned long>(p));
    } catch (const Error& e) {
      bad(member(c, "p"), e.what());
    }
  }
  bad(member(c, "type"), "unknown field type \"" + type + "\"");
}

FiniteMonoid parse_monoid(const Cur& c, bool with_inverse = false) {
  only_members(c, with_inverse
                      ? std::set<std::string>{"elements", "identity", "mult",
                                              "inverse"}
                      : std::set<std::string>{"elements", "identity", "mult"});
  FiniteMonoid m;
  const Cur els = member(c, "elements");
  const std::size_t n = arr_size(els);
  if (n == 0) bad(els, "a monoid needs at least one element");
  m.elements.reserve(n);
  for (std::size_t i = 0; i < n; ++i) m.elements.push_back(want_str(item(els, i)));
  m.identity = want_index(member(c, "identity"), n, "identity");
  m.mult = want_index_table(member(c, "mult"), n, n, n, "product");
  return m;
}

Space parse_space(const Cur& c, const std::set<std::string>& extra = {}) {
  std::set<std::string> allowed = {"label", "dim", "basis"};
  allowed.insert(extra.begin(), extra.end());
  only_members(c, allowed);
  Space s;
  s.label = want_str(member(c, "label"));
  const Cur basis = member(c, "basis");
  const std::size_t d = arr_size(basis);
  s.basis.reserve(d);
  for (std::size_t i = 0; i < d; ++i) s.basis.push_back(want_str(item(basis, i)));
  if (want_int(member(c, "dim")) != static_cast<long>(d))
    bad(member(c, "dim"), "dim disagrees with the basis length");
  return s;
}

Vec parse_vec(const Cur& c, const Field& f, std::size_t dim,
              const std::string& what) {
  if (arr_size(c) != dim)
    bad(c, what + " has " + std::to_string(c.j->size()) +
               " coordinates, expected " + std::to_string(dim));
  Vec out;
  out.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) out.push_back(want_scalar(item(c, i), f));
  return out;
}

MultTensor parse_mult(const Cur& c, const Field& f, const Space& u,
                      const Space& v, const Space& w) {
  MultTensor t{u, v, w, {}};
  const std::size_t n = arr_size(c);
  for (std::size_t r = 0; r < n; ++r) {
    const Cur row = item(c, r);
    if (arr_size(row) != 4) bad(row, "expected [i, j, k, scalar]");
    const int i = want_index(item(row, 0), u.dim(), "left factor");
    const int j = want_index(item(row, 1), v.dim(), "right factor");
    const int k = want_index(item(row, 2), w.dim(), "target");
    const Scalar s = want_scalar(item(row, 3), f);
    if (s.is_zero()) continue;
    if (!t.entries.emplace(std::make_tuple(i, j, k), s).second)
      bad(row, "duplicate entry");
  }
  return t;
}

CoMultTensor parse_comult(const Cur& c, const Field& f, const Space& src,
                          const Space& left, const Space& right) {
  CoMultTensor t{src, left, right, {}};
  const std::size_t n = arr_size(c);
  for (std::size_t r = 0; r < n; ++r) {
    const Cur row = item(c, r);
    if (arr_size(row) != 4) bad(row, "expected [source, left, right, scalar]");
    const int k = want_index(item(row, 0), src.dim(), "source");
    const int i = want_index(item(row, 1), left.dim(), "left leg");
    const int j = want_index(item(row, 2), right.dim(), "right leg");
    const Scalar s = want_scalar(item(row, 3), f);
    if (s.is_zero()) continue;
    if (!t.entries.emplace(std::make_tuple(k, i, j), s).second)
      bad(row, "duplicate entry");
  }
  return t;
}

LinMap parse_linmap(const Cur& c, const Field& f, const Space& domain,
                    const Space& codomain) {
  LinMap m{domain, codomain, {}};
  const std::size_t n = arr_size(c);
  for (std::size_t r = 0; r < n; ++r) {
    const Cur row = item(c, r);
    if (arr_size(row) != 3) bad(row, "expected [codomain, domain, scalar]");
    const int i = want_index(item(row, 0), codomain.dim(), "codomain");
    const int j = want_index(item(row, 1), domain.dim(), "domain");
    const Scalar s = want_scalar(item(row, 2), f);
    if (s.is_zero()) continue;
    if (!m.entries.emplace(std::make_pair(i, j), s).second)
      bad(row, "duplicate entry");
  }
  return m;
}

// ---------------------------------------------------------------------------
// Hopf family body (shared by the standalone kind and the embeddings).
// ---------------------------------------------------------------------------

Json hopf_body(const HopfGC& h) {
  Json out;
  out["field"] = field_json(h.field);
  Json group = monoid_json(h.grading);
  group["inverse"] = h.inv;
  out["group"] = group;

  Json comps = Json::array();
  for (std::size_t g = 0; g < h.comp.size(); ++g) {
    Json comp = space_json(h.comp[g]);
    comp["unit"] = vec_json(h.unit[g]);
    comp["mult"] = mult_entries_json(h.mult[g]);
    comps.push_back(std::move(comp));
  }
  out["components"] = std::move(comps);

  Json comult = Json::object();
  for (const auto& [key, t] : h.comult)
    comult[key2(key.first, key.second)] = comult_entries_json(t);
  out["comult"] = std::move(comult);
  out["counit"] = vec_json(h.counit);

  Json antipode = Json::object();
  for (std::size_t g = 0; g < h.antipode.size(); ++g)
    antipode[std::to_string(g)] = linmap_entries_json(h.antipode[g]);
  out["antipode"] = std::move(antipode);
  if (h.has_twisted()) {
    Json tw = Json::object();
    for (std::size_t g = 0; g < h.antipode_tw.size(); ++g)
      tw[std::to_string(g)] = linmap_entries_json(h.antipode_tw[g]);
    out["twisted_antipode"] = std::move(tw);
  }
  return out;
}

HopfGC parse_hopf_body(const Cur& c) {
  only_members(c, {"kind", "field", "group", "components", "comult", "counit",
                   "antipode", "twisted_antipode"});
  HopfGC h;
  h.field = parse_field(member(c, "field"));

  const Cur group = member(c, "group");
  h.grading = parse_monoid(group, /*with_inverse=*/true);
  const std::size_t n = h.grading.size();
  h.inv = want_index_vec(member(group, "inverse"), n, n, "inverse");

  const Cur comps = member(c, "components");
  if (arr_size(comps) != n)
    bad(comps, "expected one component per group element");
  for (std::size_t g = 0; g < n; ++g) {
    const Cur comp = item(comps, g);
    h.comp.push_back(parse_space(comp, {"unit", "mult"}));
    const Space& s = h.comp.back();
    h.unit.push_back(parse_vec(member(comp, "unit"), h.field, s.dim(), "unit"));
    h.mult.push_back(parse_mult(member(comp, "mult"), h.field, s, s, s));
  }

  const Cur comult = member(c, "comult");
  std::set<std::string> ckeys;
  for (std::size_t g1 = 0; g1 < n; ++g1)
    for (std::size_t g2 = 0; g2 < n; ++g2)
      ckeys.insert(key2(static_cast<int>(g1), static_cast<int>(g2)));
  exact_keys(comult, ckeys);
  for (std::size_t g1 = 0; g1 < n; ++g1)
    for (std::size_t g2 = 0; g2 < n; ++g2) {
      const std::string key = key2(static_cast<int>(g1), static_cast<int>(g2));
      const int g12 = h.grading.op(static_cast<int>(g1), static_cast<int>(g2));
      h.comult.emplace(
          std::make_pair(static_cast<int>(g1), static_cast<int>(g2)),
          parse_comult(member(comult, key), h.field, h.at(g12),
                       h.at(static_cast<int>(g1)), h.at(static_cast<int>(g2))));
    }

  h.counit = parse_vec(member(c, "counit"), h.field,
                       h.at(h.grading.identity).dim(), "counit");

  const auto parse_antipodes = [&](const Cur& sec) {
    std::set<std::string> keys;
    for (std::size_t g = 0; g < n; ++g) keys.insert(std::to_string(g));
    exact_keys(sec, keys);
    std::vector<LinMap> out;
    for (std::size_t g = 0; g < n; ++g)
      out.push_back(parse_linmap(
          member(sec, std::to_string(g)), h.field,
          h.at(h.inv[g]), h.at(static_cast<int>(g))));
    return out;
  };
  h.antipode = parse_antipodes(member(c, "antipode"));
  if (has_member(c, "twisted_antipode"))
    h.antipode_tw = parse_antipodes(member(c, "twisted_antipode"));
  return h;
}

// ---------------------------------------------------------------------------
// Discrete datum body (shared by graded_algebra and doihopf_datum).
// ---------------------------------------------------------------------------

Json datum_json(const DiscreteDoiHopfDatum& d) {
  Json out;
  out["acting"] = monoid_json(d.acting);
  out["lambda"] = monoid_json(d.lambda);
  out["gamma"] = d.gamma;
  Json x;
  x["carrier"] = d.x.carrier;
  x["action"] = d.x.action;
  out["x"] = std::move(x);
  return out;
}

DiscreteDoiHopfDatum parse_datum(const Cur& c) {
  only_members(c, {"acting", "lambda", "gamma", "x"});
  DiscreteDoiHopfDatum d;
  d.acting = parse_monoid(member(c, "acting"));
  d.lambda = parse_monoid(member(c, "lambda"));
  d.gamma = want_index_vec(member(c, "gamma"), d.lambda.size(),
                           d.acting.size(), "gamma");
  const Cur x = member(c, "x");
  only_members(x, {"carrier", "action"});
  d.x.acting = d.acting;
  const Cur carrier = member(x, "carrier");
  const std::size_t nx = arr_size(carrier);
  if (nx == 0) bad(carrier, "the point set must be nonempty");
  for (std::size_t i = 0; i < nx; ++i)
    d.x.carrier.push_back(want_str(item(carrier, i)));
  d.x.action = want_index_table(member(x, "action"), nx, d.acting.size(), nx,
                                "point action");
  return d;
}

// ---------------------------------------------------------------------------
// Graded algebra body (shared by the standalone kind, graded_module and
// drinfeld_double).
// ---------------------------------------------------------------------------

void galg_body_into(Json& out, const GradedAlgebra& a) {
  out["field"] = field_json(a.field);
  out["datum"] = datum_json(a.datum);
  Json comps = Json::object();
  for (std::size_t l = 0; l < a.nl(); ++l)
    for (std::size_t x = 0; x < a.nx(); ++x)
      comps[keylx(static_cast<int>(l), static_cast<int>(x))] =
          space_json(a.at(static_cast<int>(l), static_cast<int>(x)));
  out["components"] = std::move(comps);
  Json unit = Json::array();
  for (const Vec& v : a.unit) unit.push_back(vec_json(v));
  out["unit"] = std::move(unit);
  Json mult = Json::object();
  for (const auto& [key, t] : a.mult)
    mult[key3(std::get<0>(key), std::get<1>(key), std::get<2>(key))] =
        mult_entries_json(t);
  out["mult"] = std::move(mult);
}

GradedAlgebra parse_galg_body(const Cur& c) {
  GradedAlgebra a;
  a.field = parse_field(member(c, "field"));
  a.datum = parse_datum(member(c, "datum"));
  const std::size_t nl = a.nl(), nx = a.nx();
  const int e = a.datum.lambda.identity;

  const Cur comps = member(c, "components");
  std::set<std::string> ckeys;
  for (std::size_t l = 0; l < nl; ++l)
    for (std::size_t x = 0; x < nx; ++x)
      ckeys.insert(keylx(static_cast<int>(l), static_cast<int>(x)));
  exact_keys(comps, ckeys);
  a.comp.resize(nl * nx);
  for (std::size_t l = 0; l < nl; ++l)
    for (std::size_t x = 0; x < nx; ++x) {
      const int ci = a.cidx(static_cast<int>(l), static_cast<int>(x));
      a.comp[static_cast<std::size_t>(ci)] = parse_space(
          member(comps, keylx(static_cast<int>(l), static_cast<int>(x))));
    }

  const Cur unit = member(c, "unit");
  if (arr_size(unit) != nx) bad(unit, "expected one local unit per point");
  for (std::size_t x = 0; x < nx; ++x)
    a.unit.push_back(parse_vec(item(unit, x), a.field,
                               a.at(e, static_cast<int>(x)).dim(),
                               "local unit"));

  const Cur mult = member(c, "mult");
  std::set<std::string> mkeys;
  for (std::size_t l = 0; l < nl; ++l)
    for (std::size_t x = 0; x < nx; ++x)
      for (std::size_t l2 = 0; l2 < nl; ++l2)
        mkeys.insert(key3(static_cast<int>(l), static_cast<int>(x),
                          static_cast<int>(l2)));
  exact_keys(mult, mkeys);
  for (std::size_t l = 0; l < nl; ++l)
    for (std::size_t x = 0; x < nx; ++x)
      for (std::size_t l2 = 0; l2 < nl; ++l2) {
        const int li = static_cast<int>(l), xi = static_cast<int>(x),
                  l2i = static_cast<int>(l2);
        const int x2 = a.datum.x.act(xi, a.datum.gamma[l2]);
        const int l12 = a.datum.lambda.op(li, l2i);
        a.mult.emplace(
            std::make_tuple(li, xi, l2i),
            parse_mult(member(mult, key3(li, xi, l2i)), a.field, a.at(li, xi),
                       a.at(l2i, x2), a.at(l12, x2)));
      }
  return a;
}

// ---------------------------------------------------------------------------
// Drinfeld double helpers.
// ---------------------------------------------------------------------------

Json elem2_json(const Elem2& r) {
  Json out;
  out["first"] = Json::array({r.l1, r.x1});
  out["second"] = Json::array({r.l2, r.x2});
  out["coeff"] = vec_json(r.coeff);
  return out;
}

Elem2 parse_elem2(const Cur& c, const GradedAlgebra& core) {
  only_members(c, {"first", "second", "coeff"});
  Elem2 r;
  const Cur first = member(c, "first");
  if (arr_size(first) != 2) bad(first, "expected [degree, point]");
  r.l1 = want_index(item(first, 0), core.nl(), "degree");
  r.x1 = want_index(item(first, 1), core.nx(), "point");
  const Cur second = member(c, "second");
  if (arr_size(second) != 2) bad(second, "expected [degree, point]");
  r.l2 = want_index(item(second, 0), core.nl(), "degree");
  r.x2 = want_index(item(second, 1), core.nx(), "point");
  r.coeff = parse_vec(member(c, "coeff"), core.field,
                      core.at(r.l1, r.x1).dim() * core.at(r.l2, r.x2).dim(),
                      "braiding element");
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// Public kinds.
// ---------------------------------------------------------------------------

std::string kind_of(const Json& doc) {
  const Cur root{&doc, ""};
  const std::string kind = want_str(member(root, "kind"));
  static const std::set<std::string> kinds = {
      "hopf_gc",      "graded_algebra", "graded_module",
      "doihopf_datum", "yd_module",      "drinfeld_double"};
  if (kinds.find(kind) == kinds.end())
    bad(member(root, "kind"), "unknown kind \"" + kind + "\"");
  return kind;
}

Json emit_hopf(const HopfGC& h) {
  Json out;
  out["kind"] = "hopf_gc";
  Json body = hopf_body(h);
  for (auto& [key, value] : body.items()) out[key] = std::move(value);
  return out;
}

HopfGC parse_hopf(const Json& doc) {
  if (kind_of(doc) != "hopf_gc")
    throw Error("SchemaViolation", "/kind: expected \"hopf_gc\"");
  return parse_hopf_body(Cur{&doc, ""});
}

Json emit_graded_algebra(const GradedAlgebra& a) {
  Json out;
  out["kind"] = "graded_algebra";
  galg_body_into(out, a);
  return out;
}

GradedAlgebra parse_graded_algebra(const Json& doc) {
  if (kind_of(doc) != "graded_algebra")
    throw Error("SchemaViolation", "/kind: expected \"graded_algebra\"");
  const Cur root{&doc, ""};
  only_members(root, {"kind", "field", "datum", "components", "unit", "mult"});
  return parse_galg_body(root);
}

Json emit_graded_module(const GradedModule& m) {
  Json out;
  out["kind"] = "graded_module";
  Json alg;
  galg_body_into(alg, m.alg);
  out["algebra"] = std::move(alg);
  Json carrier;
  carrier["carrier"] = m.y.carrier;
  carrier["action"] = m.y.action;
  carrier["beta"] = m.y.beta;
  out["carrier"] = std::move(carrier);
  Json comps = Json::array();
  for (const Space& s : m.comp) comps.push_back(space_json(s));
  out["components"] = std::move(comps);
  Json action = Json::object();
  for (const auto& [key, t] : m.action)
    action[key2(key.first, key.second)] = mult_entries_json(t);
  out["action"] = std::move(action);
  return out;
}

GradedModule parse_graded_module(const Json& doc) {
  if (kind_of(doc) != "graded_module")
    throw Error("SchemaViolation", "/kind: expected \"graded_module\"");
  const Cur root{&doc, ""};
  only_members(root, {"kind", "algebra", "carrier", "components", "action"});
  GradedModule m;
  const Cur alg = member(root, "algebra");
  only_members(alg, {"field", "datum", "components", "unit", "mult"});
  m.alg = parse_galg_body(alg);
  const std::size_t nl = m.alg.nl(), nx = m.alg.nx();

  const Cur carrier = member(root, "carrier");
  only_members(carrier, {"carrier", "action", "beta"});
  const Cur points = member(carrier, "carrier");
  const std::size_t ny = arr_size(points);
  if (ny == 0) bad(points, "the point set must be nonempty");
  for (std::size_t i = 0; i < ny; ++i)
    m.y.carrier.push_back(want_str(item(points, i)));
  m.y.action =
      want_index_table(member(carrier, "action"), ny, nl, ny, "point action");
  m.y.beta = want_index_vec(member(carrier, "beta"), ny, nx, "beta");

  const Cur comps = member(root, "components");
  if (arr_size(comps) != ny) bad(comps, "expected one component per point");
  for (std::size_t i = 0; i < ny; ++i)
    m.comp.push_back(parse_space(item(comps, i)));

  const Cur action = member(root, "action");
  std::set<std::string> akeys;
  for (std::size_t y = 0; y < ny; ++y)
    for (std::size_t l = 0; l < nl; ++l)
      akeys.insert(key2(static_cast<int>(y), static_cast<int>(l)));
  exact_keys(action, akeys);
  for (std::size_t y = 0; y < ny; ++y)
    for (std::size_t l = 0; l < nl; ++l) {
      const int yi = static_cast<int>(y), li = static_cast<int>(l);
      const int yl = m.y.act(yi, li);
      m.action.emplace(
          std::make_pair(yi, li),
          parse_mult(member(action, key2(yi, li)), m.alg.field, m.at(yi),
                     m.alg.at(li, m.y.beta[static_cast<std::size_t>(yl)]),
                     m.at(yl)));
    }
  return m;
}

Json emit_doihopf_datum(const DoiHopfDatumTk& d) {
  Json out;
  out["kind"] = "doihopf_datum";
  out["hopf"] = hopf_body(d.h);
  out["discrete"] = datum_json(d.discrete);

  Json ca;
  Json comps = Json::array();
  for (std::size_t x = 0; x < d.a.comp.size(); ++x) {
    Json comp = space_json(d.a.comp[x]);
    comp["unit"] = vec_json(d.a.unit[x]);
    comp["mult"] = mult_entries_json(d.a.mult[x]);
    comps.push_back(std::move(comp));
  }
  ca["components"] = std::move(comps);
  Json coaction = Json::object();
  for (const auto& [key, t] : d.a.coaction)
    coaction[key2(key.first, key.second)] = comult_entries_json(t);
  ca["coaction"] = std::move(coaction);
  out["comodule_algebra"] = std::move(ca);

  Json mc;
  mc["gamma"] = d.c.gamma;
  Json ccomps = Json::array();
  for (std::size_t l = 0; l < d.c.c.comp.size(); ++l) {
    Json comp = space_json(d.c.c.comp[l]);
    comp["action"] = mult_entries_json(d.c.action[l]);
    ccomps.push_back(std::move(comp));
  }
  mc["components"] = std::move(ccomps);
  Json comult = Json::object();
  for (const auto& [key, t] : d.c.c.comult)
    comult[key2(key.first, key.second)] = comult_entries_json(t);
  mc["comult"] = std::move(comult);
  mc["counit"] = vec_json(d.c.c.counit);
  out["module_coalgebra"] = std::move(mc);
  return out;
}

DoiHopfDatumTk parse_doihopf_datum(const Json& doc) {
  if (kind_of(doc) != "doihopf_datum")
    throw Error("SchemaViolation", "/kind: expected \"doihopf_datum\"");
  const Cur root{&doc, ""};
  only_members(root, {"kind", "hopf", "discrete", "comodule_algebra",
                      "module_coalgebra"});
  DoiHopfDatumTk d;
  d.h = parse_hopf_body(member(root, "hopf"));
  d.discrete = parse_datum(member(root, "discrete"));
  if (!(d.discrete.acting == d.h.grading))
    bad(member(root, "discrete"),
        "the acting monoid disagrees with the family grading");
  const std::size_t nl = d.discrete.lambda.size();
  const std::size_t nx = d.discrete.x.size();
  const std::size_t ng = d.h.grading.size();

  const Cur ca = member(root, "comodule_algebra");
  only_members(ca, {"components", "coaction"});
  d.a.field = d.h.field;
  d.a.x = d.discrete.x;
  const Cur acomps = member(ca, "components");
  if (arr_size(acomps) != nx) bad(acomps, "expected one component per point");
  for (std::size_t x = 0; x < nx; ++x) {
    const Cur comp = item(acomps, x);
    d.a.comp.push_back(parse_space(comp, {"unit", "mult"}));
    const Space& s = d.a.comp.back();
    d.a.unit.push_back(
        parse_vec(member(comp, "unit"), d.a.field, s.dim(), "unit"));
    d.a.mult.push_back(parse_mult(member(comp, "mult"), d.a.field, s, s, s));
  }
  const Cur coaction = member(ca, "coaction");
  std::set<std::string> cokeys;
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t g = 0; g < ng; ++g)
      cokeys.insert(key2(static_cast<int>(x), static_cast<int>(g)));
  exact_keys(coaction, cokeys);
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t g = 0; g < ng; ++g) {
      const int xi = static_cast<int>(x), gi = static_cast<int>(g);
      const int xg = d.discrete.x.act(xi, gi);
      d.a.coaction.emplace(
          std::make_pair(xi, gi),
          parse_comult(member(coaction, key2(xi, gi)), d.a.field, d.a.at(xg),
                       d.a.at(xi), d.h.at(gi)));
    }

  const Cur mc = member(root, "module_coalgebra");
  only_members(mc, {"gamma", "components", "comult", "counit"});
  d.c.c.field = d.h.field;
  d.c.c.grading = d.discrete.lambda;
  d.c.gamma = want_index_vec(member(mc, "gamma"), nl, ng, "gamma");
  const Cur ccomps = member(mc, "components");
  if (arr_size(ccomps) != nl) bad(ccomps, "expected one component per degree");
  for (std::size_t l = 0; l < nl; ++l)
    d.c.c.comp.push_back(parse_space(item(ccomps, l), {"action"}));
  for (std::size_t l = 0; l < nl; ++l) {
    const Space& s = d.c.c.comp[l];
    d.c.action.push_back(parse_mult(member(item(ccomps, l), "action"),
                                    d.c.c.field, s,
                                    d.h.at(d.c.gamma[l]), s));
  }
  const Cur comult = member(mc, "comult");
  std::set<std::string> mkeys;
  for (std::size_t l1 = 0; l1 < nl; ++l1)
    for (std::size_t l2 = 0; l2 < nl; ++l2)
      mkeys.insert(key2(static_cast<int>(l1), static_cast<int>(l2)));
  exact_keys(comult, mkeys);
  for (std::size_t l1 = 0; l1 < nl; ++l1)
    for (std::size_t l2 = 0; l2 < nl; ++l2) {
      const int a = static_cast<int>(l1), b = static_cast<int>(l2);
      const int l12 = d.discrete.lambda.op(a, b);
      d.c.c.comult.emplace(
          std::make_pair(a, b),
          parse_comult(member(comult, key2(a, b)), d.c.c.field,
                       d.c.at(l12), d.c.at(a), d.c.at(b)));
    }
  d.c.c.counit =
      parse_vec(member(mc, "counit"), d.c.c.field,
                d.c.at(d.discrete.lambda.identity).dim(), "counit");
  return d;
}

Json emit_yd_module(const YDModule& m) {
  Json out;
  out["kind"] = "yd_module";
  out["hopf"] = hopf_body(m.h);
  Json carrier;
  carrier["carrier"] = m.v.carrier;
  carrier["action"] = m.v.action;
  carrier["nu"] = m.v.nu;
  out["carrier"] = std::move(carrier);
  Json comps = Json::array();
  for (std::size_t v = 0; v < m.comp.size(); ++v) {
    Json comp = space_json(m.comp[v]);
    comp["action"] = mult_entries_json(m.action[v]);
    comps.push_back(std::move(comp));
  }
  out["components"] = std::move(comps);
  Json coaction = Json::object();
  for (const auto& [key, t] : m.coaction)
    coaction[key2(key.first, key.second)] = comult_entries_json(t);
  out["coaction"] = std::move(coaction);
  return out;
}

YDModule parse_yd_module(const Json& doc) {
  if (kind_of(doc) != "yd_module")
    throw Error("SchemaViolation", "/kind: expected \"yd_module\"");
  const Cur root{&doc, ""};
  only_members(root, {"kind", "hopf", "carrier", "components", "coaction"});
  YDModule m;
  m.h = parse_hopf_body(member(root, "hopf"));
  const std::size_t n = m.h.grading.size();
  m.v.group = FiniteGroup{m.h.grading, m.h.inv};

  const Cur carrier = member(root, "carrier");
  only_members(carrier, {"carrier", "action", "nu"});
  const Cur points = member(carrier, "carrier");
  const std::size_t nv = arr_size(points);
  if (nv == 0) bad(points, "the point set must be nonempty");
  for (std::size_t i = 0; i < nv; ++i)
    m.v.carrier.push_back(want_str(item(points, i)));
  m.v.action =
      want_index_table(member(carrier, "action"), nv, n, nv, "point action");
  m.v.nu = want_index_vec(member(carrier, "nu"), nv, n, "nu");

  const Cur comps = member(root, "components");
  if (arr_size(comps) != nv) bad(comps, "expected one component per point");
  for (std::size_t v = 0; v < nv; ++v)
    m.comp.push_back(parse_space(item(comps, v), {"action"}));
  for (std::size_t v = 0; v < nv; ++v) {
    const Space& s = m.comp[v];
    m.action.push_back(parse_mult(member(item(comps, v), "action"), m.h.field,
                                  s, m.h.at(m.v.nu[v]), s));
  }

  const Cur coaction = member(root, "coaction");
  std::set<std::string> cokeys;
  for (std::size_t v = 0; v < nv; ++v)
    for (std::size_t g = 0; g < n; ++g)
      cokeys.insert(key2(static_cast<int>(v), static_cast<int>(g)));
  exact_keys(coaction, cokeys);
  for (std::size_t v = 0; v < nv; ++v)
    for (std::size_t g = 0; g < n; ++g) {
      const int vi = static_cast<int>(v), gi = static_cast<int>(g);
      const int vg = m.v.act(vi, gi);
      m.coaction.emplace(
          std::make_pair(vi, gi),
          parse_comult(member(coaction, key2(vi, gi)), m.h.field, m.at(vg),
                       m.at(vi), m.h.at(gi)));
    }
  return m;
}

Json emit_double(const DrinfeldDouble& d) {
  Json out;
  out["kind"] = "drinfeld_double";
  out["form"] = d.form == DoubleForm::Smash ? "smash" : "koppinen";
  galg_body_into(out, d.alg.core);

  Json comult = Json::object();
  for (const auto& [key, t] : d.alg.comult)
    comult[key3(std::get<0>(key), std::get<1>(key), std::get<2>(key))] =
        comult_entries_json(t);
  out["comult"] = std::move(comult);
  Json counit = Json::array();
  for (const Vec& v : d.alg.counit) counit.push_back(vec_json(v));
  out["counit"] = std::move(counit);

  if (!d.alg.antipode.empty()) {
    Json antipode = Json::object();
    for (const auto& [key, m] : d.alg.antipode)
      antipode[key2(key.first, key.second)] = linmap_entries_json(m);
    out["antipode"] = std::move(antipode);
  }
  if (!d.alg.antipode_tw.empty()) {
    Json tw = Json::object();
    for (const auto& [key, m] : d.alg.antipode_tw)
      tw[key2(key.first, key.second)] = linmap_entries_json(m);
    out["twisted_antipode"] = std::move(tw);
  }
  if (!d.alg.rmat.empty()) {
    Json r = Json::object();
    for (const auto& [key, e] : d.alg.rmat)
      r[key2(key.first, key.second)] = elem2_json(e);
    out["R"] = std::move(r);
  }
  if (!d.alg.qmat.empty()) {
    Json q = Json::object();
    for (const auto& [key, e] : d.alg.qmat)
      q[key2(key.first, key.second)] = elem2_json(e);
    out["Q"] = std::move(q);
  }
  out["hopf"] = hopf_body(d.h);
  return out;
}

DrinfeldDouble parse_double(const Json& doc) {
  if (kind_of(doc) != "drinfeld_double")
    throw Error("SchemaViolation", "/kind: expected \"drinfeld_double\"");
  const Cur root{&doc, ""};
  only_members(root,
               {"kind", "form", "field", "datum", "components", "unit", "mult",
                "comult", "counit", "antipode", "twisted_antipode", "R", "Q",
                "hopf"});
  DrinfeldDouble d;
  const std::string form = want_str(member(root, "form"));
  if (form == "smash")
    d.form = DoubleForm::Smash;
  else if (form == "koppinen")
    d.form = DoubleForm::Koppinen;
  else
    bad(member(root, "form"), "expected \"smash\" or \"koppinen\"");

  d.h = parse_hopf_body(member(root, "hopf"));
  d.alg.core = parse_galg_body(root);
  GradedAlgebra& core = d.alg.core;
  if (!(core.field == d.h.field))
    bad(member(root, "field"), "field of the embedded family differs");
  const std::size_t nl = core.nl(), nx = core.nx();
  if (nl != d.h.grading.size() || nx != d.h.grading.size())
    bad(member(root, "datum"),
        "the double must be graded by pairs over the family group");
  const FiniteMonoid& lam = core.datum.lambda;
  if (!(lam == d.h.grading))
    bad(member(root, "datum"),
        "the degree group must equal the family grading group");

  const Cur comult = member(root, "comult");
  std::set<std::string> ckeys;
  for (std::size_t l = 0; l < nl; ++l)
    for (std::size_t ga = 0; ga < nl; ++ga)
      for (std::size_t gb = 0; gb < nl; ++gb)
        ckeys.insert(key3(static_cast<int>(l), static_cast<int>(ga),
                          static_cast<int>(gb)));
  exact_keys(comult, ckeys);
  for (std::size_t l = 0; l < nl; ++l)
    for (std::size_t ga = 0; ga < nl; ++ga)
      for (std::size_t gb = 0; gb < nl; ++gb) {
        const int li = static_cast<int>(l), a = static_cast<int>(ga),
                  b = static_cast<int>(gb);
        d.alg.comult.emplace(
            std::make_tuple(li, a, b),
            parse_comult(member(comult, key3(li, a, b)), core.field,
                         core.at(li, lam.op(a, b)), core.at(li, a),
                         core.at(li, b)));
      }

  const Cur counit = member(root, "counit");
  if (arr_size(counit) != nl) bad(counit, "expected one counit per degree");
  for (std::size_t l = 0; l < nl; ++l)
    d.alg.counit.push_back(
        parse_vec(item(counit, l), core.field,
                  core.at(static_cast<int>(l), lam.identity).dim(), "counit"));

  const auto parse_antipode_section = [&](const Cur& sec) {
    std::map<std::pair<int, int>, LinMap> out;
    std::set<std::string> keys;
    for (std::size_t l = 0; l < nl; ++l)
      for (std::size_t g = 0; g < nl; ++g)
        keys.insert(key2(static_cast<int>(l), static_cast<int>(g)));
    exact_keys(sec, keys);
    for (std::size_t l = 0; l < nl; ++l)
      for (std::size_t g = 0; g < nl; ++g) {
        const int li = static_cast<int>(l), gi = static_cast<int>(g);
        const int lt = d.h.ginv(li);
        const int xt = lam.op(li, lam.op(gi, lt));
        out.emplace(std::make_pair(li, gi),
                    parse_linmap(member(sec, key2(li, gi)), core.field,
                                 core.at(li, d.h.ginv(gi)), core.at(lt, xt)));
      }
    return out;
  };
  if (has_member(root, "antipode"))
    d.alg.antipode = parse_antipode_section(member(root, "antipode"));
  if (has_member(root, "twisted_antipode"))
    d.alg.antipode_tw = parse_antipode_section(member(root, "twisted_antipode"));

  const auto parse_elem_section = [&](const Cur& sec) {
    std::map<std::pair<int, int>, Elem2> out;
    std::set<std::string> keys;
    for (std::size_t g = 0; g < nl; ++g)
      for (std::size_t g2 = 0; g2 < nl; ++g2)
        keys.insert(key2(static_cast<int>(g), static_cast<int>(g2)));
    exact_keys(sec, keys);
    for (std::size_t g = 0; g < nl; ++g)
      for (std::size_t g2 = 0; g2 < nl; ++g2) {
        const int a = static_cast<int>(g), b = static_cast<int>(g2);
        out.emplace(std::make_pair(a, b),
                    parse_elem2(member(sec, key2(a, b)), core));
      }
    return out;
  };
  if (has_member(root, "R")) d.alg.rmat = parse_elem_section(member(root, "R"));
  if (has_member(root, "Q")) d.alg.qmat = parse_elem_section(member(root, "Q"));
  return d;
}

// ---------------------------------------------------------------------------
// Bytes and files.
// ---------------------------------------------------------------------------

std::string to_bytes(const Json& doc) { return doc.dump(2) + "\n"; }

Json from_bytes(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error("ParseError", e.what());
  }
}

Json load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("IoError", "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_bytes(buf.str());
}

void save_file(const std::string& path, const Json& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("IoError", "cannot write " + path);
  out << to_bytes(doc);
  if (!out) throw Error("IoError", "cannot write " + path);
}

}  // namespace hgc
