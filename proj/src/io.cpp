#include "prejj/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace prejj::io {

namespace {

[[noreturn]] void fail(const std::string &path, const std::string &what) {
  throw ParseError((path.empty() ? std::string("/") : path) + ": " + what);
}

const Json &member(const Json &j, const char *key, const std::string &path) {
  if (!j.is_object())
    fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end())
    fail(path, std::string("missing key \"") + key + "\"");
  return *it;
}

std::size_t index_value(const Json &j, const std::string &path) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0)
    fail(path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

const Json &array_of(const Json &j, const std::string &path, std::optional<std::size_t> size = std::nullopt) {
  if (!j.is_array())
    fail(path, "expected an array");
  if (size && j.size() != *size)
    fail(path, "expected " + std::to_string(*size) + " elements, got " + std::to_string(j.size()));
  return j;
}

Scalar scalar_from_json(const Json &j, const Field &f, const std::string &path) {
  std::string text;
  if (j.is_string())
    text = j.get<std::string>();
  else if (j.is_number_integer())
    text = std::to_string(j.get<std::int64_t>());
  else
    fail(path, "expected a scalar string such as \"3/4\" or \"2 mod 5\"");
  try {
    return Scalar::parse(text, f);
  } catch (const ParseError &) {
    throw;
  } catch (const Error &e) {
    fail(path, e.what());
  }
}

Vector vector_from_json(const Json &j, const Field &f, std::size_t n, const std::string &path) {
  array_of(j, path, n);
  Vector v(f, n);
  for (std::size_t i = 0; i < n; ++i)
    v[i] = scalar_from_json(j[i], f, path + "/" + std::to_string(i));
  return v;
}

LinearMap matrix_from_json(const Json &j, const Field &f, std::size_t rows, std::size_t cols,
                           const std::string &path) {
  array_of(j, path, rows);
  LinearMap m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    std::string rp = path + "/" + std::to_string(r);
    array_of(j[r], rp, cols);
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = scalar_from_json(j[r][c], f, rp + "/" + std::to_string(c));
  }
  return m;
}

std::vector<LinearMap> family_from_json(const Json &j, const Field &f, std::size_t count, std::size_t m,
                                        const std::string &path) {
  array_of(j, path, count);
  std::vector<LinearMap> out;
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(matrix_from_json(j[i], f, m, m, path + "/" + std::to_string(i)));
  return out;
}

Json family_to_json(const std::vector<LinearMap> &family) {
  Json out = Json::array();
  for (const auto &m : family)
    out.push_back(to_json(m));
  return out;
}

std::vector<std::size_t> terms_from_json(const Json &j, const Algebra &a, const std::string &path) {
  array_of(j, path);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::string p = path + "/" + std::to_string(i);
    std::size_t idx;
    if (j[i].is_string()) {
      const auto &labels = a.labels();
      auto it = std::find(labels.begin(), labels.end(), j[i].get<std::string>());
      if (it == labels.end())
        fail(p, "unknown basis label \"" + j[i].get<std::string>() + "\"");
      idx = static_cast<std::size_t>(it - labels.begin());
    } else {
      idx = index_value(j[i], p);
    }
    if (idx >= a.dim())
      fail(p, "index " + std::to_string(idx) + " out of range for dim " + std::to_string(a.dim()));
    out.push_back(idx);
  }
  return out;
}

} // namespace

Json parse_json(const std::string &text, const std::string &source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error &e) {
    // Translate the byte offset into line and column.
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": invalid JSON");
  }
}

Json read_json_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ParseError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

std::string dump(const Json &j) { return j.dump(2) + "\n"; }

Json to_json(const Field &f) {
  if (f.is_rational())
    return Json{{"kind", "rational"}};
  return Json{{"kind", "prime"}, {"p", f.modulus()}};
}

Field field_from_json(const Json &j, const std::string &path) {
  std::string kind = member(j, "kind", path).is_string() ? j["kind"].get<std::string>() : "";
  if (kind == "rational")
    return Field::rationals();
  if (kind == "prime") {
    const Json &p = member(j, "p", path);
    if (!p.is_number_integer() || p.get<std::int64_t>() < 2)
      fail(path + "/p", "expected a prime");
    try {
      return Field::prime(p.get<std::uint64_t>());
    } catch (const Error &e) {
      fail(path + "/p", e.what());
    }
  }
  fail(path + "/kind", "expected \"rational\" or \"prime\"");
}

Json to_json(const Scalar &s) { return s.to_string(); }

Json to_json(const Vector &v) {
  Json out = Json::array();
  for (const auto &s : v.coords())
    out.push_back(to_json(s));
  return out;
}

Json to_json(const LinearMap &m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c)
      row.push_back(to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const Algebra &a) {
  Json products = Json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Vector v = a.basis_product(i, j);
      if (!v.is_zero())
        products.push_back(Json{{"i", i}, {"j", j}, {"coeffs", to_json(v)}});
    }
  return Json{{"dim", a.dim()}, {"field", to_json(a.field())}, {"basis", a.labels()}, {"products", products}};
}

Algebra algebra_from_json(const Json &j, const std::optional<Field> &field, const std::string &path) {
  std::size_t n = index_value(member(j, "dim", path), path + "/dim");
  if (n == 0)
    fail(path + "/dim", "dimension must be positive");
  Field f = field ? *field : field_from_json(member(j, "field", path), path + "/field");
  std::vector<std::string> labels = default_labels(n);
  if (j.contains("basis")) {
    const Json &b = array_of(j["basis"], path + "/basis", n);
    labels.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (!b[i].is_string())
        fail(path + "/basis/" + std::to_string(i), "expected a label string");
      labels.push_back(b[i].get<std::string>());
    }
    if (std::set<std::string>(labels.begin(), labels.end()).size() != n)
      fail(path + "/basis", "labels must be distinct");
  }
  Algebra a(f, n, labels);
  const Json &products = array_of(member(j, "products", path), path + "/products");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t k = 0; k < products.size(); ++k) {
    std::string p = path + "/products/" + std::to_string(k);
    std::size_t i = index_value(member(products[k], "i", p), p + "/i");
    std::size_t jj = index_value(member(products[k], "j", p), p + "/j");
    if (i >= n || jj >= n)
      fail(p, "product index out of range for dim " + std::to_string(n));
    if (!seen.insert({i, jj}).second)
      fail(p, "duplicate product (" + std::to_string(i) + ", " + std::to_string(jj) + ")");
    a.set_product(i, jj, vector_from_json(member(products[k], "coeffs", p), f, n, p + "/coeffs"));
  }
  return a;
}

Json to_json(const PreJJBimodule &bm) {
  return Json{{"algebra", to_json(bm.algebra)},
              {"module_dim", bm.module_dim},
              {"l", family_to_json(bm.l)},
              {"r", family_to_json(bm.r)}};
}

PreJJBimodule bimodule_from_json(const Json &j, const std::optional<Field> &field) {
  Algebra a = algebra_from_json(member(j, "algebra", ""), field, "/algebra");
  std::size_t m = index_value(member(j, "module_dim", ""), "/module_dim");
  return {a, m, family_from_json(member(j, "l", ""), a.field(), a.dim(), m, "/l"),
          family_from_json(member(j, "r", ""), a.field(), a.dim(), m, "/r")};
}

Json to_json(const JJRep &rep) {
  return Json{{"algebra", to_json(rep.algebra)}, {"module_dim", rep.module_dim}, {"rho", family_to_json(rep.rho)}};
}

JJRep rep_from_json(const Json &j, const std::optional<Field> &field) {
  Algebra a = algebra_from_json(member(j, "algebra", ""), field, "/algebra");
  std::size_t m = index_value(member(j, "module_dim", ""), "/module_dim");
  return {a, m, family_from_json(member(j, "rho", ""), a.field(), a.dim(), m, "/rho")};
}

Json to_json(const PreJJMatchedPair &mp) {
  return Json{{"A", to_json(mp.A)},           {"B", to_json(mp.B)},           {"lA", family_to_json(mp.lA)},
              {"rA", family_to_json(mp.rA)}, {"lB", family_to_json(mp.lB)}, {"rB", family_to_json(mp.rB)}};
}

PreJJMatchedPair prejj_matched_pair_from_json(const Json &j, const std::optional<Field> &field) {
  Algebra a = algebra_from_json(member(j, "A", ""), field, "/A");
  Algebra b = algebra_from_json(member(j, "B", ""), field ? field : std::optional<Field>(a.field()), "/B");
  const Field &f = a.field();
  return {a,
          b,
          family_from_json(member(j, "lA", ""), f, a.dim(), b.dim(), "/lA"),
          family_from_json(member(j, "rA", ""), f, a.dim(), b.dim(), "/rA"),
          family_from_json(member(j, "lB", ""), f, b.dim(), a.dim(), "/lB"),
          family_from_json(member(j, "rB", ""), f, b.dim(), a.dim(), "/rB")};
}

Json to_json(const JJMatchedPair &mp) {
  return Json{{"G", to_json(mp.G)}, {"H", to_json(mp.H)}, {"rho", family_to_json(mp.rho)}, {"mu", family_to_json(mp.mu)}};
}

JJMatchedPair jj_matched_pair_from_json(const Json &j, const std::optional<Field> &field) {
  Algebra g = algebra_from_json(member(j, "G", ""), field, "/G");
  Algebra h = algebra_from_json(member(j, "H", ""), field ? field : std::optional<Field>(g.field()), "/H");
  return {g, h, family_from_json(member(j, "rho", ""), g.field(), g.dim(), h.dim(), "/rho"),
          family_from_json(member(j, "mu", ""), g.field(), h.dim(), g.dim(), "/mu")};
}

Json to_json(const CheckReport &r) {
  Json witnesses = Json::array();
  for (const auto &w : r.witnesses)
    witnesses.push_back(Json{{"indices", w.indices}, {"condition", w.condition}, {"defect", to_json(w.defect)}});
  return Json{{"identity", r.identity},
              {"passed", r.passed},
              {"violations", r.violations},
              {"witnesses", witnesses},
              {"warnings", r.warnings}};
}

std::vector<TableEntry> table_from_json(const Json &j, const Algebra &ambient) {
  const Json &entries = array_of(member(j, "entries", ""), "/entries");
  std::vector<TableEntry> out;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    std::string p = "/entries/" + std::to_string(k);
    out.push_back({terms_from_json(member(entries[k], "left", p), ambient, p + "/left"),
                   terms_from_json(member(entries[k], "right", p), ambient, p + "/right"),
                   vector_from_json(member(entries[k], "expected", p), ambient.field(), ambient.dim(),
                                    p + "/expected")});
  }
  return out;
}

Json to_json(const Algebra &ambient, const ConformanceEntry &e) {
  return Json{{"lhs", e.lhs},
              {"recomputed", render_vector(ambient, e.recomputed)},
              {"expected", render_vector(ambient, e.expected)},
              {"recomputed_coeffs", to_json(e.recomputed)},
              {"expected_coeffs", to_json(e.expected)},
              {"match", e.match}};
}

Json to_json(const DoubleConstruction &d) {
  return Json{{"kind", to_string(d.kind)},
              {"ambient", to_json(d.ambient)},
              {"form", to_json(d.form.matrix)},
              {"source", Json{{"A", to_json(d.source)}, {"Astar", to_json(d.source_dual)}}},
              {"precondition_failures", d.precondition_failures}};
}

Json to_json(const ConstantTuple &t) { return to_json(Vector(t.entries.empty() ? Field::rationals() : t.entries[0].field(), t.entries)); }

Json to_json(const OrbitCensus &c) {
  Json orbits = Json::array();
  for (const auto &o : c.orbits)
    orbits.push_back(Json{{"representative", to_json(o.representative)}, {"size", o.size}});
  return Json{{"field", to_json(c.field)},
              {"kind", to_string(c.kind)},
              {"dim", c.dim},
              {"total_solutions", c.total_solutions},
              {"orbit_count", c.orbits.size()},
              {"orbits", orbits},
              {"warnings", c.warnings},
              {"metadata", Json{{"tuples_scanned", c.metadata.tuples_scanned},
                                {"group_order", c.metadata.group_order}}}};
}

std::string render_table(const Algebra &a) {
  std::string out;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Vector v = a.basis_product(i, j);
      if (!v.is_zero())
        out += a.label(i) + " * " + a.label(j) + " = " + render_vector(a, v) + "\n";
    }
  if (out.empty())
    out = "all products vanish\n";
  return out;
}

} // namespace prejj::io
