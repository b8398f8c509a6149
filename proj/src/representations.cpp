#include "prejj/representations.hpp"

#include <set>

namespace prejj {

namespace {

void validate_family(const Algebra &a, std::size_t m, const std::vector<LinearMap> &family,
                     const char *name) {
  if (m == 0)
    throw Error(std::string(name) + ": module dimension must be positive");
  if (family.size() != a.dim())
    throw Error(std::string(name) + ": expected " + std::to_string(a.dim()) + " maps, got " +
                std::to_string(family.size()));
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (family[i].field() != a.field())
      throw FieldMismatch(std::string(name) + "[" + std::to_string(i) + "] is over " +
                          family[i].field().to_string() + ", algebra over " + a.field().to_string());
    if (family[i].rows() != m || family[i].cols() != m)
      throw Error(std::string(name) + "[" + std::to_string(i) + "] must be " + std::to_string(m) +
                  "x" + std::to_string(m));
  }
}

std::vector<std::string> module_labels(const Algebra &a, std::size_t m) {
  auto labels = a.labels();
  auto extra = default_labels(m, "v");
  labels.insert(labels.end(), extra.begin(), extra.end());
  std::set<std::string> seen(labels.begin(), labels.end());
  return seen.size() == labels.size() ? labels : default_labels(a.dim() + m);
}

} // namespace

void JJRep::validate() const { validate_family(algebra, module_dim, rho, "rho"); }

void PreJJBimodule::validate() const {
  validate_family(algebra, module_dim, l, "l");
  validate_family(algebra, module_dim, r, "r");
}

bool operator==(const JJRep &a, const JJRep &b) {
  return a.algebra == b.algebra && a.module_dim == b.module_dim && a.rho == b.rho;
}

bool operator==(const PreJJBimodule &a, const PreJJBimodule &b) {
  return a.algebra == b.algebra && a.module_dim == b.module_dim && a.l == b.l && a.r == b.r;
}

Vector flatten(const LinearMap &m) {
  Vector v(m.field(), m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      v[i * m.cols() + j] = m(i, j);
  return v;
}

JJRep zero_rep(const Algebra &j, std::size_t m) {
  return {j, m, std::vector<LinearMap>(j.dim(), LinearMap::zero(j.field(), m, m))};
}

JJRep adjoint_rep(const Algebra &j) { return {j, j.dim(), left_mult_family(j)}; }

PreJJBimodule zero_bimodule(const Algebra &a, std::size_t m) {
  std::vector<LinearMap> z(a.dim(), LinearMap::zero(a.field(), m, m));
  return {a, m, z, z};
}

PreJJBimodule regular_bimodule(const Algebra &a) {
  return {a, a.dim(), left_mult_family(a), right_mult_family(a)};
}

CheckReport check_jj_rep(const JJRep &rep, std::size_t max_witnesses) {
  rep.validate();
  ReportBuilder rb("jj_rep", max_witnesses);
  if (!satisfies(rep.algebra, IdentityKind::jj))
    rb.warn("underlying algebra fails the jj check");
  const Algebra &j = rep.algebra;
  for (std::size_t x = 0; x < j.dim(); ++x)
    for (std::size_t y = 0; y < j.dim(); ++y) {
      LinearMap lhs = rep.at(j.basis_product(x, y));
      LinearMap defect = lhs + rep.rho[x] * rep.rho[y] + rep.rho[y] * rep.rho[x];
      rb.record({x, y}, flatten(defect), "rep");
    }
  return std::move(rb).finish();
}

Algebra jj_semidirect(const JJRep &rep) {
  CheckReport r = check_jj_rep(rep, 1);
  if (!r.passed)
    throw Error("jj_semidirect: rho is not a representation (first failure at basis pair (" +
                std::to_string(r.witnesses[0].indices[0]) + "," +
                std::to_string(r.witnesses[0].indices[1]) + "))");
  const Algebra &j = rep.algebra;
  std::size_t n = j.dim(), m = rep.module_dim;
  Algebra out(j.field(), n + m, module_labels(j, m));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t k = 0; k < n; ++k)
        out.set(x, y, k, j.c(x, y, k));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        out.set(x, n + a, n + b, rep.rho[x](b, a));
        out.set(n + a, x, n + b, rep.rho[x](b, a));
      }
  return out;
}

JJRep dual_rep(const JJRep &rep) {
  rep.validate();
  return {rep.algebra, rep.module_dim, transposed(rep.rho)};
}

CheckReport check_prejj_bimodule(const PreJJBimodule &bm, std::size_t max_witnesses) {
  bm.validate();
  ReportBuilder rb("prejj_bimodule", max_witnesses);
  if (!satisfies(bm.algebra, IdentityKind::left_pre_jj))
    rb.warn("underlying algebra fails the left pre-JJ check");
  const Algebra &a = bm.algebra;
  const auto &l = bm.l;
  const auto &r = bm.r;
  for (std::size_t x = 0; x < a.dim(); ++x)
    for (std::size_t y = 0; y < a.dim(); ++y) {
      Vector xy = a.basis_product(x, y), yx = a.basis_product(y, x);
      LinearMap d1 = combine(l, xy) + l[x] * l[y] + combine(l, yx) + l[y] * l[x];
      LinearMap d2 = r[y] * l[x] + l[x] * r[y] + r[y] * r[x] + combine(r, xy);
      LinearMap d3 = combine(r, xy) + r[y] * r[x] + r[y] * l[x] + l[x] * r[y];
      rb.record({x, y}, flatten(d1), "i");
      rb.record({x, y}, flatten(d2), "ii");
      rb.record({x, y}, flatten(d3), "iii");
    }
  return std::move(rb).finish();
}

CheckReport check_prejj_bimodule_displayed(const PreJJBimodule &bm, std::size_t max_witnesses) {
  bm.validate();
  ReportBuilder rb("prejj_bimodule_displayed", max_witnesses);
  const Algebra &a = bm.algebra;
  const auto &l = bm.l;
  const auto &r = bm.r;
  for (std::size_t x = 0; x < a.dim(); ++x)
    for (std::size_t y = 0; y < a.dim(); ++y) {
      LinearMap d0 = op_anticommutator(l[x], r[y]) + op_anticommutator(l[y], r[x]);
      LinearMap d1 = combine(l, a.basis_product(x, y)) + l[x] * l[y] +
                     combine(l, a.basis_product(y, x)) + l[y] * l[x];
      rb.record({x, y}, flatten(d0), "lr");
      rb.record({x, y}, flatten(d1), "i");
    }
  return std::move(rb).finish();
}

Algebra prejj_semidirect(const PreJJBimodule &bm) {
  bm.validate();
  const Algebra &a = bm.algebra;
  std::size_t n = a.dim(), m = bm.module_dim;
  Algebra out(a.field(), n + m, module_labels(a, m));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t k = 0; k < n; ++k)
        out.set(x, y, k, a.c(x, y, k));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t u = 0; u < m; ++u)
      for (std::size_t w = 0; w < m; ++w) {
        out.set(x, n + u, n + w, bm.l[x](w, u));
        out.set(n + u, x, n + w, bm.r[x](w, u));
      }
  return out;
}

JJRep sum_rep(const PreJJBimodule &bm) {
  CheckReport r = check_prejj_bimodule(bm, 1);
  if (!r.passed)
    throw Error("sum_rep: (l, r) is not a bimodule (condition " + r.witnesses[0].condition +
                " fails)");
  std::vector<LinearMap> rho;
  for (std::size_t i = 0; i < bm.algebra.dim(); ++i)
    rho.push_back(bm.l[i] + bm.r[i]);
  return {sub_adjacent(bm.algebra), bm.module_dim, std::move(rho)};
}

PreJJBimodule dual_bimodule(const PreJJBimodule &bm) {
  bm.validate();
  return {bm.algebra, bm.module_dim, transposed(bm.r), transposed(bm.l)};
}

} // namespace prejj
