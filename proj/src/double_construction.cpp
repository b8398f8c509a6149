#include "prejj/double_construction.hpp"

#include <set>

namespace prejj {

namespace {

void require_dual_pair(const Algebra &a, const Algebra &astar, const char *what) {
  if (a.dim() != astar.dim())
    throw Error(std::string(what) + ": dimensions differ (" + std::to_string(a.dim()) + " vs " +
                std::to_string(astar.dim()) + ")");
  if (a.field() != astar.field())
    throw FieldMismatch(std::string(what) + ": algebras over different fields");
}

// Dual-side labels: the given ones if disjoint from a's, else a's with "*".
Algebra dual_labelled(const Algebra &a, const Algebra &astar) {
  std::set<std::string> mine(a.labels().begin(), a.labels().end());
  for (const auto &l : astar.labels())
    if (mine.count(l)) {
      std::vector<std::string> starred;
      for (const auto &base : a.labels())
        starred.push_back(base + "*");
      return astar.with_labels(starred);
    }
  return astar;
}

std::vector<std::string> failures_of(const std::vector<std::pair<std::string, bool>> &checks) {
  std::vector<std::string> out;
  for (const auto &[name, ok] : checks)
    if (!ok)
      out.push_back(name);
  return out;
}

void apply_mode(std::vector<std::string> failures, PreconditionMode mode, DoubleConstruction &d,
                const char *what) {
  if (failures.empty())
    return;
  if (mode == PreconditionMode::enforce) {
    std::string msg = std::string(what) + ": ";
    for (std::size_t i = 0; i < failures.size(); ++i)
      msg += (i ? ", " : "") + failures[i];
    throw PreconditionError(msg, failures);
  }
  d.precondition_failures = std::move(failures);
}

} // namespace

Scalar BilinearForm::operator()(const Vector &u, const Vector &v) const {
  Vector mv = matrix.apply(v);
  Scalar s = Scalar::zero(matrix.field());
  for (std::size_t i = 0; i < u.size(); ++i)
    if (!u[i].is_zero())
      s += u[i] * mv[i];
  return s;
}

BilinearForm canonical_form(std::size_t n, Field field) {
  if (n == 0)
    throw Error("canonical_form needs n >= 1");
  LinearMap m(field, 2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, n + i) = Scalar::one(field);
    m(n + i, i) = Scalar::one(field);
  }
  return {m};
}

std::string to_string(DoubleKind kind) { return kind == DoubleKind::jj ? "jj" : "pre_jj"; }

PreJJMatchedPair dual_structure_maps(const Algebra &a, const Algebra &astar) {
  require_dual_pair(a, astar, "dual_structure_maps");
  return {a, astar, transposed(right_mult_family(a)), transposed(left_mult_family(a)),
          transposed(right_mult_family(astar)), transposed(left_mult_family(astar))};
}

JJMatchedPair jj_dual_structure_maps(const Algebra &j, const Algebra &jstar) {
  require_dual_pair(j, jstar, "jj_dual_structure_maps");
  return {j, jstar, transposed(left_mult_family(j)), transposed(left_mult_family(jstar))};
}

DoubleConstruction build_prejj_double(const Algebra &a, const Algebra &astar, PreconditionMode mode) {
  require_dual_pair(a, astar, "build_prejj_double");
  Algebra dual = dual_labelled(a, astar);
  DoubleConstruction d{prejj_bicross_product(dual_structure_maps(a, dual)),
                       canonical_form(a.dim(), a.field()), a, dual, DoubleKind::pre_jj, {}};
  apply_mode(failures_of({{"A fails left_pre_jj", satisfies(a, IdentityKind::left_pre_jj)},
                          {"A* fails left_pre_jj", satisfies(astar, IdentityKind::left_pre_jj)}}),
             mode, d, "build_prejj_double");
  return d;
}

DoubleConstruction build_jj_double(const Algebra &j, const Algebra &jstar, PreconditionMode mode) {
  require_dual_pair(j, jstar, "build_jj_double");
  Algebra dual = dual_labelled(j, jstar);
  DoubleConstruction d{jj_bicross_product(jj_dual_structure_maps(j, dual)),
                       canonical_form(j.dim(), j.field()), j, dual, DoubleKind::jj, {}};
  apply_mode(failures_of({{"J fails jj", satisfies(j, IdentityKind::jj)},
                          {"J* fails jj", satisfies(jstar, IdentityKind::jj)}}),
             mode, d, "build_jj_double");
  return d;
}

CheckReport check_invariance(const DoubleConstruction &d, std::size_t max_witnesses) {
  ReportBuilder rb("invariance", max_witnesses);
  const Algebra &amb = d.ambient;
  std::size_t n = amb.dim();
  if (d.form.dim() != n)
    throw Error("check_invariance: form and ambient dimensions differ");
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t w = 0; w < n; ++w) {
        Scalar lhs = d.form(amb.basis_product(u, v), amb.basis_vector(w));
        Scalar rhs = d.form(amb.basis_vector(u), amb.basis_product(v, w));
        rb.record({u, v, w}, Vector(amb.field(), std::vector<Scalar>{lhs - rhs}), "invariance");
      }
  return std::move(rb).finish();
}

JJMatchedPair neg_ad_dual_pair(const Algebra &a, const Algebra &astar) {
  require_dual_pair(a, astar, "neg_ad_dual_pair");
  JJMatchedPair mp{sub_adjacent(a), sub_adjacent(astar), {}, {}};
  for (std::size_t i = 0; i < a.dim(); ++i)
    mp.rho.push_back(-ad(a, a.basis_vector(i)).transpose());
  for (std::size_t u = 0; u < astar.dim(); ++u)
    mp.mu.push_back(-ad(astar, astar.basis_vector(u)).transpose());
  return mp;
}

DoubleEquivalence double_equivalence(const Algebra &a, const Algebra &astar) {
  PreJJMatchedPair mp = dual_structure_maps(a, astar);
  return {satisfies(prejj_bicross_product(mp), IdentityKind::left_pre_jj),
          evaluate_prejj_matched_pair(mp, EquationSet::derived, 1).passed,
          evaluate_jj_matched_pair(neg_ad_dual_pair(a, astar), 1).passed};
}

std::string render_sum(const Algebra &a, const std::vector<std::size_t> &terms) {
  std::string s;
  for (auto t : terms)
    s += (s.empty() ? "" : "+") + a.label(t);
  return terms.size() > 1 ? "(" + s + ")" : s;
}

std::string render_vector(const Algebra &a, const Vector &v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero())
      continue;
    std::string coeff = v[k] == Scalar::one(v.field()) ? ""
                        : v[k].is_rational()            ? v[k].to_string()
                                                        : std::to_string(v[k].as_prime().value());
    if (coeff.find(' ') != std::string::npos || coeff.find('/') != std::string::npos)
      coeff = "(" + coeff + ")";
    s += (s.empty() ? "" : " + ") + coeff + a.label(k);
  }
  return s.empty() ? "0" : s;
}

std::vector<ConformanceEntry> conformance_diff(const Algebra &ambient,
                                               const std::vector<TableEntry> &table) {
  std::vector<ConformanceEntry> out;
  for (const auto &e : table) {
    Vector u(ambient.field(), ambient.dim()), v(ambient.field(), ambient.dim());
    for (auto i : e.left)
      u += ambient.basis_vector(i);
    for (auto i : e.right)
      v += ambient.basis_vector(i);
    ambient.require_conformant(e.expected, "conformance_diff");
    Vector got = product(ambient, u, v);
    out.push_back({render_sum(ambient, e.left) + "*" + render_sum(ambient, e.right), got, e.expected,
                   got == e.expected});
  }
  return out;
}

} // namespace prejj
