#include "prejj/matched_pairs.hpp"

#include <set>

namespace prejj {

namespace {

void validate_maps(const std::vector<LinearMap> &family, const Algebra &index, std::size_t carrier,
                   const char *name) {
  if (family.size() != index.dim())
    throw Error(std::string(name) + ": expected " + std::to_string(index.dim()) + " maps, got " +
                std::to_string(family.size()));
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (family[i].field() != index.field())
      throw FieldMismatch(std::string(name) + "[" + std::to_string(i) + "] is over the wrong field");
    if (family[i].rows() != carrier || family[i].cols() != carrier)
      throw Error(std::string(name) + "[" + std::to_string(i) + "] must be " +
                  std::to_string(carrier) + "x" + std::to_string(carrier));
  }
}

std::vector<std::string> joint_labels(const Algebra &a, const Algebra &b) {
  auto labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  if (std::set<std::string>(labels.begin(), labels.end()).size() != labels.size())
    return default_labels(labels.size());
  return labels;
}

void copy_block(Algebra &out, const Algebra &src, std::size_t offset) {
  std::size_t n = src.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        out.set(offset + i, offset + j, offset + k, src.c(i, j, k));
}

std::vector<std::string> failing(const std::vector<std::pair<std::string, CheckReport>> &checks) {
  std::vector<std::string> out;
  for (const auto &[name, report] : checks)
    if (!report.passed)
      out.push_back(name);
  return out;
}

std::string join(const std::vector<std::string> &items) {
  std::string s;
  for (const auto &it : items)
    s += (s.empty() ? "" : ", ") + it;
  return s;
}

// ---------------------------------------------------------------- JJ pairs

std::vector<std::pair<std::string, CheckReport>> jj_preconditions(const JJMatchedPair &mp) {
  return {{"G fails jj", check_identity(mp.G, IdentityKind::jj, 1)},
          {"H fails jj", check_identity(mp.H, IdentityKind::jj, 1)},
          {"rho is not a representation of G", check_jj_rep(mp.rho_rep(), 1)},
          {"mu is not a representation of H", check_jj_rep(mp.mu_rep(), 1)}};
}

void jj_equations(const JJMatchedPair &mp, ReportBuilder &rb) {
  const Algebra &g = mp.G, &h = mp.H;
  std::size_t n = g.dim(), m = h.dim();
  // eqt1 on (x; a, b)
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        Vector ea = h.basis_vector(a), eb = h.basis_vector(b);
        Vector d = mp.rho[x].apply(h.basis_product(a, b)) + product(h, mp.rho[x].column(a), eb) +
                   product(h, ea, mp.rho[x].column(b)) +
                   combine(mp.rho, mp.mu[a].column(x)).column(b) +
                   combine(mp.rho, mp.mu[b].column(x)).column(a);
        rb.record({x, a, b}, d, "eqt1");
      }
  // eqt2 on (a; x, y)
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        Vector ex = g.basis_vector(x), ey = g.basis_vector(y);
        Vector d = mp.mu[a].apply(g.basis_product(x, y)) + product(g, mp.mu[a].column(x), ey) +
                   product(g, ex, mp.mu[a].column(y)) +
                   combine(mp.mu, mp.rho[x].column(a)).column(y) +
                   combine(mp.mu, mp.rho[y].column(a)).column(x);
        rb.record({a, x, y}, d, "eqt2");
      }
}

// ------------------------------------------------------------ pre-JJ pairs

std::vector<std::pair<std::string, CheckReport>> prejj_preconditions(const PreJJMatchedPair &mp) {
  return {{"A fails left_pre_jj", check_identity(mp.A, IdentityKind::left_pre_jj, 1)},
          {"B fails left_pre_jj", check_identity(mp.B, IdentityKind::left_pre_jj, 1)},
          {"(lA, rA) is not a bimodule of A", check_prejj_bimodule(mp.a_side(), 1)},
          {"(lB, rB) is not a bimodule of B", check_prejj_bimodule(mp.b_side(), 1)}};
}

void prejj_equations(const PreJJMatchedPair &mp, EquationSet set, ReportBuilder &rb) {
  const Algebra &A = mp.A, &B = mp.B;
  std::size_t n = A.dim(), m = B.dim();
  bool printed = set == EquationSet::printed;
  auto lA = [&](const Vector &x) { return combine(mp.lA, x); };
  auto rA = [&](const Vector &x) { return combine(mp.rA, x); };
  auto lB = [&](const Vector &a) { return combine(mp.lB, a); };
  auto rB = [&](const Vector &a) { return combine(mp.rB, a); };
  auto pa = [&](const Vector &x, const Vector &y) { return product(A, x, y); };
  auto pb = [&](const Vector &a, const Vector &b) { return product(B, a, b); };

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t u = 0; u < m; ++u)
      for (std::size_t w = 0; w < m; ++w) {
        Vector x = A.basis_vector(i), a = B.basis_vector(u), b = B.basis_vector(w);
        Vector ab = pb(a, b);
        Vector bracket = ab + pb(b, a);
        // eqq1
        Vector rest1 = rA(lB(b).apply(x)).apply(a) + rA(lB(a).apply(x)).apply(b) +
                       pb(a, rA(x).apply(b)) + pb(b, rA(x).apply(a));
        Vector d1 = printed ? rA(x).apply(bracket) - rest1 : rA(x).apply(bracket) + rest1;
        rb.record({i, u, w}, d1, "eqq1");
        // eqq2
        Vector d2 = lA(x).apply(ab) + lA(lB(a).apply(x) + rB(a).apply(x)).apply(b) +
                    pb(lA(x).apply(a) + rA(x).apply(a), b) + rA(rB(b).apply(x)).apply(a) +
                    pb(a, lA(x).apply(b));
        rb.record({i, u, w}, d2, "eqq2");
      }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t u = 0; u < m; ++u) {
        Vector x = A.basis_vector(i), y = A.basis_vector(j), a = B.basis_vector(u);
        Vector xy = pa(x, y);
        Vector bracket = xy + pa(y, x);
        // eqq3
        Vector rest3 = rB(lA(y).apply(a)).apply(x) + rB(lA(x).apply(a)).apply(y) +
                       pa(x, rB(a).apply(y)) + pa(y, rB(a).apply(x));
        Vector d3 = printed ? rB(a).apply(bracket) - rest3 : rB(a).apply(bracket) + rest3;
        rb.record({i, j, u}, d3, "eqq3");
        // eqq4
        Vector rest4 = lB(lA(x).apply(a)).apply(y) + pa(rB(a).apply(x), y) + pa(x, lB(a).apply(y)) +
                       rB(rA(y).apply(a)).apply(x) + pa(lB(a).apply(x), y) +
                       lB(rA(x).apply(a)).apply(y);
        Vector d4 = lB(a).apply(xy) + rest4;
        if (printed)
          d4 += lB(a).apply(xy);
        rb.record({i, j, u}, d4, "eqq4");
      }
}

} // namespace

void JJMatchedPair::validate() const {
  if (G.field() != H.field())
    throw FieldMismatch("matched pair over two different fields");
  validate_maps(rho, G, H.dim(), "rho");
  validate_maps(mu, H, G.dim(), "mu");
}

void PreJJMatchedPair::validate() const {
  if (A.field() != B.field())
    throw FieldMismatch("matched pair over two different fields");
  validate_maps(lA, A, B.dim(), "lA");
  validate_maps(rA, A, B.dim(), "rA");
  validate_maps(lB, B, A.dim(), "lB");
  validate_maps(rB, B, A.dim(), "rB");
}

CheckReport evaluate_jj_matched_pair(const JJMatchedPair &mp, std::size_t max_witnesses) {
  mp.validate();
  ReportBuilder rb("jj_matched_pair", max_witnesses);
  rb.merge(check_identity(mp.G, IdentityKind::jj, max_witnesses), "G");
  rb.merge(check_identity(mp.H, IdentityKind::jj, max_witnesses), "H");
  rb.merge(check_jj_rep(mp.rho_rep(), max_witnesses), "rho");
  rb.merge(check_jj_rep(mp.mu_rep(), max_witnesses), "mu");
  jj_equations(mp, rb);
  return std::move(rb).finish();
}

CheckReport check_jj_matched_pair(const JJMatchedPair &mp, std::size_t max_witnesses) {
  mp.validate();
  auto failures = failing(jj_preconditions(mp));
  if (!failures.empty())
    throw PreconditionError("JJ matched pair preconditions fail: " + join(failures), failures);
  ReportBuilder rb("jj_matched_pair", max_witnesses);
  jj_equations(mp, rb);
  return std::move(rb).finish();
}

CheckReport evaluate_prejj_matched_pair(const PreJJMatchedPair &mp, EquationSet set,
                                        std::size_t max_witnesses) {
  mp.validate();
  ReportBuilder rb("prejj_matched_pair", max_witnesses);
  rb.merge(check_identity(mp.A, IdentityKind::left_pre_jj, max_witnesses), "A");
  rb.merge(check_identity(mp.B, IdentityKind::left_pre_jj, max_witnesses), "B");
  rb.merge(check_prejj_bimodule(mp.a_side(), max_witnesses), "A-bimodule");
  rb.merge(check_prejj_bimodule(mp.b_side(), max_witnesses), "B-bimodule");
  prejj_equations(mp, set, rb);
  return std::move(rb).finish();
}

CheckReport check_prejj_matched_pair(const PreJJMatchedPair &mp, EquationSet set,
                                     std::size_t max_witnesses) {
  mp.validate();
  auto failures = failing(prejj_preconditions(mp));
  if (!failures.empty())
    throw PreconditionError("pre-JJ matched pair preconditions fail: " + join(failures), failures);
  ReportBuilder rb("prejj_matched_pair", max_witnesses);
  prejj_equations(mp, set, rb);
  return std::move(rb).finish();
}

Algebra jj_bicross_product(const JJMatchedPair &mp) {
  mp.validate();
  std::size_t n = mp.G.dim(), m = mp.H.dim();
  Algebra out(mp.G.field(), n + m, joint_labels(mp.G, mp.H));
  copy_block(out, mp.G, 0);
  copy_block(out, mp.H, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t k = 0; k < n; ++k) {
        out.set(x, n + a, k, mp.mu[a](k, x));
        out.set(n + a, x, k, mp.mu[a](k, x));
      }
      for (std::size_t w = 0; w < m; ++w) {
        out.set(x, n + a, n + w, mp.rho[x](w, a));
        out.set(n + a, x, n + w, mp.rho[x](w, a));
      }
    }
  return out;
}

Algebra prejj_bicross_product(const PreJJMatchedPair &mp) {
  mp.validate();
  std::size_t n = mp.A.dim(), m = mp.B.dim();
  Algebra out(mp.A.field(), n + m, joint_labels(mp.A, mp.B));
  copy_block(out, mp.A, 0);
  copy_block(out, mp.B, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t k = 0; k < n; ++k) {
        out.set(x, n + a, k, mp.rB[a](k, x));
        out.set(n + a, x, k, mp.lB[a](k, x));
      }
      for (std::size_t w = 0; w < m; ++w) {
        out.set(x, n + a, n + w, mp.lA[x](w, a));
        out.set(n + a, x, n + w, mp.rA[x](w, a));
      }
    }
  return out;
}

JJMatchedPair subadjacent_matched_pair(const PreJJMatchedPair &mp) {
  CheckReport r = check_prejj_matched_pair(mp, EquationSet::derived, 1);
  if (!r.passed)
    throw Error("subadjacent_matched_pair: " + r.witnesses[0].condition + " fails");
  JJMatchedPair out{sub_adjacent(mp.A), sub_adjacent(mp.B), {}, {}};
  for (std::size_t i = 0; i < mp.A.dim(); ++i)
    out.rho.push_back(mp.lA[i] + mp.rA[i]);
  for (std::size_t u = 0; u < mp.B.dim(); ++u)
    out.mu.push_back(mp.lB[u] + mp.rB[u]);
  return out;
}

JJMatchedPair zero_jj_matched_pair(const Algebra &g, const Algebra &h) {
  return {g, h, std::vector<LinearMap>(g.dim(), LinearMap::zero(g.field(), h.dim(), h.dim())),
          std::vector<LinearMap>(h.dim(), LinearMap::zero(g.field(), g.dim(), g.dim()))};
}

PreJJMatchedPair zero_prejj_matched_pair(const Algebra &a, const Algebra &b) {
  std::vector<LinearMap> za(a.dim(), LinearMap::zero(a.field(), b.dim(), b.dim()));
  std::vector<LinearMap> zb(b.dim(), LinearMap::zero(a.field(), a.dim(), a.dim()));
  return {a, b, za, za, zb, zb};
}

} // namespace prejj
