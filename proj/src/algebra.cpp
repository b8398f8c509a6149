#include "prejj/algebra.hpp"

#include <algorithm>
#include <set>

namespace prejj {

std::vector<std::string> default_labels(std::size_t n, std::string_view prefix, std::string_view suffix) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(std::string(prefix) + std::to_string(i + 1) + std::string(suffix));
  return out;
}

// ------------------------------------------------------------------ Algebra

Algebra::Algebra(Field field, std::size_t dim) : Algebra(field, dim, default_labels(dim)) {}

Algebra::Algebra(Field field, std::size_t dim, std::vector<std::string> labels)
    : field_(field), dim_(dim), labels_(std::move(labels)),
      c_(dim * dim * dim, Scalar::zero(field)) {
  if (dim == 0)
    throw Error("algebra dimension must be positive");
  if (labels_.size() != dim)
    throw Error("expected " + std::to_string(dim) + " basis labels, got " +
                std::to_string(labels_.size()));
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (seen.size() != labels_.size())
    throw Error("basis labels must be pairwise distinct");
}

Algebra Algebra::from_constants(Field field, std::size_t dim, std::vector<Scalar> constants) {
  Algebra a(field, dim);
  if (constants.size() != dim * dim * dim)
    throw Error("expected " + std::to_string(dim * dim * dim) + " structure constants, got " +
                std::to_string(constants.size()));
  for (const auto &s : constants)
    if (s.field() != field)
      throw FieldMismatch("structure constant " + s.to_string() + " is not in " + field.to_string());
  a.c_ = std::move(constants);
  return a;
}

Algebra Algebra::from_ints(Field field, std::size_t dim, const std::vector<std::int64_t> &constants) {
  std::vector<Scalar> out;
  out.reserve(constants.size());
  for (auto v : constants)
    out.push_back(Scalar::from_int(v, field));
  return from_constants(field, dim, std::move(out));
}

Algebra Algebra::with_labels(std::vector<std::string> labels) const {
  Algebra out(field_, dim_, std::move(labels));
  out.c_ = c_;
  return out;
}

void Algebra::set(std::size_t i, std::size_t j, std::size_t k, Scalar value) {
  if (i >= dim_ || j >= dim_ || k >= dim_)
    throw Error("structure constant index out of range");
  if (value.field() != field_)
    throw FieldMismatch("structure constant " + value.to_string() + " is not in " + field_.to_string());
  c_[(i * dim_ + j) * dim_ + k] = std::move(value);
}

void Algebra::set_product(std::size_t i, std::size_t j, const Vector &value) {
  require_conformant(value, "set_product");
  for (std::size_t k = 0; k < dim_; ++k)
    set(i, j, k, value[k]);
}

Vector Algebra::basis_product(std::size_t i, std::size_t j) const {
  if (i >= dim_ || j >= dim_)
    throw Error("basis index out of range");
  return Vector(field_, std::vector<Scalar>(c_.begin() + (i * dim_ + j) * dim_,
                                            c_.begin() + (i * dim_ + j + 1) * dim_));
}

bool Algebra::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Scalar &s) { return s.is_zero(); });
}

bool Algebra::operator==(const Algebra &o) const {
  return field_ == o.field_ && dim_ == o.dim_ && c_ == o.c_;
}

void Algebra::require_conformant(const Vector &v, const char *what) const {
  if (v.field() != field_)
    throw FieldMismatch(std::string(what) + ": vector over " + v.field().to_string() +
                        ", algebra over " + field_.to_string());
  if (v.size() != dim_)
    throw Error(std::string(what) + ": vector of length " + std::to_string(v.size()) +
                " for an algebra of dimension " + std::to_string(dim_));
}

// ------------------------------------------------------------ identity kinds

std::string to_string(IdentityKind kind) {
  switch (kind) {
  case IdentityKind::antiassociative: return "antiassoc";
  case IdentityKind::left_pre_jj: return "left-prejj";
  case IdentityKind::right_pre_jj: return "right-prejj";
  case IdentityKind::jj: return "jj";
  case IdentityKind::operad: return "operad";
  }
  throw Error("unknown identity kind");
}

IdentityKind parse_identity_kind(std::string_view text) {
  if (text == "antiassoc" || text == "antiassociative")
    return IdentityKind::antiassociative;
  if (text == "left-prejj" || text == "left_pre_jj" || text == "prejj")
    return IdentityKind::left_pre_jj;
  if (text == "right-prejj" || text == "right_pre_jj")
    return IdentityKind::right_pre_jj;
  if (text == "jj")
    return IdentityKind::jj;
  if (text == "operad")
    return IdentityKind::operad;
  throw Error("unknown identity kind '" + std::string(text) +
              "' (expected antiassoc, left-prejj, right-prejj, jj or operad)");
}

const std::vector<IdentityKind> &all_identity_kinds() {
  static const std::vector<IdentityKind> kinds = {
      IdentityKind::antiassociative, IdentityKind::left_pre_jj, IdentityKind::right_pre_jj,
      IdentityKind::jj, IdentityKind::operad};
  return kinds;
}

// ------------------------------------------------------------ ReportBuilder

ReportBuilder::ReportBuilder(std::string identity, std::size_t max_witnesses)
    : identity_(std::move(identity)), max_(max_witnesses) {}

namespace {

bool witness_less(const Witness &a, const Witness &b) {
  if (a.indices != b.indices)
    return a.indices < b.indices;
  return a.condition < b.condition;
}

} // namespace

bool ReportBuilder::record(std::vector<std::size_t> indices, const Vector &defect, std::string condition) {
  if (defect.is_zero())
    return false;
  ++violations_;
  Witness w{std::move(indices), defect, std::move(condition)};
  auto pos = std::upper_bound(witnesses_.begin(), witnesses_.end(), w, witness_less);
  if (static_cast<std::size_t>(pos - witnesses_.begin()) >= max_)
    return true;
  witnesses_.insert(pos, std::move(w));
  if (witnesses_.size() > max_)
    witnesses_.pop_back();
  return true;
}

void ReportBuilder::merge(const CheckReport &other, const std::string &tag) {
  for (Witness w : other.witnesses) {
    if (!tag.empty())
      w.condition = tag + ":" + w.condition;
    auto pos = std::upper_bound(witnesses_.begin(), witnesses_.end(), w, witness_less);
    if (static_cast<std::size_t>(pos - witnesses_.begin()) < max_) {
      witnesses_.insert(pos, w);
      if (witnesses_.size() > max_)
        witnesses_.pop_back();
    }
  }
  violations_ += other.violations;
  for (const auto &m : other.warnings)
    warnings_.push_back(m);
}

CheckReport ReportBuilder::finish() && {
  CheckReport r;
  r.identity = std::move(identity_);
  r.violations = violations_;
  r.passed = violations_ == 0;
  r.witnesses = std::move(witnesses_);
  r.warnings = std::move(warnings_);
  return r;
}

// --------------------------------------------------------------- operations

Vector product(const Algebra &a, const Vector &x, const Vector &y) {
  a.require_conformant(x, "product");
  a.require_conformant(y, "product");
  std::size_t n = a.dim();
  Vector out(a.field(), n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero())
      continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero())
        continue;
      Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k)
        if (!a.c(i, j, k).is_zero())
          out[k] += xy * a.c(i, j, k);
    }
  }
  return out;
}

Vector antiassociator(const Algebra &a, const Vector &x, const Vector &y, const Vector &z) {
  return product(a, product(a, x, y), z) + product(a, x, product(a, y, z));
}

namespace {

// Flat n^4 tensors of the two compositions mu(mu x id) and mu(id x mu),
// indexed (i,j,k,m): coefficient of e_m in (e_i e_j) e_k, resp. e_i (e_j e_k).
struct Compositions {
  std::size_t n;
  std::vector<Scalar> left, right;
  Vector at(const std::vector<Scalar> &t, std::size_t i, std::size_t j, std::size_t k,
            const Field &f) const {
    std::size_t base = ((i * n + j) * n + k) * n;
    return Vector(f, std::vector<Scalar>(t.begin() + base, t.begin() + base + n));
  }
};

Compositions compose(const Algebra &a) {
  std::size_t n = a.dim();
  Compositions t{n, std::vector<Scalar>(n * n * n * n, Scalar::zero(a.field())),
                 std::vector<Scalar>(n * n * n * n, Scalar::zero(a.field()))};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t p = 0; p < n; ++p)
          for (std::size_t m = 0; m < n; ++m) {
            std::size_t idx = ((i * n + j) * n + k) * n + m;
            if (!a.c(i, j, p).is_zero() && !a.c(p, k, m).is_zero())
              t.left[idx] += a.c(i, j, p) * a.c(p, k, m);
            if (!a.c(j, k, p).is_zero() && !a.c(i, p, m).is_zero())
              t.right[idx] += a.c(j, k, p) * a.c(i, p, m);
          }
  return t;
}

} // namespace

CheckReport check_identity(const Algebra &a, IdentityKind kind, std::size_t max_witnesses) {
  ReportBuilder rb(to_string(kind), max_witnesses);
  if (a.field().outside_paper_hypotheses())
    rb.warn("characteristic " + std::to_string(a.field().characteristic()) +
            " is outside the paper's hypotheses (char != 2,3)");
  std::size_t n = a.dim();
  auto e = [&](std::size_t i) { return a.basis_vector(i); };

  switch (kind) {
  case IdentityKind::antiassociative:
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          rb.record({i, j, k}, antiassociator(a, e(i), e(j), e(k)), "antiassociative");
    break;
  case IdentityKind::left_pre_jj:
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          rb.record({i, j, k},
                    antiassociator(a, e(i), e(j), e(k)) + antiassociator(a, e(j), e(i), e(k)),
                    "left_pre_jj");
    break;
  case IdentityKind::right_pre_jj:
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          rb.record({i, j, k},
                    antiassociator(a, e(i), e(j), e(k)) + antiassociator(a, e(i), e(k), e(j)),
                    "right_pre_jj");
    break;
  case IdentityKind::jj:
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        rb.record({i, j}, a.basis_product(i, j) - a.basis_product(j, i), "commutativity");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          Vector jac = product(a, a.basis_product(i, j), e(k)) +
                       product(a, a.basis_product(k, i), e(j)) +
                       product(a, a.basis_product(j, k), e(i));
          rb.record({i, j, k}, jac, "jacobi");
        }
    break;
  case IdentityKind::operad: {
    // Expanded form (xy)z + x(yz) + (yx)z + y(xz) = 0, evaluated on the
    // composed tensors rather than through antiassociator().
    Compositions t = compose(a);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          Vector d = t.at(t.left, i, j, k, a.field()) + t.at(t.right, i, j, k, a.field()) +
                     t.at(t.left, j, i, k, a.field()) + t.at(t.right, j, i, k, a.field());
          rb.record({i, j, k}, d, "operad");
        }
    break;
  }
  }
  return std::move(rb).finish();
}

bool satisfies(const Algebra &a, IdentityKind kind) { return check_identity(a, kind, 1).passed; }

Algebra sub_adjacent(const Algebra &a, bool halved) {
  if (halved && a.field().characteristic() == 2)
    throw Error("halved sub-adjacent product needs characteristic != 2");
  Scalar s = halved ? Scalar::from_int(2, a.field()).inverse() : Scalar::one(a.field());
  std::size_t n = a.dim();
  Algebra out(a.field(), n, a.labels());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        out.set(i, j, k, s * (a.c(i, j, k) + a.c(j, i, k)));
  return out;
}

LinearMap left_mult(const Algebra &a, const Vector &x) {
  a.require_conformant(x, "left_mult");
  std::size_t n = a.dim();
  LinearMap m(a.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero())
      continue;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!a.c(i, j, k).is_zero())
          m(k, j) += x[i] * a.c(i, j, k);
  }
  return m;
}

LinearMap right_mult(const Algebra &a, const Vector &x) {
  a.require_conformant(x, "right_mult");
  std::size_t n = a.dim();
  LinearMap m(a.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero())
      continue;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!a.c(j, i, k).is_zero())
          m(k, j) += x[i] * a.c(j, i, k);
  }
  return m;
}

LinearMap ad(const Algebra &a, const Vector &x) { return left_mult(a, x) + right_mult(a, x); }

std::vector<LinearMap> left_mult_family(const Algebra &a) {
  std::vector<LinearMap> out;
  for (std::size_t i = 0; i < a.dim(); ++i)
    out.push_back(left_mult(a, a.basis_vector(i)));
  return out;
}

std::vector<LinearMap> right_mult_family(const Algebra &a) {
  std::vector<LinearMap> out;
  for (std::size_t i = 0; i < a.dim(); ++i)
    out.push_back(right_mult(a, a.basis_vector(i)));
  return out;
}

Algebra opposite(const Algebra &a) {
  std::size_t n = a.dim();
  Algebra out(a.field(), n, a.labels());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        out.set(i, j, k, a.c(j, i, k));
  return out;
}

Algebra apply_basis_change(const Algebra &a, const LinearMap &p) {
  std::size_t n = a.dim();
  if (p.field() != a.field())
    throw FieldMismatch("basis change over a different field");
  if (p.rows() != n || p.cols() != n)
    throw Error("basis change must be " + std::to_string(n) + "x" + std::to_string(n));
  auto inv = p.inverse();
  if (!inv)
    throw Error("basis change matrix is singular");
  Algebra out(a.field(), n, a.labels());
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      // f_s f_t in the old basis.
      Vector old(a.field(), n);
      for (std::size_t i = 0; i < n; ++i) {
        if (p(i, s).is_zero())
          continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (p(j, t).is_zero())
            continue;
          Scalar w = p(i, s) * p(j, t);
          for (std::size_t k = 0; k < n; ++k)
            if (!a.c(i, j, k).is_zero())
              old[k] += w * a.c(i, j, k);
        }
      }
      out.set_product(s, t, inv->apply(old));
    }
  return out;
}

Algebra direct_sum(const Algebra &a, const Algebra &b) {
  if (a.field() != b.field())
    throw FieldMismatch("direct sum of algebras over " + a.field().to_string() + " and " +
                        b.field().to_string());
  std::size_t n = a.dim(), m = b.dim(), d = n + m;
  std::vector<std::string> labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  if (std::set<std::string>(labels.begin(), labels.end()).size() != d)
    labels = default_labels(d);
  Algebra out(a.field(), d, labels);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        out.set(i, j, k, a.c(i, j, k));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        out.set(n + i, n + j, n + k, b.c(i, j, k));
  return out;
}

} // namespace prejj
