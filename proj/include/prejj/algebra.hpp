#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "prejj/linear.hpp"
#include "prejj/scalar.hpp"

namespace prejj {

/// Coordinates of an algebra element in the algebra's basis.
using SemanticVector = Vector;

/// Finite-dimensional algebra given by structure constants
/// e_i * e_j = sum_k c(i,j,k) e_k, stored flat in (i,j,k) order.
class Algebra {
public:
  /// Zero product on an n-dimensional space with labels e1..en.
  Algebra(Field field, std::size_t dim);
  Algebra(Field field, std::size_t dim, std::vector<std::string> labels);
  /// Flat n^3 tensor in lexicographic (i,j,k) order.
  static Algebra from_constants(Field field, std::size_t dim, std::vector<Scalar> constants);
  static Algebra from_ints(Field field, std::size_t dim, const std::vector<std::int64_t> &constants);

  const Field &field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string> &labels() const { return labels_; }
  const std::string &label(std::size_t i) const { return labels_.at(i); }
  Algebra with_labels(std::vector<std::string> labels) const;

  const Scalar &c(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }
  void set(std::size_t i, std::size_t j, std::size_t k, Scalar value);
  /// Sets e_i * e_j to the given vector.
  void set_product(std::size_t i, std::size_t j, const Vector &value);
  Vector basis_product(std::size_t i, std::size_t j) const;
  Vector basis_vector(std::size_t i) const { return Vector::basis(field_, dim_, i); }

  const std::vector<Scalar> &constants() const { return c_; }
  bool is_zero() const;

  /// Compares field, dimension and structure constants; labels are ignored.
  bool operator==(const Algebra &o) const;

  /// Throws unless v has this algebra's field and dimension.
  void require_conformant(const Vector &v, const char *what) const;

private:
  Field field_;
  std::size_t dim_;
  std::vector<std::string> labels_;
  std::vector<Scalar> c_;
};

std::vector<std::string> default_labels(std::size_t n, std::string_view prefix = "e",
                                        std::string_view suffix = "");

enum class IdentityKind { antiassociative, left_pre_jj, right_pre_jj, jj, operad };

/// CLI spelling: antiassoc, left-prejj, right-prejj, jj, operad.
std::string to_string(IdentityKind kind);
/// Accepts the CLI spelling and the enumerator name.
IdentityKind parse_identity_kind(std::string_view text);
const std::vector<IdentityKind> &all_identity_kinds();

struct Witness {
  std::vector<std::size_t> indices;
  Vector defect;
  /// Which equation or sub-condition failed, e.g. "jacobi" or "eqq3".
  std::string condition;
};

struct CheckReport {
  std::string identity;
  bool passed = true;
  /// At most max_witnesses entries, ordered by (indices, condition).
  std::vector<Witness> witnesses;
  /// Total number of failing tuples, including those not retained.
  std::size_t violations = 0;
  std::vector<std::string> warnings;
};

inline constexpr std::size_t default_max_witnesses = 16;

/// Accumulates violations and keeps the lexicographically first ones.
class ReportBuilder {
public:
  explicit ReportBuilder(std::string identity, std::size_t max_witnesses = default_max_witnesses);

  /// Records the defect if nonzero; returns true when it was a violation.
  bool record(std::vector<std::size_t> indices, const Vector &defect, std::string condition);
  void warn(std::string message) { warnings_.push_back(std::move(message)); }
  /// Folds in another report; a nonempty tag prefixes its conditions as "tag:cond".
  void merge(const CheckReport &other, const std::string &tag = "");

  CheckReport finish() &&;

private:
  std::string identity_;
  std::size_t max_;
  std::vector<Witness> witnesses_;
  std::size_t violations_ = 0;
  std::vector<std::string> warnings_;
};

Vector product(const Algebra &a, const Vector &x, const Vector &y);
/// (xy)z + x(yz).
Vector antiassociator(const Algebra &a, const Vector &x, const Vector &y, const Vector &z);

CheckReport check_identity(const Algebra &a, IdentityKind kind,
                           std::size_t max_witnesses = default_max_witnesses);
bool satisfies(const Algebra &a, IdentityKind kind);

/// [x,y] = xy + yx, or (xy + yx)/2 when halved.
Algebra sub_adjacent(const Algebra &a, bool halved = false);

LinearMap left_mult(const Algebra &a, const Vector &x);
LinearMap right_mult(const Algebra &a, const Vector &x);
LinearMap ad(const Algebra &a, const Vector &x);
/// L_{e_i} for every basis element.
std::vector<LinearMap> left_mult_family(const Algebra &a);
std::vector<LinearMap> right_mult_family(const Algebra &a);

Algebra opposite(const Algebra &a);
/// Transports the product to the basis formed by the columns of p.
Algebra apply_basis_change(const Algebra &a, const LinearMap &p);
/// Block sum on the concatenated basis, a's basis first.
Algebra direct_sum(const Algebra &a, const Algebra &b);

} // namespace prejj
