#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "prejj/scalar.hpp"

namespace prejj {

/// Coordinate vector over a single field.
class Vector {
public:
  Vector(Field field, std::size_t size);
  Vector(Field field, std::vector<Scalar> coords);

  static Vector basis(Field field, std::size_t size, std::size_t index);
  /// Builds a vector from integer coordinates.
  static Vector of(Field field, std::initializer_list<std::int64_t> coords);

  const Field &field() const { return field_; }
  std::size_t size() const { return coords_.size(); }
  const Scalar &operator[](std::size_t i) const { return coords_[i]; }
  Scalar &operator[](std::size_t i) { return coords_[i]; }
  std::span<const Scalar> coords() const { return coords_; }

  bool is_zero() const;

  Vector operator+(const Vector &o) const;
  Vector operator-(const Vector &o) const;
  Vector operator-() const;
  Vector &operator+=(const Vector &o);
  Vector scaled(const Scalar &s) const;

  bool operator==(const Vector &o) const;

  /// Concatenation, used for carriers of direct sums.
  Vector concat(const Vector &o) const;
  Vector slice(std::size_t offset, std::size_t count) const;

private:
  void require_conformant(const Vector &o) const;

  Field field_;
  std::vector<Scalar> coords_;
};

/// Dense rows x cols matrix acting on column coordinate vectors.
class LinearMap {
public:
  LinearMap(Field field, std::size_t rows, std::size_t cols);

  static LinearMap identity(Field field, std::size_t n);
  static LinearMap zero(Field field, std::size_t rows, std::size_t cols) {
    return LinearMap(field, rows, cols);
  }
  /// Row-major integer entries.
  static LinearMap of(Field field, std::size_t rows, std::size_t cols,
                      std::initializer_list<std::int64_t> entries);
  static LinearMap diagonal(const std::vector<Scalar> &diag);
  /// Matrix whose columns are the given vectors.
  static LinearMap from_columns(Field field, std::size_t rows, const std::vector<Vector> &columns);

  const Field &field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Scalar &operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Scalar &operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  Vector apply(const Vector &v) const;

  LinearMap operator+(const LinearMap &o) const;
  LinearMap operator-(const LinearMap &o) const;
  LinearMap operator-() const;
  LinearMap operator*(const LinearMap &o) const;
  LinearMap &operator+=(const LinearMap &o);
  LinearMap scaled(const Scalar &s) const;
  LinearMap transpose() const;

  bool is_zero() const;
  bool operator==(const LinearMap &o) const;

  Scalar determinant() const;
  /// Nullopt when singular.
  std::optional<LinearMap> inverse() const;

private:
  void require_same_shape(const LinearMap &o, const char *what) const;

  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
};

/// PQ + QP. The operator bracket [P,Q] of the JJ theory is this
/// anticommutator; no commutator is offered under that name.
LinearMap op_anticommutator(const LinearMap &p, const LinearMap &q);

/// Linear extension of a basis-indexed family: sum_i coeffs[i] * family[i].
LinearMap combine(std::span<const LinearMap> family, const Vector &coeffs);

/// Transpose of every member; the dual family on the coordinate dual space.
std::vector<LinearMap> transposed(std::span<const LinearMap> family);

} // namespace prejj
