#include "prejj/linear.hpp"

#include <string>

namespace prejj {

// ------------------------------------------------------------------- Vector

Vector::Vector(Field field, std::size_t size)
    : field_(field), coords_(size, Scalar::zero(field)) {}

Vector::Vector(Field field, std::vector<Scalar> coords)
    : field_(field), coords_(std::move(coords)) {
  for (const auto &s : coords_)
    if (s.field() != field_)
      throw FieldMismatch("vector coordinate " + s.to_string() + " is not in " + field_.to_string());
}

Vector Vector::basis(Field field, std::size_t size, std::size_t index) {
  if (index >= size)
    throw Error("basis index " + std::to_string(index) + " out of range " + std::to_string(size));
  Vector v(field, size);
  v[index] = Scalar::one(field);
  return v;
}

Vector Vector::of(Field field, std::initializer_list<std::int64_t> coords) {
  std::vector<Scalar> out;
  out.reserve(coords.size());
  for (auto c : coords)
    out.push_back(Scalar::from_int(c, field));
  return Vector(field, std::move(out));
}

bool Vector::is_zero() const {
  for (const auto &s : coords_)
    if (!s.is_zero())
      return false;
  return true;
}

void Vector::require_conformant(const Vector &o) const {
  if (field_ != o.field_)
    throw FieldMismatch("vectors over " + field_.to_string() + " and " + o.field_.to_string());
  if (size() != o.size())
    throw Error("vector length mismatch: " + std::to_string(size()) + " vs " +
                std::to_string(o.size()));
}

Vector Vector::operator+(const Vector &o) const {
  Vector out = *this;
  out += o;
  return out;
}

Vector &Vector::operator+=(const Vector &o) {
  require_conformant(o);
  for (std::size_t i = 0; i < size(); ++i)
    coords_[i] += o.coords_[i];
  return *this;
}

Vector Vector::operator-(const Vector &o) const {
  require_conformant(o);
  Vector out = *this;
  for (std::size_t i = 0; i < size(); ++i)
    out.coords_[i] -= o.coords_[i];
  return out;
}

Vector Vector::operator-() const {
  Vector out = *this;
  for (auto &s : out.coords_)
    s = -s;
  return out;
}

Vector Vector::scaled(const Scalar &s) const {
  Vector out = *this;
  for (auto &c : out.coords_)
    c *= s;
  return out;
}

bool Vector::operator==(const Vector &o) const {
  require_conformant(o);
  return coords_ == o.coords_;
}

Vector Vector::concat(const Vector &o) const {
  if (field_ != o.field_)
    throw FieldMismatch("concatenating vectors over different fields");
  std::vector<Scalar> out = coords_;
  out.insert(out.end(), o.coords_.begin(), o.coords_.end());
  return Vector(field_, std::move(out));
}

Vector Vector::slice(std::size_t offset, std::size_t count) const {
  if (offset + count > size())
    throw Error("vector slice out of range");
  return Vector(field_, std::vector<Scalar>(coords_.begin() + offset,
                                            coords_.begin() + offset + count));
}

// ---------------------------------------------------------------- LinearMap

LinearMap::LinearMap(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, Scalar::zero(field)) {}

LinearMap LinearMap::identity(Field field, std::size_t n) {
  LinearMap m(field, n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = Scalar::one(field);
  return m;
}

LinearMap LinearMap::of(Field field, std::size_t rows, std::size_t cols,
                        std::initializer_list<std::int64_t> entries) {
  if (entries.size() != rows * cols)
    throw Error("LinearMap::of: expected " + std::to_string(rows * cols) + " entries");
  LinearMap m(field, rows, cols);
  std::size_t k = 0;
  for (auto e : entries)
    m.entries_[k++] = Scalar::from_int(e, field);
  return m;
}

LinearMap LinearMap::diagonal(const std::vector<Scalar> &diag) {
  if (diag.empty())
    throw Error("diagonal of an empty list");
  LinearMap m(diag.front().field(), diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i)
    m(i, i) = diag[i];
  return m;
}

LinearMap LinearMap::from_columns(Field field, std::size_t rows, const std::vector<Vector> &columns) {
  LinearMap m(field, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows || columns[c].field() != field)
      throw Error("column " + std::to_string(c) + " does not conform");
    for (std::size_t r = 0; r < rows; ++r)
      m(r, c) = columns[c][r];
  }
  return m;
}

void LinearMap::require_same_shape(const LinearMap &o, const char *what) const {
  if (field_ != o.field_)
    throw FieldMismatch(std::string(what) + ": maps over different fields");
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw Error(std::string(what) + ": shape mismatch " + std::to_string(rows_) + "x" +
                std::to_string(cols_) + " vs " + std::to_string(o.rows_) + "x" +
                std::to_string(o.cols_));
}

Vector LinearMap::column(std::size_t c) const {
  Vector v(field_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    v[r] = (*this)(r, c);
  return v;
}

Vector LinearMap::apply(const Vector &v) const {
  if (v.field() != field_)
    throw FieldMismatch("applying a map over " + field_.to_string() + " to a vector over " +
                        v.field().to_string());
  if (v.size() != cols_)
    throw Error("applying a " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                " map to a vector of length " + std::to_string(v.size()));
  Vector out(field_, rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero())
      continue;
    for (std::size_t r = 0; r < rows_; ++r)
      if (!(*this)(r, c).is_zero())
        out[r] += (*this)(r, c) * v[c];
  }
  return out;
}

LinearMap LinearMap::operator+(const LinearMap &o) const {
  LinearMap out = *this;
  out += o;
  return out;
}

LinearMap &LinearMap::operator+=(const LinearMap &o) {
  require_same_shape(o, "sum");
  for (std::size_t i = 0; i < entries_.size(); ++i)
    entries_[i] += o.entries_[i];
  return *this;
}

LinearMap LinearMap::operator-(const LinearMap &o) const {
  require_same_shape(o, "difference");
  LinearMap out = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    out.entries_[i] -= o.entries_[i];
  return out;
}

LinearMap LinearMap::operator-() const {
  LinearMap out = *this;
  for (auto &e : out.entries_)
    e = -e;
  return out;
}

LinearMap LinearMap::operator*(const LinearMap &o) const {
  if (field_ != o.field_)
    throw FieldMismatch("product of maps over different fields");
  if (cols_ != o.rows_)
    throw Error("product shape mismatch: " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                " times " + std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
  LinearMap out(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar &a = (*this)(i, k);
      if (a.is_zero())
        continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (!o(k, j).is_zero())
          out(i, j) += a * o(k, j);
    }
  return out;
}

LinearMap LinearMap::scaled(const Scalar &s) const {
  LinearMap out = *this;
  for (auto &e : out.entries_)
    e *= s;
  return out;
}

LinearMap LinearMap::transpose() const {
  LinearMap out(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      out(c, r) = (*this)(r, c);
  return out;
}

bool LinearMap::is_zero() const {
  for (const auto &e : entries_)
    if (!e.is_zero())
      return false;
  return true;
}

bool LinearMap::operator==(const LinearMap &o) const {
  require_same_shape(o, "comparison");
  return entries_ == o.entries_;
}

Scalar LinearMap::determinant() const {
  if (!is_square())
    throw Error("determinant of a non-square map");
  LinearMap m = *this;
  Scalar det = Scalar::one(field_);
  for (std::size_t col = 0; col < cols_; ++col) {
    std::size_t pivot = col;
    while (pivot < rows_ && m(pivot, col).is_zero())
      ++pivot;
    if (pivot == rows_)
      return Scalar::zero(field_);
    if (pivot != col) {
      for (std::size_t c = 0; c < cols_; ++c)
        std::swap(m(pivot, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    Scalar inv = m(col, col).inverse();
    for (std::size_t r = col + 1; r < rows_; ++r) {
      if (m(r, col).is_zero())
        continue;
      Scalar factor = m(r, col) * inv;
      for (std::size_t c = col; c < cols_; ++c)
        m(r, c) -= factor * m(col, c);
    }
  }
  return det;
}

std::optional<LinearMap> LinearMap::inverse() const {
  if (!is_square())
    throw Error("inverse of a non-square map");
  std::size_t n = rows_;
  LinearMap m = *this;
  LinearMap inv = identity(field_, n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col).is_zero())
      ++pivot;
    if (pivot == n)
      return std::nullopt;
    if (pivot != col)
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(m(pivot, c), m(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    Scalar scale = m(col, col).inverse();
    for (std::size_t c = 0; c < n; ++c) {
      m(col, c) *= scale;
      inv(col, c) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m(r, col).is_zero())
        continue;
      Scalar factor = m(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        m(r, c) -= factor * m(col, c);
        inv(r, c) -= factor * inv(col, c);
      }
    }
  }
  return inv;
}

LinearMap op_anticommutator(const LinearMap &p, const LinearMap &q) {
  if (!p.is_square() || !q.is_square() || p.rows() != q.rows())
    throw Error("op_anticommutator needs two square maps of equal size");
  return p * q + q * p;
}

LinearMap combine(std::span<const LinearMap> family, const Vector &coeffs) {
  if (family.size() != coeffs.size())
    throw Error("family of " + std::to_string(family.size()) + " maps indexed by a vector of length " +
                std::to_string(coeffs.size()));
  if (family.empty())
    throw Error("combination of an empty family");
  LinearMap out = LinearMap::zero(family.front().field(), family.front().rows(), family.front().cols());
  for (std::size_t i = 0; i < family.size(); ++i)
    if (!coeffs[i].is_zero())
      out += family[i].scaled(coeffs[i]);
  return out;
}

std::vector<LinearMap> transposed(std::span<const LinearMap> family) {
  std::vector<LinearMap> out;
  out.reserve(family.size());
  for (const auto &m : family)
    out.push_back(m.transpose());
  return out;
}

} // namespace prejj
