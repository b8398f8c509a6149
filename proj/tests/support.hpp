#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "prejj/algebra.hpp"

namespace prejj::testing {

inline Field Q() { return Field::rationals(); }
inline Field F(std::uint64_t p) { return Field::prime(p); }

/// The four dimension-2 classes in (a1,a2,b1,b2,c1,c2,d1,d2) order.
inline Algebra class_zero(Field f = Q()) { return Algebra(f, 2); }
inline Algebra class_I(Field f = Q()) { return Algebra::from_ints(f, 2, {0, 1, 0, 0, 0, 0, 0, 0}); }
inline Algebra class_II(Field f = Q()) { return Algebra::from_ints(f, 2, {0, 0, 0, 0, 0, 1, 0, 0}); }
inline Algebra class_III(Field f = Q()) { return Algebra::from_ints(f, 2, {0, 0, 0, 0, 0, 0, 1, 0}); }

inline std::vector<Algebra> four_classes(Field f = Q()) {
  return {class_zero(f), class_I(f), class_II(f), class_III(f)};
}
/// Inputs (A, A*) of the three worked doubles; A* carries starred labels.
inline Algebra case_dual(int which, Field f = Q()) {
  std::vector<std::int64_t> c(8, 0);
  if (which == 1)
    c[6] = 1; // e2* o e2* = e1*
  else if (which == 3)
    c[5] = 1; // e2* o e1* = e2*
  return Algebra::from_ints(f, 2, c).with_labels({"e1*", "e2*"});
}
inline Algebra case_algebra(int which, Field f = Q()) {
  return which == 1 ? class_I(f) : which == 2 ? class_II(f) : class_III(f);
}

inline std::vector<std::string> four_class_names() { return {"zero", "e1e1=e2", "e2e1=e2", "e2e2=e1"}; }

/// Deterministic generator for hand-rolled property tests.
class Gen {
public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  Scalar scalar(const Field &f) {
    if (f.is_prime())
      return Scalar::from_int(integer(0, f.modulus() - 1), f);
    std::int64_t den = integer(1, 9);
    return Scalar(Rational::normalize(BigInt(static_cast<long>(integer(-20, 20))),
                                      BigInt(static_cast<long>(den))));
  }

  /// Scalar that is zero with probability 1 - density.
  Scalar sparse_scalar(const Field &f, double density) {
    return coin(density) ? scalar(f) : Scalar::zero(f);
  }

  Vector vector(const Field &f, std::size_t n) {
    Vector v(f, n);
    for (std::size_t i = 0; i < n; ++i)
      v[i] = scalar(f);
    return v;
  }

  LinearMap matrix(const Field &f, std::size_t r, std::size_t c, double density = 1.0) {
    LinearMap m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        m(i, j) = sparse_scalar(f, density);
    return m;
  }

  std::vector<LinearMap> family(const Field &f, std::size_t count, std::size_t m, double density = 1.0) {
    std::vector<LinearMap> out;
    for (std::size_t i = 0; i < count; ++i)
      out.push_back(matrix(f, m, m, density));
    return out;
  }

  Algebra algebra(const Field &f, std::size_t n, double density = 1.0) {
    std::vector<Scalar> c;
    for (std::size_t i = 0; i < n * n * n; ++i)
      c.push_back(sparse_scalar(f, density));
    return Algebra::from_constants(f, n, std::move(c));
  }

  LinearMap invertible(const Field &f, std::size_t n) {
    for (;;) {
      LinearMap m = matrix(f, n, n);
      if (!m.determinant().is_zero())
        return m;
    }
  }

  std::mt19937_64 &engine() { return rng_; }

private:
  std::mt19937_64 rng_;
};

} // namespace prejj::testing
