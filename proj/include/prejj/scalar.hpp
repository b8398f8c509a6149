#pragma once

#include <cstdint>
#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace prejj {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised when scalars from two different fields meet in one operation.
class FieldMismatch : public Error {
public:
  using Error::Error;
};

using BigInt = mpz_class;

/// Arbitrary-precision rational in lowest terms with a positive denominator.
class Rational {
public:
  Rational() = default;
  Rational(long value) : q_(value) {}
  explicit Rational(const mpq_class &q) : q_(q) { q_.canonicalize(); }

  /// Reduces num/den to lowest terms; the sign ends up on the numerator.
  static Rational normalize(const BigInt &num, const BigInt &den);

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }
  bool is_zero() const { return sgn(q_) == 0; }

  Rational operator+(const Rational &o) const { return Rational(mpq_class(q_ + o.q_)); }
  Rational operator-(const Rational &o) const { return Rational(mpq_class(q_ - o.q_)); }
  Rational operator*(const Rational &o) const { return Rational(mpq_class(q_ * o.q_)); }
  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational inverse() const;

  bool operator==(const Rational &o) const { return q_ == o.q_; }
  std::strong_ordering operator<=>(const Rational &o) const;

  /// "a" or "a/b".
  std::string to_string() const;
  static Rational parse(std::string_view text);

  const mpq_class &raw() const { return q_; }

private:
  mpq_class q_;
};

/// Residue class modulo a prime p.
class PrimeFieldElement {
public:
  PrimeFieldElement(std::int64_t value, std::uint32_t p);

  std::uint32_t value() const { return value_; }
  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return value_ == 0; }

  PrimeFieldElement operator+(const PrimeFieldElement &o) const;
  PrimeFieldElement operator-(const PrimeFieldElement &o) const;
  PrimeFieldElement operator*(const PrimeFieldElement &o) const;
  PrimeFieldElement operator-() const;
  PrimeFieldElement inverse() const;

  bool operator==(const PrimeFieldElement &o) const = default;

private:
  void require_same(const PrimeFieldElement &o) const;

  std::uint32_t value_;
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

/// Field descriptor shared by every scalar of one computation.
class Field {
public:
  enum class Kind { rational, prime };

  static Field rationals() { return Field(Kind::rational, 0); }
  /// Throws unless p is prime and fits in 31 bits.
  static Field prime(std::uint64_t p);

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::rational; }
  bool is_prime() const { return kind_ == Kind::prime; }
  std::uint32_t modulus() const { return p_; }
  /// 0 for the rationals.
  std::uint32_t characteristic() const { return p_; }
  /// True in characteristic 2 or 3, where the JJ theory does not apply.
  bool outside_paper_hypotheses() const { return p_ == 2 || p_ == 3; }

  bool operator==(const Field &) const = default;

  /// "rational" or "F_p".
  std::string to_string() const;
  /// Accepts "rational", "Q", "prime:p", "F_p" and a bare prime "p".
  static Field parse(std::string_view text);

private:
  friend class Scalar;
  Field(Kind k, std::uint32_t p) : kind_(k), p_(p) {}

  Kind kind_;
  std::uint32_t p_;
};

/// Exact field element: a rational or a residue mod p.
class Scalar {
public:
  Scalar() : v_(Rational()) {}
  Scalar(Rational r) : v_(std::move(r)) {}
  Scalar(PrimeFieldElement e) : v_(e) {}

  static Scalar zero(const Field &f) { return from_int(0, f); }
  static Scalar one(const Field &f) { return from_int(1, f); }
  static Scalar from_int(std::int64_t value, const Field &f);
  /// Maps a rational into f; throws if the denominator vanishes mod p.
  static Scalar from_rational(const Rational &r, const Field &f);

  Field field() const;
  bool is_zero() const;

  Scalar operator+(const Scalar &o) const;
  Scalar operator-(const Scalar &o) const;
  Scalar operator*(const Scalar &o) const;
  Scalar operator-() const;
  Scalar &operator+=(const Scalar &o) { return *this = *this + o; }
  Scalar &operator-=(const Scalar &o) { return *this = *this - o; }
  Scalar &operator*=(const Scalar &o) { return *this = *this * o; }

  /// Multiplicative inverse; throws on zero.
  Scalar inverse() const;

  bool operator==(const Scalar &o) const;

  /// Total order used for tie-breaking: numeric for rationals,
  /// 0 < 1 < ... < p-1 for residues. Throws on mixed fields.
  std::strong_ordering compare(const Scalar &o) const;

  bool is_rational() const { return std::holds_alternative<Rational>(v_); }
  const Rational &as_rational() const { return std::get<Rational>(v_); }
  const PrimeFieldElement &as_prime() const { return std::get<PrimeFieldElement>(v_); }

  /// "a", "a/b" for rationals and "k mod p" for residues.
  std::string to_string() const;
  /// Parses any of the rendered forms into field f. A rational literal is
  /// reduced into a prime field; "k mod q" requires q == p.
  static Scalar parse(std::string_view text, const Field &f);

private:
  std::variant<Rational, PrimeFieldElement> v_;
};

std::ostream &operator<<(std::ostream &os, const Scalar &s);
std::ostream &operator<<(std::ostream &os, const Field &f);

/// Returns s^{-1}; throws Error when s is zero.
inline Scalar field_inverse(const Scalar &s) { return s.inverse(); }

} // namespace prejj
