#include "prejj/scalar.hpp"

#include <cctype>
#include <limits>

namespace prejj {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+'))
    s.remove_prefix(1);
  if (s.empty())
    return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      return false;
  return true;
}

BigInt parse_integer(std::string_view s) {
  s = trim(s);
  if (!is_integer_literal(s))
    throw Error("not an integer literal: '" + std::string(s) + "'");
  if (s.front() == '+')
    s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

std::uint32_t reduce(const BigInt &v, std::uint32_t p) {
  BigInt r = v % p;
  if (r < 0)
    r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

} // namespace

// ---------------------------------------------------------------- Rational

Rational Rational::normalize(const BigInt &num, const BigInt &den) {
  if (den == 0)
    throw Error("rational with zero denominator");
  return Rational(mpq_class(num, den));
}

Rational Rational::inverse() const {
  if (is_zero())
    throw Error("inverse of zero");
  return Rational(mpq_class(1 / q_));
}

std::strong_ordering Rational::operator<=>(const Rational &o) const {
  int c = cmp(q_, o.q_);
  return c < 0 ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string Rational::to_string() const {
  if (q_.get_den() == 1)
    return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::parse(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos)
    return normalize(parse_integer(text), 1);
  return normalize(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

// ------------------------------------------------------- PrimeFieldElement

PrimeFieldElement::PrimeFieldElement(std::int64_t value, std::uint32_t p) : p_(p) {
  if (p < 2)
    throw Error("prime field modulus must be at least 2");
  std::int64_t r = value % static_cast<std::int64_t>(p);
  if (r < 0)
    r += p;
  value_ = static_cast<std::uint32_t>(r);
}

void PrimeFieldElement::require_same(const PrimeFieldElement &o) const {
  if (p_ != o.p_)
    throw FieldMismatch("mixed prime fields F_" + std::to_string(p_) + " and F_" +
                        std::to_string(o.p_));
}

PrimeFieldElement PrimeFieldElement::operator+(const PrimeFieldElement &o) const {
  require_same(o);
  return {static_cast<std::int64_t>(value_) + o.value_, p_};
}

PrimeFieldElement PrimeFieldElement::operator-(const PrimeFieldElement &o) const {
  require_same(o);
  return {static_cast<std::int64_t>(value_) - o.value_, p_};
}

PrimeFieldElement PrimeFieldElement::operator*(const PrimeFieldElement &o) const {
  require_same(o);
  std::uint64_t prod = static_cast<std::uint64_t>(value_) * o.value_ % p_;
  return {static_cast<std::int64_t>(prod), p_};
}

PrimeFieldElement PrimeFieldElement::operator-() const {
  return {-static_cast<std::int64_t>(value_), p_};
}

PrimeFieldElement PrimeFieldElement::inverse() const {
  if (value_ == 0)
    throw Error("inverse of zero in F_" + std::to_string(p_));
  // Fermat: a^(p-2)
  std::uint64_t result = 1, base = value_, e = p_ - 2;
  while (e > 0) {
    if (e & 1)
      result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return {static_cast<std::int64_t>(result), p_};
}

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

// -------------------------------------------------------------------- Field

Field Field::prime(std::uint64_t p) {
  if (p > static_cast<std::uint64_t>(std::numeric_limits<std::int32_t>::max()))
    throw Error("prime modulus too large: " + std::to_string(p));
  if (!prejj::is_prime(p))
    throw Error("modulus " + std::to_string(p) + " is not prime");
  return Field(Kind::prime, static_cast<std::uint32_t>(p));
}

std::string Field::to_string() const {
  return is_rational() ? "rational" : "F_" + std::to_string(p_);
}

Field Field::parse(std::string_view text) {
  text = trim(text);
  if (text == "rational" || text == "Q" || text == "rationals")
    return rationals();
  std::string_view digits = text;
  if (digits.starts_with("prime:"))
    digits.remove_prefix(6);
  else if (digits.starts_with("F_"))
    digits.remove_prefix(2);
  if (!is_integer_literal(digits) || digits.front() == '-')
    throw Error("unrecognized field '" + std::string(text) + "'");
  BigInt p = parse_integer(digits);
  if (!p.fits_ulong_p())
    throw Error("prime modulus too large: " + p.get_str());
  return prime(p.get_ui());
}

// ------------------------------------------------------------------- Scalar

Scalar Scalar::from_int(std::int64_t value, const Field &f) {
  if (f.is_rational())
    return Rational(static_cast<long>(value));
  return PrimeFieldElement(value, f.modulus());
}

Scalar Scalar::from_rational(const Rational &r, const Field &f) {
  if (f.is_rational())
    return r;
  std::uint32_t p = f.modulus();
  std::uint32_t den = reduce(r.denominator(), p);
  if (den == 0)
    throw Error("denominator of " + r.to_string() + " vanishes in F_" + std::to_string(p));
  PrimeFieldElement num(reduce(r.numerator(), p), p);
  return num * PrimeFieldElement(den, p).inverse();
}

Field Scalar::field() const {
  if (is_rational())
    return Field::rationals();
  return Field(Field::Kind::prime, as_prime().modulus());
}

bool Scalar::is_zero() const {
  return std::visit([](const auto &v) { return v.is_zero(); }, v_);
}

namespace {

template <typename Op>
Scalar combine(const std::variant<Rational, PrimeFieldElement> &a,
               const std::variant<Rational, PrimeFieldElement> &b, Op op) {
  if (a.index() != b.index())
    throw FieldMismatch("mixed rational and prime-field arithmetic");
  if (a.index() == 0)
    return op(std::get<Rational>(a), std::get<Rational>(b));
  return op(std::get<PrimeFieldElement>(a), std::get<PrimeFieldElement>(b));
}

} // namespace

Scalar Scalar::operator+(const Scalar &o) const {
  return combine(v_, o.v_, [](const auto &x, const auto &y) { return Scalar(x + y); });
}

Scalar Scalar::operator-(const Scalar &o) const {
  return combine(v_, o.v_, [](const auto &x, const auto &y) { return Scalar(x - y); });
}

Scalar Scalar::operator*(const Scalar &o) const {
  return combine(v_, o.v_, [](const auto &x, const auto &y) { return Scalar(x * y); });
}

Scalar Scalar::operator-() const {
  return std::visit([](const auto &v) { return Scalar(-v); }, v_);
}

Scalar Scalar::inverse() const {
  return std::visit([](const auto &v) { return Scalar(v.inverse()); }, v_);
}

bool Scalar::operator==(const Scalar &o) const {
  if (v_.index() != o.v_.index())
    throw FieldMismatch("comparing scalars from different fields");
  if (is_rational())
    return as_rational() == o.as_rational();
  if (as_prime().modulus() != o.as_prime().modulus())
    throw FieldMismatch("comparing scalars from different prime fields");
  return as_prime() == o.as_prime();
}

std::strong_ordering Scalar::compare(const Scalar &o) const {
  if (v_.index() != o.v_.index())
    throw FieldMismatch("ordering scalars from different fields");
  if (is_rational())
    return as_rational() <=> o.as_rational();
  if (as_prime().modulus() != o.as_prime().modulus())
    throw FieldMismatch("ordering scalars from different prime fields");
  return as_prime().value() <=> o.as_prime().value();
}

std::string Scalar::to_string() const {
  if (is_rational())
    return as_rational().to_string();
  return std::to_string(as_prime().value()) + " mod " + std::to_string(as_prime().modulus());
}

Scalar Scalar::parse(std::string_view text, const Field &f) {
  text = trim(text);
  auto mod = text.find("mod");
  if (mod != std::string_view::npos) {
    if (f.is_rational())
      throw Error("residue '" + std::string(text) + "' in a rational context");
    BigInt q = parse_integer(text.substr(mod + 3));
    if (q != f.modulus())
      throw FieldMismatch("residue '" + std::string(text) + "' does not belong to " + f.to_string());
    return PrimeFieldElement(reduce(parse_integer(text.substr(0, mod)), f.modulus()), f.modulus());
  }
  return from_rational(Rational::parse(text), f);
}

std::ostream &operator<<(std::ostream &os, const Scalar &s) { return os << s.to_string(); }
std::ostream &operator<<(std::ostream &os, const Field &f) { return os << f.to_string(); }

} // namespace prejj
