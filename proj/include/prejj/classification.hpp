#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prejj/algebra.hpp"

namespace prejj {

/// The n^3 structure constants flattened in (i,j,k) order; for n = 2 this is
/// (a1,a2,b1,b2,c1,c2,d1,d2).
struct ConstantTuple {
  std::size_t dim = 0;
  std::vector<Scalar> entries;

  static ConstantTuple from_algebra(const Algebra &a);
  Algebra algebra(const Field &field) const;

  bool operator==(const ConstantTuple &o) const = default;
  /// Lexicographic under Scalar::compare.
  std::strong_ordering operator<=>(const ConstantTuple &o) const;
};

struct Orbit {
  ConstantTuple representative;
  std::size_t size = 0;
};

struct CensusMetadata {
  std::uint64_t tuples_scanned = 0;
  std::uint64_t group_order = 0;
};

struct OrbitCensus {
  Field field = Field::rationals();
  IdentityKind kind = IdentityKind::antiassociative;
  std::size_t dim = 0;
  /// Sorted by representative.
  std::vector<Orbit> orbits;
  std::size_t total_solutions = 0;
  std::vector<std::string> warnings;
  CensusMetadata metadata;
};

/// Raised when a search would exceed the configured budget.
class InfeasibleSearch : public Error {
public:
  InfeasibleSearch(const std::string &what, double estimated_seconds)
      : Error(what), estimated_seconds_(estimated_seconds) {}
  double estimated_seconds() const { return estimated_seconds_; }

private:
  double estimated_seconds_;
};

struct SearchOptions {
  /// 0 picks std::thread::hardware_concurrency().
  unsigned workers = 0;
  /// Upper bound on scanned tuples.
  std::uint64_t max_tuples = 300'000'000;
  /// Upper bound on (orbits x group order) basis-change evaluations in classify.
  std::uint64_t max_group_order = 20'000;
};

/// p^(n^3), saturating at UINT64_MAX.
std::uint64_t tuple_space_size(std::size_t dim, std::uint32_t p);
/// |GL_n(F_p)|, saturating.
std::uint64_t general_linear_order(std::size_t dim, std::uint32_t p);

/// Every tuple over F_p whose algebra passes `kind`, in lexicographic order.
/// Requires a prime field and dim <= 3.
std::vector<ConstantTuple> enumerate_solutions(std::size_t dim, const Field &field, IdentityKind kind,
                                               const SearchOptions &options = {});

/// The verification-only mode: true for each supplied tuple that passes.
std::vector<bool> verify_solutions(const std::vector<ConstantTuple> &tuples, const Field &field,
                                   IdentityKind kind);

/// Exhaustive scan of GL_n(F_p), identity first. Over the rationals the scan
/// covers integer matrices with entries in [-bound, bound].
std::optional<LinearMap> find_isomorphism(const Algebra &a, const Algebra &b, std::int64_t bound = 2);

/// All distinct images of t under GL_n(F_p), sorted.
std::vector<ConstantTuple> orbit_of(const ConstantTuple &t, const Field &field);

/// GL-orbit census of the solution set for dim 1 or 2 over a prime field.
OrbitCensus classify(std::size_t dim, const Field &field, IdentityKind kind, const SearchOptions &options = {});

/// Index of the orbit containing t, if t is a solution.
std::optional<std::size_t> orbit_index(const OrbitCensus &census, const ConstantTuple &t);

/// Solutions of `lhs` missing from `rhs`, both sorted.
std::vector<ConstantTuple> missing_from(const std::vector<ConstantTuple> &lhs,
                                        const std::vector<ConstantTuple> &rhs);

/// Quadratic polynomial in the dim-2 structure constants a1..d2 with
/// rational coefficients, keyed by sorted variable index pairs.
struct QuadraticPolynomial {
  std::vector<std::pair<std::pair<int, int>, Rational>> terms;

  /// Parses "2a1^2+a2c1+a2b1=0" style text; both sides are moved left.
  static QuadraticPolynomial parse(const std::string &text);
  std::string to_string() const;
};

/// Coordinate t of the identity evaluated at basis triple (i,j,k), as a
/// polynomial in the dim-2 structure constants. Antiassociative and
/// left_pre_jj are supported.
QuadraticPolynomial identity_polynomial(IdentityKind kind, std::size_t i, std::size_t j, std::size_t k,
                                        std::size_t t);
/// The 16 polynomials generated mechanically from basis triples.
std::vector<QuadraticPolynomial> generated_system(IdentityKind kind);

/// The displayed dim-2 system, transcribed term by term.
const std::vector<std::string> &printed_system();

struct PrintedEquationCheck {
  std::size_t number;
  std::string text;
  /// In the linear span of the generated antiassociative system.
  bool implied;
};
std::vector<PrintedEquationCheck> cross_check_printed_system();

} // namespace prejj
