#pragma once

#include <string>
#include <vector>

#include "prejj/algebra.hpp"
#include "prejj/matched_pairs.hpp"

namespace prejj {

/// B(u, v) = u^T M v on a 2n-dimensional carrier.
struct BilinearForm {
  LinearMap matrix;

  std::size_t dim() const { return matrix.rows(); }
  Scalar operator()(const Vector &u, const Vector &v) const;
  bool is_symmetric() const { return matrix == matrix.transpose(); }
};

/// [[0, I_n], [I_n, 0]]: the pairing <x, b*> + <a*, y>.
BilinearForm canonical_form(std::size_t n, Field field = Field::rationals());

enum class DoubleKind { jj, pre_jj };
std::string to_string(DoubleKind kind);

struct DoubleConstruction {
  Algebra ambient;
  BilinearForm form;
  Algebra source;
  Algebra source_dual;
  DoubleKind kind;
  /// Failed input preconditions, only populated in report mode.
  std::vector<std::string> precondition_failures;
};

/// enforce: failing preconditions throw PreconditionError.
/// report: the double is built anyway and failures are listed.
enum class PreconditionMode { enforce, report };

/// lA = R_.^T, rA = L_.^T, lB = R_o^T, rB = L_o^T.
PreJJMatchedPair dual_structure_maps(const Algebra &a, const Algebra &astar);

/// rho = L_<>^T acting on J*, mu = L_o^T acting on J.
JJMatchedPair jj_dual_structure_maps(const Algebra &j, const Algebra &jstar);

/// Ambient = prejj_bicross_product(dual_structure_maps(A, A*)).
DoubleConstruction build_prejj_double(const Algebra &a, const Algebra &astar,
                                      PreconditionMode mode = PreconditionMode::enforce);
/// Ambient = jj_bicross_product(jj_dual_structure_maps(J, J*)).
DoubleConstruction build_jj_double(const Algebra &j, const Algebra &jstar,
                                   PreconditionMode mode = PreconditionMode::enforce);

/// B(u*v, w) = B(u, v*w) on every basis triple of the ambient algebra.
CheckReport check_invariance(const DoubleConstruction &d,
                             std::size_t max_witnesses = default_max_witnesses);

/// Verdicts of the three equivalent conditions for a pre-JJ double.
struct DoubleEquivalence {
  bool ambient_prejj;
  bool dual_matched_pair;
  /// Sub-adjacent JJ matched pair with -ad* actions, sign as printed.
  bool neg_ad_jj_matched_pair;
  bool coincide() const {
    return ambient_prejj == dual_matched_pair && dual_matched_pair == neg_ad_jj_matched_pair;
  }
};

/// (G(A), G(A*), -ad*_., -ad*_o).
JJMatchedPair neg_ad_dual_pair(const Algebra &a, const Algebra &astar);
DoubleEquivalence double_equivalence(const Algebra &a, const Algebra &astar);

/// One product u*v with u, v sums of ambient basis vectors.
struct TableEntry {
  std::vector<std::size_t> left;
  std::vector<std::size_t> right;
  Vector expected;
};

struct ConformanceEntry {
  std::string lhs;
  Vector recomputed;
  Vector expected;
  bool match;
};

std::string render_sum(const Algebra &a, const std::vector<std::size_t> &terms);
/// Renders a vector as "2e2 + e1*" ("0" for zero) with the algebra's labels;
/// prime-field coefficients appear as bare residues.
std::string render_vector(const Algebra &a, const Vector &v);

/// Recomputes every entry from the ambient product and compares.
std::vector<ConformanceEntry> conformance_diff(const Algebra &ambient,
                                               const std::vector<TableEntry> &table);

} // namespace prejj
