#pragma once

#include <string>
#include <vector>

#include "prejj/algebra.hpp"
#include "prejj/representations.hpp"

namespace prejj {

/// Raised by the check_* entry points when a matched-pair precondition
/// (an algebra identity, a representation or a bimodule) fails.
class PreconditionError : public Error {
public:
  PreconditionError(std::string what, std::vector<std::string> failures)
      : Error(std::move(what)), failures_(std::move(failures)) {}
  const std::vector<std::string> &failures() const { return failures_; }

private:
  std::vector<std::string> failures_;
};

/// rho: G-indexed maps on H's carrier; mu: H-indexed maps on G's carrier.
struct JJMatchedPair {
  Algebra G;
  Algebra H;
  std::vector<LinearMap> rho;
  std::vector<LinearMap> mu;

  void validate() const;
  JJRep rho_rep() const { return {G, H.dim(), rho}; }
  JJRep mu_rep() const { return {H, G.dim(), mu}; }
};

/// lA, rA: A-indexed maps on B's carrier; lB, rB: B-indexed maps on A's carrier.
struct PreJJMatchedPair {
  Algebra A;
  Algebra B;
  std::vector<LinearMap> lA, rA, lB, rB;

  void validate() const;
  PreJJBimodule a_side() const { return {A, B.dim(), lA, rA}; }
  PreJJBimodule b_side() const { return {B, A.dim(), lB, rB}; }
};

/// Which form of the four compatibility equations to evaluate. `derived`
/// is obtained from the mixed components of the antiassociator of the
/// bicrossed product and is the operational default; `printed` evaluates
/// the equations in their published form (with r_A(a) in the third read
/// as r_B(a)).
enum class EquationSet { derived, printed };

/// Full verdict, preconditions included: G and H pass jj, rho and mu are
/// representations, and eqt1/eqt2 hold. Never throws on failing data.
CheckReport evaluate_jj_matched_pair(const JJMatchedPair &mp,
                                     std::size_t max_witnesses = default_max_witnesses);
/// eqt1/eqt2 only; throws PreconditionError listing failing preconditions.
CheckReport check_jj_matched_pair(const JJMatchedPair &mp,
                                  std::size_t max_witnesses = default_max_witnesses);

/// Full verdict: A and B pass left_pre_jj, both sides are bimodules, and
/// eqq1-eqq4 hold. Witness indices are (x, a, b) or (x, y, a) with each
/// index local to its algebra.
CheckReport evaluate_prejj_matched_pair(const PreJJMatchedPair &mp,
                                        EquationSet set = EquationSet::derived,
                                        std::size_t max_witnesses = default_max_witnesses);
CheckReport check_prejj_matched_pair(const PreJJMatchedPair &mp,
                                     EquationSet set = EquationSet::derived,
                                     std::size_t max_witnesses = default_max_witnesses);

/// Product on G + H, G's basis first. No gating on the checker.
Algebra jj_bicross_product(const JJMatchedPair &mp);
/// Product on A + B, A's basis first. No gating on the checker.
Algebra prejj_bicross_product(const PreJJMatchedPair &mp);

/// rho = lA + rA, mu = lB + rB over the sub-adjacent algebras.
/// Throws unless mp passes check_prejj_matched_pair.
JJMatchedPair subadjacent_matched_pair(const PreJJMatchedPair &mp);

JJMatchedPair zero_jj_matched_pair(const Algebra &g, const Algebra &h);
PreJJMatchedPair zero_prejj_matched_pair(const Algebra &a, const Algebra &b);

} // namespace prejj
