#pragma once

#include <cstddef>
#include <vector>

#include "prejj/algebra.hpp"
#include "prejj/linear.hpp"

namespace prejj {

/// rho: one m x m map per basis element of a JJ algebra, extended linearly.
struct JJRep {
  Algebra algebra;
  std::size_t module_dim;
  std::vector<LinearMap> rho;

  /// Throws on shape or field mismatch.
  void validate() const;
  LinearMap at(const Vector &x) const { return combine(rho, x); }
};

/// (l, r): two families of m x m maps indexed by the basis of a pre-JJ algebra.
struct PreJJBimodule {
  Algebra algebra;
  std::size_t module_dim;
  std::vector<LinearMap> l;
  std::vector<LinearMap> r;

  void validate() const;
};

bool operator==(const JJRep &a, const JJRep &b);
bool operator==(const PreJJBimodule &a, const PreJJBimodule &b);

/// Flattens a square matrix row-major so it can serve as a witness defect.
Vector flatten(const LinearMap &m);

JJRep zero_rep(const Algebra &j, std::size_t m);
/// rho = L of the JJ product.
JJRep adjoint_rep(const Algebra &j);
PreJJBimodule zero_bimodule(const Algebra &a, std::size_t m);
/// (L, R) acting on the algebra itself.
PreJJBimodule regular_bimodule(const Algebra &a);

/// rho(x y) = -(rho_x rho_y + rho_y rho_x) on basis pairs. A warning is
/// attached when the algebra itself fails the jj check.
CheckReport check_jj_rep(const JJRep &rep, std::size_t max_witnesses = default_max_witnesses);

/// (x+u)(y+w) = xy + rho(x)w + rho(y)u. Throws if rep fails check_jj_rep.
Algebra jj_semidirect(const JJRep &rep);

/// rho*_x = transpose(rho_x).
JJRep dual_rep(const JJRep &rep);

/// Conditions (i)-(iii) on basis pairs; witnesses are tagged "i", "ii", "iii"
/// and carry the flattened defect matrix.
CheckReport check_prejj_bimodule(const PreJJBimodule &bm, std::size_t max_witnesses = default_max_witnesses);

/// The two displayed conditions only: {l_x, r_y} = -{l_y, r_x} and (i).
/// Diagnostic; not equivalent to the semidirect product being pre-JJ.
CheckReport check_prejj_bimodule_displayed(const PreJJBimodule &bm,
                                           std::size_t max_witnesses = default_max_witnesses);

/// (x1+v1)(x2+v2) = x1 x2 + l_{x1} v2 + r_{x2} v1. Does not gate on the
/// bimodule check.
Algebra prejj_semidirect(const PreJJBimodule &bm);

/// rho = l + r over sub_adjacent(algebra). Throws unless bm passes.
JJRep sum_rep(const PreJJBimodule &bm);

/// (transpose r, transpose l); note the swap.
PreJJBimodule dual_bimodule(const PreJJBimodule &bm);

} // namespace prejj
