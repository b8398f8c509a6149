#include <gtest/gtest.h>

#include "prejj/algebra.hpp"
#include "support.hpp"

using namespace prejj;
using namespace prejj::testing;

namespace {

Vector vec(std::initializer_list<std::int64_t> c, Field f = Q()) { return Vector::of(f, c); }

// Rejection-samples sparse algebras over F_5 until one is left pre-JJ.
std::vector<Algebra> random_prejj(Gen &g, std::size_t count, std::size_t n) {
  Field f = F(5);
  std::vector<Algebra> out;
  while (out.size() < count) {
    Algebra a = g.algebra(f, n, 0.15);
    if (satisfies(a, IdentityKind::left_pre_jj))
      out.push_back(a);
  }
  return out;
}

} // namespace

TEST(Product, Examples) {
  Algebra a = class_I();
  EXPECT_EQ(product(a, vec({1, 0}), vec({1, 0})), vec({0, 1}));
  EXPECT_EQ(product(a, vec({2, 0}), vec({1, 0})), vec({0, 2}));
  EXPECT_TRUE(product(class_zero(), vec({3, 4}), vec({5, -1})).is_zero());
}

TEST(Product, RejectsNonConformingVectors) {
  Algebra a = class_I();
  EXPECT_THROW(product(a, vec({1, 0, 0}), vec({1, 0})), Error);
  EXPECT_THROW(product(a, vec({1, 0}, F(5)), vec({1, 0})), FieldMismatch);
}

TEST(Antiassociator, Examples) {
  EXPECT_TRUE(antiassociator(class_zero(), vec({1, 2}), vec({3, 4}), vec({5, 6})).is_zero());
  EXPECT_TRUE(antiassociator(class_I(), vec({1, 0}), vec({1, 0}), vec({1, 0})).is_zero());
  EXPECT_EQ(antiassociator(class_II(), vec({0, 1}), vec({1, 0}), vec({1, 0})), vec({0, 1}));
}

TEST(Antiassociator, IsTrilinearOnRandomVectors) {
  Gen g(11);
  for (int trial = 0; trial < 40; ++trial) {
    Algebra a = g.algebra(Q(), 3, 0.5);
    Vector x = g.vector(Q(), 3), x2 = g.vector(Q(), 3), y = g.vector(Q(), 3), z = g.vector(Q(), 3);
    Scalar s = g.scalar(Q());
    EXPECT_EQ(antiassociator(a, x + x2.scaled(s), y, z),
              antiassociator(a, x, y, z) + antiassociator(a, x2, y, z).scaled(s));
    EXPECT_EQ(antiassociator(a, y, x + x2.scaled(s), z),
              antiassociator(a, y, x, z) + antiassociator(a, y, x2, z).scaled(s));
    EXPECT_EQ(antiassociator(a, y, z, x + x2.scaled(s)),
              antiassociator(a, y, z, x) + antiassociator(a, y, z, x2).scaled(s));
  }
}

TEST(CheckIdentity, ClassVerdicts) {
  // e2e1=e2 is not pre-JJ: (e2,e1,e1) = e2 but (e1,e2,e1) = 0.
  for (auto kind : all_identity_kinds()) {
    EXPECT_TRUE(satisfies(class_zero(), kind)) << to_string(kind);
    EXPECT_TRUE(satisfies(class_I(), kind) || kind == IdentityKind::jj) << to_string(kind);
    EXPECT_TRUE(satisfies(class_III(), kind) || kind == IdentityKind::jj) << to_string(kind);
  }
  for (auto kind : {IdentityKind::antiassociative, IdentityKind::left_pre_jj,
                    IdentityKind::right_pre_jj, IdentityKind::operad})
    EXPECT_FALSE(satisfies(class_II(), kind)) << to_string(kind);
}

TEST(CheckIdentity, IdempotentFailsAntiassociativityAtOrigin) {
  Algebra a = Algebra::from_ints(Q(), 1, {1});
  CheckReport r = check_identity(a, IdentityKind::antiassociative);
  EXPECT_FALSE(r.passed);
  ASSERT_FALSE(r.witnesses.empty());
  EXPECT_EQ(r.witnesses.front().indices, (std::vector<std::size_t>{0, 0, 0}));
  EXPECT_EQ(r.witnesses.front().defect, vec({2}));
}

TEST(CheckIdentity, WitnessesAreBoundedSortedAndNonzero) {
  Gen g(3);
  for (int trial = 0; trial < 20; ++trial) {
    Algebra a = g.algebra(F(7), 3);
    CheckReport r = check_identity(a, IdentityKind::left_pre_jj, 5);
    EXPECT_EQ(r.passed, r.witnesses.empty());
    EXPECT_LE(r.witnesses.size(), 5u);
    EXPECT_GE(r.violations, r.witnesses.size());
    for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
      EXPECT_FALSE(r.witnesses[i].defect.is_zero());
      if (i > 0)
        EXPECT_LT(r.witnesses[i - 1].indices, r.witnesses[i].indices);
    }
    CheckReport full = check_identity(a, IdentityKind::left_pre_jj, 1000);
    ASSERT_EQ(full.witnesses.size(), full.violations);
    for (std::size_t i = 0; i < r.witnesses.size(); ++i)
      EXPECT_EQ(r.witnesses[i].indices, full.witnesses[i].indices);
  }
}

TEST(CheckIdentity, JJSeparatesCommutativityFromJacobi) {
  CheckReport r = check_identity(class_I(), IdentityKind::jj);
  EXPECT_TRUE(r.passed);
  r = check_identity(class_II(), IdentityKind::jj);
  ASSERT_FALSE(r.passed);
  bool found = false;
  for (const auto &w : r.witnesses)
    found |= w.condition == "commutativity" && w.indices == std::vector<std::size_t>{0, 1};
  EXPECT_TRUE(found);
}

TEST(CheckIdentity, SmallCharacteristicWarning) {
  EXPECT_FALSE(check_identity(class_I(F(2)), IdentityKind::jj).warnings.empty());
  EXPECT_TRUE(check_identity(class_I(F(5)), IdentityKind::jj).warnings.empty());
}

TEST(IdentityKind, ParseRoundTrip) {
  for (auto kind : all_identity_kinds())
    EXPECT_EQ(parse_identity_kind(to_string(kind)), kind);
  EXPECT_THROW(parse_identity_kind("lie"), Error);
}

TEST(Properties, OperadMatchesLeftPreJJ) {
  Gen g(17);
  int agree_true = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    Algebra a = g.algebra(F(3), 2, 0.2);
    bool left = satisfies(a, IdentityKind::left_pre_jj);
    EXPECT_EQ(satisfies(a, IdentityKind::operad), left);
    agree_true += left;
  }
  EXPECT_GT(agree_true, 0);
}

TEST(Properties, AntiassociativeImpliesLeftAndRight) {
  Gen g(19);
  for (int trial = 0; trial < 3000; ++trial) {
    Algebra a = g.algebra(F(5), 2, 0.2);
    if (!satisfies(a, IdentityKind::antiassociative))
      continue;
    EXPECT_TRUE(satisfies(a, IdentityKind::left_pre_jj));
    EXPECT_TRUE(satisfies(a, IdentityKind::right_pre_jj));
  }
}

TEST(Properties, OppositeSwapsLeftAndRight) {
  Gen g(23);
  for (int trial = 0; trial < 2000; ++trial) {
    Algebra a = g.algebra(F(5), 2, 0.25);
    EXPECT_EQ(satisfies(a, IdentityKind::left_pre_jj),
              satisfies(opposite(a), IdentityKind::right_pre_jj));
    EXPECT_EQ(satisfies(a, IdentityKind::right_pre_jj),
              satisfies(opposite(a), IdentityKind::left_pre_jj));
  }
}

TEST(Properties, SubAdjacentOfPreJJIsJJ) {
  Gen g(29);
  for (const auto &a : random_prejj(g, 60, 3)) {
    EXPECT_TRUE(satisfies(sub_adjacent(a), IdentityKind::jj));
    if (satisfies(a, IdentityKind::antiassociative))
      EXPECT_TRUE(satisfies(sub_adjacent(a, true), IdentityKind::jj));
  }
}

TEST(Properties, VerdictsInvariantUnderBasisChange) {
  Gen g(37);
  for (int trial = 0; trial < 150; ++trial) {
    Algebra a = trial % 3 == 0 ? random_prejj(g, 1, 2).front() : g.algebra(F(5), 2, 0.3);
    LinearMap p = g.invertible(F(5), 2);
    Algebra b = apply_basis_change(a, p);
    for (auto kind : all_identity_kinds())
      EXPECT_EQ(satisfies(a, kind), satisfies(b, kind)) << to_string(kind);
    EXPECT_EQ(apply_basis_change(b, *p.inverse()), a);
  }
}

TEST(Properties, OperatorIdentitiesOnPreJJAlgebras) {
  Gen g(41);
  auto algebras = random_prejj(g, 40, 3);
  for (const auto &c : four_classes(F(5)))
    if (satisfies(c, IdentityKind::left_pre_jj))
      algebras.push_back(c);
  for (const auto &a : algebras) {
    Algebra s = sub_adjacent(a);
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j) {
        Vector x = a.basis_vector(i), y = a.basis_vector(j);
        Vector br = product(s, x, y);
        LinearMap lx = left_mult(a, x), ly = left_mult(a, y);
        LinearMap rx = right_mult(a, x), ry = right_mult(a, y);
        EXPECT_EQ(left_mult(a, br), -(lx * ly + ly * lx));
        EXPECT_EQ(op_anticommutator(lx, ry), -(right_mult(a, product(a, x, y)) + ry * rx));
        EXPECT_EQ(op_anticommutator(lx, ry), -op_anticommutator(rx, left_mult(a, y)));
        EXPECT_EQ(op_anticommutator(ad(a, x), ad(a, y)), ad(a, br));
      }
  }
}

TEST(SubAdjacent, Examples) {
  Algebra s = sub_adjacent(class_I());
  EXPECT_EQ(s.basis_product(0, 0), vec({0, 2}));
  EXPECT_TRUE(sub_adjacent(class_zero()).is_zero());
  Algebra s2 = sub_adjacent(class_II());
  EXPECT_EQ(s2.basis_product(0, 1), vec({0, 1}));
  EXPECT_EQ(s2.basis_product(1, 0), vec({0, 1}));
  EXPECT_EQ(sub_adjacent(class_I(), true).basis_product(0, 0), vec({0, 1}));
  EXPECT_THROW(sub_adjacent(class_I(F(2)), true), Error);
  EXPECT_NO_THROW(sub_adjacent(class_I(F(2)), false));
}

TEST(Multiplications, Examples) {
  Algebra a = class_I();
  LinearMap l = left_mult(a, vec({1, 0}));
  EXPECT_EQ(l.apply(vec({1, 0})), vec({0, 1}));
  EXPECT_TRUE(l.apply(vec({0, 1})).is_zero());
  EXPECT_TRUE(left_mult(class_zero(), vec({1, 1})).is_zero());
  EXPECT_TRUE(right_mult(class_zero(), vec({1, 1})).is_zero());
  EXPECT_TRUE(ad(class_zero(), vec({1, 1})).is_zero());
  LinearMap a2 = ad(class_III(), vec({0, 1}));
  EXPECT_EQ(a2.apply(vec({0, 1})), vec({2, 0}));
  EXPECT_TRUE(a2.apply(vec({1, 0})).is_zero());
  EXPECT_TRUE(op_anticommutator(left_mult(a, vec({1, 0})), right_mult(a, vec({1, 0}))).is_zero());
}

TEST(Multiplications, LinearInArgument) {
  Gen g(43);
  for (int trial = 0; trial < 30; ++trial) {
    Algebra a = g.algebra(Q(), 3, 0.5);
    Vector x = g.vector(Q(), 3), y = g.vector(Q(), 3);
    EXPECT_EQ(left_mult(a, x + y), left_mult(a, x) + left_mult(a, y));
    EXPECT_EQ(right_mult(a, x).apply(y), product(a, y, x));
    EXPECT_EQ(left_mult(a, x).apply(y), product(a, x, y));
  }
}

TEST(Opposite, Examples) {
  Algebra o = opposite(class_II());
  EXPECT_EQ(o.basis_product(0, 1), vec({0, 1}));
  EXPECT_TRUE(o.basis_product(1, 0).is_zero());
  EXPECT_TRUE(opposite(class_zero()).is_zero());
  Gen g(47);
  Algebra a = g.algebra(Q(), 3);
  EXPECT_EQ(opposite(opposite(a)), a);
}

TEST(BasisChange, Examples) {
  EXPECT_EQ(apply_basis_change(class_I(), LinearMap::identity(Q(), 2)), class_I());
  Algebra scaled = Algebra::from_ints(Q(), 2, {0, 7, 0, 0, 0, 0, 0, 0});
  EXPECT_EQ(apply_basis_change(scaled, LinearMap::of(Q(), 2, 2, {1, 0, 0, 7})), class_I());
  EXPECT_TRUE(apply_basis_change(class_zero(), LinearMap::of(Q(), 2, 2, {1, 2, 3, 5})).is_zero());
  EXPECT_EQ(apply_basis_change(class_I(), LinearMap::of(Q(), 2, 2, {0, 1, 1, 0})), class_III());
  EXPECT_THROW(apply_basis_change(class_I(), LinearMap::of(Q(), 2, 2, {1, 1, 1, 1})), Error);
}

TEST(DirectSum, Examples) {
  EXPECT_EQ(direct_sum(class_zero(), class_zero()), Algebra(Q(), 4));
  Algebra s = direct_sum(class_I(), Algebra(Q(), 1));
  EXPECT_EQ(s.dim(), 3u);
  Algebra expected(Q(), 3);
  expected.set(0, 0, 1, Scalar::one(Q()));
  EXPECT_EQ(s, expected);
  Algebra d = direct_sum(class_I(), class_I());
  EXPECT_EQ(d.basis_product(0, 0), vec({0, 1, 0, 0}));
  EXPECT_EQ(d.basis_product(2, 2), vec({0, 0, 0, 1}));
  EXPECT_TRUE(d.basis_product(0, 2).is_zero());
  EXPECT_THROW(direct_sum(class_I(), class_I(F(5))), FieldMismatch);
}

TEST(Algebra, ConstructionErrors) {
  EXPECT_THROW(Algebra(Q(), 0), Error);
  EXPECT_THROW(Algebra(Q(), 2, {"a", "a"}), Error);
  EXPECT_THROW(Algebra::from_ints(Q(), 2, {1, 2, 3}), Error);
}
