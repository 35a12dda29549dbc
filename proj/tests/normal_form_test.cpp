#include <gtest/gtest.h>

#include "fused/harness.hpp"
#include "fused/normal_form.hpp"
#include "support.hpp"

namespace fused {
namespace {

PureNormalForm pure_of(int n, std::vector<Syllable> const& syllables) {
  PureNormalForm p(n);
  for (auto const& s : syllables) p.append(s);
  return p;
}

SemidirectForm decompose(std::string_view text, std::optional<int> strands = std::nullopt) {
  return semidirect_decompose(parse_braid(text, strands));
}

TEST(LetterToSemidirect, Examples) {
  EXPECT_EQ(letter_to_semidirect(GeneratorLetter::sigma(1), 2),
            (SemidirectForm{pure_of(2, {{{1, 2}, -1}}), Permutation({2, 1})}));
  EXPECT_EQ(letter_to_semidirect(GeneratorLetter::rho(2), 3), SemidirectForm::from_permutation(Permutation({1, 3, 2})));
  EXPECT_EQ(letter_to_semidirect(GeneratorLetter::sigma(1, -1), 2),
            (SemidirectForm{pure_of(2, {{{2, 1}, 1}}), Permutation({2, 1})}));
}

TEST(PermuteIndices, Examples) {
  PureNormalForm const l12 = PureNormalForm::generator({1, 2}, 2);
  EXPECT_EQ(permute_indices(l12, Permutation({2, 1})), PureNormalForm::generator({2, 1}, 2));
  EXPECT_EQ(permute_indices(l12, Permutation::identity(2)), l12);
  EXPECT_EQ(permute_indices(PureNormalForm::generator({1, 2}, 3), Permutation({1, 3, 2})),
            PureNormalForm::generator({1, 3}, 3));
}

TEST(PermuteIndices, IsAGroupAction) {
  Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    int const n = rng.between(2, 7);
    PureNormalForm const p = testing::random_pure(n, rng.between(0, 15), rng);
    Permutation const a = testing::random_permutation(n, rng);
    Permutation const b = testing::random_permutation(n, rng);
    EXPECT_EQ(permute_indices(permute_indices(p, a), b), permute_indices(p, a.then(b)));
    EXPECT_EQ(permute_indices(p, Permutation::identity(n)), p);
    EXPECT_TRUE(testing::freely_reduced(permute_indices(p, a)));
  }
}

// rho_k lambda(a,b) rho_k as a braid word must equal the generator with
// both indices moved by (k k+1); checked for each rule group of the
// conjugation table and the definitions of lambda(i,j).
TEST(LambdaConjugation, RuleGroupsHold) {
  int const n = 6;
  auto conj_by_rho = [&](int k, Lambda g) {
    BraidWord const r(n, {GeneratorLetter::rho(k)});
    return semidirect_decompose(compose(compose(r, lambda_word(g, n)), r));
  };
  auto gen = [&](int a, int b) { return SemidirectForm::from_pure(PureNormalForm::generator({a, b}, n)); };
  int checked = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      EXPECT_EQ(semidirect_decompose(lambda_word({i, j}, n)), gen(i, j));
      EXPECT_EQ(semidirect_decompose(lambda_word({j, i}, n)), gen(j, i));
      for (int k = 1; k < n; ++k) {
        if (k < i - 1 || (i < k && k < j - 1) || k > j) {  // rule 1
          EXPECT_EQ(conj_by_rho(k, {i, j}), gen(i, j));
          EXPECT_EQ(conj_by_rho(k, {j, i}), gen(j, i));
          ++checked;
        }
      }
      if (i > 1) {  // rule 2
        EXPECT_EQ(conj_by_rho(i - 1, {i, j}), gen(i - 1, j));
        EXPECT_EQ(conj_by_rho(i - 1, {j, i}), gen(j, i - 1));
        ++checked;
      }
      if (j == i + 1) {  // rule 3, adjacent
        EXPECT_EQ(conj_by_rho(i, {i, i + 1}), gen(i + 1, i));
        EXPECT_EQ(conj_by_rho(i, {i + 1, i}), gen(i, i + 1));
        ++checked;
      } else {  // rule 3, i < j - 1
        EXPECT_EQ(conj_by_rho(i, {i, j}), gen(i + 1, j));
        EXPECT_EQ(conj_by_rho(i, {j, i}), gen(j, i + 1));
        ++checked;
      }
      if (i + 1 < j) {  // rule 4
        EXPECT_EQ(conj_by_rho(j - 1, {i, j}), gen(i, j - 1));
        EXPECT_EQ(conj_by_rho(j - 1, {j, i}), gen(j - 1, i));
        ++checked;
      }
      if (j < n) {  // rule 5
        EXPECT_EQ(conj_by_rho(j, {i, j}), gen(i, j + 1));
        EXPECT_EQ(conj_by_rho(j, {j, i}), gen(j + 1, i));
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 50);
}

TEST(MultiplyPure, Examples) {
  PureNormalForm const a = PureNormalForm::generator({1, 2}, 3);
  EXPECT_TRUE(multiply_pure(a, PureNormalForm::generator({1, 2}, 3, -1)).is_identity());

  PureNormalForm const b = PureNormalForm::generator({3, 1}, 3);
  PureNormalForm const ab = multiply_pure(a, b);
  EXPECT_EQ(ab, multiply_pure(b, a));
  EXPECT_EQ(ab.factors().size(), 2u);

  PureNormalForm const c = multiply_pure(a, PureNormalForm::generator({2, 1}, 3));
  ASSERT_EQ(c.factors().size(), 1u);
  EXPECT_EQ(c.factors().begin()->second.syllables().size(), 2u);
  EXPECT_EQ(format_pure(c), "L(1,2)^1 L(2,1)^1");
}

TEST(MultiplyPure, CancellationCascades) {
  PureNormalForm const x = pure_of(2, {{{1, 2}, 2}, {{2, 1}, 1}, {{1, 2}, -1}});
  PureNormalForm const y = pure_of(2, {{{1, 2}, 1}, {{2, 1}, -1}, {{1, 2}, 1}});
  EXPECT_EQ(format_pure(multiply_pure(x, y)), "L(1,2)^3");
  EXPECT_TRUE(multiply_pure(x, x.inverse()).is_identity());
}

TEST(SemidirectDecompose, Examples) {
  EXPECT_EQ(decompose("s1 s1"), SemidirectForm::from_pure(pure_of(2, {{{1, 2}, -1}, {{2, 1}, -1}})));
  EXPECT_EQ(decompose("r1 r1"), SemidirectForm::identity(2));
  EXPECT_EQ(decompose("s1 r1"), SemidirectForm::from_pure(pure_of(2, {{{1, 2}, -1}})));
  EXPECT_EQ(decompose("s1^-1 s1^-1"), SemidirectForm::from_pure(pure_of(2, {{{2, 1}, 1}, {{1, 2}, 1}})));
}

TEST(SemidirectDecompose, GoldenRendering) {
  EXPECT_EQ(format_pure(decompose("s1 s1").pure), "L(1,2)^-1 L(2,1)^-1");
  EXPECT_EQ(format_pure(PureNormalForm::identity(3)), "1");
  EXPECT_EQ(format_pure(decompose("s2 s1 s1 s2 s3^-1 s3^-1").pure),
            "L(1,3)^-1 L(3,1)^-1 L(2,3)^-1 L(3,2)^-1 L(4,3)^1 L(3,4)^1");
}

TEST(SemidirectDecompose, IsAHomomorphism) {
  Rng rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    int const n = rng.between(1, 7);
    BraidWord const u = random_braid(n, rng.between(0, 25), rng);
    BraidWord const v = random_braid(n, rng.between(0, 25), rng);
    SemidirectForm const uv = semidirect_decompose(compose(u, v));
    EXPECT_EQ(uv, multiply(semidirect_decompose(u), semidirect_decompose(v)));
    EXPECT_EQ(uv.perm, underlying_permutation(compose(u, v)));
    EXPECT_EQ(semidirect_decompose(invert(u)), inverse(semidirect_decompose(u)));
    EXPECT_TRUE(testing::freely_reduced(uv.pure));
  }
}

TEST(SemidirectDecompose, RoundTripsThroughBraidWords) {
  Rng rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    int const n = rng.between(1, 7);
    SemidirectForm const x = testing::random_semidirect(n, rng.between(0, 12), rng);
    EXPECT_EQ(semidirect_decompose(semidirect_to_braid(x)), x);
  }
}

// Each defining relation inserted into a random context leaves the normal
// form unchanged.
TEST(SemidirectDecompose, DefiningRelationsHold) {
  Rng rng(33);
  for (RelationFamily f : all_relation_families) {
    for (int trial = 0; trial < 100; ++trial) {
      int const n = rng.between(family_min_strands(f), 7);
      Relation const r = random_relation(f, n, rng);
      RelationSides const sides = relation_sides(r);
      BraidWord const u = random_braid(n, rng.between(0, 15), rng);
      BraidWord const v = random_braid(n, rng.between(0, 15), rng);
      BraidWord const lhs = compose(compose(u, BraidWord(n, sides.lhs)), v);
      BraidWord const rhs = compose(compose(u, BraidWord(n, sides.rhs)), v);
      ASSERT_EQ(semidirect_decompose(lhs), semidirect_decompose(rhs)) << format_relation(r);
    }
  }
}

// Near misses of the relations are told apart.
TEST(SemidirectDecompose, DistinguishesNonRelations) {
  EXPECT_NE(decompose("s1 s2 s1"), decompose("s2 s1 s2 s2", 3));
  EXPECT_NE(decompose("r1 s2 s1"), decompose("s2 s1 r1", 3));
  EXPECT_NE(decompose("s1 s1"), decompose("", 2));
}

TEST(BWord, Examples) {
  EXPECT_EQ(b_word(1, 2, 2), SemidirectForm::from_permutation(Permutation({2, 1})));
  EXPECT_EQ(b_word(2, 2, 3), SemidirectForm::identity(3));
  EXPECT_EQ(b_word(3, 1, 3), SemidirectForm::identity(3));
  EXPECT_EQ(b_word(1, 3, 3).perm, Permutation({2, 3, 1}));
  EXPECT_EQ(b_word(2, 5, 6), decompose("r4 r3 r2", 6));
}

TEST(FactorTopStrand, SingleCrossing) {
  StrandFactorization const f = factor_top_strand(decompose("s1"));
  EXPECT_EQ(f.s, 2);
  EXPECT_EQ(f.k_s, 1);
  EXPECT_EQ(f.gamma, SemidirectForm::identity(2));
  ASSERT_EQ(f.x.size(), 1u);
  EXPECT_EQ(f.x_at(2), PureNormalForm::generator({1, 2}, 2, -1));
  EXPECT_EQ(f.recompose(), decompose("s1"));
}

TEST(FactorTopStrand, PurePermutationOnly) {
  StrandFactorization const f = factor_top_strand(SemidirectForm::from_permutation(Permutation({2, 1, 3})));
  EXPECT_EQ(f.s, 2);
  EXPECT_EQ(f.k_s, 1);
  EXPECT_EQ(f.gamma, SemidirectForm::identity(3));
  ASSERT_EQ(f.x.size(), 2u);
  EXPECT_TRUE(f.x_at(2).is_identity());
  EXPECT_TRUE(f.x_at(3).is_identity());
}

TEST(FactorTopStrand, RejectsPureInput) {
  EXPECT_THROW(factor_top_strand(decompose("s1 s1")), std::invalid_argument);
}

TEST(FactorTopStrand, RecomposesAndRespectsSupports) {
  Rng rng(41);
  int done = 0;
  while (done < 500) {
    int const n = rng.between(2, 7);
    SemidirectForm const a = testing::random_semidirect(n, rng.between(0, 15), rng);
    if (a.is_pure()) continue;
    ++done;
    StrandFactorization const f = factor_top_strand(a);
    ASSERT_EQ(f.recompose(), a);
    EXPECT_LT(f.k_s, f.s);
    for (int k = f.s; k <= n; ++k) {
      EXPECT_EQ(f.gamma.perm(k), k);
      EXPECT_FALSE(f.gamma.pure.touches(k));
    }
    for (int j = f.s; j <= n; ++j) {
      for (auto const& [pair, word] : f.x_at(j).factors()) EXPECT_EQ(pair.second, j);
    }
  }
}

}  // namespace
}  // namespace fused
