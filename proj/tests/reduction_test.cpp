#include <gtest/gtest.h>

#include <array>

#include "fused/harness.hpp"
#include "fused/invariant.hpp"
#include "fused/reduction.hpp"
#include "support.hpp"

namespace fused {
namespace {

TEST(Rho, SingleCrossingCollapsesToOneStrand) {
  SemidirectForm const r = rho(semidirect_decompose(parse_braid("s1")));
  EXPECT_EQ(r, SemidirectForm::identity(1));
}

TEST(Rho, FixesPureBraids) {
  Rng rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    int const n = rng.between(1, 6);
    SemidirectForm const p = SemidirectForm::from_pure(testing::random_pure(n, rng.between(0, 10), rng));
    EXPECT_EQ(rho(p), p);
  }
}

// Appending sigma_n, sigma_n^-1 or rho_n and reducing once gives the braid
// back.
TEST(Rho, UndoesRightStabilization) {
  Rng rng(52);
  for (int trial = 0; trial < 300; ++trial) {
    int const n = rng.between(1, 6);
    BraidWord const a = random_braid(n, rng.between(0, 30), rng);
    GeneratorLetter const last = std::array{GeneratorLetter::sigma(n, 1), GeneratorLetter::sigma(n, -1),
                                            GeneratorLetter::rho(n)}[rng.below(3)];
    std::vector<GeneratorLetter> letters = a.letters();
    letters.push_back(last);
    BraidWord const b(n + 1, std::move(letters));
    EXPECT_EQ(rho(semidirect_decompose(b)), semidirect_decompose(a)) << format_braid(b);
  }
}

TEST(Rho, ResultNeverInvolvesTheRemovedStrand) {
  Rng rng(53);
  for (int trial = 0; trial < 300; ++trial) {
    int const n = rng.between(2, 7);
    SemidirectForm const a = testing::random_semidirect(n, rng.between(0, 12), rng);
    if (a.is_pure()) continue;
    SemidirectForm const r = rho(a);
    EXPECT_EQ(r.strands(), n - 1);
    EXPECT_TRUE(testing::freely_reduced(r.pure));
  }
}

TEST(RhoStar, Examples) {
  ReductionResult const hopf = rho_star(parse_braid("s1 s1"));
  EXPECT_EQ(format_pure(hopf.pure), "L(1,2)^-1 L(2,1)^-1");
  EXPECT_EQ(hopf.pure.strands(), 2);
  EXPECT_TRUE(hopf.trace.empty());

  ReductionResult const crossing = rho_star(parse_braid("s1"));
  EXPECT_EQ(crossing.pure, PureNormalForm::identity(1));
  ASSERT_EQ(crossing.trace.size(), 1u);
  EXPECT_EQ(describe_pair_word(crossing.trace[0].dropped), "L(1,2)^-1");

  ReductionResult const unknot = rho_star(parse_braid("s1 s2"));
  EXPECT_EQ(unknot.pure, PureNormalForm::identity(1));
  EXPECT_EQ(unknot.trace.size(), 2u);
}

TEST(RhoStar, TraceRecordsEachStep) {
  // s3 s1 on 4 strands: 4 -> 3, then the 2-cycle {1,2}.
  ReductionResult const r = rho_star(parse_braid("s3 s1"));
  ASSERT_EQ(r.trace.size(), 2u);
  EXPECT_EQ(r.trace[0].n, 4);
  EXPECT_EQ(r.trace[0].s, 4);
  EXPECT_EQ(r.trace[0].k_s, 3);
  EXPECT_EQ(r.trace[0].shift, 0);
  EXPECT_EQ(r.trace[1].n, 3);
  EXPECT_EQ(r.trace[1].s, 2);
  EXPECT_EQ(r.trace[1].k_s, 1);
  EXPECT_EQ(r.trace[1].shift, 1);
  EXPECT_EQ(r.pure.strands(), 2);
}

TEST(RhoStar, StrandCountDropsByOnePerStepToComponentCount) {
  Rng rng(54);
  for (int trial = 0; trial < 500; ++trial) {
    int const n = rng.between(1, 7);
    BraidWord const w = random_braid(n, rng.between(0, 40), rng);
    int const m = component_count(w);
    ReductionResult const r = rho_star(w);
    ASSERT_EQ(static_cast<int>(r.trace.size()), n - m);
    for (std::size_t t = 0; t < r.trace.size(); ++t) {
      EXPECT_EQ(r.trace[t].n, n - static_cast<int>(t));
      EXPECT_EQ(r.trace[t].result.strands(), r.trace[t].n - 1);
    }
    if (!r.trace.empty()) {
      EXPECT_TRUE(r.trace.back().result.is_pure());
    }
    EXPECT_EQ(r.pure.strands(), m);
    SemidirectForm const fixed = SemidirectForm::from_pure(r.pure);
    EXPECT_EQ(rho(fixed), fixed);
  }
}

TEST(RhoStar, KnotsReduceToTheTrivialGroup) {
  Rng rng(55);
  int knots = 0;
  while (knots < 300) {
    BraidWord const w = random_braid(rng.between(1, 6), rng.between(0, 40), rng);
    if (component_count(w) != 1) continue;
    ++knots;
    EXPECT_EQ(rho_star(w).pure, PureNormalForm::identity(1)) << format_braid(w);
  }
}

// Right-multiplying by an element of the commutator subgroup changes rho*
// only inside the commutator subgroup, so the abelianization is unchanged
// with the same component labels.
TEST(RhoStar, CommutatorSubgroupDoesNotChangeAbelianization) {
  Rng rng(56);
  for (int trial = 0; trial < 300; ++trial) {
    int const n = rng.between(2, 6);
    BraidWord const alpha = random_braid(n, rng.between(0, 30), rng);
    BraidWord gamma = BraidWord::identity(n);
    for (int c = rng.between(1, 3); c > 0; --c) {
      BraidWord const x = pure_to_braid(testing::random_pure(n, rng.between(1, 4), rng));
      BraidWord const y = pure_to_braid(testing::random_pure(n, rng.between(1, 4), rng));
      gamma = compose(gamma, testing::commutator(x, y));
    }
    ASSERT_TRUE(underlying_permutation(gamma).is_identity());
    EXPECT_EQ(abelianize(rho_star(compose(alpha, gamma)).pure), abelianize(rho_star(alpha).pure));
  }
}

}  // namespace
}  // namespace fused
