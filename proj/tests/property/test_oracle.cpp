#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracle/gram_oracle.hpp"

namespace {

TEST(GramOracle, E8IsEvenUnimodularPositiveDefinite) {
  const oracle::GramInvariants inv = oracle::analyze(oracle::e8_cartan());
  EXPECT_EQ(inv.rank, 8);
  EXPECT_EQ(inv.positive, 8);
  EXPECT_TRUE(inv.even);
  EXPECT_EQ(inv.determinant, oracle::Q(1));
}

TEST(GramOracle, HyperbolicPlane) {
  const oracle::GramInvariants inv = oracle::analyze({{0, 1}, {1, 0}});
  EXPECT_EQ(inv.positive, 1);
  EXPECT_EQ(inv.negative, 1);
  EXPECT_TRUE(inv.even);
  EXPECT_EQ(inv.determinant, oracle::Q(-1));
}

TEST(GramOracle, DiagonalBlocks) {
  const oracle::GramInvariants inv = oracle::analyze(oracle::block_gram(fourfold::UnimodularForm::diagonal(2, 3)));
  EXPECT_EQ(inv.rank, 5);
  EXPECT_EQ(inv.signature(), -1);
  EXPECT_FALSE(inv.even);
  EXPECT_EQ(inv.determinant, oracle::Q(-1));
}

TEST(GramOracle, DetectsDegenerateMatrices) {
  const oracle::GramInvariants inv = oracle::analyze({{1, 1}, {1, 1}});
  EXPECT_EQ(inv.nullity, 1);
  EXPECT_EQ(inv.determinant, oracle::Q(0));
}

TEST(GramOracle, EveryBlockFormIsUnimodular) {
  gen::Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const fourfold::UnimodularForm f = gen::small_form(rng, 16);
    const oracle::GramInvariants inv = oracle::analyze(oracle::block_gram(f));
    EXPECT_EQ(inv.nullity, 0);
    EXPECT_EQ(abs(inv.determinant), oracle::Q(1)) << f.to_string();
  }
}

}  // namespace
