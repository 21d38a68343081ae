#include "isingevo/variation.hpp"

#include <gtest/gtest.h>

namespace isingevo {
namespace {

const ObjectiveSpec kDomain = ObjectiveSpec::benchmark();

TEST(AverageMix, FloorsTheMidpoint) {
  EXPECT_EQ(average_mix(10, 13), 11);
  EXPECT_EQ(average_mix(4, 4), 4);
  EXPECT_EQ(average_mix(0, 99999), 49999);
  EXPECT_EQ(average_mix(-3, 0), -2);
}

TEST(AverageMix, SymmetricAndBetweenArguments) {
  Rng rng = make_rng(11);
  for (int n = 0; n < 5000; ++n) {
    const auto a = uniform_int(rng, 0, 100000);
    const auto b = uniform_int(rng, 0, 100000);
    const auto m = average_mix(a, b);
    EXPECT_EQ(m, average_mix(b, a));
    EXPECT_LE(std::min(a, b), m);
    EXPECT_LE(m, std::max(a, b));
  }
}

TEST(NormalStep, FourSigmaWindow) {
  const VariationParams params;
  Rng rng = make_rng(12);
  int inside = 0;
  constexpr int kDraws = 20000;
  for (int n = 0; n < kDraws; ++n) {
    const auto x = normal_step(50000, params, rng, kDomain);
    ASSERT_TRUE(kDomain.contains(x));
    if (x >= 49600 && x <= 50400) ++inside;
  }
  // P(|Z| > 4) = 6.3e-5, so ~1.3 expected misses in 20000 draws.
  EXPECT_GE(inside, kDraws - 10);
}

TEST(NormalStep, ClampsAtDomainEdges) {
  const VariationParams wide{1e7, 0.5};
  Rng rng = make_rng(13);
  int low = 0;
  int high = 0;
  for (int n = 0; n < 2000; ++n) {
    const auto a = normal_step(0, wide, rng, kDomain);
    const auto b = normal_step(99999, wide, rng, kDomain);
    ASSERT_TRUE(kDomain.contains(a));
    ASSERT_TRUE(kDomain.contains(b));
    low += a == 0;
    high += b == 99999;
  }
  // Roughly half the draws leave the domain on the near side and get clamped.
  EXPECT_GT(low, 800);
  EXPECT_GT(high, 800);
}

TEST(NormalStep, SeededDeterminism) {
  const VariationParams params;
  Rng a = make_rng(99);
  Rng b = make_rng(99);
  for (int n = 0; n < 1000; ++n) {
    ASSERT_EQ(normal_step(777, params, a, kDomain), normal_step(777, params, b, kDomain));
  }
}

TEST(Propose, DegenerateMixProbabilities) {
  Rng rng = make_rng(14);
  const VariationParams always_mix{100.0, 0.0};
  for (int n = 0; n < 1000; ++n) EXPECT_EQ(propose(10, 13, always_mix, rng, kDomain), 11);

  // With the normal branch forced, the result follows the site, not the midpoint.
  const VariationParams always_normal{100.0, 1.0};
  int near_site = 0;
  for (int n = 0; n < 1000; ++n) {
    const auto x = propose(50000, 90000, always_normal, rng, kDomain);
    near_site += std::abs(x - 50000) <= 500;
  }
  EXPECT_EQ(near_site, 1000);
}

TEST(Propose, DefaultsSplitEvenly) {
  const VariationParams params;
  Rng rng = make_rng(15);
  constexpr int kDraws = 10000;
  int mixed = 0;
  for (int n = 0; n < kDraws; ++n) {
    const auto x = propose(10, 13, params, rng, kDomain);
    ASSERT_TRUE(kDomain.contains(x));
    mixed += x == 11;
  }
  // The normal branch also lands on 11 with probability ~0.004; the mix
  // branch always does.
  const double freq = static_cast<double>(mixed) / kDraws;
  EXPECT_NEAR(freq, 0.5, 0.03);
}

TEST(Propose, ClosedOverDomain) {
  const VariationParams params{5000.0, 0.5};
  Rng rng = make_rng(16);
  for (int n = 0; n < 20000; ++n) {
    const auto a = uniform_int(rng, 0, 100000);
    const auto b = uniform_int(rng, 0, 100000);
    const auto x = propose(a, b, params, rng, kDomain);
    ASSERT_TRUE(kDomain.contains(x)) << x;
    ASSERT_NE(x, -1);
  }
}

TEST(VariationParams, Validation) {
  EXPECT_NO_THROW(VariationParams{}.validate());
  EXPECT_THROW((VariationParams{0.0, 0.5}.validate()), std::invalid_argument);
  EXPECT_THROW((VariationParams{100.0, 1.5}.validate()), std::invalid_argument);
}

}  // namespace
}  // namespace isingevo
