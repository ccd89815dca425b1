#include "cfp/vectors.h"

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "cfp/errors.h"

namespace cfp {
namespace {

UnitVector basis(std::size_t n, std::size_t i) {
  std::vector<double> v(n, 0.0);
  v[i] = 1.0;
  return UnitVector(v);
}

TEST(Normalize, ScalesToUnitNorm) {
  const auto a = normalize(std::vector<double>{1, 1, 1, 1});
  for (std::size_t j = 0; j < 4; ++j) EXPECT_DOUBLE_EQ(a[j], 0.5);
  const auto b = normalize(std::vector<double>{3, 4});
  EXPECT_DOUBLE_EQ(b[0], 0.6);
  EXPECT_DOUBLE_EQ(b[1], 0.8);
}

TEST(Normalize, RejectsZeroVectorWithDistinctError) {
  EXPECT_THROW(normalize(std::vector<double>{0, 0}), ZeroNormError);
  EXPECT_THROW(normalize(std::vector<double>{}), InvalidArgument);
}

TEST(UnitVector, RejectsNonUnitInput) {
  EXPECT_THROW(UnitVector({1.0, 1.0}), InvalidArgument);
  EXPECT_THROW(UnitVector(std::vector<double>{}), InvalidArgument);
  EXPECT_NO_THROW(UnitVector({1.0 + 1e-10}));
}

TEST(EuclideanDistance, ReferenceCases) {
  const auto x = random_unit_vector(16, 5);
  EXPECT_DOUBLE_EQ(euclidean_distance_sq(x, x), 0.0);
  EXPECT_DOUBLE_EQ(euclidean_distance_sq(basis(3, 0), basis(3, 1)), 2.0);
  EXPECT_NEAR(euclidean_distance_sq(x, -x), 4.0, 1e-12);
  EXPECT_THROW(euclidean_distance_sq(basis(3, 0), basis(4, 0)), DimensionMismatch);
}

TEST(EuclideanDistance, MatchesInnerProductIdentity) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto x = random_unit_vector(1 + seed % 37, 2 * seed);
    const auto y = random_unit_vector(1 + seed % 37, 2 * seed + 1);
    EXPECT_NEAR(euclidean_distance_sq(x, y), 2.0 - 2.0 * inner_product(x, y), 1e-9);
  }
}

TEST(InnerProductFromDistance, EndpointsAndRange) {
  EXPECT_DOUBLE_EQ(inner_product_from_distance(0.0), 1.0);
  EXPECT_DOUBLE_EQ(inner_product_from_distance(2.0), 0.0);
  EXPECT_DOUBLE_EQ(inner_product_from_distance(4.0), -1.0);
  EXPECT_THROW(inner_product_from_distance(-0.1), InvalidArgument);
  EXPECT_THROW(inner_product_from_distance(4.1), InvalidArgument);
}

TEST(RandomUnitVector, OneDimensionalIsPlusMinusOne) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) EXPECT_DOUBLE_EQ(std::abs(random_unit_vector(1, seed)[0]), 1.0);
}

TEST(RandomUnitVector, DeterministicPerSeed) {
  const auto a = random_unit_vector(4, 7);
  const auto b = random_unit_vector(4, 7);
  const auto c = random_unit_vector(4, 8);
  EXPECT_TRUE(std::equal(a.components().begin(), a.components().end(), b.components().begin()));
  EXPECT_FALSE(std::equal(a.components().begin(), a.components().end(), c.components().begin()));
  EXPECT_THROW(random_unit_vector(0, 1), InvalidArgument);
}

TEST(RandomUnitVector, NormIsOneForManySeeds) {
  const auto big = random_unit_vector(1000, 3);
  double s = 0;
  for (double v : big.components()) s += v * v;
  EXPECT_NEAR(s, 1.0, 1e-9);
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const auto v = random_unit_vector(64, seed);
    double t = 0;
    for (double c : v.components()) t += c * c;
    ASSERT_NEAR(t, 1.0, 1e-9) << "seed " << seed;
  }
}

TEST(RandomUnitVector, ComponentsLookGaussian) {
  // Rotation invariance implies E[x_j] = 0 and E[x_j^2] = 1/n.
  const std::size_t n = 4096;
  const auto v = random_unit_vector(n, 11);
  double mean = 0;
  for (double c : v.components()) mean += c;
  mean /= n;
  EXPECT_NEAR(mean, 0.0, 4.0 / n);  // sd of the mean is 1/n
}

TEST(BinaryString, ParseAndValidate) {
  const auto s = BinaryString::parse("01 1\n0");
  EXPECT_EQ(s.to_string(), "0110");
  EXPECT_THROW(BinaryString::parse("012"), InvalidArgument);
  EXPECT_THROW(BinaryString({0, 2}), InvalidArgument);
}

TEST(EccEncode, Deterministic) {
  const auto s = BinaryString::parse("10110010");
  const auto a = ecc_encode(s, 16, 1);
  const auto b = ecc_encode(s, 16, 1);
  ASSERT_EQ(a.size(), 128u);
  EXPECT_TRUE(std::equal(a.components().begin(), a.components().end(), b.components().begin()));
  EXPECT_DOUBLE_EQ(euclidean_distance_sq(a, b), 0.0);
}

TEST(EccEncode, ErrorPaths) {
  EXPECT_THROW(ecc_encode(BinaryString{}, 16, 1), InvalidArgument);
  EXPECT_THROW(ecc_encode(BinaryString::parse("1"), 1, 1), InvalidArgument);
}

TEST(EccEncode, SquaredDistanceIsFourTimesRelativeHamming) {
  const RandomLinearCode code(12, 8, 9);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto s = random_binary_string(12, 2 * seed);
    const auto t = random_binary_string(12, 2 * seed + 1);
    const auto cs = code.encode(s);
    const auto ct = code.encode(t);
    const double d = euclidean_distance_sq(codeword_to_unit_vector(cs), codeword_to_unit_vector(ct));
    EXPECT_NEAR(d, 4.0 * hamming_distance(cs, ct) / 96.0, 1e-12);
  }
}

// All 255 nonzero messages at n_bits = 8, rate_inverse = 16, seed = 1,
// enumerated independently of the Gray-code walk in minimum_distance().
TEST(EccEncode, AllUnequalPairsAgainstZeroAreFarApart) {
  const BinaryString zero(std::vector<std::uint8_t>(8, 0));
  const auto e0 = ecc_encode(zero, 16, 1);
  const RandomLinearCode code(8, 16, 1);
  std::size_t min_weight = code.length();
  for (unsigned m = 1; m < 256; ++m) {
    std::vector<std::uint8_t> bits(8);
    for (int i = 0; i < 8; ++i) bits[i] = (m >> i) & 1;
    const BinaryString s(bits);
    EXPECT_GT(euclidean_distance_sq(ecc_encode(s, 16, 1), e0), 0.5) << s.to_string();
    min_weight = std::min(min_weight, hamming_weight(code.encode(s)));
  }
  EXPECT_EQ(code.minimum_distance(), min_weight);
}

TEST(EccEncode, LinearOverGf2) {
  // d(E(s), E(t)) = wt(E(s xor t)), checked exhaustively for 6-bit messages.
  const RandomLinearCode code(6, 4, 3);
  for (unsigned a = 0; a < 64; ++a) {
    for (unsigned b = 0; b < 64; ++b) {
      std::vector<std::uint8_t> sa(6), sb(6);
      for (int i = 0; i < 6; ++i) {
        sa[i] = (a >> i) & 1;
        sb[i] = (b >> i) & 1;
      }
      const BinaryString s(sa), t(sb);
      ASSERT_EQ(hamming_distance(code.encode(s), code.encode(t)), hamming_weight(code.encode(bitwise_xor(s, t))));
    }
  }
}

TEST(RandomLinearCode, InjectiveEvenAtLowRate) {
  // rate_inverse 2 at 12 bits: full rank means no nonzero message maps to 0.
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    EXPECT_GT(RandomLinearCode(12, 2, seed).minimum_distance(), 0u) << seed;
  }
}

}  // namespace
}  // namespace cfp
