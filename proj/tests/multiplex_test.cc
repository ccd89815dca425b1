#include "cfp/multiplex.h"

#include <cmath>
#include <numbers>
#include <set>

#include <gtest/gtest.h>

#include "cfp/errors.h"
#include "cfp/rng.h"

namespace cfp {
namespace {

// Direct double loop over the continuous-time definitions, independent of
// the root-of-unity tables in the implementation.
std::vector<Complex> brute_force_samples(const std::vector<Complex>& a) {
  const std::size_t k = a.size();
  std::vector<Complex> out(k);
  for (std::size_t m = 0; m < k; ++m) {
    const double t = static_cast<double>(m) / static_cast<double>(k);  // T = 1
    for (std::size_t j = 1; j <= k; ++j) {
      const double omega = 2.0 * std::numbers::pi * static_cast<double>(j);
      out[m] += a[j - 1] * std::exp(Complex(0.0, omega * t));
    }
  }
  return out;
}

std::vector<Complex> random_symbol(std::size_t k, std::uint64_t seed) {
  const rng::Stream s(seed, 0);
  std::vector<Complex> a(k);
  for (std::size_t j = 0; j < k; ++j) a[j] = {s.normal(2 * j), s.normal(2 * j + 1)};
  return a;
}

TEST(Schedule, SubstringLayout) {
  const auto s = schedule(6, 3);
  EXPECT_EQ(s.time_units(), 2u);
  // Channel c carries the substring (2c, 2c + 1).
  EXPECT_EQ(s.input_index(0, 0), 0u);
  EXPECT_EQ(s.input_index(0, 1), 2u);
  EXPECT_EQ(s.input_index(0, 2), 4u);
  EXPECT_EQ(s.input_index(1, 2), 5u);
  const auto id = schedule(6, 1);
  for (std::size_t t = 0; t < 6; ++t) EXPECT_EQ(id.input_index(t, 0), t);
  EXPECT_THROW(schedule(6, 4), InvalidArgument);
  EXPECT_THROW(schedule(6, 7), InvalidArgument);
  EXPECT_THROW(schedule(6, 0), InvalidArgument);
}

TEST(Schedule, BijectiveForAllDivisorsUpTo64) {
  for (std::size_t n = 1; n <= 64; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      if (n % k) continue;
      const auto s = schedule(n, k);
      std::set<std::size_t> seen;
      for (std::size_t t = 0; t < s.time_units(); ++t) {
        for (std::size_t c = 0; c < k; ++c) {
          const auto j = s.input_index(t, c);
          ASSERT_LT(j, n);
          ASSERT_EQ(s.time_unit_of(j), t);
          ASSERT_EQ(s.channel_of(j), c);
          seen.insert(j);
        }
      }
      ASSERT_EQ(seen.size(), n) << n << "/" << k;
    }
  }
}

TEST(PhotonBudget, Boundary) {
  ProtocolParams p;
  p.mu = 100;
  p.n = 1000000;
  p.k = 10000;
  auto b = photon_budget(p);
  EXPECT_DOUBLE_EQ(b.photons_per_time_unit, 1.0);
  EXPECT_FALSE(b.valid);
  p.k = 1000;
  b = photon_budget(p);
  EXPECT_DOUBLE_EQ(b.photons_per_time_unit, 0.1);
  EXPECT_TRUE(b.valid);
  p.mu = 0.5;
  p.n = p.k = 64;
  EXPECT_DOUBLE_EQ(photon_budget(p).photons_per_time_unit, 0.5);
  EXPECT_TRUE(photon_budget(p).valid);
}

TEST(Ofdm, SingleToneAndZeros) {
  const std::vector<Complex> tone{1.0, 0.0};
  const auto sym = ofdm_encode(tone);
  EXPECT_NEAR(std::abs(sym.time_samples[0] - Complex(1, 0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(sym.time_samples[1] - Complex(-1, 0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(ofdm_decode(sym.time_samples, 1) - Complex(1, 0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(ofdm_decode(sym.time_samples, 2)), 0.0, 1e-15);

  const auto zero = ofdm_encode(std::vector<Complex>(4));
  for (auto v : zero.time_samples) EXPECT_EQ(v, Complex{});
  for (std::size_t q = 1; q <= 4; ++q) EXPECT_EQ(ofdm_decode(zero.time_samples, q), Complex{});
}

TEST(Ofdm, EncoderMatchesBruteForceSum) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto a = random_symbol(8, seed);
    const auto sym = ofdm_encode(a);
    const auto ref = brute_force_samples(a);
    for (std::size_t m = 0; m < 8; ++m) EXPECT_LT(std::abs(sym.time_samples[m] - ref[m]), 1e-12);
  }
}

TEST(Ofdm, RoundTripAndParseval) {
  for (std::size_t k : {1u, 2u, 4u, 8u, 16u, 64u}) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const auto a = random_symbol(k, 1000 * k + seed);
      const auto sym = ofdm_encode(a);
      double e_in = 0, e_out = 0;
      for (std::size_t q = 1; q <= k; ++q) {
        ASSERT_LE(std::abs(ofdm_decode(sym.time_samples, q) - a[q - 1]), 1e-12) << k;
        e_in += std::norm(a[q - 1]);
        e_out += std::norm(sym.time_samples[q - 1]);
      }
      ASSERT_NEAR(e_out / static_cast<double>(k), e_in, 1e-10);
    }
  }
}

TEST(Ofdm, DecodeAgainstBruteForceEncoder) {
  const auto a = random_symbol(16, 3);
  const auto samples = brute_force_samples(a);
  for (std::size_t q = 1; q <= 16; ++q) EXPECT_LE(std::abs(ofdm_decode(samples, q) - a[q - 1]), 1e-12);
}

TEST(Ofdm, Errors) {
  EXPECT_THROW(ofdm_encode(std::vector<Complex>{}), InvalidArgument);
  const std::vector<Complex> s(4);
  EXPECT_THROW(ofdm_decode(s, 0), InvalidArgument);
  EXPECT_THROW(ofdm_decode(s, 5), InvalidArgument);
}

// mu below 1 keeps mu k / n < 1 even at k = n.
ProtocolParams mux_params(std::size_t n, std::size_t k) {
  ProtocolParams p;
  p.mu = 0.5;
  p.nu = 0.98;
  p.p_dark = 1e-5;
  p.n = n;
  p.k = k;
  return p;
}

TEST(MultiplexedProtocol, TallyIdenticalAcrossChannelCounts) {
  const auto x = random_unit_vector(64, 1), y = random_unit_vector(64, 2);
  MultiplexOptions o;
  o.repetitions = 500;
  const auto ref = run_multiplexed_protocol(x, y, mux_params(64, 1), 9, o);
  for (std::size_t k : {2u, 4u, 8u, 16u, 32u, 64u}) {
    const auto run = run_multiplexed_protocol(x, y, mux_params(64, k), 9, o);
    EXPECT_EQ(run.tally, ref.tally) << k;
    EXPECT_EQ(run.communication_time, 64 / k * 500);
  }
}

TEST(MultiplexedProtocol, EmissionOrderKeyedRandomnessDiffersButAgreesStatistically) {
  const auto x = random_unit_vector(64, 3), y = random_unit_vector(64, 4);
  MultiplexOptions o;
  o.repetitions = 4000;
  o.randomness = RandomnessKey::kEmissionOrder;
  const auto k1 = run_multiplexed_protocol(x, y, mux_params(64, 1), 9, o);
  const auto k8 = run_multiplexed_protocol(x, y, mux_params(64, 8), 9, o);
  EXPECT_NE(k1.tally, k8.tally);
  // k = 1 emission order is the input order.
  o.randomness = RandomnessKey::kInputIndex;
  EXPECT_EQ(run_multiplexed_protocol(x, y, mux_params(64, 1), 9, o).tally, k1.tally);
  const double se = std::hypot(*k1.estimate.std_error, *k8.estimate.std_error);
  EXPECT_LE(std::abs(k1.estimate.e_hat - k8.estimate.e_hat), 4 * se);
}

TEST(MultiplexedProtocol, OfdmBackendMatchesFibers) {
  const auto x = random_unit_vector(64, 5), y = random_unit_vector(64, 6);
  MultiplexOptions o;
  o.repetitions = 300;
  const auto fibers = run_multiplexed_protocol(x, y, mux_params(64, 16), 2, o);
  o.backend = MuxBackend::kOfdm;
  const auto ofdm = run_multiplexed_protocol(x, y, mux_params(64, 16), 2, o);
  EXPECT_EQ(ofdm.tally, fibers.tally);
}

TEST(MultiplexedProtocol, EqualInputsEstimateNearZero) {
  const auto x = random_unit_vector(256, 7);
  auto p = mux_params(256, 16);
  p.nu = 1.0;
  p.p_dark = 0.0;
  MultiplexOptions o;
  o.repetitions = 20000;
  o.model = ClickModel::kLinearized;
  const auto run = run_multiplexed_protocol(x, x, p, 11, o);
  EXPECT_EQ(run.tally.s1, 0u);
  EXPECT_LE(std::abs(run.estimate.e_hat), 4 * *run.estimate.std_error);
}

TEST(MultiplexedProtocol, DefaultRepetitionsComeFromPlanner) {
  const auto x = random_unit_vector(64, 7), y = random_unit_vector(64, 8);
  const auto p = mux_params(64, 4);
  const auto run = run_multiplexed_protocol(x, y, p, 1);
  EXPECT_EQ(run.estimate.repetitions, required_repetitions(p));
  EXPECT_EQ(run.communication_time, 16 * required_repetitions(p));
}

TEST(MultiplexedProtocol, AssumedParametersShiftEstimate) {
  const auto x = random_unit_vector(64, 9), y = random_unit_vector(64, 10);
  const auto p = mux_params(64, 4);
  MultiplexOptions o;
  o.repetitions = 100;
  const auto honest = run_multiplexed_protocol(x, y, p, 3, o);
  auto wrong = p;
  wrong.mu = 2 * p.mu;
  o.assumed = wrong;
  const auto biased = run_multiplexed_protocol(x, y, p, 3, o);
  EXPECT_EQ(biased.tally, honest.tally);
  EXPECT_NEAR(2.0 - biased.estimate.e_hat, (2.0 - honest.estimate.e_hat) / 2, 1e-12);
}

TEST(MultiplexedProtocol, RejectsPhotonBudgetViolation) {
  const auto x = random_unit_vector(64, 1);
  auto p = mux_params(64, 16);
  p.mu = 4.0;  // 4 * 16 / 64 = 1
  EXPECT_THROW(run_multiplexed_protocol(x, x, p, 1), PhysicsViolation);
  p.mu = 1.0;
  p.nu = 0.4;
  EXPECT_THROW(run_multiplexed_protocol(x, x, p, 1), PhysicsViolation);
  p.nu = 0.9;
  EXPECT_THROW(run_multiplexed_protocol(x, random_unit_vector(32, 1), p, 1), DimensionMismatch);
}

}  // namespace
}  // namespace cfp
