// Copyright 2026 The Revmine Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "revmine/bootstrap.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "revmine/errors.h"
#include "revmine/random.h"

namespace revmine {
namespace {

TEST(BootstrapTest, ConstantInputCollapses) {
  std::vector<double> scores(37, 0.3);
  auto ci = BootstrapCi(scores, 500, 0.95, 1);
  EXPECT_EQ(ci.mean, 0.3);
  EXPECT_EQ(ci.lo, 0.3);
  EXPECT_EQ(ci.hi, 0.3);
}

TEST(BootstrapTest, SingleScore) {
  std::vector<double> scores = {0.42};
  auto ci = BootstrapCi(scores);
  EXPECT_EQ(ci.mean, 0.42);
  EXPECT_EQ(ci.lo, 0.42);
  EXPECT_EQ(ci.hi, 0.42);
}

TEST(BootstrapTest, BadArguments) {
  std::vector<double> none;
  std::vector<double> one = {1.0};
  EXPECT_THROW(BootstrapCi(none), SizingError);
  EXPECT_THROW(BootstrapCi(one, 0), ConfigError);
  EXPECT_THROW(BootstrapCi(one, 10, 1.0), ConfigError);
  EXPECT_THROW(BootstrapCi(one, 10, 0.0), ConfigError);
}

std::vector<double> Bernoulli1000() {
  std::vector<double> s(1000, 0.0);
  std::fill(s.begin(), s.begin() + 500, 1.0);
  return s;
}

TEST(BootstrapTest, BernoulliNearNormalApproximation) {
  auto scores = Bernoulli1000();
  auto ci = BootstrapCi(scores, 1000, 0.95, 0);
  EXPECT_EQ(ci.mean, 0.5);
  // 1.96 * sqrt(0.25 / 1000) = 0.031.
  EXPECT_NEAR(ci.lo, 0.469, 0.006);
  EXPECT_NEAR(ci.hi, 0.531, 0.006);
}

TEST(BootstrapTest, SameSeedSameInterval) {
  auto scores = Bernoulli1000();
  auto a = BootstrapCi(scores, 200, 0.9, 7);
  auto b = BootstrapCi(scores, 200, 0.9, 7);
  EXPECT_EQ(a.lo, b.lo);
  EXPECT_EQ(a.hi, b.hi);
}

// Recomputes the interval from the same resample draws, keeping every
// replicate mean exactly as a rational count/n before picking percentiles.
TEST(BootstrapOracleTest, PercentilesFromExactReplicateMeans) {
  std::mt19937_64 gen(99);
  for (int iter = 0; iter < 20; ++iter) {
    const size_t n = 1 + gen() % 40;
    std::vector<int> ints(n);
    for (auto& v : ints) v = static_cast<int>(gen() % 11);
    std::vector<double> scores(ints.begin(), ints.end());
    for (auto& s : scores) s /= 10;
    const size_t samples = 100 + gen() % 400;
    const uint64_t seed = gen();

    std::mt19937_64 rng(seed);
    std::vector<long> sums(samples);
    for (auto& sum : sums) {
      sum = 0;
      for (size_t k = 0; k < n; ++k) sum += ints[UniformBelow(rng, n)];
    }
    std::sort(sums.begin(), sums.end());
    const long lo_sum = sums[static_cast<size_t>(samples * 25 / 1000)];
    const long hi_sum =
        sums[std::min<size_t>(samples - 1, samples * 975 / 1000)];

    auto ci = BootstrapCi(scores, samples, 0.95, seed);
    const long total = std::accumulate(ints.begin(), ints.end(), 0L);
    const double mean = static_cast<double>(total) / (10.0 * n);
    ASSERT_NEAR(ci.mean, mean, 1e-12);
    ASSERT_NEAR(ci.lo, std::min(mean, lo_sum / (10.0 * n)), 1e-12);
    ASSERT_NEAR(ci.hi, std::max(mean, hi_sum / (10.0 * n)), 1e-12);
  }
}

TEST(BootstrapPropertyTest, IntervalBracketsMeanWithinRange) {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> u(0, 1);
  for (int iter = 0; iter < 100; ++iter) {
    std::vector<double> s(1 + gen() % 50);
    for (auto& v : s) v = u(gen);
    auto ci = BootstrapCi(s, 200, 0.5 + 0.49 * u(gen), gen());
    auto [mn, mx] = std::minmax_element(s.begin(), s.end());
    ASSERT_LE(*mn, ci.lo);
    ASSERT_LE(ci.lo, ci.mean);
    ASSERT_LE(ci.mean, ci.hi);
    ASSERT_LE(ci.hi, *mx);
  }
}

}  // namespace
}  // namespace revmine
