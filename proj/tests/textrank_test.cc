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

#include "revmine/textrank.h"

#include <cmath>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include "revmine/errors.h"
#include "revmine/textproc.h"

namespace revmine {
namespace {

const StopwordList& Stop() { return StopwordList::English(); }

std::vector<std::vector<std::string>> Sents(
    std::initializer_list<const char*> lines) {
  std::vector<std::vector<std::string>> out;
  for (const char* l : lines) out.push_back(SplitOnSpaces(l));
  return out;
}

// Dense solve of x = (1-d)/N + d M x with dangling columns set to 1/N.
Eigen::VectorXd DirectPageRank(const Matrix& w, double d) {
  const int n = static_cast<int>(w.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    double out = 0;
    for (int i = 0; i < n; ++i) out += w[j][i];
    for (int i = 0; i < n; ++i) m(i, j) = out > 0 ? w[j][i] / out : 1.0 / n;
  }
  Eigen::MatrixXd a = Eigen::MatrixXd::Identity(n, n) - d * m;
  Eigen::VectorXd b = Eigen::VectorXd::Constant(n, (1 - d) / n);
  return a.fullPivLu().solve(b);
}

TEST(SentenceSimilarityTest, HandComputed) {
  auto s = Sents({"glaciers feed lakes .", "lakes feed rivers"});
  EXPECT_DOUBLE_EQ(SentenceSimilarity(s[0], s[1], Stop()),
                   2.0 / (2 * std::log(3.0)));
}

TEST(SentenceSimilarityTest, StopwordsAndPunctuationIgnored) {
  auto s = Sents({"the glaciers , the lakes", "the rivers , the seas"});
  EXPECT_EQ(SentenceSimilarity(s[0], s[1], Stop()), 0.0);
  // Single-word sentences have log 1 = 0 in the denominator.
  auto t = Sents({"glaciers", "glaciers melt"});
  EXPECT_EQ(SentenceSimilarity(t[0], t[1], Stop()), 0.0);
}

TEST(SimilarityMatrixTest, SymmetricZeroDiagonal) {
  auto s = Sents({"red fox runs far", "red fox sleeps", "blue whale sings",
                  "whale and fox"});
  Matrix w = SimilarityMatrix(s, Stop());
  for (size_t i = 0; i < w.size(); ++i) {
    EXPECT_EQ(w[i][i], 0.0);
    for (size_t j = 0; j < w.size(); ++j) {
      EXPECT_EQ(w[i][j], w[j][i]);
      EXPECT_EQ(w[i][j], i == j ? 0.0 : SentenceSimilarity(s[i], s[j], Stop()));
    }
  }
}

Matrix RandomMatrix(std::mt19937_64& rng, size_t n, double zero_frac) {
  std::uniform_real_distribution<double> u(0, 1);
  Matrix w(n, std::vector<double>(n, 0.0));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      if (u(rng) >= zero_frac) w[i][j] = w[j][i] = u(rng) * 3;
    }
  }
  return w;
}

TEST(WeightedPageRankTest, MatchesDirectSolve) {
  std::mt19937_64 rng(8);
  for (int iter = 0; iter < 50; ++iter) {
    Matrix w = RandomMatrix(rng, 3 + rng() % 15, iter % 3 ? 0.3 : 0.8);
    auto pr = WeightedPageRank(w, {.damping = 0.85, .tolerance = 1e-13,
                                   .max_iterations = 2000});
    ASSERT_TRUE(pr.converged);
    Eigen::VectorXd want = DirectPageRank(w, 0.85);
    for (size_t i = 0; i < w.size(); ++i) {
      ASSERT_NEAR(pr.scores[i], want[static_cast<int>(i)], 1e-10);
    }
  }
}

TEST(WeightedPageRankTest, DefaultStopsWithinTolerance) {
  std::mt19937_64 rng(9);
  for (int iter = 0; iter < 50; ++iter) {
    Matrix w = RandomMatrix(rng, 3 + rng() % 15, 0.4);
    auto pr = WeightedPageRank(w);
    ASSERT_TRUE(pr.converged);
    ASSERT_LT(pr.residual, 1e-6);
    ASSERT_LE(pr.iterations, 100u);
    double sum = 0;
    for (double x : pr.scores) sum += x;
    ASSERT_NEAR(sum, 1.0, 1e-9);
  }
}

TEST(WeightedPageRankTest, IterationCapReportsNotConverged) {
  std::mt19937_64 rng(10);
  Matrix w = RandomMatrix(rng, 8, 0.2);
  auto pr = WeightedPageRank(w, {.tolerance = 0, .max_iterations = 5});
  EXPECT_FALSE(pr.converged);
  EXPECT_EQ(pr.iterations, 5u);
}

TEST(WeightedPageRankTest, NoEdgesIsUniform) {
  Matrix w(4, std::vector<double>(4, 0.0));
  auto pr = WeightedPageRank(w);
  for (double x : pr.scores) EXPECT_DOUBLE_EQ(x, 0.25);
}

TEST(WeightedPageRankPropertyTest, ScalingWeightsLeavesRanksUnchanged) {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 50; ++iter) {
    Matrix w = RandomMatrix(rng, 3 + rng() % 10, 0.3);
    Matrix scaled = w;
    for (auto& row : scaled) {
      for (auto& v : row) v *= 7.5;
    }
    auto a = WeightedPageRank(w), b = WeightedPageRank(scaled);
    for (size_t i = 0; i < w.size(); ++i) {
      ASSERT_NEAR(a.scores[i], b.scores[i], 1e-12);
    }
  }
}

TEST(ArgmaxEarliestTest, TiesGoEarly) {
  std::vector<double> s = {0.1, 0.3, 0.3, 0.2};
  EXPECT_EQ(ArgmaxEarliest(s), 1u);
  std::vector<double> near = {0.3, 0.3 * (1 + 1e-14), 0.1};
  EXPECT_EQ(ArgmaxEarliest(near), 0u);
  std::vector<double> clear = {0.3, 0.31};
  EXPECT_EQ(ArgmaxEarliest(clear), 1u);
}

TEST(TextRankSelectTest, DisconnectedSentenceNotChosen) {
  auto s = Sents({"Glaciers feed the mountain lakes .",
                  "The mountain lakes feed rivers .",
                  "Parliament passed a budget ."});
  Matrix w = SimilarityMatrix(s, Stop());
  EXPECT_EQ(w[2][0], 0.0);
  EXPECT_EQ(w[2][1], 0.0);
  size_t pick = TextRankSelect(s, Stop(), 0);
  EXPECT_NE(pick, 2u);
  // The first two are symmetric, so the earlier wins.
  EXPECT_EQ(pick, 0u);
}

TEST(TextRankSelectTest, CentralSentenceWins) {
  auto s = Sents({"Volcanoes shape islands .",
                  "Volcanoes shape islands , reefs and lagoons over time .",
                  "Reefs protect lagoons .",
                  "Time erodes islands .",
                  "Lagoons host fish ."});
  Matrix w = SimilarityMatrix(s, Stop());
  Eigen::VectorXd direct = DirectPageRank(w, 0.85);
  Eigen::Index best;
  direct.maxCoeff(&best);
  EXPECT_EQ(best, 1);
  EXPECT_EQ(TextRankSelect(s, Stop(), 0), 1u);
}

TEST(TextRankSelectTest, ShortPassagesPickBySeed) {
  auto two = Sents({"One thing .", "Another thing ."});
  std::set<size_t> seen;
  for (uint64_t seed = 0; seed < 64; ++seed) {
    size_t pick = TextRankSelect(two, Stop(), seed);
    ASSERT_LT(pick, 2u);
    ASSERT_EQ(pick, TextRankSelect(two, Stop(), seed));
    seen.insert(pick);
  }
  EXPECT_EQ(seen.size(), 2u);
  auto one = Sents({"Only ."});
  EXPECT_EQ(TextRankSelect(one, Stop(), 3), 0u);
  EXPECT_THROW(TextRankSelect({}, Stop(), 0), InputError);
}

}  // namespace
}  // namespace revmine
