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

#include "revmine/errors.h"
#include "revmine/random.h"

namespace revmine {

namespace {

size_t WordCount(std::span<const std::string> tokens) {
  size_t n = 0;
  for (const auto& t : tokens) n += IsPunctuation(t) ? 0 : 1;
  return n;
}

double Similarity(const TokenSet& a, size_t a_len, const TokenSet& b,
                  size_t b_len) {
  if (a_len < 2 || b_len < 2) return 0.0;
  const size_t shared = a.IntersectionSize(b);
  if (shared == 0) return 0.0;
  return static_cast<double>(shared) /
         (std::log(static_cast<double>(a_len)) +
          std::log(static_cast<double>(b_len)));
}

}  // namespace

double SentenceSimilarity(std::span<const std::string> a,
                          std::span<const std::string> b,
                          const StopwordList& stopwords) {
  return Similarity(ContentTokens(a, stopwords), WordCount(a),
                    ContentTokens(b, stopwords), WordCount(b));
}

Matrix SimilarityMatrix(std::span<const std::vector<std::string>> sentences,
                        const StopwordList& stopwords) {
  const size_t n = sentences.size();
  std::vector<TokenSet> sets;
  std::vector<size_t> lens;
  for (const auto& s : sentences) {
    sets.push_back(ContentTokens(s, stopwords));
    lens.push_back(WordCount(s));
  }
  Matrix w(n, std::vector<double>(n, 0.0));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      w[i][j] = w[j][i] = Similarity(sets[i], lens[i], sets[j], lens[j]);
    }
  }
  return w;
}

PageRankResult WeightedPageRank(const Matrix& weights,
                                const TextRankOptions& options) {
  const size_t n = weights.size();
  PageRankResult result;
  if (n == 0) {
    result.converged = true;
    return result;
  }
  const double d = options.damping;
  const double base = (1 - d) / static_cast<double>(n);
  std::vector<double> out(n, 0.0);
  for (size_t j = 0; j < n; ++j) {
    for (size_t i = 0; i < n; ++i) out[j] += weights[j][i];
  }
  std::vector<double> x(n, 1.0 / static_cast<double>(n)), next(n);
  while (result.iterations < options.max_iterations) {
    double dangling = 0;
    for (size_t j = 0; j < n; ++j) {
      if (out[j] <= 0) dangling += x[j];
    }
    for (size_t i = 0; i < n; ++i) {
      double acc = dangling / static_cast<double>(n);
      for (size_t j = 0; j < n; ++j) {
        if (out[j] > 0 && weights[j][i] != 0) acc += weights[j][i] / out[j] * x[j];
      }
      next[i] = base + d * acc;
    }
    double delta = 0;
    for (size_t i = 0; i < n; ++i) delta = std::max(delta, std::abs(next[i] - x[i]));
    x.swap(next);
    ++result.iterations;
    result.residual = delta;
    if (delta < options.tolerance) {
      result.converged = true;
      break;
    }
  }
  result.scores = std::move(x);
  return result;
}

size_t ArgmaxEarliest(std::span<const double> scores) {
  size_t best = 0;
  for (size_t i = 1; i < scores.size(); ++i) {
    if (scores[i] > scores[best] + 1e-12 * std::abs(scores[best])) best = i;
  }
  return best;
}

size_t TextRankSelect(std::span<const std::vector<std::string>> sentences,
                      const StopwordList& stopwords, uint64_t seed,
                      const TextRankOptions& options) {
  if (sentences.empty()) throw InputError("empty passage");
  if (sentences.size() < 3) {
    std::mt19937_64 rng(seed);
    return UniformBelow(rng, sentences.size());
  }
  PageRankResult pr =
      WeightedPageRank(SimilarityMatrix(sentences, stopwords), options);
  return ArgmaxEarliest(pr.scores);
}

}  // namespace revmine
