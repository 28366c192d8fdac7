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

#ifndef REVMINE_TEXTRANK_H_
#define REVMINE_TEXTRANK_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "revmine/textproc.h"

namespace revmine {

using Matrix = std::vector<std::vector<double>>;

struct TextRankOptions {
  double damping = 0.85;
  double tolerance = 1e-6;
  size_t max_iterations = 100;
};

struct PageRankResult {
  std::vector<double> scores;
  size_t iterations = 0;
  // max |x_k - x_{k-1}| at the last iteration.
  double residual = 0;
  bool converged = false;
};

// Shared content words over (log|a| + log|b|), where |x| counts the
// non-punctuation tokens. Zero when there is no overlap or a log term is 0.
double SentenceSimilarity(std::span<const std::string> a,
                          std::span<const std::string> b,
                          const StopwordList& stopwords);

// Symmetric with a zero diagonal.
Matrix SimilarityMatrix(std::span<const std::vector<std::string>> sentences,
                        const StopwordList& stopwords);

// x_i = (1-d)/N + d * sum_j w_ji / out_j * x_j, starting from uniform.
// Rows without outgoing weight spread their mass uniformly.
PageRankResult WeightedPageRank(const Matrix& weights,
                                const TextRankOptions& options = {});

// Highest score, earliest index on ties (scores within 1e-12 relative).
size_t ArgmaxEarliest(std::span<const double> scores);

// Index of the selected sentence. With fewer than three sentences the
// pick is uniform random under seed. Throws InputError on empty input.
size_t TextRankSelect(std::span<const std::vector<std::string>> sentences,
                      const StopwordList& stopwords, uint64_t seed,
                      const TextRankOptions& options = {});

}  // namespace revmine

#endif  // REVMINE_TEXTRANK_H_
