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

#include "revmine/rouge.h"

#include <algorithm>
#include <unordered_map>
#include <vector>

#include "revmine/errors.h"

namespace revmine {

namespace {

std::unordered_map<std::string, size_t> NgramCounts(
    std::span<const std::string> tokens, size_t n) {
  std::unordered_map<std::string, size_t> counts;
  if (tokens.size() < n) return counts;
  for (size_t i = 0; i + n <= tokens.size(); ++i) {
    // Length-prefixed so token contents cannot forge a boundary.
    std::string key;
    for (size_t k = 0; k < n; ++k) {
      key += std::to_string(tokens[i + k].size());
      key.push_back(':');
      key += tokens[i + k];
    }
    ++counts[key];
  }
  return counts;
}

RougeTriple Triple(size_t hits, size_t cand_total, size_t ref_total,
                   double beta) {
  RougeTriple t;
  t.recall = ref_total ? static_cast<double>(hits) / ref_total : 0.0;
  t.precision = cand_total ? static_cast<double>(hits) / cand_total : 0.0;
  t.f1 = FScore(t.precision, t.recall, beta);
  return t;
}

}  // namespace

double FScore(double precision, double recall, double beta) {
  if (precision == 0 && recall == 0) return 0.0;
  const double b2 = beta * beta;
  return (1 + b2) * precision * recall / (recall + b2 * precision);
}

RougeTriple RougeN(std::span<const std::string> candidate,
                   std::span<const std::string> reference, size_t n,
                   double beta) {
  if (n == 0) throw ConfigError("ROUGE-N needs n >= 1");
  auto cand = NgramCounts(candidate, n);
  auto ref = NgramCounts(reference, n);
  size_t hits = 0;
  for (const auto& [gram, c] : cand) {
    auto it = ref.find(gram);
    if (it != ref.end()) hits += std::min(c, it->second);
  }
  const size_t cand_total = candidate.size() >= n ? candidate.size() - n + 1 : 0;
  const size_t ref_total = reference.size() >= n ? reference.size() - n + 1 : 0;
  return Triple(hits, cand_total, ref_total, beta);
}

size_t LcsLength(std::span<const std::string> a,
                 std::span<const std::string> b) {
  if (a.empty() || b.empty()) return 0;
  std::vector<size_t> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
  for (size_t i = 1; i <= a.size(); ++i) {
    for (size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1
                                    : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

RougeTriple RougeL(std::span<const std::string> candidate,
                   std::span<const std::string> reference, double beta) {
  return Triple(LcsLength(candidate, reference), candidate.size(),
                reference.size(), beta);
}

}  // namespace revmine
