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

#ifndef REVMINE_ROUGE_H_
#define REVMINE_ROUGE_H_

#include <span>
#include <string>

namespace revmine {

struct RougeTriple {
  double recall = 0;
  double precision = 0;
  double f1 = 0;

  bool operator==(const RougeTriple&) const = default;
};

// (1 + beta^2) P R / (R + beta^2 P); zero when both are zero.
double FScore(double precision, double recall, double beta = 1.0);

// Clipped n-gram overlap. Empty n-gram sets give 0 for that component.
// Throws ConfigError when n is 0.
RougeTriple RougeN(std::span<const std::string> candidate,
                   std::span<const std::string> reference, size_t n,
                   double beta = 1.0);

size_t LcsLength(std::span<const std::string> a,
                 std::span<const std::string> b);

RougeTriple RougeL(std::span<const std::string> candidate,
                   std::span<const std::string> reference, double beta = 1.0);

}  // namespace revmine

#endif  // REVMINE_ROUGE_H_
