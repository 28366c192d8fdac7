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

#ifndef REVMINE_BOOTSTRAP_H_
#define REVMINE_BOOTSTRAP_H_

#include <cstdint>
#include <span>

namespace revmine {

struct ConfidenceInterval {
  double mean = 0;
  double lo = 0;
  double hi = 0;
};

// Percentile bootstrap over resampled example indices. Throws SizingError
// on empty input and ConfigError on bad samples/level.
ConfidenceInterval BootstrapCi(std::span<const double> scores,
                               size_t samples = 1000, double level = 0.95,
                               uint64_t seed = 0);

}  // namespace revmine

#endif  // REVMINE_BOOTSTRAP_H_
