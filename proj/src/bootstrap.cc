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
#include <random>
#include <vector>

#include "revmine/errors.h"
#include "revmine/random.h"

namespace revmine {

ConfidenceInterval BootstrapCi(std::span<const double> scores, size_t samples,
                               double level, uint64_t seed) {
  if (scores.empty()) throw SizingError("bootstrap needs at least one score");
  if (samples == 0) throw ConfigError("bootstrap needs at least one sample");
  if (!(level > 0 && level < 1)) throw ConfigError("level must be in (0, 1)");

  auto [min_it, max_it] = std::minmax_element(scores.begin(), scores.end());
  const double lo_bound = *min_it, hi_bound = *max_it;
  // Float summation can leave a constant series a few ulps off its value.
  auto mean_of = [&](double sum) {
    return std::clamp(sum / static_cast<double>(scores.size()), lo_bound,
                      hi_bound);
  };

  double total = 0;
  for (double s : scores) total += s;
  ConfidenceInterval ci;
  ci.mean = mean_of(total);

  std::mt19937_64 rng(seed);
  std::vector<double> means(samples);
  for (size_t b = 0; b < samples; ++b) {
    double sum = 0;
    for (size_t k = 0; k < scores.size(); ++k) {
      sum += scores[UniformBelow(rng, scores.size())];
    }
    means[b] = mean_of(sum);
  }
  std::sort(means.begin(), means.end());
  const double tail = (1 - level) / 2;
  const auto at = [&](double q) {
    // The epsilon keeps 0.975 * 1000 from flooring to 974.
    size_t idx = static_cast<size_t>(std::floor(q * samples + 1e-9));
    return means[std::min(idx, samples - 1)];
  };
  ci.lo = std::min(at(tail), ci.mean);
  ci.hi = std::max(at(1 - tail), ci.mean);
  return ci;
}

}  // namespace revmine
