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

#ifndef REVMINE_EVALUATE_H_
#define REVMINE_EVALUATE_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "revmine/bootstrap.h"
#include "revmine/miner.h"
#include "revmine/rouge.h"
#include "revmine/textproc.h"
#include "revmine/textrank.h"

namespace revmine {

// First sentence. Throws InputError("empty passage") on an empty list.
const std::string& Lead1(std::span<const std::string> sentences);

enum class Baseline { kLead1, kTextRank };
Baseline ParseBaseline(std::string_view name);  // throws ConfigError

// One summary per example, from the example's own passage. TextRank draws
// its per-example fallback seed from (seed, example index).
std::vector<std::string> RunBaseline(Baseline system,
                                     std::span<const CorpusExample> examples,
                                     const TextResources& resources,
                                     uint64_t seed,
                                     const TextRankOptions& textrank = {});

struct EvalConfig {
  size_t bootstrap_samples = 1000;
  double level = 0.95;
  uint64_t seed = 0;
  double beta = 1.0;
  // Both sides are lowercased before matching; tokens are split on spaces.
  bool lowercase = true;
};

struct MetricSummary {
  ConfidenceInterval recall;
  ConfidenceInterval precision;
  ConfidenceInterval f1;
};

inline constexpr std::array<const char*, 3> kRougeMetrics = {
    "rouge1", "rouge2", "rougeL"};

struct RougeReport {
  // Indexed like kRougeMetrics.
  std::array<MetricSummary, 3> metrics;
  std::vector<std::array<RougeTriple, 3>> per_example;
  size_t n_examples = 0;
  size_t bootstrap_samples = 0;
};

std::array<RougeTriple, 3> ScorePair(std::string_view candidate,
                                     std::string_view reference,
                                     const EvalConfig& config = {});

// Throws InputError on length mismatch or empty input.
RougeReport Evaluate(std::span<const std::string> candidates,
                     std::span<const std::string> references,
                     const EvalConfig& config = {});

// Per-metric means and bounds in [0, 1]; per-example triples omitted.
std::string ReportJson(const RougeReport& report);
// Aligned table, scores x100.
std::string ReportTable(const RougeReport& report);

// A summaries file is JSONL (the "summary" field) or plain text, one
// summary per line. Format is decided by the first non-empty line.
std::vector<std::string> ReadSummaries(const std::filesystem::path& path);

}  // namespace revmine

#endif  // REVMINE_EVALUATE_H_
