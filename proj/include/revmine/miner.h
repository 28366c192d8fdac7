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

#ifndef REVMINE_MINER_H_
#define REVMINE_MINER_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "revmine/dump_reader.h"
#include "revmine/revdiff.h"
#include "revmine/textproc.h"
#include "revmine/wikitext.h"

namespace revmine {

struct MinerConfig {
  // Minimum overlap rate a kept pair must reach.
  double lambda = 0.6;
  // Length gates on the summary sentence; 0 switches a gate off.
  size_t min_summary_content_tokens = 3;
  size_t max_summary_tokens = 120;

  // Throws ConfigError when lambda lies outside [0, 1].
  void Validate() const;
};

// Shared content words over the sentence's content-word count, kept as an
// exact ratio.
struct OverlapScore {
  size_t shared = 0;
  size_t sentence_size = 1;

  double value() const {
    return static_cast<double>(shared) / static_cast<double>(sentence_size);
  }
  bool AtLeast(double lambda) const { return value() >= lambda; }
  bool operator==(const OverlapScore& o) const {
    return shared * o.sentence_size == o.shared * sentence_size;
  }
  auto operator<=>(const OverlapScore& o) const {
    return shared * o.sentence_size <=> o.shared * sentence_size;
  }
};

// nullopt when the sentence has no content words ("unscorable"); the ratio
// is never formed with a zero denominator.
std::optional<OverlapScore> ComputeOverlapScore(const TokenSet& sentence,
                                                const TokenSet& passage);

struct CandidatePair {
  TokenizedText sentence;
  TokenizedText passage;
  OverlapScore score;
  size_t passage_index = 0;
  size_t sentence_index = 0;
};

// Highest-scoring passage for the sentence; ties go to the lowest index.
std::optional<CandidatePair> BestPassage(const TokenizedText& sentence,
                                         std::span<const TokenizedText> passages,
                                         const StopwordList& stopwords);

struct MineStats {
  uint64_t pages = 0;
  uint64_t revision_pairs = 0;
  // Sentences that had a best passage, before the threshold.
  uint64_t candidates = 0;
  uint64_t kept = 0;
  std::map<std::string, uint64_t> skips;

  void Skip(const std::string& reason, uint64_t n = 1) { skips[reason] += n; }
  void Merge(const MineStats& other);
};

// Aligns every added sentence that passes the length gates with its best
// added passage and keeps pairs scoring at least lambda, in sentence order.
std::vector<CandidatePair> MineDelta(const RevisionDelta& delta,
                                     const StopwordList& stopwords,
                                     const MinerConfig& config,
                                     MineStats* stats = nullptr);

struct CorpusExample {
  std::string id;
  uint64_t page_id = 0;
  std::string page_title;
  uint64_t old_rev_id = 0;
  uint64_t new_rev_id = 0;
  Timestamp timestamp{};
  std::string passage;  // space-joined tokens
  std::string summary;  // space-joined tokens
  double score = 0;
  // Position of the summary among the revision's added sentences. Orders
  // output; not serialized.
  size_t sentence_position = 0;

  bool operator==(const CorpusExample& o) const {
    return id == o.id && page_id == o.page_id && page_title == o.page_title &&
           old_rev_id == o.old_rev_id && new_rev_id == o.new_rev_id &&
           timestamp == o.timestamp && passage == o.passage &&
           summary == o.summary && score == o.score;
  }
};

// Stable identifier over (page_id, new_rev_id, summary).
std::string ExampleId(uint64_t page_id, uint64_t new_rev_id,
                      std::string_view summary);

// Every adjacent revision pair of the page: strip, diff, align, wrap with
// provenance. Anomalies in a single revision are tallied in stats and never
// abort the page.
std::vector<CorpusExample> MinePage(const PageHistory& page,
                                    const TextResources& resources,
                                    const MinerConfig& config,
                                    const StripOptions& strip = {},
                                    MineStats* stats = nullptr);

}  // namespace revmine

#endif  // REVMINE_MINER_H_
