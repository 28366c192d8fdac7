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

#ifndef REVMINE_CORPUS_H_
#define REVMINE_CORPUS_H_

#include <cstdint>
#include <filesystem>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "revmine/miner.h"
#include "revmine/textproc.h"

namespace revmine {

// One example per (passage, summary) key after whitespace normalization.
// The survivor is the earliest by (timestamp, new_rev_id) and takes the
// slot of the key's first appearance.
std::vector<CorpusExample> Dedup(std::vector<CorpusExample> examples);

// Shortest representation that reads back to the same double, padded with
// zeros to at least six significant digits.
std::string FormatScore(double score);

// Fixed field order: id, page_id, page_title, old_rev_id, new_rev_id,
// timestamp, passage, summary, score. No trailing newline.
std::string ToJsonLine(const CorpusExample& example);
// Throws InputError on malformed records.
CorpusExample FromJsonLine(std::string_view line);

// Returns the number of records written; throws IoError on sink failure.
uint64_t WriteJsonl(std::ostream& sink, std::span<const CorpusExample> examples);
void WriteJsonlFile(const std::filesystem::path& path,
                    std::span<const CorpusExample> examples);
std::vector<CorpusExample> ReadJsonl(std::istream& in);
std::vector<CorpusExample> ReadJsonlFile(const std::filesystem::path& path);

// Shard of an example id, stable across runs.
size_t ShardOf(std::string_view id, size_t shards);
std::string ShardName(size_t index);  // part-00000.jsonl
// Writes part-00000.jsonl ... into dir (created if missing).
std::vector<std::filesystem::path> WriteShards(
    const std::filesystem::path& dir, std::span<const CorpusExample> examples,
    size_t shards);

struct SplitSpec {
  size_t valid_size = 4000;
  size_t test_size = 4000;
  uint64_t seed = 0;
};

struct CorpusSplit {
  std::vector<CorpusExample> train;
  std::vector<CorpusExample> valid;
  std::vector<CorpusExample> test;
};

// Seeded shuffle; the last test_size go to test, the valid_size before them
// to valid, the rest to train. Throws SizingError unless
// valid_size + test_size < examples.size().
CorpusSplit SplitCorpus(std::vector<CorpusExample> examples,
                        const SplitSpec& spec);

struct CorpusStats {
  uint64_t example_count = 0;
  double avg_input_sentences = 0;
  double avg_input_words = 0;
  double avg_output_sentences = 0;
  double avg_output_words = 0;
};

// Lengths come from re-splitting the stored text into sentences and
// counting its tokens.
CorpusStats ComputeCorpusStats(std::span<const CorpusExample> examples,
                               const NonbreakingPrefixes& prefixes);

}  // namespace revmine

#endif  // REVMINE_CORPUS_H_
