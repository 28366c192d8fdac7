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

#ifndef REVMINE_AUDIT_H_
#define REVMINE_AUDIT_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "revmine/dump_reader.h"
#include "revmine/miner.h"

namespace revmine {

enum class Label { kUnlabeled, kGood, kUnsupported };
std::string_view LabelName(Label label);
// Accepts "good" and "unsupported" only; throws InputError otherwise.
Label ParseLabel(std::string_view name);

struct AuditItem {
  std::string item_id;
  std::string passage;
  std::string summary;
  double score = 0;
  Label label = Label::kUnlabeled;
  std::optional<Timestamp> labeled_at;

  bool operator==(const AuditItem&) const = default;
};

struct AuditState {
  std::vector<AuditItem> items;
  // Scores of every candidate in the pool the sample came from; corpus
  // sizes in the report are counted over these.
  std::vector<double> pool_scores;
  std::string pool_source;
  uint64_t seed = 0;

  bool operator==(const AuditState&) const = default;
};

enum class SamplingMode { kUniform, kStratified };

// Uniform sample without replacement of min(n, pool size) items in seeded
// order. Stratified mode deals round-robin from ten equal-width score bins.
// Throws SizingError when n is 0 or the pool is empty.
std::vector<AuditItem> SampleCandidates(std::span<const CorpusExample> pool,
                                        size_t n, uint64_t seed,
                                        SamplingMode mode = SamplingMode::kUniform);

AuditState NewAuditState(std::span<const CorpusExample> pool, size_t n,
                         uint64_t seed,
                         SamplingMode mode = SamplingMode::kUniform);

struct ThresholdRow {
  double lambda = 0;
  size_t good_count = 0;
  size_t unsupported_count = 0;
  std::optional<double> good_rate;  // unset when nothing is labeled
  size_t corpus_size_at_lambda = 0;
};

inline const std::vector<double> kDefaultReportLambdas = {0.5, 0.6, 0.7};

std::vector<ThresholdRow> ThresholdReport(const AuditState& state,
                                          std::span<const double> lambdas);

// "0.5,0.6,0.7"; throws InputError on junk or values outside [0, 1].
std::vector<double> ParseLambdaList(std::string_view text);

std::string AuditStateToJson(const AuditState& state);
AuditState AuditStateFromJson(std::string_view text);  // throws InputError

// Applies a label to state in place. Repeating the current label leaves the
// item untouched. Throws NotFoundError for unknown ids.
const AuditItem& ApplyLabel(AuditState* state, std::string_view item_id,
                            Label label, Timestamp now);

// Owns an AuditState persisted to a JSON file. Label updates are
// serialized and written through (temp file + rename) before returning;
// reads may run concurrently.
class AuditStore {
 public:
  static AuditStore Create(const std::filesystem::path& path, AuditState state);
  static AuditStore Open(const std::filesystem::path& path);

  AuditStore(AuditStore&& other) noexcept;

  AuditState Snapshot() const;
  AuditItem Label(std::string_view item_id, revmine::Label label);
  AuditItem Label(std::string_view item_id, revmine::Label label,
                  Timestamp now);
  std::optional<AuditItem> NextUnlabeled() const;
  std::vector<ThresholdRow> Report(std::span<const double> lambdas) const;
  const std::filesystem::path& path() const { return path_; }

 private:
  AuditStore(std::filesystem::path path, AuditState state);
  void Persist() const;

  std::filesystem::path path_;
  AuditState state_;
  mutable std::shared_mutex mu_;
};

void WriteFileAtomically(const std::filesystem::path& path,
                         std::string_view content);

}  // namespace revmine

#endif  // REVMINE_AUDIT_H_
