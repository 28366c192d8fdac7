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

#include "revmine/audit.h"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <mutex>
#include <numeric>
#include <random>
#include <unordered_set>

#include <json.hpp>

#include "revmine/errors.h"
#include "revmine/random.h"

namespace revmine {

using nlohmann::json;

std::string_view LabelName(Label label) {
  switch (label) {
    case Label::kGood:
      return "good";
    case Label::kUnsupported:
      return "unsupported";
    case Label::kUnlabeled:
      break;
  }
  return "unlabeled";
}

Label ParseLabel(std::string_view name) {
  if (name == "good") return Label::kGood;
  if (name == "unsupported") return Label::kUnsupported;
  throw InputError("label must be 'good' or 'unsupported', got '" +
                   std::string(name) + "'");
}

namespace {

Label ParseStoredLabel(std::string_view name) {
  if (name == "unlabeled") return Label::kUnlabeled;
  return ParseLabel(name);
}

AuditItem ToItem(const CorpusExample& ex) {
  AuditItem item;
  item.item_id = ex.id;
  item.passage = ex.passage;
  item.summary = ex.summary;
  item.score = ex.score;
  return item;
}

}  // namespace

std::vector<AuditItem> SampleCandidates(std::span<const CorpusExample> pool,
                                        size_t n, uint64_t seed,
                                        SamplingMode mode) {
  if (n == 0) throw SizingError("sample size must be at least 1");
  if (pool.empty()) throw SizingError("candidate pool is empty");
  std::mt19937_64 rng(seed);
  std::vector<size_t> order(pool.size());
  std::iota(order.begin(), order.end(), 0);
  SeededShuffle(std::span<size_t>(order), rng);

  std::vector<size_t> picked;
  const size_t want = std::min(n, pool.size());
  if (mode == SamplingMode::kUniform) {
    picked.assign(order.begin(), order.begin() + want);
  } else {
    std::vector<std::vector<size_t>> bins(10);
    for (size_t idx : order) {
      double s = std::clamp(pool[idx].score, 0.0, 1.0);
      bins[std::min<size_t>(9, static_cast<size_t>(s * 10))].push_back(idx);
    }
    std::vector<size_t> cursor(bins.size(), 0);
    while (picked.size() < want) {
      for (size_t b = 0; b < bins.size() && picked.size() < want; ++b) {
        if (cursor[b] < bins[b].size()) picked.push_back(bins[b][cursor[b]++]);
      }
    }
  }

  std::vector<AuditItem> items;
  std::unordered_set<std::string> seen;
  for (size_t idx : picked) {
    AuditItem item = ToItem(pool[idx]);
    std::string base = item.item_id;
    for (size_t k = 2; !seen.insert(item.item_id).second; ++k) {
      item.item_id = base + "-" + std::to_string(k);
    }
    items.push_back(std::move(item));
  }
  return items;
}

AuditState NewAuditState(std::span<const CorpusExample> pool, size_t n,
                         uint64_t seed, SamplingMode mode) {
  AuditState state;
  state.items = SampleCandidates(pool, n, seed, mode);
  state.pool_scores.reserve(pool.size());
  for (const auto& ex : pool) state.pool_scores.push_back(ex.score);
  state.seed = seed;
  return state;
}

std::vector<ThresholdRow> ThresholdReport(const AuditState& state,
                                          std::span<const double> lambdas) {
  std::vector<ThresholdRow> rows;
  for (double lambda : lambdas) {
    ThresholdRow row;
    row.lambda = lambda;
    for (const auto& item : state.items) {
      if (item.score < lambda) continue;
      if (item.label == Label::kGood) ++row.good_count;
      if (item.label == Label::kUnsupported) ++row.unsupported_count;
    }
    const size_t labeled = row.good_count + row.unsupported_count;
    if (labeled > 0) {
      row.good_rate = static_cast<double>(row.good_count) / labeled;
    }
    row.corpus_size_at_lambda = static_cast<size_t>(
        std::count_if(state.pool_scores.begin(), state.pool_scores.end(),
                      [&](double s) { return s >= lambda; }));
    rows.push_back(row);
  }
  return rows;
}

std::vector<double> ParseLambdaList(std::string_view text) {
  std::vector<double> out;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view part = text.substr(pos, comma - pos);
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    double v = 0;
    auto res = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || res.ec != std::errc() ||
        res.ptr != part.data() + part.size() || !(v >= 0 && v <= 1)) {
      throw InputError("bad lambda '" + std::string(part) + "'");
    }
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

std::string AuditStateToJson(const AuditState& state) {
  json items = json::array();
  for (const auto& item : state.items) {
    json j = {{"item_id", item.item_id},
              {"passage", item.passage},
              {"summary", item.summary},
              {"score", item.score},
              {"label", LabelName(item.label)}};
    j["labeled_at"] =
        item.labeled_at ? json(FormatTimestamp(*item.labeled_at)) : json();
    items.push_back(std::move(j));
  }
  json root = {{"version", 1},
               {"seed", state.seed},
               {"pool_source", state.pool_source},
               {"pool_scores", state.pool_scores},
               {"items", std::move(items)}};
  return root.dump(2, ' ', false, json::error_handler_t::replace) + "\n";
}

AuditState AuditStateFromJson(std::string_view text) {
  try {
    json root = json::parse(text);
    AuditState state;
    state.seed = root.at("seed").get<uint64_t>();
    state.pool_source = root.value("pool_source", "");
    state.pool_scores = root.at("pool_scores").get<std::vector<double>>();
    for (const auto& j : root.at("items")) {
      AuditItem item;
      item.item_id = j.at("item_id").get<std::string>();
      item.passage = j.at("passage").get<std::string>();
      item.summary = j.at("summary").get<std::string>();
      item.score = j.at("score").get<double>();
      item.label = ParseStoredLabel(j.at("label").get<std::string>());
      if (j.contains("labeled_at") && !j["labeled_at"].is_null()) {
        auto ts = ParseTimestamp(j["labeled_at"].get<std::string>());
        if (!ts) throw InputError("bad labeled_at");
        item.labeled_at = *ts;
      }
      state.items.push_back(std::move(item));
    }
    return state;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed audit state: ") + e.what());
  }
}

const AuditItem& ApplyLabel(AuditState* state, std::string_view item_id,
                            Label label, Timestamp now) {
  if (label == Label::kUnlabeled) throw InputError("cannot clear a label");
  for (auto& item : state->items) {
    if (item.item_id != item_id) continue;
    if (item.label != label) {
      item.label = label;
      item.labeled_at = now;
    }
    return item;
  }
  throw NotFoundError("no item '" + std::string(item_id) + "'");
}

void WriteFileAtomically(const std::filesystem::path& path,
                         std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp.string(), 0);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw IoError("write failed on " + tmp.string(), 0);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("rename failed: " + ec.message(), 0);
}

AuditStore::AuditStore(std::filesystem::path path, AuditState state)
    : path_(std::move(path)), state_(std::move(state)) {}

AuditStore::AuditStore(AuditStore&& other) noexcept
    : path_(std::move(other.path_)), state_(std::move(other.state_)) {}

AuditStore AuditStore::Create(const std::filesystem::path& path,
                              AuditState state) {
  AuditStore store(path, std::move(state));
  store.Persist();
  return store;
}

AuditStore AuditStore::Open(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return AuditStore(path, AuditStateFromJson(text));
}

AuditState AuditStore::Snapshot() const {
  std::shared_lock lock(mu_);
  return state_;
}

AuditItem AuditStore::Label(std::string_view item_id, revmine::Label label) {
  return Label(item_id, label,
               std::chrono::floor<std::chrono::seconds>(
                   std::chrono::system_clock::now()));
}

AuditItem AuditStore::Label(std::string_view item_id, revmine::Label label,
                            Timestamp now) {
  std::unique_lock lock(mu_);
  auto it = std::find_if(state_.items.begin(), state_.items.end(),
                         [&](const AuditItem& i) { return i.item_id == item_id; });
  if (it == state_.items.end()) {
    throw NotFoundError("no item '" + std::string(item_id) + "'");
  }
  const AuditItem before = *it;
  const AuditItem updated = ApplyLabel(&state_, item_id, label, now);
  if (updated == before) return updated;
  try {
    Persist();
  } catch (...) {
    *it = before;
    throw;
  }
  return updated;
}

std::optional<AuditItem> AuditStore::NextUnlabeled() const {
  std::shared_lock lock(mu_);
  for (const auto& item : state_.items) {
    if (item.label == revmine::Label::kUnlabeled) return item;
  }
  return std::nullopt;
}

std::vector<ThresholdRow> AuditStore::Report(
    std::span<const double> lambdas) const {
  std::shared_lock lock(mu_);
  return ThresholdReport(state_, lambdas);
}

void AuditStore::Persist() const {
  WriteFileAtomically(path_, AuditStateToJson(state_));
}

}  // namespace revmine
