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

#include "revmine/corpus.h"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <random>
#include <tuple>
#include <unordered_map>

#include <json.hpp>

#include "revmine/errors.h"
#include "revmine/hash.h"
#include "revmine/random.h"
#include "revmine/utf8.h"

namespace revmine {

using nlohmann::json;

std::vector<CorpusExample> Dedup(std::vector<CorpusExample> examples) {
  std::vector<CorpusExample> out;
  std::unordered_map<std::string, size_t> slot;
  for (auto& ex : examples) {
    std::string passage = utf8::CollapseSpace(ex.passage);
    std::string key = std::to_string(passage.size()) + ':' + passage;
    key += utf8::CollapseSpace(ex.summary);
    auto [it, inserted] = slot.try_emplace(std::move(key), out.size());
    if (inserted) {
      out.push_back(std::move(ex));
      continue;
    }
    CorpusExample& kept = out[it->second];
    if (std::tie(ex.timestamp, ex.new_rev_id) <
        std::tie(kept.timestamp, kept.new_rev_id)) {
      kept = std::move(ex);
    }
  }
  return out;
}

std::string FormatScore(double score) {
  if (score == 0) return "0.000000";
  char buf[400];
  auto res = std::to_chars(buf, buf + sizeof(buf), score,
                           std::chars_format::fixed);
  std::string s(buf, res.ptr);
  int significant = 0;
  bool leading = true;
  for (char c : s) {
    if (c < '0' || c > '9') continue;
    if (leading && c == '0') continue;
    leading = false;
    ++significant;
  }
  if (significant < 6) {
    if (s.find('.') == std::string::npos) s.push_back('.');
    s.append(6 - significant, '0');
  }
  return s;
}

namespace {

std::string Quote(const std::string& s) {
  return json(s).dump(-1, ' ', false, json::error_handler_t::replace);
}

}  // namespace

std::string ToJsonLine(const CorpusExample& ex) {
  std::string out = "{\"id\":";
  out += Quote(ex.id);
  out += ",\"page_id\":" + std::to_string(ex.page_id);
  out += ",\"page_title\":" + Quote(ex.page_title);
  out += ",\"old_rev_id\":" + std::to_string(ex.old_rev_id);
  out += ",\"new_rev_id\":" + std::to_string(ex.new_rev_id);
  out += ",\"timestamp\":" + Quote(FormatTimestamp(ex.timestamp));
  out += ",\"passage\":" + Quote(ex.passage);
  out += ",\"summary\":" + Quote(ex.summary);
  out += ",\"score\":" + FormatScore(ex.score);
  out += "}";
  return out;
}

CorpusExample FromJsonLine(std::string_view line) {
  try {
    json j = json::parse(line);
    CorpusExample ex;
    ex.id = j.at("id").get<std::string>();
    ex.page_id = j.at("page_id").get<uint64_t>();
    ex.page_title = j.at("page_title").get<std::string>();
    ex.old_rev_id = j.at("old_rev_id").get<uint64_t>();
    ex.new_rev_id = j.at("new_rev_id").get<uint64_t>();
    auto ts = ParseTimestamp(j.at("timestamp").get<std::string>());
    if (!ts) throw InputError("bad timestamp");
    ex.timestamp = *ts;
    ex.passage = j.at("passage").get<std::string>();
    ex.summary = j.at("summary").get<std::string>();
    ex.score = j.at("score").get<double>();
    return ex;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed corpus record: ") + e.what());
  }
}

uint64_t WriteJsonl(std::ostream& sink,
                    std::span<const CorpusExample> examples) {
  uint64_t written = 0;
  for (const auto& ex : examples) {
    std::string line = ToJsonLine(ex);
    line.push_back('\n');
    sink.write(line.data(), static_cast<std::streamsize>(line.size()));
    if (!sink) throw IoError("write failed", written);
    ++written;
  }
  sink.flush();
  if (!sink) throw IoError("flush failed", written);
  return written;
}

void WriteJsonlFile(const std::filesystem::path& path,
                    std::span<const CorpusExample> examples) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string(), 0);
  WriteJsonl(out, examples);
}

std::vector<CorpusExample> ReadJsonl(std::istream& in) {
  std::vector<CorpusExample> out;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      out.push_back(FromJsonLine(line));
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

std::vector<CorpusExample> ReadJsonlFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  return ReadJsonl(in);
}

size_t ShardOf(std::string_view id, size_t shards) {
  return shards <= 1 ? 0 : Fnv1a64(id) % shards;
}

std::string ShardName(size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "part-%05zu.jsonl", index);
  return buf;
}

std::vector<std::filesystem::path> WriteShards(
    const std::filesystem::path& dir, std::span<const CorpusExample> examples,
    size_t shards) {
  if (shards == 0) throw ConfigError("shard count must be positive");
  std::filesystem::create_directories(dir);
  std::vector<std::vector<CorpusExample>> routed(shards);
  for (const auto& ex : examples) routed[ShardOf(ex.id, shards)].push_back(ex);
  std::vector<std::filesystem::path> paths;
  for (size_t k = 0; k < shards; ++k) {
    paths.push_back(dir / ShardName(k));
    WriteJsonlFile(paths.back(), routed[k]);
  }
  return paths;
}

CorpusSplit SplitCorpus(std::vector<CorpusExample> examples,
                        const SplitSpec& spec) {
  const size_t held_out = spec.valid_size + spec.test_size;
  if (examples.size() <= held_out) {
    throw SizingError("corpus of " + std::to_string(examples.size()) +
                      " examples is too small; need at least " +
                      std::to_string(held_out + 1));
  }
  std::mt19937_64 rng(spec.seed);
  SeededShuffle(std::span<CorpusExample>(examples), rng);
  CorpusSplit split;
  const size_t train_end = examples.size() - held_out;
  const size_t valid_end = train_end + spec.valid_size;
  auto move_range = [&](size_t b, size_t e, std::vector<CorpusExample>* dst) {
    dst->assign(std::make_move_iterator(examples.begin() + b),
                std::make_move_iterator(examples.begin() + e));
  };
  move_range(0, train_end, &split.train);
  move_range(train_end, valid_end, &split.valid);
  move_range(valid_end, examples.size(), &split.test);
  return split;
}

CorpusStats ComputeCorpusStats(std::span<const CorpusExample> examples,
                               const NonbreakingPrefixes& prefixes) {
  CorpusStats stats;
  stats.example_count = examples.size();
  if (examples.empty()) return stats;
  double in_sent = 0, in_words = 0, out_sent = 0, out_words = 0;
  for (const auto& ex : examples) {
    in_sent += SplitSentences(ex.passage, prefixes).size();
    in_words += SplitOnSpaces(ex.passage).size();
    out_sent += SplitSentences(ex.summary, prefixes).size();
    out_words += SplitOnSpaces(ex.summary).size();
  }
  const double n = static_cast<double>(examples.size());
  stats.avg_input_sentences = in_sent / n;
  stats.avg_input_words = in_words / n;
  stats.avg_output_sentences = out_sent / n;
  stats.avg_output_words = out_words / n;
  return stats;
}

}  // namespace revmine
