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

#include "revmine/evaluate.h"

#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "revmine/corpus.h"
#include "revmine/errors.h"
#include "revmine/random.h"
#include "revmine/utf8.h"

namespace revmine {

using nlohmann::json;

const std::string& Lead1(std::span<const std::string> sentences) {
  if (sentences.empty()) throw InputError("empty passage");
  return sentences.front();
}

Baseline ParseBaseline(std::string_view name) {
  if (name == "lead1") return Baseline::kLead1;
  if (name == "textrank") return Baseline::kTextRank;
  throw ConfigError("unknown system '" + std::string(name) + "'");
}

std::vector<std::string> RunBaseline(Baseline system,
                                     std::span<const CorpusExample> examples,
                                     const TextResources& resources,
                                     uint64_t seed,
                                     const TextRankOptions& textrank) {
  std::vector<std::string> out;
  out.reserve(examples.size());
  for (size_t i = 0; i < examples.size(); ++i) {
    auto sentences = SplitSentences(examples[i].passage, *resources.prefixes);
    if (system == Baseline::kLead1) {
      out.push_back(Lead1(sentences));
      continue;
    }
    if (sentences.empty()) throw InputError("empty passage");
    std::vector<std::vector<std::string>> tokenized;
    for (const auto& s : sentences) tokenized.push_back(SplitOnSpaces(s));
    size_t pick = TextRankSelect(tokenized, *resources.stopwords,
                                 SplitMix64(seed + i), textrank);
    out.push_back(sentences[pick]);
  }
  return out;
}

namespace {

std::vector<std::string> EvalTokens(std::string_view text,
                                    const EvalConfig& config) {
  auto tokens = SplitOnSpaces(text);
  if (config.lowercase) {
    for (auto& t : tokens) t = utf8::Lowercase(t);
  }
  return tokens;
}

json IntervalJson(const ConfidenceInterval& ci) {
  return json{{"mean", ci.mean}, {"lo", ci.lo}, {"hi", ci.hi}};
}

}  // namespace

std::array<RougeTriple, 3> ScorePair(std::string_view candidate,
                                     std::string_view reference,
                                     const EvalConfig& config) {
  auto c = EvalTokens(candidate, config);
  auto r = EvalTokens(reference, config);
  return {RougeN(c, r, 1, config.beta), RougeN(c, r, 2, config.beta),
          RougeL(c, r, config.beta)};
}

RougeReport Evaluate(std::span<const std::string> candidates,
                     std::span<const std::string> references,
                     const EvalConfig& config) {
  if (candidates.size() != references.size()) {
    throw InputError("length mismatch: " + std::to_string(candidates.size()) +
                     " candidates vs " + std::to_string(references.size()) +
                     " references");
  }
  if (candidates.empty()) throw InputError("nothing to evaluate");
  RougeReport report;
  report.n_examples = candidates.size();
  report.bootstrap_samples = config.bootstrap_samples;
  report.per_example.reserve(candidates.size());
  for (size_t i = 0; i < candidates.size(); ++i) {
    report.per_example.push_back(ScorePair(candidates[i], references[i], config));
  }
  std::vector<double> values(candidates.size());
  for (size_t m = 0; m < 3; ++m) {
    // Each cell gets its own stream so cells do not depend on each other.
    auto column = [&](double RougeTriple::*field, uint64_t salt) {
      for (size_t i = 0; i < values.size(); ++i) {
        values[i] = report.per_example[i][m].*field;
      }
      return BootstrapCi(values, config.bootstrap_samples, config.level,
                         SplitMix64(config.seed ^ (m * 3 + salt)));
    };
    report.metrics[m].recall = column(&RougeTriple::recall, 0);
    report.metrics[m].precision = column(&RougeTriple::precision, 1);
    report.metrics[m].f1 = column(&RougeTriple::f1, 2);
  }
  return report;
}

std::string ReportJson(const RougeReport& report) {
  json j;
  j["n_examples"] = report.n_examples;
  j["bootstrap_samples"] = report.bootstrap_samples;
  for (size_t m = 0; m < 3; ++m) {
    const MetricSummary& s = report.metrics[m];
    j[kRougeMetrics[m]] = {{"recall", IntervalJson(s.recall)},
                           {"precision", IntervalJson(s.precision)},
                           {"f1", IntervalJson(s.f1)}};
  }
  return j.dump(2);
}

std::string ReportTable(const RougeReport& report) {
  std::string out;
  char line[160];
  std::snprintf(line, sizeof(line), "%-8s %-9s %7s %17s\n", "metric", "field",
                "score", "95% interval");
  out += line;
  for (size_t m = 0; m < 3; ++m) {
    const MetricSummary& s = report.metrics[m];
    const std::pair<const char*, const ConfidenceInterval*> rows[] = {
        {"R", &s.recall}, {"P", &s.precision}, {"F1", &s.f1}};
    for (const auto& [name, ci] : rows) {
      std::snprintf(line, sizeof(line), "%-8s %-9s %7.2f   [%6.2f, %6.2f]\n",
                    kRougeMetrics[m], name, ci->mean * 100, ci->lo * 100,
                    ci->hi * 100);
      out += line;
    }
  }
  std::snprintf(line, sizeof(line), "examples: %zu  bootstrap samples: %zu\n",
                report.n_examples, report.bootstrap_samples);
  out += line;
  return out;
}

std::vector<std::string> ReadSummaries(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  size_t first = 0;
  while (first < lines.size() && lines[first].empty()) ++first;
  if (first == lines.size() || lines[first][0] != '{') return lines;
  std::vector<std::string> out;
  for (size_t i = first; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    // Only "summary" is required, so other systems' outputs load too.
    auto j = nlohmann::json::parse(lines[i], nullptr, false);
    if (!j.is_object() || !j.contains("summary") || !j["summary"].is_string()) {
      throw InputError(path.string() + " line " + std::to_string(i + 1) +
                       ": expected an object with a \"summary\" string");
    }
    out.push_back(j["summary"].get<std::string>());
  }
  return out;
}

}  // namespace revmine
