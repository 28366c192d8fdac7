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

#include "revmine/pipeline.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <thread>
#include <tuple>

#include <json.hpp>

#include "revmine/audit.h"
#include "revmine/corpus.h"
#include "revmine/errors.h"
#include "revmine/hash.h"

namespace revmine {

using nlohmann::json;

namespace {

std::string CompressionName(Compression c) {
  switch (c) {
    case Compression::kNone:
      return "none";
    case Compression::kGzip:
      return "gz";
    case Compression::kBzip2:
      return "bz2";
    case Compression::kAuto:
      break;
  }
  return "auto";
}

std::string HeadHash(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::string head(64 * 1024, '\0');
  in.read(head.data(), static_cast<std::streamsize>(head.size()));
  head.resize(static_cast<size_t>(in.gcount()));
  return Hex64(Fnv1a64(head));
}

std::string Num(double v) {
  return json(v).dump();
}

std::map<std::string, std::string> ConfigSnapshot(const MineOptions& o) {
  std::string namespaces;
  for (int ns : o.policy.allowed_namespaces) {
    if (!namespaces.empty()) namespaces += ",";
    namespaces += std::to_string(ns);
  }
  return {
      {"lambda", Num(o.miner.lambda)},
      {"min_summary_content_tokens",
       std::to_string(o.miner.min_summary_content_tokens)},
      {"max_summary_tokens", std::to_string(o.miner.max_summary_tokens)},
      {"min_passage_chars", std::to_string(o.strip.min_passage_chars)},
      {"namespaces", namespaces},
      {"keep_redirects", o.policy.keep_redirects ? "true" : "false"},
      {"compression", CompressionName(o.compression)},
      {"shards", std::to_string(o.shards)},
      {"dedup", o.dedup ? "true" : "false"},
      {"seed", std::to_string(o.seed)},
      {"stopwords", o.stopwords_source},
      {"stopwords_hash", Hex64(o.resources.stopwords->Fingerprint())},
      {"prefixes", o.prefixes_source},
      {"prefixes_hash", Hex64(o.resources.prefixes->Fingerprint())},
  };
}

struct PageResult {
  std::vector<CorpusExample> examples;
  MineStats stats;
};

// Mines a batch of pages with up to `workers` threads; results stay in
// page order.
std::vector<PageResult> MineBatch(const std::vector<PageHistory>& pages,
                                  const MineOptions& o, size_t workers) {
  std::vector<PageResult> results(pages.size());
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i = next++; i < pages.size(); i = next++) {
      results[i].examples = MinePage(pages[i], o.resources, o.miner, o.strip,
                                     &results[i].stats);
    }
  };
  const size_t threads = std::min(workers, pages.size());
  if (threads <= 1) {
    work();
    return results;
  }
  std::vector<std::thread> pool;
  for (size_t t = 0; t < threads; ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  return results;
}

}  // namespace

std::filesystem::path ManifestPath(const std::filesystem::path& out) {
  std::filesystem::path p = out;
  if (p.has_filename()) {
    p += ".manifest.json";
  } else {
    p = p.parent_path();
    p += ".manifest.json";
  }
  return p;
}

RunManifest RunMine(const MineOptions& o) {
  const auto start = std::chrono::steady_clock::now();
  o.miner.Validate();
  if (o.out.empty()) throw ConfigError("no output path");

  RunManifest m;
  m.tool_version = REVMINE_VERSION;
  m.config = ConfigSnapshot(o);
  m.input_path = o.dump.string();
  std::error_code ec;
  m.input_size = std::filesystem::file_size(o.dump, ec);
  if (ec) throw InputError("cannot stat " + o.dump.string());
  m.input_head_hash = HeadHash(o.dump);

  const size_t workers =
      o.workers ? o.workers : std::max(1u, std::thread::hardware_concurrency());
  const size_t batch = std::max<size_t>(1, o.batch_pages);

  DumpFile dump(o.dump, o.compression, o.reader);
  std::vector<CorpusExample> examples;
  std::vector<PageHistory> pages;
  auto flush = [&] {
    for (PageResult& r : MineBatch(pages, o, workers)) {
      m.mine.Merge(r.stats);
      std::move(r.examples.begin(), r.examples.end(),
                std::back_inserter(examples));
    }
    pages.clear();
  };
  while (auto page = dump.reader().Next()) {
    ++m.pages_seen;
    if (!FilterPage(*page, o.policy)) continue;
    ++m.pages_kept;
    pages.push_back(std::move(*page));
    if (pages.size() >= batch) flush();
  }
  flush();
  const IngestStats& ingest = dump.reader().stats();
  m.revisions = ingest.revisions;
  m.skipped_revisions = ingest.skipped_revisions;
  m.peak_buffered_bytes = ingest.peak_buffered_bytes;

  std::stable_sort(examples.begin(), examples.end(),
                   [](const CorpusExample& a, const CorpusExample& b) {
                     return std::tie(a.page_id, a.new_rev_id, a.sentence_position) <
                            std::tie(b.page_id, b.new_rev_id, b.sentence_position);
                   });
  const size_t before = examples.size();
  if (o.dedup) examples = Dedup(std::move(examples));
  m.duplicates_removed = before - examples.size();
  m.examples_written = examples.size();

  if (o.shards > 0) {
    for (const auto& p : WriteShards(o.out, examples, o.shards)) {
      m.outputs.push_back(p.string());
    }
  } else {
    WriteJsonlFile(o.out, examples);
    m.outputs.push_back(o.out.string());
  }
  m.wall_time_seconds = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
  WriteFileAtomically(ManifestPath(o.out), ManifestJson(m));
  return m;
}

std::string ManifestJson(const RunManifest& m, bool include_wall_time) {
  json config = json::object();
  for (const auto& [k, v] : m.config) config[k] = v;
  json skips = json::object();
  for (const auto& [k, v] : m.mine.skips) skips[k] = v;
  json root;
  root["tool_version"] = m.tool_version;
  root["config"] = std::move(config);
  root["input"] = {{"path", m.input_path},
                   {"size", m.input_size},
                   {"head_hash", m.input_head_hash}};
  root["counts"] = {{"pages_seen", m.pages_seen},
                    {"pages_kept", m.pages_kept},
                    {"revisions", m.revisions},
                    {"skipped_revisions", m.skipped_revisions},
                    {"revision_pairs", m.mine.revision_pairs},
                    {"candidates", m.mine.candidates},
                    {"kept", m.mine.kept},
                    {"duplicates_removed", m.duplicates_removed},
                    {"examples_written", m.examples_written},
                    {"peak_buffered_bytes", m.peak_buffered_bytes}};
  root["skips"] = std::move(skips);
  root["outputs"] = m.outputs;
  if (include_wall_time) root["wall_time_seconds"] = m.wall_time_seconds;
  return root.dump(2) + "\n";
}

}  // namespace revmine
