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

#ifndef REVMINE_PIPELINE_H_
#define REVMINE_PIPELINE_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "revmine/dump_reader.h"
#include "revmine/miner.h"
#include "revmine/textproc.h"
#include "revmine/wikitext.h"

namespace revmine {

struct MineOptions {
  std::filesystem::path dump;
  Compression compression = Compression::kAuto;
  // JSONL file, or a directory of part files when shards > 0.
  std::filesystem::path out;
  size_t shards = 0;
  size_t workers = 0;  // 0 = hardware concurrency
  size_t batch_pages = 256;
  bool dedup = true;
  uint64_t seed = 0;  // mining is deterministic; recorded for the record

  MinerConfig miner;
  StripOptions strip;
  IngestPolicy policy;
  ReaderOptions reader;
  TextResources resources;
  // Where the resources came from ("builtin" or a path).
  std::string stopwords_source = "builtin";
  std::string prefixes_source = "builtin";
};

struct RunManifest {
  std::string tool_version;
  // Flattened settings, in a stable order.
  std::map<std::string, std::string> config;
  std::string input_path;
  uint64_t input_size = 0;
  std::string input_head_hash;  // first 64 KiB

  uint64_t pages_seen = 0;
  uint64_t pages_kept = 0;
  uint64_t revisions = 0;
  uint64_t skipped_revisions = 0;
  uint64_t peak_buffered_bytes = 0;
  MineStats mine;
  uint64_t examples_written = 0;
  uint64_t duplicates_removed = 0;
  std::vector<std::string> outputs;
  double wall_time_seconds = 0;
};

// Ingest, strip, diff, align, dedup, write. Output order is
// (page_id, new_rev_id, sentence position) whatever the worker count.
// Writes the manifest next to the output. Throws IngestError/ConfigError/
// IoError.
RunManifest RunMine(const MineOptions& options);

std::filesystem::path ManifestPath(const std::filesystem::path& out);
std::string ManifestJson(const RunManifest& manifest,
                         bool include_wall_time = true);

}  // namespace revmine

#endif  // REVMINE_PIPELINE_H_
