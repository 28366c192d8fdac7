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

#ifndef REVMINE_DUMP_READER_H_
#define REVMINE_DUMP_READER_H_

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace revmine {

using Timestamp = std::chrono::sys_seconds;

// Accepts "YYYY-MM-DDThh:mm:ssZ" (the form MediaWiki exports use).
std::optional<Timestamp> ParseTimestamp(std::string_view iso);
std::string FormatTimestamp(Timestamp ts);

struct RevisionSnapshot {
  uint64_t revision_id = 0;
  Timestamp timestamp{};
  std::string raw_text;
  bool is_minor = false;
  std::string comment;
};

// One article and its revisions, sorted ascending by (timestamp, id).
struct PageHistory {
  uint64_t page_id = 0;
  std::string title;
  int ns = 0;
  bool is_redirect = false;
  std::vector<RevisionSnapshot> revisions;
};

enum class Compression { kAuto, kNone, kGzip, kBzip2 };

// "auto", "none", "gz"/"gzip", "bz2"/"bzip2". Throws ConfigError.
Compression ParseCompression(std::string_view name);

struct IngestPolicy {
  std::set<int> allowed_namespaces{0};
  bool keep_redirects = false;
};

bool FilterPage(const PageHistory& page, const IngestPolicy& policy);

struct RevisionPair {
  const RevisionSnapshot* older;
  const RevisionSnapshot* newer;
};

// Consecutive pairs in sort order; empty for fewer than two revisions.
std::vector<RevisionPair> AdjacentRevisionPairs(const PageHistory& page);

// Sorts revisions by (timestamp, revision_id) and drops repeated ids.
void NormalizeRevisionOrder(PageHistory* page);

struct IngestStats {
  uint64_t pages = 0;
  uint64_t revisions = 0;
  // Revisions dropped for an unparsable timestamp or a repeated id.
  uint64_t skipped_revisions = 0;
  uint64_t bytes_read = 0;
  // High-water mark of page data held by the reader at once.
  uint64_t peak_buffered_bytes = 0;
};

struct ReaderOptions {
  size_t chunk_bytes = 1 << 20;
};

// Streaming reader over a MediaWiki XML export. Pages come out one at a
// time in dump order; memory is bounded by the largest page history plus
// one input chunk. Unknown elements are ignored.
class DumpReader {
 public:
  // source must outlive the reader. Throws ConfigError when the
  // compression flag disagrees with the stream or names an unsupported
  // format.
  DumpReader(std::istream& source, Compression compression,
             ReaderOptions options = {});
  ~DumpReader();
  DumpReader(DumpReader&&) noexcept;
  DumpReader& operator=(DumpReader&&) noexcept;

  // Next page in dump order, or nullopt at end of input. Throws IngestError
  // on malformed XML.
  std::optional<PageHistory> Next();

  const IngestStats& stats() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Owns the file stream behind a DumpReader.
class DumpFile {
 public:
  DumpFile(const std::filesystem::path& path, Compression compression,
           ReaderOptions options = {});
  DumpReader& reader() { return *reader_; }

 private:
  std::unique_ptr<std::istream> stream_;
  std::unique_ptr<DumpReader> reader_;
};

}  // namespace revmine

#endif  // REVMINE_DUMP_READER_H_
