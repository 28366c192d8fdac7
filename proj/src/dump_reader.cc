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

#include "revmine/dump_reader.h"

#include <algorithm>
#include <charconv>
#include <cstring>
#include <deque>
#include <fstream>
#include <unordered_set>

#include <boost/iostreams/concepts.hpp>
#include <boost/iostreams/filter/bzip2.hpp>
#include <boost/iostreams/filter/gzip.hpp>
#include <boost/iostreams/filtering_stream.hpp>
#include <expat.h>

#include "revmine/errors.h"

namespace revmine {

std::optional<Timestamp> ParseTimestamp(std::string_view iso) {
  // YYYY-MM-DDThh:mm:ssZ
  if (iso.size() != 20 || iso[4] != '-' || iso[7] != '-' || iso[10] != 'T' ||
      iso[13] != ':' || iso[16] != ':' || iso[19] != 'Z') {
    return std::nullopt;
  }
  auto field = [&](size_t pos, size_t len, int* out) {
    const char* first = iso.data() + pos;
    const char* last = first + len;
    auto [ptr, ec] = std::from_chars(first, last, *out);
    return ec == std::errc() && ptr == last;
  };
  int y, mo, d, h, mi, s;
  if (!field(0, 4, &y) || !field(5, 2, &mo) || !field(8, 2, &d) ||
      !field(11, 2, &h) || !field(14, 2, &mi) || !field(17, 2, &s)) {
    return std::nullopt;
  }
  using namespace std::chrono;
  year_month_day ymd{year{y}, month{static_cast<unsigned>(mo)},
                     day{static_cast<unsigned>(d)}};
  if (!ymd.ok() || h > 23 || mi > 59 || s > 60) return std::nullopt;
  return sys_days{ymd} + hours{h} + minutes{mi} + seconds{s};
}

std::string FormatTimestamp(Timestamp ts) {
  using namespace std::chrono;
  auto days = floor<std::chrono::days>(ts);
  year_month_day ymd{days};
  hh_mm_ss hms{ts - days};
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02d:%02d:%02dZ",
                static_cast<int>(ymd.year()), static_cast<unsigned>(ymd.month()),
                static_cast<unsigned>(ymd.day()),
                static_cast<int>(hms.hours().count()),
                static_cast<int>(hms.minutes().count()),
                static_cast<int>(hms.seconds().count()));
  return buf;
}

Compression ParseCompression(std::string_view name) {
  if (name == "auto") return Compression::kAuto;
  if (name == "none") return Compression::kNone;
  if (name == "gz" || name == "gzip") return Compression::kGzip;
  if (name == "bz2" || name == "bzip2") return Compression::kBzip2;
  throw ConfigError("unknown compression '" + std::string(name) + "'");
}

bool FilterPage(const PageHistory& page, const IngestPolicy& policy) {
  return policy.allowed_namespaces.contains(page.ns) &&
         (policy.keep_redirects || !page.is_redirect);
}

std::vector<RevisionPair> AdjacentRevisionPairs(const PageHistory& page) {
  std::vector<RevisionPair> pairs;
  const auto& revs = page.revisions;
  for (size_t i = 1; i < revs.size(); ++i) {
    pairs.push_back({&revs[i - 1], &revs[i]});
  }
  return pairs;
}

void NormalizeRevisionOrder(PageHistory* page) {
  auto& revs = page->revisions;
  std::stable_sort(revs.begin(), revs.end(),
                   [](const RevisionSnapshot& a, const RevisionSnapshot& b) {
                     if (a.timestamp != b.timestamp)
                       return a.timestamp < b.timestamp;
                     return a.revision_id < b.revision_id;
                   });
  std::unordered_set<uint64_t> seen;
  std::erase_if(revs, [&](const RevisionSnapshot& r) {
    return !seen.insert(r.revision_id).second;
  });
}

namespace {

namespace io = boost::iostreams;

// Replays the sniffed header bytes, then continues with the raw stream.
class ReplaySource : public io::source {
 public:
  ReplaySource(std::string head, std::istream* in)
      : state_(std::make_shared<State>(State{std::move(head), 0, in})) {}

  std::streamsize read(char* s, std::streamsize n) {
    State& st = *state_;
    std::streamsize done = 0;
    if (st.pos < st.head.size()) {
      size_t take = std::min<size_t>(n, st.head.size() - st.pos);
      std::memcpy(s, st.head.data() + st.pos, take);
      st.pos += take;
      done = static_cast<std::streamsize>(take);
    }
    if (done < n && *st.in) {
      st.in->read(s + done, n - done);
      done += st.in->gcount();
    }
    return done == 0 ? -1 : done;
  }

 private:
  struct State {
    std::string head;
    size_t pos;
    std::istream* in;
  };
  std::shared_ptr<State> state_;
};

bool StartsWith(const std::string& data, std::string_view magic) {
  return data.size() >= magic.size() &&
         std::memcmp(data.data(), magic.data(), magic.size()) == 0;
}

Compression Detect(const std::string& head) {
  if (StartsWith(head, "\x1f\x8b")) return Compression::kGzip;
  if (StartsWith(head, "BZh")) return Compression::kBzip2;
  if (StartsWith(head, std::string_view("\xfd" "7zXZ\0", 6)))
    throw ConfigError("unsupported compression: xz");
  if (StartsWith(head, "\x28\xb5\x2f\xfd"))
    throw ConfigError("unsupported compression: zstd");
  if (StartsWith(head, "7z\xbc\xaf\x27\x1c"))
    throw ConfigError("unsupported compression: 7z");
  if (StartsWith(head, "PK\x03\x04"))
    throw ConfigError("unsupported compression: zip");
  return Compression::kNone;
}

const char* Name(Compression c) {
  switch (c) {
    case Compression::kGzip:
      return "gzip";
    case Compression::kBzip2:
      return "bzip2";
    case Compression::kNone:
      return "none";
    case Compression::kAuto:
      break;
  }
  return "auto";
}

enum class Field {
  kNone,
  kTitle,
  kNs,
  kPageId,
  kRevId,
  kTimestamp,
  kComment,
  kText,
};

template <typename Int>
bool ParseInt(const std::string& s, Int* out) {
  size_t b = s.find_first_not_of(" \t\r\n");
  size_t e = s.find_last_not_of(" \t\r\n");
  if (b == std::string::npos) return false;
  auto [ptr, ec] = std::from_chars(s.data() + b, s.data() + e + 1, *out);
  return ec == std::errc() && ptr == s.data() + e + 1;
}

}  // namespace

struct DumpReader::Impl {
  Impl(std::istream& source, Compression compression, ReaderOptions opts)
      : options(opts) {
    std::string head(8, '\0');
    source.read(head.data(), head.size());
    head.resize(source.gcount());
    Compression detected = Detect(head);
    if (compression != Compression::kAuto && compression != detected) {
      throw ConfigError(std::string("compression flag '") + Name(compression) +
                        "' does not match stream magic (" + Name(detected) +
                        ")");
    }
    if (detected == Compression::kGzip) {
      input.push(io::gzip_decompressor());
    } else if (detected == Compression::kBzip2) {
      input.push(io::bzip2_decompressor());
    }
    input.push(ReplaySource(std::move(head), &source));

    parser = XML_ParserCreate(nullptr);
    XML_SetUserData(parser, this);
    XML_SetElementHandler(parser, &Impl::OnStart, &Impl::OnEnd);
    XML_SetCharacterDataHandler(parser, &Impl::OnText);
    buffer.resize(std::max<size_t>(options.chunk_bytes, 64));
  }

  ~Impl() { XML_ParserFree(parser); }

  static void OnStart(void* data, const XML_Char* name, const XML_Char** attrs) {
    static_cast<Impl*>(data)->Start(name, attrs);
  }
  static void OnEnd(void* data, const XML_Char* name) {
    static_cast<Impl*>(data)->End(name);
  }
  static void OnText(void* data, const XML_Char* s, int len) {
    static_cast<Impl*>(data)->Text(s, len);
  }

  void Start(std::string_view name, const XML_Char** attrs) {
    std::string_view parent =
        stack.empty() ? std::string_view() : std::string_view(stack.back());
    stack.emplace_back(name);
    if (stack.size() == 1) {
      if (name != "mediawiki") {
        Fail("unexpected root element <" + std::string(name) + ">");
      }
      return;
    }
    field = Field::kNone;
    if (parent == "mediawiki" && name == "page") {
      page.emplace();
      page_bytes = 0;
    } else if (!page) {
      return;
    } else if (parent == "page") {
      if (name == "revision") {
        rev.emplace();
        rev_time_ok = false;
      } else if (name == "redirect") {
        page->is_redirect = true;
      } else if (name == "title") {
        field = Field::kTitle;
      } else if (name == "ns") {
        field = Field::kNs;
      } else if (name == "id") {
        field = Field::kPageId;
      }
    } else if (parent == "revision" && rev) {
      if (name == "minor") {
        rev->is_minor = true;
      } else if (name == "id") {
        field = Field::kRevId;
      } else if (name == "timestamp") {
        field = Field::kTimestamp;
      } else if (name == "comment") {
        field = Field::kComment;
      } else if (name == "text") {
        // <text deleted="deleted"/> carries no content and reads as "".
        (void)attrs;
        field = Field::kText;
      }
    }
    text.clear();
  }

  void End(std::string_view name) {
    if (field != Field::kNone) Assign();
    field = Field::kNone;
    text.clear();
    if (!stack.empty()) stack.pop_back();
    if (name == "revision" && rev && page && stack.size() == 2) {
      ++stats.revisions;
      if (rev_time_ok) {
        page->revisions.push_back(std::move(*rev));
      } else {
        ++stats.skipped_revisions;
      }
      rev.reset();
    } else if (name == "page" && page && stack.size() == 1) {
      size_t before = page->revisions.size();
      NormalizeRevisionOrder(&*page);
      stats.skipped_revisions += before - page->revisions.size();
      ++stats.pages;
      queued_bytes += page_bytes;
      ready.emplace_back(std::move(*page), page_bytes);
      page.reset();
      page_bytes = 0;
    }
  }

  void Text(const XML_Char* s, int len) {
    if (field == Field::kNone) return;
    text.append(s, len);
    if (page) {
      page_bytes += len;
      stats.peak_buffered_bytes =
          std::max(stats.peak_buffered_bytes, queued_bytes + page_bytes);
    }
  }

  void Assign() {
    switch (field) {
      case Field::kTitle:
        page->title = text;
        break;
      case Field::kNs: {
        int ns = 0;
        if (ParseInt(text, &ns)) page->ns = ns;
        break;
      }
      case Field::kPageId: {
        uint64_t id = 0;
        if (ParseInt(text, &id)) page->page_id = id;
        break;
      }
      case Field::kRevId: {
        uint64_t id = 0;
        if (ParseInt(text, &id)) rev->revision_id = id;
        break;
      }
      case Field::kTimestamp:
        if (auto ts = ParseTimestamp(text)) {
          rev->timestamp = *ts;
          rev_time_ok = true;
        }
        break;
      case Field::kComment:
        rev->comment = text;
        break;
      case Field::kText:
        rev->raw_text = std::move(text);
        break;
      case Field::kNone:
        break;
    }
  }

  void Fail(std::string message) {
    if (!error) error = std::move(message);
    XML_StopParser(parser, XML_FALSE);
  }

  uint64_t Offset() const {
    XML_Index at = XML_GetCurrentByteIndex(parser);
    return at < 0 ? stats.bytes_read : static_cast<uint64_t>(at);
  }

  // Feeds one chunk; returns false once the input is exhausted.
  bool Drive() {
    std::streamsize n = 0;
    try {
      input.read(buffer.data(), static_cast<std::streamsize>(buffer.size()));
      n = input.gcount();
    } catch (const std::exception& e) {
      throw IngestError(std::string("decompression failed: ") + e.what(),
                        stats.bytes_read);
    }
    bool last = n == 0 || input.eof();
    stats.bytes_read += n;
    if (XML_Parse(parser, buffer.data(), static_cast<int>(n), last) ==
        XML_STATUS_ERROR) {
      if (error) throw IngestError(*error, Offset());
      throw IngestError(
          std::string("malformed XML: ") +
              XML_ErrorString(XML_GetErrorCode(parser)),
          Offset());
    }
    return !last;
  }

  std::optional<PageHistory> Next() {
    while (ready.empty() && !finished) {
      if (!Drive()) finished = true;
    }
    if (ready.empty()) return std::nullopt;
    auto [out, bytes] = std::move(ready.front());
    ready.pop_front();
    queued_bytes -= bytes;
    return std::move(out);
  }

  ReaderOptions options;
  io::filtering_istream input;
  XML_Parser parser = nullptr;
  std::vector<char> buffer;
  bool finished = false;
  std::optional<std::string> error;

  std::vector<std::string> stack;
  Field field = Field::kNone;
  std::string text;
  std::optional<PageHistory> page;
  std::optional<RevisionSnapshot> rev;
  bool rev_time_ok = false;
  uint64_t page_bytes = 0;
  uint64_t queued_bytes = 0;
  std::deque<std::pair<PageHistory, uint64_t>> ready;
  IngestStats stats;
};

DumpReader::DumpReader(std::istream& source, Compression compression,
                       ReaderOptions options)
    : impl_(std::make_unique<Impl>(source, compression, options)) {}
DumpReader::~DumpReader() = default;
DumpReader::DumpReader(DumpReader&&) noexcept = default;
DumpReader& DumpReader::operator=(DumpReader&&) noexcept = default;

std::optional<PageHistory> DumpReader::Next() { return impl_->Next(); }
const IngestStats& DumpReader::stats() const { return impl_->stats; }

DumpFile::DumpFile(const std::filesystem::path& path, Compression compression,
                   ReaderOptions options) {
  auto file = std::make_unique<std::ifstream>(path, std::ios::binary);
  if (!*file) throw InputError("cannot open dump " + path.string());
  stream_ = std::move(file);
  reader_ = std::make_unique<DumpReader>(*stream_, compression, options);
}

}  // namespace revmine
