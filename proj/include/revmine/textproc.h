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

#ifndef REVMINE_TEXTPROC_H_
#define REVMINE_TEXTPROC_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace revmine {

// Abbreviations that do not end a sentence when followed by a period.
// Numeric-only entries ("No", "pp") block a break only before a number.
class NonbreakingPrefixes {
 public:
  enum class Kind { kDefault, kNumericOnly };

  // The standard English list shipped with the Moses splitter.
  static const NonbreakingPrefixes& English();
  // One prefix per line; '#' starts a comment; a line containing
  // "#NUMERIC_ONLY#" marks a numeric-only prefix. Later lines win.
  static NonbreakingPrefixes Parse(std::string_view content);
  static NonbreakingPrefixes FromFile(const std::filesystem::path& path);

  std::optional<Kind> Find(std::string_view prefix) const;
  size_t size() const { return prefixes_.size(); }
  // Hash of the canonical content, for run manifests.
  uint64_t Fingerprint() const { return fingerprint_; }

 private:
  std::unordered_map<std::string, Kind> prefixes_;
  uint64_t fingerprint_ = 0;
};

// Moses-style sentence splitting. Blank lines are hard paragraph breaks;
// within a paragraph, line breaks are treated as spaces. Sentences come back
// trimmed with internal spacing collapsed.
std::vector<std::string> SplitSentences(std::string_view text,
                                        const NonbreakingPrefixes& prefixes);

// Rule-based Penn-Treebank-like tokenizer. Punctuation is split off,
// clitics are separated ("don't" -> "do" "n't"), numbers, abbreviations,
// hyphenated words and slashed units stay whole. Tokenizing the space-joined
// output again yields the same tokens.
std::vector<std::string> Tokenize(std::string_view sentence);

std::string JoinTokens(std::span<const std::string> tokens);

// Splits already tokenized, space-joined text.
std::vector<std::string> SplitOnSpaces(std::string_view text);

// True if the token has no letter or digit.
bool IsPunctuation(std::string_view token);

class StopwordList {
 public:
  static const StopwordList& English();
  // One word per line, '#' comments; words are lowercased. Throws
  // ConfigError if nothing remains.
  static StopwordList Parse(std::string_view content, std::string source);
  static StopwordList FromFile(const std::filesystem::path& path);

  bool Contains(std::string_view lowercase_word) const;
  size_t size() const { return words_.size(); }
  const std::string& source() const { return source_; }
  uint64_t Fingerprint() const { return fingerprint_; }

 private:
  std::unordered_set<std::string> words_;
  std::string source_;
  uint64_t fingerprint_ = 0;
};

// A set of lowercase content words, kept sorted for merge intersection.
class TokenSet {
 public:
  TokenSet() = default;
  explicit TokenSet(std::vector<std::string> words);

  size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }
  bool contains(std::string_view w) const;
  size_t IntersectionSize(const TokenSet& other) const;
  std::vector<std::string> Intersection(const TokenSet& other) const;

  auto begin() const { return words_.begin(); }
  auto end() const { return words_.end(); }
  const std::vector<std::string>& words() const { return words_; }

  bool operator==(const TokenSet&) const = default;

 private:
  std::vector<std::string> words_;
};

// Lowercases, drops stopwords and pure punctuation, deduplicates.
TokenSet ContentTokens(std::span<const std::string> tokens,
                       const StopwordList& stopwords);

// Immutable resources shared by every worker.
struct TextResources {
  const NonbreakingPrefixes* prefixes = &NonbreakingPrefixes::English();
  const StopwordList* stopwords = &StopwordList::English();
};

}  // namespace revmine

#endif  // REVMINE_TEXTPROC_H_
