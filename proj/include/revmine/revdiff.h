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

#ifndef REVMINE_REVDIFF_H_
#define REVMINE_REVDIFF_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "revmine/dump_reader.h"
#include "revmine/textproc.h"
#include "revmine/wikitext.h"

namespace revmine {

struct MatchingBlock {
  size_t old_pos;
  size_t new_pos;
  size_t size;

  bool operator==(const MatchingBlock&) const = default;
};

// Ratcliff-Obershelp alignment as computed by difflib's SequenceMatcher
// (without junk heuristics): anchor on the longest common contiguous block,
// earliest in old then earliest in new, and recurse on both sides. Blocks
// come back sorted and merged, without the terminating sentinel.
std::vector<MatchingBlock> LongestBlockAlignment(
    std::span<const std::string> old_seq, std::span<const std::string> new_seq);

// Positions of new_seq that are insertions relative to old_seq. The block
// alignment above is canonical; when it matches fewer elements than a
// longest common subsequence, an LCS alignment replaces it so the number of
// additions is always |new| - LCS(old, new).
std::vector<size_t> AddedPositions(std::span<const std::string> old_seq,
                                   std::span<const std::string> new_seq);

std::vector<std::string> AddedElements(std::span<const std::string> old_seq,
                                       std::span<const std::string> new_seq);

struct TokenizedText {
  std::string text;
  std::vector<std::string> tokens;

  bool operator==(const TokenizedText&) const = default;
};

// A Document cut into the units the diff compares.
struct SegmentedRevision {
  std::vector<std::string> lead_sentences;
  std::vector<std::string> passages;
};

SegmentedRevision Segment(const Document& doc,
                          const NonbreakingPrefixes& prefixes);

struct RevisionDelta {
  std::vector<TokenizedText> added_sentences;
  std::vector<TokenizedText> added_passages;
  uint64_t old_rev_id = 0;
  uint64_t new_rev_id = 0;
  Timestamp timestamp{};
};

// Diffs raw sentence and passage strings, then tokenizes the survivors.
// Revision ids and timestamp are left for the caller.
RevisionDelta ComputeDelta(const SegmentedRevision& old_rev,
                           const SegmentedRevision& new_rev);
RevisionDelta ComputeDelta(const Document& old_doc, const Document& new_doc,
                           const NonbreakingPrefixes& prefixes);

}  // namespace revmine

#endif  // REVMINE_REVDIFF_H_
