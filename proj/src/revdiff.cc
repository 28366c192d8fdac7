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

#include "revmine/revdiff.h"

#include <algorithm>
#include <string_view>
#include <tuple>
#include <unordered_map>

namespace revmine {
namespace {

using Seq = std::span<const std::string>;

// Above this many DP cells (after trimming the common prefix and suffix) the
// LCS cross-check is skipped and the block alignment is used as is.
constexpr size_t kMaxLcsCells = size_t{1} << 24;

class BlockMatcher {
 public:
  BlockMatcher(Seq a, Seq b) : a_(a), b_(b) {
    for (size_t j = 0; j < b.size(); ++j) b2j_[b[j]].push_back(j);
  }

  MatchingBlock FindLongestMatch(size_t alo, size_t ahi, size_t blo,
                                 size_t bhi) const {
    size_t besti = alo, bestj = blo, bestsize = 0;
    std::unordered_map<size_t, size_t> j2len, next;
    for (size_t i = alo; i < ahi; ++i) {
      next.clear();
      auto it = b2j_.find(a_[i]);
      if (it != b2j_.end()) {
        for (size_t j : it->second) {
          if (j < blo) continue;
          if (j >= bhi) break;
          size_t prev = 0;
          if (j > 0) {
            auto p = j2len.find(j - 1);
            if (p != j2len.end()) prev = p->second;
          }
          size_t k = next[j] = prev + 1;
          if (k > bestsize) {
            besti = i + 1 - k;
            bestj = j + 1 - k;
            bestsize = k;
          }
        }
      }
      std::swap(j2len, next);
    }
    while (besti > alo && bestj > blo && a_[besti - 1] == b_[bestj - 1]) {
      --besti;
      --bestj;
      ++bestsize;
    }
    while (besti + bestsize < ahi && bestj + bestsize < bhi &&
           a_[besti + bestsize] == b_[bestj + bestsize]) {
      ++bestsize;
    }
    return {besti, bestj, bestsize};
  }

  std::vector<MatchingBlock> MatchingBlocks() const {
    std::vector<MatchingBlock> blocks;
    std::vector<std::tuple<size_t, size_t, size_t, size_t>> queue = {
        {0, a_.size(), 0, b_.size()}};
    while (!queue.empty()) {
      auto [alo, ahi, blo, bhi] = queue.back();
      queue.pop_back();
      MatchingBlock m = FindLongestMatch(alo, ahi, blo, bhi);
      if (m.size == 0) continue;
      blocks.push_back(m);
      if (alo < m.old_pos && blo < m.new_pos)
        queue.emplace_back(alo, m.old_pos, blo, m.new_pos);
      if (m.old_pos + m.size < ahi && m.new_pos + m.size < bhi)
        queue.emplace_back(m.old_pos + m.size, ahi, m.new_pos + m.size, bhi);
    }
    std::sort(blocks.begin(), blocks.end(), [](const auto& x, const auto& y) {
      return std::tie(x.old_pos, x.new_pos) < std::tie(y.old_pos, y.new_pos);
    });
    std::vector<MatchingBlock> merged;
    for (const auto& m : blocks) {
      if (!merged.empty()) {
        auto& last = merged.back();
        if (last.old_pos + last.size == m.old_pos &&
            last.new_pos + last.size == m.new_pos) {
          last.size += m.size;
          continue;
        }
      }
      merged.push_back(m);
    }
    return merged;
  }

 private:
  Seq a_;
  Seq b_;
  std::unordered_map<std::string_view, std::vector<size_t>> b2j_;
};

// Matched positions of b under an LCS alignment of a[lo..] and b[lo..]
// excluding the common suffix; false if the table would be too large.
bool LcsMatchedPositions(Seq a, Seq b, std::vector<bool>* matched_b,
                         size_t* lcs) {
  size_t pre = 0;
  while (pre < a.size() && pre < b.size() && a[pre] == b[pre]) ++pre;
  size_t suf = 0;
  while (suf < a.size() - pre && suf < b.size() - pre &&
         a[a.size() - 1 - suf] == b[b.size() - 1 - suf]) {
    ++suf;
  }
  const size_t n = a.size() - pre - suf;
  const size_t m = b.size() - pre - suf;
  if (n != 0 && m != 0 && (n + 1) * (m + 1) > kMaxLcsCells) return false;

  matched_b->assign(b.size(), false);
  for (size_t k = 0; k < pre; ++k) (*matched_b)[k] = true;
  for (size_t k = 0; k < suf; ++k) (*matched_b)[b.size() - 1 - k] = true;

  std::vector<uint32_t> dp((n + 1) * (m + 1), 0);
  auto at = [&](size_t i, size_t j) -> uint32_t& { return dp[i * (m + 1) + j]; };
  for (size_t i = 1; i <= n; ++i) {
    for (size_t j = 1; j <= m; ++j) {
      at(i, j) = a[pre + i - 1] == b[pre + j - 1]
                     ? at(i - 1, j - 1) + 1
                     : std::max(at(i - 1, j), at(i, j - 1));
    }
  }
  *lcs = pre + suf + at(n, m);
  size_t i = n, j = m;
  while (i > 0 && j > 0) {
    if (a[pre + i - 1] == b[pre + j - 1]) {
      (*matched_b)[pre + j - 1] = true;
      --i;
      --j;
    } else if (at(i - 1, j) >= at(i, j - 1)) {
      --i;
    } else {
      --j;
    }
  }
  return true;
}

std::vector<TokenizedText> TokenizeAll(std::vector<std::string> texts) {
  std::vector<TokenizedText> out;
  out.reserve(texts.size());
  for (auto& t : texts) {
    auto tokens = Tokenize(t);
    out.push_back({std::move(t), std::move(tokens)});
  }
  return out;
}

}  // namespace

std::vector<MatchingBlock> LongestBlockAlignment(Seq old_seq, Seq new_seq) {
  return BlockMatcher(old_seq, new_seq).MatchingBlocks();
}

std::vector<size_t> AddedPositions(Seq old_seq, Seq new_seq) {
  std::vector<bool> matched(new_seq.size(), false);
  size_t block_total = 0;
  for (const auto& m : LongestBlockAlignment(old_seq, new_seq)) {
    for (size_t k = 0; k < m.size; ++k) matched[m.new_pos + k] = true;
    block_total += m.size;
  }
  std::vector<bool> lcs_matched;
  size_t lcs = 0;
  if (LcsMatchedPositions(old_seq, new_seq, &lcs_matched, &lcs) &&
      lcs > block_total) {
    matched = std::move(lcs_matched);
  }
  std::vector<size_t> added;
  for (size_t j = 0; j < new_seq.size(); ++j) {
    if (!matched[j]) added.push_back(j);
  }
  return added;
}

std::vector<std::string> AddedElements(Seq old_seq, Seq new_seq) {
  std::vector<std::string> out;
  for (size_t j : AddedPositions(old_seq, new_seq)) out.push_back(new_seq[j]);
  return out;
}

SegmentedRevision Segment(const Document& doc,
                          const NonbreakingPrefixes& prefixes) {
  return {SplitSentences(doc.lead_text, prefixes), doc.body_paragraphs};
}

RevisionDelta ComputeDelta(const SegmentedRevision& old_rev,
                           const SegmentedRevision& new_rev) {
  RevisionDelta delta;
  delta.added_sentences =
      TokenizeAll(AddedElements(old_rev.lead_sentences, new_rev.lead_sentences));
  delta.added_passages =
      TokenizeAll(AddedElements(old_rev.passages, new_rev.passages));
  return delta;
}

RevisionDelta ComputeDelta(const Document& old_doc, const Document& new_doc,
                           const NonbreakingPrefixes& prefixes) {
  return ComputeDelta(Segment(old_doc, prefixes), Segment(new_doc, prefixes));
}

}  // namespace revmine
