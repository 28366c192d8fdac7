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

#include <fstream>
#include <random>
#include <string>
#include <vector>

#include <gmock/gmock.h>
#include <gtest/gtest.h>
#include <json.hpp>

#include "test_util.h"

namespace revmine {
namespace {

using ::testing::ElementsAre;
using ::testing::IsEmpty;
using testing::DataPath;

using Seq = std::vector<std::string>;

// Plain O(nm) LCS length.
size_t LcsOracle(const Seq& a, const Seq& b) {
  std::vector<std::vector<size_t>> dp(a.size() + 1,
                                      std::vector<size_t>(b.size() + 1, 0));
  for (size_t i = 1; i <= a.size(); ++i) {
    for (size_t j = 1; j <= b.size(); ++j) {
      dp[i][j] = a[i - 1] == b[j - 1] ? dp[i - 1][j - 1] + 1
                                      : std::max(dp[i - 1][j], dp[i][j - 1]);
    }
  }
  return dp[a.size()][b.size()];
}

bool IsSubsequence(const Seq& sub, const Seq& of) {
  size_t j = 0;
  for (const auto& x : of) {
    if (j < sub.size() && sub[j] == x) ++j;
  }
  return j == sub.size();
}

Seq RandomSeq(std::mt19937_64& rng, size_t max_len, size_t alphabet) {
  Seq s(rng() % (max_len + 1));
  for (auto& x : s) x = std::string(1, static_cast<char>('a' + rng() % alphabet));
  return s;
}

TEST(AddedElementsTest, Identical) {
  Seq x = {"a", "b", "c"};
  EXPECT_THAT(AddedElements(x, x), IsEmpty());
}

TEST(AddedElementsTest, Insertion) {
  EXPECT_THAT(AddedElements(Seq{"a", "c"}, Seq{"a", "b", "c"}), ElementsAre("b"));
}

TEST(AddedElementsTest, EverythingNew) {
  EXPECT_THAT(AddedElements(Seq{}, Seq{"x", "y"}), ElementsAre("x", "y"));
}

TEST(AddedElementsTest, ModifiedCountsAsAdded) {
  EXPECT_THAT(AddedElements(Seq{"a", "b", "c"}, Seq{"a", "B", "c"}),
              ElementsAre("B"));
}

// Frozen output of Python difflib (tests/oracles/difflib_oracle.py).
TEST(LongestBlockAlignmentTest, MatchesDifflib) {
  std::ifstream in(DataPath("diff/difflib_blocks.jsonl"));
  std::string line;
  size_t cases = 0;
  while (std::getline(in, line)) {
    auto j = nlohmann::json::parse(line);
    Seq old_seq = j["old"].get<Seq>();
    Seq new_seq = j["new"].get<Seq>();
    std::vector<MatchingBlock> want;
    for (const auto& b : j["blocks"]) {
      want.push_back({b[0].get<size_t>(), b[1].get<size_t>(), b[2].get<size_t>()});
    }
    ASSERT_EQ(LongestBlockAlignment(old_seq, new_seq), want) << line;
    ++cases;
  }
  EXPECT_EQ(cases, 600u);
}

// Where the block alignment is already LCS-optimal it decides positions.
TEST(AddedPositionsTest, BlockAlignmentIsCanonicalWhenOptimal) {
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 3000; ++iter) {
    Seq a = RandomSeq(rng, 12, 5), b = RandomSeq(rng, 12, 5);
    auto blocks = LongestBlockAlignment(a, b);
    size_t matched = 0;
    std::vector<bool> in_block(b.size(), false);
    for (const auto& blk : blocks) {
      matched += blk.size;
      for (size_t k = 0; k < blk.size; ++k) in_block[blk.new_pos + k] = true;
    }
    if (matched != LcsOracle(a, b)) continue;
    std::vector<size_t> want;
    for (size_t k = 0; k < b.size(); ++k) {
      if (!in_block[k]) want.push_back(k);
    }
    ASSERT_EQ(AddedPositions(a, b), want);
  }
}

TEST(AddedPositionsTest, FallsBackWhenBlocksMissTheLcs) {
  Seq old_seq = {"1", "2", "3", "4", "5", "6", "7"};
  Seq new_seq = {"5", "6", "7", "1", "2", "8", "3", "4"};
  EXPECT_EQ(AddedPositions(old_seq, new_seq).size(),
            new_seq.size() - LcsOracle(old_seq, new_seq));
}

TEST(AddedElementsPropertyTest, CountEqualsNewMinusLcsAndAlignmentValid) {
  std::mt19937_64 rng(2026);
  for (int iter = 0; iter < 10000; ++iter) {
    Seq a = RandomSeq(rng, 12, 5), b = RandomSeq(rng, 12, 5);
    auto pos = AddedPositions(a, b);
    ASSERT_EQ(pos.size(), b.size() - LcsOracle(a, b));
    // What is left of new after removing the additions must be common.
    Seq kept;
    size_t p = 0;
    for (size_t k = 0; k < b.size(); ++k) {
      if (p < pos.size() && pos[p] == k) {
        ++p;
      } else {
        kept.push_back(b[k]);
      }
    }
    ASSERT_TRUE(IsSubsequence(kept, a));
    auto added = AddedElements(a, b);
    ASSERT_TRUE(IsSubsequence(added, b));
    ASSERT_THAT(AddedElements(b, b), IsEmpty());
    ASSERT_EQ(AddedElements(Seq{}, b), b);
  }
}

TEST(AddedPositionsTest, LongSequencesStayFast) {
  Seq a, b;
  for (int i = 0; i < 5000; ++i) a.push_back("s" + std::to_string(i));
  b = a;
  b.insert(b.begin() + 2500, "new");
  b.erase(b.begin() + 10);
  EXPECT_THAT(AddedElements(a, b), ElementsAre("new"));
}

Document Doc(std::string lead, std::vector<std::string> body) {
  Document d;
  d.lead_text = std::move(lead);
  d.body_paragraphs = std::move(body);
  return d;
}

TEST(ComputeDeltaTest, NoEdit) {
  Document d = Doc("A lead. Two sentences.", {"Passage one is here."});
  RevisionDelta delta = ComputeDelta(d, d, NonbreakingPrefixes::English());
  EXPECT_THAT(delta.added_sentences, IsEmpty());
  EXPECT_THAT(delta.added_passages, IsEmpty());
}

TEST(ComputeDeltaTest, AppendOneSentenceAndOneParagraph) {
  Document before = Doc("A lead. Two sentences.", {"Passage one is here."});
  Document after = Doc("A lead. Two sentences. Don't forget this.",
                       {"Passage one is here.", "Passage two, new."});
  RevisionDelta delta = ComputeDelta(before, after, NonbreakingPrefixes::English());
  ASSERT_EQ(delta.added_sentences.size(), 1u);
  EXPECT_EQ(delta.added_sentences[0].text, "Don't forget this.");
  EXPECT_THAT(delta.added_sentences[0].tokens,
              ElementsAre("Do", "n't", "forget", "this", "."));
  ASSERT_EQ(delta.added_passages.size(), 1u);
  EXPECT_EQ(delta.added_passages[0].text, "Passage two, new.");
}

TEST(ComputeDeltaTest, FullRewrite) {
  Document before = Doc("Old lead.", {"Old passage."});
  Document after = Doc("New lead. Another.", {"New passage.", "More."});
  RevisionDelta delta = ComputeDelta(before, after, NonbreakingPrefixes::English());
  EXPECT_EQ(delta.added_sentences.size(), 2u);
  EXPECT_EQ(delta.added_passages.size(), 2u);
}

TEST(SegmentTest, LeadParagraphsSplitSeparately) {
  SegmentedRevision seg = Segment(Doc("First para ends\n\nSecond para.", {"P."}),
                                  NonbreakingPrefixes::English());
  EXPECT_THAT(seg.lead_sentences, ElementsAre("First para ends", "Second para."));
  EXPECT_THAT(seg.passages, ElementsAre("P."));
}

}  // namespace
}  // namespace revmine
