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

#include "revmine/miner.h"

#include <string>

#include "revmine/errors.h"
#include "revmine/hash.h"

namespace revmine {

void MinerConfig::Validate() const {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw ConfigError("lambda must lie in [0, 1], got " + std::to_string(lambda));
  }
}

std::optional<OverlapScore> ComputeOverlapScore(const TokenSet& sentence,
                                                const TokenSet& passage) {
  if (sentence.empty()) return std::nullopt;
  return OverlapScore{sentence.IntersectionSize(passage), sentence.size()};
}

namespace {

std::optional<CandidatePair> BestOf(const TokenizedText& sentence,
                                    const TokenSet& sentence_words,
                                    std::span<const TokenizedText> passages,
                                    std::span<const TokenSet> passage_words) {
  if (passages.empty() || sentence_words.empty()) return std::nullopt;
  size_t best = 0;
  OverlapScore best_score{0, sentence_words.size()};
  for (size_t j = 0; j < passages.size(); ++j) {
    OverlapScore s = *ComputeOverlapScore(sentence_words, passage_words[j]);
    if (j == 0 || s > best_score) {
      best = j;
      best_score = s;
    }
  }
  return CandidatePair{sentence, passages[best], best_score, best, 0};
}

}  // namespace

std::optional<CandidatePair> BestPassage(const TokenizedText& sentence,
                                         std::span<const TokenizedText> passages,
                                         const StopwordList& stopwords) {
  std::vector<TokenSet> words;
  words.reserve(passages.size());
  for (const auto& p : passages) words.push_back(ContentTokens(p.tokens, stopwords));
  return BestOf(sentence, ContentTokens(sentence.tokens, stopwords), passages,
                words);
}

void MineStats::Merge(const MineStats& other) {
  pages += other.pages;
  revision_pairs += other.revision_pairs;
  candidates += other.candidates;
  kept += other.kept;
  for (const auto& [reason, n] : other.skips) skips[reason] += n;
}

std::vector<CandidatePair> MineDelta(const RevisionDelta& delta,
                                     const StopwordList& stopwords,
                                     const MinerConfig& config,
                                     MineStats* stats) {
  MineStats local;
  MineStats& st = stats ? *stats : local;
  std::vector<CandidatePair> kept;
  if (delta.added_sentences.empty()) return kept;
  if (delta.added_passages.empty()) {
    st.Skip("no_added_passage", delta.added_sentences.size());
    return kept;
  }
  std::vector<TokenSet> passage_words;
  passage_words.reserve(delta.added_passages.size());
  for (const auto& p : delta.added_passages) {
    passage_words.push_back(ContentTokens(p.tokens, stopwords));
  }
  for (size_t i = 0; i < delta.added_sentences.size(); ++i) {
    const TokenizedText& sentence = delta.added_sentences[i];
    TokenSet words = ContentTokens(sentence.tokens, stopwords);
    if (words.empty()) {
      st.Skip("unscorable_sentence");
      continue;
    }
    if (config.min_summary_content_tokens > 0 &&
        words.size() < config.min_summary_content_tokens) {
      st.Skip("summary_too_short");
      continue;
    }
    if (config.max_summary_tokens > 0 &&
        sentence.tokens.size() > config.max_summary_tokens) {
      st.Skip("summary_too_long");
      continue;
    }
    auto pair = BestOf(sentence, words, delta.added_passages, passage_words);
    if (!pair) continue;
    ++st.candidates;
    if (!pair->score.AtLeast(config.lambda)) {
      st.Skip("below_lambda");
      continue;
    }
    pair->sentence_index = i;
    ++st.kept;
    kept.push_back(std::move(*pair));
  }
  return kept;
}

std::string ExampleId(uint64_t page_id, uint64_t new_rev_id,
                      std::string_view summary) {
  std::string key = std::to_string(page_id);
  key.push_back('\x1f');
  key += std::to_string(new_rev_id);
  key.push_back('\x1f');
  key += summary;
  return Hex64(Fnv1a64(key));
}

std::vector<CorpusExample> MinePage(const PageHistory& page,
                                    const TextResources& resources,
                                    const MinerConfig& config,
                                    const StripOptions& strip,
                                    MineStats* stats) {
  MineStats local;
  MineStats& st = stats ? *stats : local;
  ++st.pages;
  std::vector<CorpusExample> out;
  if (page.revisions.size() < 2) return out;

  auto segment = [&](const RevisionSnapshot& rev)
      -> std::optional<SegmentedRevision> {
    try {
      if (rev.raw_text.empty()) st.Skip("empty_revision_text");
      return Segment(ParseDocument(rev.raw_text, strip), *resources.prefixes);
    } catch (const std::exception&) {
      st.Skip("parse_error");
      return std::nullopt;
    }
  };

  std::optional<SegmentedRevision> older = segment(page.revisions[0]);
  for (const RevisionPair& pair : AdjacentRevisionPairs(page)) {
    std::optional<SegmentedRevision> newer = segment(*pair.newer);
    ++st.revision_pairs;
    if (older && newer) {
      RevisionDelta delta = ComputeDelta(*older, *newer);
      delta.old_rev_id = pair.older->revision_id;
      delta.new_rev_id = pair.newer->revision_id;
      delta.timestamp = pair.newer->timestamp;
      for (CandidatePair& c : MineDelta(delta, *resources.stopwords, config, &st)) {
        CorpusExample ex;
        ex.summary = JoinTokens(c.sentence.tokens);
        ex.passage = JoinTokens(c.passage.tokens);
        ex.id = ExampleId(page.page_id, delta.new_rev_id, ex.summary);
        ex.page_id = page.page_id;
        ex.page_title = page.title;
        ex.old_rev_id = delta.old_rev_id;
        ex.new_rev_id = delta.new_rev_id;
        ex.timestamp = delta.timestamp;
        ex.score = c.score.value();
        ex.sentence_position = c.sentence_index;
        out.push_back(std::move(ex));
      }
    } else {
      st.Skip("revision_pair_skipped");
    }
    older = std::move(newer);
  }
  return out;
}

}  // namespace revmine
