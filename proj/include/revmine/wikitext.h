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

#ifndef REVMINE_WIKITEXT_H_
#define REVMINE_WIKITEXT_H_

#include <string>
#include <string_view>
#include <vector>

namespace revmine {

struct Heading {
  int level = 2;  // number of '=' on each side, >= 2
  std::string title;

  bool operator==(const Heading&) const = default;
};

// A stripped revision. lead_text is everything before the first level-2
// heading with paragraphs separated by a blank line; body_paragraphs are the
// blank-line separated paragraphs after it, each collapsed to one line.
struct Document {
  std::string lead_text;
  std::vector<std::string> body_paragraphs;
  std::vector<Heading> headings;

  bool operator==(const Document&) const = default;
};

struct StripOptions {
  // Body paragraphs shorter than this many code points are dropped.
  size_t min_passage_chars = 40;
};

// Reduces wikitext to plain text. Templates, tables, references, comments,
// category and file links are removed; links, external links, HTML tags and
// quote markup are unwrapped; list markers are dropped. Total on arbitrary
// input and idempotent. An unclosed {{ or {| swallows the rest of its
// section; an unclosed [[ loses only its brackets.
std::string StripWikicode(std::string_view raw);

Document ParseDocument(std::string_view raw, const StripOptions& options = {});

}  // namespace revmine

#endif  // REVMINE_WIKITEXT_H_
