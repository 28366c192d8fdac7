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

#include "revmine/wikitext.h"

#include <algorithm>
#include <array>
#include <optional>

#include "revmine/utf8.h"

namespace revmine {
namespace {

bool IsAsciiAlpha(char c) { return (c | 0x20) >= 'a' && (c | 0x20) <= 'z'; }
bool IsAsciiAlnum(char c) { return IsAsciiAlpha(c) || (c >= '0' && c <= '9'); }
bool IsBlank(char c) { return c == ' ' || c == '\t'; }

char Lower(char c) { return c >= 'A' && c <= 'Z' ? c + 32 : c; }

bool StartsWithAt(std::string_view s, size_t i, std::string_view prefix) {
  return s.size() - i >= prefix.size() && s.compare(i, prefix.size(), prefix) == 0;
}

bool IStartsWithAt(std::string_view s, size_t i, std::string_view prefix) {
  if (s.size() - i < prefix.size()) return false;
  for (size_t k = 0; k < prefix.size(); ++k) {
    if (Lower(s[i + k]) != prefix[k]) return false;
  }
  return true;
}

std::string_view Trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && (IsBlank(s[b]) || s[b] == '\n' || s[b] == '\r')) ++b;
  while (e > b && (IsBlank(s[e - 1]) || s[e - 1] == '\n' || s[e - 1] == '\r'))
    --e;
  return s.substr(b, e - b);
}

std::string RemoveComments(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  size_t i = 0;
  while (i < s.size()) {
    size_t open = s.find("<!--", i);
    if (open == std::string_view::npos) {
      out.append(s.substr(i));
      break;
    }
    out.append(s.substr(i, open - i));
    size_t close = s.find("-->", open + 4);
    if (close == std::string_view::npos) break;
    i = close + 3;
  }
  return out;
}

// Tags whose content never reaches the reader.
constexpr std::array<std::string_view, 15> kInvisibleTags = {
    "ref",      "references", "gallery", "math",         "timeline",
    "imagemap", "score",      "source",  "syntaxhighlight", "templatedata",
    "graph",    "inputbox",   "categorytree", "section",  "mapframe"};

// Length of an invisible tag name at s[i] (just past '<'), 0 if none.
size_t InvisibleTagAt(std::string_view s, size_t i) {
  for (std::string_view name : kInvisibleTags) {
    if (!IStartsWithAt(s, i, name)) continue;
    size_t after = i + name.size();
    if (after == s.size() || IsBlank(s[after]) || s[after] == '\n' ||
        s[after] == '/' || s[after] == '>') {
      return name.size();
    }
  }
  return 0;
}

std::string RemoveInvisibleTags(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '<') {
      out.push_back(s[i++]);
      continue;
    }
    size_t name_len = InvisibleTagAt(s, i + 1);
    if (name_len == 0) {
      out.push_back(s[i++]);
      continue;
    }
    std::string_view name = s.substr(i + 1, name_len);
    size_t gt = s.find('>', i + 1 + name_len);
    if (gt == std::string_view::npos) return out;
    if (s[gt - 1] == '/') {
      i = gt + 1;
      continue;
    }
    // Find </name\s*>.
    size_t k = gt + 1;
    std::optional<size_t> end;
    while ((k = s.find("</", k)) != std::string_view::npos) {
      size_t p = k + 2;
      if (IStartsWithAt(s, p, std::string(name))) {
        p += name.size();
        while (p < s.size() && IsBlank(s[p])) ++p;
        if (p < s.size() && s[p] == '>') {
          end = p + 1;
          break;
        }
      }
      k += 2;
    }
    if (!end) return out;
    i = *end;
  }
  return out;
}

enum class Open { kTemplate, kParam, kTable };

// Templates {{ }}, parameters {{{ }}} and tables {| |} with nesting. Tables
// open and close only at the start of a line.
std::string RemoveTemplatesAndTables(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::vector<Open> stack;
  bool line_start = true;  // only blanks seen since the last newline
  size_t i = 0;
  const size_t n = s.size();
  while (i < n) {
    char c = s[i];
    if (StartsWithAt(s, i, "{{{")) {
      stack.push_back(Open::kParam);
      i += 3;
      line_start = false;
      continue;
    }
    if (StartsWithAt(s, i, "{{")) {
      stack.push_back(Open::kTemplate);
      i += 2;
      line_start = false;
      continue;
    }
    if (line_start && StartsWithAt(s, i, "{|")) {
      stack.push_back(Open::kTable);
      i += 2;
      line_start = false;
      continue;
    }
    if (!stack.empty() && stack.back() == Open::kParam &&
        StartsWithAt(s, i, "}}}")) {
      stack.pop_back();
      i += 3;
      line_start = false;
      continue;
    }
    if (StartsWithAt(s, i, "}}") &&
        (stack.empty() || stack.back() == Open::kTemplate)) {
      // A stray closer with nothing open is dropped as well.
      if (!stack.empty()) stack.pop_back();
      i += 2;
      line_start = false;
      continue;
    }
    if (line_start && StartsWithAt(s, i, "|}") &&
        (stack.empty() || stack.back() == Open::kTable)) {
      if (!stack.empty()) stack.pop_back();
      i += 2;
      line_start = false;
      continue;
    }
    if (c == '\n') {
      line_start = true;
    } else if (!IsBlank(c)) {
      line_start = false;
    }
    if (stack.empty()) out.push_back(c);
    ++i;
  }
  return out;
}

bool IsHiddenNamespace(std::string_view target) {
  size_t colon = target.find(':');
  if (colon == std::string_view::npos) return false;
  std::string ns(Trim(target.substr(0, colon)));
  for (char& c : ns) c = Lower(c);
  return ns == "category" || ns == "file" || ns == "image";
}

std::string UnwrapLinks(std::string_view s);

// Content between [[ and ]].
std::string RenderLink(std::string_view inner) {
  size_t pipe = std::string_view::npos;
  int depth = 0;
  for (size_t k = 0; k < inner.size(); ++k) {
    if (StartsWithAt(inner, k, "[[")) {
      ++depth;
      ++k;
    } else if (StartsWithAt(inner, k, "]]")) {
      --depth;
      ++k;
    } else if (inner[k] == '|' && depth == 0) {
      pipe = k;
      break;
    }
  }
  std::string_view target = Trim(inner.substr(0, pipe));
  bool colon_link = !target.empty() && target[0] == ':';
  if (colon_link) {
    target = Trim(target.substr(1));
  } else if (IsHiddenNamespace(target)) {
    return {};
  }
  if (pipe != std::string_view::npos) {
    std::string_view label = inner.substr(pipe + 1);
    if (!Trim(label).empty()) return UnwrapLinks(label);
  }
  return UnwrapLinks(target);
}

std::string UnwrapLinks(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  size_t i = 0;
  const size_t n = s.size();
  while (i < n) {
    if (StartsWithAt(s, i, "[[")) {
      int depth = 1;
      size_t k = i + 2;
      while (k + 1 < n) {
        if (StartsWithAt(s, k, "[[")) {
          ++depth;
          k += 2;
        } else if (StartsWithAt(s, k, "]]")) {
          if (--depth == 0) break;
          k += 2;
        } else {
          ++k;
        }
      }
      if (depth != 0) {
        i += 2;  // unclosed: keep the text, lose the brackets
        continue;
      }
      out += RenderLink(s.substr(i + 2, k - i - 2));
      i = k + 2;
      continue;
    }
    if (StartsWithAt(s, i, "]]")) {
      i += 2;
      continue;
    }
    out.push_back(s[i++]);
  }
  return out;
}

constexpr std::array<std::string_view, 8> kUrlSchemes = {
    "http://", "https://", "ftp://", "ftps://", "//", "mailto:", "irc://",
    "news:"};

std::string UnwrapExternalLinks(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '[') {
      out.push_back(s[i++]);
      continue;
    }
    bool url = false;
    for (std::string_view scheme : kUrlSchemes) {
      if (IStartsWithAt(s, i + 1, scheme)) url = true;
    }
    size_t close = s.find_first_of("]\n", i + 1);
    if (!url || close == std::string_view::npos || s[close] != ']') {
      out.push_back(s[i++]);
      continue;
    }
    std::string_view inner = s.substr(i + 1, close - i - 1);
    size_t space = inner.find_first_of(" \t");
    if (space != std::string_view::npos) {
      out.append(Trim(inner.substr(space + 1)));
    }
    i = close + 1;
  }
  return out;
}

constexpr std::array<std::string_view, 52> kHtmlTags = {
    "abbr",  "b",       "bdi",        "bdo",     "big",        "blockquote",
    "br",    "caption", "center",     "ce",      "chem",       "cite",
    "code",  "data",    "dd",         "del",     "dfn",        "div",
    "dl",    "dt",      "em",         "font",    "hr",         "i",
    "includeonly", "ins", "kbd",      "li",      "mark",       "noinclude",
    "nowiki", "ol",     "onlyinclude", "p",      "poem",       "pre",
    "q",     "s",       "samp",       "small",   "span",       "strike",
    "strong", "sub",    "sup",        "table",   "td",         "th",
    "tr",    "tt",      "u",          "ul"};

// Length of a known HTML tag at s[i] ('<'), 0 if none.
size_t HtmlTagAt(std::string_view s, size_t i) {
  size_t p = i + 1;
  if (p < s.size() && s[p] == '/') ++p;
  size_t name_start = p;
  while (p < s.size() && IsAsciiAlnum(s[p])) ++p;
  if (p == name_start) return 0;
  std::string name(s.substr(name_start, p - name_start));
  for (char& c : name) c = Lower(c);
  if (std::find(kHtmlTags.begin(), kHtmlTags.end(), name) == kHtmlTags.end())
    return 0;
  if (p < s.size() && !(IsBlank(s[p]) || s[p] == '\n' || s[p] == '/' ||
                        s[p] == '>')) {
    return 0;
  }
  size_t gt = s.find_first_of("<>", p);
  if (gt == std::string_view::npos || s[gt] != '>') return 0;
  return gt + 1 - i;
}

std::string UnwrapHtmlTags(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  size_t i = 0;
  while (i < s.size()) {
    if (s[i] == '<') {
      if (size_t len = HtmlTagAt(s, i)) {
        i += len;
        continue;
      }
    }
    out.push_back(s[i++]);
  }
  return out;
}

// '' italic, ''' bold, ''''' both. A run of four keeps one apostrophe, longer
// runs keep the excess, as MediaWiki renders them.
std::string UnwrapQuotes(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '\'') {
      out.push_back(s[i++]);
      continue;
    }
    size_t run = 0;
    while (i + run < s.size() && s[i + run] == '\'') ++run;
    if (run == 4) {
      out.push_back('\'');
    } else if (run > 5) {
      out.append(run - 5, '\'');
    } else if (run == 1) {
      out.push_back('\'');
    }
    i += run;
  }
  return out;
}

struct Entity {
  std::string_view name;
  std::string_view text;
};
constexpr std::array<Entity, 6> kEntities = {{{"&nbsp;", " "},
                                              {"&ndash;", "–"},
                                              {"&mdash;", "—"},
                                              {"&quot;", "\""},
                                              {"&hellip;", "…"},
                                              {"&thinsp;", " "}}};

std::string DropMagicWordsAndEntities(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  size_t i = 0;
  while (i < s.size()) {
    if (StartsWithAt(s, i, "__")) {
      size_t p = i + 2;
      while (p < s.size() && s[p] >= 'A' && s[p] <= 'Z') ++p;
      if (p > i + 2 && StartsWithAt(s, p, "__")) {
        i = p + 2;
        continue;
      }
    }
    // Stray heading markers left mid-line.
    if (StartsWithAt(s, i, "==")) {
      while (i < s.size() && s[i] == '=') ++i;
      continue;
    }
    if (s[i] == '&') {
      bool replaced = false;
      for (const Entity& e : kEntities) {
        if (StartsWithAt(s, i, e.name)) {
          out.append(e.text);
          i += e.name.size();
          replaced = true;
          break;
        }
      }
      if (replaced) continue;
    }
    out.push_back(s[i++]);
  }
  return out;
}

// Drops list markers and horizontal rules, collapses spacing inside lines,
// and reduces blank-line runs to a single blank line.
std::string TidyLines(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool pending_blank = false;
  size_t i = 0;
  while (i <= s.size()) {
    size_t nl = s.find('\n', i);
    if (nl == std::string_view::npos) nl = s.size();
    std::string_view line = s.substr(i, nl - i);
    size_t p = 0;
    while (p < line.size() &&
           (line[p] == '*' || line[p] == '#' || line[p] == ':' ||
            line[p] == ';' || IsBlank(line[p]))) {
      ++p;
    }
    line = line.substr(p);
    if (line.size() >= 4 && line.find_first_not_of('-') == std::string_view::npos)
      line = {};
    std::string collapsed = utf8::CollapseSpace(line);
    if (collapsed.empty()) {
      pending_blank = !out.empty();
    } else {
      if (!out.empty()) out += pending_blank ? "\n\n" : "\n";
      pending_blank = false;
      out += collapsed;
    }
    i = nl + 1;
  }
  return out;
}

std::string StripFragmentOnce(std::string_view s) {
  std::string t = RemoveComments(s);
  t = RemoveInvisibleTags(t);
  t = RemoveTemplatesAndTables(t);
  t = UnwrapLinks(t);
  t = UnwrapExternalLinks(t);
  t = UnwrapHtmlTags(t);
  t = UnwrapQuotes(t);
  t = DropMagicWordsAndEntities(t);
  return TidyLines(t);
}

struct Section {
  std::optional<Heading> heading;  // absent for the lead
  std::string body;
};

// "== Title ==" with at least two '=' on each side. Unequal runs use the
// shorter one, as MediaWiki does.
std::optional<Heading> ParseHeadingLine(std::string_view line) {
  while (!line.empty() && (IsBlank(line.back()) || line.back() == '\r'))
    line.remove_suffix(1);
  size_t left = 0;
  while (left < line.size() && line[left] == '=') ++left;
  size_t right = 0;
  while (right < line.size() - left && line[line.size() - 1 - right] == '=')
    ++right;
  int level = static_cast<int>(std::min({left, right, size_t{6}}));
  if (level < 2 || line.size() <= 2 * static_cast<size_t>(level)) {
    return std::nullopt;
  }
  std::string_view title = line.substr(level, line.size() - 2 * level);
  if (Trim(title).empty()) return std::nullopt;
  return Heading{level, std::string(title)};
}

std::vector<Section> SplitSections(std::string_view s) {
  std::vector<Section> sections(1);
  size_t i = 0;
  while (i < s.size()) {
    size_t nl = s.find('\n', i);
    size_t end = nl == std::string_view::npos ? s.size() : nl + 1;
    std::string_view line = s.substr(i, end - i);
    std::string_view bare = line;
    if (!bare.empty() && bare.back() == '\n') bare.remove_suffix(1);
    if (auto h = ParseHeadingLine(bare)) {
      sections.push_back({std::move(h), {}});
    } else {
      sections.back().body.append(line);
    }
    i = end;
  }
  return sections;
}

std::string StripOnce(std::string_view raw) {
  std::vector<Section> sections = SplitSections(RemoveComments(raw));
  std::string out = StripFragmentOnce(sections.front().body);
  for (size_t k = 1; k < sections.size(); ++k) {
    std::string title = StripFragmentOnce(sections[k].heading->title);
    std::string body = StripFragmentOnce(sections[k].body);
    for (const std::string* part : {&title, &body}) {
      if (part->empty()) continue;
      if (!out.empty()) out += "\n";
      out += *part;
    }
  }
  return out;
}

std::vector<std::string> Paragraphs(std::string_view text) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < text.size()) {
    size_t gap = text.find("\n\n", i);
    if (gap == std::string_view::npos) gap = text.size();
    std::string para = utf8::CollapseSpace(text.substr(i, gap - i));
    if (!para.empty()) out.push_back(std::move(para));
    i = gap + 2;
  }
  return out;
}

}  // namespace

std::string StripWikicode(std::string_view raw) {
  // Each pass only ever shortens the text, so this reaches a fixed point;
  // the cap guards against pathological inputs.
  std::string cur = StripOnce(raw);
  for (int pass = 0; pass < 32; ++pass) {
    std::string next = StripOnce(cur);
    if (next == cur) break;
    cur = std::move(next);
  }
  return cur;
}

Document ParseDocument(std::string_view raw, const StripOptions& options) {
  std::vector<Section> sections = SplitSections(RemoveComments(raw));
  Document doc;
  std::vector<std::string> lead = Paragraphs(StripWikicode(sections[0].body));
  for (size_t k = 0; k < lead.size(); ++k) {
    if (k > 0) doc.lead_text += "\n\n";
    doc.lead_text += lead[k];
  }
  for (size_t k = 1; k < sections.size(); ++k) {
    const Heading& h = *sections[k].heading;
    doc.headings.push_back(
        {h.level, utf8::CollapseSpace(StripWikicode(h.title))});
    for (std::string& para : Paragraphs(StripWikicode(sections[k].body))) {
      if (utf8::Length(para) >= options.min_passage_chars) {
        doc.body_paragraphs.push_back(std::move(para));
      }
    }
  }
  return doc;
}

}  // namespace revmine
