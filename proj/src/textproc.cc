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

#include "revmine/textproc.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "revmine/errors.h"
#include "revmine/hash.h"
#include "revmine/utf8.h"

namespace revmine {
namespace {

// Standard English nonbreaking prefixes, in the order of the Moses list;
// order matters because later duplicates override earlier ones.
constexpr std::string_view kEnglishPrefixes = R"(# Single upper case letters (initials)
A
B
C
D
E
F
G
H
I
J
K
L
M
N
O
P
Q
R
S
T
U
V
W
X
Y
Z
# Common abbreviations
Mr
Mrs
No
pp
St
no
Sr
Jr
Bros
etc
vs
esp
Fig
fig
Jan
Feb
Mar
Apr
Jun
Jul
Aug
Sep
Sept
Oct
Okt
Nov
Dec
Ph.D
PhD
al
cf
Inc
Ms
Gen
Sen
Prof
Dr
Corp
Co
# Titles and honorifics
Adj
Adm
Adv
Asst
Bart
Bldg
Brig
Bros
Capt
Cmdr
Col
Comdr
Con
Corp
Cpl
DR
Dr
Drs
Ens
Gen
Gov
Hon
Hr
Hosp
Insp
Lt
MM
MR
MRS
MS
Maj
Messrs
Mlle
Mme
Mr
Mrs
Ms
Msgr
Op
Ord
Pfc
Ph
Prof
Pvt
Rep
Reps
Res
Rev
Rt
Sen
Sens
Sfc
Sgt
Sr
St
Supt
Surg
# Misc
v
vs
i.e
rev
e.g
# Only before numbers
No #NUMERIC_ONLY#
Nos
Art #NUMERIC_ONLY#
Nr
pp #NUMERIC_ONLY#
)";

constexpr std::string_view kEnglishStopwords = R"(# English function words
a
about
above
after
again
against
all
am
an
and
any
are
as
at
be
because
been
before
being
below
between
both
but
by
can
could
did
do
does
doing
down
during
each
few
for
from
further
had
has
have
having
he
her
here
hers
herself
him
himself
his
how
i
if
in
into
is
it
its
itself
just
me
more
most
my
myself
no
nor
not
now
of
off
on
once
only
or
other
our
ours
ourselves
out
over
own
same
she
should
so
some
such
than
that
the
their
theirs
them
themselves
then
there
these
they
this
those
through
to
too
under
until
up
very
was
we
were
what
when
where
which
while
who
whom
why
will
with
would
you
your
yours
yourself
yourselves
also
may
might
must
shall
upon
within
without
among
across
along
although
though
whether
either
neither
yet
's
n't
're
've
'll
'd
'm
)";

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

template <typename Fn>
void ForEachLine(std::string_view content, Fn&& fn) {
  size_t i = 0;
  while (i < content.size()) {
    size_t nl = content.find('\n', i);
    if (nl == std::string_view::npos) nl = content.size();
    fn(content.substr(i, nl - i));
    i = nl + 1;
  }
}

std::string_view StripComment(std::string_view line) {
  size_t hash = line.find('#');
  if (hash != std::string_view::npos) line = line.substr(0, hash);
  while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
    line.remove_suffix(1);
  while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front())))
    line.remove_prefix(1);
  return line;
}

// ---- sentence splitting ---------------------------------------------------

using U32 = std::u32string;

U32 Decode(std::string_view s) {
  U32 out;
  out.reserve(s.size());
  for (size_t i = 0; i < s.size();) out.push_back(utf8::Next(s, &i));
  return out;
}

std::string Encode(std::u32string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char32_t c : s) utf8::Append(&out, c);
  return out;
}

bool Starter(char32_t c) { return utf8::IsUpper(c) || utf8::IsOtherLetter(c); }

bool Opener(char32_t c) {
  return c == U'\'' || c == U'"' || c == U'(' || c == U'[' || c == 0xBF ||
         c == 0xA1 || utf8::IsInitialPunct(c);
}

// The opener class of the last rule omits '('.
bool OpenerNoParen(char32_t c) { return c != U'(' && Opener(c); }

bool Closer(char32_t c) {
  return c == U'\'' || c == U'"' || c == U')' || c == U']' ||
         utf8::IsFinalPunct(c);
}

bool EndPunct(char32_t c) { return c == U'?' || c == U'!' || c == U'.'; }

size_t SkipSpaces(const U32& s, size_t i) {
  while (i < s.size() && s[i] == U' ') ++i;
  return i;
}

template <typename Pred>
size_t SkipWhile(const U32& s, size_t i, Pred pred) {
  while (i < s.size() && pred(s[i])) ++i;
  return i;
}

// "?" or "!" + spaces + openers* + uppercase.
U32 BreakAfterQuestionOrBang(const U32& s) {
  U32 out;
  size_t i = 0;
  while (i < s.size()) {
    char32_t c = s[i];
    if (c == U'?' || c == U'!') {
      size_t sp = SkipSpaces(s, i + 1);
      if (sp > i + 1) {
        size_t k = SkipWhile(s, sp, Opener);
        if (k < s.size() && Starter(s[k])) {
          out.push_back(c);
          out.push_back(U'\n');
          i = sp;
          continue;
        }
      }
    }
    out.push_back(c);
    ++i;
  }
  return out;
}

// ".." or longer + spaces + openers* + uppercase.
U32 BreakAfterEllipsis(const U32& s) {
  U32 out;
  size_t i = 0;
  while (i < s.size()) {
    if (s[i] == U'.' && i + 1 < s.size() && s[i + 1] == U'.') {
      size_t run = SkipWhile(s, i, [](char32_t c) { return c == U'.'; });
      out.append(s, i, run - i);
      size_t sp = SkipSpaces(s, run);
      if (sp > run) {
        size_t k = SkipWhile(s, sp, Opener);
        if (k < s.size() && Starter(s[k])) {
          out.push_back(U'\n');
          i = sp;
          continue;
        }
      }
      i = run;
      continue;
    }
    out.push_back(s[i++]);
  }
  return out;
}

// End punctuation + closing quotes/brackets + spaces + openers* + uppercase.
U32 BreakAfterClosingPunct(const U32& s) {
  U32 out;
  size_t i = 0;
  while (i < s.size()) {
    if (EndPunct(s[i])) {
      size_t j = SkipSpaces(s, i + 1);
      size_t k = SkipWhile(s, j, Closer);
      if (k > j) {
        size_t sp = SkipSpaces(s, k);
        if (sp > k) {
          size_t m = SkipWhile(s, sp, Opener);
          m = SkipSpaces(s, m);
          if (m < s.size() && Starter(s[m])) {
            out.append(s, i, k - i);
            out.push_back(U'\n');
            i = sp;
            continue;
          }
        }
      }
    }
    out.push_back(s[i++]);
  }
  return out;
}

// End punctuation + spaces + at least one opener + uppercase.
U32 BreakBeforeOpeningPunct(const U32& s) {
  U32 out;
  size_t i = 0;
  while (i < s.size()) {
    if (EndPunct(s[i])) {
      size_t sp = SkipSpaces(s, i + 1);
      if (sp > i + 1) {
        size_t m = SkipWhile(s, sp, OpenerNoParen);
        if (m > sp) {
          m = SkipSpaces(s, m);
          if (m < s.size() && Starter(s[m])) {
            out.push_back(s[i]);
            out.push_back(U'\n');
            i = sp;
            continue;
          }
        }
      }
    }
    out.push_back(s[i++]);
  }
  return out;
}

bool PrefixChar(char32_t c) { return utf8::IsWord(c) || c == U'.' || c == U'-'; }

bool WordCloser(char32_t c) { return Closer(c) || c == U'%'; }

struct PeriodWord {
  U32 prefix;
  bool closing_punct;
};

// Leftmost match of ([\w.-]*)(closers*)(\.+)$ over the word.
std::optional<PeriodWord> MatchPeriodWord(const U32& w) {
  const size_t n = w.size();
  if (n == 0 || w[n - 1] != U'.') return std::nullopt;
  for (size_t p = 0; p < n; ++p) {
    size_t a = SkipWhile(w, p, PrefixChar);
    if (a == n) return PeriodWord{w.substr(p, n - 1 - p), false};
    size_t b = SkipWhile(w, a, WordCloser);
    if (b > a && b < n &&
        std::all_of(w.begin() + b, w.end(), [](char32_t c) { return c == U'.'; })) {
      return PeriodWord{w.substr(p, a - p), true};
    }
  }
  return std::nullopt;
}

// (\.)[upper-]+(\.+)$
bool IsUpperAcronym(const U32& w) {
  size_t e = w.size();
  size_t dots = e;
  while (dots > 0 && w[dots - 1] == U'.') --dots;
  if (dots == e) return false;
  size_t r = dots;
  while (r > 0 && (Starter(w[r - 1]) || w[r - 1] == U'-')) --r;
  return r < dots && r > 0 && w[r - 1] == U'.';
}

// ^[ ]*openers*[ ]*(upper|digit)
bool StartsSentence(const U32& w) {
  size_t i = SkipSpaces(w, 0);
  i = SkipWhile(w, i, Opener);
  i = SkipSpaces(w, i);
  return i < w.size() && (Starter(w[i]) || utf8::IsDigit(w[i]));
}

std::vector<std::string> SplitParagraph(std::string_view para,
                                        const NonbreakingPrefixes& prefixes) {
  U32 text = Decode(para);
  text = BreakAfterQuestionOrBang(text);
  text = BreakAfterEllipsis(text);
  text = BreakAfterClosingPunct(text);
  text = BreakBeforeOpeningPunct(text);

  std::vector<U32> words;
  size_t i = 0;
  while (i <= text.size()) {
    size_t sp = text.find(U' ', i);
    if (sp == U32::npos) sp = text.size();
    words.push_back(text.substr(i, sp - i));
    i = sp + 1;
  }
  U32 joined;
  for (size_t k = 0; k + 1 < words.size(); ++k) {
    U32& w = words[k];
    if (auto m = MatchPeriodWord(w)) {
      std::optional<NonbreakingPrefixes::Kind> kind;
      if (!m->prefix.empty()) kind = prefixes.Find(Encode(m->prefix));
      bool honorific =
          kind == NonbreakingPrefixes::Kind::kDefault && !m->closing_punct;
      if (!honorific && !IsUpperAcronym(w) && StartsSentence(words[k + 1])) {
        const U32& next = words[k + 1];
        bool numeric = kind == NonbreakingPrefixes::Kind::kNumericOnly &&
                       !m->closing_punct && !next.empty() &&
                       utf8::IsDigit(next[0]);
        if (!numeric) w.push_back(U'\n');
      }
    }
    joined += w;
    joined.push_back(U' ');
  }
  joined += words.back();

  std::vector<std::string> out;
  size_t s = 0;
  while (s <= joined.size()) {
    size_t nl = joined.find(U'\n', s);
    if (nl == U32::npos) nl = joined.size();
    std::string sentence = utf8::CollapseSpace(Encode(
        std::u32string_view(joined).substr(s, nl - s)));
    if (!sentence.empty()) out.push_back(std::move(sentence));
    s = nl + 1;
  }
  return out;
}

// ---- tokenization ---------------------------------------------------------

constexpr std::string_view kClitics[] = {"n't", "'s", "'re", "'ve", "'ll",
                                         "'d",  "'m"};

// Periods stay attached to these.
constexpr std::string_view kAbbreviations[] = {
    "Mr",  "Mrs", "Ms",   "Dr",  "Jr",  "Sr",  "St",  "Prof", "Inc", "Ltd",
    "Co",  "Corp", "vs",  "etc", "Mt",  "Ft",  "Gov", "Sen",  "Rep", "Rev",
    "Gen", "Capt", "Col", "Sgt", "No",  "Nos", "Jan", "Feb",  "Aug", "Sept",
    "Oct", "Nov", "Dec",  "approx", "Bros", "ca", "cf"};

// Normalizes typographic apostrophes so clitic matching sees one form.
std::string AsciiApostrophes(std::string_view s) {
  std::string out;
  for (size_t i = 0; i < s.size();) {
    size_t start = i;
    char32_t c = utf8::Next(s, &i);
    if (c == 0x2019) {
      out.push_back('\'');
    } else {
      out.append(s.substr(start, i - start));
    }
  }
  return out;
}

bool IsClitic(std::string_view token) {
  std::string low = utf8::Lowercase(AsciiApostrophes(token));
  return std::find(std::begin(kClitics), std::end(kClitics), low) !=
         std::end(kClitics);
}

bool LeadingPunct(char32_t c) {
  return c == U'"' || c == U'\'' || c == U'(' || c == U'[' || c == U'{' ||
         c == 0xBF || c == 0xA1 || c == 0x201E || utf8::IsInitialPunct(c);
}

bool TrailingPunct(char32_t c) {
  return c == U'"' || c == U'\'' || c == U')' || c == U']' || c == U'}' ||
         c == U',' || c == U';' || c == U':' || c == U'!' || c == U'?' ||
         c == U'%' || c == 0x2026 || utf8::IsFinalPunct(c);
}

// Split everywhere, regardless of neighbours.
bool AlwaysInfix(char32_t c) {
  return c == U'"' || c == U'(' || c == U')' || c == U'[' || c == U']' ||
         c == U'{' || c == U'}' || c == U';' || c == U'!' || c == U'?' ||
         c == 0x2013 || c == 0x2014 || c == 0x2026 || utf8::IsInitialPunct(c) ||
         c == 0x201D;
}

void EmitStem(std::string_view stem, std::vector<std::string>* out);

void TokenizePiece(std::string_view piece, std::vector<std::string>* out) {
  if (piece.empty()) return;
  if (IsClitic(piece) || IsPunctuation(piece)) {
    // Pure punctuation runs ("...", "--", "'") stay as one token, except
    // that a run mixing several marks is split per character.
    size_t first = 0;
    utf8::Next(piece, &first);
    bool uniform = true;
    for (size_t i = 0; i < piece.size();) {
      size_t start = i;
      utf8::Next(piece, &i);
      if (piece.substr(start, i - start) != piece.substr(0, first)) uniform = false;
    }
    if (uniform || IsClitic(piece)) {
      out->emplace_back(piece);
    } else {
      for (size_t i = 0; i < piece.size();) {
        size_t start = i;
        utf8::Next(piece, &i);
        out->emplace_back(piece.substr(start, i - start));
      }
    }
    return;
  }
  // Leading punctuation.
  size_t b = 0;
  while (b < piece.size()) {
    size_t next = b;
    char32_t c = utf8::Next(piece, &next);
    if (!LeadingPunct(c) || IsClitic(piece.substr(b))) break;
    out->emplace_back(piece.substr(b, next - b));
    b = next;
  }
  // Trailing punctuation, collected in reverse.
  std::vector<std::string> tail;
  size_t e = piece.size();
  while (e > b) {
    size_t start;
    char32_t c = utf8::Prev(piece, e, &start);
    if (c == U'.') {
      size_t dots = e;
      while (dots > b && piece[dots - 1] == '.') --dots;
      if (e - dots >= 2) {
        tail.emplace_back(piece.substr(dots, e - dots));
        e = dots;
        continue;
      }
      std::string_view stem = piece.substr(b, e - 1 - b);
      bool keep = stem.find('.') != std::string_view::npos ||
                  (utf8::Length(stem) == 1 && utf8::IsLetter([&] {
                     size_t p = 0;
                     return utf8::Next(stem, &p);
                   }())) ||
                  std::find(std::begin(kAbbreviations), std::end(kAbbreviations),
                            stem) != std::end(kAbbreviations);
      if (keep || stem.empty()) break;
      tail.emplace_back(".");
      e -= 1;
      continue;
    }
    if (!TrailingPunct(c)) break;
    tail.emplace_back(piece.substr(start, e - start));
    e = start;
  }
  EmitStem(piece.substr(b, e - b), out);
  for (auto it = tail.rbegin(); it != tail.rend(); ++it) out->push_back(*it);
}

void EmitStem(std::string_view stem, std::vector<std::string>* out) {
  if (stem.empty()) return;
  std::string low = utf8::Lowercase(AsciiApostrophes(stem));
  for (std::string_view cl : kClitics) {
    if (low.size() > cl.size() && low.ends_with(cl)) {
      // Byte lengths agree after apostrophe normalization only for ASCII
      // apostrophes; recompute the split point on the original string.
      size_t cut = stem.size();
      size_t chars = utf8::Length(std::string_view(low).substr(low.size() - cl.size()));
      for (size_t k = 0; k < chars; ++k) {
        size_t start;
        utf8::Prev(stem, cut, &start);
        cut = start;
      }
      out->emplace_back(stem.substr(0, cut));
      out->emplace_back(stem.substr(cut));
      return;
    }
  }
  out->emplace_back(stem);
}

bool IsDigitByte(char c) { return c >= '0' && c <= '9'; }

// Splits a whitespace-free chunk on infix punctuation, then tokenizes each
// piece.
void TokenizeChunk(std::string_view chunk, std::vector<std::string>* out) {
  if (IsClitic(chunk)) {
    out->emplace_back(chunk);
    return;
  }
  size_t piece_start = 0;
  size_t i = 0;
  while (i < chunk.size()) {
    size_t start = i;
    char32_t c = utf8::Next(chunk, &i);
    bool split = AlwaysInfix(c);
    if (!split && (c == U',' || c == U':')) {
      bool digits_around = start > 0 && IsDigitByte(chunk[start - 1]) &&
                           i < chunk.size() && IsDigitByte(chunk[i]);
      split = !digits_around;
    }
    if (!split) continue;
    TokenizePiece(chunk.substr(piece_start, start - piece_start), out);
    out->emplace_back(chunk.substr(start, i - start));
    piece_start = i;
  }
  TokenizePiece(chunk.substr(piece_start), out);
}

}  // namespace

// ---- resources --------------------------------------------------------------

const NonbreakingPrefixes& NonbreakingPrefixes::English() {
  static const NonbreakingPrefixes kEnglish = Parse(kEnglishPrefixes);
  return kEnglish;
}

NonbreakingPrefixes NonbreakingPrefixes::Parse(std::string_view content) {
  NonbreakingPrefixes out;
  std::string canonical;
  ForEachLine(content, [&](std::string_view line) {
    Kind kind = line.find("#NUMERIC_ONLY#") != std::string_view::npos
                    ? Kind::kNumericOnly
                    : Kind::kDefault;
    std::string_view word = StripComment(line);
    if (word.empty()) return;
    out.prefixes_[std::string(word)] = kind;
    canonical.append(word);
    canonical.append(kind == Kind::kNumericOnly ? "#N\n" : "\n");
  });
  if (out.prefixes_.empty()) throw ConfigError("empty nonbreaking prefix list");
  out.fingerprint_ = Fnv1a64(canonical);
  return out;
}

NonbreakingPrefixes NonbreakingPrefixes::FromFile(
    const std::filesystem::path& path) {
  return Parse(ReadFile(path));
}

std::optional<NonbreakingPrefixes::Kind> NonbreakingPrefixes::Find(
    std::string_view prefix) const {
  auto it = prefixes_.find(std::string(prefix));
  if (it == prefixes_.end()) return std::nullopt;
  return it->second;
}

const StopwordList& StopwordList::English() {
  static const StopwordList kEnglish = Parse(kEnglishStopwords, "builtin");
  return kEnglish;
}

StopwordList StopwordList::Parse(std::string_view content, std::string source) {
  StopwordList out;
  out.source_ = std::move(source);
  ForEachLine(content, [&](std::string_view line) {
    std::string_view word = StripComment(line);
    if (!word.empty()) out.words_.insert(utf8::Lowercase(word));
  });
  if (out.words_.empty()) throw ConfigError("empty stopword list");
  std::vector<std::string> sorted(out.words_.begin(), out.words_.end());
  std::sort(sorted.begin(), sorted.end());
  uint64_t h = kFnvOffset;
  for (const auto& w : sorted) h = Fnv1a64(w + "\n", h);
  out.fingerprint_ = h;
  return out;
}

StopwordList StopwordList::FromFile(const std::filesystem::path& path) {
  return Parse(ReadFile(path), path.string());
}

bool StopwordList::Contains(std::string_view lowercase_word) const {
  return words_.contains(std::string(lowercase_word));
}

// ---- public text operations -------------------------------------------------

std::vector<std::string> SplitSentences(std::string_view text,
                                        const NonbreakingPrefixes& prefixes) {
  std::vector<std::string> out;
  // Paragraphs are separated by lines that are empty after trimming.
  std::string para;
  auto flush = [&] {
    std::string collapsed = utf8::CollapseSpace(para);
    para.clear();
    if (collapsed.empty()) return;
    for (auto& s : SplitParagraph(collapsed, prefixes)) out.push_back(std::move(s));
  };
  ForEachLine(text, [&](std::string_view line) {
    if (utf8::CollapseSpace(line).empty()) {
      flush();
    } else {
      para.append(line);
      para.push_back(' ');
    }
  });
  flush();
  return out;
}

std::vector<std::string> Tokenize(std::string_view sentence) {
  std::vector<std::string> out;
  size_t i = 0;
  size_t chunk_start = std::string_view::npos;
  while (i < sentence.size()) {
    size_t start = i;
    char32_t c = utf8::Next(sentence, &i);
    if (utf8::IsSpace(c)) {
      if (chunk_start != std::string_view::npos) {
        TokenizeChunk(sentence.substr(chunk_start, start - chunk_start), &out);
        chunk_start = std::string_view::npos;
      }
    } else if (chunk_start == std::string_view::npos) {
      chunk_start = start;
    }
  }
  if (chunk_start != std::string_view::npos) {
    TokenizeChunk(sentence.substr(chunk_start), &out);
  }
  return out;
}

std::string JoinTokens(std::span<const std::string> tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out.push_back(' ');
    out += t;
  }
  return out;
}

std::vector<std::string> SplitOnSpaces(std::string_view text) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < text.size()) {
    size_t sp = text.find(' ', i);
    if (sp == std::string_view::npos) sp = text.size();
    if (sp > i) out.emplace_back(text.substr(i, sp - i));
    i = sp + 1;
  }
  return out;
}

bool IsPunctuation(std::string_view token) {
  for (size_t i = 0; i < token.size();) {
    if (utf8::IsAlnum(utf8::Next(token, &i))) return false;
  }
  return true;
}

TokenSet::TokenSet(std::vector<std::string> words) : words_(std::move(words)) {
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

bool TokenSet::contains(std::string_view w) const {
  return std::binary_search(words_.begin(), words_.end(), w);
}

size_t TokenSet::IntersectionSize(const TokenSet& other) const {
  size_t n = 0;
  auto a = words_.begin();
  auto b = other.words_.begin();
  while (a != words_.end() && b != other.words_.end()) {
    if (*a < *b) {
      ++a;
    } else if (*b < *a) {
      ++b;
    } else {
      ++n;
      ++a;
      ++b;
    }
  }
  return n;
}

std::vector<std::string> TokenSet::Intersection(const TokenSet& other) const {
  std::vector<std::string> out;
  std::set_intersection(words_.begin(), words_.end(), other.words_.begin(),
                        other.words_.end(), std::back_inserter(out));
  return out;
}

TokenSet ContentTokens(std::span<const std::string> tokens,
                       const StopwordList& stopwords) {
  std::vector<std::string> kept;
  for (const auto& t : tokens) {
    if (t.empty() || IsPunctuation(t)) continue;
    std::string low = utf8::Lowercase(t);
    if (stopwords.Contains(low)) continue;
    kept.push_back(std::move(low));
  }
  return TokenSet(std::move(kept));
}

}  // namespace revmine
