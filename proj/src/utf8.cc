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

#include "revmine/utf8.h"

namespace revmine::utf8 {

char32_t Next(std::string_view s, size_t* pos) {
  const auto byte = [&](size_t i) { return static_cast<unsigned char>(s[i]); };
  size_t i = *pos;
  unsigned char c = byte(i);
  if (c < 0x80) {
    *pos = i + 1;
    return c;
  }
  int extra;
  char32_t cp;
  if ((c & 0xE0) == 0xC0) {
    extra = 1;
    cp = c & 0x1F;
  } else if ((c & 0xF0) == 0xE0) {
    extra = 2;
    cp = c & 0x0F;
  } else if ((c & 0xF8) == 0xF0) {
    extra = 3;
    cp = c & 0x07;
  } else {
    *pos = i + 1;
    return 0xFFFD;
  }
  if (i + extra >= s.size()) {
    *pos = i + 1;
    return 0xFFFD;
  }
  for (int k = 1; k <= extra; ++k) {
    unsigned char cc = byte(i + k);
    if ((cc & 0xC0) != 0x80) {
      *pos = i + 1;
      return 0xFFFD;
    }
    cp = (cp << 6) | (cc & 0x3F);
  }
  *pos = i + 1 + extra;
  return cp;
}

char32_t Prev(std::string_view s, size_t pos, size_t* start) {
  size_t i = pos;
  int back = 0;
  while (i > 0 && back < 4) {
    --i;
    ++back;
    if ((static_cast<unsigned char>(s[i]) & 0xC0) != 0x80) break;
  }
  size_t p = i;
  char32_t cp = Next(s, &p);
  if (p != pos) {
    // Stray continuation byte; step back a single byte.
    *start = pos - 1;
    return 0xFFFD;
  }
  *start = i;
  return cp;
}

void Append(std::string* out, char32_t cp) {
  if (cp < 0x80) {
    out->push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out->push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out->push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out->push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

namespace {

// Latin Extended-A alternates case in pairs; the parity of the uppercase
// member flips in 0x139..0x148 and 0x179..0x17E.
bool LatinExtAUpper(char32_t cp) {
  if (cp == 0x178) return true;
  if (cp == 0x138 || cp == 0x149 || cp == 0x17F) return false;
  if ((cp >= 0x139 && cp <= 0x148) || (cp >= 0x179 && cp <= 0x17E))
    return cp % 2 == 1;
  return cp % 2 == 0;
}

}  // namespace

bool IsUpper(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return true;
  if (cp < 0xC0) return false;
  if (cp <= 0xDE) return cp != 0xD7;
  if (cp >= 0x100 && cp <= 0x17F) return LatinExtAUpper(cp);
  if (cp >= 0x391 && cp <= 0x3A9) return cp != 0x3A2;
  if (cp >= 0x400 && cp <= 0x42F) return true;
  return false;
}

bool IsLower(char32_t cp) {
  if (cp >= U'a' && cp <= U'z') return true;
  if (cp < 0xDF) return false;
  if (cp <= 0xFF) return cp != 0xF7;
  if (cp >= 0x100 && cp <= 0x17F) return !LatinExtAUpper(cp);
  if (cp >= 0x3AC && cp <= 0x3CE) return true;
  if (cp >= 0x430 && cp <= 0x45F) return true;
  return false;
}

bool IsOtherLetter(char32_t cp) {
  return (cp >= 0x5D0 && cp <= 0x5EA) ||    // Hebrew
         (cp >= 0x620 && cp <= 0x64A) ||    // Arabic
         (cp >= 0x904 && cp <= 0x939) ||    // Devanagari
         (cp >= 0xE01 && cp <= 0xE30) ||    // Thai
         (cp >= 0x3040 && cp <= 0x30FF) ||  // Kana
         (cp >= 0x3400 && cp <= 0x4DBF) || (cp >= 0x4E00 && cp <= 0x9FFF) ||
         (cp >= 0xAC00 && cp <= 0xD7AF);  // Hangul
}

bool IsLetter(char32_t cp) {
  if (cp < 0x80) return (cp | 0x20) >= U'a' && (cp | 0x20) <= U'z';
  if (cp == 0xAA || cp == 0xB5 || cp == 0xBA) return true;
  if (cp < 0xC0 || cp == 0xD7 || cp == 0xF7) return false;
  if (cp >= 0x2000 && cp <= 0x2BFF) return false;  // punctuation, symbols
  if (cp >= 0x3000 && cp <= 0x303F) return false;  // CJK punctuation
  if (cp >= 0xFE30 && cp <= 0xFE4F) return false;
  if (cp >= 0xFF00 && cp <= 0xFF0F) return false;
  if (cp == 0xFFFD) return false;
  if (cp >= 0x300 && cp <= 0x36F) return true;  // combining marks travel
  return true;
}

bool IsDigit(char32_t cp) { return cp >= U'0' && cp <= U'9'; }

bool IsSpace(char32_t cp) {
  return cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r' ||
         cp == U'\f' || cp == U'\v' || cp == 0xA0 ||
         (cp >= 0x2000 && cp <= 0x200A) || cp == 0x2028 || cp == 0x2029 ||
         cp == 0x202F || cp == 0x205F || cp == 0x3000;
}

bool IsInitialPunct(char32_t cp) {
  return cp == 0xAB || cp == 0x2018 || cp == 0x201B || cp == 0x201C ||
         cp == 0x201F || cp == 0x2039 || cp == 0x2E02 || cp == 0x2E04 ||
         cp == 0x2E09 || cp == 0x2E0C || cp == 0x2E1C || cp == 0x2E20;
}

bool IsFinalPunct(char32_t cp) {
  return cp == 0xBB || cp == 0x2019 || cp == 0x201D || cp == 0x203A ||
         cp == 0x2E03 || cp == 0x2E05 || cp == 0x2E0A || cp == 0x2E0D ||
         cp == 0x2E1D || cp == 0x2E21;
}

char32_t ToLower(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return cp + 32;
  if (cp < 0xC0) return cp;
  if (cp <= 0xDE) return cp == 0xD7 ? cp : cp + 32;
  if (cp == 0x178) return 0xFF;
  if (cp >= 0x100 && cp <= 0x17F) return LatinExtAUpper(cp) ? cp + 1 : cp;
  if (cp >= 0x391 && cp <= 0x3A9 && cp != 0x3A2) return cp + 32;
  if (cp >= 0x410 && cp <= 0x42F) return cp + 32;
  if (cp >= 0x400 && cp <= 0x40F) return cp + 80;
  return cp;
}

std::string Lowercase(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  size_t i = 0;
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < 0x80) {
      out.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c + 32)
                                         : static_cast<char>(c));
      ++i;
      continue;
    }
    size_t start = i;
    char32_t cp = Next(s, &i);
    if (cp == 0xFFFD) {
      // Keep malformed bytes as they were.
      out.append(s.substr(start, i - start));
    } else {
      Append(&out, ToLower(cp));
    }
  }
  return out;
}

size_t Length(std::string_view s) {
  size_t n = 0;
  for (size_t i = 0; i < s.size();) {
    Next(s, &i);
    ++n;
  }
  return n;
}

std::string CollapseSpace(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool pending = false;
  for (size_t i = 0; i < s.size();) {
    size_t start = i;
    char32_t cp = Next(s, &i);
    if (IsSpace(cp)) {
      pending = !out.empty();
      continue;
    }
    if (pending) out.push_back(' ');
    pending = false;
    out.append(s.substr(start, i - start));
  }
  return out;
}

}  // namespace revmine::utf8
