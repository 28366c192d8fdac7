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

#ifndef REVMINE_UTF8_H_
#define REVMINE_UTF8_H_

#include <string>
#include <string_view>

// Minimal UTF-8 decoding and character classes for the scripts the English
// pipeline meets in practice (Latin, Greek, Cyrillic, plus a coarse notion
// of "other letter" for CJK and unicameral scripts). Not a Unicode database.
namespace revmine::utf8 {

// Decodes the code point starting at s[*pos] and advances *pos past it.
// Malformed sequences decode as U+FFFD and consume one byte.
char32_t Next(std::string_view s, size_t* pos);

// Code point ending just before s[pos]; sets *start to its first byte.
char32_t Prev(std::string_view s, size_t pos, size_t* start);

void Append(std::string* out, char32_t cp);

bool IsUpper(char32_t cp);
bool IsLower(char32_t cp);
bool IsOtherLetter(char32_t cp);
bool IsLetter(char32_t cp);
bool IsDigit(char32_t cp);
inline bool IsAlnum(char32_t cp) { return IsLetter(cp) || IsDigit(cp); }
// \w in the regex sense: letters, digits, underscore.
inline bool IsWord(char32_t cp) { return IsAlnum(cp) || cp == U'_'; }
bool IsSpace(char32_t cp);
bool IsInitialPunct(char32_t cp);
bool IsFinalPunct(char32_t cp);

char32_t ToLower(char32_t cp);
std::string Lowercase(std::string_view s);

// Number of code points.
size_t Length(std::string_view s);

// Collapses every whitespace run to one ASCII space and trims both ends.
std::string CollapseSpace(std::string_view s);

}  // namespace revmine::utf8

#endif  // REVMINE_UTF8_H_
