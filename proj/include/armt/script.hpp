// Copyright 2026 The armt Authors
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
//
// Script-level plumbing shared by every transliteration scheme: text
// normalization, the Buckwalter codec, and tokenization/detokenization.

#ifndef ARMT_SCRIPT_HPP
#define ARMT_SCRIPT_HPP

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "armt/chars.hpp"
#include "armt/utf8.hpp"

namespace armt {

namespace detail {
#include "armt/detail/presentation_forms.inc"

inline const PresentationForm* find_presentation_form(char32_t cp) {
  const auto* begin = kPresentationForms;
  const auto* end = kPresentationForms + std::size(kPresentationForms);
  const auto* it = std::lower_bound(
      begin, end, cp,
      [](const PresentationForm& f, char32_t c) { return f.form < c; });
  return (it != end && it->form == cp) ? it : nullptr;
}
}  // namespace detail

inline constexpr char32_t kTatweel = U'ـ';

/// Decomposes Arabic presentation forms (U+FB50..U+FEFF) into base letters
/// plus diacritics, splits ligatures, and strips tatweel. Everything else
/// passes through untouched. Idempotent.
inline std::u32string normalize_codepoints(std::u32string_view text) {
  std::u32string out;
  out.reserve(text.size());
  for (char32_t cp : text) {
    if (cp == kTatweel) continue;
    if (cp >= 0xFB50 && cp <= 0xFEFF) {
      if (const auto* form = detail::find_presentation_form(cp)) {
        for (std::uint8_t i = 0; i < form->length; ++i) {
          const char32_t piece = detail::kPresentationFormText[form->offset + i];
          if (piece != kTatweel) out.push_back(piece);
        }
        continue;
      }
    }
    out.push_back(cp);
  }
  return out;
}

inline std::string normalize(std::string_view text) {
  return utf8::encode(normalize_codepoints(utf8::decode(text)));
}

/// Buckwalter transliteration. Covered codepoints map to their ASCII
/// symbol, everything else passes through. With `lowercase`, the result is
/// ASCII case-folded after mapping (the folded form is no longer
/// invertible).
inline std::string to_buckwalter(std::string_view text, bool lowercase = false) {
  std::string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char32_t cp = utf8::decode_next(text, pos);
    const auto* entry = lookup_arabic_char(cp);
    if (entry && entry->buckwalter != '\0') {
      out.push_back(entry->buckwalter);
    } else {
      utf8::append(out, cp);
    }
  }
  if (lowercase) {
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
      return static_cast<char>(std::tolower(c));
    });
  }
  return out;
}

/// Inverse of to_buckwalter(text, false). Unknown characters pass through.
inline std::string from_buckwalter(std::string_view text) {
  std::string out;
  out.reserve(text.size() * 2);
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char32_t cp = utf8::decode_next(text, pos);
    if (cp < 128) {
      if (const auto arabic = from_buckwalter_char(static_cast<char>(cp))) {
        utf8::append(out, *arabic);
        continue;
      }
    }
    utf8::append(out, cp);
  }
  return out;
}

enum class TokenKind : std::uint8_t { kWord, kNumber, kPunctuation, kForeign };

struct ArabicToken {
  std::u32string text;
  TokenKind kind = TokenKind::kForeign;
  bool preceded_by_space = false;

  std::string str() const { return utf8::encode(text); }
};

namespace detail {

inline bool is_detachable_punct(char32_t cp) {
  switch (cp) {
    case U'،':  // ،
    case U'؛':  // ؛
    case U'؟':  // ؟
    case U'٪':  // ٪
    case U'.':
    case U',':
    case U'!':
    case U'?':
    case U';':
    case U':':
    case U'(':
    case U')':
    case U'"':
    case U'\'':
    case U'%':
      return true;
    default:
      return false;
  }
}

inline bool is_space(char32_t cp) {
  return cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r' ||
         cp == U' ' || cp == U'\v' || cp == U'\f';
}

inline TokenKind classify(std::u32string_view text) {
  if (text.size() == 1 && is_detachable_punct(text[0]))
    return TokenKind::kPunctuation;
  bool all_digits = !text.empty();
  for (char32_t cp : text) {
    if (is_arabic_letter(cp)) return TokenKind::kWord;
    if (!is_arabic_indic_digit(cp) && !(cp >= U'0' && cp <= U'9'))
      all_digits = false;
  }
  return all_digits ? TokenKind::kNumber : TokenKind::kForeign;
}

}  // namespace detail

/// Splits normalized text on whitespace, then detaches leading/trailing
/// punctuation into separate tokens. Word-internal apostrophes and hyphens
/// never split. `preceded_by_space` records the original spacing.
inline std::vector<ArabicToken> tokenize(std::string_view text) {
  const std::u32string cps = utf8::decode(text);
  std::vector<ArabicToken> tokens;
  std::size_t i = 0;
  const auto emit = [&](std::u32string_view chunk, bool spaced) {
    // Peel punctuation off both ends; the core keeps the chunk's spacing.
    std::size_t begin = 0;
    std::size_t end = chunk.size();
    std::vector<char32_t> leading;
    while (begin < end && detail::is_detachable_punct(chunk[begin]))
      leading.push_back(chunk[begin++]);
    std::vector<char32_t> trailing;
    while (end > begin && detail::is_detachable_punct(chunk[end - 1]))
      trailing.push_back(chunk[--end]);
    bool first_spaced = spaced;
    for (char32_t cp : leading) {
      tokens.push_back({std::u32string(1, cp), TokenKind::kPunctuation,
                        first_spaced});
      first_spaced = false;
    }
    if (end > begin) {
      std::u32string core(chunk.substr(begin, end - begin));
      tokens.push_back({core, detail::classify(core), first_spaced});
    }
    for (auto it = trailing.rbegin(); it != trailing.rend(); ++it)
      tokens.push_back({std::u32string(1, *it), TokenKind::kPunctuation, false});
  };
  while (i < cps.size()) {
    bool spaced = false;
    while (i < cps.size() && detail::is_space(cps[i])) {
      spaced = true;
      ++i;
    }
    if (i >= cps.size()) break;
    const std::size_t start = i;
    while (i < cps.size() && !detail::is_space(cps[i])) ++i;
    emit(std::u32string_view(cps).substr(start, i - start), spaced);
  }
  return tokens;
}

/// Rejoins one transliterated string per token. A space separates tokens
/// that were space-separated in the source; punctuation-kind tokens attach
/// to the preceding token regardless.
inline std::string detokenize(const std::vector<std::string>& pieces,
                              const std::vector<ArabicToken>& tokens) {
  std::string out;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (pieces[i].empty()) continue;
    const bool spaced = i < tokens.size()
                            ? tokens[i].preceded_by_space &&
                                  tokens[i].kind != TokenKind::kPunctuation
                            : true;
    if (!out.empty() && spaced) out.push_back(' ');
    out += pieces[i];
  }
  return out;
}

}  // namespace armt

#endif  // ARMT_SCRIPT_HPP
