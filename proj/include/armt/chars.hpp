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
// Arabic codepoint inventory: class per codepoint plus the Buckwalter
// ASCII transliteration for every covered symbol.

#ifndef ARMT_CHARS_HPP
#define ARMT_CHARS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <unordered_map>

namespace armt {

enum class CharClass : std::uint8_t {
  kLetter,
  kDiacritic,
  kDigit,
  kPunctuation,
  kOther,
};

struct ArabicChar {
  char32_t codepoint;
  CharClass cls;
  char buckwalter;  // '\0' where no Buckwalter symbol is defined
};

// clang-format off
inline constexpr std::array<ArabicChar, 55> kArabicChars{{
    {U'ء', CharClass::kLetter,      '\''},  // hamza
    {U'آ', CharClass::kLetter,      '|'},   // alef madda
    {U'أ', CharClass::kLetter,      '>'},   // alef hamza above
    {U'ؤ', CharClass::kLetter,      '&'},   // waw hamza
    {U'إ', CharClass::kLetter,      '<'},   // alef hamza below
    {U'ئ', CharClass::kLetter,      '}'},   // yeh hamza
    {U'ا', CharClass::kLetter,      'A'},   // alef
    {U'ب', CharClass::kLetter,      'b'},   // beh
    {U'ة', CharClass::kLetter,      'p'},   // teh marbuta
    {U'ت', CharClass::kLetter,      't'},   // teh
    {U'ث', CharClass::kLetter,      'v'},   // theh
    {U'ج', CharClass::kLetter,      'j'},   // jeem
    {U'ح', CharClass::kLetter,      'H'},   // hah
    {U'خ', CharClass::kLetter,      'x'},   // khah
    {U'د', CharClass::kLetter,      'd'},   // dal
    {U'ذ', CharClass::kLetter,      '*'},   // thal
    {U'ر', CharClass::kLetter,      'r'},   // reh
    {U'ز', CharClass::kLetter,      'z'},   // zain
    {U'س', CharClass::kLetter,      's'},   // seen
    {U'ش', CharClass::kLetter,      '$'},   // sheen
    {U'ص', CharClass::kLetter,      'S'},   // sad
    {U'ض', CharClass::kLetter,      'D'},   // dad
    {U'ط', CharClass::kLetter,      'T'},   // tah
    {U'ظ', CharClass::kLetter,      'Z'},   // zah
    {U'ع', CharClass::kLetter,      'E'},   // ain
    {U'غ', CharClass::kLetter,      'g'},   // ghain
    {U'ـ', CharClass::kOther,       '_'},   // tatweel
    {U'ف', CharClass::kLetter,      'f'},   // feh
    {U'ق', CharClass::kLetter,      'q'},   // qaf
    {U'ك', CharClass::kLetter,      'k'},   // kaf
    {U'ل', CharClass::kLetter,      'l'},   // lam
    {U'م', CharClass::kLetter,      'm'},   // meem
    {U'ن', CharClass::kLetter,      'n'},   // noon
    {U'ه', CharClass::kLetter,      'h'},   // heh
    {U'و', CharClass::kLetter,      'w'},   // waw
    {U'ى', CharClass::kLetter,      'Y'},   // alef maksura
    {U'ي', CharClass::kLetter,      'y'},   // yeh
    {U'ً', CharClass::kDiacritic,   'F'},   // fathatan
    {U'ٌ', CharClass::kDiacritic,   'N'},   // dammatan
    {U'ٍ', CharClass::kDiacritic,   'K'},   // kasratan
    {U'َ', CharClass::kDiacritic,   'a'},   // fatha
    {U'ُ', CharClass::kDiacritic,   'u'},   // damma
    {U'ِ', CharClass::kDiacritic,   'i'},   // kasra
    {U'ّ', CharClass::kDiacritic,   '~'},   // shadda
    {U'ْ', CharClass::kDiacritic,   'o'},   // sukun
    {U'٠', CharClass::kDigit,       '0'},
    {U'١', CharClass::kDigit,       '1'},
    {U'٢', CharClass::kDigit,       '2'},
    {U'٣', CharClass::kDigit,       '3'},
    {U'٤', CharClass::kDigit,       '4'},
    {U'٥', CharClass::kDigit,       '5'},
    {U'٦', CharClass::kDigit,       '6'},
    {U'٧', CharClass::kDigit,       '7'},
    {U'٨', CharClass::kDigit,       '8'},
    {U'٩', CharClass::kDigit,       '9'},
}};

inline constexpr std::array<ArabicChar, 6> kArabicExtraChars{{
    {U'،', CharClass::kPunctuation, ','},   // arabic comma
    {U'؛', CharClass::kPunctuation, ';'},   // arabic semicolon
    {U'؟', CharClass::kPunctuation, '?'},   // arabic question mark
    {U'٪', CharClass::kPunctuation, '%'},   // arabic percent sign
    {U'ٰ', CharClass::kDiacritic,   '`'},   // superscript (dagger) alef
    {U'ٱ', CharClass::kLetter,      '{'},   // alef wasla
}};
// clang-format on

inline const ArabicChar* lookup_arabic_char(char32_t cp) {
  static const auto index = [] {
    std::unordered_map<char32_t, const ArabicChar*> map;
    for (const auto& entry : kArabicChars) map.emplace(entry.codepoint, &entry);
    for (const auto& entry : kArabicExtraChars)
      map.emplace(entry.codepoint, &entry);
    return map;
  }();
  const auto it = index.find(cp);
  return it == index.end() ? nullptr : it->second;
}

inline std::optional<char32_t> from_buckwalter_char(char ascii) {
  static const auto index = [] {
    std::array<char32_t, 128> map{};
    for (const auto& entry : kArabicChars)
      map[static_cast<unsigned char>(entry.buckwalter)] = entry.codepoint;
    for (const auto& entry : kArabicExtraChars)
      map[static_cast<unsigned char>(entry.buckwalter)] = entry.codepoint;
    return map;
  }();
  const auto uc = static_cast<unsigned char>(ascii);
  if (uc >= 128 || index[uc] == 0) return std::nullopt;
  return index[uc];
}

inline bool is_arabic_letter(char32_t cp) {
  const auto* entry = lookup_arabic_char(cp);
  return entry && entry->cls == CharClass::kLetter;
}

inline bool is_arabic_diacritic(char32_t cp) {
  const auto* entry = lookup_arabic_char(cp);
  return entry && entry->cls == CharClass::kDiacritic;
}

inline bool is_shadda(char32_t cp) { return cp == U'ّ'; }

/// Anything in the Arabic Unicode blocks, mapped or not.
inline bool in_arabic_block(char32_t cp) {
  return (cp >= 0x0600 && cp <= 0x06FF) || (cp >= 0x0750 && cp <= 0x077F) ||
         (cp >= 0x08A0 && cp <= 0x08FF) || (cp >= 0xFB50 && cp <= 0xFDFF) ||
         (cp >= 0xFE70 && cp <= 0xFEFF);
}

inline bool is_arabic_indic_digit(char32_t cp) {
  return cp >= 0x0660 && cp <= 0x0669;
}

}  // namespace armt

#endif  // ARMT_CHARS_HPP
