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
// Character-level Arabic-to-Maltese transliteration: a left-to-right
// longest-match scan where the highest-precedence rule class wins.

#ifndef ARMT_CHARTX_HPP
#define ARMT_CHARTX_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "armt/chars.hpp"
#include "armt/rules.hpp"
#include "armt/script.hpp"

namespace armt {

struct TranslitDiagnostics {
  std::size_t unmapped_arabic = 0;  // Arabic-block codepoints passed through
  std::size_t fallback_tokens = 0;  // morphtx tokens that fell back to chartx
  std::size_t fallback_sentences = 0;
  std::vector<std::string> messages;
};

/// Moves shadda to the front of each diacritic run so gemination rules see
/// the (letter, shadda) digram regardless of mark order in the input.
inline std::u32string reorder_shadda(std::u32string_view word) {
  std::u32string out(word);
  std::size_t i = 0;
  while (i < out.size()) {
    if (!is_arabic_diacritic(out[i])) {
      ++i;
      continue;
    }
    std::size_t end = i;
    while (end < out.size() && is_arabic_diacritic(out[end])) ++end;
    for (std::size_t j = i; j < end; ++j) {
      if (is_shadda(out[j])) {
        for (std::size_t k = j; k > i; --k) out[k] = out[k - 1];
        out[i] = U'ّ';
        break;
      }
    }
    i = end;
  }
  return out;
}

namespace detail {

inline bool rule_matches(const MappingRule& rule, std::u32string_view word,
                         std::size_t pos, bool at_start, bool at_end) {
  if (pos + rule.source.size() > word.size()) return false;
  for (std::size_t i = 0; i < rule.source.size(); ++i)
    if (word[pos + i] != rule.source[i]) return false;
  if (rule.anchor == Anchor::kBos && !(at_start && pos == 0)) return false;
  if (rule.anchor == Anchor::kEos &&
      !(at_end && pos + rule.source.size() == word.size()))
    return false;
  return true;
}

}  // namespace detail

/// Transliterates one word-level unit. `at_start`/`at_end` say whether the
/// unit's edges are word boundaries (false when mapping a morpheme that sits
/// inside a larger word). Unmatched codepoints pass through.
inline std::string chartx_map(const RuleTable& table, std::u32string_view raw,
                              bool at_start = true, bool at_end = true,
                              TranslitDiagnostics* diag = nullptr) {
  const std::u32string word = reorder_shadda(raw);
  std::string out;
  out.reserve(word.size() * 2);
  std::size_t pos = 0;
  while (pos < word.size()) {
    const MappingRule* best = nullptr;
    if (const auto* ids = table.candidates(word[pos])) {
      for (const std::size_t id : *ids) {
        const MappingRule& rule = table.rules()[id];
        if (detail::rule_matches(rule, word, pos, at_start, at_end)) {
          best = &rule;
          break;  // candidates are ordered by (class, length)
        }
      }
    }
    if (best) {
      out += best->target;
      pos += best->source.size();
    } else {
      if (diag && in_arabic_block(word[pos])) ++diag->unmapped_arabic;
      utf8::append(out, word[pos]);
      ++pos;
    }
  }
  return out;
}

inline std::string chartx_word(const RuleTable& table, const ArabicToken& token,
                               TranslitDiagnostics* diag = nullptr) {
  return chartx_map(table, token.text, true, true, diag);
}

/// Full pipeline: normalize, tokenize, map each token, detokenize.
inline std::string chartx_text(const RuleTable& table, std::string_view text,
                               TranslitDiagnostics* diag = nullptr) {
  const std::vector<ArabicToken> tokens = tokenize(normalize(text));
  std::vector<std::string> pieces;
  pieces.reserve(tokens.size());
  for (const ArabicToken& token : tokens)
    pieces.push_back(chartx_word(table, token, diag));
  return detokenize(pieces, tokens);
}

inline std::string chartx_text(std::string_view text,
                               TranslitDiagnostics* diag = nullptr) {
  return chartx_text(builtin_chartx_rules(), text, diag);
}

}  // namespace armt

#endif  // ARMT_CHARTX_HPP
