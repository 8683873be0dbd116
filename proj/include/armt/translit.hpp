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
// Scheme dispatch shared by the corpus tooling, the fertility analyzer,
// and the CLI.

#ifndef ARMT_TRANSLIT_HPP
#define ARMT_TRANSLIT_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "armt/chartx.hpp"
#include "armt/morph.hpp"
#include "armt/script.hpp"

namespace armt {

enum class Scheme : std::uint8_t {
  kBuckwalter,
  kBuckwalterLc,
  kChartx,
  kMorphtx,
};

inline std::optional<Scheme> parse_scheme(std::string_view name) {
  if (name == "buckwalter") return Scheme::kBuckwalter;
  if (name == "buckwalter-lc") return Scheme::kBuckwalterLc;
  if (name == "chartx") return Scheme::kChartx;
  if (name == "morphtx") return Scheme::kMorphtx;
  return std::nullopt;
}

inline std::string_view scheme_name(Scheme scheme) {
  switch (scheme) {
    case Scheme::kBuckwalter: return "buckwalter";
    case Scheme::kBuckwalterLc: return "buckwalter-lc";
    case Scheme::kChartx: return "chartx";
    case Scheme::kMorphtx: return "morphtx";
  }
  return "?";
}

struct Engines {
  const RuleTable* chartx = &builtin_chartx_rules();
  const MorphRules* morph = &builtin_morph_rules();
  OrthoConfig ortho;
};

/// Word-level transliteration of one pre-tokenized token. The token is
/// never re-split, so the mapping is 1:1. Under morphtx, orthography is
/// applied within the token only.
inline std::string translit_token(const Engines& engines, Scheme scheme,
                                  std::string_view raw,
                                  const MorphAnalysis* analysis = nullptr,
                                  TranslitDiagnostics* diag = nullptr) {
  const std::string norm = normalize(raw);
  switch (scheme) {
    case Scheme::kBuckwalter:
      return to_buckwalter(norm, false);
    case Scheme::kBuckwalterLc:
      return to_buckwalter(norm, true);
    case Scheme::kChartx:
    case Scheme::kMorphtx: {
      ArabicToken token;
      token.text = utf8::decode(norm);
      token.kind = TokenKind::kWord;
      if (scheme == Scheme::kChartx)
        return chartx_word(*engines.chartx, token, diag);
      const std::string piece = morphtx_token(*engines.chartx, *engines.morph,
                                              token, analysis, diag);
      const std::vector<std::string> fixed =
          apply_maltese_orthography({piece}, engines.ortho);
      std::string out;
      for (const std::string& word : fixed) {
        if (!out.empty()) out.push_back(' ');
        out += word;
      }
      return out;
    }
  }
  throw std::logic_error("unreachable scheme");
}

/// Sentence-level transliteration of one line of raw text.
inline std::string translit_line(const Engines& engines, Scheme scheme,
                                 std::string_view line,
                                 const SentenceAnalyses* analyses = nullptr,
                                 TranslitDiagnostics* diag = nullptr) {
  switch (scheme) {
    case Scheme::kBuckwalter:
      return to_buckwalter(normalize(line), false);
    case Scheme::kBuckwalterLc:
      return to_buckwalter(normalize(line), true);
    case Scheme::kChartx:
      return chartx_text(*engines.chartx, line, diag);
    case Scheme::kMorphtx:
      return morphtx_text(*engines.chartx, *engines.morph, line, analyses,
                          engines.ortho, diag);
  }
  throw std::logic_error("unreachable scheme");
}

}  // namespace armt

#endif  // ARMT_TRANSLIT_HPP
