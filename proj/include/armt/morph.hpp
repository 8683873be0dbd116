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
// Morphology-aware transliteration. Morphological analyses arrive from an
// external disambiguator through a line-delimited JSON sidecar; morpheme
// rules override the character mappings, residual stems run through the
// character engine with diacritics active, and Maltese orthographic
// conventions (sun-letter assimilation, fi/bi contraction, post-vocalic
// article reduction) are applied sentence-wide afterwards.

#ifndef ARMT_MORPH_HPP
#define ARMT_MORPH_HPP

#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "armt/chartx.hpp"
#include "armt/chars.hpp"
#include "armt/rules.hpp"
#include "armt/script.hpp"

namespace armt {

enum class MorphPosition : std::uint8_t {
  kProclitic,
  kPrefix,
  kStem,
  kSuffix,
  kEnclitic,
};

struct Morpheme {
  std::string surface;  // diacritized Arabic substring, UTF-8
  std::string tag;      // e.g. DET, PVSUFF_SUBJ:3FS
  MorphPosition position = MorphPosition::kStem;
};

struct MorphAnalysis {
  int token_index = 0;
  std::string diacritized;
  std::vector<Morpheme> morphemes;
  bool proper_noun = false;
  bool construct_state = false;
  bool missing = false;  // no usable analysis; token falls back to chartx
};

struct SentenceAnalyses {
  std::string sentence_id;
  std::vector<MorphAnalysis> tokens;
  std::string provenance;  // preserved, not interpreted
};

struct SidecarError {
  std::size_t line = 0;
  std::string message;
};

/// Reads the line-delimited JSON sidecar. A malformed record yields a
/// SidecarError plus a null entry at its position; loading never aborts.
inline std::vector<std::optional<SentenceAnalyses>> load_analyses(
    std::istream& stream, std::vector<SidecarError>* errors = nullptr) {
  std::vector<std::optional<SentenceAnalyses>> records;
  std::string line;
  std::size_t line_no = 0;
  const auto fail = [&](const std::string& message) {
    if (errors) errors->push_back({line_no, message});
    records.push_back(std::nullopt);
  };
  while (std::getline(stream, line)) {
    ++line_no;
    if (line.empty()) {
      fail("empty record");
      continue;
    }
    nlohmann::json record = nlohmann::json::parse(line, nullptr, false);
    if (record.is_discarded() || !record.is_object()) {
      fail("malformed JSON record");
      continue;
    }
    if (!record.contains("tokens") || !record["tokens"].is_array()) {
      fail("record has no tokens array");
      continue;
    }
    SentenceAnalyses sentence;
    sentence.sentence_id = record.value("sentence_id", std::string());
    sentence.provenance = record.value("provenance", std::string());
    bool ok = true;
    int index = 0;
    for (const auto& tok : record["tokens"]) {
      if (!tok.is_object() || !tok.contains("diacritized") ||
          !tok["diacritized"].is_string()) {
        ok = false;
        break;
      }
      MorphAnalysis analysis;
      analysis.token_index = index++;
      analysis.diacritized = tok["diacritized"].get<std::string>();
      analysis.proper_noun = tok.value("proper_noun", false);
      analysis.construct_state = tok.value("construct", false);
      if (!tok.contains("morphemes") || tok["morphemes"].is_null()) {
        analysis.missing = true;
      } else if (!tok["morphemes"].is_array()) {
        ok = false;
        break;
      } else {
        for (const auto& m : tok["morphemes"]) {
          if (!m.is_object() || !m.contains("surface") || !m.contains("tag")) {
            ok = false;
            break;
          }
          Morpheme morpheme;
          morpheme.surface = m["surface"].get<std::string>();
          morpheme.tag = m["tag"].get<std::string>();
          analysis.morphemes.push_back(std::move(morpheme));
        }
        if (!ok) break;
        if (analysis.morphemes.empty()) analysis.missing = true;
      }
      sentence.tokens.push_back(std::move(analysis));
    }
    if (!ok) {
      fail("malformed token entry");
      continue;
    }
    records.push_back(std::move(sentence));
  }
  return records;
}

struct MorphemeRule {
  std::vector<std::vector<std::string>> tag_patterns;  // field lists, "*" = any
  std::vector<std::string> sources;  // Buckwalter forms; empty = any form
  std::string target;                // marker-free Maltese text
  bool detach = false;               // target followed by a space
  bool requires_construct = false;
  std::string row;
};

namespace detail {

inline std::vector<std::string> expand_braces(const std::string& pattern) {
  const std::size_t open = pattern.find('{');
  if (open == std::string::npos) return {pattern};
  const std::size_t close = pattern.find('}', open);
  if (close == std::string::npos)
    throw std::runtime_error("unbalanced '{' in tag pattern: " + pattern);
  std::vector<std::string> out;
  std::string alt;
  std::vector<std::string> alts;
  for (std::size_t i = open + 1; i <= close; ++i) {
    if (i == close || pattern[i] == ',') {
      alts.push_back(alt);
      alt.clear();
    } else {
      alt.push_back(pattern[i]);
    }
  }
  for (const std::string& choice : alts) {
    const std::string expanded =
        pattern.substr(0, open) + choice + pattern.substr(close + 1);
    for (std::string& rest : expand_braces(expanded)) out.push_back(rest);
  }
  return out;
}

inline std::vector<std::string> split_tag_fields(std::string_view tag) {
  std::vector<std::string> fields;
  std::string field;
  for (char c : tag) {
    if (c == '_' || c == ':') {
      fields.push_back(field);
      field.clear();
    } else {
      field.push_back(c);
    }
  }
  fields.push_back(field);
  return fields;
}

inline bool tag_fields_match(const std::vector<std::string>& pattern,
                             const std::vector<std::string>& tag) {
  if (pattern.size() != tag.size()) return false;
  for (std::size_t i = 0; i < pattern.size(); ++i)
    if (pattern[i] != "*" && pattern[i] != tag[i]) return false;
  return true;
}

}  // namespace detail

class MorphRules {
 public:
  static MorphRules parse(std::string_view tsv) {
    MorphRules rules;
    rules.checksum_ = fnv1a64(tsv);
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= tsv.size()) {
      const std::size_t eol = tsv.find('\n', start);
      std::string_view line = tsv.substr(
          start, eol == std::string_view::npos ? tsv.size() - start
                                               : eol - start);
      ++line_no;
      start = eol == std::string_view::npos ? tsv.size() + 1 : eol + 1;
      if (line.empty() || line[0] == '#') continue;
      rules.rules_.push_back(parse_line(line, line_no));
    }
    return rules;
  }

  const std::vector<MorphemeRule>& rules() const { return rules_; }
  std::uint64_t checksum() const { return checksum_; }

  /// First matching rule, specific-form rules before wildcard-form rules.
  const MorphemeRule* find(std::string_view tag, std::string_view surface_bw,
                           bool construct_state) const {
    const std::vector<std::string> fields = detail::split_tag_fields(tag);
    const MorphemeRule* wildcard = nullptr;
    for (const MorphemeRule& rule : rules_) {
      if (rule.requires_construct && !construct_state) continue;
      bool tag_ok = false;
      for (const auto& pattern : rule.tag_patterns) {
        if (detail::tag_fields_match(pattern, fields)) {
          tag_ok = true;
          break;
        }
      }
      if (!tag_ok) continue;
      if (rule.sources.empty()) {
        if (!wildcard) wildcard = &rule;
        continue;
      }
      for (const std::string& form : rule.sources)
        if (surface_matches(surface_bw, form)) return &rule;
    }
    return wildcard;
  }

  /// A surface matches a table form exactly, or after shedding the leading
  /// vowel mark or trailing case mark the analyzer attached to it.
  static bool surface_matches(std::string_view surface_bw,
                              std::string_view form) {
    if (surface_bw == form) return true;
    std::string_view trimmed = surface_bw;
    while (!trimmed.empty() && is_diacritic_symbol(trimmed.front()))
      trimmed.remove_prefix(1);
    if (trimmed == form) return true;
    while (!trimmed.empty() && is_diacritic_symbol(trimmed.back()))
      trimmed.remove_suffix(1);
    return trimmed == form;
  }

 private:
  static bool is_diacritic_symbol(char c) {
    switch (c) {
      case 'a':
      case 'i':
      case 'u':
      case 'o':
      case 'F':
      case 'K':
      case 'N':
      case '~':
      case '`':
        return true;
      default:
        return false;
    }
  }

  static MorphemeRule parse_line(std::string_view line, std::size_t line_no) {
    std::vector<std::string> fields;
    std::size_t pos = 0;
    while (true) {
      const std::size_t tab = line.find('\t', pos);
      if (tab == std::string_view::npos) {
        fields.emplace_back(line.substr(pos));
        break;
      }
      fields.emplace_back(line.substr(pos, tab - pos));
      pos = tab + 1;
    }
    if (fields.size() != 5)
      throw std::runtime_error("morph rule line " + std::to_string(line_no) +
                               ": expected 5 tab-separated fields");
    MorphemeRule rule;
    for (const std::string& pattern : detail::expand_braces(fields[0]))
      rule.tag_patterns.push_back(detail::split_tag_fields(pattern));
    if (fields[1] != "-") {
      std::string form;
      for (char c : fields[1]) {
        if (c == '|') {
          rule.sources.push_back(form);
          form.clear();
        } else {
          form.push_back(c);
        }
      }
      rule.sources.push_back(form);
    }
    rule.target = fields[2];
    if (!rule.target.empty() && rule.target.back() == '_') {
      rule.detach = true;
      rule.target.pop_back();
    }
    if (fields[3] == "construct") {
      rule.requires_construct = true;
    } else if (fields[3] != "-") {
      throw std::runtime_error("morph rule line " + std::to_string(line_no) +
                               ": bad flags '" + fields[3] + "'");
    }
    rule.row = fields[4];
    if (rule.row.empty())
      throw std::runtime_error("morph rule line " + std::to_string(line_no) +
                               ": missing row label");
    return rule;
  }

  std::vector<MorphemeRule> rules_;
  std::uint64_t checksum_ = 0;
};

// Morpheme mappings. Specific-form rows fire only on that form; '_' marks a
// target detached from the word; the construct flag restricts a row to
// construct-state tokens.
inline constexpr std::string_view kMorphtxRulesTsv =
    R"(# armt morphtx rules v1
# tag	source(Buckwalter)	target	flags	row
CONJ	wa|wi	u_	-	5.01
DET	Al	il-	-	5.02
PREP	bi	bi_	-	5.03
PREP	li	li_	-	5.04
PREP	fiy	fi_	-	5.05
NOUN	maE	ma'_	-	5.06
NOUN	taAE	ta'_	-	5.07
PREP	EalaY	għal_	-	5.08
PREP	min	minn_	-	5.09
NSUFF_FEM_SG	p	t	construct	5.10
FUT_PART	sa	sa	-	5.11
CASE_*_*	-		-	5.12
IVSUFF_MOOD:*	-		-	5.13
IVSUFF_SUBJ:2FS	-		-	5.14
IVSUFF_SUBJ:{D,MP,FP}	-	u	-	5.15
PVSUFF_SUBJ:{1S,2MS,2FS}	-	t	-	5.16
PVSUFF_SUBJ:3MS	-		-	5.17
PVSUFF_SUBJ:3FS	-	at	-	5.18
PVSUFF_SUBJ:1P	-	na	-	5.19
PVSUFF_SUBJ:{2D,2MP,2FP}	-	tu	-	5.20
PVSUFF_SUBJ:3MP	woA	ew	-	5.21
PVSUFF_SUBJ:{3MD,3FD,3MP,3FP}	-	u	-	5.22
CVSUFF_SUBJ:{2MS,2FS}	-		-	5.23
CVSUFF_SUBJ:2MP	-	u	-	5.24
PRON_1S	niy	ni	-	5.25
{PRON,POSS_PRON}_1S	-	i	-	5.26
{PRON,POSS_PRON}_{2MS,2FS}	-	ek	-	5.27
PRON_3MS	-	u	-	5.28
POSS_PRON_3MS	-	u	-	5.29
{PRON,POSS_PRON}_3FS	-	ha	-	5.30
{PRON,POSS_PRON}_1P	-	na	-	5.31
{PRON,POSS_PRON}_{2D,2MP,2FP}	-	kom	-	5.32
{PRON,POSS_PRON}_{3D,3MP,3FP}	-	hom	-	5.33
NSUFF_FEM_SG	-	a	-	5.34
NSUFF_MASC_DU_*	-	ejn	-	5.35
NSUFF_FEM_DU_*	-	tejn	-	5.36
NSUFF_MASC_PL_*	-	in	-	5.37
NSUFF_FEM_PL	-	iet	-	5.38
)";

inline const MorphRules& builtin_morph_rules() {
  static const MorphRules rules = MorphRules::parse(kMorphtxRulesTsv);
  return rules;
}

struct OrthoConfig {
  bool fi_contraction = true;   // paper-attested
  bool bi_contraction = true;   // extension, on by default
  bool l_reduction = true;      // extension, on by default
};

namespace detail {

inline constexpr std::string_view kSunLetters[] = {"ċ", "d", "n", "r", "s",
                                                   "t", "x", "ż", "z"};

inline std::string lowercase_first_letter(std::string_view word) {
  if (word.empty()) return {};
  std::size_t pos = 0;
  char32_t cp = utf8::decode_next(word, pos);
  if (cp >= U'A' && cp <= U'Z') cp += 32;
  else if (cp == U'Ċ') cp = U'ċ';  // Ċ
  else if (cp == U'Ġ') cp = U'ġ';  // Ġ
  else if (cp == U'Ħ') cp = U'ħ';  // Ħ
  else if (cp == U'Ż') cp = U'ż';  // Ż
  return utf8::encode(cp);
}

inline bool starts_with_sun_letter(std::string_view rest) {
  const std::string first = lowercase_first_letter(rest);
  for (std::string_view sun : kSunLetters)
    if (first == sun) return true;
  return false;
}

/// Rewrites the article's l to the following sun letter. Handles the plain
/// article and the already-contracted fil-/bil- forms so re-application is
/// a no-op.
inline void assimilate_word(std::string& word) {
  std::size_t article = std::string::npos;
  if (word.rfind("il-", 0) == 0) article = 1;
  else if (word.rfind("l-", 0) == 0) article = 0;
  else if (word.rfind("fil-", 0) == 0 || word.rfind("bil-", 0) == 0)
    article = 2;
  if (article == std::string::npos) return;
  const std::string_view rest = std::string_view(word).substr(article + 2);
  if (!starts_with_sun_letter(rest)) return;
  word = word.substr(0, article) + lowercase_first_letter(rest) + "-" +
         std::string(rest);
}

inline bool ends_with_vowel(std::string_view word) {
  if (word.empty()) return false;
  const char c = word.back();
  switch (c) {
    case 'a':
    case 'e':
    case 'i':
    case 'o':
    case 'u':
    case 'A':
    case 'E':
    case 'I':
    case 'O':
    case 'U':
      return true;
    default:
      return false;
  }
}

inline bool starts_with_article(std::string_view word) {
  if (word.rfind("il-", 0) == 0) return true;
  // assimilated form: i + sun letter + '-'
  if (word.size() >= 3 && word[0] == 'i') {
    const std::string_view rest = word.substr(1);
    for (std::string_view sun : kSunLetters) {
      if (rest.size() > sun.size() && rest.substr(0, sun.size()) == sun &&
          rest[sun.size()] == '-')
        return true;
    }
  }
  return false;
}

struct SentenceWord {
  std::string text;
  std::size_t token_id;
};

inline std::vector<SentenceWord> split_words(
    const std::vector<std::string>& tokens) {
  std::vector<SentenceWord> words;
  for (std::size_t t = 0; t < tokens.size(); ++t) {
    std::string word;
    for (char c : tokens[t]) {
      if (c == ' ') {
        if (!word.empty()) words.push_back({word, t});
        word.clear();
      } else {
        word.push_back(c);
      }
    }
    if (!word.empty()) words.push_back({word, t});
  }
  return words;
}

}  // namespace detail

/// Maltese orthographic conventions over token outputs, in order:
/// sun-letter assimilation, fi/bi + article contraction (merging a
/// standalone preposition into the following article-bearing token), and
/// post-vocalic il- -> l- reduction. `source_ids`, when given, receives for
/// every output token the id of the input token it descends from; ids of
/// tokens consumed by contraction (or whose output was empty) do not
/// appear.
inline std::vector<std::string> apply_maltese_orthography(
    const std::vector<std::string>& tokens, const OrthoConfig& config = {},
    std::vector<std::size_t>* source_ids = nullptr) {
  std::vector<detail::SentenceWord> words = detail::split_words(tokens);
  for (auto& word : words) detail::assimilate_word(word.text);
  std::vector<detail::SentenceWord> contracted;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const bool prep = (config.fi_contraction && words[i].text == "fi") ||
                      (config.bi_contraction && words[i].text == "bi");
    if (prep && i + 1 < words.size() &&
        detail::starts_with_article(words[i + 1].text)) {
      contracted.push_back(
          {words[i].text.substr(0, 1) + words[i + 1].text, words[i].token_id});
      ++i;
    } else {
      contracted.push_back(words[i]);
    }
  }
  if (config.l_reduction) {
    for (std::size_t i = 1; i < contracted.size(); ++i) {
      if (contracted[i].text.rfind("il-", 0) == 0 &&
          detail::ends_with_vowel(contracted[i - 1].text))
        contracted[i].text.erase(0, 1);
    }
  }
  std::vector<std::string> out;
  if (source_ids) source_ids->clear();
  for (std::size_t i = 0; i < contracted.size();) {
    const std::size_t id = contracted[i].token_id;
    std::string token = contracted[i].text;
    std::size_t j = i + 1;
    while (j < contracted.size() && contracted[j].token_id == id) {
      token += ' ';
      token += contracted[j].text;
      ++j;
    }
    out.push_back(std::move(token));
    if (source_ids) source_ids->push_back(id);
    i = j;
  }
  return out;
}

namespace detail {

/// Uppercases the first alphabetic codepoint; returns false if none found.
inline bool capitalize_first_alpha(std::string& word) {
  std::size_t pos = 0;
  while (pos < word.size()) {
    const std::size_t start = pos;
    const char32_t cp = utf8::decode_next(word, pos);
    char32_t upper = 0;
    if (cp >= U'a' && cp <= U'z') upper = cp - 32;
    else if (cp == U'ċ') upper = U'Ċ';  // ċ
    else if (cp == U'ġ') upper = U'Ġ';  // ġ
    else if (cp == U'ħ') upper = U'Ħ';  // ħ
    else if (cp == U'ż') upper = U'Ż';  // ż
    else if (cp >= U'A' && cp <= U'Z')
      return true;  // already capitalized
    else
      continue;
    word.replace(start, pos - start, utf8::encode(upper));
    return true;
  }
  return false;
}

inline std::string strip_diacritic_marks(std::string_view text) {
  std::string out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char32_t cp = utf8::decode_next(text, pos);
    if (!is_arabic_diacritic(cp)) utf8::append(out, cp);
  }
  return out;
}

}  // namespace detail

/// Fills in each morpheme's position: rule-matched morphemes before the
/// stem are proclitics (detached target) or prefixes, the first morpheme
/// the rules do not cover is the stem, everything after it is a suffix
/// (enclitic when detached).
inline void derive_positions(const MorphRules& morph_rules,
                             MorphAnalysis& analysis) {
  bool stem_seen = false;
  for (Morpheme& morpheme : analysis.morphemes) {
    const std::string bw = to_buckwalter(normalize(morpheme.surface), false);
    const MorphemeRule* rule =
        morph_rules.find(morpheme.tag, bw, analysis.construct_state);
    if (!rule) {
      morpheme.position = stem_seen ? MorphPosition::kSuffix
                                    : MorphPosition::kStem;
      stem_seen = true;
    } else if (!stem_seen) {
      morpheme.position = rule->detach ? MorphPosition::kProclitic
                                       : MorphPosition::kPrefix;
    } else {
      morpheme.position = rule->detach ? MorphPosition::kEnclitic
                                       : MorphPosition::kSuffix;
    }
  }
}

/// Transliterates one analyzed token. Morphemes with a matching rule emit
/// the rule target; everything else runs through the character mappings
/// with diacritics active. Proper-noun stems are capitalized. Tokens
/// without a usable analysis fall back to the character engine on the
/// undiacritized form.
inline std::string morphtx_token(const RuleTable& chartx_rules,
                                 const MorphRules& morph_rules,
                                 const ArabicToken& token,
                                 const MorphAnalysis* analysis,
                                 TranslitDiagnostics* diag = nullptr) {
  const auto fallback = [&](const char* reason) {
    if (diag) {
      ++diag->fallback_tokens;
      if (reason) diag->messages.push_back(reason);
    }
    return chartx_word(chartx_rules, token, diag);
  };
  if (!analysis || analysis->missing || analysis->morphemes.empty())
    return fallback(nullptr);
  std::string concat;
  for (const Morpheme& m : analysis->morphemes) concat += m.surface;
  if (detail::strip_diacritic_marks(normalize(concat)) !=
      detail::strip_diacritic_marks(normalize(analysis->diacritized)))
    return fallback("morpheme surfaces do not reconstruct the token");

  std::vector<std::string> words;
  std::string current;
  bool capitalize_pending = analysis->proper_noun;
  const std::size_t count = analysis->morphemes.size();
  for (std::size_t i = 0; i < count; ++i) {
    const Morpheme& morpheme = analysis->morphemes[i];
    const std::string surface = normalize(morpheme.surface);
    const std::string bw = to_buckwalter(surface, false);
    const MorphemeRule* rule =
        morph_rules.find(morpheme.tag, bw, analysis->construct_state);
    if (rule) {
      current += rule->target;
      if (rule->detach && !current.empty()) {
        words.push_back(std::move(current));
        current.clear();
      }
    } else {
      std::string mapped = chartx_map(chartx_rules, utf8::decode(surface),
                                      /*at_start=*/i == 0,
                                      /*at_end=*/i + 1 == count, diag);
      if (capitalize_pending && detail::capitalize_first_alpha(mapped))
        capitalize_pending = false;
      current += mapped;
    }
  }
  if (!current.empty()) words.push_back(std::move(current));
  std::string out;
  for (const std::string& word : words) {
    if (!out.empty()) out.push_back(' ');
    out += word;
  }
  return out;
}

/// Full sentence pipeline. When the sidecar record is absent or does not
/// align with the tokenizer output, the whole sentence is the plain
/// character transliteration (and the mismatch is counted); otherwise
/// per-token morphtx plus sentence-wide orthography.
inline std::string morphtx_text(const RuleTable& chartx_rules,
                                const MorphRules& morph_rules,
                                std::string_view text,
                                const SentenceAnalyses* analyses,
                                const OrthoConfig& config = {},
                                TranslitDiagnostics* diag = nullptr) {
  const std::vector<ArabicToken> tokens = tokenize(normalize(text));
  if (analyses && analyses->tokens.size() != tokens.size() && diag) {
    ++diag->fallback_sentences;
    diag->messages.push_back(
        "sidecar record does not align with tokenizer output (" +
        std::to_string(analyses->tokens.size()) + " analyses, " +
        std::to_string(tokens.size()) + " tokens)");
  }
  if (!analyses || analyses->tokens.size() != tokens.size()) {
    std::vector<std::string> pieces;
    pieces.reserve(tokens.size());
    for (const ArabicToken& token : tokens)
      pieces.push_back(chartx_word(chartx_rules, token, diag));
    return detokenize(pieces, tokens);
  }
  std::vector<std::string> pieces;
  pieces.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i)
    pieces.push_back(morphtx_token(chartx_rules, morph_rules, tokens[i],
                                   &analyses->tokens[i], diag));
  std::vector<std::size_t> ids;
  const std::vector<std::string> merged =
      apply_maltese_orthography(pieces, config, &ids);
  std::vector<ArabicToken> merged_tokens;
  merged_tokens.reserve(ids.size());
  for (std::size_t id : ids) merged_tokens.push_back(tokens[id]);
  return detokenize(merged, merged_tokens);
}

inline std::string morphtx_text(std::string_view text,
                                const SentenceAnalyses* analyses,
                                const OrthoConfig& config = {},
                                TranslitDiagnostics* diag = nullptr) {
  return morphtx_text(builtin_chartx_rules(), builtin_morph_rules(), text,
                      analyses, config, diag);
}

}  // namespace armt

#endif  // ARMT_MORPH_HPP
