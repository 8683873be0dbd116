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
// Annotation-preserving dataset transliteration, tagset normalization, and
// deterministic downsampling. NER files follow the CoNLL convention
// (token TAB tag, blank line between sentences); sentiment files are TSV
// with text and label columns.

#ifndef ARMT_CORPUS_HPP
#define ARMT_CORPUS_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "armt/translit.hpp"

namespace armt {

struct NerSentence {
  std::vector<std::string> tokens;
  std::vector<std::string> tags;
};

struct SentimentRecord {
  std::string text;
  std::string label;  // positive | negative | neutral
};

enum class NerSchema : std::uint8_t { kAnercorp, kMapa };

struct SplitSpec {
  std::size_t train_size = 0;
  std::size_t valid_size = 0;
  std::uint64_t seed = 0;
};

struct RecordError {
  std::size_t line = 0;  // 1-based source line (0 when not line-addressed)
  std::string message;
};

// ---------------------------------------------------------------------------
// BIO handling

inline bool bio_valid(const std::vector<std::string>& tags) {
  std::string prev_type;
  for (const std::string& tag : tags) {
    if (tag == "O") {
      prev_type.clear();
      continue;
    }
    if (tag.size() < 3 || tag[1] != '-' || (tag[0] != 'B' && tag[0] != 'I'))
      return false;
    const std::string type = tag.substr(2);
    if (tag[0] == 'I' && type != prev_type) return false;
    prev_type = type;
  }
  return true;
}

/// Turns orphaned I-X tags into B-X.
inline void bio_repair(std::vector<std::string>& tags) {
  std::string prev_type;
  for (std::string& tag : tags) {
    if (tag == "O") {
      prev_type.clear();
      continue;
    }
    if (tag.size() < 3) continue;
    const std::string type = tag.substr(2);
    if (tag[0] == 'I' && type != prev_type) tag[0] = 'B';
    prev_type = type;
  }
}

// ---------------------------------------------------------------------------
// Tagset normalization

namespace detail {

/// Maps one schema tag type to the common {PER, ORG, LOC} tagset or "O".
/// Returns nullopt for tags the schema does not define.
inline std::optional<std::string> map_tag_type(NerSchema schema,
                                               std::string_view type) {
  switch (schema) {
    case NerSchema::kAnercorp:
      if (type == "PER" || type == "PERS") return std::string("PER");
      if (type == "ORG") return std::string("ORG");
      if (type == "LOC") return std::string("LOC");
      if (type == "MISC") return std::string("O");
      return std::nullopt;
    case NerSchema::kMapa:
      if (type == "GIVEN_NAME" || type == "FAMILY_NAME")
        return std::string("PER");
      if (type == "CITY" || type == "COUNTRY") return std::string("LOC");
      if (type == "ORGANISATION" || type == "ORG") return std::string("ORG");
      // Remaining MAPA categories are dropped.
      if (type == "PERSON" || type == "ADDRESS" || type == "AMOUNT" ||
          type == "DATE" || type == "TIME" || type == "DAY" ||
          type == "MONTH" || type == "YEAR" || type == "AGE" ||
          type == "ETHNIC_CATEGORY" || type == "NATIONALITY" ||
          type == "PROFESSION" || type == "ROLE" || type == "TITLE" ||
          type == "BUILDING" || type == "PLACE" || type == "TERRITORY" ||
          type == "UNIT" || type == "VALUE" || type == "STANDARD_ABBREVIATION" ||
          type == "CALLSIGN" || type == "INITIAL_NAME" || type == "URL")
        return std::string("O");
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace detail

/// Rewrites a sentence's tags onto the common {PER, ORG, LOC} tagset and
/// restores BIO validity. Returns false (with `error` naming the offending
/// tag) when a tag is not part of the source schema.
inline bool normalize_ner_tags(NerSentence& sentence, NerSchema schema,
                               std::string* error = nullptr) {
  for (std::string& tag : sentence.tags) {
    if (tag == "O") continue;
    if (tag.size() < 3 || tag[1] != '-' || (tag[0] != 'B' && tag[0] != 'I')) {
      if (error) *error = "unknown tag '" + tag + "'";
      return false;
    }
    const auto mapped = detail::map_tag_type(schema, tag.substr(2));
    if (!mapped) {
      if (error) *error = "unknown tag '" + tag + "'";
      return false;
    }
    tag = *mapped == "O" ? "O" : tag.substr(0, 2) + *mapped;
  }
  bio_repair(sentence.tags);
  return true;
}

// ---------------------------------------------------------------------------
// Transliteration with label transport

/// Transliterates every token independently; tags are copied positionally
/// (word-level mapping keeps tokens 1:1, so lengths are preserved).
inline NerSentence transliterate_ner(const Engines& engines,
                                     const NerSentence& sentence,
                                     Scheme scheme,
                                     const SentenceAnalyses* analyses = nullptr,
                                     TranslitDiagnostics* diag = nullptr) {
  NerSentence out;
  out.tags = sentence.tags;
  out.tokens.reserve(sentence.tokens.size());
  const bool aligned =
      analyses && analyses->tokens.size() == sentence.tokens.size();
  if (scheme == Scheme::kMorphtx && analyses && !aligned && diag) {
    ++diag->fallback_sentences;
    diag->messages.push_back("sidecar record does not align with sentence");
  }
  for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
    const MorphAnalysis* analysis = aligned ? &analyses->tokens[i] : nullptr;
    out.tokens.push_back(
        translit_token(engines, scheme, sentence.tokens[i], analysis, diag));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sentiment filtering

/// Drops neutral records, preserving order. Unknown labels produce a
/// RecordError and the record is skipped.
inline std::vector<SentimentRecord> filter_sentiment(
    const std::vector<SentimentRecord>& records,
    std::vector<RecordError>* errors = nullptr) {
  std::vector<SentimentRecord> out;
  out.reserve(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    const std::string& label = records[i].label;
    if (label == "neutral") continue;
    if (label != "positive" && label != "negative") {
      if (errors) errors->push_back({i + 1, "unknown label '" + label + "'"});
      continue;
    }
    out.push_back(records[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Downsampling

namespace detail {

/// Unbiased bounded draw with a fully specified generator, so splits are
/// byte-identical across platforms.
inline std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t mask = std::bit_ceil(bound) - 1;
  std::uint64_t value;
  do {
    value = rng() & mask;
  } while (value >= bound);
  return value;
}

}  // namespace detail

/// Uniform sampling without replacement into disjoint train/valid sets.
/// Each set keeps the input order. Throws std::invalid_argument when the
/// requested sizes exceed the input.
template <typename T>
std::pair<std::vector<T>, std::vector<T>> downsample(
    const std::vector<T>& records, const SplitSpec& spec) {
  const std::size_t want = spec.train_size + spec.valid_size;
  if (want > records.size())
    throw std::invalid_argument(
        "downsample: requested " + std::to_string(want) + " records from " +
        std::to_string(records.size()));
  std::vector<std::size_t> order(records.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::mt19937_64 rng(spec.seed);
  for (std::size_t i = 0; i < want; ++i) {
    const std::size_t j =
        i + static_cast<std::size_t>(detail::bounded_draw(rng, order.size() - i));
    std::swap(order[i], order[j]);
  }
  std::vector<std::size_t> train_ids(order.begin(), order.begin() + spec.train_size);
  std::vector<std::size_t> valid_ids(order.begin() + spec.train_size,
                                     order.begin() + want);
  std::sort(train_ids.begin(), train_ids.end());
  std::sort(valid_ids.begin(), valid_ids.end());
  std::pair<std::vector<T>, std::vector<T>> out;
  for (std::size_t id : train_ids) out.first.push_back(records[id]);
  for (std::size_t id : valid_ids) out.second.push_back(records[id]);
  return out;
}

// ---------------------------------------------------------------------------
// File I/O

inline std::vector<NerSentence> load_conll(
    std::istream& stream, std::vector<RecordError>* errors = nullptr) {
  std::vector<NerSentence> sentences;
  NerSentence current;
  std::string line;
  std::size_t line_no = 0;
  const auto flush = [&] {
    if (!current.tokens.empty()) sentences.push_back(std::move(current));
    current = NerSentence{};
  };
  while (std::getline(stream, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      flush();
      continue;
    }
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0) {
      if (errors) errors->push_back({line_no, "expected 'token<TAB>tag'"});
      continue;
    }
    current.tokens.push_back(line.substr(0, tab));
    current.tags.push_back(line.substr(tab + 1));
  }
  flush();
  return sentences;
}

inline void write_conll(std::ostream& stream,
                        const std::vector<NerSentence>& sentences) {
  for (std::size_t s = 0; s < sentences.size(); ++s) {
    if (s) stream << '\n';
    for (std::size_t i = 0; i < sentences[s].tokens.size(); ++i)
      stream << sentences[s].tokens[i] << '\t' << sentences[s].tags[i] << '\n';
  }
}

inline std::vector<SentimentRecord> load_sentiment_tsv(
    std::istream& stream, std::vector<RecordError>* errors = nullptr) {
  std::vector<SentimentRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::size_t tab = line.rfind('\t');
    if (tab == std::string::npos) {
      if (errors) errors->push_back({line_no, "expected 'text<TAB>label'"});
      continue;
    }
    records.push_back({line.substr(0, tab), line.substr(tab + 1)});
  }
  return records;
}

inline void write_sentiment_tsv(std::ostream& stream,
                                const std::vector<SentimentRecord>& records) {
  for (const SentimentRecord& record : records)
    stream << record.text << '\t' << record.label << '\n';
}

}  // namespace armt

#endif  // ARMT_CORPUS_HPP
