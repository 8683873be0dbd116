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
// Subword fertility: how many pieces a greedy longest-match vocabulary
// splits each whitespace token into.

#ifndef ARMT_FERTILITY_HPP
#define ARMT_FERTILITY_HPP

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "armt/utf8.hpp"

namespace armt {

class SubwordVocab {
 public:
  SubwordVocab(std::string marker = "##", std::string unknown = "[UNK]")
      : marker_(std::move(marker)), unknown_(std::move(unknown)) {}

  /// One entry per line; lines starting with the continuation marker are
  /// non-initial pieces.
  static SubwordVocab load(std::istream& stream, std::string marker = "##",
                           std::string unknown = "[UNK]") {
    SubwordVocab vocab(std::move(marker), std::move(unknown));
    std::string line;
    while (std::getline(stream, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      vocab.add(line);
    }
    return vocab;
  }

  void add(std::string_view entry) {
    if (entry.size() >= marker_.size() &&
        entry.substr(0, marker_.size()) == marker_) {
      const std::u32string piece = utf8::decode(entry.substr(marker_.size()));
      max_continuation_ = std::max(max_continuation_, piece.size());
      continuation_.insert(piece);
    } else {
      const std::u32string piece = utf8::decode(entry);
      max_initial_ = std::max(max_initial_, piece.size());
      initial_.insert(piece);
    }
  }

  const std::string& marker() const { return marker_; }
  const std::string& unknown_piece() const { return unknown_; }
  std::size_t size() const { return initial_.size() + continuation_.size(); }

  bool has_initial(const std::u32string& piece) const {
    return initial_.count(piece) > 0;
  }
  bool has_continuation(const std::u32string& piece) const {
    return continuation_.count(piece) > 0;
  }
  std::size_t max_initial() const { return max_initial_; }
  std::size_t max_continuation() const { return max_continuation_; }

 private:
  std::string marker_;
  std::string unknown_;
  std::unordered_set<std::u32string> initial_;
  std::unordered_set<std::u32string> continuation_;
  std::size_t max_initial_ = 0;
  std::size_t max_continuation_ = 0;
};

/// Greedy longest-prefix split. If no prefix matches at any point the whole
/// token becomes the unknown piece.
inline std::vector<std::string> subword_tokenize(std::string_view token,
                                                 const SubwordVocab& vocab) {
  const std::u32string cps = utf8::decode(token);
  std::vector<std::string> pieces;
  std::size_t pos = 0;
  while (pos < cps.size()) {
    const bool first = pos == 0;
    const std::size_t cap = first ? vocab.max_initial() : vocab.max_continuation();
    std::size_t len = std::min(cap, cps.size() - pos);
    std::u32string piece;
    for (; len > 0; --len) {
      piece = cps.substr(pos, len);
      if (first ? vocab.has_initial(piece) : vocab.has_continuation(piece))
        break;
    }
    if (len == 0) return {vocab.unknown_piece()};
    pieces.push_back(first ? utf8::encode(piece)
                           : vocab.marker() + utf8::encode(piece));
    pos += len;
  }
  return pieces;
}

struct FertilityReport {
  std::size_t token_count = 0;
  std::size_t subword_count = 0;
  std::size_t unknown_tokens = 0;
  double fertility = 0.0;
  double unknown_rate = 0.0;
};

/// Aggregates fertility over a token stream. `unknown_as_chars` counts an
/// unknown token as one piece per character instead of one piece.
inline FertilityReport fertility(const std::vector<std::string>& tokens,
                                 const SubwordVocab& vocab,
                                 bool unknown_as_chars = false) {
  if (tokens.empty())
    throw std::invalid_argument("fertility: empty corpus");
  FertilityReport report;
  for (const std::string& token : tokens) {
    if (token.empty()) continue;
    ++report.token_count;
    const std::vector<std::string> pieces = subword_tokenize(token, vocab);
    if (pieces.size() == 1 && pieces[0] == vocab.unknown_piece() &&
        token != vocab.unknown_piece()) {
      ++report.unknown_tokens;
      report.subword_count +=
          unknown_as_chars ? utf8::decode(token).size() : 1;
    } else {
      report.subword_count += pieces.size();
    }
  }
  if (report.token_count == 0)
    throw std::invalid_argument("fertility: empty corpus");
  report.fertility = static_cast<double>(report.subword_count) /
                     static_cast<double>(report.token_count);
  report.unknown_rate = static_cast<double>(report.unknown_tokens) /
                        static_cast<double>(report.token_count);
  return report;
}

/// Whitespace tokens of a text block, for fertility over raw corpora.
inline std::vector<std::string> whitespace_tokens(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
        c == '\f') {
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

}  // namespace armt

#endif  // ARMT_FERTILITY_HPP
