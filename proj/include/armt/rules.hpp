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
// Character mapping rule tables. Rules live in a human-readable TSV
// (source-as-Buckwalter, anchor, target, precedence class, row label);
// the default table is embedded verbatim and also ships as
// data/chartx_rules.tsv.

#ifndef ARMT_RULES_HPP
#define ARMT_RULES_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "armt/script.hpp"
#include "armt/utf8.hpp"

namespace armt {

enum class Anchor : std::uint8_t { kNone, kBos, kEos };

struct MappingRule {
  std::u32string source;  // 1..3 codepoints, letters and/or diacritics
  Anchor anchor = Anchor::kNone;
  std::string target;  // Maltese UTF-8, may be empty
  int precedence_class = 0;
  std::string row;  // table row label, e.g. "3.01"
};

inline std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

class RuleTable {
 public:
  static RuleTable parse(std::string_view tsv) {
    RuleTable table;
    table.checksum_ = fnv1a64(tsv);
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
      table.rules_.push_back(parse_line(line, line_no));
    }
    table.build_index();
    return table;
  }

  const std::vector<MappingRule>& rules() const { return rules_; }
  std::uint64_t checksum() const { return checksum_; }

  /// Rule indices whose source starts with `cp`, ordered by
  /// (precedence class, longer source first, file order).
  const std::vector<std::size_t>* candidates(char32_t cp) const {
    const auto it = index_.find(cp);
    return it == index_.end() ? nullptr : &it->second;
  }

 private:
  static MappingRule parse_line(std::string_view line, std::size_t line_no) {
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (true) {
      const std::size_t tab = line.find('\t', pos);
      if (tab == std::string_view::npos) {
        fields.push_back(line.substr(pos));
        break;
      }
      fields.push_back(line.substr(pos, tab - pos));
      pos = tab + 1;
    }
    if (fields.size() != 5)
      throw std::runtime_error("rule table line " + std::to_string(line_no) +
                               ": expected 5 tab-separated fields");
    MappingRule rule;
    rule.source = utf8::decode(from_buckwalter(fields[0]));
    if (rule.source.empty() || rule.source.size() > 3)
      throw std::runtime_error("rule table line " + std::to_string(line_no) +
                               ": source must be 1..3 codepoints");
    if (fields[1] == "-") {
      rule.anchor = Anchor::kNone;
    } else if (fields[1] == "bos") {
      rule.anchor = Anchor::kBos;
    } else if (fields[1] == "eos") {
      rule.anchor = Anchor::kEos;
    } else {
      throw std::runtime_error("rule table line " + std::to_string(line_no) +
                               ": bad anchor '" + std::string(fields[1]) + "'");
    }
    rule.target = std::string(fields[2]);
    try {
      rule.precedence_class = std::stoi(std::string(fields[3]));
    } catch (const std::exception&) {
      throw std::runtime_error("rule table line " + std::to_string(line_no) +
                               ": bad class '" + std::string(fields[3]) + "'");
    }
    rule.row = std::string(fields[4]);
    if (rule.row.empty())
      throw std::runtime_error("rule table line " + std::to_string(line_no) +
                               ": missing row label");
    return rule;
  }

  void build_index() {
    for (std::size_t i = 0; i < rules_.size(); ++i)
      index_[rules_[i].source[0]].push_back(i);
    for (auto& [cp, ids] : index_) {
      std::stable_sort(ids.begin(), ids.end(), [this](std::size_t a,
                                                      std::size_t b) {
        if (rules_[a].precedence_class != rules_[b].precedence_class)
          return rules_[a].precedence_class < rules_[b].precedence_class;
        return rules_[a].source.size() > rules_[b].source.size();
      });
    }
  }

  std::vector<MappingRule> rules_;
  std::unordered_map<char32_t, std::vector<std::size_t>> index_;
  std::uint64_t checksum_ = 0;
};

// Default character rules. Group order: lam+sun gemination (1), word-final
// geminated yeh (2), gemination (3), hamza/alef with diacritic (4), long
// vowel a (5), y-glide (6), w-glide (7), word-boundary specials (8),
// diacritics (9), letters (10), symbols (11).
inline constexpr std::string_view kChartxRulesTsv =
    R"(# armt chartx rules v1
# source(Buckwalter)	anchor	target	class	row
ld~	-	dd	1	3.01
l*~	-	dd	1	3.01
lD~	-	dd	1	3.01
lZ~	-	dd	1	3.01
ll~	-	ll	1	3.02
ln~	-	nn	1	3.03
lr~	-	rr	1	3.04
ls~	-	ss	1	3.05
lS~	-	ss	1	3.05
lt~	-	tt	1	3.06
lv~	-	tt	1	3.06
lT~	-	tt	1	3.06
l$~	-	xx	1	3.07
lz~	-	żż	1	3.08
y~	eos	i	2	3.09
b~	-	bb	3	3.10
d~	-	dd	3	3.11
*~	-	dd	3	3.11
D~	-	dd	3	3.11
Z~	-	dd	3	3.11
f~	-	ff	3	3.12
h~	-	hh	3	3.13
j~	-	ġġ	3	3.14
H~	-	ħħ	3	3.15
x~	-	ħħ	3	3.15
E~	-	għ	3	3.16
g~	-	għ	3	3.16
y~	-	jj	3	3.17
k~	-	kk	3	3.18
l~	-	ll	3	3.19
m~	-	mm	3	3.20
n~	-	nn	3	3.21
q~	-	qq	3	3.22
r~	-	rr	3	3.23
s~	-	ss	3	3.24
S~	-	ss	3	3.24
t~	-	tt	3	3.25
v~	-	tt	3	3.25
T~	-	tt	3	3.25
w~	-	ww	3	3.26
$~	-	xx	3	3.27
z~	-	żż	3	3.28
'o	-		4	3.29
AF	-		4	3.29
AK	-		4	3.29
AN	-		4	3.29
'a	-	a	4	3.30
>a	-	a	4	3.30
{a	-	a	4	3.30
|a	-	a	4	3.30
'i	-	i	4	3.31
<i	-	i	4	3.31
{i	-	i	4	3.31
|i	-	i	4	3.31
'u	-	u	4	3.32
>u	-	u	4	3.32
{u	-	u	4	3.32
|u	-	u	4	3.32
aA	-	a	5	3.33
aY	-	a	5	3.34
ap	-	a	5	3.35
yA	-	ja	6	3.36
yo	-	j	6	3.37
ya	-	je	6	3.38
}a	-	je	6	3.38
yi	-	ji	6	3.39
}i	-	ji	6	3.39
yu	-	ju	6	3.40
}u	-	ju	6	3.40
oy	-	j	6	3.41
ay	-	ej	6	3.42
uy	-	uj	6	3.43
iy	-	i	6	3.44
}o	-	i	6	3.45
wA	-	wa	7	3.46
wo	-	w	7	3.47
wa	-	we	7	3.48
&a	-	we	7	3.48
wi	-	wi	7	3.49
&i	-	wi	7	3.49
wu	-	wu	7	3.50
&u	-	wu	7	3.50
ow	-	w	7	3.51
aw	-	ew	7	3.52
iw	-	iw	7	3.53
uw	-	u	7	3.54
&o	-	u	7	3.55
E	eos	'	8	4.06
g	eos	'	8	4.06
>	bos		8	4.07
<	bos		8	4.07
`	-	a	9	4.01
a	-	e	9	4.02
i	-	i	9	4.03
u	-	u	9	4.04
o	-		9	4.05
F	-		9	4.05
K	-		9	4.05
N	-		9	4.05
~	-		9	4.05
A	-	a	10	4.08
>	-	a	10	4.08
|	-	a	10	4.08
Y	-	a	10	4.08
y	-	i	10	4.09
<	-	i	10	4.09
}	-	i	10	4.09
w	-	u	10	4.10
&	-	u	10	4.10
'	-		10	4.11
{	-		10	4.11
p	-	a	10	4.12
b	-	b	10	4.13
d	-	d	10	4.14
*	-	d	10	4.14
D	-	d	10	4.14
Z	-	d	10	4.14
f	-	f	10	4.15
j	-	ġ	10	4.16
h	-	h	10	4.17
H	-	ħ	10	4.18
x	-	ħ	10	4.18
E	-	għ	10	4.19
g	-	għ	10	4.19
k	-	k	10	4.20
l	-	l	10	4.21
m	-	m	10	4.22
n	-	n	10	4.23
q	-	q	10	4.24
r	-	r	10	4.25
s	-	s	10	4.26
S	-	s	10	4.26
t	-	t	10	4.27
v	-	t	10	4.27
T	-	t	10	4.27
$	-	x	10	4.28
z	-	ż	10	4.29
,	-	,	11	4.30
;	-	;	11	4.31
?	-	?	11	4.32
%	-	%	11	4.33
9	-	9	11	4.34
8	-	8	11	4.35
7	-	7	11	4.36
6	-	6	11	4.37
5	-	5	11	4.38
4	-	4	11	4.39
3	-	3	11	4.40
2	-	2	11	4.41
1	-	1	11	4.42
0	-	0	11	4.43
)";

inline const RuleTable& builtin_chartx_rules() {
  static const RuleTable table = RuleTable::parse(kChartxRulesTsv);
  return table;
}

}  // namespace armt

#endif  // ARMT_RULES_HPP
