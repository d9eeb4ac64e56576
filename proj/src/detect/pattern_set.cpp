// Copyright 2026 The Deid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "deid/detect/pattern_set.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <string_view>

#include "deid/errors.hpp"

namespace deid::detect {

namespace {

// Mirror of data/patterns.tsv; a unit test checks the two stay identical.
const char kBuiltinPatterns[] =
    R"(# French structured-PHI detection rules.
# One rule per line: TAG<TAB>regex (ECMAScript syntax, compiled case-insensitive).
# Rules run in file order; when two rules match the exact same span, the
# earlier rule wins the tie. Extend or replace this file per deployment.
DATE	\b\d{1,2}/\d{1,2}/\d{4}\b
DATE	\b\d{1,2}\.\d{1,2}\.\d{4}\b
DATE	\b\d{4}-\d{1,2}-\d{1,2}\b
DATE	\b\d{1,2}(?:er)?\s+(?:janvier|f(?:é|e|É)vrier|mars|avril|mai|juin|juillet|ao(?:û|u|Û)t|septembre|octobre|novembre|d(?:é|e|É)cembre)\s+\d{4}\b
DATE	\b(?:janvier|f(?:é|e|É)vrier|mars|avril|mai|juin|juillet|ao(?:û|u|Û)t|septembre|octobre|novembre|d(?:é|e|É)cembre)\s+\d{4}\b
DATE	\b\d{1,2}/\d{4}\b
DATE	\b(?:dans|depuis)\s+\d{1,3}\s+(?:jours?|semaines?|mois|ans?)\b
DATE	\bil\s+y\s+a\s+\d{1,3}\s+(?:jours?|semaines?|mois|ans?)\b
DATE	\b(?:avant-hier|hier|demain|apr(?:è|e|È)s-demain|aujourd'hui)\b
AGE	\b\d{1,3}\s+ans?\b
PHONE	(?:\+33|0033)\s?[1-9](?:[ .\-]?\d{2}){4}\b
PHONE	\b0[1-9](?:[ .\-]?\d{2}){4}\b
EMAIL	[A-Za-z0-9._%+\-]+@[A-Za-z0-9.\-]+\.[A-Za-z]{2,}
URL	\bhttps?://[^\s<>"]+
URL	\bwww\.[A-Za-z0-9.\-]+(?:/[^\s<>"]*)?
ID	\b[12]\s?\d{2}\s?\d{2}\s?\d{2}\s?\d{3}\s?\d{3}(?:\s?\d{2})?\b
ID	\b[A-Z]{0,3}\d{6,}\b
LOC	\b\d{5}\b
)";

}  // namespace

const char* builtin_pattern_text() { return kBuiltinPatterns; }

PatternSet PatternSet::parse(const std::string& content) {
  PatternSet set;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  const std::string_view view(content);
  while (pos <= view.size()) {
    std::size_t eol = view.find('\n', pos);
    std::string_view line = view.substr(
        pos, eol == std::string_view::npos ? view.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? view.size() + 1 : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos) {
      throw ConfigError("pattern line " + std::to_string(line_no) +
                        ": expected TAG<tab>regex");
    }
    std::string tag_text(line.substr(0, tab));
    std::string pattern_text(line.substr(tab + 1));
    if (pattern_text.empty()) {
      throw ConfigError("pattern line " + std::to_string(line_no) +
                        ": empty regex");
    }
    std::optional<Tag> tag = tag_from_string(tag_text);
    if (!tag) {
      throw ConfigError("pattern line " + std::to_string(line_no) +
                        ": unknown tag '" + tag_text + "'");
    }
    if (*tag == Tag::O) {
      throw ConfigError("pattern line " + std::to_string(line_no) +
                        ": rules may not produce the outside tag");
    }
    try {
      set.rules_.push_back(Rule{
          *tag, pattern_text,
          std::regex(pattern_text, std::regex::ECMAScript | std::regex::icase |
                                       std::regex::optimize)});
    } catch (const std::regex_error& e) {
      throw ConfigError("pattern line " + std::to_string(line_no) +
                        ": bad regex: " + e.what());
    }
  }
  if (set.rules_.empty()) throw ConfigError("pattern set defines no rules");
  return set;
}

PatternSet PatternSet::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open pattern file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

const PatternSet& PatternSet::builtin() {
  static const PatternSet set = parse(kBuiltinPatterns);
  return set;
}

}  // namespace deid::detect
