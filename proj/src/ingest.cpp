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

#include "deid/ingest.hpp"

#include <fstream>
#include <istream>

#include "json.hpp"

#include "deid/errors.hpp"
#include "deid/log.hpp"

namespace deid::ingest {

namespace {

using nlohmann::json;

std::size_t require_offset(const json& span, const char* key) {
  if (!span.contains(key) || !span[key].is_number_integer()) {
    throw MalformedRecord(std::string("span missing integer '") + key + "'");
  }
  const long long value = span[key].get<long long>();
  if (value < 0) {
    throw MalformedRecord(std::string("span '") + key + "' is negative");
  }
  return static_cast<std::size_t>(value);
}

}  // namespace

RawRecord parse_record(const std::string& json_text) {
  json root = json::parse(json_text, /*cb=*/nullptr, /*allow_exceptions=*/false);
  if (root.is_discarded() || !root.is_object()) {
    throw MalformedRecord("record is not a JSON object");
  }
  if (!root.contains("doc_id") || !root["doc_id"].is_string()) {
    throw MalformedRecord("record missing string 'doc_id'");
  }
  if (!root.contains("spans") || !root["spans"].is_array()) {
    throw MalformedRecord("record missing array 'spans'");
  }
  RawRecord record;
  record.doc_id = root["doc_id"].get<std::string>();
  for (const json& span : root["spans"]) {
    if (!span.is_object()) {
      throw MalformedRecord("span entry is not an object");
    }
    const std::size_t start = require_offset(span, "start");
    const std::size_t end = require_offset(span, "end");
    if (start >= end) {
      throw MalformedRecord("span offsets inverted or empty: [" +
                            std::to_string(start) + "," +
                            std::to_string(end) + ")");
    }
    if (!span.contains("tag") || !span["tag"].is_string()) {
      throw MalformedRecord("span missing string 'tag'");
    }
    const std::string tag_name = span["tag"].get<std::string>();
    std::optional<Tag> tag = tag_from_string(tag_name);
    if (!tag) {
      throw MalformedRecord("span has unknown tag '" + tag_name + "'");
    }
    std::string surface;
    if (span.contains("surface")) {
      if (!span["surface"].is_string()) {
        throw MalformedRecord("span 'surface' is not a string");
      }
      surface = span["surface"].get<std::string>();
    }
    record.spans.push_back(
        TaggedSpan{start, end, *tag, Source::EXTERNAL, std::move(surface)});
  }
  return record;
}

std::vector<RawRecord> read_standoff(std::istream& in) {
  std::vector<RawRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    bool blank = true;
    for (char c : line) {
      if (c != ' ' && c != '\t') {
        blank = false;
        break;
      }
    }
    if (blank) continue;
    try {
      records.push_back(parse_record(line));
    } catch (const MalformedRecord& e) {
      throw MalformedRecord("line " + std::to_string(line_no) + ": " +
                            e.what());
    }
  }
  return records;
}

std::vector<RawRecord> read_standoff_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open annotation file: " + path);
  return read_standoff(in);
}

std::string to_standoff_json(const AnnotationSet& set) {
  json spans = json::array();
  for (const TaggedSpan& s : set.spans()) {
    spans.push_back({{"start", s.start},
                     {"end", s.end},
                     {"tag", std::string(to_string(s.tag))},
                     {"surface", s.surface}});
  }
  json root = {{"doc_id", set.doc_id()}, {"spans", std::move(spans)}};
  return root.dump();
}

const std::set<Tag>& default_allow_list() {
  static const std::set<Tag> allow = {Tag::PER, Tag::LOC, Tag::ORG, Tag::MISC};
  return allow;
}

AnnotationSet ingest(const Document& doc, const RawRecord& record,
                     const std::set<Tag>& allow_list, IngestStats* stats) {
  if (record.doc_id != doc.id()) {
    throw UnknownDocument("record doc_id '" + record.doc_id +
                          "' does not match document '" + doc.id() + "'");
  }
  IngestStats local;
  local.total = record.spans.size();
  std::vector<TaggedSpan> accepted;
  accepted.reserve(record.spans.size());
  for (const TaggedSpan& span : record.spans) {
    if (span.tag == Tag::O) {
      // An explicit outside record carries no information; absence of a
      // span already means O.
      ++local.dropped_tag;
      log::debug("doc " + doc.id() + ": external O span dropped");
      continue;
    }
    if (allow_list.count(span.tag) == 0) {
      ++local.dropped_tag;
      log::warn("doc " + doc.id() + ": external span [" +
                std::to_string(span.start) + "," + std::to_string(span.end) +
                ") tag " + std::string(to_string(span.tag)) +
                " outside allow-list; dropped");
      continue;
    }
    TaggedSpan copy = span;
    copy.source = Source::EXTERNAL;
    accepted.push_back(std::move(copy));
  }
  AnnotationSet set = validate_annotation_set(doc, std::move(accepted));
  local.kept = set.size();
  local.dropped_overlap = local.total - local.dropped_tag - local.kept;
  if (stats != nullptr) *stats = local;
  return set;
}

}  // namespace deid::ingest
