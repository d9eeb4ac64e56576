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

#ifndef DEID_INGEST_HPP
#define DEID_INGEST_HPP

#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "deid/annotation.hpp"
#include "deid/document.hpp"
#include "deid/tag.hpp"

namespace deid::ingest {

// One parsed standoff record: the raw spans claimed for one document by an
// external annotator. Offsets are Unicode scalar offsets.
struct RawRecord {
  std::string doc_id;
  std::vector<TaggedSpan> spans;  // source set to EXTERNAL at parse time
};

// Parses one standoff JSON object:
//   {"doc_id": str, "spans": [{"start": int, "end": int, "tag": str}]}
// A span may optionally carry "surface". Throws MalformedRecord on missing
// keys, wrong types, negative or inverted offsets, or unknown tag names.
RawRecord parse_record(const std::string& json_text);

// Streaming reader: one JSON object per line (blank lines skipped).
std::vector<RawRecord> read_standoff(std::istream& in);
std::vector<RawRecord> read_standoff_file(const std::string& path);

// Serializes an AnnotationSet back to the same standoff shape.
std::string to_standoff_json(const AnnotationSet& set);

struct IngestStats {
  std::size_t total = 0;        // spans seen in the record
  std::size_t kept = 0;         // spans in the returned set
  std::size_t dropped_tag = 0;  // outside the allow-list
  std::size_t dropped_overlap = 0;
};

// Default allow-list for external annotators: the contextual tags.
const std::set<Tag>& default_allow_list();

// Validates an external record against `doc` (the record's doc_id must
// equal doc.id). Tags outside the allow-list are dropped with a warning;
// surviving spans are validated (bounds, surfaces, overlap resolution) and
// returned with source EXTERNAL. Throws UnknownDocument on doc_id mismatch
// and propagates validation errors.
AnnotationSet ingest(const Document& doc, const RawRecord& record,
                     const std::set<Tag>& allow_list = default_allow_list(),
                     IngestStats* stats = nullptr);

}  // namespace deid::ingest

#endif  // DEID_INGEST_HPP
