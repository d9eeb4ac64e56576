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

#ifndef DEID_ANNOTATION_HPP
#define DEID_ANNOTATION_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "deid/document.hpp"
#include "deid/tag.hpp"

namespace deid {

// A character-offset region of a document carrying a PHI tag. Offsets are
// Unicode scalar counts; end is exclusive; surface holds the covered UTF-8
// substring.
struct TaggedSpan {
  std::size_t start = 0;
  std::size_t end = 0;
  Tag tag = Tag::O;
  Source source = Source::RULE;
  std::string surface;

  std::size_t length() const { return end - start; }
  bool overlaps(const TaggedSpan& other) const {
    return start < other.end && other.start < end;
  }
  bool operator==(const TaggedSpan& other) const {
    return start == other.start && end == other.end && tag == other.tag &&
           source == other.source && surface == other.surface;
  }
};

// A validated, sorted, overlap-free collection of spans for one document.
// All spans carry tag != O; the absence of a span means O.
class AnnotationSet {
 public:
  AnnotationSet() = default;

  // For span data with no document text at hand (scoring standoff files):
  // checks ordering, overlap-freedom, and non-O tags, but cannot check
  // bounds or surfaces. Sorts the input; throws MalformedRecord on overlap
  // or an O tag.
  static AnnotationSet from_spans(std::string doc_id,
                                  std::vector<TaggedSpan> spans);

  const std::string& doc_id() const { return doc_id_; }
  const std::vector<TaggedSpan>& spans() const { return spans_; }
  bool empty() const { return spans_.empty(); }
  std::size_t size() const { return spans_.size(); }

  bool operator==(const AnnotationSet& other) const {
    return doc_id_ == other.doc_id_ && spans_ == other.spans_;
  }

 private:
  friend AnnotationSet validate_annotation_set(const Document& doc,
                                               std::vector<TaggedSpan> raw);
  AnnotationSet(std::string doc_id, std::vector<TaggedSpan> spans)
      : doc_id_(std::move(doc_id)), spans_(std::move(spans)) {}

  std::string doc_id_;
  std::vector<TaggedSpan> spans_;
};

// Validates raw spans against the document and resolves overlaps: among
// overlapping spans the longest wins, ties broken by smaller start, then by
// position in the raw list (earlier wins). Spans tagged O are dropped. An
// empty surface is filled in from the document; a non-empty one that does
// not equal the text slice raises SurfaceMismatch. Raises OffsetOutOfRange
// when a span exceeds the text. Idempotent on its own output.
AnnotationSet validate_annotation_set(const Document& doc,
                                      std::vector<TaggedSpan> raw);

}  // namespace deid

#endif  // DEID_ANNOTATION_HPP
