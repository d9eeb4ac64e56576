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

#include "deid/merge.hpp"

#include <algorithm>

#include "deid/errors.hpp"
#include "deid/log.hpp"

namespace deid::merge {

namespace {

struct SourcedSpan {
  const TaggedSpan* span;
  bool from_rule;
};

// The tag a single source proposes for a cluster: its longest contributing
// span, ties broken by earlier start. Spans within one source never overlap
// (the sets are validated), so this is well-defined.
Tag cluster_tag(const std::vector<SourcedSpan>& cluster, bool from_rule) {
  const TaggedSpan* best = nullptr;
  for (const SourcedSpan& s : cluster) {
    if (s.from_rule != from_rule) continue;
    if (best == nullptr || s.span->length() > best->length() ||
        (s.span->length() == best->length() && s.span->start < best->start)) {
      best = s.span;
    }
  }
  return best == nullptr ? Tag::O : best->tag;
}

}  // namespace

std::vector<MergeCandidate> align(const AnnotationSet& rule,
                                  const AnnotationSet& external) {
  std::vector<SourcedSpan> all;
  all.reserve(rule.size() + external.size());
  for (const TaggedSpan& s : rule.spans()) all.push_back({&s, true});
  for (const TaggedSpan& s : external.spans()) all.push_back({&s, false});
  std::sort(all.begin(), all.end(),
            [](const SourcedSpan& a, const SourcedSpan& b) {
              if (a.span->start != b.span->start)
                return a.span->start < b.span->start;
              return a.span->end < b.span->end;
            });

  std::vector<MergeCandidate> candidates;
  std::vector<SourcedSpan> cluster;
  std::size_t cluster_end = 0;
  auto flush = [&] {
    if (cluster.empty()) return;
    MergeCandidate c;
    c.start = cluster.front().span->start;
    c.end = cluster_end;
    c.t_m = cluster_tag(cluster, /*from_rule=*/true);
    c.t_n = cluster_tag(cluster, /*from_rule=*/false);
    if (cluster.size() > 2) {
      log::debug("align: " + std::to_string(cluster.size()) +
                 " spans chain into candidate [" + std::to_string(c.start) +
                 "," + std::to_string(c.end) + ")");
    }
    candidates.push_back(c);
    cluster.clear();
  };
  for (const SourcedSpan& s : all) {
    if (!cluster.empty() && s.span->start >= cluster_end) flush();
    cluster.push_back(s);
    cluster_end = std::max(cluster_end, s.span->end);
  }
  flush();
  return candidates;
}

Tag decide(const MergeCandidate& candidate) {
  if (candidate.t_m == Tag::O && candidate.t_n == Tag::O) {
    throw BothOutside("merge candidate [" + std::to_string(candidate.start) +
                      "," + std::to_string(candidate.end) +
                      ") has no tag from either source");
  }
  if (candidate.t_m == candidate.t_n) return candidate.t_m;  // case 1
  if (candidate.t_m == Tag::O) return candidate.t_n;         // case 2
  if (candidate.t_n == Tag::O) return candidate.t_m;         // case 2
  return candidate.t_n;                                      // case 3
}

AnnotationSet merge(const Document& doc, const AnnotationSet& rule,
                    const AnnotationSet& external,
                    std::vector<CaseThreeConflict>* conflicts) {
  if (!rule.empty() && rule.doc_id() != doc.id()) {
    throw DocumentMismatch("rule annotations belong to '" + rule.doc_id() +
                           "', not '" + doc.id() + "'");
  }
  if (!external.empty() && external.doc_id() != doc.id()) {
    throw DocumentMismatch("external annotations belong to '" +
                           external.doc_id() + "', not '" + doc.id() + "'");
  }
  std::vector<TaggedSpan> merged;
  for (const MergeCandidate& c : align(rule, external)) {
    const Tag tag = decide(c);
    if (c.t_m != Tag::O && c.t_n != Tag::O && c.t_m != c.t_n) {
      log::info("doc " + doc.id() + ": case-3 conflict [" +
                std::to_string(c.start) + "," + std::to_string(c.end) +
                ") rule=" + std::string(to_string(c.t_m)) +
                " external=" + std::string(to_string(c.t_n)) +
                " -> external wins");
      if (conflicts != nullptr) {
        conflicts->push_back(CaseThreeConflict{c.start, c.end, c.t_m, c.t_n});
      }
    }
    merged.push_back(TaggedSpan{c.start, c.end, tag, Source::MERGED, ""});
  }
  return validate_annotation_set(doc, std::move(merged));
}

}  // namespace deid::merge
