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

#ifndef DEID_MERGE_HPP
#define DEID_MERGE_HPP

#include <vector>

#include "deid/annotation.hpp"
#include "deid/document.hpp"

namespace deid::merge {

// One alignment unit: the union region of a chain of overlapping spans from
// the two sources, with each source's proposed tag (O when that source is
// silent over the region).
struct MergeCandidate {
  std::size_t start = 0;
  std::size_t end = 0;
  Tag t_m = Tag::O;  // rule-based source
  Tag t_n = Tag::O;  // external source
};

// A region where both sources spoke and disagreed; the external tag won.
struct CaseThreeConflict {
  std::size_t start = 0;
  std::size_t end = 0;
  Tag t_m = Tag::O;
  Tag t_n = Tag::O;
};

// Groups spans that overlap by at least one character (transitively) into
// candidates whose region is the union. When several spans of one source
// chain into a candidate, that source's tag is the longest contributor's
// (ties: earlier start). Candidates come back sorted by start.
std::vector<MergeCandidate> align(const AnnotationSet& rule,
                                  const AnnotationSet& external);

// The three-case decision: equal tags keep the tag; if exactly one source
// is silent the speaking tag wins; if both spoke and disagree the external
// tag wins. Throws BothOutside when neither source spoke.
Tag decide(const MergeCandidate& candidate);

// align + decide over a whole document; output spans have source MERGED.
// Case-3 conflicts are logged (doc id, region, both tags) and appended to
// `conflicts` when given.
AnnotationSet merge(const Document& doc, const AnnotationSet& rule,
                    const AnnotationSet& external,
                    std::vector<CaseThreeConflict>* conflicts = nullptr);

}  // namespace deid::merge

#endif  // DEID_MERGE_HPP
