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

#ifndef DEID_EVAL_METRICS_HPP
#define DEID_EVAL_METRICS_HPP

#include <map>
#include <string>
#include <vector>

#include "deid/annotation.hpp"
#include "deid/tag.hpp"

namespace deid::eval {

enum class Matching { EXACT_SPAN, OVERLAP };

struct Counts {
  long tp = 0;
  long fp = 0;
  long fn = 0;
};

// Per-tag confusion counts; additive across documents.
struct ConfusionCounts {
  std::map<Tag, Counts> per_tag;

  ConfusionCounts& operator+=(const ConfusionCounts& other);
};

// Compares predictions against gold for one document. EXACT_SPAN (the
// default elsewhere): a prediction is a true positive iff offsets and tag
// both match a gold span. OVERLAP: a one-character overlap with the right
// tag counts, matched greedily one-to-one in span order. Throws
// DocumentMismatch when the two sets name different documents.
ConfusionCounts score(const AnnotationSet& gold,
                      const AnnotationSet& predicted,
                      Matching matching = Matching::EXACT_SPAN);

struct TagMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  // True when some denominator was zero and the convention value 0 was
  // used; keeps corpus aggregation total instead of erroring.
  bool degenerate = false;
};

struct MetricsReport {
  std::map<Tag, TagMetrics> per_tag;
  Counts pooled;
  TagMetrics micro;
};

// Pools TP/FP/FN over all tags, then computes precision, recall, and F1
// from the pooled counts (each PHI instance weighs the same regardless of
// category).
MetricsReport micro_average(const ConfusionCounts& counts);

std::string to_json(const MetricsReport& report);
std::string to_table(const MetricsReport& report);

}  // namespace deid::eval

#endif  // DEID_EVAL_METRICS_HPP
