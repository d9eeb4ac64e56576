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

#include "deid/eval/metrics.hpp"

#include <cstdio>
#include <vector>

#include "json.hpp"

#include "deid/errors.hpp"

namespace deid::eval {

namespace {

TagMetrics from_counts(const Counts& c) {
  TagMetrics m;
  const long p_den = c.tp + c.fp;
  const long r_den = c.tp + c.fn;
  const long f_den = 2 * c.tp + c.fp + c.fn;
  m.degenerate = p_den == 0 || r_den == 0 || f_den == 0;
  m.precision = p_den == 0 ? 0.0
                           : static_cast<double>(c.tp) /
                                 static_cast<double>(p_den);
  m.recall = r_den == 0 ? 0.0
                        : static_cast<double>(c.tp) /
                              static_cast<double>(r_den);
  // Single-division form of the harmonic mean, exact on rational fixtures.
  m.f1 = f_den == 0 ? 0.0
                    : static_cast<double>(2 * c.tp) /
                          static_cast<double>(f_den);
  return m;
}

}  // namespace

ConfusionCounts& ConfusionCounts::operator+=(const ConfusionCounts& other) {
  for (const auto& [tag, c] : other.per_tag) {
    Counts& mine = per_tag[tag];
    mine.tp += c.tp;
    mine.fp += c.fp;
    mine.fn += c.fn;
  }
  return *this;
}

ConfusionCounts score(const AnnotationSet& gold,
                      const AnnotationSet& predicted, Matching matching) {
  if (!gold.empty() && !predicted.empty() &&
      gold.doc_id() != predicted.doc_id()) {
    throw DocumentMismatch("scoring '" + predicted.doc_id() +
                           "' against gold '" + gold.doc_id() + "'");
  }
  ConfusionCounts counts;
  std::vector<bool> gold_matched(gold.size(), false);
  for (const TaggedSpan& p : predicted.spans()) {
    bool matched = false;
    for (std::size_t i = 0; i < gold.size(); ++i) {
      if (gold_matched[i]) continue;
      const TaggedSpan& g = gold.spans()[i];
      if (g.tag != p.tag) continue;
      const bool hit = matching == Matching::EXACT_SPAN
                           ? (g.start == p.start && g.end == p.end)
                           : g.overlaps(p);
      if (hit) {
        gold_matched[i] = true;
        matched = true;
        break;
      }
    }
    if (matched) {
      ++counts.per_tag[p.tag].tp;
    } else {
      ++counts.per_tag[p.tag].fp;
    }
  }
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (!gold_matched[i]) ++counts.per_tag[gold.spans()[i].tag].fn;
  }
  return counts;
}

MetricsReport micro_average(const ConfusionCounts& counts) {
  MetricsReport report;
  for (const auto& [tag, c] : counts.per_tag) {
    report.per_tag[tag] = from_counts(c);
    report.pooled.tp += c.tp;
    report.pooled.fp += c.fp;
    report.pooled.fn += c.fn;
  }
  report.micro = from_counts(report.pooled);
  return report;
}

std::string to_json(const MetricsReport& report) {
  nlohmann::json tags = nlohmann::json::object();
  for (const auto& [tag, m] : report.per_tag) {
    tags[std::string(to_string(tag))] = {{"precision", m.precision},
                                         {"recall", m.recall},
                                         {"f1", m.f1},
                                         {"degenerate", m.degenerate}};
  }
  nlohmann::json root = {
      {"per_tag", std::move(tags)},
      {"pooled",
       {{"tp", report.pooled.tp},
        {"fp", report.pooled.fp},
        {"fn", report.pooled.fn}}},
      {"micro",
       {{"precision", report.micro.precision},
        {"recall", report.micro.recall},
        {"f1", report.micro.f1},
        {"degenerate", report.micro.degenerate}}}};
  return root.dump(2);
}

std::string to_table(const MetricsReport& report) {
  std::string out;
  char line[96];
  std::snprintf(line, sizeof(line), "%-8s %9s %9s %9s\n", "tag", "precision",
                "recall", "f1");
  out += line;
  for (const auto& [tag, m] : report.per_tag) {
    std::snprintf(line, sizeof(line), "%-8s %9.4f %9.4f %9.4f%s\n",
                  std::string(to_string(tag)).c_str(), m.precision, m.recall,
                  m.f1, m.degenerate ? "  (degenerate)" : "");
    out += line;
  }
  std::snprintf(line, sizeof(line), "%-8s %9.4f %9.4f %9.4f%s\n", "micro",
                report.micro.precision, report.micro.recall, report.micro.f1,
                report.micro.degenerate ? "  (degenerate)" : "");
  out += line;
  return out;
}

}  // namespace deid::eval
