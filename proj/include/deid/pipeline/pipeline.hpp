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

#ifndef DEID_PIPELINE_PIPELINE_HPP
#define DEID_PIPELINE_PIPELINE_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "deid/annotation.hpp"
#include "deid/detect/pattern_set.hpp"
#include "deid/document.hpp"
#include "deid/eval/attack.hpp"
#include "deid/eval/metrics.hpp"
#include "deid/geo/gazetteer.hpp"
#include "deid/ingest.hpp"
#include "deid/ldp/budget.hpp"
#include "deid/pipeline/config.hpp"
#include "deid/surrogate/names.hpp"

namespace deid::pipeline {

// Immutable shared state for a corpus run.
struct Resources {
  detect::PatternSet patterns;
  std::optional<geo::Gazetteer> gazetteer;
  std::optional<surrogate::NamePools> name_pools;

  // `for_substitution` additionally requires the gazetteer and name pools.
  static Resources load(const PipelineConfig& config, bool for_substitution);
};

// Reads `<path>` as a UTF-8 document; doc id is the file stem. The
// reference date comes from a `<stem>.meta.json` sidecar next to the file
// ({"reference_date": "...", ...}), else the config fallback, else today.
Document load_document(const std::string& path, const PipelineConfig& config);

// The .txt files of a directory, sorted by name.
std::vector<std::string> list_text_files(const std::string& dir);

struct DocumentResult {
  std::string doc_id;
  bool ok = true;
  std::string error;  // set when !ok
  std::string output_text;
  AnnotationSet merged;  // spans found (offsets refer to the input text)
  std::vector<std::pair<std::string, std::string>> audit;  // original → new
  std::vector<ldp::LedgerEntry> ledger;
  std::vector<long> fingerprint;  // pre-sanitization S'_i
};

// Detect → merge → substitute for one document. `external` may be empty.
DocumentResult deid_document(const Document& doc,
                             const AnnotationSet& external,
                             const PipelineConfig& config,
                             const Resources& resources);

struct RunSummary {
  std::size_t processed = 0;
  std::size_t failed = 0;
};

// Corpus runs. Each writes per-document outputs into `output_dir` and
// returns how many documents succeeded; per-document failures are logged
// and never abort the run.
RunSummary run_detect(const std::vector<std::string>& input_files,
                      const PipelineConfig& config,
                      const std::string& output_dir);

RunSummary run_deid(const std::vector<std::string>& input_files,
                    const std::string& annotations_file,  // "" → none
                    const PipelineConfig& config,
                    const std::string& output_dir);

// Detect + ingest + merge only; writes the merged standoff JSON per
// document without substituting anything.
RunSummary run_merge(const std::vector<std::string>& input_files,
                     const std::string& annotations_file,  // "" → none
                     const PipelineConfig& config,
                     const std::string& output_dir);

// Standoff records from a JSONL file or from every .json file of a
// directory (sorted by name).
std::vector<ingest::RawRecord> read_standoff_path(const std::string& path);

// Scores predicted standoff records against gold ones (JSONL file or
// directory of .json files, matched by doc_id; a gold document missing from
// `predicted` counts as all-FN).
eval::MetricsReport run_eval(const std::string& gold_file,
                             const std::string& predicted_file,
                             eval::Matching matching);

// Builds each document's chronological fingerprint and reports uniqueness.
eval::UniquenessReport run_attack(const std::vector<std::string>& input_files,
                                  const PipelineConfig& config);

// Stable per-document seed derived from the corpus seed.
std::uint64_t derive_seed(std::uint64_t corpus_seed, const std::string& doc_id);

}  // namespace deid::pipeline

#endif  // DEID_PIPELINE_PIPELINE_HPP
