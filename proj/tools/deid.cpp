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

// Command-line front end. Exit codes: 0 success, 1 some documents or
// records failed while others were processed, 2 configuration or usage
// error.

#include <cstdint>
#include <cstdio>
#include <exception>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "deid/date.hpp"
#include "deid/detect/detector.hpp"
#include "deid/errors.hpp"
#include "deid/eval/attack.hpp"
#include "deid/eval/metrics.hpp"
#include "deid/ingest.hpp"
#include "deid/log.hpp"
#include "deid/pipeline/config.hpp"
#include "deid/pipeline/pipeline.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPartial = 1;
constexpr int kExitConfig = 2;

// Options shared by every subcommand; a flag given on the command line
// overrides the config file.
struct CommonOptions {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<double> epsilon;
  std::string patterns;
  std::string gazetteer;
  std::string names_dir;
  std::string reference_date;
  std::optional<int> jobs;

  void attach(CLI::App& cmd) {
    cmd.add_option("--config", config_path, "JSON config file");
    cmd.add_option("--seed", seed,
                   "Corpus seed; omit for a non-reproducible secure source");
    cmd.add_option("--epsilon", epsilon, "Total privacy budget per document");
    cmd.add_option("--patterns", patterns, "Detection rule file (TAG\\tregex)");
    cmd.add_option("--gazetteer", gazetteer,
                   "City gazetteer CSV (name,zip,latitude,longitude)");
    cmd.add_option("--names-dir", names_dir,
                   "Directory with male/female/unisex/family name pools");
    cmd.add_option("--reference-date", reference_date,
                   "Fallback reference date (dd/mm/yyyy or yyyy-mm-dd)");
    cmd.add_option("--jobs", jobs, "Parallel document workers");
  }

  deid::pipeline::PipelineConfig resolve() const {
    deid::pipeline::PipelineConfig config;
    if (!config_path.empty()) {
      config = deid::pipeline::PipelineConfig::from_json_file(config_path);
    }
    if (seed) config.seed = *seed;
    if (epsilon) config.epsilon_total = *epsilon;
    if (!patterns.empty()) config.pattern_file = patterns;
    if (!gazetteer.empty()) config.gazetteer_file = gazetteer;
    if (!names_dir.empty()) config.names_dir = names_dir;
    if (!reference_date.empty()) {
      const std::optional<deid::Date> parsed = deid::Date::parse(reference_date);
      if (!parsed) {
        throw deid::ConfigError("unparseable --reference-date \"" +
                                reference_date + "\"");
      }
      config.reference_date = *parsed;
    }
    if (jobs) config.jobs = *jobs;
    config.validate();
    return config;
  }
};

int summary_exit(const deid::pipeline::RunSummary& summary) {
  std::printf("processed %zu document(s), %zu failed\n", summary.processed,
              summary.failed);
  return summary.failed == 0 ? kExitOk : kExitPartial;
}

int run_ingest_check(const std::string& input_dir,
                     const std::string& annotations,
                     const deid::pipeline::PipelineConfig& config) {
  const std::vector<std::string> files =
      deid::pipeline::list_text_files(input_dir);
  std::map<std::string, deid::Document> documents;
  for (const std::string& path : files) {
    deid::Document doc = deid::pipeline::load_document(path, config);
    const std::string id = doc.id();
    documents.emplace(id, std::move(doc));
  }

  std::vector<deid::ingest::RawRecord> records;
  try {
    records = deid::pipeline::read_standoff_path(annotations);
  } catch (const deid::Error& e) {
    std::printf("FAIL %s\n", e.what());
    return kExitPartial;
  }

  std::size_t failed = 0;
  for (const deid::ingest::RawRecord& record : records) {
    const auto found = documents.find(record.doc_id);
    if (found == documents.end()) {
      std::printf("FAIL %s: no such document in %s\n", record.doc_id.c_str(),
                  input_dir.c_str());
      ++failed;
      continue;
    }
    try {
      deid::ingest::IngestStats stats;
      deid::ingest::ingest(found->second, record,
                           deid::ingest::default_allow_list(), &stats);
      std::printf("ok   %s: total=%zu kept=%zu dropped_tag=%zu "
                  "dropped_overlap=%zu\n",
                  record.doc_id.c_str(), stats.total, stats.kept,
                  stats.dropped_tag, stats.dropped_overlap);
    } catch (const deid::Error& e) {
      std::printf("FAIL %s: %s\n", record.doc_id.c_str(), e.what());
      ++failed;
    }
  }
  std::printf("checked %zu record(s), %zu failed\n", records.size(), failed);
  return failed == 0 ? kExitOk : kExitPartial;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"PHI de-identification engine for French clinical-style text"};
  app.require_subcommand(1);

  bool verbose = false;
  bool quiet = false;
  app.add_flag("-v,--verbose", verbose, "Debug logging");
  app.add_flag("-q,--quiet", quiet, "Errors only");

  std::string input_dir;
  std::string output_dir;
  std::string annotations;
  std::string gold_path;
  std::string predicted_path;
  std::string audit_map;
  bool overlap = false;
  bool as_json = false;

  CommonOptions detect_opts;
  CLI::App* detect = app.add_subcommand(
      "detect", "Detect PHI spans; write standoff JSON per document");
  detect->add_option("--input", input_dir, "Directory of .txt documents")
      ->required();
  detect->add_option("--output", output_dir, "Output directory")->required();
  detect_opts.attach(*detect);

  CommonOptions check_opts;
  CLI::App* ingest_check = app.add_subcommand(
      "ingest-check", "Validate external standoff records against documents");
  ingest_check->add_option("--input", input_dir, "Directory of .txt documents")
      ->required();
  ingest_check
      ->add_option("--annotations", annotations,
                   "Standoff JSONL file or directory of .json files")
      ->required();
  check_opts.attach(*ingest_check);

  CommonOptions merge_opts;
  CLI::App* merge = app.add_subcommand(
      "merge", "Detect, ingest, and merge; write merged standoff JSON");
  merge->add_option("--input", input_dir, "Directory of .txt documents")
      ->required();
  merge->add_option("--output", output_dir, "Output directory")->required();
  merge->add_option("--annotations", annotations,
                    "Standoff JSONL file or directory of .json files");
  merge_opts.attach(*merge);

  CommonOptions deid_opts;
  CLI::App* deid_cmd = app.add_subcommand(
      "deid", "Full pipeline: detect, merge, and substitute every PHI span");
  deid_cmd->add_option("--input", input_dir, "Directory of .txt documents")
      ->required();
  deid_cmd->add_option("--output", output_dir, "Output directory")->required();
  deid_cmd->add_option("--annotations", annotations,
                       "Standoff JSONL file or directory of .json files");
  deid_cmd->add_option("--audit-map", audit_map,
                       "Write the original/surrogate map here (owner-only "
                       "file; it is a re-identification key)");
  deid_opts.attach(*deid_cmd);

  CommonOptions eval_opts;
  CLI::App* eval = app.add_subcommand(
      "eval", "Score predicted standoff records against gold ones");
  eval->add_option("--gold", gold_path, "Gold standoff JSONL file or directory")
      ->required();
  eval->add_option("--predicted", predicted_path,
                   "Predicted standoff JSONL file or directory")
      ->required();
  eval->add_flag("--overlap", overlap,
                 "Count any overlap with the same tag as a match (default: "
                 "exact span)");
  eval->add_flag("--json", as_json, "Machine-readable report");
  eval_opts.attach(*eval);

  CommonOptions attack_opts;
  CLI::App* attack = app.add_subcommand(
      "attack", "Interval-sequence uniqueness analysis over a corpus");
  attack->add_option("--input", input_dir, "Directory of .txt documents")
      ->required();
  attack->add_flag("--json", as_json, "Machine-readable report");
  attack_opts.attach(*attack);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Normalize usage errors to the documented config exit code; --help and
    // --version keep CLI11's zero exit.
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  if (verbose) deid::log::set_level(deid::log::Level::DEBUG);
  if (quiet) deid::log::set_level(deid::log::Level::ERROR);

  try {
    if (detect->parsed()) {
      const deid::pipeline::PipelineConfig config = detect_opts.resolve();
      return summary_exit(deid::pipeline::run_detect(
          deid::pipeline::list_text_files(input_dir), config, output_dir));
    }
    if (ingest_check->parsed()) {
      return run_ingest_check(input_dir, annotations, check_opts.resolve());
    }
    if (merge->parsed()) {
      const deid::pipeline::PipelineConfig config = merge_opts.resolve();
      return summary_exit(deid::pipeline::run_merge(
          deid::pipeline::list_text_files(input_dir), annotations, config,
          output_dir));
    }
    if (deid_cmd->parsed()) {
      deid::pipeline::PipelineConfig config = deid_opts.resolve();
      if (!audit_map.empty()) {
        config.emit_audit_map = true;
        config.audit_map_path = audit_map;
        config.validate();
      }
      return summary_exit(deid::pipeline::run_deid(
          deid::pipeline::list_text_files(input_dir), annotations, config,
          output_dir));
    }
    if (eval->parsed()) {
      eval_opts.resolve();  // surface config errors even though eval reads none
      const deid::eval::MetricsReport report = deid::pipeline::run_eval(
          gold_path, predicted_path,
          overlap ? deid::eval::Matching::OVERLAP
                  : deid::eval::Matching::EXACT_SPAN);
      if (as_json) {
        std::printf("%s\n", deid::eval::to_json(report).c_str());
      } else {
        std::printf("%s", deid::eval::to_table(report).c_str());
      }
      return kExitOk;
    }
    if (attack->parsed()) {
      const deid::pipeline::PipelineConfig config = attack_opts.resolve();
      const deid::eval::UniquenessReport report = deid::pipeline::run_attack(
          deid::pipeline::list_text_files(input_dir), config);
      if (as_json) {
        std::printf("%s\n", deid::eval::to_json(report).c_str());
      } else {
        std::printf("documents: %zu\nnon-unique: %zu\nfraction unique: %.4f\n",
                    report.n_docs, report.n_non_unique,
                    report.fraction_unique);
      }
      return kExitOk;
    }
  } catch (const deid::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfig;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitConfig;
  }
  return kExitConfig;  // unreachable: require_subcommand(1)
}
