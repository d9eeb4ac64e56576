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

#include "deid/pipeline/pipeline.hpp"

#include <fcntl.h>
#include <sys/stat.h>
#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <thread>
#include <utility>

#include "json.hpp"

#include "deid/dates/chronology.hpp"
#include "deid/detect/detector.hpp"
#include "deid/detect/temporal.hpp"
#include "deid/errors.hpp"
#include "deid/geo/sanitizer.hpp"
#include "deid/ingest.hpp"
#include "deid/ldp/rng.hpp"
#include "deid/log.hpp"
#include "deid/merge.hpp"
#include "deid/surrogate/format.hpp"

namespace deid::pipeline {

namespace fs = std::filesystem;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot open " + path + " for writing");
  out << content;
  if (!out) throw ConfigError("short write to " + path);
}

// The audit map is a re-identification key: it is created owner-only and
// re-chmodded in case the path already existed with wider permissions.
void write_file_private(const std::string& path, const std::string& content) {
  const int fd =
      ::open(path.c_str(), O_CREAT | O_WRONLY | O_TRUNC, S_IRUSR | S_IWUSR);
  if (fd < 0) throw ConfigError("cannot open " + path + " for writing");
  std::size_t written = 0;
  while (written < content.size()) {
    const ssize_t n =
        ::write(fd, content.data() + written, content.size() - written);
    if (n < 0) {
      ::close(fd);
      throw ConfigError("short write to " + path);
    }
    written += static_cast<std::size_t>(n);
  }
  ::fchmod(fd, S_IRUSR | S_IWUSR);
  ::close(fd);
}

Date today() {
  using namespace std::chrono;
  const year_month_day ymd(floor<days>(system_clock::now()));
  return Date{static_cast<int>(ymd.year()),
              static_cast<int>(static_cast<unsigned>(ymd.month())),
              static_cast<int>(static_cast<unsigned>(ymd.day()))};
}

// Runs fn(0..n-1) on `jobs` workers. fn must not throw (each task catches
// its own failures so one bad document never takes down its siblings).
void parallel_for_each(std::size_t n, int jobs,
                       const std::function<void(std::size_t)>& fn) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  const std::size_t workers = std::min(static_cast<std::size_t>(jobs), n);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) fn(i);
    });
  }
  for (std::thread& t : pool) t.join();
}

std::unique_ptr<ldp::Rng> make_rng(const PipelineConfig& config,
                                   const std::string& doc_id) {
  if (config.seed) {
    return std::make_unique<ldp::SeededRng>(derive_seed(*config.seed, doc_id));
  }
  return std::make_unique<ldp::SecureRng>();
}

// External records keyed by document; repeated records for one document
// contribute all their spans. "" → empty map.
std::map<std::string, ingest::RawRecord> collect_annotations(
    const std::string& path) {
  std::map<std::string, ingest::RawRecord> annotations;
  if (path.empty()) return annotations;
  std::vector<ingest::RawRecord> records = read_standoff_path(path);
  for (ingest::RawRecord& record : records) {
    const auto it = annotations.find(record.doc_id);
    if (it == annotations.end()) {
      annotations.emplace(record.doc_id, std::move(record));
    } else {
      it->second.spans.insert(it->second.spans.end(), record.spans.begin(),
                              record.spans.end());
    }
  }
  return annotations;
}

}  // namespace

Resources Resources::load(const PipelineConfig& config, bool for_substitution) {
  Resources resources;
  if (config.pattern_file.empty()) {
    resources.patterns = detect::PatternSet::builtin();
  } else {
    resources.patterns = detect::PatternSet::load(config.pattern_file);
  }
  if (for_substitution) {
    if (config.gazetteer_file.empty()) {
      throw ConfigError("substitution requires a gazetteer_file");
    }
    if (config.names_dir.empty()) {
      throw ConfigError("substitution requires a names_dir");
    }
    resources.gazetteer = geo::Gazetteer::load(config.gazetteer_file);
    resources.name_pools = surrogate::NamePools::load(config.names_dir);
  }
  return resources;
}

Document load_document(const std::string& path, const PipelineConfig& config) {
  const fs::path file(path);
  const std::string doc_id = file.stem().string();
  std::string text = read_file(path);

  std::map<std::string, std::string> metadata;
  std::optional<Date> reference;
  fs::path sidecar(file);
  sidecar.replace_extension(".meta.json");
  if (fs::exists(sidecar)) {
    const nlohmann::json parsed =
        nlohmann::json::parse(read_file(sidecar.string()), nullptr,
                              /*allow_exceptions=*/false);
    if (parsed.is_discarded() || !parsed.is_object()) {
      throw ConfigError(sidecar.string() + ": not a JSON object");
    }
    for (auto it = parsed.begin(); it != parsed.end(); ++it) {
      if (!it.value().is_string()) {
        throw ConfigError(sidecar.string() + ": value of \"" + it.key() +
                          "\" must be a string");
      }
      metadata[it.key()] = it.value().get<std::string>();
    }
    const auto found = metadata.find("reference_date");
    if (found != metadata.end()) {
      reference = Date::parse(found->second);
      if (!reference) {
        throw ConfigError(sidecar.string() + ": unparseable reference_date \"" +
                          found->second + "\"");
      }
    }
  }
  if (!reference) reference = config.reference_date;
  if (!reference) {
    reference = today();
    log::warn("document " + doc_id + ": no reference date; using today (" +
              reference->to_iso_string() + ")");
  }
  return Document(doc_id, std::move(text), *reference, std::move(metadata));
}

std::vector<std::string> list_text_files(const std::string& dir) {
  if (!fs::is_directory(dir)) {
    throw ConfigError(dir + " is not a directory");
  }
  std::vector<std::string> files;
  for (const fs::directory_entry& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") {
      files.push_back(entry.path().string());
    }
  }
  std::sort(files.begin(), files.end());
  return files;
}

std::uint64_t derive_seed(std::uint64_t corpus_seed,
                          const std::string& doc_id) {
  // FNV-1a over the id, mixed with the corpus seed through the splitmix64
  // finalizer, so near-identical ids still get unrelated streams.
  std::uint64_t h = 14695981039346656037ull;
  for (const unsigned char c : doc_id) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::uint64_t z = (h ^ corpus_seed) + 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

DocumentResult deid_document(const Document& doc, const AnnotationSet& external,
                             const PipelineConfig& config,
                             const Resources& resources) {
  DocumentResult result;
  result.doc_id = doc.id();
  try {
    const AnnotationSet rule = detect::detect_structured(doc, resources.patterns);
    result.merged = merge::merge(doc, rule, external);

    // Partition the merged spans by treatment.
    std::vector<detect::TemporalMention> mentions;
    std::vector<const TaggedSpan*> locations;
    std::vector<const TaggedSpan*> names;
    std::vector<const TaggedSpan*> masked;
    for (const TaggedSpan& span : result.merged.spans()) {
      switch (span.tag) {
        case Tag::DATE:
        case Tag::AGE:
          if (span.tag == Tag::AGE && !config.include_ages) {
            masked.push_back(&span);
            break;
          }
          try {
            mentions.push_back(detect::normalize_temporal(doc, span));
          } catch (const UnparseableTemporal& e) {
            log::warn("document " + doc.id() + ": " + e.what() +
                      "; masking the span instead");
            masked.push_back(&span);
          }
          break;
        case Tag::LOC:
          locations.push_back(&span);
          break;
        case Tag::PER:
          names.push_back(&span);
          break;
        case Tag::PHONE:
        case Tag::EMAIL:
        case Tag::URL:
        case Tag::ID:
          masked.push_back(&span);
          break;
        case Tag::ORG:
          if (config.substitute_org) {
            masked.push_back(&span);
          } else {
            log::debug("document " + doc.id() + ": ORG span [" +
                       std::to_string(span.start) + ", " +
                       std::to_string(span.end) + ") left in place");
          }
          break;
        case Tag::MISC:
          log::debug("document " + doc.id() + ": MISC span [" +
                     std::to_string(span.start) + ", " +
                     std::to_string(span.end) + ") left in place");
          break;
        case Tag::O:
          break;  // never stored in an AnnotationSet
      }
    }

    ldp::PrivacyBudget budget = config.make_budget();
    budget.plan(locations.size(), mentions.size());
    const std::unique_ptr<ldp::Rng> rng = make_rng(config, doc.id());

    std::vector<dates::Replacement> replacements;
    replacements.reserve(result.merged.size());

    if (!mentions.empty()) {
      const dates::TemporalSequence chronology =
          dates::build_chronology(mentions, doc.reference_date());
      result.fingerprint = dates::uniqueness_fingerprint(chronology);
      dates::SanitizedChronology sanitized = dates::sanitize_dates(
          chronology, mentions, budget, *rng, config.category_bounds);
      for (dates::Replacement& r : sanitized.replacements) {
        replacements.push_back(std::move(r));
      }
    }

    if (!locations.empty()) {
      const std::vector<double> epsilons =
          budget.allocate(ldp::Pool::LOCATION, locations.size());
      geo::LocationMemo memo;
      for (std::size_t i = 0; i < locations.size(); ++i) {
        replacements.push_back(
            {*locations[i],
             geo::substitute_location(*resources.gazetteer, *locations[i],
                                      epsilons[i], memo, *rng)});
      }
    }

    if (!names.empty()) {
      surrogate::NameLookupTable table(&*resources.name_pools);
      for (const TaggedSpan* span : names) {
        replacements.push_back({*span, table.substitute(span->surface, *rng)});
      }
    }

    for (const TaggedSpan* span : masked) {
      replacements.push_back({*span, surrogate::substitute_formatted(*span, *rng)});
    }

    std::sort(replacements.begin(), replacements.end(),
              [](const dates::Replacement& a, const dates::Replacement& b) {
                return a.span.start < b.span.start;
              });
    for (const dates::Replacement& r : replacements) {
      result.audit.emplace_back(r.span.surface, r.text);
    }

    // Splice right to left so earlier byte offsets stay valid.
    std::string output = doc.text();
    for (auto it = replacements.rbegin(); it != replacements.rend(); ++it) {
      const std::size_t from = doc.byte_offset(it->span.start);
      const std::size_t to = doc.byte_offset(it->span.end);
      output.replace(from, to - from, it->text);
    }
    result.output_text = std::move(output);
    result.ledger = budget.ledger();
  } catch (const std::exception& e) {
    result.ok = false;
    result.error = e.what();
  }
  return result;
}

RunSummary run_detect(const std::vector<std::string>& input_files,
                      const PipelineConfig& config,
                      const std::string& output_dir) {
  const Resources resources = Resources::load(config, /*for_substitution=*/false);
  fs::create_directories(output_dir);

  RunSummary summary;
  std::mutex mutex;
  parallel_for_each(input_files.size(), config.jobs, [&](std::size_t i) {
    const std::string& path = input_files[i];
    try {
      const Document doc = load_document(path, config);
      const AnnotationSet found =
          detect::detect_structured(doc, resources.patterns);
      const fs::path out = fs::path(output_dir) / (doc.id() + ".json");
      write_file(out.string(), ingest::to_standoff_json(found) + "\n");
      const std::lock_guard<std::mutex> lock(mutex);
      ++summary.processed;
    } catch (const std::exception& e) {
      log::error(path + ": " + std::string(e.what()));
      const std::lock_guard<std::mutex> lock(mutex);
      ++summary.failed;
    }
  });
  return summary;
}

RunSummary run_deid(const std::vector<std::string>& input_files,
                    const std::string& annotations_file,
                    const PipelineConfig& config,
                    const std::string& output_dir) {
  const Resources resources = Resources::load(config, /*for_substitution=*/true);
  fs::create_directories(output_dir);
  const std::map<std::string, ingest::RawRecord> annotations =
      collect_annotations(annotations_file);

  struct Outcome {
    std::string doc_id;
    bool ok = false;
    std::string error;
    std::vector<ldp::LedgerEntry> ledger;
    std::vector<std::pair<std::string, std::string>> audit;
  };
  std::vector<Outcome> outcomes(input_files.size());

  parallel_for_each(input_files.size(), config.jobs, [&](std::size_t i) {
    const std::string& path = input_files[i];
    Outcome& outcome = outcomes[i];
    outcome.doc_id = fs::path(path).stem().string();
    try {
      const Document doc = load_document(path, config);
      AnnotationSet external;
      const auto found = annotations.find(doc.id());
      if (found != annotations.end()) {
        external = ingest::ingest(doc, found->second);
      }
      DocumentResult result = deid_document(doc, external, config, resources);
      if (!result.ok) throw Error(result.error);
      const fs::path out = fs::path(output_dir) / (doc.id() + ".txt");
      write_file(out.string(), result.output_text);
      outcome.ok = true;
      outcome.ledger = std::move(result.ledger);
      outcome.audit = std::move(result.audit);
    } catch (const std::exception& e) {
      outcome.error = e.what();
      log::error(path + ": " + outcome.error);
    }
  });

  RunSummary summary;
  nlohmann::json docs = nlohmann::json::array();
  for (const Outcome& outcome : outcomes) {
    nlohmann::json entry;
    entry["doc_id"] = outcome.doc_id;
    entry["status"] = outcome.ok ? "ok" : "failed";
    if (outcome.ok) {
      double spent = 0.0;
      nlohmann::json ledger = nlohmann::json::array();
      for (const ldp::LedgerEntry& line : outcome.ledger) {
        ledger.push_back({{"label", line.label}, {"epsilon", line.epsilon}});
        spent += line.epsilon;
      }
      entry["ledger"] = std::move(ledger);
      entry["epsilon_spent"] = spent;
      ++summary.processed;
    } else {
      entry["error"] = outcome.error;
      ++summary.failed;
    }
    docs.push_back(std::move(entry));
  }
  nlohmann::json report;
  report["epsilon_total"] = config.epsilon_total;
  report["documents"] = std::move(docs);
  write_file((fs::path(output_dir) / "deid_report.json").string(),
             report.dump(2) + "\n");

  if (config.emit_audit_map) {
    nlohmann::json map = nlohmann::json::object();
    for (const Outcome& outcome : outcomes) {
      if (!outcome.ok) continue;
      nlohmann::json pairs = nlohmann::json::array();
      for (const auto& [original, surrogate] : outcome.audit) {
        pairs.push_back({{"original", original}, {"surrogate", surrogate}});
      }
      map[outcome.doc_id] = std::move(pairs);
    }
    write_file_private(config.audit_map_path, map.dump(2) + "\n");
  }
  return summary;
}

RunSummary run_merge(const std::vector<std::string>& input_files,
                     const std::string& annotations_file,
                     const PipelineConfig& config,
                     const std::string& output_dir) {
  const Resources resources = Resources::load(config, /*for_substitution=*/false);
  fs::create_directories(output_dir);
  const std::map<std::string, ingest::RawRecord> annotations =
      collect_annotations(annotations_file);

  RunSummary summary;
  std::mutex mutex;
  parallel_for_each(input_files.size(), config.jobs, [&](std::size_t i) {
    const std::string& path = input_files[i];
    try {
      const Document doc = load_document(path, config);
      const AnnotationSet rule =
          detect::detect_structured(doc, resources.patterns);
      AnnotationSet external;
      const auto found = annotations.find(doc.id());
      if (found != annotations.end()) {
        external = ingest::ingest(doc, found->second);
      }
      const AnnotationSet merged = merge::merge(doc, rule, external);
      const fs::path out = fs::path(output_dir) / (doc.id() + ".json");
      write_file(out.string(), ingest::to_standoff_json(merged) + "\n");
      const std::lock_guard<std::mutex> lock(mutex);
      ++summary.processed;
    } catch (const std::exception& e) {
      log::error(path + ": " + std::string(e.what()));
      const std::lock_guard<std::mutex> lock(mutex);
      ++summary.failed;
    }
  });
  return summary;
}

std::vector<ingest::RawRecord> read_standoff_path(const std::string& path) {
  if (!fs::is_directory(path)) {
    return ingest::read_standoff_file(path);
  }
  std::vector<std::string> files;
  for (const fs::directory_entry& entry : fs::directory_iterator(path)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      files.push_back(entry.path().string());
    }
  }
  std::sort(files.begin(), files.end());
  std::vector<ingest::RawRecord> records;
  for (const std::string& file : files) {
    std::vector<ingest::RawRecord> part = ingest::read_standoff_file(file);
    records.insert(records.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
  }
  return records;
}

eval::MetricsReport run_eval(const std::string& gold_file,
                             const std::string& predicted_file,
                             eval::Matching matching) {
  const auto collapse = [](const std::string& path) {
    std::map<std::string, std::vector<TaggedSpan>> by_doc;
    for (ingest::RawRecord& record : read_standoff_path(path)) {
      std::vector<TaggedSpan>& spans = by_doc[record.doc_id];
      for (TaggedSpan& span : record.spans) {
        if (span.tag == Tag::O) {
          log::warn(path + ": O span in document " + record.doc_id +
                    " ignored");
          continue;
        }
        spans.push_back(std::move(span));
      }
    }
    return by_doc;
  };
  const auto gold = collapse(gold_file);
  const auto predicted = collapse(predicted_file);

  for (const auto& [doc_id, spans] : predicted) {
    if (gold.find(doc_id) == gold.end()) {
      throw ConfigError("predicted document \"" + doc_id +
                        "\" does not appear in the gold file");
    }
  }

  eval::ConfusionCounts totals;
  for (const auto& [doc_id, spans] : gold) {
    const AnnotationSet g = AnnotationSet::from_spans(doc_id, spans);
    const auto found = predicted.find(doc_id);
    const AnnotationSet p = AnnotationSet::from_spans(
        doc_id, found == predicted.end() ? std::vector<TaggedSpan>{}
                                         : found->second);
    totals += eval::score(g, p, matching);
  }
  return eval::micro_average(totals);
}

eval::UniquenessReport run_attack(const std::vector<std::string>& input_files,
                                  const PipelineConfig& config) {
  const Resources resources = Resources::load(config, /*for_substitution=*/false);
  std::vector<std::vector<long>> fingerprints(input_files.size());
  parallel_for_each(input_files.size(), config.jobs, [&](std::size_t i) {
    try {
      const Document doc = load_document(input_files[i], config);
      const AnnotationSet found =
          detect::detect_structured(doc, resources.patterns);
      std::vector<detect::TemporalMention> mentions;
      for (const TaggedSpan& span : found.spans()) {
        if (span.tag != Tag::DATE &&
            !(span.tag == Tag::AGE && config.include_ages)) {
          continue;
        }
        try {
          mentions.push_back(detect::normalize_temporal(doc, span));
        } catch (const UnparseableTemporal& e) {
          log::warn("document " + doc.id() + ": " + e.what());
        }
      }
      if (!mentions.empty()) {
        fingerprints[i] = dates::uniqueness_fingerprint(
            dates::build_chronology(mentions, doc.reference_date()));
      }
    } catch (const std::exception& e) {
      // An unreadable document contributes no signal: empty fingerprint.
      log::error(input_files[i] + ": " + std::string(e.what()));
    }
  });
  return eval::uniqueness_attack(fingerprints);
}

}  // namespace deid::pipeline
