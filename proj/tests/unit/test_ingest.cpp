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

#include <sstream>
#include <string>

#include "doctest.h"

#include "deid/document.hpp"
#include "deid/errors.hpp"
#include "deid/ingest.hpp"

using namespace deid;

TEST_CASE("parses a well-formed standoff record") {
  const ingest::RawRecord record = ingest::parse_record(
      R"({"doc_id": "n1", "spans": [{"start": 3, "end": 7, "tag": "PER"},)"
      R"( {"start": 9, "end": 12, "tag": "LOC", "surface": "Bar"}]})");
  CHECK(record.doc_id == "n1");
  REQUIRE(record.spans.size() == 2);
  CHECK(record.spans[0].tag == Tag::PER);
  CHECK(record.spans[0].source == Source::EXTERNAL);
  CHECK(record.spans[0].surface.empty());
  CHECK(record.spans[1].surface == "Bar");
}

TEST_CASE("rejects malformed records") {
  CHECK_THROWS_AS(ingest::parse_record("not json"), MalformedRecord);
  CHECK_THROWS_AS(ingest::parse_record("[1,2]"), MalformedRecord);
  CHECK_THROWS_AS(ingest::parse_record(R"({"spans": []})"), MalformedRecord);
  CHECK_THROWS_AS(ingest::parse_record(R"({"doc_id": "n1"})"), MalformedRecord);
  CHECK_THROWS_AS(ingest::parse_record(R"({"doc_id": 4, "spans": []})"),
                  MalformedRecord);
  CHECK_THROWS_AS(
      ingest::parse_record(
          R"({"doc_id": "n1", "spans": [{"start": -1, "end": 3, "tag": "PER"}]})"),
      MalformedRecord);
  CHECK_THROWS_AS(
      ingest::parse_record(
          R"({"doc_id": "n1", "spans": [{"start": 5, "end": 3, "tag": "PER"}]})"),
      MalformedRecord);
  CHECK_THROWS_AS(
      ingest::parse_record(
          R"({"doc_id": "n1", "spans": [{"start": 3, "end": 3, "tag": "PER"}]})"),
      MalformedRecord);
  CHECK_THROWS_AS(
      ingest::parse_record(
          R"({"doc_id": "n1", "spans": [{"start": 1, "end": 3, "tag": "NAME"}]})"),
      MalformedRecord);
  CHECK_THROWS_AS(
      ingest::parse_record(
          R"({"doc_id": "n1", "spans": [{"start": 1.5, "end": 3, "tag": "PER"}]})"),
      MalformedRecord);
  CHECK_THROWS_AS(
      ingest::parse_record(R"({"doc_id": "n1", "spans": [{"end": 3, "tag": "PER"}]})"),
      MalformedRecord);
}

TEST_CASE("streams JSONL and reports the failing line") {
  std::istringstream good(
      "{\"doc_id\": \"a\", \"spans\": []}\n"
      "\n"
      "{\"doc_id\": \"b\", \"spans\": [{\"start\": 0, \"end\": 2, \"tag\": \"PER\"}]}\n");
  const auto records = ingest::read_standoff(good);
  REQUIRE(records.size() == 2);
  CHECK(records[1].doc_id == "b");

  std::istringstream bad(
      "{\"doc_id\": \"a\", \"spans\": []}\n"
      "{oops}\n");
  try {
    ingest::read_standoff(bad);
    FAIL("expected MalformedRecord");
  } catch (const MalformedRecord& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(ingest::read_standoff_file("/nonexistent.jsonl"), ConfigError);
}

TEST_CASE("ingest validates against the document") {
  const Document doc("n1", "M. Jean habite Bermont", Date{2020, 1, 1});
  ingest::RawRecord record;
  record.doc_id = "n1";
  record.spans = {
      TaggedSpan{3, 7, Tag::PER, Source::EXTERNAL, ""},
      TaggedSpan{15, 22, Tag::LOC, Source::EXTERNAL, ""},
  };
  ingest::IngestStats stats;
  const AnnotationSet set =
      ingest::ingest(doc, record, ingest::default_allow_list(), &stats);
  REQUIRE(set.size() == 2);
  CHECK(set.spans()[0].surface == "Jean");
  CHECK(set.spans()[1].surface == "Bermont");
  CHECK(set.spans()[0].source == Source::EXTERNAL);
  CHECK(stats.total == 2);
  CHECK(stats.kept == 2);
  CHECK(stats.dropped_tag == 0);
  CHECK(stats.dropped_overlap == 0);
}

TEST_CASE("ingest drops tags outside the allow-list") {
  // External annotators contribute contextual entities only; structured
  // tags stay the rule engine's business.
  const Document doc("n1", "12/03/2019 Jean", Date{2020, 1, 1});
  ingest::RawRecord record;
  record.doc_id = "n1";
  record.spans = {
      TaggedSpan{0, 10, Tag::DATE, Source::EXTERNAL, ""},
      TaggedSpan{11, 15, Tag::PER, Source::EXTERNAL, ""},
  };
  ingest::IngestStats stats;
  const AnnotationSet set =
      ingest::ingest(doc, record, ingest::default_allow_list(), &stats);
  REQUIRE(set.size() == 1);
  CHECK(set.spans()[0].tag == Tag::PER);
  CHECK(stats.dropped_tag == 1);

  CHECK(ingest::default_allow_list() ==
        std::set<Tag>{Tag::PER, Tag::LOC, Tag::ORG, Tag::MISC});
}

TEST_CASE("ingest drops O spans and resolves overlaps") {
  const Document doc("n1", "abcdefghij", Date{2020, 1, 1});
  ingest::RawRecord record;
  record.doc_id = "n1";
  record.spans = {
      TaggedSpan{0, 4, Tag::O, Source::EXTERNAL, ""},
      TaggedSpan{2, 8, Tag::PER, Source::EXTERNAL, ""},
      TaggedSpan{6, 9, Tag::LOC, Source::EXTERNAL, ""},
  };
  ingest::IngestStats stats;
  const AnnotationSet set =
      ingest::ingest(doc, record, ingest::default_allow_list(), &stats);
  REQUIRE(set.size() == 1);
  CHECK(set.spans()[0].tag == Tag::PER);  // longer span wins
  CHECK(stats.total == 3);
  CHECK(stats.kept == 1);
  CHECK(stats.dropped_tag == 1);      // the O span
  CHECK(stats.dropped_overlap == 1);  // the shorter LOC
}

TEST_CASE("ingest refuses records for another document") {
  const Document doc("n1", "abc", Date{2020, 1, 1});
  ingest::RawRecord record;
  record.doc_id = "n2";
  CHECK_THROWS_AS(ingest::ingest(doc, record), UnknownDocument);
}

TEST_CASE("ingest propagates offset and surface violations") {
  const Document doc("n1", "abc", Date{2020, 1, 1});
  ingest::RawRecord record;
  record.doc_id = "n1";
  record.spans = {TaggedSpan{1, 9, Tag::PER, Source::EXTERNAL, ""}};
  CHECK_THROWS_AS(ingest::ingest(doc, record), OffsetOutOfRange);
  record.spans = {TaggedSpan{0, 2, Tag::PER, Source::EXTERNAL, "zz"}};
  CHECK_THROWS_AS(ingest::ingest(doc, record), SurfaceMismatch);
}

TEST_CASE("standoff serialization round-trips") {
  const Document doc("n1", "M. Jean habite Bermont", Date{2020, 1, 1});
  ingest::RawRecord record;
  record.doc_id = "n1";
  record.spans = {TaggedSpan{3, 7, Tag::PER, Source::EXTERNAL, ""}};
  const AnnotationSet set = ingest::ingest(doc, record);
  const std::string json = ingest::to_standoff_json(set);
  const ingest::RawRecord back = ingest::parse_record(json);
  CHECK(back.doc_id == "n1");
  REQUIRE(back.spans.size() == 1);
  CHECK(back.spans[0].start == 3);
  CHECK(back.spans[0].end == 7);
  CHECK(back.spans[0].tag == Tag::PER);
  CHECK(back.spans[0].surface == "Jean");
}
