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

#include <map>
#include <string>
#include <vector>

#include "doctest.h"
#include "testutil.hpp"

#include "deid/detect/detector.hpp"
#include "deid/detect/pattern_set.hpp"
#include "deid/document.hpp"
#include "deid/errors.hpp"

using namespace deid;

namespace {

// tag → surface pairs in text order.
std::vector<std::pair<Tag, std::string>> detected(const std::string& text) {
  const Document doc("d", text, Date{2020, 1, 10});
  // Keep the set alive: spans() returns a reference into it, and iterating
  // a temporary's member is dangling before C++23.
  const AnnotationSet set = detect::detect_structured(doc);
  std::vector<std::pair<Tag, std::string>> out;
  for (const TaggedSpan& span : set.spans()) {
    out.emplace_back(span.tag, span.surface);
  }
  return out;
}

}  // namespace

TEST_CASE("builtin rules match the shipped pattern file byte for byte") {
  CHECK(std::string(detect::builtin_pattern_text()) ==
        testutil::read_file(testutil::data_file("patterns.tsv")));
  CHECK(detect::PatternSet::builtin().size() ==
        detect::PatternSet::load(testutil::data_file("patterns.tsv")).size());
}

TEST_CASE("pattern parsing rejects bad rules with line numbers") {
  CHECK_THROWS_AS(detect::PatternSet::parse("PERSON\t\\d+\n"), ConfigError);
  CHECK_THROWS_AS(detect::PatternSet::parse("O\t\\d+\n"), ConfigError);
  CHECK_THROWS_AS(detect::PatternSet::parse("DATE \\d+\n"), ConfigError);
  CHECK_THROWS_AS(detect::PatternSet::parse("DATE\t[\n"), ConfigError);
  CHECK_THROWS_AS(detect::PatternSet::load("/nonexistent/rules.tsv"),
                  ConfigError);
  try {
    detect::PatternSet::parse("DATE\t\\d+\nPERSON\t\\d+\n");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  // Comments and blank lines are skipped, CRLF tolerated.
  const detect::PatternSet ok =
      detect::PatternSet::parse("# c\n\nDATE\t\\d{4}\r\n");
  CHECK(ok.size() == 1);
}

TEST_CASE("detects the canonical French date shapes") {
  CHECK(detected("vu le 12/03/2019 et le 3.1.2019 et le 2019-03-12") ==
        std::vector<std::pair<Tag, std::string>>{{Tag::DATE, "12/03/2019"},
                                                 {Tag::DATE, "3.1.2019"},
                                                 {Tag::DATE, "2019-03-12"}});
  CHECK(detected("le 1er janvier 2020 puis 15 mars 2019") ==
        std::vector<std::pair<Tag, std::string>>{
            {Tag::DATE, "1er janvier 2020"}, {Tag::DATE, "15 mars 2019"}});
  CHECK(detected("depuis février 2018, revu 03/2019") ==
        std::vector<std::pair<Tag, std::string>>{{Tag::DATE, "février 2018"},
                                                 {Tag::DATE, "03/2019"}});
  CHECK(detected("opéré en DÉCEMBRE 2017")[0].second == "DÉCEMBRE 2017");
  CHECK(detected("hospitalisé le 5 août 2019")[0].second == "5 août 2019");
}

TEST_CASE("detects relative dates but not frequencies") {
  CHECK(detected("revoir dans 3 jours") ==
        std::vector<std::pair<Tag, std::string>>{{Tag::DATE, "dans 3 jours"}});
  CHECK(detected("3 x par jour").empty());
  CHECK(detected("sous traitement depuis 2 semaines")[0] ==
        std::pair<Tag, std::string>{Tag::DATE, "depuis 2 semaines"});
  CHECK(detected("consulté avant-hier, revient après-demain") ==
        std::vector<std::pair<Tag, std::string>>{{Tag::DATE, "avant-hier"},
                                                 {Tag::DATE, "après-demain"}});
  CHECK(detected("vu aujourd'hui")[0].second == "aujourd'hui");
  // "le lendemain" must not fire the "demain" rule mid-word.
  CHECK(detected("le lendemain matin").empty());
}

TEST_CASE("a relative-date phrase absorbs its inner age-like tail") {
  // Longest span wins: "il y a 15 ans" is one DATE, not DATE + AGE.
  CHECK(detected("opéré il y a 15 ans") ==
        std::vector<std::pair<Tag, std::string>>{{Tag::DATE, "il y a 15 ans"}});
}

TEST_CASE("detects ages") {
  CHECK(detected("patiente de 75 ans") ==
        std::vector<std::pair<Tag, std::string>>{{Tag::AGE, "75 ans"}});
  CHECK(detected("enfant de 1 an")[0] ==
        std::pair<Tag, std::string>{Tag::AGE, "1 an"});
  CHECK(detected("prendre 2 ans de recul")[0].first == Tag::AGE);
}

TEST_CASE("detects French phone numbers") {
  CHECK(detected("appelez le 03 84 11 22 33") ==
        std::vector<std::pair<Tag, std::string>>{
            {Tag::PHONE, "03 84 11 22 33"}});
  CHECK(detected("portable : 0612345678")[0] ==
        std::pair<Tag, std::string>{Tag::PHONE, "0612345678"});
  CHECK(detected("joindre au +33 6 12 34 56 78")[0] ==
        std::pair<Tag, std::string>{Tag::PHONE, "+33 6 12 34 56 78"});
  CHECK(detected("ou 0033612345678")[0] ==
        std::pair<Tag, std::string>{Tag::PHONE, "0033612345678"});
  CHECK(detected("tel 06.12.34.56.78")[0].second == "06.12.34.56.78");
  // Not a phone: leading zero missing.
  CHECK(detected("numéro 1234567890")[0].first == Tag::ID);
}

TEST_CASE("detects emails and urls") {
  CHECK(detected("écrire à jean.dupont@chu-besancon.fr") ==
        std::vector<std::pair<Tag, std::string>>{
            {Tag::EMAIL, "jean.dupont@chu-besancon.fr"}});
  CHECK(detected("voir https://example.org/dossier?id=3")[0] ==
        std::pair<Tag, std::string>{Tag::URL, "https://example.org/dossier?id=3"});
  CHECK(detected("site www.chu-besancon.fr")[0] ==
        std::pair<Tag, std::string>{Tag::URL, "www.chu-besancon.fr"});
}

TEST_CASE("detects identifiers and zip codes") {
  CHECK(detected("NIR 1 85 05 78 006 048 22") ==
        std::vector<std::pair<Tag, std::string>>{
            {Tag::ID, "1 85 05 78 006 048 22"}});
  CHECK(detected("dossier ABC123456")[0] ==
        std::pair<Tag, std::string>{Tag::ID, "ABC123456"});
  CHECK(detected("code postal 90400")[0] ==
        std::pair<Tag, std::string>{Tag::LOC, "90400"});
  // Five digits inside a longer run belong to the longer ID.
  CHECK(detected("numéro 1234567")[0] ==
        std::pair<Tag, std::string>{Tag::ID, "1234567"});
}

TEST_CASE("same-span ties go to the earlier rule") {
  // A 10-digit 0-leading run matches both PHONE and ID over the same span;
  // PHONE is listed first.
  const auto spans = detected("rappeler 0612345678 vite");
  REQUIRE(spans.size() == 1);
  CHECK(spans[0].first == Tag::PHONE);
}

TEST_CASE("overlapping matches keep the longest span") {
  // dd/mm/yyyy contains a valid mm/yyyy start; only the full date survives.
  const auto spans = detected("le 12/03/2019");
  REQUIRE(spans.size() == 1);
  CHECK(spans[0].second == "12/03/2019");
}

TEST_CASE("detection offsets are scalar offsets") {
  const Document doc("d", "opéré à Besançon le 12/03/2019", Date{2020, 1, 1});
  const AnnotationSet set = detect::detect_structured(doc);
  REQUIRE(set.size() == 1);
  CHECK(set.spans()[0].start == 20);
  CHECK(set.spans()[0].end == 30);
  CHECK(doc.slice(set.spans()[0].start, set.spans()[0].end) == "12/03/2019");
}

TEST_CASE("detection is deterministic") {
  const std::string text =
      "M. X, 75 ans, vu le 12/03/2019, tel 06 12 34 56 78, "
      "NIR 1 85 05 78 006 048 22, CP 25000.";
  const Document doc("d", text, Date{2020, 1, 1});
  const AnnotationSet a = detect::detect_structured(doc);
  const AnnotationSet b = detect::detect_structured(doc);
  CHECK(a == b);
  CHECK(a.size() == 5);
  for (const TaggedSpan& span : a.spans()) CHECK(span.tag != Tag::O);
}

TEST_CASE("custom pattern sets replace the builtin rules") {
  const detect::PatternSet custom =
      detect::PatternSet::parse("ID\tdossier n°\\d+\n");
  const Document doc("d", "dossier n°42 du 12/03/2019", Date{2020, 1, 1});
  const AnnotationSet set = detect::detect_structured(doc, custom);
  REQUIRE(set.size() == 1);
  CHECK(set.spans()[0].tag == Tag::ID);
  CHECK(set.spans()[0].surface == "dossier n°42");
}
