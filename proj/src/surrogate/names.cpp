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

#include "deid/surrogate/names.hpp"

#include <fstream>

#include "deid/errors.hpp"
#include "deid/utf8.hpp"

namespace deid::surrogate {

namespace {

std::vector<std::string> load_pool(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open name pool: " + path);
  std::vector<std::string> names;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    names.push_back(line);
  }
  if (names.empty()) throw ConfigError("name pool is empty: " + path);
  return names;
}

enum class Gender { UNKNOWN, MALE, FEMALE };

// Leading honorific, if any, of a folded token.
bool honorific_gender(const std::string& folded, Gender& gender) {
  if (folded == "m" || folded == "mr" || folded == "monsieur") {
    gender = Gender::MALE;
    return true;
  }
  if (folded == "mme" || folded == "mlle" || folded == "madame" ||
      folded == "mademoiselle") {
    gender = Gender::FEMALE;
    return true;
  }
  if (folded == "dr" || folded == "pr" || folded == "docteur" ||
      folded == "professeur") {
    return true;  // gender stays as-is
  }
  return false;
}

// Splits on whitespace, keeping original token text.
std::vector<std::string> tokenize(const std::string& surface) {
  std::vector<std::string> tokens;
  std::string token;
  for (char c : surface) {
    if (c == ' ' || c == '\t' || c == '\n') {
      if (!token.empty()) tokens.push_back(std::move(token));
      token.clear();
    } else {
      token.push_back(c);
    }
  }
  if (!token.empty()) tokens.push_back(std::move(token));
  return tokens;
}

const std::string& draw(const std::vector<std::string>& pool, ldp::Rng& rng) {
  return pool[rng.uniform_index(pool.size())];
}

}  // namespace

NamePools NamePools::load(const std::string& dir) {
  NamePools pools;
  pools.male = load_pool(dir + "/male.txt");
  pools.female = load_pool(dir + "/female.txt");
  pools.unisex = load_pool(dir + "/unisex.txt");
  pools.family = load_pool(dir + "/family.txt");
  return pools;
}

std::string NameLookupTable::substitute(const std::string& surface,
                                        ldp::Rng& rng) {
  const std::vector<std::string> tokens = tokenize(surface);

  // Peel leading honorifics (kept verbatim in the output) and note any
  // gender they reveal.
  Gender gender = Gender::UNKNOWN;
  std::size_t first_name_token = 0;
  std::string prefix;
  while (first_name_token < tokens.size()) {
    std::string folded = utf8::fold_key(tokens[first_name_token]);
    while (!folded.empty() && folded.back() == '.') folded.pop_back();
    if (!honorific_gender(folded, gender)) break;
    if (!prefix.empty()) prefix.push_back(' ');
    prefix += tokens[first_name_token];
    ++first_name_token;
  }
  if (first_name_token == tokens.size()) {
    // Honorific-only (or empty) span; nothing to substitute.
    return surface;
  }

  const auto attach = [&prefix](const std::string& name) {
    return prefix.empty() ? name : prefix + " " + name;
  };

  std::string full_key;
  for (std::size_t i = first_name_token; i < tokens.size(); ++i) {
    if (!full_key.empty()) full_key.push_back(' ');
    full_key += utf8::fold_key(tokens[i]);
  }
  if (auto it = full_names_.find(full_key); it != full_names_.end()) {
    return attach(it->second);
  }

  const std::string& surname_token = tokens.back();
  const std::string surname_key = utf8::fold_key(surname_token);
  const bool surname_only = tokens.size() - first_name_token == 1;

  std::string surname_sub;
  if (auto it = surnames_.find(surname_key); it != surnames_.end()) {
    surname_sub = it->second;
  } else {
    surname_sub = draw(pools_->family, rng);
    surnames_.emplace(surname_key, surname_sub);
  }

  std::string result;
  if (surname_only) {
    result = surname_sub;
  } else {
    const std::vector<std::string>& first_pool =
        gender == Gender::MALE     ? pools_->male
        : gender == Gender::FEMALE ? pools_->female
                                   : pools_->unisex;
    result = draw(first_pool, rng) + " " + surname_sub;
  }
  full_names_.emplace(full_key, result);
  return attach(result);
}

}  // namespace deid::surrogate
