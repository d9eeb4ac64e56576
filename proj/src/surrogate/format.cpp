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

#include "deid/surrogate/format.hpp"

#include <vector>

#include "deid/utf8.hpp"

namespace deid::surrogate {

namespace {

std::vector<char32_t> decode_all(const std::string& text) {
  std::vector<char32_t> scalars;
  scalars.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    scalars.push_back(utf8::decode_at(text, i));
  }
  return scalars;
}

bool is_digit(char32_t c) { return c >= U'0' && c <= U'9'; }
bool is_lower(char32_t c) { return c >= U'a' && c <= U'z'; }
bool is_upper(char32_t c) { return c >= U'A' && c <= U'Z'; }

char32_t lower_ascii(char32_t c) {
  return is_upper(c) ? c + (U'a' - U'A') : c;
}

bool starts_with(const std::vector<char32_t>& s, const char* prefix) {
  std::size_t i = 0;
  for (; prefix[i] != '\0'; ++i) {
    if (i >= s.size() ||
        lower_ascii(s[i]) != static_cast<char32_t>(prefix[i])) {
      return false;
    }
  }
  return true;
}

std::size_t find_last(const std::vector<char32_t>& s, char32_t c,
                      std::size_t begin, std::size_t end) {
  std::size_t found = end;
  for (std::size_t i = begin; i < end && i < s.size(); ++i) {
    if (s[i] == c) found = i;
  }
  return found;  // == end when absent
}

}  // namespace

std::string substitute_formatted(const TaggedSpan& span, ldp::Rng& rng) {
  std::vector<char32_t> scalars = decode_all(span.surface);
  const std::size_t n = scalars.size();
  std::vector<bool> keep(n, false);
  std::size_t nonzero_digit_at = n;  // position forced to 1-9, if any

  switch (span.tag) {
    case Tag::EMAIL: {
      const std::size_t at = find_last(scalars, U'@', 0, n);
      const std::size_t dot = find_last(scalars, U'.', at == n ? 0 : at, n);
      for (std::size_t i = dot; i < n; ++i) keep[i] = true;
      break;
    }
    case Tag::URL: {
      std::size_t scheme_end = 0;
      if (starts_with(scalars, "https://")) {
        scheme_end = 8;
      } else if (starts_with(scalars, "http://")) {
        scheme_end = 7;
      } else if (starts_with(scalars, "www.")) {
        scheme_end = 4;
      }
      for (std::size_t i = 0; i < scheme_end; ++i) keep[i] = true;
      std::size_t host_end = n;
      for (std::size_t i = scheme_end; i < n; ++i) {
        if (scalars[i] == U'/' || scalars[i] == U'?' || scalars[i] == U'#') {
          host_end = i;
          break;
        }
      }
      const std::size_t dot = find_last(scalars, U'.', scheme_end, host_end);
      for (std::size_t i = dot; i < host_end; ++i) {
        if (i < n) keep[i] = true;
      }
      break;
    }
    case Tag::PHONE: {
      std::size_t prefix = 0;
      if (starts_with(scalars, "0033")) {
        prefix = 4;
      } else if (starts_with(scalars, "+33")) {
        prefix = 3;
      } else if (n > 0 && scalars[0] == U'0') {
        prefix = 1;
      }
      for (std::size_t i = 0; i < prefix; ++i) keep[i] = true;
      for (std::size_t i = prefix; i < n; ++i) {
        if (is_digit(scalars[i])) {
          nonzero_digit_at = i;
          break;
        }
      }
      break;
    }
    case Tag::AGE:
      // Only the number identifies anyone; the unit word ("75 ans") stays.
      for (std::size_t i = 0; i < n; ++i) {
        if (!is_digit(scalars[i])) keep[i] = true;
      }
      break;
    default:
      break;
  }

  std::string out;
  out.reserve(span.surface.size());
  for (std::size_t i = 0; i < n; ++i) {
    char32_t c = scalars[i];
    if (!keep[i]) {
      if (is_digit(c)) {
        c = i == nonzero_digit_at
                ? U'1' + static_cast<char32_t>(rng.uniform_index(9))
                : U'0' + static_cast<char32_t>(rng.uniform_index(10));
      } else if (is_lower(c)) {
        c = U'a' + static_cast<char32_t>(rng.uniform_index(26));
      } else if (is_upper(c)) {
        c = U'A' + static_cast<char32_t>(rng.uniform_index(26));
      }
    }
    utf8::append(out, c);
  }
  return out;
}

}  // namespace deid::surrogate
