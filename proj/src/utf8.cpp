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

#include "deid/utf8.hpp"

#include <cctype>

#include "deid/errors.hpp"

namespace deid::utf8 {

namespace {

[[noreturn]] void fail(std::size_t at) {
  throw MalformedUtf8("invalid UTF-8 sequence at byte " + std::to_string(at));
}

bool is_continuation(unsigned char b) { return (b & 0xC0) == 0x80; }

}  // namespace

char32_t decode_at(std::string_view text, std::size_t& i) {
  const auto* bytes = reinterpret_cast<const unsigned char*>(text.data());
  const std::size_t n = text.size();
  const std::size_t at = i;
  unsigned char b0 = bytes[i];
  if (b0 < 0x80) {
    ++i;
    return b0;
  }
  int len;
  char32_t cp;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    fail(at);
  }
  if (i + len > n) fail(at);
  for (int k = 1; k < len; ++k) {
    if (!is_continuation(bytes[i + k])) fail(at);
    cp = (cp << 6) | (bytes[i + k] & 0x3F);
  }
  // Overlongs, surrogates, and out-of-range values are all rejected.
  static constexpr char32_t kMin[5] = {0, 0, 0x80, 0x800, 0x10000};
  if (cp < kMin[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
    fail(at);
  }
  i += static_cast<std::size_t>(len);
  return cp;
}

std::vector<std::size_t> scalar_offsets(std::string_view text) {
  std::vector<std::size_t> offsets;
  offsets.reserve(text.size() + 1);
  std::size_t i = 0;
  while (i < text.size()) {
    offsets.push_back(i);
    decode_at(text, i);
  }
  offsets.push_back(text.size());
  return offsets;
}

std::size_t scalar_length(std::string_view text) {
  return scalar_offsets(text).size() - 1;
}

void append(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

namespace {

// Diacritic folding for the characters seen in French text. Anything not
// listed passes through lowercased (ASCII) or unchanged.
void fold_scalar(std::string& out, char32_t cp) {
  switch (cp) {
    case U'à': case U'â': case U'ä': case U'À': case U'Â': case U'Ä':
      out.push_back('a');
      return;
    case U'é': case U'è': case U'ê': case U'ë':
    case U'É': case U'È': case U'Ê': case U'Ë':
      out.push_back('e');
      return;
    case U'î': case U'ï': case U'Î': case U'Ï':
      out.push_back('i');
      return;
    case U'ô': case U'ö': case U'Ô': case U'Ö':
      out.push_back('o');
      return;
    case U'ù': case U'û': case U'ü': case U'Ù': case U'Û': case U'Ü':
      out.push_back('u');
      return;
    case U'ç': case U'Ç':
      out.push_back('c');
      return;
    case U'ÿ': case U'Ÿ':
      out.push_back('y');
      return;
    case U'ñ': case U'Ñ':
      out.push_back('n');
      return;
    case U'œ': case U'Œ':
      out += "oe";
      return;
    case U'æ': case U'Æ':
      out += "ae";
      return;
    case U'’':
      out.push_back('\'');
      return;
    default:
      if (cp < 0x80) {
        out.push_back(static_cast<char>(
            std::tolower(static_cast<unsigned char>(cp))));
      } else {
        append(out, cp);
      }
  }
}

}  // namespace

std::string fold_key(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    fold_scalar(out, decode_at(text, i));
  }
  // Collapse runs of whitespace and hyphens so "Saint-Dizier" and
  // "saint dizier" share a key.
  std::string key;
  key.reserve(out.size());
  bool pending_sep = false;
  for (char c : out) {
    if (c == ' ' || c == '\t' || c == '-' || c == '\'') {
      pending_sep = !key.empty();
    } else {
      if (pending_sep) key.push_back(' ');
      pending_sep = false;
      key.push_back(c);
    }
  }
  return key;
}

}  // namespace deid::utf8
