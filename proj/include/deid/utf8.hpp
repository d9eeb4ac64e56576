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

#ifndef DEID_UTF8_HPP
#define DEID_UTF8_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace deid::utf8 {

// Byte offset of every scalar value start, followed by text.size() as a
// sentinel. Throws MalformedUtf8 on invalid sequences (truncation, bad
// continuation bytes, surrogates, overlongs, > U+10FFFF).
std::vector<std::size_t> scalar_offsets(std::string_view text);

// Number of Unicode scalar values in a valid UTF-8 string.
std::size_t scalar_length(std::string_view text);

// Decodes one scalar starting at byte i; advances i past it.
char32_t decode_at(std::string_view text, std::size_t& i);

void append(std::string& out, char32_t cp);

// Lowercases and strips diacritics from the Latin repertoire used in French
// (é→e, ç→c, œ→oe, ...). Used for name and gazetteer keys.
std::string fold_key(std::string_view text);

}  // namespace deid::utf8

#endif  // DEID_UTF8_HPP
