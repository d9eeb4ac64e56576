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

#include "deid/document.hpp"

#include <algorithm>

#include "deid/errors.hpp"
#include "deid/utf8.hpp"

namespace deid {

Document::Document(std::string id, std::string text, Date reference_date,
                   std::map<std::string, std::string> metadata)
    : id_(std::move(id)),
      text_(std::move(text)),
      reference_date_(reference_date),
      metadata_(std::move(metadata)),
      scalar_offsets_(utf8::scalar_offsets(text_)) {
  if (id_.empty()) throw ConfigError("document id must be non-empty");
  if (!reference_date_.is_valid()) {
    throw ConfigError("document " + id_ + ": invalid reference date");
  }
}

std::string_view Document::slice(std::size_t start, std::size_t end) const {
  if (start > end || end > length()) {
    throw OffsetOutOfRange("slice [" + std::to_string(start) + ", " +
                           std::to_string(end) + ") exceeds document " + id_ +
                           " of length " + std::to_string(length()));
  }
  const std::size_t b0 = scalar_offsets_[start];
  const std::size_t b1 = scalar_offsets_[end];
  return std::string_view(text_).substr(b0, b1 - b0);
}

std::size_t Document::byte_offset(std::size_t scalar_offset) const {
  if (scalar_offset >= scalar_offsets_.size()) {
    throw OffsetOutOfRange("scalar offset " + std::to_string(scalar_offset) +
                           " exceeds document " + id_);
  }
  return scalar_offsets_[scalar_offset];
}

std::size_t Document::scalar_offset_at_byte(std::size_t byte_offset) const {
  auto it = std::lower_bound(scalar_offsets_.begin(), scalar_offsets_.end(),
                             byte_offset);
  if (it == scalar_offsets_.end() || *it != byte_offset) {
    throw OffsetOutOfRange("byte offset " + std::to_string(byte_offset) +
                           " is not a scalar boundary in document " + id_);
  }
  return static_cast<std::size_t>(it - scalar_offsets_.begin());
}

}  // namespace deid
