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

#ifndef DEID_DOCUMENT_HPP
#define DEID_DOCUMENT_HPP

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "deid/date.hpp"

namespace deid {

// One input document. Immutable after construction; all span offsets across
// the engine are counted in Unicode scalar values, never bytes, so offsets
// from different annotation sources align on accented French text.
class Document {
 public:
  // Throws ConfigError for an empty id or invalid reference date, and
  // MalformedUtf8 for byte sequences that do not decode.
  Document(std::string id, std::string text, Date reference_date,
           std::map<std::string, std::string> metadata = {});

  const std::string& id() const { return id_; }
  const std::string& text() const { return text_; }
  const Date& reference_date() const { return reference_date_; }
  const std::map<std::string, std::string>& metadata() const {
    return metadata_;
  }

  // Length in Unicode scalar values.
  std::size_t length() const { return scalar_offsets_.size() - 1; }

  // UTF-8 bytes covering scalar range [start, end). Throws OffsetOutOfRange.
  std::string_view slice(std::size_t start, std::size_t end) const;

  std::size_t byte_offset(std::size_t scalar_offset) const;

  // Scalar offset for a byte offset that must sit on a scalar boundary.
  std::size_t scalar_offset_at_byte(std::size_t byte_offset) const;

 private:
  std::string id_;
  std::string text_;
  Date reference_date_;
  std::map<std::string, std::string> metadata_;
  std::vector<std::size_t> scalar_offsets_;
};

}  // namespace deid

#endif  // DEID_DOCUMENT_HPP
