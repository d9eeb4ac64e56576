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

#ifndef DEID_DETECT_DETECTOR_HPP
#define DEID_DETECT_DETECTOR_HPP

#include "deid/annotation.hpp"
#include "deid/detect/pattern_set.hpp"
#include "deid/document.hpp"

namespace deid::detect {

// Runs every rule of `patterns` over the document text and returns the
// validated annotation set (source RULE). Offsets are Unicode scalar
// offsets; overlaps between rule matches are resolved by keeping the
// longest span (ties: earlier start, then earlier rule). Deterministic for
// a fixed document and pattern set.
AnnotationSet detect_structured(const Document& doc,
                                const PatternSet& patterns);

// Convenience overload using the built-in French pattern set.
AnnotationSet detect_structured(const Document& doc);

}  // namespace deid::detect

#endif  // DEID_DETECT_DETECTOR_HPP
