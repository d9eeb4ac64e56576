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

#ifndef DEID_SURROGATE_FORMAT_HPP
#define DEID_SURROGATE_FORMAT_HPP

#include <string>

#include "deid/annotation.hpp"
#include "deid/ldp/rng.hpp"

namespace deid::surrogate {

// Format-preserving random substitution for PHONE, EMAIL, URL, and ID
// spans: each digit becomes a random digit, each ASCII letter a random
// letter of the same case, everything else stays. Category tweaks keep the
// output plausible: EMAIL keeps its top-level domain, URL keeps the scheme
// and the host's top-level domain, PHONE keeps its dialing prefix ("0",
// "+33", "0033") with a nonzero digit after it. The character-class mask
// (digit / letter / other, per Unicode scalar) of the output always equals
// the input's.
std::string substitute_formatted(const TaggedSpan& span, ldp::Rng& rng);

}  // namespace deid::surrogate

#endif  // DEID_SURROGATE_FORMAT_HPP
