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

#ifndef DEID_ERRORS_HPP
#define DEID_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace deid {

/// Base class for all engine errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MalformedUtf8 : public Error {
 public:
  using Error::Error;
};

class OffsetOutOfRange : public Error {
 public:
  using Error::Error;
};

class SurfaceMismatch : public Error {
 public:
  using Error::Error;
};

class NonPhiTag : public Error {
 public:
  using Error::Error;
};

class UnparseableTemporal : public Error {
 public:
  using Error::Error;
};

class UnknownDocument : public Error {
 public:
  using Error::Error;
};

class MalformedRecord : public Error {
 public:
  using Error::Error;
};

class BothOutside : public Error {
 public:
  using Error::Error;
};

class ValueOutOfDomain : public Error {
 public:
  using Error::Error;
};

class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

class EmptyChronology : public Error {
 public:
  using Error::Error;
};

class UnresolvedLocation : public Error {
 public:
  using Error::Error;
};

class DocumentMismatch : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace deid

#endif  // DEID_ERRORS_HPP
