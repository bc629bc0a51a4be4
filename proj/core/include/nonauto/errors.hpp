// Copyright 2026 The nonauto Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace nonauto {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class OutOfDomain : public Error {
 public:
  explicit OutOfDomain(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
 public:
  // `where` is a human-readable position (offset or JSON pointer).
  ParseError(const std::string& where, const std::string& what)
      : Error("parse error at " + where + ": " + what) {}
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what)
      : Error("validation: " + what) {}
};

class SpaceMismatch : public Error {
 public:
  explicit SpaceMismatch(const std::string& what) : Error(what) {}
};

class UnsupportedSpace : public Error {
 public:
  explicit UnsupportedSpace(const std::string& what) : Error(what) {}
};

class UnsupportedComposition : public Error {
 public:
  explicit UnsupportedComposition(const std::string& what) : Error(what) {}
};

// Exact angular comparisons against the formal irrational alpha are not
// decidable from the representation alone; raised instead of guessing.
class AlphaUndecidable : public Error {
 public:
  explicit AlphaUndecidable(const std::string& what) : Error(what) {}
};

class NotACover : public Error {
 public:
  explicit NotACover(const std::string& what) : Error(what) {}
};

// Exact-composition witness re-verification failed; indicates a bug in the
// caller or in the composition machinery, never a property of the system.
class TransferFailed : public Error {
 public:
  explicit TransferFailed(const std::string& what) : Error(what) {}
};

class ResourceBudgetExceeded : public Error {
 public:
  explicit ResourceBudgetExceeded(const std::string& what) : Error(what) {}
};

}  // namespace nonauto
