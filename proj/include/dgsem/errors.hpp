// Copyright 2026 The dgsem Authors
//
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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace dgsem {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph value (edge endpoint missing, bad placeholder, ...).
class GraphError : public Error {
 public:
  using Error::Error;
};

/// A skeleton graph mentions *j without mentioning every *i, i < j.
class DegreeGapError : public Error {
 public:
  using Error::Error;
};

/// Two distinct skeleton nodes would become the same object-level node.
class CollisionError : public Error {
 public:
  using Error::Error;
};

/// Argument count does not match a symbol's or schema's arity.
class ArityMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::string message, std::size_t position, std::vector<std::string> expected)
      : Error(format(message, position, expected)),
        position_(position),
        expected_(std::move(expected)) {}

  std::size_t position() const noexcept { return position_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  static std::string format(const std::string& message, std::size_t position,
                            const std::vector<std::string>& expected) {
    std::string out = "parse error at offset " + std::to_string(position) + ": " + message;
    if (!expected.empty()) {
      out += " (expected one of:";
      for (const auto& e : expected) out += " " + e;
      out += ")";
    }
    return out;
  }

  std::size_t position_;
  std::vector<std::string> expected_;
};

/// An input file cannot be opened or read.
class IoError : public Error {
 public:
  using Error::Error;
};

class NotClosedError : public Error {
 public:
  using Error::Error;
};

class UnboundVariable : public Error {
 public:
  using Error::Error;
};

class UnknownSymbol : public Error {
 public:
  using Error::Error;
};

/// A finite function table has no entry for the argument tuple.
class TableMiss : public Error {
 public:
  using Error::Error;
};

/// An interpretation refers to a value outside the domain of discourse.
class DomainError : public Error {
 public:
  using Error::Error;
};

class BoundExceeded : public Error {
 public:
  using Error::Error;
};

class MissingVar : public Error {
 public:
  using Error::Error;
};

class DecodeError : public Error {
 public:
  using Error::Error;
};

/// An annotated graph violates the equivalence-equipped Dung model shape.
class ModelInvariantError : public Error {
 public:
  ModelInvariantError(std::string message, std::vector<std::string> violations)
      : Error(std::move(message)), violations_(std::move(violations)) {}

  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  std::vector<std::string> violations_;
};

}  // namespace dgsem
