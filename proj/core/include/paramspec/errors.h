// Copyright 2026 The paramspec Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PARAMSPEC_ERRORS_H_
#define PARAMSPEC_ERRORS_H_

#include <stdexcept>
#include <string>

namespace paramspec {

// Base class for all errors raised by the library. Command line tools map
// HarnessError to exit status 2 and everything else to 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input file does not conform to its schema. `where` is a field path such as
// "corpus[3].params[0].name" or "line 12".
class SchemaError : public Error {
 public:
  SchemaError(const std::string& where, const std::string& what)
      : Error(where.empty() ? what : where + ": " + what), where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

class DuplicateError : public Error {
 public:
  using Error::Error;
};

class MalformedTreeError : public Error {
 public:
  MalformedTreeError(const std::string& sentence_id, const std::string& what)
      : Error("sentence " + sentence_id + ": " + what),
        sentence_id_(sentence_id) {}
  const std::string& sentence_id() const { return sentence_id_; }

 private:
  std::string sentence_id_;
};

// Conditional probability asked for a pattern that occurs nowhere.
class UndefinedProbabilityError : public Error {
 public:
  using Error::Error;
};

// The constraints of `param` cannot be satisfied together.
class GenerationError : public Error {
 public:
  GenerationError(const std::string& param, const std::string& what)
      : Error("parameter " + param + ": " + what), param_(param) {}
  const std::string& param() const { return param_; }

 private:
  std::string param_;
};

// Worker missing, protocol desync, or any failure of the harness itself (as
// opposed to an outcome of the target).
class HarnessError : public Error {
 public:
  using Error::Error;
};

// A stage artifact required by a command does not exist.
class MissingArtifactError : public Error {
 public:
  using Error::Error;
};

}  // namespace paramspec

#endif  // PARAMSPEC_ERRORS_H_
