// Copyright 2026 The unltool Authors
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

#ifndef UNL_DIAGNOSTIC_HPP
#define UNL_DIAGNOSTIC_HPP

#include <cassert>
#include <string>
#include <utility>
#include <variant>

namespace unl {

enum class Severity { Error, Warning };

// Stable diagnostic codes. Messages may change; codes never do.
namespace codes {
inline constexpr const char* kEmptyInput = "E000";          // no relations in input
inline constexpr const char* kUnbalancedParen = "E001";     // '(' / ')' mismatch
inline constexpr const char* kMalformedRelation = "E002";   // arg count, missing '(' or ','
inline constexpr const char* kInvalidLabel = "E003";        // relation label not [a-z]+
inline constexpr const char* kScopeRefSource = "E004";      // first argument is a ':NN'
inline constexpr const char* kStrayText = "E005";           // text outside any relation
inline constexpr const char* kMalformedTerm = "E006";       // bad universal-word syntax
inline constexpr const char* kMalformedRestriction = "E007";// bad 'tag>term' item
inline constexpr const char* kXmlMalformed = "E008";        // input is not well-formed XML
inline constexpr const char* kXmlSchema = "E009";           // element/attribute outside schema
inline constexpr const char* kXmlReference = "E010";        // dangling or duplicate node id
inline constexpr const char* kEmptyScope = "E011";          // edge to a scope with no members
inline constexpr const char* kNoEntry = "W001";             // scope has no @entry node
inline constexpr const char* kMultipleEntries = "W002";     // scope has several @entry nodes
inline constexpr const char* kUndeclaredScope = "W003";     // ':NN' never a relation suffix
inline constexpr const char* kAttributeMismatch = "W004";   // occurrences disagree on attrs
inline constexpr const char* kDuplicateAttribute = "W005";  // same attr twice on one term
}  // namespace codes

struct Diagnostic {
  Severity severity = Severity::Error;
  std::string code;
  std::string message;
  int line = 0;  // 1-based; 0 when no source position applies

  static Diagnostic error(std::string code, std::string message, int line = 0) {
    return {Severity::Error, std::move(code), std::move(message), line};
  }
  static Diagnostic warning(std::string code, std::string message, int line = 0) {
    return {Severity::Warning, std::move(code), std::move(message), line};
  }

  Diagnostic at(int new_line) const {
    Diagnostic d = *this;
    d.line = new_line;
    return d;
  }

  bool operator==(const Diagnostic&) const = default;
};

// "error E001 (line 3): unbalanced '('"
std::string to_string(const Diagnostic& d);

// Value-or-diagnostic return type used by every fallible operation.
template <typename T>
class Result {
 public:
  Result(T value) : v_(std::move(value)) {}             // NOLINT(google-explicit-constructor)
  Result(Diagnostic error) : v_(std::move(error)) {}    // NOLINT(google-explicit-constructor)

  bool ok() const { return std::holds_alternative<T>(v_); }
  explicit operator bool() const { return ok(); }

  const T& value() const& {
    assert(ok());
    return std::get<T>(v_);
  }
  T& value() & {
    assert(ok());
    return std::get<T>(v_);
  }
  T&& value() && {
    assert(ok());
    return std::get<T>(std::move(v_));
  }
  const Diagnostic& error() const {
    assert(!ok());
    return std::get<Diagnostic>(v_);
  }

 private:
  std::variant<T, Diagnostic> v_;
};

}  // namespace unl

#endif  // UNL_DIAGNOSTIC_HPP
