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

// Domain types for UNL expressions: restrictions, universal words, relation
// instances and whole documents. Pure data, no I/O. All types are immutable
// after construction and are built through validating factories.

#ifndef UNL_MODEL_HPP
#define UNL_MODEL_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "unl/diagnostic.hpp"

namespace unl {

// One 'tag>term[>term...]' sense qualifier, e.g. icl>move>do.
class Restriction {
 public:
  // tag must be non-empty ASCII lowercase; chain elements must be non-empty
  // and free of '>', ',', '(' and ')'.
  static Result<Restriction> make(std::string tag, std::vector<std::string> chain);

  const std::string& tag() const { return tag_; }
  const std::vector<std::string>& chain() const { return chain_; }

  // "icl>move>do" — no whitespace.
  std::string canonical() const;

  bool operator==(const Restriction&) const = default;

 private:
  Restriction(std::string tag, std::vector<std::string> chain)
      : tag_(std::move(tag)), chain_(std::move(chain)) {}

  std::string tag_;
  std::vector<std::string> chain_;
};

// Comma-joined canonical rendering of a restriction list, used as part of
// node identity: "icl>move>do,plt>place".
std::string restriction_signature(const std::vector<Restriction>& restrictions);

// A concept: lemma + restrictions + attribute tags + optional ':NN' id.
class UniversalWord {
 public:
  // lemma must be non-empty and contain none of '(' ')' ',' '@' ':';
  // attributes must be distinct; instance_id, when given, is 1-3 digits.
  static Result<UniversalWord> make(std::string lemma,
                                    std::vector<Restriction> restrictions = {},
                                    std::vector<std::string> attributes = {},
                                    std::optional<std::string> instance_id = {});

  const std::string& lemma() const { return lemma_; }
  const std::vector<Restriction>& restrictions() const { return restrictions_; }
  // First-occurrence order, no duplicates.
  const std::vector<std::string>& attributes() const { return attributes_; }
  const std::optional<std::string>& instance_id() const { return instance_id_; }

  bool has_attribute(std::string_view tag) const;

  // "affect(icl>do).@present.@entry:01" — restrictions tight, attributes
  // dot-prefixed in order, instance id last.
  std::string canonical() const;

  // Identity is lemma + restrictions + instance_id. Attributes are excluded
  // so occurrences of one concept with different annotations compare equal;
  // compare attributes() directly when the annotation matters.
  bool operator==(const UniversalWord& other) const {
    return lemma_ == other.lemma_ && restrictions_ == other.restrictions_ &&
           instance_id_ == other.instance_id_;
  }

 private:
  UniversalWord(std::string lemma, std::vector<Restriction> restrictions,
                std::vector<std::string> attributes, std::optional<std::string> instance_id)
      : lemma_(std::move(lemma)),
        restrictions_(std::move(restrictions)),
        attributes_(std::move(attributes)),
        instance_id_(std::move(instance_id)) {}

  std::string lemma_;
  std::vector<Restriction> restrictions_;
  std::vector<std::string> attributes_;
  std::optional<std::string> instance_id_;
};

// An argument of a relation: a universal word or a bare scope reference ':NN'.
class NodeTerm {
 public:
  static NodeTerm word(UniversalWord w) { return NodeTerm(std::move(w)); }
  // scope_id must be 1-3 ASCII digits.
  static Result<NodeTerm> scope_ref(std::string scope_id);

  bool is_word() const { return std::holds_alternative<UniversalWord>(v_); }
  bool is_scope_ref() const { return !is_word(); }
  const UniversalWord& as_word() const { return std::get<UniversalWord>(v_); }
  const std::string& scope_id() const { return std::get<std::string>(v_); }

  std::string canonical() const;

  bool operator==(const NodeTerm&) const = default;

 private:
  explicit NodeTerm(UniversalWord w) : v_(std::move(w)) {}
  explicit NodeTerm(std::string scope_id) : v_(std::move(scope_id)) {}

  std::variant<UniversalWord, std::string> v_;
};

// First and last physical input line of a relation entry (1-based).
struct LineSpan {
  int first = 0;
  int last = 0;
};

// One 'label[:NN](source, target)' line.
class RelationInstance {
 public:
  // label must be non-empty ASCII lowercase; scope_suffix, when given, is
  // 1-3 digits; source must not be a scope reference.
  static Result<RelationInstance> make(std::string label,
                                       std::optional<std::string> scope_suffix,
                                       NodeTerm source, NodeTerm target,
                                       LineSpan span = {});

  const std::string& label() const { return label_; }
  const std::optional<std::string>& scope_suffix() const { return scope_suffix_; }
  const NodeTerm& source() const { return source_; }
  const NodeTerm& target() const { return target_; }
  const LineSpan& line_span() const { return span_; }

  std::string canonical() const;

  // Line spans are provenance, not content.
  bool operator==(const RelationInstance& other) const {
    return label_ == other.label_ && scope_suffix_ == other.scope_suffix_ &&
           source_ == other.source_ && target_ == other.target_;
  }

 private:
  RelationInstance(std::string label, std::optional<std::string> scope_suffix,
                   NodeTerm source, NodeTerm target, LineSpan span)
      : label_(std::move(label)),
        scope_suffix_(std::move(scope_suffix)),
        source_(std::move(source)),
        target_(std::move(target)),
        span_(span) {}

  std::string label_;
  std::optional<std::string> scope_suffix_;
  NodeTerm source_;
  NodeTerm target_;
  LineSpan span_;
};

// A parsed UNL block: relations in input order plus parse-time warnings.
struct UnlDocument {
  std::vector<RelationInstance> relations;
  bool had_delimiters = false;
  std::vector<Diagnostic> diagnostics;

  // Content equality: relations and delimiter flag. Diagnostics and line
  // spans are provenance and do not participate.
  bool operator==(const UnlDocument& other) const {
    return relations == other.relations && had_delimiters == other.had_delimiters;
  }
};

// One relation per line; '{unl}'/'{/unl}' fences when had_delimiters.
// parse_document(canonical_serialize(d)) == d for every parsed document.
std::string canonical_serialize(const UnlDocument& doc);

// True when the strings are 1-3 ASCII digits.
bool is_scope_digits(std::string_view s);

// True for a non-empty ASCII lowercase identifier.
bool is_lowercase_ident(std::string_view s);

}  // namespace unl

#endif  // UNL_MODEL_HPP
