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

#include "unl/model.hpp"

#include <algorithm>
#include <sstream>

namespace unl {

std::string to_string(const Diagnostic& d) {
  std::ostringstream out;
  out << (d.severity == Severity::Error ? "error" : "warning") << ' ' << d.code;
  if (d.line > 0) out << " (line " << d.line << ')';
  out << ": " << d.message;
  return out.str();
}

bool is_scope_digits(std::string_view s) {
  if (s.empty() || s.size() > 3) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return c >= '0' && c <= '9'; });
}

bool is_lowercase_ident(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return c >= 'a' && c <= 'z'; });
}

namespace {

bool chain_element_ok(std::string_view s) {
  if (s.empty()) return false;
  return s.find_first_of(">,()") == std::string_view::npos;
}

bool lemma_ok(std::string_view s) {
  if (s.empty()) return false;
  return s.find_first_of("(),@:") == std::string_view::npos;
}

}  // namespace

Result<Restriction> Restriction::make(std::string tag, std::vector<std::string> chain) {
  if (!is_lowercase_ident(tag)) {
    return Diagnostic::error(codes::kMalformedRestriction,
                             "restriction tag must be lowercase letters: '" + tag + "'");
  }
  if (chain.empty()) {
    return Diagnostic::error(codes::kMalformedRestriction,
                             "restriction '" + tag + "' has no terms");
  }
  for (const auto& element : chain) {
    if (!chain_element_ok(element)) {
      return Diagnostic::error(codes::kMalformedRestriction,
                               "bad restriction term '" + element + "' after '" + tag + "'");
    }
  }
  return Restriction(std::move(tag), std::move(chain));
}

std::string Restriction::canonical() const {
  std::string out = tag_;
  for (const auto& element : chain_) {
    out += '>';
    out += element;
  }
  return out;
}

std::string restriction_signature(const std::vector<Restriction>& restrictions) {
  std::string out;
  for (const auto& r : restrictions) {
    if (!out.empty()) out += ',';
    out += r.canonical();
  }
  return out;
}

Result<UniversalWord> UniversalWord::make(std::string lemma,
                                          std::vector<Restriction> restrictions,
                                          std::vector<std::string> attributes,
                                          std::optional<std::string> instance_id) {
  if (!lemma_ok(lemma)) {
    return Diagnostic::error(codes::kMalformedTerm,
                             lemma.empty() ? std::string("empty lemma")
                                           : "lemma contains a delimiter: '" + lemma + "'");
  }
  for (size_t i = 0; i < attributes.size(); ++i) {
    if (attributes[i].empty()) {
      return Diagnostic::error(codes::kMalformedTerm, "empty attribute tag");
    }
    for (size_t j = 0; j < i; ++j) {
      if (attributes[i] == attributes[j]) {
        return Diagnostic::error(codes::kMalformedTerm,
                                 "duplicate attribute '@" + attributes[i] + "'");
      }
    }
  }
  if (instance_id && !is_scope_digits(*instance_id)) {
    return Diagnostic::error(codes::kMalformedTerm,
                             "instance id must be 1-3 digits: ':" + *instance_id + "'");
  }
  return UniversalWord(std::move(lemma), std::move(restrictions), std::move(attributes),
                       std::move(instance_id));
}

bool UniversalWord::has_attribute(std::string_view tag) const {
  return std::find(attributes_.begin(), attributes_.end(), tag) != attributes_.end();
}

std::string UniversalWord::canonical() const {
  std::string out = lemma_;
  if (!restrictions_.empty()) {
    out += '(';
    out += restriction_signature(restrictions_);
    out += ')';
  }
  for (const auto& attr : attributes_) {
    out += ".@";
    out += attr;
  }
  if (instance_id_) {
    out += ':';
    out += *instance_id_;
  }
  return out;
}

Result<NodeTerm> NodeTerm::scope_ref(std::string scope_id) {
  if (!is_scope_digits(scope_id)) {
    return Diagnostic::error(codes::kMalformedTerm,
                             "scope reference must be 1-3 digits: ':" + scope_id + "'");
  }
  return NodeTerm(std::move(scope_id));
}

std::string NodeTerm::canonical() const {
  if (is_scope_ref()) return ':' + scope_id();
  return as_word().canonical();
}

Result<RelationInstance> RelationInstance::make(std::string label,
                                                std::optional<std::string> scope_suffix,
                                                NodeTerm source, NodeTerm target,
                                                LineSpan span) {
  if (!is_lowercase_ident(label)) {
    return Diagnostic::error(codes::kInvalidLabel,
                             "relation label must be lowercase letters: '" + label + "'");
  }
  if (scope_suffix && !is_scope_digits(*scope_suffix)) {
    return Diagnostic::error(codes::kMalformedRelation,
                             "relation scope suffix must be 1-3 digits: ':" + *scope_suffix + "'");
  }
  if (source.is_scope_ref()) {
    return Diagnostic::error(codes::kScopeRefSource,
                             "first argument of '" + label + "' is a scope reference ':" +
                                 source.scope_id() + "'; a relation source must be a word");
  }
  return RelationInstance(std::move(label), std::move(scope_suffix), std::move(source),
                          std::move(target), span);
}

std::string RelationInstance::canonical() const {
  std::string out = label_;
  if (scope_suffix_) {
    out += ':';
    out += *scope_suffix_;
  }
  out += '(';
  out += source_.canonical();
  out += ", ";
  out += target_.canonical();
  out += ')';
  return out;
}

std::string canonical_serialize(const UnlDocument& doc) {
  std::string out;
  if (doc.had_delimiters) out += "{unl}\n";
  for (const auto& relation : doc.relations) {
    out += relation.canonical();
    out += '\n';
  }
  if (doc.had_delimiters) out += "{/unl}\n";
  return out;
}

}  // namespace unl
