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

// Resolves a parsed document into a semantic graph: node occurrences merge
// by identity, nodes partition into scopes, entries are located.

#ifndef UNL_GRAPH_HPP
#define UNL_GRAPH_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "unl/model.hpp"

namespace unl {

// The root scope. Giving the root a citable id keeps XML and DOT uniform.
inline constexpr const char* kRootScope = "00";

// Node identity: scope + lemma + canonical restriction string + instance id.
// Attributes are deliberately absent, so occurrences of one concept with
// different annotations merge into a single node.
struct NodeKey {
  std::string scope_id;
  std::string lemma;
  std::string restriction_signature;
  std::string instance_id;  // empty when the term carried no ':NN'

  bool operator==(const NodeKey&) const = default;
};

struct GraphNode {
  NodeKey key;
  std::vector<Restriction> restrictions;
  std::vector<std::string> attributes;  // unioned across occurrences
  int first_line = 0;                   // line of the first occurrence

  const std::string& lemma() const { return key.lemma; }
  const std::string& scope_id() const { return key.scope_id; }
  bool has_attribute(std::string_view tag) const;
};

// An edge points at a node or, for ':NN' targets, at a whole scope.
class EdgeTarget {
 public:
  static EdgeTarget node(std::size_t index) { return EdgeTarget(index); }
  static EdgeTarget scope(std::string id) { return EdgeTarget(std::move(id)); }

  bool is_scope() const { return std::holds_alternative<std::string>(v_); }
  std::size_t node_index() const { return std::get<std::size_t>(v_); }
  const std::string& scope_id() const { return std::get<std::string>(v_); }

  bool operator==(const EdgeTarget&) const = default;

 private:
  explicit EdgeTarget(std::size_t index) : v_(index) {}
  explicit EdgeTarget(std::string id) : v_(std::move(id)) {}
  std::variant<std::size_t, std::string> v_;
};

struct GraphEdge {
  std::string label;
  std::size_t source;  // index into SemanticGraph::nodes
  EdgeTarget target;
};

struct Scope {
  std::string id;
  std::vector<std::size_t> members;   // node indices, first-appearance order
  std::optional<std::size_t> entry;   // member carrying '@entry'
  bool declared = false;              // appeared as a relation suffix (root always)
  int first_line = 0;                 // line of the first relation in this scope
};

struct SemanticGraph {
  std::vector<GraphNode> nodes;   // first-appearance order; external id "n1"...
  std::vector<GraphEdge> edges;   // document order, one per relation
  std::vector<Scope> scopes;      // root first, then first-appearance order
  std::optional<std::size_t> root_entry;
  std::vector<Diagnostic> diagnostics;  // W001-W004 findings

  const Scope* find_scope(std::string_view id) const;
  // "n1", "n2", ... — shared by the full XML schema and DOT output.
  static std::string node_id(std::size_t index) { return "n" + std::to_string(index + 1); }
};

// Always produces a graph for a document free of error diagnostics; lint
// findings are recorded on the graph, never thrown away.
SemanticGraph build_graph(const UnlDocument& doc);

// Entry node of a scope, or nullopt when the scope has none. Fails when
// scope_id names no scope of the graph.
Result<std::optional<NodeKey>> entry_of(const SemanticGraph& graph, std::string_view scope_id);

}  // namespace unl

#endif  // UNL_GRAPH_HPP
