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

// Tokenizer and recursive-descent parser for raw UNL text. Relation entries
// are delimited by parenthesis balance, not newlines, so the line-wrapped
// listings found in the literature parse as written.

#ifndef UNL_PARSER_HPP
#define UNL_PARSER_HPP

#include <string>
#include <string_view>
#include <vector>

#include "unl/model.hpp"

namespace unl {

enum class TokenKind {
  Ident,       // lemma/attr/digit run; '.' stays inside unless followed by '@'
  LParen,
  RParen,
  Comma,
  DotAt,       // ".@"
  Colon,
  Gt,
  FenceOpen,   // "{unl}"
  FenceClose,  // "{/unl}"
  TextRun,     // anything unclassifiable: bare '@', stray braces
};

struct Token {
  TokenKind kind;
  std::string text;
  int line = 1;  // line of the first character, 1-based
};

// Total over arbitrary bytes; concatenating token texts with the skipped
// whitespace reproduces the input.
std::vector<Token> tokenize(std::string_view text);

// Parses a whole UNL block. When '{unl}' fences are present only fenced
// content is read; otherwise the entire text must consist of relations.
// Fails with E000 on an input containing no relations.
Result<UnlDocument> parse_document(std::string_view text);

// Parses one complete relation entry, e.g.
// "agt(read(icl>do).@entry, John(iof>person))".
Result<RelationInstance> parse_relation_line(std::string_view entry);
Result<RelationInstance> parse_relation_line(std::string_view entry,
                                             std::vector<Diagnostic>& warnings);

// Parses one relation argument: a bare ':NN' scope reference or a universal
// word. Duplicate attributes are deduplicated with a W005 warning appended
// to `warnings` when a sink is supplied.
Result<NodeTerm> parse_uw_term(std::string_view text);
Result<NodeTerm> parse_uw_term(std::string_view text, std::vector<Diagnostic>& warnings);

// Parses the interior of a restriction parenthesis,
// e.g. "icl>move>do,plt>place".
Result<std::vector<Restriction>> parse_restriction_list(std::string_view text);

// Well-formedness lint over a parsed document: entry presence/uniqueness per
// scope (W001/W002), dangling scope references (W003) and attribute
// disagreement between occurrences of one node (W004). Deterministic order:
// by line, then code. Never fails.
std::vector<Diagnostic> lint_document(const UnlDocument& doc);

}  // namespace unl

#endif  // UNL_PARSER_HPP
