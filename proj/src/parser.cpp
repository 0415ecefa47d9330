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

#include "unl/parser.hpp"

#include <algorithm>
#include <cstddef>

#include "unl/graph.hpp"

namespace unl {

namespace {

bool is_ws(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
}

// Characters that terminate an identifier run. '.' terminates only when the
// next character is '@' (the ".@" attribute marker), so dots are otherwise
// ordinary lemma characters.
bool is_delimiter(char c) {
  switch (c) {
    case '(':
    case ')':
    case ',':
    case ':':
    case '>':
    case '@':
    case '{':
    case '}':
      return true;
    default:
      return false;
  }
}

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  int line = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      ++i;
      continue;
    }
    if (is_ws(c)) {
      ++i;
      continue;
    }
    int tok_line = line;
    switch (c) {
      case '(':
        out.push_back({TokenKind::LParen, "(", tok_line});
        ++i;
        continue;
      case ')':
        out.push_back({TokenKind::RParen, ")", tok_line});
        ++i;
        continue;
      case ',':
        out.push_back({TokenKind::Comma, ",", tok_line});
        ++i;
        continue;
      case ':':
        out.push_back({TokenKind::Colon, ":", tok_line});
        ++i;
        continue;
      case '>':
        out.push_back({TokenKind::Gt, ">", tok_line});
        ++i;
        continue;
      case '@':
        out.push_back({TokenKind::TextRun, "@", tok_line});
        ++i;
        continue;
      case '{':
        if (text.substr(i, 5) == "{unl}") {
          out.push_back({TokenKind::FenceOpen, "{unl}", tok_line});
          i += 5;
        } else if (text.substr(i, 6) == "{/unl}") {
          out.push_back({TokenKind::FenceClose, "{/unl}", tok_line});
          i += 6;
        } else {
          out.push_back({TokenKind::TextRun, "{", tok_line});
          ++i;
        }
        continue;
      case '}':
        out.push_back({TokenKind::TextRun, "}", tok_line});
        ++i;
        continue;
      default:
        break;
    }
    std::size_t start = i;
    while (i < text.size()) {
      char d = text[i];
      if (is_ws(d) || is_delimiter(d)) break;
      if (d == '.' && i + 1 < text.size() && text[i + 1] == '@') break;
      ++i;
    }
    out.push_back({TokenKind::Ident, std::string(text.substr(start, i - start)), tok_line});
  }
  return out;
}

namespace {

// A half-open window [pos, end) over the token vector; all parse routines
// consume from one. window() carves sub-ranges for nested constructs.
class Cursor {
 public:
  Cursor(const std::vector<Token>& tokens, std::size_t begin, std::size_t end)
      : tokens_(&tokens), pos_(begin), end_(end) {}
  explicit Cursor(const std::vector<Token>& tokens) : Cursor(tokens, 0, tokens.size()) {}

  bool at_end() const { return pos_ >= end_; }
  const Token& peek() const { return (*tokens_)[pos_]; }
  const Token& take() { return (*tokens_)[pos_++]; }
  bool next_is(TokenKind k) const { return !at_end() && peek().kind == k; }
  std::size_t pos() const { return pos_; }
  std::size_t end() const { return end_; }
  void seek(std::size_t p) { pos_ = p; }
  const Token& at(std::size_t p) const { return (*tokens_)[p]; }
  Cursor window(std::size_t begin, std::size_t end) const { return {*tokens_, begin, end}; }

  int line_or(int fallback) const { return at_end() ? fallback : peek().line; }

 private:
  const std::vector<Token>* tokens_;
  std::size_t pos_;
  std::size_t end_;
};

std::string describe(const Token& t) { return "'" + t.text + "'"; }

// Adjacent identifier tokens join with single spaces; this is how interior
// spaces in lemmas and restriction terms survive tokenization.
std::string ident_run(Cursor& c) {
  std::string out;
  while (c.next_is(TokenKind::Ident)) {
    if (!out.empty()) out += ' ';
    out += c.take().text;
  }
  return out;
}

Result<std::vector<Restriction>> parse_restrictions(Cursor c, int fallback_line) {
  std::vector<Restriction> out;
  if (c.at_end()) {
    return Diagnostic::error(codes::kMalformedRestriction, "empty restriction list '()'",
                             fallback_line);
  }
  while (true) {
    int item_line = c.line_or(fallback_line);
    if (c.at_end() || c.next_is(TokenKind::Comma)) {
      return Diagnostic::error(codes::kMalformedRestriction, "empty restriction item", item_line);
    }
    std::string tag = ident_run(c);
    if (tag.empty()) {
      return Diagnostic::error(codes::kMalformedRestriction,
                               "expected a restriction tag, found " + describe(c.peek()),
                               c.peek().line);
    }
    std::vector<std::string> chain;
    while (c.next_is(TokenKind::Gt)) {
      int gt_line = c.take().line;
      std::string element = ident_run(c);
      if (element.empty()) {
        return Diagnostic::error(codes::kMalformedRestriction,
                                 "empty restriction term after '>' in '" + tag + "'", gt_line);
      }
      chain.push_back(std::move(element));
    }
    if (chain.empty()) {
      return Diagnostic::error(codes::kMalformedRestriction,
                               "restriction '" + tag + "' must contain '>'", item_line);
    }
    auto restriction = Restriction::make(std::move(tag), std::move(chain));
    if (!restriction) return restriction.error().at(item_line);
    out.push_back(std::move(restriction).value());
    if (c.at_end()) break;
    if (c.next_is(TokenKind::Comma)) {
      c.take();
      continue;
    }
    return Diagnostic::error(codes::kMalformedRestriction,
                             "unexpected " + describe(c.peek()) + " in restriction list",
                             c.peek().line);
  }
  return out;
}

// One relation argument. `warnings` receives W005 for duplicate attributes.
Result<NodeTerm> parse_term(Cursor& c, int fallback_line, std::vector<Diagnostic>& warnings) {
  if (c.at_end()) {
    return Diagnostic::error(codes::kMalformedTerm, "empty term", fallback_line);
  }

  // Bare ':NN' is a scope reference.
  if (c.next_is(TokenKind::Colon)) {
    int colon_line = c.take().line;
    if (!c.next_is(TokenKind::Ident) || !is_scope_digits(c.peek().text)) {
      return Diagnostic::error(codes::kMalformedTerm, "scope reference must be ':' + 1-3 digits",
                               c.line_or(colon_line));
    }
    std::string id = c.take().text;
    if (!c.at_end()) {
      return Diagnostic::error(
          codes::kMalformedTerm,
          "unexpected " + describe(c.peek()) + " after scope reference ':" + id + "'",
          c.peek().line);
    }
    return NodeTerm::scope_ref(std::move(id));
  }

  int term_line = c.peek().line;
  std::string lemma = ident_run(c);
  if (lemma.empty()) {
    const Token& t = c.peek();
    if (t.kind == TokenKind::TextRun && t.text == "@") {
      return Diagnostic::error(codes::kMalformedTerm, "'@' without preceding '.'", t.line);
    }
    return Diagnostic::error(codes::kMalformedTerm, "expected a lemma, found " + describe(t),
                             t.line);
  }

  std::vector<Restriction> restrictions;
  if (c.next_is(TokenKind::LParen)) {
    int open_line = c.take().line;
    // Restriction lists never nest, so the first ')' closes the list.
    std::size_t close = c.pos();
    while (close < c.end() && c.at(close).kind != TokenKind::RParen) ++close;
    if (close == c.end()) {
      return Diagnostic::error(codes::kUnbalancedParen, "unbalanced '(' in restriction list",
                               open_line);
    }
    auto parsed = parse_restrictions(c.window(c.pos(), close), open_line);
    if (!parsed) return parsed.error();
    restrictions = std::move(parsed).value();
    c.seek(close + 1);
  }

  std::optional<std::string> instance;
  // ':NN' is accepted right after the restriction parenthesis (or bare
  // lemma) and after the attribute sequence; both mean the instance id.
  auto read_instance = [&]() -> Result<bool> {
    int colon_line = c.take().line;
    if (!c.next_is(TokenKind::Ident) || !is_scope_digits(c.peek().text)) {
      return Diagnostic::error(codes::kMalformedTerm, "instance id must be ':' + 1-3 digits",
                               c.line_or(colon_line));
    }
    if (instance) {
      return Diagnostic::error(codes::kMalformedTerm, "instance id given twice", c.peek().line);
    }
    instance = c.take().text;
    return true;
  };

  if (c.next_is(TokenKind::Colon)) {
    auto r = read_instance();
    if (!r) return r.error();
  }

  std::vector<std::string> attributes;
  while (c.next_is(TokenKind::DotAt)) {
    int marker_line = c.take().line;
    if (!c.next_is(TokenKind::Ident)) {
      return Diagnostic::error(codes::kMalformedTerm, "expected attribute name after '.@'",
                               c.line_or(marker_line));
    }
    const Token& attr = c.take();
    if (std::find(attributes.begin(), attributes.end(), attr.text) != attributes.end()) {
      warnings.push_back(Diagnostic::warning(
          codes::kDuplicateAttribute, "duplicate attribute '@" + attr.text + "'", attr.line));
    } else {
      attributes.push_back(attr.text);
    }
  }

  if (c.next_is(TokenKind::Colon)) {
    auto r = read_instance();
    if (!r) return r.error();
  }

  if (!c.at_end()) {
    const Token& t = c.peek();
    if (t.kind == TokenKind::TextRun && t.text == "@") {
      return Diagnostic::error(codes::kMalformedTerm, "'@' without preceding '.'", t.line);
    }
    return Diagnostic::error(codes::kMalformedTerm, "unexpected " + describe(t) + " in term",
                             t.line);
  }

  auto word = UniversalWord::make(std::move(lemma), std::move(restrictions),
                                  std::move(attributes), std::move(instance));
  if (!word) return word.error().at(term_line);
  return NodeTerm::word(std::move(word).value());
}

// One 'label[:NN](arg, arg)' entry, starting at the cursor.
Result<RelationInstance> parse_relation(Cursor& c, std::vector<Diagnostic>& warnings) {
  const Token& first = c.peek();
  if (first.kind == TokenKind::RParen) {
    return Diagnostic::error(codes::kUnbalancedParen, "unexpected ')'", first.line);
  }
  if (first.kind != TokenKind::Ident) {
    return Diagnostic::error(codes::kStrayText,
                             "expected a relation, found " + describe(first), first.line);
  }

  int label_line = first.line;
  std::string label = ident_run(c);
  if (!is_lowercase_ident(label)) {
    return Diagnostic::error(codes::kInvalidLabel,
                             "relation label must be lowercase letters: '" + label + "'",
                             label_line);
  }

  std::optional<std::string> suffix;
  if (c.next_is(TokenKind::Colon)) {
    int colon_line = c.take().line;
    if (!c.next_is(TokenKind::Ident) || !is_scope_digits(c.peek().text)) {
      return Diagnostic::error(codes::kMalformedRelation,
                               "relation scope suffix must be ':' + 1-3 digits",
                               c.line_or(colon_line));
    }
    suffix = c.take().text;
  }

  if (!c.next_is(TokenKind::LParen)) {
    return Diagnostic::error(codes::kMalformedRelation,
                             "expected '(' after relation label '" + label + "'",
                             c.line_or(label_line));
  }
  int open_line = c.take().line;

  // Find the matching ')' and the top-level commas; entries are delimited by
  // parenthesis balance, so wrapped lines pose no problem.
  std::vector<int> open_lines{open_line};
  std::vector<std::size_t> comma_positions;
  std::size_t p = c.pos();
  std::size_t close = 0;
  bool closed = false;
  for (; p < c.end(); ++p) {
    const Token& t = c.at(p);
    if (t.kind == TokenKind::LParen) {
      open_lines.push_back(t.line);
    } else if (t.kind == TokenKind::RParen) {
      open_lines.pop_back();
      if (open_lines.empty()) {
        close = p;
        closed = true;
        break;
      }
    } else if (t.kind == TokenKind::Comma && open_lines.size() == 1) {
      comma_positions.push_back(p);
    }
  }
  if (!closed) {
    return Diagnostic::error(codes::kUnbalancedParen, "unbalanced '('", open_lines.back());
  }

  if (comma_positions.empty()) {
    return Diagnostic::error(codes::kMalformedRelation,
                             "expected ',' separating the two arguments of '" + label + "'",
                             open_line);
  }
  if (comma_positions.size() > 1) {
    return Diagnostic::error(codes::kMalformedRelation,
                             "relation '" + label + "' has " +
                                 std::to_string(comma_positions.size() + 1) +
                                 " arguments; expected 2",
                             open_line);
  }

  Cursor first_arg = c.window(c.pos(), comma_positions[0]);
  Cursor second_arg = c.window(comma_positions[0] + 1, close);
  int comma_line = c.at(comma_positions[0]).line;
  int close_line = c.at(close).line;

  auto source = parse_term(first_arg, open_line, warnings);
  if (!source) return source.error();
  auto target = parse_term(second_arg, comma_line, warnings);
  if (!target) return target.error();

  c.seek(close + 1);

  auto relation =
      RelationInstance::make(std::move(label), std::move(suffix), std::move(source).value(),
                             std::move(target).value(), {label_line, close_line});
  if (!relation) return relation.error().at(label_line);
  return relation;
}

// Appends every relation in the window to `doc`.
Result<bool> parse_region(Cursor c, UnlDocument& doc) {
  while (!c.at_end()) {
    auto relation = parse_relation(c, doc.diagnostics);
    if (!relation) return relation.error();
    doc.relations.push_back(std::move(relation).value());
  }
  return true;
}

}  // namespace

Result<UnlDocument> parse_document(std::string_view text) {
  std::vector<Token> tokens = tokenize(text);
  UnlDocument doc;
  doc.had_delimiters =
      std::any_of(tokens.begin(), tokens.end(),
                  [](const Token& t) { return t.kind == TokenKind::FenceOpen; });

  if (doc.had_delimiters) {
    // Only fenced content is parsed; text outside the fences is ignored.
    std::size_t i = 0;
    while (i < tokens.size()) {
      if (tokens[i].kind != TokenKind::FenceOpen) {
        ++i;
        continue;
      }
      std::size_t body_begin = i + 1;
      std::size_t close = body_begin;
      while (close < tokens.size() && tokens[close].kind != TokenKind::FenceClose) ++close;
      if (close == tokens.size()) {
        return Diagnostic::error(codes::kStrayText, "'{unl}' without matching '{/unl}'",
                                 tokens[i].line);
      }
      auto parsed = parse_region(Cursor(tokens, body_begin, close), doc);
      if (!parsed) return parsed.error();
      i = close + 1;
    }
  } else {
    auto parsed = parse_region(Cursor(tokens), doc);
    if (!parsed) return parsed.error();
  }

  if (doc.relations.empty()) {
    return Diagnostic::error(codes::kEmptyInput, "empty input: no relations found", 1);
  }
  return doc;
}

Result<RelationInstance> parse_relation_line(std::string_view entry) {
  std::vector<Diagnostic> discarded;
  return parse_relation_line(entry, discarded);
}

Result<RelationInstance> parse_relation_line(std::string_view entry,
                                             std::vector<Diagnostic>& warnings) {
  std::vector<Token> tokens = tokenize(entry);
  Cursor c(tokens);
  if (c.at_end()) {
    return Diagnostic::error(codes::kEmptyInput, "empty relation entry", 1);
  }
  auto relation = parse_relation(c, warnings);
  if (!relation) return relation;
  if (!c.at_end()) {
    return Diagnostic::error(codes::kStrayText,
                             "unexpected " + describe(c.peek()) + " after relation",
                             c.peek().line);
  }
  return relation;
}

Result<NodeTerm> parse_uw_term(std::string_view text) {
  std::vector<Diagnostic> discarded;
  return parse_uw_term(text, discarded);
}

Result<NodeTerm> parse_uw_term(std::string_view text, std::vector<Diagnostic>& warnings) {
  std::vector<Token> tokens = tokenize(text);
  Cursor c(tokens);
  return parse_term(c, 1, warnings);
}

Result<std::vector<Restriction>> parse_restriction_list(std::string_view text) {
  std::vector<Token> tokens = tokenize(text);
  return parse_restrictions(Cursor(tokens), 1);
}

std::vector<Diagnostic> lint_document(const UnlDocument& doc) {
  SemanticGraph graph = build_graph(doc);
  std::vector<Diagnostic> out = graph.diagnostics;
  std::stable_sort(out.begin(), out.end(), [](const Diagnostic& a, const Diagnostic& b) {
    if (a.line != b.line) return a.line < b.line;
    return a.code < b.code;
  });
  return out;
}

}  // namespace unl
