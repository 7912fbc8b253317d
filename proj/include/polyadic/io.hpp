#pragma once

#include "polyadic/context.hpp"
#include "polyadic/implications.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace polyadic {

/// Malformed context or concept text. `line()` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Well-formed text describing an invalid context (e.g. index out of range).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Context files:
//
//   NCTX 1 <n>
//   sizes <j1> ... <jn>
//   labels <dim> <l1> ... <lj>     optional, once per dimension
//   mode crosses|holes
//   <i1> ... <in>                  one 1-based tuple per line
//
// A token starting with '#' comments out the rest of its line.
Context parse_context(std::string_view text);
std::string serialize_context(const Context& ctx);

enum class ConceptFormat { text, json, csv };

ConceptFormat parse_concept_format(std::string_view name);

/// Concepts in canonical order with labels, e.g. "({α,β},{1,2},{a})".
std::string serialize_concepts(const Context& ctx, const ConceptSet& cs, ConceptFormat format);
/// Inverse of serialize_concepts for the text and json formats. Text input
/// accepts "∅" or "{}" for an empty component.
ConceptSet parse_concepts(std::string_view text, const Context& ctx, ConceptFormat format);

std::string format_concept(const Context& ctx, const Concept& c);
std::string format_feature(const Context& ctx, const Feature& f);

/// Parses "(1,a),(1,b) -> (1,c)" against the attribute labels of a
/// 2-context. Either side may be wrapped in braces; "∅", "{}" or nothing
/// denote the empty set.
Implication parse_implication(std::string_view text, const Context& ctx2, Scope scope = {});
std::string format_cells(const Context& ctx2, const CellSet& attributes);
std::string format_implication(const Context& ctx2, const Implication& implication);

}  // namespace polyadic
