// pt :: parser
//
// Concrete syntax:
//
//   formula := impl
//   impl    := disj ( "->" impl )?          right-associative
//   disj    := conj ( "|" conj )*
//   conj    := neg ( "&" neg )*
//   neg     := "~" neg | prim
//   prim    := atom | "(" formula ")"
//   atom    := IDENT ( "[" "~"? IDENT "]" )?
//
// Unicode aliases ¬ ∧ ∨ → are accepted on input. A discourse is a sequence of
// formulas separated by ";" or newlines; "#" comments run to end of line.

#ifndef PT_PARSER_HPP_
#define PT_PARSER_HPP_

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pt/syntax.hpp"

namespace pt {

  struct ParseError : std::runtime_error {
    ParseError(std::size_t line, std::size_t column, const std::string& what);
    std::size_t line;     // 1-based
    std::size_t column;   // 1-based, in bytes
  };

  struct ParsedFormula {
    Formula formula;
    PresupMap presup_map;
  };

  struct Discourse {
    std::vector<Formula> formulas;
    PresupMap presup_map;
  };

  // Annotation errors surface as AnnotationConflict / InvalidPresupMap.
  ParsedFormula parse_formula(std::string_view text);
  Discourse parse_discourse(std::string_view text);

  // Minimal-parenthesis ASCII rendering. The annotation of an atom is written
  // on its first occurrence, so parse_formula(render(f, m)) gives back f and
  // m restricted to atoms_of(f).
  std::string render(const Formula& f, const PresupMap& m = {});
  std::string render(const Discourse& d);

  enum class PresupStatus;

  struct CorpusEntry {
    std::string label;
    Discourse input;
    std::set<Literal> expected_presups;
    std::vector<std::pair<Literal, PresupStatus>> expected_status;
    std::size_t line = 0;   // line of the first key
  };

  struct CorpusFormatError : std::runtime_error {
    CorpusFormatError(std::string label, std::size_t line, const std::string& what);
    std::string label;
    std::size_t line;
  };

  std::vector<CorpusEntry> parse_corpus(std::string_view text);

}  // namespace pt

#endif  // PT_PARSER_HPP_
