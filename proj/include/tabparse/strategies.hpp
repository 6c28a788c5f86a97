#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>

#include "tabparse/grammar.hpp"
#include "tabparse/pda.hpp"

namespace tabparse {

class StrategyError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A rule with a dot in its right-hand side; rule is an index into
// Grammar::rules().
struct DottedRule {
  std::size_t rule = 0;
  std::size_t dot = 0;

  auto operator<=>(const DottedRule&) const = default;
};

bool is_complete(const Grammar& g, DottedRule d);
// The symbol right after the dot. Precondition: !is_complete(g, d).
SymbolId goal(const Grammar& g, DottedRule d);
DottedRule advance(DottedRule d);

// "E -> E + . E"
std::string format_dotted(const Grammar& g, DottedRule d);

// Top-down strategy: stack symbols are dotted rules, with predict, scan and
// complete transitions. Requires a single start rule (see augment_start).
Pda compile_topdown(const Grammar& g);

// Stack symbol index of a dotted rule in a PDA from compile_topdown.
StackSymbol topdown_symbol(const Grammar& g, DottedRule d);

// Bottom-up (shift-reduce) strategy for grammars in Chomsky normal form. The
// stack starts with a fresh symbol below everything; recognition means the
// stack holds exactly that symbol and the start symbol.
Pda compile_bottomup(const Grammar& g);

}  // namespace tabparse
