#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tabparse/grammar.hpp"
#include "tabparse/pda.hpp"
#include "tabparse/strategies.hpp"

namespace tabparse {

class LrError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Sorted, duplicate-free set of dotted rules.
using ItemSet = std::vector<DottedRule>;

ItemSet closure(const ItemSet& items, const Grammar& g);
ItemSet goto_set(const ItemSet& q, SymbolId x, const Grammar& g);

using StateId = std::size_t;

struct LrAutomaton {
  std::vector<ItemSet> states;
  StateId initial = 0;
  std::map<std::pair<StateId, SymbolId>, StateId> transitions;

  std::optional<StateId> go(StateId q, SymbolId x) const;
};

// States are numbered in discovery order: the initial state first, then
// breadth-first with symbols tried in declaration order.
LrAutomaton build_lr_automaton(const Grammar& g);

// "state <id>:" blocks of dotted rules followed by "goto(<id>, X) = <id>" lines.
std::string dump_lr_automaton(const LrAutomaton& a, const Grammar& g);

// Tabular LR PDA: stack symbols q0..qk (the automaton states) plus q_final.
// Shift, multi-pop reduction and accept transitions, one reduction per
// (state holding the initial dotted rule, rule), since the popped chain is
// determined by goto. Rejects grammars with empty rules.
Pda compile_lr(const Grammar& g);
Pda compile_lr(const Grammar& g, const LrAutomaton& a);

// Splits every reduction popping three or more symbols into two-symbol
// steps through auxiliary symbols [rule, remaining].
Pda binarize_reductions(const Pda& p, const Grammar& g);

}  // namespace tabparse
