#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace tabparse {

using SymbolId = std::uint32_t;

class GrammarError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Rule {
  SymbolId lhs = 0;
  std::vector<SymbolId> rhs;

  bool operator==(const Rule&) const = default;
};

// A context-free grammar. Symbols are interned in order of first appearance;
// a symbol is a nonterminal iff it is the lhs of some rule. Immutable once
// built.
class Grammar {
public:
  // Each entry is (lhs, rhs tokens). Duplicate rules are dropped and reported
  // through `warnings` when given. The start symbol is the lhs of the first
  // rule.
  static Grammar from_rules(
      const std::vector<std::pair<std::string, std::vector<std::string>>>& rules,
      std::vector<std::string>* warnings = nullptr);

  std::size_t symbol_count() const { return names_.size(); }
  const std::string& name(SymbolId s) const { return names_.at(s); }
  bool is_terminal(SymbolId s) const { return !nonterminal_.at(s); }
  bool is_nonterminal(SymbolId s) const { return nonterminal_.at(s); }
  // Throws GrammarError if the name is unknown.
  SymbolId symbol(std::string_view name) const;
  bool has_symbol(std::string_view name) const;

  const std::vector<Rule>& rules() const { return rules_; }
  const Rule& rule(std::size_t index) const { return rules_.at(index); }
  SymbolId start() const { return start_; }

  // Indices of the rules for a nonterminal, in rule order.
  const std::vector<std::size_t>& rules_for(SymbolId lhs) const;

  std::vector<SymbolId> terminals() const;
  std::vector<SymbolId> nonterminals() const;

  // True when the start rule was introduced by augment_start.
  bool synthetic_start() const { return synthetic_start_; }

  std::string rule_to_string(std::size_t index) const;
  // Serializes back to the grammar file format.
  std::string to_text() const;

  // Structural equality over symbol names, rules and start symbol.
  bool operator==(const Grammar& other) const;

private:
  friend Grammar augment_start(const Grammar& g);

  std::vector<std::string> names_;
  std::vector<bool> nonterminal_;
  std::unordered_map<std::string, SymbolId> index_;
  std::vector<Rule> rules_;
  std::vector<std::vector<std::size_t>> rules_by_lhs_;
  SymbolId start_ = 0;
  bool synthetic_start_ = false;
};

// Parses the line-oriented grammar format: "LHS -> X1 X2 ...", blank lines
// and lines starting with '#' ignored.
Grammar parse_grammar(std::string_view text, std::vector<std::string>* warnings = nullptr);

// Sum over rules of 1 + |rhs|.
std::size_t grammar_size(const Grammar& g);

bool is_cnf(const Grammar& g);
bool has_epsilon_rules(const Grammar& g);

// Ensures a single start rule whose lhs does not occur on any rhs, adding
// S' -> S (with as many primes as needed for a fresh name) otherwise.
Grammar augment_start(const Grammar& g);

}  // namespace tabparse
