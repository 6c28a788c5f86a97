#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tabparse/grammar.hpp"
#include "tabparse/strategies.hpp"

namespace tabparse {

struct EarleyItem {
  std::uint32_t from = 0;
  DottedRule dotted;
  std::uint32_t to = 0;

  bool operator==(const EarleyItem&) const = default;
};

enum class EarleyStep { initializer, predictor, scanner, completer };

std::string to_string(EarleyStep s);

struct EarleyJustification {
  EarleyStep step = EarleyStep::initializer;
  // predictor: the item whose goal was predicted; scanner: the item before
  // the dot moved; completer: the waiting item, then the completed one.
  std::vector<std::size_t> antecedents;

  bool operator==(const EarleyJustification&) const = default;
};

class EarleyChart {
public:
  std::size_t input_length() const { return input_.size(); }
  const std::vector<SymbolId>& input() const { return input_; }
  const std::vector<EarleyItem>& items() const { return items_; }
  const EarleyItem& item(std::size_t id) const { return items_.at(id); }
  const std::vector<EarleyJustification>& justifications(std::size_t id) const { return justifications_.at(id); }
  std::optional<std::size_t> find(const EarleyItem& it) const;
  bool contains(const EarleyItem& it) const { return find(it).has_value(); }

  // Dotted rules of T[j,i], sorted.
  std::vector<DottedRule> cell(std::size_t j, std::size_t i) const;

  std::size_t fired() const { return fired_; }

private:
  friend class EarleyRun;

  std::vector<SymbolId> input_;
  std::vector<EarleyItem> items_;
  std::vector<std::vector<EarleyJustification>> justifications_;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> index_;
  std::size_t fired_ = 0;
};

// Agenda-driven Earley recognizer; the grammar must have exactly one rule for
// its start symbol (see augment_start). Tokens outside the grammar's
// terminals match nothing.
EarleyChart earley_parse(const Grammar& g, const std::vector<std::string>& tokens);

// The item (0, S -> α ., n) for the unique start rule, if present.
std::optional<std::size_t> earley_final_item(const EarleyChart& c, const Grammar& g);
bool earley_recognized(const EarleyChart& c, const Grammar& g, std::size_t n);

// Number of distinct justifications of the final item; 0 when not recognized.
std::size_t earley_ambiguous_final(const EarleyChart& c, const Grammar& g);

// "T[j,i]: A -> α . β, ..." for each non-empty cell, rows ascending.
std::string dump_earley(const EarleyChart& c, const Grammar& g);

}  // namespace tabparse
