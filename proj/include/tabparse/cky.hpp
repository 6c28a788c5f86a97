#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tabparse/grammar.hpp"

namespace tabparse {

struct CkyJustification {
  std::size_t rule = 0;
  // Split point for binary rules; empty for lexical ones.
  std::optional<std::size_t> split;

  bool operator==(const CkyJustification&) const = default;
};

// Upper-triangular matrix of nonterminal sets T[j,i], j < i.
class CkyChart {
public:
  std::size_t input_length() const { return n_; }
  const std::vector<SymbolId>& input() const { return input_; }
  bool contains(std::size_t j, SymbolId a, std::size_t i) const;
  // Nonterminals of T[j,i] in symbol order.
  std::vector<SymbolId> cell(std::size_t j, std::size_t i) const;
  const std::vector<CkyJustification>& justifications(std::size_t j, SymbolId a, std::size_t i) const;
  std::size_t item_count() const { return items_; }
  std::size_t fired() const { return fired_; }

private:
  friend CkyChart cky_parse(const Grammar& g, const std::vector<std::string>& tokens);

  std::size_t slot(std::size_t j, SymbolId a, std::size_t i) const {
    return (j * (n_ + 1) + i) * symbols_ + a;
  }

  std::size_t n_ = 0;
  std::size_t symbols_ = 0;
  std::vector<SymbolId> input_;
  std::vector<std::vector<CkyJustification>> cells_;
  std::vector<bool> present_;
  std::size_t items_ = 0;
  std::size_t fired_ = 0;
};

// The bottom-up triple loop over spans; throws GrammarError unless is_cnf(g).
// Empty input gives an empty chart.
CkyChart cky_parse(const Grammar& g, const std::vector<std::string>& tokens);

bool cky_recognized(const CkyChart& c, const Grammar& g, std::size_t n);

// "T[j,i]: A, B" for each non-empty cell, rows ascending.
std::string dump_cky(const CkyChart& c, const Grammar& g);

}  // namespace tabparse
