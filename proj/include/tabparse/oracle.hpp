#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "tabparse/grammar.hpp"
#include "tabparse/tree.hpp"

// Brute-force reference implementations for tests and --oracle. Nothing here
// depends on the parsing algorithms.
namespace tabparse::oracle {

// The set of (X, j, i) with X =>* a_{j+1} .. a_i.
struct DerivabilityRelation {
  std::set<std::tuple<SymbolId, std::size_t, std::size_t>> spans;

  bool contains(SymbolId x, std::size_t j, std::size_t i) const { return spans.count({x, j, i}) != 0; }
};

// Naive fixpoint over all spans and rules.
DerivabilityRelation derivable(const Grammar& g, const std::vector<std::string>& tokens);

bool recognizes(const Grammar& g, const std::vector<std::string>& tokens);

// (A, j) with S =>* a_1 .. a_j A γ for some γ.
std::set<std::pair<SymbolId, std::size_t>> prefix_reachable(const Grammar& g,
                                                             const std::vector<std::string>& tokens);

std::size_t default_max_depth(const Grammar& g, std::size_t n);

// Every parse tree of the input with depth at most max_depth, up to cap, by
// plain recursion over span partitions.
std::vector<ParseTree> enumerate_trees(const Grammar& g, const std::vector<std::string>& tokens,
                                       std::size_t cap, std::size_t max_depth);
std::vector<ParseTree> enumerate_trees(const Grammar& g, const std::vector<std::string>& tokens,
                                       std::size_t cap);

}  // namespace tabparse::oracle
