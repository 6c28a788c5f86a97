#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tabparse/cky.hpp"
#include "tabparse/earley.hpp"
#include "tabparse/engine.hpp"
#include "tabparse/grammar.hpp"
#include "tabparse/pda.hpp"
#include "tabparse/tree.hpp"

namespace tabparse {

struct ForestNode {
  std::string name;
  // Set for terminals of the forest grammar; holds the input token.
  std::optional<std::string> token;
};

struct ForestRule {
  std::size_t lhs = 0;
  std::vector<std::size_t> rhs;
  // When set, the trees for rhs are wrapped in a node for this grammar rule.
  std::optional<std::size_t> wrap;

  bool operator==(const ForestRule&) const = default;
};

enum class ForestOrigin { cky, earley, engine };

// A grammar whose nonterminals are spans or chart items and whose rules keep
// enough labelling to rebuild parse trees of the original grammar.
struct ParseForest {
  ForestOrigin origin = ForestOrigin::cky;
  Grammar grammar;
  std::vector<ForestNode> nodes;
  std::vector<ForestRule> rules;
  std::optional<std::size_t> start;
  // The root of every tree is a synthetic start rule to be dropped.
  bool strip_root = false;

  std::string rule_to_string(const ForestRule& r) const;
};

// Span forest: (j,A,i) -> (j,B,k) (k,C,i), (i-1,A,i) -> (i-1,a,i) and
// (i-1,a,i) -> a for every chart entry, reachable or not.
ParseForest build_forest_cky(const CkyChart& c, const Grammar& g, const std::vector<std::string>& tokens);

// Item forests: one rule per justification, start = the final item. Steps
// that only push a fresh symbol (predictions, shifts) keep the consumed token
// but not their context antecedent, so each derivation is one parse tree.
ParseForest build_forest_items(const EarleyChart& c, const Grammar& g, const std::vector<std::string>& tokens);
ParseForest build_forest_items(const Chart& c, const Pda& p, const Grammar& g,
                               const std::vector<std::string>& tokens);

// Keeps the rules whose symbols are all productive and reachable from the
// start through productive rules.
ParseForest reduce_forest(const ParseForest& f);

struct TreeCount {
  boost::multiprecision::cpp_int value = 0;
  bool infinite = false;

  std::string to_string() const;
};

// Product-sum over the reduced forest; infinite when it has a cycle.
TreeCount count_trees(const ParseForest& f);

// Up to k distinct trees of the original grammar, shallowest derivations
// first, so cyclic forests unroll one loop at a time.
std::vector<ParseTree> extract_trees(const ParseForest& f, std::size_t k);

// One rule per line in forest order; with `mark_eliminated`, rules dropped by
// reduce_forest get a trailing " #eliminated".
std::string dump_forest(const ParseForest& f, bool mark_eliminated = false);

}  // namespace tabparse
