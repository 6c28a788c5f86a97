#pragma once

#include <string>
#include <vector>

#include "tabparse/grammar.hpp"

namespace tabparse {

// A parse tree over symbol names. Leaves are terminals; a nonterminal node
// with no children stands for an empty right-hand side.
struct ParseTree {
  std::string label;
  bool terminal = false;
  std::vector<ParseTree> children;

  static ParseTree leaf(std::string token) { return ParseTree{std::move(token), true, {}}; }
  static ParseTree node(std::string label, std::vector<ParseTree> children) {
    return ParseTree{std::move(label), false, std::move(children)};
  }

  bool operator==(const ParseTree&) const = default;
  auto operator<=>(const ParseTree& other) const { return to_string() <=> other.to_string(); }

  // "(A (B a) (C b))"; an empty node prints as "(A)".
  std::string to_string() const;
};

std::vector<std::string> tree_yield(const ParseTree& t);

// True when every internal node with its children's labels is a rule of g
// and every leaf is a terminal of g.
bool valid_tree(const ParseTree& t, const Grammar& g);

}  // namespace tabparse
