#include "tabparse/tree.hpp"

namespace tabparse {

std::string ParseTree::to_string() const {
  if (terminal) return label;
  std::string out = "(" + label;
  for (const auto& c : children) out += " " + c.to_string();
  return out + ")";
}

namespace {

void collect(const ParseTree& t, std::vector<std::string>& out) {
  if (t.terminal) {
    out.push_back(t.label);
    return;
  }
  for (const auto& c : t.children) collect(c, out);
}

}  // namespace

std::vector<std::string> tree_yield(const ParseTree& t) {
  std::vector<std::string> out;
  collect(t, out);
  return out;
}

bool valid_tree(const ParseTree& t, const Grammar& g) {
  if (!g.has_symbol(t.label)) return false;
  SymbolId s = g.symbol(t.label);
  if (t.terminal) return g.is_terminal(s) && t.children.empty();
  if (!g.is_nonterminal(s)) return false;
  bool matched = false;
  for (std::size_t r : g.rules_for(s)) {
    const auto& rhs = g.rule(r).rhs;
    if (rhs.size() != t.children.size()) continue;
    bool same = true;
    for (std::size_t k = 0; k < rhs.size() && same; ++k) same = g.name(rhs[k]) == t.children[k].label;
    if (same) {
      matched = true;
      break;
    }
  }
  if (!matched) return false;
  for (const auto& c : t.children)
    if (!valid_tree(c, g)) return false;
  return true;
}

}  // namespace tabparse
