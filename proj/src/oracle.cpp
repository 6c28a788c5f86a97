#include "tabparse/oracle.hpp"

#include <functional>

namespace tabparse::oracle {

namespace {

bool token_is(const Grammar& g, SymbolId x, const std::string& token) {
  return g.is_terminal(x) && g.name(x) == token;
}

// End positions reachable from j by deriving rhs[from..count) left to right.
std::set<std::size_t> ends_after(const DerivabilityRelation& rel, const std::vector<SymbolId>& rhs,
                                 std::size_t count, std::size_t j, std::size_t n, std::size_t from = 0) {
  std::set<std::size_t> at{j};
  for (std::size_t t = from; t < count; ++t) {
    std::set<std::size_t> next;
    for (std::size_t k : at)
      for (std::size_t e = k; e <= n; ++e)
        if (rel.contains(rhs[t], k, e)) next.insert(e);
    at = std::move(next);
  }
  return at;
}

}  // namespace

DerivabilityRelation derivable(const Grammar& g, const std::vector<std::string>& tokens) {
  const std::size_t n = tokens.size();
  DerivabilityRelation rel;
  for (std::size_t i = 1; i <= n; ++i)
    for (SymbolId x = 0; x < g.symbol_count(); ++x)
      if (token_is(g, x, tokens[i - 1])) rel.spans.insert({x, i - 1, i});

  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& rule : g.rules()) {
      for (std::size_t j = 0; j <= n; ++j) {
        for (std::size_t i : ends_after(rel, rule.rhs, rule.rhs.size(), j, n))
          if (rel.spans.insert({rule.lhs, j, i}).second) changed = true;
      }
    }
  }
  return rel;
}

bool recognizes(const Grammar& g, const std::vector<std::string>& tokens) {
  return derivable(g, tokens).contains(g.start(), 0, tokens.size());
}

std::set<std::pair<SymbolId, std::size_t>> prefix_reachable(const Grammar& g,
                                                             const std::vector<std::string>& tokens) {
  const std::size_t n = tokens.size();
  auto rel = derivable(g, tokens);
  std::set<std::pair<SymbolId, std::size_t>> out{{g.start(), 0}};
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [a, j] : std::set<std::pair<SymbolId, std::size_t>>(out)) {
      if (!g.is_nonterminal(a)) continue;
      for (std::size_t r : g.rules_for(a)) {
        const auto& rhs = g.rule(r).rhs;
        for (std::size_t t = 0; t < rhs.size(); ++t)
          for (std::size_t k : ends_after(rel, rhs, t, j, n))
            if (out.insert({rhs[t], k}).second) changed = true;
      }
    }
  }
  return out;
}

std::size_t default_max_depth(const Grammar& g, std::size_t n) {
  return 2 * (n + 2) * g.nonterminals().size();
}

std::vector<ParseTree> enumerate_trees(const Grammar& g, const std::vector<std::string>& tokens,
                                       std::size_t cap, std::size_t max_depth) {
  std::vector<ParseTree> out;
  if (cap == 0 || max_depth == 0) return out;
  const std::size_t n = tokens.size();
  auto rel = derivable(g, tokens);

  // Calls `yield` for each tree of x over (j, i); returns false to stop.
  using TreeSink = std::function<bool(const ParseTree&)>;
  using SeqSink = std::function<bool(const std::vector<ParseTree>&)>;
  std::function<bool(SymbolId, std::size_t, std::size_t, std::size_t, const TreeSink&)> trees;
  std::function<bool(const std::vector<SymbolId>&, std::size_t, std::size_t, std::size_t, std::size_t,
                     std::vector<ParseTree>&, const SeqSink&)>
      seqs;

  trees = [&](SymbolId x, std::size_t j, std::size_t i, std::size_t depth, const TreeSink& yield) {
    if (g.is_terminal(x)) return yield(ParseTree::leaf(g.name(x)));
    if (depth == 0) return true;
    for (std::size_t r : g.rules_for(x)) {
      std::vector<ParseTree> kids;
      bool go = seqs(g.rule(r).rhs, 0, j, i, depth - 1, kids, [&](const std::vector<ParseTree>& children) {
        return yield(ParseTree::node(g.name(x), children));
      });
      if (!go) return false;
    }
    return true;
  };

  seqs = [&](const std::vector<SymbolId>& rhs, std::size_t t, std::size_t j, std::size_t i, std::size_t depth,
             std::vector<ParseTree>& kids, const SeqSink& yield) {
    if (t == rhs.size()) return j == i ? yield(kids) : true;
    for (std::size_t k = j; k <= i; ++k) {
      if (!rel.contains(rhs[t], j, k)) continue;
      if (!ends_after(rel, rhs, rhs.size(), k, i, t + 1).count(i)) continue;
      bool go = trees(rhs[t], j, k, depth, [&](const ParseTree& child) {
        kids.push_back(child);
        bool more = seqs(rhs, t + 1, k, i, depth, kids, yield);
        kids.pop_back();
        return more;
      });
      if (!go) return false;
    }
    return true;
  };

  if (!rel.contains(g.start(), 0, n)) return out;
  trees(g.start(), 0, n, max_depth, [&](const ParseTree& t) {
    out.push_back(t);
    return out.size() < cap;
  });
  return out;
}

std::vector<ParseTree> enumerate_trees(const Grammar& g, const std::vector<std::string>& tokens,
                                       std::size_t cap) {
  return enumerate_trees(g, tokens, cap, default_max_depth(g, tokens.size()));
}

}  // namespace tabparse::oracle
