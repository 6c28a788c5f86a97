#include "tabparse/forest.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>

namespace tabparse {

std::string ParseForest::rule_to_string(const ForestRule& r) const {
  std::string out = nodes.at(r.lhs).name + " ->";
  if (r.rhs.empty()) out += " eps";
  for (std::size_t s : r.rhs) out += " " + nodes.at(s).name;
  return out;
}

namespace {

class ForestBuilder {
public:
  ForestBuilder(ForestOrigin origin, const Grammar& g) {
    f_.origin = origin;
    f_.grammar = g;
  }

  std::size_t node(const std::string& name) {
    auto [it, fresh] = nonterminals_.emplace(name, f_.nodes.size());
    if (fresh) f_.nodes.push_back(ForestNode{name, std::nullopt});
    return it->second;
  }

  std::size_t token(const std::string& tok) {
    auto [it, fresh] = tokens_.emplace(tok, f_.nodes.size());
    if (fresh) f_.nodes.push_back(ForestNode{tok, tok});
    return it->second;
  }

  void rule(std::size_t lhs, std::vector<std::size_t> rhs, std::optional<std::size_t> wrap) {
    ForestRule r{lhs, std::move(rhs), wrap};
    auto k = std::make_tuple(r.lhs, r.rhs, r.wrap);
    if (seen_.insert(k).second) f_.rules.push_back(std::move(r));
  }

  ParseForest& forest() { return f_; }

private:
  ParseForest f_;
  std::unordered_map<std::string, std::size_t> nonterminals_;
  std::unordered_map<std::string, std::size_t> tokens_;
  std::set<std::tuple<std::size_t, std::vector<std::size_t>, std::optional<std::size_t>>> seen_;
};

std::string span_name(std::size_t j, const std::string& x, std::size_t i) {
  return "( " + std::to_string(j) + " , " + x + " , " + std::to_string(i) + " )";
}

}  // namespace

ParseForest build_forest_cky(const CkyChart& c, const Grammar& g, const std::vector<std::string>& tokens) {
  ForestBuilder b(ForestOrigin::cky, g);
  const std::size_t n = tokens.size();
  auto span = [&](std::size_t j, SymbolId a, std::size_t i) { return b.node(span_name(j, g.name(a), i)); };

  b.forest().start = b.node(span_name(0, g.name(g.start()), n));
  std::vector<std::size_t> terminal_span(n);
  for (std::size_t i = 1; i <= n; ++i) {
    terminal_span[i - 1] = b.node(span_name(i - 1, tokens[i - 1], i));
    b.rule(terminal_span[i - 1], {b.token(tokens[i - 1])}, std::nullopt);
  }
  if (c.input_length() != n) return std::move(b.forest());

  for (std::size_t len = 1; len <= n; ++len) {
    for (std::size_t j = 0; j + len <= n; ++j) {
      std::size_t i = j + len;
      for (SymbolId a : c.cell(j, i)) {
        for (const auto& just : c.justifications(j, a, i)) {
          const Rule& r = g.rule(just.rule);
          if (!just.split) {
            b.rule(span(j, a, i), {terminal_span[j]}, just.rule);
            continue;
          }
          std::size_t k = *just.split;
          b.rule(span(j, a, i), {span(j, r.rhs[0], k), span(k, r.rhs[1], i)}, just.rule);
        }
      }
    }
  }
  return std::move(b.forest());
}

ParseForest build_forest_items(const EarleyChart& c, const Grammar& g, const std::vector<std::string>& tokens) {
  ForestBuilder b(ForestOrigin::earley, g);
  b.forest().strip_root = g.synthetic_start();
  auto name = [&](std::size_t id) {
    const EarleyItem& it = c.item(id);
    return span_name(it.from, format_dotted(g, it.dotted), it.to);
  };
  std::vector<std::size_t> node_of(c.items().size());
  for (std::size_t id = 0; id < c.items().size(); ++id) node_of[id] = b.node(name(id));

  for (std::size_t id = 0; id < c.items().size(); ++id) {
    const EarleyItem& it = c.item(id);
    std::optional<std::size_t> wrap;
    if (is_complete(g, it.dotted)) wrap = it.dotted.rule;
    for (const auto& j : c.justifications(id)) {
      switch (j.step) {
        case EarleyStep::initializer:
        case EarleyStep::predictor:
          b.rule(node_of[id], {}, wrap);
          break;
        case EarleyStep::scanner:
          b.rule(node_of[id], {node_of[j.antecedents[0]], b.token(tokens.at(c.item(j.antecedents[0]).to))}, wrap);
          break;
        case EarleyStep::completer:
          b.rule(node_of[id], {node_of[j.antecedents[0]], node_of[j.antecedents[1]]}, wrap);
          break;
      }
    }
  }
  if (auto fin = earley_final_item(c, g)) b.forest().start = node_of[*fin];
  return std::move(b.forest());
}

ParseForest build_forest_items(const Chart& c, const Pda& p, const Grammar& g,
                               const std::vector<std::string>& tokens) {
  ForestBuilder b(ForestOrigin::engine, g);
  b.forest().strip_root = g.synthetic_start();
  std::vector<std::size_t> node_of(c.items().size());
  for (ItemId id = 0; id < c.items().size(); ++id) node_of[id] = b.node(format_item(p, c.item(id)));

  for (ItemId id = 0; id < c.items().size(); ++id) {
    const Item& it = c.item(id);
    for (const auto& j : c.justifications(id)) {
      if (!j.transition) {
        b.rule(node_of[id], {}, p.initial_completes_rule());
        continue;
      }
      const Transition& t = p.transitions()[*j.transition];
      std::vector<std::size_t> rhs;
      bool push_only = j.rule == Shape::F1 || j.rule == Shape::F4 || j.rule == Shape::F6;
      if (!push_only)
        for (ItemId a : j.antecedents) rhs.push_back(node_of[a]);
      if (!t.read.empty()) rhs.push_back(b.token(tokens.at(it.upper_pos - 1)));
      b.rule(node_of[id], std::move(rhs), t.completes_rule);
    }
  }
  if (auto fin = c.find(accept_item(p, tokens.size()))) b.forest().start = node_of[*fin];
  return std::move(b.forest());
}

ParseForest reduce_forest(const ParseForest& f) {
  const std::size_t n = f.nodes.size();
  std::vector<bool> productive(n, false);
  for (std::size_t v = 0; v < n; ++v) productive[v] = f.nodes[v].token.has_value();

  // Counter-based productivity sweep.
  std::vector<std::size_t> missing(f.rules.size());
  std::vector<std::vector<std::size_t>> uses(n);
  std::vector<std::size_t> work;
  for (std::size_t r = 0; r < f.rules.size(); ++r) {
    for (std::size_t s : f.rules[r].rhs)
      if (!productive[s]) {
        ++missing[r];
        uses[s].push_back(r);
      }
    if (missing[r] == 0) work.push_back(r);
  }
  while (!work.empty()) {
    std::size_t r = work.back();
    work.pop_back();
    std::size_t lhs = f.rules[r].lhs;
    if (productive[lhs]) continue;
    productive[lhs] = true;
    for (std::size_t u : uses[lhs])
      if (--missing[u] == 0) work.push_back(u);
  }

  std::vector<std::vector<std::size_t>> rules_of(n);
  for (std::size_t r = 0; r < f.rules.size(); ++r)
    if (missing[r] == 0) rules_of[f.rules[r].lhs].push_back(r);

  std::vector<bool> reachable(n, false);
  std::vector<std::size_t> stack;
  if (f.start && productive[*f.start]) {
    reachable[*f.start] = true;
    stack.push_back(*f.start);
  }
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t r : rules_of[v])
      for (std::size_t s : f.rules[r].rhs)
        if (!reachable[s]) {
          reachable[s] = true;
          stack.push_back(s);
        }
  }

  ParseForest out = f;
  out.rules.clear();
  for (std::size_t r = 0; r < f.rules.size(); ++r)
    if (missing[r] == 0 && reachable[f.rules[r].lhs]) out.rules.push_back(f.rules[r]);
  return out;
}

std::string TreeCount::to_string() const {
  return infinite ? std::string("infinite") : value.str();
}

TreeCount count_trees(const ParseForest& input) {
  ParseForest f = reduce_forest(input);
  TreeCount result;
  if (!f.start || f.rules.empty()) return result;

  const std::size_t n = f.nodes.size();
  std::vector<std::vector<std::size_t>> rules_of(n);
  for (std::size_t r = 0; r < f.rules.size(); ++r) rules_of[f.rules[r].lhs].push_back(r);

  // Tarjan's algorithm; a component with more than one node, or a node with
  // a rule mentioning itself, means unboundedly many trees.
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack, order;
  int counter = 0;
  bool cyclic = false;
  std::function<void(std::size_t)> strong = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (std::size_t r : rules_of[v]) {
      for (std::size_t w : f.rules[r].rhs) {
        if (w == v) cyclic = true;
        if (index[w] < 0) {
          strong(w);
          low[v] = std::min(low[v], low[w]);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
      }
    }
    if (low[v] == index[v]) {
      std::size_t size = 0;
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        ++size;
      } while (w != v);
      if (size > 1) cyclic = true;
    }
    order.push_back(v);
  };
  strong(*f.start);
  if (cyclic) {
    result.infinite = true;
    return result;
  }

  // Post-order of an acyclic graph visits children first.
  std::vector<boost::multiprecision::cpp_int> count(n, 0);
  for (std::size_t v : order) {
    if (f.nodes[v].token) {
      count[v] = 1;
      continue;
    }
    boost::multiprecision::cpp_int sum = 0;
    for (std::size_t r : rules_of[v]) {
      boost::multiprecision::cpp_int prod = 1;
      for (std::size_t w : f.rules[r].rhs) prod *= count[w];
      sum += prod;
    }
    count[v] = sum;
  }
  result.value = count[*f.start];
  return result;
}

namespace {

using Fragment = std::vector<ParseTree>;

class Extractor {
public:
  Extractor(const ParseForest& f, std::size_t cap) : f_(f), cap_(cap), rules_of_(f.nodes.size()) {
    for (std::size_t r = 0; r < f.rules.size(); ++r) rules_of_[f.rules[r].lhs].push_back(r);
  }

  // Derivations of `v` whose depth is exactly d, at most cap of them.
  const std::vector<Fragment>& exact(std::size_t v, std::size_t d) {
    auto key = std::make_pair(v, d);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<Fragment> out;
    if (f_.nodes[v].token) {
      if (d == 0) out.push_back({ParseTree::leaf(*f_.nodes[v].token)});
    } else if (d > 0) {
      for (std::size_t r : rules_of_[v]) {
        if (out.size() >= cap_) break;
        derive(f_.rules[r], d, out);
      }
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

private:
  std::vector<Fragment> upto(std::size_t v, std::size_t d) {
    std::vector<Fragment> out;
    for (std::size_t e = 0; e <= d && out.size() < cap_; ++e) {
      const auto& xs = exact(v, e);
      for (const auto& x : xs) {
        if (out.size() >= cap_) break;
        out.push_back(x);
      }
    }
    return out;
  }

  void derive(const ForestRule& rule, std::size_t d, std::vector<Fragment>& out) {
    const std::size_t m = rule.rhs.size();
    if (m == 0) {
      if (d == 1) out.push_back(finish(rule, {}));
      return;
    }
    // The first child of depth exactly d-1 sits at p; earlier children are
    // shallower, later ones at most d-1.
    for (std::size_t p = 0; p < m && out.size() < cap_; ++p) {
      if (p > 0 && d < 2) break;
      std::vector<std::vector<Fragment>> choices(m);
      bool empty = false;
      for (std::size_t q = 0; q < m && !empty; ++q) {
        if (q < p)
          choices[q] = upto(rule.rhs[q], d - 2);
        else if (q == p)
          choices[q] = exact(rule.rhs[q], d - 1);
        else
          choices[q] = upto(rule.rhs[q], d - 1);
        empty = choices[q].empty();
      }
      if (empty) continue;
      std::vector<std::size_t> pick(m, 0);
      while (out.size() < cap_) {
        Fragment children;
        for (std::size_t q = 0; q < m; ++q) {
          const auto& piece = choices[q][pick[q]];
          children.insert(children.end(), piece.begin(), piece.end());
        }
        out.push_back(finish(rule, std::move(children)));
        bool carry = true;
        for (std::size_t q = m; q > 0 && carry; --q) {
          if (++pick[q - 1] < choices[q - 1].size())
            carry = false;
          else
            pick[q - 1] = 0;
        }
        if (carry) break;
      }
    }
  }

  Fragment finish(const ForestRule& rule, Fragment children) const {
    if (!rule.wrap) return children;
    const Rule& r = f_.grammar.rule(*rule.wrap);
    return {ParseTree::node(f_.grammar.name(r.lhs), std::move(children))};
  }

  const ParseForest& f_;
  std::size_t cap_;
  std::vector<std::vector<std::size_t>> rules_of_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Fragment>> memo_;
};

}  // namespace

std::vector<ParseTree> extract_trees(const ParseForest& input, std::size_t k) {
  std::vector<ParseTree> out;
  if (k == 0) return out;
  ParseForest f = reduce_forest(input);
  if (!f.start || f.rules.empty()) return out;

  TreeCount total = count_trees(f);
  const std::size_t limit = (f.nodes.size() + 1) * (total.infinite ? k + 1 : 1) + 1;
  Extractor ex(f, k);
  std::set<std::string> seen;
  for (std::size_t d = 1; d <= limit && out.size() < k; ++d) {
    for (const auto& frag : ex.exact(*f.start, d)) {
      ParseTree t = frag.size() == 1 ? frag.front()
                                     : ParseTree::node(f.grammar.name(f.grammar.start()), frag);
      if (f.strip_root && !t.terminal && t.children.size() == 1) t = t.children.front();
      if (!seen.insert(t.to_string()).second) continue;
      out.push_back(std::move(t));
      if (out.size() >= k) break;
    }
    if (!total.infinite && total.value == out.size()) break;
  }
  return out;
}

std::string dump_forest(const ParseForest& f, bool mark_eliminated) {
  std::set<std::tuple<std::size_t, std::vector<std::size_t>, std::optional<std::size_t>>> kept;
  if (mark_eliminated)
    for (const auto& r : reduce_forest(f).rules) kept.insert({r.lhs, r.rhs, r.wrap});
  std::string out;
  for (const auto& r : f.rules) {
    out += f.rule_to_string(r);
    if (mark_eliminated && !kept.count({r.lhs, r.rhs, r.wrap})) out += " #eliminated";
    out += "\n";
  }
  return out;
}

}  // namespace tabparse
