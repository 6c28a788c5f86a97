#include "tabparse/strategies.hpp"

#include <algorithm>

namespace tabparse {

bool is_complete(const Grammar& g, DottedRule d) {
  return d.dot >= g.rule(d.rule).rhs.size();
}

SymbolId goal(const Grammar& g, DottedRule d) {
  return g.rule(d.rule).rhs.at(d.dot);
}

DottedRule advance(DottedRule d) {
  return DottedRule{d.rule, d.dot + 1};
}

std::string format_dotted(const Grammar& g, DottedRule d) {
  const Rule& r = g.rule(d.rule);
  std::string out = g.name(r.lhs) + " ->";
  for (std::size_t k = 0; k <= r.rhs.size(); ++k) {
    if (k == d.dot) out += " .";
    if (k < r.rhs.size()) out += " " + g.name(r.rhs[k]);
  }
  return out;
}

namespace {

std::vector<std::size_t> dotted_offsets(const Grammar& g) {
  std::vector<std::size_t> offsets;
  std::size_t next = 0;
  for (const auto& r : g.rules()) {
    offsets.push_back(next);
    next += r.rhs.size() + 1;
  }
  offsets.push_back(next);
  return offsets;
}

std::vector<std::string> terminal_names(const Grammar& g) {
  std::vector<std::string> out;
  for (SymbolId s : g.terminals()) out.push_back(g.name(s));
  return out;
}

}  // namespace

StackSymbol topdown_symbol(const Grammar& g, DottedRule d) {
  return static_cast<StackSymbol>(dotted_offsets(g)[d.rule] + d.dot);
}

Pda compile_topdown(const Grammar& g) {
  const auto& start_rules = g.rules_for(g.start());
  if (start_rules.size() != 1)
    throw StrategyError("top-down strategy needs exactly one start rule; augment the grammar first");

  auto offsets = dotted_offsets(g);
  auto sym = [&](std::size_t rule, std::size_t dot) {
    return static_cast<StackSymbol>(offsets[rule] + dot);
  };

  std::vector<std::string> names;
  for (std::size_t r = 0; r < g.rules().size(); ++r)
    for (std::size_t dot = 0; dot <= g.rule(r).rhs.size(); ++dot)
      names.push_back("[" + format_dotted(g, DottedRule{r, dot}) + "]");

  auto alphabet = terminal_names(g);
  auto input_index = [&](SymbolId t) {
    for (InputSymbol a = 0; a < alphabet.size(); ++a)
      if (alphabet[a] == g.name(t)) return a;
    throw StrategyError("terminal missing from alphabet");
  };

  std::vector<Transition> ts;
  for (std::size_t r = 0; r < g.rules().size(); ++r) {
    const Rule& rule = g.rule(r);
    for (std::size_t dot = 0; dot < rule.rhs.size(); ++dot) {
      SymbolId x = rule.rhs[dot];
      bool completes = dot + 1 == rule.rhs.size();
      if (g.is_terminal(x)) {
        Transition scan{{sym(r, dot)}, {input_index(x)}, {sym(r, dot + 1)}, std::nullopt};
        if (completes) scan.completes_rule = r;
        ts.push_back(std::move(scan));
        continue;
      }
      for (std::size_t b : g.rules_for(x)) {
        Transition predict{{sym(r, dot)}, {}, {sym(r, dot), sym(b, 0)}, std::nullopt};
        if (g.rule(b).rhs.empty()) predict.completes_rule = b;
        ts.push_back(std::move(predict));
      }
      for (std::size_t b : g.rules_for(x)) {
        Transition complete{{sym(r, dot), sym(b, g.rule(b).rhs.size())}, {}, {sym(r, dot + 1)}, std::nullopt};
        if (completes) complete.completes_rule = r;
        ts.push_back(std::move(complete));
      }
    }
  }

  std::size_t s = start_rules.front();
  Pda pda(std::move(alphabet), std::move(names), sym(s, 0), sym(s, g.rule(s).rhs.size()), std::move(ts));
  if (g.rule(s).rhs.empty()) pda.set_initial_completes_rule(s);
  return pda;
}

Pda compile_bottomup(const Grammar& g) {
  for (std::size_t r = 0; r < g.rules().size(); ++r) {
    const Rule& rule = g.rule(r);
    bool lexical = rule.rhs.size() == 1 && g.is_terminal(rule.rhs[0]);
    bool binary = rule.rhs.size() == 2 && g.is_nonterminal(rule.rhs[0]) && g.is_nonterminal(rule.rhs[1]);
    if (!lexical && !binary)
      throw StrategyError("grammar is not in Chomsky normal form: " + g.rule_to_string(r));
  }

  std::vector<std::string> names;
  std::vector<StackSymbol> stack_of(g.symbol_count(), kBottom);
  for (SymbolId a : g.nonterminals()) {
    stack_of[a] = static_cast<StackSymbol>(names.size());
    names.push_back(g.name(a));
  }
  std::string floor = "$";
  while (g.has_symbol(floor)) floor += "'";
  auto floor_symbol = static_cast<StackSymbol>(names.size());
  names.push_back(floor);

  auto alphabet = terminal_names(g);
  std::vector<Transition> ts;
  for (std::size_t r = 0; r < g.rules().size(); ++r) {
    const Rule& rule = g.rule(r);
    if (rule.rhs.size() == 1) {
      auto a = static_cast<InputSymbol>(
          std::find(alphabet.begin(), alphabet.end(), g.name(rule.rhs[0])) - alphabet.begin());
      ts.push_back(Transition{{}, {a}, {stack_of[rule.lhs]}, r});
    } else {
      ts.push_back(Transition{{stack_of[rule.rhs[0]], stack_of[rule.rhs[1]]}, {}, {stack_of[rule.lhs]}, r});
    }
  }
  Pda pda(std::move(alphabet), std::move(names), floor_symbol, stack_of[g.start()], std::move(ts));
  pda.set_final_above_initial(true);
  return pda;
}

}  // namespace tabparse
