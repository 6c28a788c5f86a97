#include "tabparse/lr.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace tabparse {

ItemSet closure(const ItemSet& items, const Grammar& g) {
  std::set<DottedRule> out(items.begin(), items.end());
  std::vector<DottedRule> work(items.begin(), items.end());
  while (!work.empty()) {
    DottedRule d = work.back();
    work.pop_back();
    if (is_complete(g, d)) continue;
    SymbolId b = goal(g, d);
    if (!g.is_nonterminal(b)) continue;
    for (std::size_t r : g.rules_for(b)) {
      DottedRule fresh{r, 0};
      if (out.insert(fresh).second) work.push_back(fresh);
    }
  }
  return ItemSet(out.begin(), out.end());
}

ItemSet goto_set(const ItemSet& q, SymbolId x, const Grammar& g) {
  ItemSet kernel;
  for (DottedRule d : q)
    if (!is_complete(g, d) && goal(g, d) == x) kernel.push_back(advance(d));
  return closure(kernel, g);
}

std::optional<StateId> LrAutomaton::go(StateId q, SymbolId x) const {
  auto it = transitions.find({q, x});
  if (it == transitions.end()) return std::nullopt;
  return it->second;
}

LrAutomaton build_lr_automaton(const Grammar& g) {
  LrAutomaton a;
  ItemSet init;
  for (std::size_t r : g.rules_for(g.start())) init.push_back(DottedRule{r, 0});
  std::map<ItemSet, StateId> known;
  a.states.push_back(closure(init, g));
  known.emplace(a.states.front(), 0);

  for (StateId q = 0; q < a.states.size(); ++q) {
    for (SymbolId x = 0; x < g.symbol_count(); ++x) {
      ItemSet next = goto_set(a.states[q], x, g);
      if (next.empty()) continue;
      auto [it, fresh] = known.emplace(next, a.states.size());
      if (fresh) a.states.push_back(std::move(next));
      a.transitions.emplace(std::make_pair(q, x), it->second);
    }
  }
  return a;
}

std::string dump_lr_automaton(const LrAutomaton& a, const Grammar& g) {
  std::string out;
  for (StateId q = 0; q < a.states.size(); ++q) {
    out += "state " + std::to_string(q) + ":\n";
    for (DottedRule d : a.states[q]) out += "  " + format_dotted(g, d) + "\n";
  }
  for (StateId q = 0; q < a.states.size(); ++q)
    for (SymbolId x = 0; x < g.symbol_count(); ++x)
      if (auto to = a.go(q, x))
        out += "goto(" + std::to_string(q) + ", " + g.name(x) + ") = " + std::to_string(*to) + "\n";
  return out;
}

Pda compile_lr(const Grammar& g) {
  return compile_lr(g, build_lr_automaton(g));
}

Pda compile_lr(const Grammar& g, const LrAutomaton& a) {
  if (has_epsilon_rules(g))
    throw LrError("tabular LR does not support empty rules; use the earley or topdown algorithm");

  std::vector<std::string> names;
  for (StateId q = 0; q < a.states.size(); ++q) names.push_back("q" + std::to_string(q));
  auto final_symbol = static_cast<StackSymbol>(names.size());
  names.push_back("q_final");

  std::vector<std::string> alphabet;
  std::vector<InputSymbol> input_of(g.symbol_count(), kUnknownInput);
  for (SymbolId t : g.terminals()) {
    input_of[t] = static_cast<InputSymbol>(alphabet.size());
    alphabet.push_back(g.name(t));
  }
  auto st = [](StateId q) { return static_cast<StackSymbol>(q); };

  std::vector<Transition> ts;
  for (StateId q = 0; q < a.states.size(); ++q)
    for (SymbolId t : g.terminals())
      if (auto to = a.go(q, t)) ts.push_back(Transition{{st(q)}, {input_of[t]}, {st(q), st(*to)}, std::nullopt});

  // The chain q0 q1 ... qm popped by a reduction of A -> X1..Xm is fixed by
  // q_i = goto(q_{i-1}, X_i) once q0 is chosen.
  auto chain_from = [&](StateId q0, const Rule& rule) {
    std::vector<StackSymbol> chain{st(q0)};
    StateId q = q0;
    for (SymbolId x : rule.rhs) {
      auto next = a.go(q, x);
      if (!next) throw LrError("inconsistent goto chain");
      q = *next;
      chain.push_back(st(q));
    }
    return chain;
  };

  std::vector<Transition> accepts;
  for (StateId q0 = 0; q0 < a.states.size(); ++q0) {
    const ItemSet& items = a.states[q0];
    for (std::size_t r = 0; r < g.rules().size(); ++r) {
      if (!std::binary_search(items.begin(), items.end(), DottedRule{r, 0})) continue;
      const Rule& rule = g.rule(r);
      auto chain = chain_from(q0, rule);
      if (auto target = a.go(q0, rule.lhs))
        ts.push_back(Transition{chain, {}, {st(q0), st(*target)}, r});
      if (q0 == a.initial && rule.lhs == g.start())
        accepts.push_back(Transition{chain, {}, {final_symbol}, r});
    }
  }
  ts.insert(ts.end(), accepts.begin(), accepts.end());
  return Pda(std::move(alphabet), std::move(names), st(a.initial), final_symbol, std::move(ts));
}

Pda binarize_reductions(const Pda& p, const Grammar& g) {
  std::vector<std::string> names = p.stack_symbols();
  std::map<std::pair<std::size_t, std::size_t>, StackSymbol> aux;
  auto aux_symbol = [&](std::size_t rule, std::size_t remaining) {
    auto [it, fresh] = aux.emplace(std::make_pair(rule, remaining), static_cast<StackSymbol>(names.size()));
    if (fresh) names.push_back("[" + g.rule_to_string(rule) + " , " + std::to_string(remaining) + "]");
    return it->second;
  };

  std::vector<Transition> ts;
  std::set<std::tuple<std::vector<StackSymbol>, std::vector<InputSymbol>, std::vector<StackSymbol>>> seen;
  auto emit = [&](Transition t) {
    if (seen.insert({t.pop, t.read, t.push}).second) ts.push_back(std::move(t));
  };

  for (const auto& t : p.transitions()) {
    if (!t.completes_rule || t.pop.size() < 3) {
      emit(t);
      continue;
    }
    std::size_t r = *t.completes_rule;
    std::size_t m = t.pop.size() - 1;
    emit(Transition{{t.pop[m - 1], t.pop[m]}, {}, {aux_symbol(r, m - 2)}, std::nullopt});
    for (std::size_t k = m - 2; k >= 1; --k)
      emit(Transition{{t.pop[k], aux_symbol(r, k)}, {}, {aux_symbol(r, k - 1)}, std::nullopt});
    std::vector<StackSymbol> push = t.push;
    emit(Transition{{t.pop[0], aux_symbol(r, 0)}, {}, std::move(push), r});
  }
  Pda out(p.alphabet(), std::move(names), p.initial(), p.final(), std::move(ts));
  out.set_final_above_initial(p.final_above_initial());
  return out;
}

}  // namespace tabparse
