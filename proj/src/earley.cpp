#include "tabparse/earley.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>

namespace tabparse {

std::string to_string(EarleyStep s) {
  switch (s) {
    case EarleyStep::initializer: return "initializer";
    case EarleyStep::predictor: return "predictor";
    case EarleyStep::scanner: return "scanner";
    case EarleyStep::completer: return "completer";
  }
  return "?";
}

namespace {

std::uint64_t item_key(const EarleyItem& it) {
  return (std::uint64_t{it.from} << 44) | (std::uint64_t{it.to} << 24) |
         (static_cast<std::uint64_t>(it.dotted.rule) << 8) | static_cast<std::uint64_t>(it.dotted.dot);
}

std::uint64_t pos_key(std::size_t pos, SymbolId s) {
  return (static_cast<std::uint64_t>(pos) << 32) | s;
}

}  // namespace

std::optional<std::size_t> EarleyChart::find(const EarleyItem& it) const {
  auto f = index_.find(item_key(it));
  if (f == index_.end()) return std::nullopt;
  for (std::size_t id : f->second)
    if (items_[id] == it) return id;
  return std::nullopt;
}

std::vector<DottedRule> EarleyChart::cell(std::size_t j, std::size_t i) const {
  std::vector<DottedRule> out;
  for (const auto& it : items_)
    if (it.from == j && it.to == i) out.push_back(it.dotted);
  std::sort(out.begin(), out.end());
  return out;
}

class EarleyRun {
public:
  EarleyRun(const Grammar& g, const std::vector<std::string>& tokens) : g_(g) {
    if (g.rules_for(g.start()).size() != 1)
      throw GrammarError("Earley parsing needs exactly one start rule; augment the grammar first");
    for (const auto& tok : tokens) {
      SymbolId s = std::numeric_limits<SymbolId>::max();
      if (g.has_symbol(tok) && g.is_terminal(g.symbol(tok))) s = g.symbol(tok);
      chart_.input_.push_back(s);
    }
  }

  EarleyChart run() {
    add(EarleyItem{0, DottedRule{g_.rules_for(g_.start()).front(), 0}, 0},
        EarleyJustification{EarleyStep::initializer, {}});
    while (!agenda_.empty()) {
      std::size_t x = agenda_.back();
      agenda_.pop_back();
      process(x);
    }
    return std::move(chart_);
  }

private:
  void add(const EarleyItem& it, EarleyJustification j) {
    std::size_t id;
    if (auto found = chart_.find(it)) {
      id = *found;
    } else {
      id = chart_.items_.size();
      chart_.items_.push_back(it);
      chart_.justifications_.emplace_back();
      chart_.index_[item_key(it)].push_back(id);
      agenda_.push_back(id);
    }
    chart_.justifications_[id].push_back(std::move(j));
  }

  void fire(EarleyStep step, std::vector<std::size_t> antecedents, const EarleyItem& consequent) {
    ++chart_.fired_;
    add(consequent, EarleyJustification{step, std::move(antecedents)});
  }

  void process(std::size_t x) {
    const EarleyItem it = chart_.items_[x];
    const Rule& rule = g_.rule(it.dotted.rule);

    if (is_complete(g_, it.dotted)) {
      completed_[pos_key(it.from, rule.lhs)].push_back(x);
      auto waiting = waiting_[pos_key(it.from, rule.lhs)];
      for (std::size_t w : waiting) {
        const EarleyItem& wi = chart_.items_[w];
        fire(EarleyStep::completer, {w, x}, EarleyItem{wi.from, advance(wi.dotted), it.to});
      }
      return;
    }

    SymbolId b = goal(g_, it.dotted);
    if (g_.is_terminal(b)) {
      if (it.to < chart_.input_.size() && chart_.input_[it.to] == b)
        fire(EarleyStep::scanner, {x}, EarleyItem{it.from, advance(it.dotted), it.to + 1});
      return;
    }

    waiting_[pos_key(it.to, b)].push_back(x);
    for (std::size_t r : g_.rules_for(b))
      fire(EarleyStep::predictor, {x}, EarleyItem{it.to, DottedRule{r, 0}, it.to});
    auto done = completed_[pos_key(it.to, b)];
    for (std::size_t c : done) {
      const EarleyItem& ci = chart_.items_[c];
      fire(EarleyStep::completer, {x, c}, EarleyItem{it.from, advance(it.dotted), ci.to});
    }
  }

  const Grammar& g_;
  EarleyChart chart_;
  std::vector<std::size_t> agenda_;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> waiting_;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> completed_;
};

EarleyChart earley_parse(const Grammar& g, const std::vector<std::string>& tokens) {
  return EarleyRun(g, tokens).run();
}

std::optional<std::size_t> earley_final_item(const EarleyChart& c, const Grammar& g) {
  const auto& start_rules = g.rules_for(g.start());
  if (start_rules.size() != 1) return std::nullopt;
  std::size_t r = start_rules.front();
  return c.find(EarleyItem{0, DottedRule{r, g.rule(r).rhs.size()},
                           static_cast<std::uint32_t>(c.input_length())});
}

bool earley_recognized(const EarleyChart& c, const Grammar& g, std::size_t n) {
  if (n != c.input_length()) return false;
  return earley_final_item(c, g).has_value();
}

std::size_t earley_ambiguous_final(const EarleyChart& c, const Grammar& g) {
  auto id = earley_final_item(c, g);
  if (!id) return 0;
  const auto& js = c.justifications(*id);
  std::vector<EarleyJustification> distinct;
  for (const auto& j : js)
    if (std::find(distinct.begin(), distinct.end(), j) == distinct.end()) distinct.push_back(j);
  return distinct.size();
}

std::string dump_earley(const EarleyChart& c, const Grammar& g) {
  std::map<std::pair<std::size_t, std::size_t>, std::vector<DottedRule>> cells;
  for (const auto& it : c.items()) cells[{it.from, it.to}].push_back(it.dotted);
  std::string out;
  for (auto& [span, rules] : cells) {
    std::sort(rules.begin(), rules.end());
    out += "T[" + std::to_string(span.first) + "," + std::to_string(span.second) + "]: ";
    for (std::size_t k = 0; k < rules.size(); ++k) {
      if (k) out += ", ";
      out += format_dotted(g, rules[k]);
    }
    out += "\n";
  }
  return out;
}

}  // namespace tabparse
