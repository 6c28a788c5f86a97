#include "tabparse/engine.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

namespace tabparse {

std::string to_string(Shape s) {
  switch (s) {
    case Shape::F1: return "F1";
    case Shape::F2: return "F2";
    case Shape::F3: return "F3";
    case Shape::F4: return "F4";
    case Shape::F5: return "F5";
    case Shape::F6: return "F6";
    case Shape::F7: return "F7";
  }
  return "?";
}

Shape classify_transition(const Transition& t) {
  const auto& pop = t.pop;
  const auto& push = t.push;
  if (t.read.size() > 1) throw EngineError("transition reads more than one input symbol");
  bool reads = t.read.size() == 1;

  if (pop.empty()) {
    if (reads && push.size() == 1) return Shape::F6;
    throw EngineError("unsupported transition shape: empty pop");
  }
  if (pop.size() == 1 && push.size() == 2 && push[0] == pop[0]) return reads ? Shape::F1 : Shape::F4;
  if (pop.size() == 1 && push.size() == 1) return reads ? Shape::F2 : Shape::F5;
  if (pop.size() == 2 && push.size() == 2 && push[0] == pop[0]) return reads ? Shape::F2 : Shape::F5;
  if (pop.size() == 2 && push.size() == 1 && !reads) return Shape::F3;
  if (pop.size() >= 3 && !reads && (push.size() == 1 || (push.size() == 2 && push[0] == pop[0])))
    return Shape::F7;
  throw EngineError("unsupported transition shape");
}

std::size_t ItemHash::operator()(const Item& it) const noexcept {
  std::uint64_t a = (std::uint64_t{it.lower} << 32) | it.lower_pos;
  std::uint64_t b = (std::uint64_t{it.upper} << 32) | it.upper_pos;
  return std::hash<std::uint64_t>{}(a * 0x9E3779B97F4A7C15ULL ^ b);
}

namespace {

std::uint64_t key(StackSymbol s, std::size_t pos) {
  return (std::uint64_t{s} << 32) | static_cast<std::uint32_t>(pos);
}

const std::vector<ItemId>& lookup(const std::unordered_map<std::uint64_t, std::vector<ItemId>>& index,
                                  std::uint64_t k) {
  static const std::vector<ItemId> empty;
  auto it = index.find(k);
  return it == index.end() ? empty : it->second;
}

// A transition in engine form. Push rules have one antecedent x and yield
// (x.upper, i, pushed, i + |read|). Chain rules match a sequence of items:
// an optional "below" item whose upper is pop[0] (when the bottom of the pop
// is replaced), then arcs (pop[t-1], pop[t]) for t = 1 .. |pop|-1.
struct Compiled {
  Shape shape;
  bool push_rule = false;
  bool keeps_bottom = false;
  std::vector<StackSymbol> pop;
  std::optional<InputSymbol> read;
  StackSymbol result = 0;

  std::size_t slots() const { return keeps_bottom ? pop.size() - 1 : pop.size(); }
  // Chain position index -> pop index of the slot's upper symbol.
  std::size_t upper_of(std::size_t slot) const { return keeps_bottom ? slot + 1 : slot; }
};

Compiled compile(const Transition& t) {
  Compiled c;
  c.shape = classify_transition(t);
  c.pop = t.pop;
  if (!t.read.empty()) c.read = t.read[0];
  c.result = t.push.back();
  switch (c.shape) {
    case Shape::F1:
    case Shape::F4:
    case Shape::F6:
      c.push_rule = true;
      break;
    default:
      c.keeps_bottom = t.push.size() == 2;
      break;
  }
  return c;
}

struct ChainView {
  const std::vector<Item>& items;
  const std::unordered_map<std::uint64_t, std::vector<ItemId>>& by_upper;
  const std::unordered_map<std::uint64_t, std::vector<ItemId>>& by_lower;
};

bool fits(const Compiled& c, std::size_t slot, const Item& it) {
  std::size_t u = c.upper_of(slot);
  if (it.upper != c.pop[u]) return false;
  if (u == 0) return true;  // below slot, any lower
  return it.lower == c.pop[u - 1];
}

// Calls `emit(chain)` for every chain of index items with `x` at `slot`.
// Combinations where `x` also fills an earlier slot are skipped.
void chains_through(const Compiled& c, const ChainView& v, ItemId x, std::size_t slot,
                    std::span<const InputSymbol> input,
                    const std::function<void(const std::vector<ItemId>&)>& emit) {
  const std::size_t k = c.slots();
  std::vector<ItemId> chain(k);
  chain[slot] = x;

  std::function<void(std::size_t)> right;
  right = [&](std::size_t s) {
    if (s == k) {
      const Item& last = v.items[chain[k - 1]];
      if (c.read) {
        if (last.upper_pos >= input.size() || input[last.upper_pos] != *c.read) return;
      }
      emit(chain);
      return;
    }
    const Item& prev = v.items[chain[s - 1]];
    std::size_t u = c.upper_of(s);
    for (ItemId id : lookup(v.by_lower, key(c.pop[u - 1], prev.upper_pos))) {
      if (v.items[id].upper != c.pop[u]) continue;
      chain[s] = id;
      right(s + 1);
    }
  };

  std::function<void(std::size_t)> left;
  left = [&](std::size_t s) {
    // s is the slot to fill next, moving leftwards; s == k means done.
    if (s == k) {
      right(slot + 1);
      return;
    }
    const Item& next = v.items[chain[s + 1]];
    std::size_t u = c.upper_of(s);
    for (ItemId id : lookup(v.by_upper, key(c.pop[u], next.lower_pos))) {
      if (id == x) continue;
      if (u > 0 && v.items[id].lower != c.pop[u - 1]) continue;
      chain[s] = id;
      left(s == 0 ? k : s - 1);
    }
  };

  left(slot == 0 ? k : slot - 1);
}

Item chain_consequent(const Compiled& c, const std::vector<Item>& items, const std::vector<ItemId>& chain) {
  const Item& first = items[chain.front()];
  const Item& last = items[chain.back()];
  std::uint32_t end = last.upper_pos + (c.read ? 1 : 0);
  if (c.keeps_bottom) return Item{c.pop[0], first.lower_pos, c.result, end};
  return Item{first.lower, first.lower_pos, c.result, end};
}

}  // namespace

std::optional<ItemId> Chart::find(const Item& it) const {
  auto f = index_.find(it);
  if (f == index_.end()) return std::nullopt;
  return f->second;
}

const std::vector<ItemId>& Chart::with_upper(StackSymbol upper, std::size_t pos) const {
  return lookup(by_upper_, key(upper, pos));
}

const std::vector<ItemId>& Chart::with_lower(StackSymbol lower, std::size_t pos) const {
  return lookup(by_lower_, key(lower, pos));
}

class TabularRun {
public:
  TabularRun(const Pda& p, std::span<const InputSymbol> input, const EngineOptions& options)
      : p_(p), options_(options) {
    chart_.input_.assign(input.begin(), input.end());
    const auto& ts = p.transitions();
    for (std::size_t t = 0; t < ts.size(); ++t) compiled_.push_back(compile(ts[t]));
    by_symbol_.resize(p.stack_symbol_count());
    for (std::size_t t = 0; t < compiled_.size(); ++t) {
      const Compiled& c = compiled_[t];
      if (c.push_rule) {
        if (c.pop.empty())
          any_upper_.push_back(t);
        else
          by_symbol_[c.pop[0]].push_back({t, 0});
        continue;
      }
      for (std::size_t s = 0; s < c.slots(); ++s) by_symbol_[c.pop[c.upper_of(s)]].push_back({t, s});
    }
  }

  Chart run() {
    Justification axiom;
    add(Item{kBottom, 0, p_.initial(), 0}, std::move(axiom));
    while (!agenda_.empty()) {
      ItemId x;
      if (options_.order == AgendaOrder::lifo) {
        x = agenda_.back();
        agenda_.pop_back();
      } else {
        x = agenda_.front();
        agenda_.pop_front();
      }
      process(x);
    }
    return std::move(chart_);
  }

private:
  void add(const Item& it, Justification j) {
    auto [pos, fresh] = chart_.index_.emplace(it, static_cast<ItemId>(chart_.items_.size()));
    if (fresh) {
      chart_.items_.push_back(it);
      chart_.justifications_.emplace_back();
      agenda_.push_back(pos->second);
    }
    auto& js = chart_.justifications_[pos->second];
    if (js.size() < options_.max_justifications) js.push_back(std::move(j));
  }

  void fire(std::size_t t, std::vector<ItemId> antecedents, const Item& consequent) {
    ++chart_.fired_;
    add(consequent, Justification{compiled_[t].shape, t, std::move(antecedents)});
  }

  void process(ItemId x) {
    const Item it = chart_.items_[x];
    chart_.by_upper_[key(it.upper, it.upper_pos)].push_back(x);
    chart_.by_lower_[key(it.lower, it.lower_pos)].push_back(x);

    auto push_rule = [&](std::size_t t) {
      const Compiled& c = compiled_[t];
      std::uint32_t i = it.upper_pos;
      if (c.read && (i >= chart_.input_.size() || chart_.input_[i] != *c.read)) return;
      fire(t, {x}, Item{it.upper, i, c.result, i + (c.read ? 1u : 0u)});
    };

    for (std::size_t t : any_upper_) push_rule(t);
    if (it.upper == kBottom) return;
    ChainView view{chart_.items_, chart_.by_upper_, chart_.by_lower_};
    for (auto [t, slot] : by_symbol_[it.upper]) {
      const Compiled& c = compiled_[t];
      if (c.push_rule) {
        push_rule(t);
        continue;
      }
      if (!fits(c, slot, it)) continue;
      std::vector<std::pair<std::vector<ItemId>, Item>> found;
      chains_through(c, view, x, slot, chart_.input_, [&](const std::vector<ItemId>& chain) {
        found.emplace_back(chain, chain_consequent(c, chart_.items_, chain));
      });
      // Firing grows the item list, so collect first.
      for (auto& [chain, consequent] : found) fire(t, std::move(chain), consequent);
    }
  }

  const Pda& p_;
  EngineOptions options_;
  Chart chart_;
  std::vector<Compiled> compiled_;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> by_symbol_;
  std::vector<std::size_t> any_upper_;
  std::deque<ItemId> agenda_;
};

Chart run_tabular(const Pda& p, std::span<const InputSymbol> input, const EngineOptions& options) {
  return TabularRun(p, input, options).run();
}

Chart run_tabular(const Pda& p, const std::vector<std::string>& tokens, const EngineOptions& options) {
  auto input = p.encode(tokens);
  return run_tabular(p, std::span<const InputSymbol>(input), options);
}

Item accept_item(const Pda& p, std::size_t n) {
  auto end = static_cast<std::uint32_t>(n);
  if (p.final_above_initial()) return Item{p.initial(), 0, p.final(), end};
  return Item{kBottom, 0, p.final(), end};
}

bool recognized(const Chart& c, const Pda& p, std::size_t n) {
  return c.contains(accept_item(p, n));
}

std::vector<ChainInference> reduction_expand(const Chart& c, const Pda& p, ItemId item,
                                             std::size_t transition) {
  Compiled comp = compile(p.transitions().at(transition));
  if (comp.push_rule) throw EngineError("reduction_expand needs a multi-pop transition");
  std::unordered_map<std::uint64_t, std::vector<ItemId>> by_upper, by_lower;
  for (ItemId id = 0; id < c.items().size(); ++id) {
    const Item& it = c.item(id);
    by_upper[key(it.upper, it.upper_pos)].push_back(id);
    by_lower[key(it.lower, it.lower_pos)].push_back(id);
  }
  ChainView view{c.items(), by_upper, by_lower};
  std::set<std::vector<ItemId>> seen;
  std::vector<ChainInference> out;
  const Item& it = c.item(item);
  for (std::size_t slot = 0; slot < comp.slots(); ++slot) {
    if (!fits(comp, slot, it)) continue;
    chains_through(comp, view, item, slot, c.input(), [&](const std::vector<ItemId>& chain) {
      if (seen.insert(chain).second) out.push_back({chain, chain_consequent(comp, c.items(), chain)});
    });
  }
  return out;
}

std::string format_item(const Pda& p, const Item& it) {
  return "( " + p.symbol_name(it.lower) + " , " + std::to_string(it.lower_pos) + " , " +
         p.symbol_name(it.upper) + " , " + std::to_string(it.upper_pos) + " )";
}

std::string dump_chart(const Chart& c, const Pda& p) {
  std::vector<Item> items = c.items();
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    return std::tie(a.upper_pos, a.lower_pos, a.upper, a.lower) <
           std::tie(b.upper_pos, b.lower_pos, b.upper, b.lower);
  });
  std::string out;
  for (const auto& it : items) out += format_item(p, it) + "\n";
  return out;
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string chart_to_dot(const Chart& c, const Pda& p) {
  std::map<std::size_t, std::set<StackSymbol>> nodes;
  for (const auto& it : c.items()) {
    nodes[it.lower_pos].insert(it.lower);
    nodes[it.upper_pos].insert(it.upper);
  }
  auto node = [&](std::size_t pos, StackSymbol s) {
    return dot_quote("p" + std::to_string(pos) + "_" + p.symbol_name(s));
  };
  std::string out = "digraph chart {\n  rankdir=RL;\n";
  for (const auto& [pos, syms] : nodes) {
    out += "  subgraph cluster_" + std::to_string(pos) + " {\n";
    out += "    label=" + dot_quote(std::to_string(pos)) + ";\n";
    for (StackSymbol s : syms) out += "    " + node(pos, s) + " [label=" + dot_quote(p.symbol_name(s)) + "];\n";
    out += "  }\n";
  }
  for (const auto& it : c.items())
    out += "  " + node(it.upper_pos, it.upper) + " -> " + node(it.lower_pos, it.lower) + ";\n";
  return out + "}\n";
}

}  // namespace tabparse
