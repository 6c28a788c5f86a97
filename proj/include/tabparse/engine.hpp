#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "tabparse/pda.hpp"

namespace tabparse {

class EngineError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Transition shapes the tabulation engine handles.
//   F1 <q1, a, q1 q2>      F2 <q1 q2, a, q1 q3> (or <q2, a, q3>)
//   F3 <q1 q2, eps, q3>    F4 <q1, eps, q1 q2>
//   F5 <q1 q2, eps, q1 q3> (or <q2, eps, q3>)
//   F6 <eps, a, q>         F7 <q0 ... qm, eps, q0 q'> or <q0 ... qm, eps, q'>, m >= 2
enum class Shape { F1, F2, F3, F4, F5, F6, F7 };

std::string to_string(Shape s);

// Throws EngineError for shapes outside the list above.
Shape classify_transition(const Transition& t);

// An arc of the configuration graph: `upper` sits directly on top of `lower`,
// where `lower` became topmost at `lower_pos` and `upper` is topmost at
// `upper_pos`.
struct Item {
  StackSymbol lower = kBottom;
  std::uint32_t lower_pos = 0;
  StackSymbol upper = 0;
  std::uint32_t upper_pos = 0;

  bool operator==(const Item&) const = default;
};

struct ItemHash {
  std::size_t operator()(const Item& it) const noexcept;
};

using ItemId = std::uint32_t;

struct Justification {
  // Both empty for the axiom.
  std::optional<Shape> rule;
  std::optional<std::size_t> transition;
  std::vector<ItemId> antecedents;

  bool operator==(const Justification&) const = default;
};

enum class AgendaOrder { lifo, fifo };

struct EngineOptions {
  AgendaOrder order = AgendaOrder::lifo;
  // Justifications kept per item; further ones are still counted as fired.
  std::size_t max_justifications = std::numeric_limits<std::size_t>::max();
};

// The table of derived items with back-links. Produced by run_tabular and
// read-only afterwards.
class Chart {
public:
  std::size_t input_length() const { return input_.size(); }
  std::span<const InputSymbol> input() const { return input_; }
  const std::vector<Item>& items() const { return items_; }
  const Item& item(ItemId id) const { return items_.at(id); }
  const std::vector<Justification>& justifications(ItemId id) const { return justifications_.at(id); }
  std::optional<ItemId> find(const Item& it) const;
  bool contains(const Item& it) const { return find(it).has_value(); }

  // Successful inference applications, counting ones whose consequent was
  // already present.
  std::size_t fired() const { return fired_; }

  // Items with the given upper symbol at the given position.
  const std::vector<ItemId>& with_upper(StackSymbol upper, std::size_t pos) const;
  // Items with the given lower symbol at the given position.
  const std::vector<ItemId>& with_lower(StackSymbol lower, std::size_t pos) const;

private:
  friend class TabularRun;

  std::vector<InputSymbol> input_;
  std::vector<Item> items_;
  std::vector<std::vector<Justification>> justifications_;
  std::unordered_map<Item, ItemId, ItemHash> index_;
  std::unordered_map<std::uint64_t, std::vector<ItemId>> by_upper_;
  std::unordered_map<std::uint64_t, std::vector<ItemId>> by_lower_;
  std::size_t fired_ = 0;
};

// Least fixed point of the deduction system seeded with (⊥, 0, initial, 0).
// An item taken from the agenda is combined in every antecedent position, so
// items with equal positions need no special treatment.
Chart run_tabular(const Pda& p, std::span<const InputSymbol> input, const EngineOptions& options = {});
Chart run_tabular(const Pda& p, const std::vector<std::string>& tokens, const EngineOptions& options = {});

// (⊥, 0, final, n), or (initial, 0, final, n) for PDAs that accept with the
// initial symbol left at the bottom.
Item accept_item(const Pda& p, std::size_t n);
bool recognized(const Chart& c, const Pda& p, std::size_t n);

struct ChainInference {
  std::vector<ItemId> antecedents;
  Item consequent;
};

// All inferences of a multi-pop transition (shapes F2, F3, F5, F7) that use
// `item` in some antecedent position, over the items of a finished chart.
std::vector<ChainInference> reduction_expand(const Chart& c, const Pda& p, ItemId item,
                                             std::size_t transition);

// One "( lower , j , upper , i )" line per item, sorted by (i, j, upper, lower).
std::string dump_chart(const Chart& c, const Pda& p);
std::string format_item(const Pda& p, const Item& it);

// Graphviz digraph: one node per (position, stack symbol), one edge per item,
// nodes grouped by position.
std::string chart_to_dot(const Chart& c, const Pda& p);

}  // namespace tabparse
