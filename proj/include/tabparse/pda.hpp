#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace tabparse {

using StackSymbol = std::uint32_t;
using InputSymbol = std::uint32_t;

// The imaginary symbol below the bottom of every stack. Never a member of
// a Pda's stack alphabet.
inline constexpr StackSymbol kBottom = std::numeric_limits<StackSymbol>::max();
// Encoding of an input token outside the alphabet; matches no transition.
inline constexpr InputSymbol kUnknownInput = std::numeric_limits<InputSymbol>::max();

class PdaError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// <pop, read, push>; stacks grow to the right, so pop.back() is the top.
struct Transition {
  std::vector<StackSymbol> pop;
  std::vector<InputSymbol> read;
  std::vector<StackSymbol> push;
  // Grammar rule whose analysis this step completes; used when turning item
  // derivations back into parse trees.
  std::optional<std::size_t> completes_rule;

  bool operator==(const Transition&) const = default;
};

struct NamedTransition {
  std::vector<std::string> pop;
  std::vector<std::string> read;
  std::vector<std::string> push;
};

// A push-down automaton without states: (alphabet, stack symbols, initial,
// final, transitions).
class Pda {
public:
  Pda(std::vector<std::string> alphabet, std::vector<std::string> stack_symbols,
      StackSymbol initial, StackSymbol final, std::vector<Transition> transitions);

  static Pda from_names(std::vector<std::string> alphabet,
                        std::vector<std::string> stack_symbols, std::string_view initial,
                        std::string_view final, const std::vector<NamedTransition>& transitions);

  const std::vector<std::string>& alphabet() const { return alphabet_; }
  const std::vector<std::string>& stack_symbols() const { return stack_symbols_; }
  std::size_t stack_symbol_count() const { return stack_symbols_.size(); }
  StackSymbol initial() const { return initial_; }
  StackSymbol final() const { return final_; }
  const std::vector<Transition>& transitions() const { return transitions_; }

  // By default recognition means the stack holds exactly the final symbol.
  // When set, the stack must hold exactly initial·final instead.
  bool final_above_initial() const { return final_above_initial_; }
  void set_final_above_initial(bool v) { final_above_initial_ = v; }

  // Set when the initial symbol already stands for a completed rule (a start
  // rule with an empty right-hand side).
  std::optional<std::size_t> initial_completes_rule() const { return initial_completes_rule_; }
  void set_initial_completes_rule(std::size_t rule) { initial_completes_rule_ = rule; }

  // "⊥" for kBottom.
  std::string symbol_name(StackSymbol s) const;
  StackSymbol stack_symbol(std::string_view name) const;
  std::optional<InputSymbol> input_symbol(std::string_view token) const;
  std::vector<InputSymbol> encode(const std::vector<std::string>& tokens) const;

  std::string transition_to_string(const Transition& t) const;

private:
  std::vector<std::string> alphabet_;
  std::vector<std::string> stack_symbols_;
  std::unordered_map<std::string, InputSymbol> alphabet_index_;
  std::unordered_map<std::string, StackSymbol> stack_index_;
  StackSymbol initial_;
  StackSymbol final_;
  std::vector<Transition> transitions_;
  bool final_above_initial_ = false;
  std::optional<std::size_t> initial_completes_rule_;
};

// Σ over transitions of |pop| + |read| + |push|.
std::size_t pda_size(const Pda& p);

// "init: q", "final: q", then one "pop , read , push" line per transition.
std::string dump_pda(const Pda& p);

struct Configuration {
  std::vector<StackSymbol> stack;
  std::size_t position = 0;

  bool operator==(const Configuration&) const = default;
};

using Run = std::vector<Configuration>;

// The successor of `c` under `t`, if `t` applies.
std::optional<Configuration> applicable(const Transition& t, const Configuration& c,
                                        std::span<const InputSymbol> input);

bool is_accepting(const Pda& p, const Configuration& c, std::size_t n);

struct SimulationLimits {
  std::size_t max_steps = 1'000'000;
  std::size_t max_stack_depth = 64;
  std::size_t max_runs = 64;
};

SimulationLimits default_limits(const Pda& p, std::size_t input_length);

enum class Verdict { yes, no, bound_exceeded };

struct SimulationResult {
  Verdict accepted = Verdict::no;
  std::vector<Run> runs;
  std::size_t steps = 0;
};

// Exhaustive depth-first search over the step relation, trying transitions in
// declaration order. Configurations repeated along the current path are
// pruned.
SimulationResult simulate(const Pda& p, std::span<const InputSymbol> input,
                          const SimulationLimits& limits);
SimulationResult simulate(const Pda& p, const std::vector<std::string>& tokens,
                          const SimulationLimits& limits);
SimulationResult simulate(const Pda& p, const std::vector<std::string>& tokens);

// "q0 q2 q4 , 3"
std::string format_configuration(const Pda& p, const Configuration& c);
std::string format_run(const Pda& p, const Run& run);

}  // namespace tabparse
