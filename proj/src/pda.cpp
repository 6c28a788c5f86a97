#include "tabparse/pda.hpp"

#include <algorithm>
#include <unordered_set>

namespace tabparse {

Pda::Pda(std::vector<std::string> alphabet, std::vector<std::string> stack_symbols,
         StackSymbol initial, StackSymbol final, std::vector<Transition> transitions)
    : alphabet_(std::move(alphabet)),
      stack_symbols_(std::move(stack_symbols)),
      initial_(initial),
      final_(final),
      transitions_(std::move(transitions)) {
  for (InputSymbol a = 0; a < alphabet_.size(); ++a)
    if (!alphabet_index_.emplace(alphabet_[a], a).second)
      throw PdaError("duplicate input symbol: " + alphabet_[a]);
  for (StackSymbol q = 0; q < stack_symbols_.size(); ++q)
    if (!stack_index_.emplace(stack_symbols_[q], q).second)
      throw PdaError("duplicate stack symbol: " + stack_symbols_[q]);
  if (initial_ >= stack_symbols_.size() || final_ >= stack_symbols_.size())
    throw PdaError("initial and final symbols must be stack symbols");
  for (const auto& t : transitions_) {
    auto bad_stack = [&](StackSymbol q) { return q >= stack_symbols_.size(); };
    if (std::any_of(t.pop.begin(), t.pop.end(), bad_stack) ||
        std::any_of(t.push.begin(), t.push.end(), bad_stack))
      throw PdaError("transition uses an unknown stack symbol");
    for (InputSymbol a : t.read)
      if (a >= alphabet_.size()) throw PdaError("transition reads an unknown input symbol");
  }
}

Pda Pda::from_names(std::vector<std::string> alphabet, std::vector<std::string> stack_symbols,
                    std::string_view initial, std::string_view final,
                    const std::vector<NamedTransition>& transitions) {
  auto find = [](const std::vector<std::string>& names, std::string_view n) {
    auto it = std::find(names.begin(), names.end(), n);
    if (it == names.end()) throw PdaError("unknown symbol: " + std::string(n));
    return static_cast<std::uint32_t>(it - names.begin());
  };
  std::vector<Transition> ts;
  for (const auto& nt : transitions) {
    Transition t;
    for (const auto& q : nt.pop) t.pop.push_back(find(stack_symbols, q));
    for (const auto& a : nt.read) t.read.push_back(find(alphabet, a));
    for (const auto& q : nt.push) t.push.push_back(find(stack_symbols, q));
    ts.push_back(std::move(t));
  }
  StackSymbol init = find(stack_symbols, initial);
  StackSymbol fin = find(stack_symbols, final);
  return Pda(std::move(alphabet), std::move(stack_symbols), init, fin, std::move(ts));
}

std::string Pda::symbol_name(StackSymbol s) const {
  if (s == kBottom) return "⊥";
  return stack_symbols_.at(s);
}

StackSymbol Pda::stack_symbol(std::string_view name) const {
  auto it = stack_index_.find(std::string(name));
  if (it == stack_index_.end()) throw PdaError("unknown stack symbol: " + std::string(name));
  return it->second;
}

std::optional<InputSymbol> Pda::input_symbol(std::string_view token) const {
  auto it = alphabet_index_.find(std::string(token));
  if (it == alphabet_index_.end()) return std::nullopt;
  return it->second;
}

std::vector<InputSymbol> Pda::encode(const std::vector<std::string>& tokens) const {
  std::vector<InputSymbol> out;
  out.reserve(tokens.size());
  for (const auto& tok : tokens) out.push_back(input_symbol(tok).value_or(kUnknownInput));
  return out;
}

std::string Pda::transition_to_string(const Transition& t) const {
  auto seq = [](const auto& xs, auto&& name) {
    if (xs.empty()) return std::string("eps");
    std::string out;
    for (auto x : xs) {
      if (!out.empty()) out += ' ';
      out += name(x);
    }
    return out;
  };
  auto stack_name = [&](StackSymbol q) { return stack_symbols_.at(q); };
  auto input_name = [&](InputSymbol a) { return alphabet_.at(a); };
  return seq(t.pop, stack_name) + " , " + seq(t.read, input_name) + " , " + seq(t.push, stack_name);
}

std::size_t pda_size(const Pda& p) {
  std::size_t total = 0;
  for (const auto& t : p.transitions()) total += t.pop.size() + t.read.size() + t.push.size();
  return total;
}

std::string dump_pda(const Pda& p) {
  std::string out = "init: " + p.symbol_name(p.initial()) + "\n";
  out += "final: " + p.symbol_name(p.final()) + "\n";
  for (const auto& t : p.transitions()) out += p.transition_to_string(t) + "\n";
  return out;
}

std::optional<Configuration> applicable(const Transition& t, const Configuration& c,
                                        std::span<const InputSymbol> input) {
  if (t.pop.size() > c.stack.size()) return std::nullopt;
  if (!std::equal(t.pop.begin(), t.pop.end(), c.stack.end() - static_cast<std::ptrdiff_t>(t.pop.size())))
    return std::nullopt;
  if (c.position + t.read.size() > input.size()) return std::nullopt;
  for (std::size_t k = 0; k < t.read.size(); ++k)
    if (input[c.position + k] != t.read[k]) return std::nullopt;

  Configuration next;
  next.stack.assign(c.stack.begin(), c.stack.end() - static_cast<std::ptrdiff_t>(t.pop.size()));
  next.stack.insert(next.stack.end(), t.push.begin(), t.push.end());
  next.position = c.position + t.read.size();
  return next;
}

bool is_accepting(const Pda& p, const Configuration& c, std::size_t n) {
  if (c.position != n) return false;
  if (p.final_above_initial())
    return c.stack.size() == 2 && c.stack[0] == p.initial() && c.stack[1] == p.final();
  return c.stack.size() == 1 && c.stack[0] == p.final();
}

SimulationLimits default_limits(const Pda& p, std::size_t input_length) {
  SimulationLimits limits;
  limits.max_stack_depth = 4 * (input_length + 1) * p.stack_symbol_count() + 8;
  return limits;
}

namespace {

std::string config_key(const Configuration& c) {
  std::string key(reinterpret_cast<const char*>(c.stack.data()), c.stack.size() * sizeof(StackSymbol));
  key.append(reinterpret_cast<const char*>(&c.position), sizeof(c.position));
  return key;
}

}  // namespace

SimulationResult simulate(const Pda& p, std::span<const InputSymbol> input,
                          const SimulationLimits& limits) {
  if (limits.max_steps == 0 || limits.max_stack_depth == 0 || limits.max_runs == 0)
    throw PdaError("simulation limits must be positive");

  SimulationResult result;
  if (std::find(input.begin(), input.end(), kUnknownInput) != input.end()) return result;

  struct Frame {
    Configuration config;
    std::size_t next = 0;
  };
  std::vector<Frame> path;
  std::unordered_set<std::string> on_path;
  bool truncated = false;
  const auto& transitions = p.transitions();
  const std::size_t n = input.size();

  auto record = [&] {
    Run run;
    run.reserve(path.size());
    for (const auto& f : path) run.push_back(f.config);
    result.runs.push_back(std::move(run));
  };

  path.push_back(Frame{Configuration{{p.initial()}, 0}});
  on_path.insert(config_key(path.back().config));
  if (is_accepting(p, path.back().config, n)) record();

  while (!path.empty() && result.runs.size() < limits.max_runs) {
    Frame& top = path.back();
    if (top.next == transitions.size()) {
      on_path.erase(config_key(top.config));
      path.pop_back();
      continue;
    }
    auto succ = applicable(transitions[top.next++], top.config, input);
    if (!succ) continue;
    if (++result.steps > limits.max_steps) {
      truncated = true;
      break;
    }
    if (succ->stack.size() > limits.max_stack_depth) {
      truncated = true;
      continue;
    }
    auto key = config_key(*succ);
    if (!on_path.insert(key).second) continue;
    bool accepting = is_accepting(p, *succ, n);
    path.push_back(Frame{std::move(*succ)});
    if (accepting) record();
  }

  if (!result.runs.empty())
    result.accepted = Verdict::yes;
  else
    result.accepted = truncated ? Verdict::bound_exceeded : Verdict::no;
  return result;
}

SimulationResult simulate(const Pda& p, const std::vector<std::string>& tokens,
                          const SimulationLimits& limits) {
  auto input = p.encode(tokens);
  return simulate(p, std::span<const InputSymbol>(input), limits);
}

SimulationResult simulate(const Pda& p, const std::vector<std::string>& tokens) {
  return simulate(p, tokens, default_limits(p, tokens.size()));
}

std::string format_configuration(const Pda& p, const Configuration& c) {
  std::string out;
  for (StackSymbol q : c.stack) {
    if (!out.empty()) out += ' ';
    out += p.symbol_name(q);
  }
  if (out.empty()) out = "eps";
  return out + " , " + std::to_string(c.position);
}

std::string format_run(const Pda& p, const Run& run) {
  std::string out;
  for (const auto& c : run) out += format_configuration(p, c) + "\n";
  return out;
}

}  // namespace tabparse
