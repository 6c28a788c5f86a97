#include "tabparse/grammar.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace tabparse {

namespace {

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Grammar Grammar::from_rules(
    const std::vector<std::pair<std::string, std::vector<std::string>>>& rules,
    std::vector<std::string>* warnings) {
  if (rules.empty()) throw GrammarError("empty grammar: no rules");

  Grammar g;
  std::set<std::string> lhs_names;
  for (const auto& [lhs, rhs] : rules) {
    if (lhs.empty()) throw GrammarError("empty left-hand side");
    lhs_names.insert(lhs);
  }
  auto intern = [&](const std::string& name) -> SymbolId {
    auto it = g.index_.find(name);
    if (it != g.index_.end()) return it->second;
    auto id = static_cast<SymbolId>(g.names_.size());
    g.names_.push_back(name);
    g.nonterminal_.push_back(lhs_names.count(name) != 0);
    g.index_.emplace(name, id);
    return id;
  };

  std::set<std::pair<SymbolId, std::vector<SymbolId>>> seen;
  for (const auto& [lhs, rhs] : rules) {
    Rule r;
    r.lhs = intern(lhs);
    for (const auto& tok : rhs) r.rhs.push_back(intern(tok));
    if (!seen.insert({r.lhs, r.rhs}).second) {
      if (warnings) {
        std::string text = lhs + " ->";
        for (const auto& tok : rhs) text += " " + tok;
        warnings->push_back("duplicate rule dropped: " + text);
      }
      continue;
    }
    g.rules_.push_back(std::move(r));
  }
  g.start_ = g.rules_.front().lhs;
  g.rules_by_lhs_.assign(g.names_.size(), {});
  for (std::size_t i = 0; i < g.rules_.size(); ++i) g.rules_by_lhs_[g.rules_[i].lhs].push_back(i);
  return g;
}

SymbolId Grammar::symbol(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) throw GrammarError("unknown symbol: " + std::string(name));
  return it->second;
}

bool Grammar::has_symbol(std::string_view name) const {
  return index_.count(std::string(name)) != 0;
}

const std::vector<std::size_t>& Grammar::rules_for(SymbolId lhs) const {
  return rules_by_lhs_.at(lhs);
}

std::vector<SymbolId> Grammar::terminals() const {
  std::vector<SymbolId> out;
  for (SymbolId s = 0; s < names_.size(); ++s)
    if (!nonterminal_[s]) out.push_back(s);
  return out;
}

std::vector<SymbolId> Grammar::nonterminals() const {
  std::vector<SymbolId> out;
  for (SymbolId s = 0; s < names_.size(); ++s)
    if (nonterminal_[s]) out.push_back(s);
  return out;
}

std::string Grammar::rule_to_string(std::size_t index) const {
  const Rule& r = rules_.at(index);
  std::string out = names_[r.lhs] + " ->";
  for (SymbolId s : r.rhs) out += " " + names_[s];
  return out;
}

std::string Grammar::to_text() const {
  std::string out;
  for (std::size_t i = 0; i < rules_.size(); ++i) out += rule_to_string(i) + "\n";
  return out;
}

bool Grammar::operator==(const Grammar& other) const {
  if (rules_.size() != other.rules_.size()) return false;
  if (names_[start_] != other.names_[other.start_]) return false;
  for (std::size_t i = 0; i < rules_.size(); ++i)
    if (rule_to_string(i) != other.rule_to_string(i)) return false;
  return names_ == other.names_ && nonterminal_ == other.nonterminal_;
}

Grammar parse_grammar(std::string_view text, std::vector<std::string>* warnings) {
  std::vector<std::pair<std::string, std::vector<std::string>>> rules;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    auto where = "line " + std::to_string(line_no) + ": ";
    if (tokens.front() == "->") throw GrammarError(where + "empty left-hand side");
    if (tokens.size() < 2 || tokens[1] != "->")
      throw GrammarError(where + "expected 'LHS -> RHS...'");
    std::vector<std::string> rhs(tokens.begin() + 2, tokens.end());
    if (std::find(rhs.begin(), rhs.end(), "->") != rhs.end())
      throw GrammarError(where + "unexpected '->' in right-hand side");
    rules.emplace_back(tokens.front(), std::move(rhs));
    if (end == text.size()) break;
  }
  return Grammar::from_rules(rules, warnings);
}

std::size_t grammar_size(const Grammar& g) {
  std::size_t total = 0;
  for (const auto& r : g.rules()) total += 1 + r.rhs.size();
  return total;
}

bool is_cnf(const Grammar& g) {
  for (const auto& r : g.rules()) {
    bool lexical = r.rhs.size() == 1 && g.is_terminal(r.rhs[0]);
    bool binary = r.rhs.size() == 2 && g.is_nonterminal(r.rhs[0]) && g.is_nonterminal(r.rhs[1]);
    if (!lexical && !binary) return false;
  }
  return true;
}

bool has_epsilon_rules(const Grammar& g) {
  return std::any_of(g.rules().begin(), g.rules().end(),
                     [](const Rule& r) { return r.rhs.empty(); });
}

Grammar augment_start(const Grammar& g) {
  SymbolId s = g.start();
  bool on_rhs = false;
  for (const auto& r : g.rules())
    if (std::find(r.rhs.begin(), r.rhs.end(), s) != r.rhs.end()) on_rhs = true;
  if (g.rules_for(s).size() == 1 && !on_rhs) return g;

  std::string fresh = g.name(s) + "'";
  while (g.has_symbol(fresh)) fresh += "'";

  std::vector<std::pair<std::string, std::vector<std::string>>> rules;
  rules.emplace_back(fresh, std::vector<std::string>{g.name(s)});
  for (const auto& r : g.rules()) {
    std::vector<std::string> rhs;
    for (SymbolId x : r.rhs) rhs.push_back(g.name(x));
    rules.emplace_back(g.name(r.lhs), std::move(rhs));
  }
  Grammar out = Grammar::from_rules(rules);
  out.synthetic_start_ = true;
  return out;
}

}  // namespace tabparse
