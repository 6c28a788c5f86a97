#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "tabparse/grammar.hpp"
#include "tabparse/pda.hpp"

namespace fx {

inline constexpr const char* kExpr = "S -> E\nE -> E * E\nE -> E + E\nE -> a\n";
inline constexpr const char* kSum = "E -> E + E\nE -> a\n";
inline constexpr const char* kCnf = "S -> S S\nS -> A A\nS -> b\nA -> A S\nA -> A A\nA -> a\n";
inline constexpr const char* kLr = "S -> S + S\nS -> a\n";
inline constexpr const char* kCyclic = "S -> S\nS -> a\n";

inline tabparse::Grammar grammar(std::string_view text) { return tabparse::parse_grammar(text); }

inline std::vector<std::string> toks(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

// "a + a + ... + a" with k operands.
inline std::vector<std::string> sum_input(std::size_t k) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < k; ++i) {
    if (i) out.push_back("+");
    out.push_back("a");
  }
  return out;
}

// Nondeterministic automaton accepting "a b c d" along two runs.
inline tabparse::Pda abcd_pda() {
  using NT = tabparse::NamedTransition;
  std::vector<std::string> q;
  for (int i = 0; i <= 9; ++i) q.push_back("q" + std::to_string(i));
  std::vector<NT> ts = {
      NT{{"q0"}, {"a"}, {"q0", "q1"}}, NT{{"q0", "q1"}, {"b"}, {"q0", "q2"}},
      NT{{"q0", "q1"}, {"b"}, {"q0", "q3"}}, NT{{"q2"}, {"c"}, {"q2", "q4"}},
      NT{{"q3"}, {"c"}, {"q3", "q4"}}, NT{{"q4"}, {"d"}, {"q4", "q5"}},
      NT{{"q4", "q5"}, {}, {"q6"}}, NT{{"q2", "q6"}, {}, {"q7"}},
      NT{{"q0", "q7"}, {}, {"q9"}}, NT{{"q3", "q6"}, {}, {"q8"}},
      NT{{"q0", "q8"}, {}, {"q9"}},
  };
  return tabparse::Pda::from_names({"a", "b", "c", "d"}, q, "q0", "q9", ts);
}

}  // namespace fx
