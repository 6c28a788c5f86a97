#include <doctest.h>

#include "fixtures.hpp"
#include "tabparse/grammar.hpp"

using namespace tabparse;

TEST_CASE("symbols are interned in order of first appearance") {
  Grammar g = fx::grammar(fx::kExpr);
  REQUIRE(g.symbol_count() == 5);
  CHECK(g.name(0) == "S");
  CHECK(g.name(1) == "E");
  CHECK(g.name(2) == "*");
  CHECK(g.name(3) == "+");
  CHECK(g.name(4) == "a");
  CHECK(g.is_nonterminal(g.symbol("E")));
  CHECK(g.is_terminal(g.symbol("+")));
  CHECK(g.start() == g.symbol("S"));
  CHECK(g.rules_for(g.symbol("E")) == std::vector<std::size_t>{1, 2, 3});
}

TEST_CASE("grammar size counts lhs and rhs symbols") {
  CHECK(grammar_size(fx::grammar(fx::kExpr)) == 2 + 4 + 4 + 2);
  CHECK(grammar_size(fx::grammar("S ->\n")) == 1);
}

TEST_CASE("comments, blank lines and empty right-hand sides") {
  Grammar g = fx::grammar("# header\n\nS -> A b\n  A ->   \n");
  REQUIRE(g.rules().size() == 2);
  CHECK(g.rule(1).rhs.empty());
  CHECK(has_epsilon_rules(g));
  CHECK(g.rule_to_string(1) == "A ->");
}

TEST_CASE("malformed lines are rejected with the line number") {
  CHECK_THROWS_WITH_AS(fx::grammar("S -> a\n-> b\n"), "line 2: empty left-hand side", GrammarError);
  CHECK_THROWS_AS(fx::grammar("S a b\n"), GrammarError);
  CHECK_THROWS_AS(fx::grammar("S -> a -> b\n"), GrammarError);
  CHECK_THROWS_AS(fx::grammar("# nothing\n"), GrammarError);
}

TEST_CASE("duplicate rules are dropped with a warning") {
  std::vector<std::string> warnings;
  Grammar g = parse_grammar("S -> a\nS -> a\n", &warnings);
  CHECK(g.rules().size() == 1);
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0] == "duplicate rule dropped: S -> a");
}

TEST_CASE("normal form checks") {
  CHECK(is_cnf(fx::grammar(fx::kCnf)));
  CHECK_FALSE(is_cnf(fx::grammar(fx::kExpr)));
  CHECK_FALSE(is_cnf(fx::grammar("S -> A\nA -> a\n")));
  CHECK_FALSE(has_epsilon_rules(fx::grammar(fx::kLr)));
}

TEST_CASE("augmenting adds a fresh start rule only when needed") {
  Grammar plain = fx::grammar(fx::kExpr);
  Grammar same = augment_start(plain);
  CHECK(same == plain);
  CHECK_FALSE(same.synthetic_start());

  Grammar lr = augment_start(fx::grammar(fx::kLr));
  CHECK(lr.synthetic_start());
  CHECK(lr.name(lr.start()) == "S'");
  CHECK(lr.rule_to_string(0) == "S' -> S");
  CHECK(lr.rules().size() == 3);

  Grammar taken = augment_start(fx::grammar("S -> S S'\nS' -> a\nS -> a\n"));
  CHECK(taken.name(taken.start()) == "S''");
}

TEST_CASE("text round trip") {
  Grammar g = fx::grammar(fx::kCnf);
  CHECK(fx::grammar(g.to_text()) == g);
}
