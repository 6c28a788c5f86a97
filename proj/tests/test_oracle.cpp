#include <doctest.h>

#include "fixtures.hpp"
#include "tabparse/oracle.hpp"

using namespace tabparse;

TEST_CASE("derivability on small examples") {
  Grammar e = fx::grammar(fx::kExpr);
  auto rel = oracle::derivable(e, fx::toks("a + a * a"));
  CHECK(rel.contains(e.symbol("E"), 0, 3));
  CHECK(rel.contains(e.symbol("S"), 0, 5));
  CHECK_FALSE(rel.contains(e.symbol("E"), 0, 2));
  CHECK(rel.contains(e.symbol("+"), 1, 2));

  Grammar c = fx::grammar(fx::kCnf);
  auto rc = oracle::derivable(c, fx::toks("a a b b"));
  CHECK(rc.contains(c.symbol("A"), 0, 3));
  CHECK(rc.contains(c.symbol("a"), 0, 1));
  CHECK(oracle::recognizes(c, fx::toks("a a b b")));
  CHECK_FALSE(oracle::recognizes(c, fx::toks("b a")));
}

TEST_CASE("nullable symbols derive empty spans") {
  Grammar g = fx::grammar("S -> A A\nA ->\nA -> a\n");
  auto rel = oracle::derivable(g, fx::toks("a"));
  CHECK(rel.contains(g.symbol("A"), 0, 0));
  CHECK(rel.contains(g.symbol("A"), 1, 1));
  CHECK(rel.contains(g.symbol("S"), 0, 1));
  CHECK(oracle::recognizes(g, {}));
}

TEST_CASE("prefix reachability") {
  Grammar g = fx::grammar(fx::kExpr);
  auto reach = oracle::prefix_reachable(g, fx::toks("a + a * a"));
  CHECK(reach.count({g.symbol("S"), 0}));
  CHECK(reach.count({g.symbol("E"), 2}));
  CHECK_FALSE(reach.count({g.symbol("S"), 2}));
  CHECK_FALSE(reach.count({g.symbol("E"), 1}));
}

TEST_CASE("tree enumeration") {
  CHECK(oracle::enumerate_trees(fx::grammar(fx::kExpr), fx::toks("a + a * a"), 100).size() == 2);
  auto trees = oracle::enumerate_trees(fx::grammar(fx::kCnf), fx::toks("a a b b"), 100);
  CHECK(trees.size() == 5);
  for (const auto& t : trees) CHECK(valid_tree(t, fx::grammar(fx::kCnf)));
  CHECK(oracle::enumerate_trees(fx::grammar(fx::kCnf), fx::toks("b a"), 100).empty());
  CHECK(oracle::enumerate_trees(fx::grammar(fx::kCnf), fx::toks("a a b b"), 2).size() == 2);
  // Cyclic grammars are cut off by depth.
  CHECK(oracle::enumerate_trees(fx::grammar(fx::kCyclic), fx::toks("a"), 100, 3).size() == 3);
  CHECK(oracle::default_max_depth(fx::grammar(fx::kCnf), 4) == 24);
}
