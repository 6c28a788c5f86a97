#include <doctest.h>

#include "fixtures.hpp"
#include "tabparse/pda.hpp"

using namespace tabparse;

TEST_CASE("example automaton size and dump") {
  Pda p = fx::abcd_pda();
  CHECK(pda_size(p) == 41);
  std::string dump = dump_pda(p);
  CHECK(dump.rfind("init: q0\nfinal: q9\nq0 , a , q0 q1\n", 0) == 0);
  CHECK(dump.find("q4 q5 , eps , q6\n") != std::string::npos);
}

TEST_CASE("constructor validation") {
  CHECK_THROWS_AS(Pda({"a", "a"}, {"q"}, 0, 0, {}), PdaError);
  CHECK_THROWS_AS(Pda({"a"}, {"q"}, 0, 1, {}), PdaError);
  CHECK_THROWS_AS(Pda({"a"}, {"q"}, 0, 0, {Transition{{0}, {1}, {0}, std::nullopt}}), PdaError);
  CHECK_THROWS_AS(Pda::from_names({"a"}, {"q"}, "q", "r", {}), PdaError);
}

TEST_CASE("applicable checks the top of the stack and the next token") {
  Pda p = fx::abcd_pda();
  auto input = p.encode(fx::toks("a b c d"));
  Configuration start{{p.initial()}, 0};
  auto next = applicable(p.transitions()[0], start, input);
  REQUIRE(next);
  CHECK(format_configuration(p, *next) == "q0 q1 , 1");
  CHECK_FALSE(applicable(p.transitions()[1], start, input));
  CHECK_FALSE(applicable(p.transitions()[0], *next, input));
}

TEST_CASE("simulation finds both accepting runs in declaration order") {
  Pda p = fx::abcd_pda();
  auto result = simulate(p, fx::toks("a b c d"));
  REQUIRE(result.accepted == Verdict::yes);
  REQUIRE(result.runs.size() == 2);
  CHECK(format_run(p, result.runs[0]) ==
        "q0 , 0\nq0 q1 , 1\nq0 q2 , 2\nq0 q2 q4 , 3\nq0 q2 q4 q5 , 4\nq0 q2 q6 , 4\nq0 q7 , 4\nq9 , 4\n");
  CHECK(format_run(p, result.runs[1]) ==
        "q0 , 0\nq0 q1 , 1\nq0 q3 , 2\nq0 q3 q4 , 3\nq0 q3 q4 q5 , 4\nq0 q3 q6 , 4\nq0 q8 , 4\nq9 , 4\n");
}

TEST_CASE("simulation verdicts") {
  Pda p = fx::abcd_pda();
  CHECK(simulate(p, fx::toks("a b c")).accepted == Verdict::no);
  CHECK(simulate(p, fx::toks("a b c d d")).accepted == Verdict::no);
  CHECK(simulate(p, fx::toks("a x c d")).accepted == Verdict::no);
  CHECK(simulate(p, std::vector<std::string>{}).accepted == Verdict::no);

  SimulationLimits tight;
  tight.max_stack_depth = 2;
  CHECK(simulate(p, fx::toks("a b c d"), tight).accepted == Verdict::bound_exceeded);

  SimulationLimits one;
  one.max_runs = 1;
  CHECK(simulate(p, fx::toks("a b c d"), one).runs.size() == 1);

  SimulationLimits zero;
  zero.max_steps = 0;
  CHECK_THROWS_AS(simulate(p, fx::toks("a"), zero), PdaError);
}

TEST_CASE("empty input is accepted when the initial symbol is final") {
  Pda p({"a"}, {"q"}, 0, 0, {});
  auto r = simulate(p, std::vector<std::string>{});
  CHECK(r.accepted == Verdict::yes);
  CHECK(r.runs.size() == 1);
}

TEST_CASE("repeated configurations on a path are pruned") {
  // q -> q' -> q loops without consuming input.
  Pda p({"a"}, {"q", "r", "f"}, 0, 2,
        {Transition{{0}, {}, {1}, std::nullopt}, Transition{{1}, {}, {0}, std::nullopt},
         Transition{{0}, {0}, {2}, std::nullopt}});
  auto r = simulate(p, fx::toks("a"));
  CHECK(r.accepted == Verdict::yes);
}
