#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "tabparse/engine.hpp"
#include "tabparse/lr.hpp"
#include "tabparse/strategies.hpp"

using namespace tabparse;

namespace {

Item item(const Pda& p, const std::string& lower, std::uint32_t j, const std::string& upper, std::uint32_t i) {
  StackSymbol lo = lower == "⊥" ? kBottom : p.stack_symbol(lower);
  return Item{lo, j, p.stack_symbol(upper), i};
}

Transition tr(std::vector<StackSymbol> pop, std::vector<InputSymbol> read, std::vector<StackSymbol> push) {
  return Transition{std::move(pop), std::move(read), std::move(push), std::nullopt};
}

std::set<std::tuple<StackSymbol, std::uint32_t, StackSymbol, std::uint32_t>> item_set(const Chart& c) {
  std::set<std::tuple<StackSymbol, std::uint32_t, StackSymbol, std::uint32_t>> out;
  for (const auto& it : c.items()) out.insert({it.lower, it.lower_pos, it.upper, it.upper_pos});
  return out;
}

}  // namespace

TEST_CASE("transition shapes") {
  CHECK(classify_transition(tr({0}, {0}, {0, 1})) == Shape::F1);
  CHECK(classify_transition(tr({0, 1}, {0}, {0, 2})) == Shape::F2);
  CHECK(classify_transition(tr({1}, {0}, {2})) == Shape::F2);
  CHECK(classify_transition(tr({0, 1}, {}, {2})) == Shape::F3);
  CHECK(classify_transition(tr({0}, {}, {0, 1})) == Shape::F4);
  CHECK(classify_transition(tr({0, 1}, {}, {0, 2})) == Shape::F5);
  CHECK(classify_transition(tr({}, {0}, {1})) == Shape::F6);
  CHECK(classify_transition(tr({0, 1, 2, 3}, {}, {0, 4})) == Shape::F7);
  CHECK(classify_transition(tr({0, 1, 2}, {}, {4})) == Shape::F7);
  CHECK_THROWS_AS(classify_transition(tr({0}, {0, 0}, {0, 1})), EngineError);
  CHECK_THROWS_AS(classify_transition(tr({0}, {}, {1, 2})), EngineError);
  CHECK_THROWS_AS(classify_transition(tr({}, {}, {1})), EngineError);
  CHECK_THROWS_AS(classify_transition(tr({0, 1, 2}, {0}, {3})), EngineError);
  CHECK(to_string(Shape::F7) == "F7");

  Pda p = fx::abcd_pda();
  CHECK(classify_transition(p.transitions()[0]) == Shape::F1);
  CHECK(classify_transition(p.transitions()[6]) == Shape::F3);
}

TEST_CASE("items of the abcd automaton") {
  Pda p = fx::abcd_pda();
  Chart c = run_tabular(p, fx::toks("a b c d"));
  CHECK(recognized(c, p, 4));
  CHECK(c.contains(item(p, "⊥", 0, "q9", 4)));

  auto q1 = c.find(item(p, "q0", 0, "q1", 1));
  REQUIRE(q1);
  REQUIRE(c.justifications(*q1).size() == 1);
  const auto& j1 = c.justifications(*q1)[0];
  CHECK(j1.transition == 0u);
  CHECK(j1.rule == Shape::F1);
  REQUIRE(j1.antecedents.size() == 1);
  CHECK(c.item(j1.antecedents[0]) == item(p, "⊥", 0, "q0", 0));

  auto q7 = c.find(item(p, "q0", 0, "q7", 4));
  REQUIRE(q7);
  REQUIRE(c.justifications(*q7).size() == 1);
  const auto& j7 = c.justifications(*q7)[0];
  CHECK(j7.transition == 7u);
  REQUIRE(j7.antecedents.size() == 2);
  CHECK(c.item(j7.antecedents[0]) == item(p, "q0", 0, "q2", 2));
  CHECK(c.item(j7.antecedents[1]) == item(p, "q2", 2, "q6", 4));

  // The shared step at position 3 gives one q5 item, reached from both contexts of q4.
  CHECK(c.contains(item(p, "q4", 3, "q5", 4)));
  CHECK(c.justifications(*c.find(item(p, "q4", 3, "q5", 4))).size() == 2);
}

TEST_CASE("rejection and empty input") {
  Pda p = fx::abcd_pda();
  CHECK_FALSE(recognized(run_tabular(p, fx::toks("a b c")), p, 3));
  CHECK_FALSE(recognized(run_tabular(p, fx::toks("a b x d")), p, 4));
  Chart empty = run_tabular(p, std::vector<std::string>{});
  CHECK(empty.items().size() == 1);
  CHECK(empty.justifications(0).front().antecedents.empty());

  Pda trivial({"a"}, {"q"}, 0, 0, {});
  CHECK(recognized(run_tabular(trivial, std::vector<std::string>{}), trivial, 0));
}

TEST_CASE("empty-input closure follows epsilon pushes") {
  // q0 -eps-> q0 q1, q0 q1 -eps-> q2
  Pda p({"a"}, {"q0", "q1", "q2"}, 0, 2, {tr({0}, {}, {0, 1}), tr({0, 1}, {}, {2})});
  Chart c = run_tabular(p, std::vector<std::string>{});
  CHECK(c.items().size() == 3);
  CHECK(recognized(c, p, 0));
}

TEST_CASE("items at equal positions combine in either order") {
  // Both antecedents of the pop step sit at position 0; whichever arrives
  // last must still fire it.
  Pda p({"a"}, {"q0", "q1", "q2", "q3"}, 0, 3,
        {tr({0}, {}, {0, 1}), tr({1}, {}, {1, 2}), tr({1, 2}, {}, {3}), tr({0, 3}, {}, {3})});
  for (auto order : {AgendaOrder::lifo, AgendaOrder::fifo}) {
    Chart c = run_tabular(p, std::vector<std::string>{}, EngineOptions{order});
    CHECK(c.contains(Item{0, 0, 3, 0}));
    CHECK(recognized(c, p, 0));
  }
}

TEST_CASE("ambiguous sum: the accept item is found twice") {
  Grammar g = fx::grammar(fx::kLr);
  Pda p = compile_lr(g);
  Chart c = run_tabular(p, fx::sum_input(3));
  auto acc = c.find(accept_item(p, 5));
  REQUIRE(acc);
  const auto& js = c.justifications(*acc);
  REQUIRE(js.size() == 2);
  std::set<std::vector<std::string>> chains;
  for (const auto& j : js) {
    std::vector<std::string> chain;
    for (ItemId a : j.antecedents) chain.push_back(format_item(p, c.item(a)));
    chains.insert(chain);
  }
  CHECK(chains == std::set<std::vector<std::string>>{
                      {"( ⊥ , 0 , q0 , 0 )", "( q0 , 0 , q1 , 1 )", "( q1 , 1 , q3 , 2 )", "( q3 , 2 , q4 , 5 )"},
                      {"( ⊥ , 0 , q0 , 0 )", "( q0 , 0 , q1 , 3 )", "( q1 , 3 , q3 , 4 )", "( q3 , 4 , q4 , 5 )"},
                  });

  EngineOptions capped;
  capped.max_justifications = 1;
  Chart c1 = run_tabular(p, fx::sum_input(3), capped);
  CHECK(c1.justifications(*c1.find(accept_item(p, 5))).size() == 1);
  CHECK(c1.fired() == c.fired());
}

TEST_CASE("reduction_expand enumerates chains through an item") {
  Grammar g = fx::grammar(fx::kLr);
  Pda p = compile_lr(g);
  Chart c = run_tabular(p, fx::sum_input(3));
  std::size_t accept_long = 0, reduce_a = 0;
  for (std::size_t t = 0; t < p.transitions().size(); ++t) {
    const auto& tr = p.transitions()[t];
    if (tr.pop.size() == 4 && tr.push == std::vector<StackSymbol>{p.final()}) accept_long = t;
    if (tr.pop == std::vector<StackSymbol>{p.stack_symbol("q0"), p.stack_symbol("q2")} && tr.push.size() == 2)
      reduce_a = t;
  }
  auto last = c.find(item(p, "q3", 2, "q4", 5));
  REQUIRE(last);
  auto inf = reduction_expand(c, p, *last, accept_long);
  REQUIRE(inf.size() == 1);
  CHECK(inf[0].consequent == accept_item(p, 5));
  CHECK(inf[0].antecedents.size() == 4);

  auto middle = c.find(item(p, "q0", 0, "q1", 3));
  REQUIRE(middle);
  auto inf2 = reduction_expand(c, p, *middle, accept_long);
  REQUIRE(inf2.size() == 1);
  CHECK(c.item(inf2[0].antecedents[3]) == item(p, "q3", 4, "q4", 5));

  auto shifted = c.find(item(p, "q0", 0, "q2", 1));
  REQUIRE(shifted);
  auto inf3 = reduction_expand(c, p, *shifted, reduce_a);
  REQUIRE(inf3.size() == 1);
  CHECK(inf3[0].consequent == item(p, "q0", 0, "q1", 1));
  CHECK_THROWS_AS(reduction_expand(c, p, *shifted, 0), EngineError);
}

TEST_CASE("binarized reductions give the same verdicts") {
  Grammar g = fx::grammar(fx::kLr);
  Pda plain = compile_lr(g);
  Pda bin = binarize_reductions(plain, g);
  for (std::size_t k = 1; k <= 4; ++k) {
    auto w = fx::sum_input(k);
    CHECK(recognized(run_tabular(bin, w), bin, w.size()));
  }
  auto bad = fx::toks("a + + a");
  CHECK_FALSE(recognized(run_tabular(bin, bad), bin, bad.size()));
}

TEST_CASE("agenda order does not change the item set") {
  Grammar g = augment_start(fx::grammar(fx::kExpr));
  Pda p = compile_topdown(g);
  auto w = fx::toks("a + a * a + a");
  Chart lifo = run_tabular(p, w, EngineOptions{AgendaOrder::lifo});
  Chart fifo = run_tabular(p, w, EngineOptions{AgendaOrder::fifo});
  CHECK(item_set(lifo) == item_set(fifo));
  CHECK(lifo.fired() == fifo.fired());
}

TEST_CASE("chart dump and graph export") {
  Pda p = fx::abcd_pda();
  Chart c = run_tabular(p, fx::toks("a b c d"));
  std::string dump = dump_chart(c, p);
  CHECK(dump.rfind("( ⊥ , 0 , q0 , 0 )\n( q0 , 0 , q1 , 1 )\n", 0) == 0);
  CHECK(dump.find("( q0 , 0 , q7 , 4 )\n") != std::string::npos);
  CHECK(dump.find("( q0 , 0 , q8 , 4 )\n( ⊥ , 0 , q9 , 4 )\n") != std::string::npos);
  CHECK(dump.substr(dump.size() - std::string("( q4 , 3 , q5 , 4 )\n").size()) == "( q4 , 3 , q5 , 4 )\n");
  CHECK(std::count(dump.begin(), dump.end(), '\n') == static_cast<long>(c.items().size()));

  std::string dot = chart_to_dot(c, p);
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("subgraph cluster_4") != std::string::npos);
  CHECK(dot.find("\"p4_q7\" -> \"p0_q0\";") != std::string::npos);
  CHECK(dot.find("\"p0_q0\" -> \"p0_⊥\";") != std::string::npos);
}

TEST_CASE("index lookups") {
  Pda p = fx::abcd_pda();
  Chart c = run_tabular(p, fx::toks("a b c d"));
  CHECK(c.with_upper(p.stack_symbol("q4"), 3).size() == 2);
  CHECK(c.with_lower(p.stack_symbol("q0"), 0).size() >= 5);
  CHECK(c.with_upper(p.stack_symbol("q9"), 0).empty());
}
