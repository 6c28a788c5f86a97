// Command-line front end: tabparse --grammar G --input "a + a" --algorithm earley

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tabparse/cky.hpp"
#include "tabparse/earley.hpp"
#include "tabparse/engine.hpp"
#include "tabparse/forest.hpp"
#include "tabparse/grammar.hpp"
#include "tabparse/lr.hpp"
#include "tabparse/oracle.hpp"
#include "tabparse/pda.hpp"
#include "tabparse/strategies.hpp"

using namespace tabparse;

namespace {

constexpr int kRecognized = 0;
constexpr int kRejected = 1;
constexpr int kUsage = 2;
constexpr int kOracleDisagrees = 3;

struct RunConfig {
  std::string grammar_path;
  std::string input;
  bool chars = false;
  std::string algorithm = "earley";
  bool show_table = false;
  bool show_pda = false;
  bool show_lr = false;
  std::string forest;
  std::optional<std::size_t> trees;
  bool count = false;
  std::string dot_path;
  bool oracle = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> tokenize(const std::string& text, bool chars) {
  std::vector<std::string> out;
  if (chars) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) out.emplace_back(1, c);
    return out;
  }
  std::istringstream in(text);
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

Grammar load_grammar(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read grammar file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::vector<std::string> warnings;
  Grammar g = parse_grammar(buf.str(), &warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
  return g;
}

bool pda_mode(const std::string& a) {
  return a == "glr" || a == "glr-binarized" || a == "topdown" || a == "bottomup" || a == "naive";
}

void check_selectors(const RunConfig& cfg) {
  const auto& a = cfg.algorithm;
  if (cfg.show_pda && !pda_mode(a)) throw UsageError("--show-pda needs a PDA-based algorithm");
  if (cfg.show_lr && a != "glr" && a != "glr-binarized") throw UsageError("--show-lr needs glr or glr-binarized");
  if (!cfg.dot_path.empty() && (!pda_mode(a) || a == "naive"))
    throw UsageError("--dot needs a tabular PDA-based algorithm");
  if (a == "naive" && (cfg.show_table || !cfg.forest.empty() || cfg.trees || cfg.count))
    throw UsageError("naive mode has no table, forest or trees");
}

struct Outcome {
  bool recognized = false;
  std::vector<std::string> lines;
  std::optional<ParseForest> forest;
  std::string dot;
};

Outcome run_engine(const RunConfig& cfg, const Pda& p, const Grammar& g, const std::vector<std::string>& tokens,
                   const std::optional<LrAutomaton>& lr) {
  Outcome out;
  if (cfg.show_pda) out.lines.push_back(dump_pda(p));
  if (lr) out.lines.push_back(dump_lr_automaton(*lr, g));
  Chart chart = run_tabular(p, tokens);
  out.recognized = recognized(chart, p, tokens.size());
  if (cfg.show_table) out.lines.push_back(dump_chart(chart, p));
  if (!cfg.forest.empty() || cfg.trees || cfg.count) out.forest = build_forest_items(chart, p, g, tokens);
  if (!cfg.dot_path.empty()) out.dot = chart_to_dot(chart, p);
  return out;
}

int run(const RunConfig& cfg) {
  check_selectors(cfg);
  Grammar g = load_grammar(cfg.grammar_path);
  auto tokens = tokenize(cfg.input, cfg.chars);
  const auto& a = cfg.algorithm;

  Outcome out;
  std::string note;
  if (a == "earley") {
    Grammar aug = augment_start(g);
    EarleyChart chart = earley_parse(aug, tokens);
    out.recognized = earley_recognized(chart, aug, tokens.size());
    if (cfg.show_table) out.lines.push_back(dump_earley(chart, aug));
    if (!cfg.forest.empty() || cfg.trees || cfg.count) out.forest = build_forest_items(chart, aug, tokens);
  } else if (a == "cky") {
    if (!is_cnf(g)) throw UsageError("cky needs a grammar in Chomsky normal form");
    CkyChart chart = cky_parse(g, tokens);
    out.recognized = cky_recognized(chart, g, tokens.size());
    if (cfg.show_table) out.lines.push_back(dump_cky(chart, g));
    if (!cfg.forest.empty() || cfg.trees || cfg.count) out.forest = build_forest_cky(chart, g, tokens);
  } else if (a == "glr" || a == "glr-binarized") {
    if (has_epsilon_rules(g)) throw UsageError(a + " does not support empty rules; use earley or topdown");
    LrAutomaton lr = build_lr_automaton(g);
    Pda p = compile_lr(g, lr);
    if (a == "glr-binarized") p = binarize_reductions(p, g);
    std::optional<LrAutomaton> shown;
    if (cfg.show_lr) shown = lr;
    out = run_engine(cfg, p, g, tokens, shown);
  } else if (a == "topdown") {
    Grammar aug = augment_start(g);
    out = run_engine(cfg, compile_topdown(aug), aug, tokens, std::nullopt);
  } else if (a == "bottomup") {
    if (!is_cnf(g)) throw UsageError("bottomup needs a grammar in Chomsky normal form");
    out = run_engine(cfg, compile_bottomup(g), g, tokens, std::nullopt);
  } else if (a == "naive") {
    Grammar aug = augment_start(g);
    Pda p = compile_topdown(aug);
    if (cfg.show_pda) out.lines.push_back(dump_pda(p));
    auto result = simulate(p, tokens);
    out.recognized = result.accepted == Verdict::yes;
    if (result.accepted == Verdict::bound_exceeded) note = "note: search bound exceeded, verdict may be incomplete";
  } else {
    throw UsageError("unknown algorithm: " + a);
  }

  std::cout << (out.recognized ? "RECOGNIZED" : "REJECTED") << "\n";
  if (!note.empty()) std::cout << note << "\n";
  for (const auto& block : out.lines) std::cout << block;

  if (out.forest) {
    if (cfg.forest == "full") std::cout << dump_forest(*out.forest, true);
    if (cfg.forest == "reduced") std::cout << dump_forest(reduce_forest(*out.forest));
    if (cfg.count) std::cout << "trees: " << count_trees(*out.forest).to_string() << "\n";
    if (cfg.trees)
      for (const auto& t : extract_trees(*out.forest, *cfg.trees)) std::cout << t.to_string() << "\n";
  }
  if (!cfg.dot_path.empty()) {
    std::ofstream dot(cfg.dot_path);
    if (!dot) throw UsageError("cannot write " + cfg.dot_path);
    dot << out.dot;
  }
  if (cfg.oracle) {
    bool expected = oracle::recognizes(g, tokens);
    if (expected != out.recognized) {
      std::cout << "oracle: disagree\n";
      return kOracleDisagrees;
    }
    std::cout << "oracle: agree\n";
  }
  return out.recognized ? kRecognized : kRejected;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Tabular parsing of context-free grammars"};
  app.add_option("--grammar", cfg.grammar_path, "grammar file, one 'A -> X Y' rule per line")->required();
  app.add_option("--input", cfg.input, "whitespace-separated input tokens");
  app.add_flag("--chars", cfg.chars, "split the input into single-character tokens");
  app.add_option("--algorithm", cfg.algorithm, "parsing algorithm")
      ->check(CLI::IsMember({"earley", "cky", "glr", "glr-binarized", "topdown", "bottomup", "naive"}));
  app.add_flag("--show-table", cfg.show_table, "print the table of items");
  app.add_flag("--show-pda", cfg.show_pda, "print the compiled PDA");
  app.add_flag("--show-lr", cfg.show_lr, "print the LR automaton");
  app.add_option("--forest", cfg.forest, "print the parse forest")->check(CLI::IsMember({"reduced", "full"}));
  app.add_option("--trees", cfg.trees, "print up to k parse trees");
  app.add_flag("--count", cfg.count, "print the number of parse trees");
  app.add_option("--dot", cfg.dot_path, "write the item graph in Graphviz format");
  app.add_flag("--oracle", cfg.oracle, "cross-check the verdict against a brute-force recognizer");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    return run(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const GrammarError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kUsage;
}
