#include "tabparse/cky.hpp"

#include <limits>

namespace tabparse {

bool CkyChart::contains(std::size_t j, SymbolId a, std::size_t i) const {
  if (j >= i || i > n_ || a >= symbols_) return false;
  return present_[slot(j, a, i)];
}

std::vector<SymbolId> CkyChart::cell(std::size_t j, std::size_t i) const {
  std::vector<SymbolId> out;
  for (SymbolId a = 0; a < symbols_; ++a)
    if (contains(j, a, i)) out.push_back(a);
  return out;
}

const std::vector<CkyJustification>& CkyChart::justifications(std::size_t j, SymbolId a,
                                                              std::size_t i) const {
  static const std::vector<CkyJustification> empty;
  if (!contains(j, a, i)) return empty;
  return cells_[slot(j, a, i)];
}

CkyChart cky_parse(const Grammar& g, const std::vector<std::string>& tokens) {
  if (!is_cnf(g)) throw GrammarError("CKY needs a grammar in Chomsky normal form");

  CkyChart c;
  c.n_ = tokens.size();
  c.symbols_ = g.symbol_count();
  for (const auto& tok : tokens) {
    SymbolId s = std::numeric_limits<SymbolId>::max();
    if (g.has_symbol(tok) && g.is_terminal(g.symbol(tok))) s = g.symbol(tok);
    c.input_.push_back(s);
  }
  if (c.n_ == 0) return c;
  c.cells_.resize((c.n_ + 1) * (c.n_ + 1) * c.symbols_);
  c.present_.assign(c.cells_.size(), false);

  std::vector<std::size_t> lexical, binary;
  for (std::size_t r = 0; r < g.rules().size(); ++r)
    (g.rule(r).rhs.size() == 1 ? lexical : binary).push_back(r);

  auto add = [&](std::size_t j, SymbolId a, std::size_t i, CkyJustification just) {
    ++c.fired_;
    std::size_t s = c.slot(j, a, i);
    if (!c.present_[s]) {
      c.present_[s] = true;
      ++c.items_;
    }
    c.cells_[s].push_back(just);
  };

  for (std::size_t i = 1; i <= c.n_; ++i) {
    for (std::size_t r : lexical)
      if (g.rule(r).rhs[0] == c.input_[i - 1]) add(i - 1, g.rule(r).lhs, i, CkyJustification{r, std::nullopt});
    for (std::size_t k = i - 1; k-- > 0;) {
      for (std::size_t j = k + 1; j < i; ++j) {
        for (std::size_t r : binary) {
          const Rule& rule = g.rule(r);
          if (c.contains(k, rule.rhs[0], j) && c.contains(j, rule.rhs[1], i))
            add(k, rule.lhs, i, CkyJustification{r, j});
        }
      }
    }
  }
  return c;
}

bool cky_recognized(const CkyChart& c, const Grammar& g, std::size_t n) {
  return n >= 1 && n == c.input_length() && c.contains(0, g.start(), n);
}

std::string dump_cky(const CkyChart& c, const Grammar& g) {
  std::string out;
  for (std::size_t j = 0; j < c.input_length(); ++j) {
    for (std::size_t i = j + 1; i <= c.input_length(); ++i) {
      auto cell = c.cell(j, i);
      if (cell.empty()) continue;
      out += "T[" + std::to_string(j) + "," + std::to_string(i) + "]: ";
      for (std::size_t k = 0; k < cell.size(); ++k) {
        if (k) out += ", ";
        out += g.name(cell[k]);
      }
      out += "\n";
    }
  }
  return out;
}

}  // namespace tabparse
