#include "advlogic/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace advlogic {

LogicalMatrix::LogicalMatrix(std::size_t value_count, std::vector<TruthValue> designated,
                             std::vector<TruthValue> neg_table,
                             std::vector<std::vector<TruthValue>> imp_table)
    : value_count_(value_count), designated_(std::move(designated)), neg_(std::move(neg_table)) {
  if (value_count_ < 2 || value_count_ > 255) {
    throw std::invalid_argument("matrix needs between 2 and 255 values");
  }
  std::sort(designated_.begin(), designated_.end());
  designated_.erase(std::unique(designated_.begin(), designated_.end()), designated_.end());
  if (designated_.empty() || designated_.size() >= value_count_) {
    throw std::invalid_argument("designated set must be a non-empty strict subset of the values");
  }
  auto in_range = [&](TruthValue v) { return v < value_count_; };
  if (!std::all_of(designated_.begin(), designated_.end(), in_range)) {
    throw std::invalid_argument("designated value out of range");
  }
  if (neg_.size() != value_count_ || !std::all_of(neg_.begin(), neg_.end(), in_range)) {
    throw std::invalid_argument("negation table must list one in-range value per truth value");
  }
  if (imp_table.size() != value_count_) {
    throw std::invalid_argument("implication table must have one row per truth value");
  }
  imp_.reserve(value_count_ * value_count_);
  for (const auto& row : imp_table) {
    if (row.size() != value_count_ || !std::all_of(row.begin(), row.end(), in_range)) {
      throw std::invalid_argument("implication row must list one in-range value per truth value");
    }
    imp_.insert(imp_.end(), row.begin(), row.end());
  }
  designated_mask_.assign(value_count_, false);
  for (auto v : designated_) designated_mask_[v] = true;
}

std::vector<std::vector<TruthValue>> LogicalMatrix::imp_table() const {
  std::vector<std::vector<TruthValue>> rows(value_count_);
  for (std::size_t a = 0; a < value_count_; ++a) {
    rows[a].assign(imp_.begin() + static_cast<std::ptrdiff_t>(a * value_count_),
                   imp_.begin() + static_cast<std::ptrdiff_t>((a + 1) * value_count_));
  }
  return rows;
}

const LogicalMatrix& matrix_T() {
  static const LogicalMatrix m(2, {1}, {1, 0}, {{1, 1}, {0, 1}});
  return m;
}

const LogicalMatrix& matrix_Tprime() {
  static const LogicalMatrix m(3, {2}, {1, 2, 1}, {{2, 1, 2}, {2, 2, 2}, {0, 1, 2}});
  return m;
}

// ---------------------------------------------------------------------------
// Matrix text format

namespace {

std::vector<std::string> tokens_of(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

TruthValue parse_value(const std::string& tok, std::size_t line_no) {
  try {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size() || v < 0 || v > 255) throw std::invalid_argument(tok);
    return static_cast<TruthValue>(v);
  } catch (const std::exception&) {
    throw std::invalid_argument("matrix line " + std::to_string(line_no) + ": bad value '" + tok + "'");
  }
}

}  // namespace

LogicalMatrix parse_matrix(std::string_view text) {
  std::vector<std::pair<std::size_t, std::vector<std::string>>> lines;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto toks = tokens_of(line);
    if (!toks.empty()) lines.emplace_back(line_no, std::move(toks));
  }
  auto expect_keyword = [&](std::size_t idx, const std::string& kw) -> const std::vector<std::string>& {
    if (idx >= lines.size()) throw std::invalid_argument("matrix: missing '" + kw + "' line");
    const auto& [no, toks] = lines[idx];
    if (toks[0] != kw) {
      throw std::invalid_argument("matrix line " + std::to_string(no) + ": expected '" + kw + "'");
    }
    return toks;
  };

  const auto& values = expect_keyword(0, "values");
  if (values.size() != 2) throw std::invalid_argument("matrix: 'values' takes exactly one count");
  std::size_t n = parse_value(values[1], lines[0].first);

  const auto& des = expect_keyword(1, "designated");
  std::vector<TruthValue> designated;
  for (std::size_t i = 1; i < des.size(); ++i) designated.push_back(parse_value(des[i], lines[1].first));

  const auto& negs = expect_keyword(2, "neg");
  std::vector<TruthValue> neg_table;
  for (std::size_t i = 1; i < negs.size(); ++i) neg_table.push_back(parse_value(negs[i], lines[2].first));

  std::vector<std::vector<TruthValue>> imp_table(n);
  std::vector<bool> seen(n, false);
  for (std::size_t k = 0; k < n; ++k) {
    const auto& row = expect_keyword(3 + k, "imp");
    std::size_t no = lines[3 + k].first;
    if (row.size() < 2 || row[1].empty() || row[1].back() != ':') {
      throw std::invalid_argument("matrix line " + std::to_string(no) + ": expected 'imp <row>:'");
    }
    std::size_t r = parse_value(row[1].substr(0, row[1].size() - 1), no);
    if (r >= n || seen[r]) {
      throw std::invalid_argument("matrix line " + std::to_string(no) + ": bad or repeated row index");
    }
    seen[r] = true;
    for (std::size_t i = 2; i < row.size(); ++i) imp_table[r].push_back(parse_value(row[i], no));
  }
  if (lines.size() > 3 + n) {
    throw std::invalid_argument("matrix line " + std::to_string(lines[3 + n].first) + ": unexpected content");
  }
  return LogicalMatrix(n, std::move(designated), std::move(neg_table), std::move(imp_table));
}

std::string render_matrix(const LogicalMatrix& m) {
  std::ostringstream out;
  out << "values " << m.value_count() << "\ndesignated";
  for (auto v : m.designated()) out << ' ' << int(v);
  out << "\nneg";
  for (auto v : m.neg_table()) out << ' ' << int(v);
  out << '\n';
  for (std::size_t a = 0; a < m.value_count(); ++a) {
    out << "imp " << a << ':';
    for (std::size_t b = 0; b < m.value_count(); ++b) {
      out << ' ' << int(m.implies(static_cast<TruthValue>(a), static_cast<TruthValue>(b)));
    }
    out << '\n';
  }
  return out.str();
}

std::string render_assignment(const Assignment& a) {
  std::string out;
  for (const auto& [name, v] : a) {
    if (!out.empty()) out += ' ';
    out += name + "=" + std::to_string(v);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

// Postfix program over variable slots; slot order is variables_of order.
struct Program {
  enum Op : std::uint32_t { kNeg = 0xFFFFFFFE, kImp = 0xFFFFFFFF };
  std::vector<std::uint32_t> code;
  std::vector<std::string> vars;
};

void emit(const Formula& f, std::unordered_map<std::string, std::uint32_t>& slots, Program& p) {
  switch (f.kind()) {
    case FormulaKind::Variable: {
      auto [it, inserted] = slots.emplace(f.name(), static_cast<std::uint32_t>(p.vars.size()));
      if (inserted) p.vars.push_back(f.name());
      p.code.push_back(it->second);
      return;
    }
    case FormulaKind::Negation:
      emit(f.operand(), slots, p);
      p.code.push_back(Program::kNeg);
      return;
    case FormulaKind::Implication:
      emit(f.antecedent(), slots, p);
      emit(f.consequent(), slots, p);
      p.code.push_back(Program::kImp);
      return;
  }
}

Program compile(const Formula& f) {
  Program p;
  std::unordered_map<std::string, std::uint32_t> slots;
  p.code.reserve(f.size());
  emit(f, slots, p);
  return p;
}

TruthValue run(const Program& p, const LogicalMatrix& m, const std::vector<TruthValue>& values,
               std::vector<TruthValue>& stack) {
  stack.clear();
  for (auto op : p.code) {
    if (op == Program::kNeg) {
      stack.back() = m.negate(stack.back());
    } else if (op == Program::kImp) {
      TruthValue b = stack.back();
      stack.pop_back();
      stack.back() = m.implies(stack.back(), b);
    } else {
      stack.push_back(values[op]);
    }
  }
  return stack.back();
}

std::uint64_t assignment_count(std::size_t n, std::size_t vars, const EvaluationBudget& budget) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < vars; ++i) {
    if (total > budget.max_assignments / n) {
      throw BudgetExceeded(std::to_string(n) + "^" + std::to_string(vars) +
                           " assignments exceed the budget of " + std::to_string(budget.max_assignments));
    }
    total *= n;
  }
  if (total > budget.max_assignments) {
    throw BudgetExceeded(std::to_string(total) + " assignments exceed the budget of " +
                         std::to_string(budget.max_assignments));
  }
  return total;
}

// Calls visit(values, result) for each assignment in lexicographic order
// until it returns false.
template <typename Visit>
void for_each_assignment(const Formula& f, const LogicalMatrix& m, const EvaluationBudget& budget,
                         Program& program, Visit&& visit) {
  program = compile(f);
  std::size_t k = program.vars.size();
  assignment_count(m.value_count(), k, budget);
  std::vector<TruthValue> values(k, 0);
  std::vector<TruthValue> stack;
  stack.reserve(f.size());
  const auto n = static_cast<TruthValue>(m.value_count());
  while (true) {
    if (!visit(values, run(program, m, values, stack))) return;
    std::size_t i = k;
    while (i > 0) {
      if (++values[i - 1] < n) break;
      values[i - 1] = 0;
      --i;
    }
    if (i == 0) return;
  }
}

Witness make_witness(const Program& p, const std::vector<TruthValue>& values, TruthValue v) {
  Witness w{{}, v};
  for (std::size_t i = 0; i < p.vars.size(); ++i) w.assignment.emplace(p.vars[i], values[i]);
  return w;
}

}  // namespace

TruthValue evaluate(const Formula& f, const LogicalMatrix& m, const Assignment& a) {
  switch (f.kind()) {
    case FormulaKind::Variable: {
      auto it = a.find(f.name());
      if (it == a.end()) throw UnassignedVariable(f.name());
      if (it->second >= m.value_count()) {
        throw std::invalid_argument("value of '" + f.name() + "' is outside the matrix");
      }
      return it->second;
    }
    case FormulaKind::Negation:
      return m.negate(evaluate(f.operand(), m, a));
    case FormulaKind::Implication: {
      TruthValue lhs = evaluate(f.antecedent(), m, a);
      return m.implies(lhs, evaluate(f.consequent(), m, a));
    }
  }
  return 0;
}

TautologyVerdict check_tautology(const Formula& f, const LogicalMatrix& m, const EvaluationBudget& budget) {
  TautologyVerdict verdict;
  Program program;
  for_each_assignment(f, m, budget, program, [&](const std::vector<TruthValue>& values, TruthValue v) {
    if (m.is_designated(v)) return true;
    verdict.counterexample = make_witness(program, values, v);
    return false;
  });
  return verdict;
}

NeverDesignatedVerdict check_never_designated(const Formula& f, const LogicalMatrix& m,
                                              const EvaluationBudget& budget) {
  NeverDesignatedVerdict verdict;
  Program program;
  for_each_assignment(f, m, budget, program, [&](const std::vector<TruthValue>& values, TruthValue v) {
    if (!m.is_designated(v)) return true;
    verdict.witness = make_witness(program, values, v);
    return false;
  });
  return verdict;
}

std::vector<TruthValue> value_range(const Formula& f, const LogicalMatrix& m, const EvaluationBudget& budget) {
  std::vector<bool> seen(m.value_count(), false);
  Program program;
  for_each_assignment(f, m, budget, program, [&](const std::vector<TruthValue>&, TruthValue v) {
    seen[v] = true;
    return true;
  });
  std::vector<TruthValue> out;
  for (std::size_t v = 0; v < seen.size(); ++v) {
    if (seen[v]) out.push_back(static_cast<TruthValue>(v));
  }
  return out;
}

std::string_view label_name(Label l) {
  switch (l) {
    case Label::T:
      return "T";
    case Label::C:
      return "C";
    case Label::Neither:
      return "Neither";
  }
  return "?";
}

std::optional<Label> parse_label(std::string_view s) {
  if (s == "T") return Label::T;
  if (s == "C") return Label::C;
  if (s == "Neither") return Label::Neither;
  return std::nullopt;
}

Label classify(const Formula& f, const LogicalMatrix& m, const EvaluationBudget& budget) {
  // One pass: a formula is T iff every value is designated, C iff none is.
  bool any_designated = false;
  bool any_undesignated = false;
  Program program;
  for_each_assignment(f, m, budget, program, [&](const std::vector<TruthValue>&, TruthValue v) {
    (m.is_designated(v) ? any_designated : any_undesignated) = true;
    return !(any_designated && any_undesignated);
  });
  if (!any_undesignated) return Label::T;
  if (!any_designated) return Label::C;
  return Label::Neither;
}

MpPreservation check_mp_preserves(const LogicalMatrix& m) {
  const auto n = static_cast<TruthValue>(m.value_count());
  for (TruthValue a = 0; a < n; ++a) {
    if (!m.is_designated(a)) continue;
    for (TruthValue b = 0; b < n; ++b) {
      if (m.is_designated(m.implies(a, b)) && !m.is_designated(b)) {
        return {false, std::pair{a, b}};
      }
    }
  }
  return {};
}

}  // namespace advlogic
