#include "advlogic/formula.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>
#include <utility>

namespace advlogic {

namespace {

std::size_t mix(std::size_t x) {
  std::uint64_t z = static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return static_cast<std::size_t>(z ^ (z >> 31));
}

bool equal_nodes(const Formula& a, const Formula& b) {
  if (a.identity() == b.identity()) return true;
  if (a.hash() != b.hash() || a.size() != b.size() || a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case FormulaKind::Variable:
      return a.name() == b.name();
    case FormulaKind::Negation:
      return equal_nodes(a.operand(), b.operand());
    case FormulaKind::Implication:
      return equal_nodes(a.antecedent(), b.antecedent()) &&
             equal_nodes(a.consequent(), b.consequent());
  }
  return false;
}

}  // namespace

Formula Formula::variable(std::string name) {
  if (!is_valid_variable_name(name)) {
    throw std::invalid_argument("invalid variable name '" + name + "'");
  }
  auto h = mix(std::hash<std::string>{}(name));
  return Formula(std::make_shared<const Node>(
      Node{FormulaKind::Variable, std::move(name), nullptr, nullptr, 1, h}));
}

Formula Formula::negation(Formula operand) {
  auto h = mix(operand.hash() ^ 0x51ed2701u);
  auto size = operand.size() + 1;
  return Formula(std::make_shared<const Node>(
      Node{FormulaKind::Negation, {}, std::move(operand.node_), nullptr, size, h}));
}

Formula Formula::implication(Formula antecedent, Formula consequent) {
  auto h = mix(mix(antecedent.hash() + 0x2545f491u) ^ consequent.hash());
  auto size = antecedent.size() + consequent.size() + 1;
  return Formula(std::make_shared<const Node>(Node{FormulaKind::Implication,
                                                   {},
                                                   std::move(antecedent.node_),
                                                   std::move(consequent.node_),
                                                   size,
                                                   h}));
}

bool operator==(const Formula& a, const Formula& b) { return equal_nodes(a, b); }

Formula var(std::string name) { return Formula::variable(std::move(name)); }
Formula neg(Formula operand) { return Formula::negation(std::move(operand)); }
Formula imp(Formula antecedent, Formula consequent) {
  return Formula::implication(std::move(antecedent), std::move(consequent));
}

bool is_valid_variable_name(std::string_view name) {
  if (name.empty() || name[0] < 'a' || name[0] > 'z') return false;
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
  });
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

std::string describe_expected(const std::vector<std::string>& expected) {
  std::string out;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0) out += i + 1 == expected.size() ? " or " : ", ";
    out += expected[i];
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Formula parse_all() {
    Formula f = implication();
    skip_ws();
    if (pos_ != text_.size()) fail({"'->'", "end of input"});
    return f;
  }

 private:
  Formula implication() {
    Formula lhs = negation();
    skip_ws();
    if (text_.substr(pos_, 2) == "->") {
      pos_ += 2;
      return imp(std::move(lhs), implication());
    }
    return lhs;
  }

  Formula negation() {
    std::size_t depth = 0;
    for (skip_ws(); pos_ < text_.size() && text_[pos_] == '~'; skip_ws()) {
      ++pos_;
      ++depth;
    }
    Formula f = atom();
    while (depth-- > 0) f = neg(std::move(f));
    return f;
  }

  Formula atom() {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      Formula inner = implication();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail({"'->'", "')'"});
      ++pos_;
      return inner;
    }
    if (pos_ < text_.size() && text_[pos_] >= 'a' && text_[pos_] <= 'z') {
      std::size_t start = pos_++;
      while (pos_ < text_.size()) {
        char c = text_[pos_];
        if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_') {
          ++pos_;
        } else {
          break;
        }
      }
      return var(std::string(text_.substr(start, pos_ - start)));
    }
    fail({"variable", "'~'", "'('"});
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' || text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    std::string found = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of input";
    throw ParseError(pos_, std::move(expected), found);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& found)
    : std::runtime_error("syntax error at offset " + std::to_string(offset) + ": expected " +
                         describe_expected(expected) + ", found " + found),
      offset_(offset),
      expected_(std::move(expected)) {}

Formula parse_formula(std::string_view text) { return Parser(text).parse_all(); }

// ---------------------------------------------------------------------------
// Rendering

namespace {

void render_into(const Formula& f, Parenthesization style, std::string& out) {
  switch (f.kind()) {
    case FormulaKind::Variable:
      out += f.name();
      return;
    case FormulaKind::Negation: {
      out += '~';
      Formula op = f.operand();
      if (op.is_implication()) {
        out += '(';
        render_into(op, style, out);
        out += ')';
      } else {
        render_into(op, style, out);
      }
      return;
    }
    case FormulaKind::Implication: {
      Formula lhs = f.antecedent();
      Formula rhs = f.consequent();
      if (lhs.is_implication()) {
        out += '(';
        render_into(lhs, style, out);
        out += ')';
      } else {
        render_into(lhs, style, out);
      }
      out += "->";
      bool wrap = style == Parenthesization::Explicit && rhs.is_implication();
      if (wrap) out += '(';
      render_into(rhs, style, out);
      if (wrap) out += ')';
      return;
    }
  }
}

}  // namespace

std::string render_formula(const Formula& f, Parenthesization style) {
  std::string out;
  out.reserve(f.size() * 2);
  render_into(f, style, out);
  return out;
}

// ---------------------------------------------------------------------------
// Substitution and variables

Formula apply_substitution(const Formula& f, const Substitution& s) {
  if (s.empty()) return f;
  switch (f.kind()) {
    case FormulaKind::Variable: {
      auto it = s.find(f.name());
      return it == s.end() ? f : it->second;
    }
    case FormulaKind::Negation: {
      Formula op = f.operand();
      Formula replaced = apply_substitution(op, s);
      return replaced.identity() == op.identity() ? f : neg(std::move(replaced));
    }
    case FormulaKind::Implication: {
      Formula lhs = f.antecedent();
      Formula rhs = f.consequent();
      Formula new_lhs = apply_substitution(lhs, s);
      Formula new_rhs = apply_substitution(rhs, s);
      if (new_lhs.identity() == lhs.identity() && new_rhs.identity() == rhs.identity()) return f;
      return imp(std::move(new_lhs), std::move(new_rhs));
    }
  }
  return f;
}

std::string render_substitution(const Substitution& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& [name, value] : s) {
    if (!first) out += "; ";
    first = false;
    out += name + ":=" + render_formula(value);
  }
  return out + "}";
}

namespace {

void collect_variables(const Formula& f, std::vector<std::string>& out,
                       std::unordered_set<std::string>& seen) {
  switch (f.kind()) {
    case FormulaKind::Variable:
      if (seen.insert(f.name()).second) out.push_back(f.name());
      return;
    case FormulaKind::Negation:
      collect_variables(f.operand(), out, seen);
      return;
    case FormulaKind::Implication:
      collect_variables(f.antecedent(), out, seen);
      collect_variables(f.consequent(), out, seen);
      return;
  }
}

}  // namespace

std::vector<std::string> variables_of(const Formula& f) {
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  collect_variables(f, out, seen);
  return out;
}

bool canonical_less(const Formula& a, const Formula& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return render_formula(a) < render_formula(b);
}

// ---------------------------------------------------------------------------
// Enumeration

FormulaEnumerator::FormulaEnumerator(std::vector<std::string> vars, std::size_t max_size)
    : vars_(std::move(vars)), max_size_(max_size) {
  if (max_size_ == 0) throw std::invalid_argument("max_size must be at least 1");
  std::sort(vars_.begin(), vars_.end());
  vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
  layers_.emplace_back();  // size 0 is empty
}

bool FormulaEnumerator::advance_layer() {
  if (current_size_ >= max_size_) return false;
  std::size_t s = ++current_size_;
  std::vector<std::pair<std::string, Formula>> keyed;
  if (s == 1) {
    for (const auto& v : vars_) keyed.emplace_back(v, var(v));
  } else {
    for (const auto& f : layers_[s - 1]) {
      Formula n = neg(f);
      keyed.emplace_back(render_formula(n), n);
    }
    for (std::size_t left = 1; left + 1 < s; ++left) {
      std::size_t right = s - 1 - left;
      for (const auto& a : layers_[left]) {
        for (const auto& b : layers_[right]) {
          Formula i = imp(a, b);
          keyed.emplace_back(render_formula(i), i);
        }
      }
    }
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<Formula> layer;
  layer.reserve(keyed.size());
  for (auto& [key, f] : keyed) layer.push_back(std::move(f));
  layers_.push_back(std::move(layer));
  cursor_ = 0;
  return true;
}

std::optional<Formula> FormulaEnumerator::next() {
  while (current_size_ == 0 || cursor_ >= layers_[current_size_].size()) {
    if (!advance_layer()) return std::nullopt;
  }
  return layers_[current_size_][cursor_++];
}

std::vector<Formula> enumerate_formulas(const std::vector<std::string>& vars, std::size_t max_size) {
  FormulaEnumerator e(vars, max_size);
  std::vector<Formula> out;
  while (auto f = e.next()) out.push_back(std::move(*f));
  return out;
}

}  // namespace advlogic
