#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace advlogic {

enum class FormulaKind : std::uint8_t { Variable, Negation, Implication };

// Immutable propositional formula over ~ and ->. Subtrees are shared, so
// copies are cheap and values can be handed across threads freely.
class Formula {
 public:
  static Formula variable(std::string name);
  static Formula negation(Formula operand);
  static Formula implication(Formula antecedent, Formula consequent);

  FormulaKind kind() const { return node_->kind; }
  bool is_variable() const { return node_->kind == FormulaKind::Variable; }
  bool is_negation() const { return node_->kind == FormulaKind::Negation; }
  bool is_implication() const { return node_->kind == FormulaKind::Implication; }

  // Variable name; only meaningful for variables.
  const std::string& name() const { return node_->name; }
  // Negation operand.
  Formula operand() const { return Formula(node_->left); }
  Formula antecedent() const { return Formula(node_->left); }
  Formula consequent() const { return Formula(node_->right); }

  // Number of variable and connective nodes.
  std::size_t size() const { return node_->size; }
  std::size_t hash() const { return node_->hash; }

  friend bool operator==(const Formula& a, const Formula& b);

  // Identity of the underlying node; equal ids imply equal formulas.
  const void* identity() const { return node_.get(); }

 private:
  struct Node {
    FormulaKind kind;
    std::string name;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
    std::size_t size;
    std::size_t hash;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// Shorthands used heavily by tests and by the built-in axiom tables.
Formula var(std::string name);
Formula neg(Formula operand);
Formula imp(Formula antecedent, Formula consequent);

bool is_valid_variable_name(std::string_view name);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& found);

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

Formula parse_formula(std::string_view text);

enum class Parenthesization {
  Minimal,  // right-associative ->, ~ binds tighter
  Explicit  // every implication operand that is itself an implication is bracketed
};

std::string render_formula(const Formula& f, Parenthesization style = Parenthesization::Minimal);

// Simultaneous substitution: all bound variables are replaced in one pass.
using Substitution = std::map<std::string, Formula>;

Formula apply_substitution(const Formula& f, const Substitution& s);
std::string render_substitution(const Substitution& s);

// Distinct variable names in first-occurrence (left-to-right) order.
std::vector<std::string> variables_of(const Formula& f);

// Order used for enumeration and tie-breaking: size first, then the
// minimal-parenthesis rendering compared bytewise.
bool canonical_less(const Formula& a, const Formula& b);

// Streams every formula over `vars` with size <= max_size exactly once,
// in canonical order. Formulas are generated one size layer at a time.
class FormulaEnumerator {
 public:
  FormulaEnumerator(std::vector<std::string> vars, std::size_t max_size);

  std::optional<Formula> next();

 private:
  bool advance_layer();

  std::vector<std::string> vars_;
  std::size_t max_size_;
  std::size_t current_size_ = 0;
  std::size_t cursor_ = 0;
  // layers_[s] holds all formulas of size s, canonically sorted.
  std::vector<std::vector<Formula>> layers_;
};

std::vector<Formula> enumerate_formulas(const std::vector<std::string>& vars, std::size_t max_size);

}  // namespace advlogic

template <>
struct std::hash<advlogic::Formula> {
  std::size_t operator()(const advlogic::Formula& f) const noexcept { return f.hash(); }
};
