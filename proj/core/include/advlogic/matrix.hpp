#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "advlogic/formula.hpp"

namespace advlogic {

using TruthValue = std::uint8_t;

// A finite logical matrix: values 0..n-1, a designated subset, and tables
// for ~ and ->. The implication table is indexed [antecedent][consequent].
class LogicalMatrix {
 public:
  LogicalMatrix(std::size_t value_count, std::vector<TruthValue> designated,
                std::vector<TruthValue> neg_table, std::vector<std::vector<TruthValue>> imp_table);

  std::size_t value_count() const { return value_count_; }
  const std::vector<TruthValue>& designated() const { return designated_; }
  bool is_designated(TruthValue v) const { return designated_mask_[v]; }
  TruthValue negate(TruthValue v) const { return neg_[v]; }
  TruthValue implies(TruthValue a, TruthValue b) const { return imp_[a * value_count_ + b]; }

  const std::vector<TruthValue>& neg_table() const { return neg_; }
  std::vector<std::vector<TruthValue>> imp_table() const;

  friend bool operator==(const LogicalMatrix&, const LogicalMatrix&) = default;

 private:
  std::size_t value_count_;
  std::vector<TruthValue> designated_;
  std::vector<bool> designated_mask_;
  std::vector<TruthValue> neg_;
  std::vector<TruthValue> imp_;  // row-major
};

// Two-valued classical matrix, designated {1}.
const LogicalMatrix& matrix_T();
// Three-valued matrix characterising provability from hx_axioms(), designated {2}.
const LogicalMatrix& matrix_Tprime();

// Text format:
//   values n
//   designated v1 v2 ...
//   neg v0 ... v(n-1)
//   imp 0: v ... v        (n rows)
// '#' starts a comment.
LogicalMatrix parse_matrix(std::string_view text);
std::string render_matrix(const LogicalMatrix& m);

using Assignment = std::map<std::string, TruthValue>;
std::string render_assignment(const Assignment& a);

class UnassignedVariable : public std::runtime_error {
 public:
  explicit UnassignedVariable(const std::string& name)
      : std::runtime_error("variable '" + name + "' is not assigned"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EvaluationBudget {
  std::uint64_t max_assignments = std::uint64_t{1} << 24;
};

TruthValue evaluate(const Formula& f, const LogicalMatrix& m, const Assignment& a);

struct Witness {
  Assignment assignment;
  TruthValue value;
};

struct TautologyVerdict {
  std::optional<Witness> counterexample;
  bool is_tautology() const { return !counterexample; }
};

struct NeverDesignatedVerdict {
  std::optional<Witness> witness;
  bool never_designated() const { return !witness; }
};

// Both checks scan assignments lexicographically: variables in
// variables_of order (first one most significant), values ascending.
TautologyVerdict check_tautology(const Formula& f, const LogicalMatrix& m,
                                 const EvaluationBudget& budget = {});
NeverDesignatedVerdict check_never_designated(const Formula& f, const LogicalMatrix& m,
                                              const EvaluationBudget& budget = {});

enum class Label { T, C, Neither };
std::string_view label_name(Label l);
std::optional<Label> parse_label(std::string_view s);

Label classify(const Formula& f, const LogicalMatrix& m, const EvaluationBudget& budget = {});

struct MpPreservation {
  bool preserves = true;
  // (a, b) with a and imp[a][b] designated but b not.
  std::optional<std::pair<TruthValue, TruthValue>> counterexample;
};

MpPreservation check_mp_preserves(const LogicalMatrix& m);

// Every value the formula takes across all assignments, ascending.
std::vector<TruthValue> value_range(const Formula& f, const LogicalMatrix& m,
                                    const EvaluationBudget& budget = {});

}  // namespace advlogic
