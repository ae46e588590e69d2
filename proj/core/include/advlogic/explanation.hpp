#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "advlogic/formula.hpp"
#include "advlogic/matrix.hpp"

namespace advlogic {

// Ordered list of distinct elements. Element order is the canonical order
// used for tie-breaking.
using ElementSet = std::vector<std::string>;

class UniverseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FiniteUniverse {
 public:
  FiniteUniverse() = default;
  explicit FiniteUniverse(ElementSet elements);

  const ElementSet& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(std::string_view e) const { return index_.count(std::string(e)) != 0; }
  std::optional<std::size_t> index_of(std::string_view e) const;

 private:
  ElementSet elements_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Total labelling of a finite set of elements; entries keep insertion order.
class Explanation {
 public:
  Explanation() = default;
  explicit Explanation(std::vector<std::pair<std::string, std::string>> labeling);

  const std::string& operator()(std::string_view element) const;
  bool defined_on(std::string_view element) const { return index_.count(std::string(element)) != 0; }
  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }
  ElementSet domain() const;
  std::size_t size() const { return entries_.size(); }

  friend bool operator==(const Explanation& a, const Explanation& b) { return a.entries_ == b.entries_; }

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Bijection between the images of two explanations.
class LabelBijection {
 public:
  // Fails when the pair would break injectivity or functionality.
  bool add(const std::string& from, const std::string& to);
  std::optional<std::string> apply(std::string_view from) const;
  std::optional<std::string> invert(std::string_view to) const;
  // Pairs in insertion order.
  const std::vector<std::pair<std::string, std::string>>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }

  friend bool operator==(const LabelBijection& a, const LabelBijection& b) { return a.pairs_ == b.pairs_; }

 private:
  std::vector<std::pair<std::string, std::string>> pairs_;
  std::unordered_map<std::string, std::string> forward_;
  std::unordered_map<std::string, std::string> backward_;
};

std::string render_bijection(const LabelBijection& g);

Explanation restrict(const Explanation& f, const ElementSet& x);

// The bijection g with f2(x) = g(f1(x)) on x, built in the order of x.
std::optional<LabelBijection> isomorphic_on(const Explanation& f1, const Explanation& f2, const ElementSet& x);

// `dataset` pairs each known element with its label.
bool explains(const Explanation& h, const Explanation& dataset);

struct PairBijection {
  std::size_t first;
  std::size_t second;
  LabelBijection bijection;
};

struct GeneralizationReport {
  ElementSet generalization_set;  // universe order
  ElementSet adversarial_set;     // universe order
  std::vector<PairBijection> bijections;  // every pair i < j, over the generalization set
};

class NotIsomorphicOnKnown : public std::runtime_error {
 public:
  NotIsomorphicOnKnown(std::size_t i, std::size_t j)
      : std::runtime_error("explanations " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                           " are not isomorphic on the known set"),
        first(i),
        second(j) {}
  std::size_t first;
  std::size_t second;
};

// Greedy canonical generalization set: elements of U outside X are visited
// in universe order and kept when every pair stays isomorphic.
GeneralizationReport generalization_set(const std::vector<Explanation>& expls, const ElementSet& x,
                                        const FiniteUniverse& u);

bool is_generalization_set(const ElementSet& g, const std::vector<Explanation>& expls, const ElementSet& x,
                           const FiniteUniverse& u);

bool is_adversarial_example(std::string_view e, const std::vector<Explanation>& expls, const ElementSet& x,
                            const FiniteUniverse& u);

std::string render_report(const GeneralizationReport& report);

// Formula universes use minimal renderings as element identifiers.
FiniteUniverse formula_universe(const std::vector<Formula>& formulas);
Explanation classification_explanation(const std::vector<Formula>& formulas, const LogicalMatrix& m,
                                       const EvaluationBudget& budget = {});

class ElementFormatError : public std::runtime_error {
 public:
  ElementFormatError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// One element per line; blank lines and '#' lines are skipped.
ElementSet read_elements(std::istream& in);
// Lines "<element>\t<label>".
Explanation read_explanation(std::istream& in);
void write_explanation(std::ostream& out, const Explanation& f);

}  // namespace advlogic
