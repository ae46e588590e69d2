#include "advlogic/explanation.hpp"

#include <istream>
#include <ostream>
#include <unordered_set>

namespace advlogic {

FiniteUniverse::FiniteUniverse(ElementSet elements) : elements_(std::move(elements)) {
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (!index_.emplace(elements_[i], i).second) throw UniverseError("duplicate element '" + elements_[i] + "'");
  }
}

std::optional<std::size_t> FiniteUniverse::index_of(std::string_view e) const {
  auto it = index_.find(std::string(e));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Explanation::Explanation(std::vector<std::pair<std::string, std::string>> labeling) : entries_(std::move(labeling)) {
  index_.reserve(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!index_.emplace(entries_[i].first, i).second) {
      throw UniverseError("element '" + entries_[i].first + "' labelled twice");
    }
  }
}

const std::string& Explanation::operator()(std::string_view element) const {
  auto it = index_.find(std::string(element));
  if (it == index_.end()) throw UniverseError("element '" + std::string(element) + "' outside the universe");
  return entries_[it->second].second;
}

ElementSet Explanation::domain() const {
  ElementSet out;
  out.reserve(entries_.size());
  for (const auto& [e, l] : entries_) out.push_back(e);
  return out;
}

bool LabelBijection::add(const std::string& from, const std::string& to) {
  auto f = forward_.find(from);
  auto b = backward_.find(to);
  if (f != forward_.end() || b != backward_.end()) {
    return f != forward_.end() && b != backward_.end() && f->second == to && b->second == from;
  }
  forward_.emplace(from, to);
  backward_.emplace(to, from);
  pairs_.emplace_back(from, to);
  return true;
}

std::optional<std::string> LabelBijection::apply(std::string_view from) const {
  auto it = forward_.find(std::string(from));
  if (it == forward_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::string> LabelBijection::invert(std::string_view to) const {
  auto it = backward_.find(std::string(to));
  if (it == backward_.end()) return std::nullopt;
  return it->second;
}

std::string render_bijection(const LabelBijection& g) {
  std::string s = "{";
  for (std::size_t i = 0; i < g.pairs().size(); ++i) {
    if (i) s += ", ";
    s += g.pairs()[i].first + " -> " + g.pairs()[i].second;
  }
  return s + "}";
}

Explanation restrict(const Explanation& f, const ElementSet& x) {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(x.size());
  for (const auto& e : x) out.emplace_back(e, f(e));
  return Explanation(std::move(out));
}

std::optional<LabelBijection> isomorphic_on(const Explanation& f1, const Explanation& f2, const ElementSet& x) {
  LabelBijection g;
  for (const auto& e : x) {
    if (!g.add(f1(e), f2(e))) return std::nullopt;
  }
  return g;
}

bool explains(const Explanation& h, const Explanation& dataset) {
  return isomorphic_on(dataset, h, dataset.domain()).has_value();
}

namespace {

void check_subset(const ElementSet& x, const FiniteUniverse& u) {
  for (const auto& e : x) {
    if (!u.contains(e)) throw UniverseError("known element '" + e + "' outside the universe");
  }
}

void check_total(const std::vector<Explanation>& expls, const FiniteUniverse& u) {
  for (std::size_t i = 0; i < expls.size(); ++i) {
    for (const auto& e : u.elements()) {
      if (!expls[i].defined_on(e)) {
        throw UniverseError("explanation " + std::to_string(i + 1) + " has no label for '" + e + "'");
      }
    }
  }
}

// Every pair of explanations is isomorphic on `w`.
bool pairwise_isomorphic(const std::vector<Explanation>& expls, const ElementSet& w) {
  for (std::size_t i = 0; i < expls.size(); ++i) {
    for (std::size_t j = i + 1; j < expls.size(); ++j) {
      if (!isomorphic_on(expls[i], expls[j], w)) return false;
    }
  }
  return true;
}

}  // namespace

GeneralizationReport generalization_set(const std::vector<Explanation>& expls, const ElementSet& x,
                                        const FiniteUniverse& u) {
  check_subset(x, u);
  check_total(expls, u);
  struct Pair {
    std::size_t i;
    std::size_t j;
    LabelBijection g;
  };
  std::vector<Pair> pairs;
  for (std::size_t i = 0; i < expls.size(); ++i) {
    for (std::size_t j = i + 1; j < expls.size(); ++j) {
      auto g = isomorphic_on(expls[i], expls[j], x);
      if (!g) throw NotIsomorphicOnKnown(i, j);
      pairs.push_back({i, j, std::move(*g)});
    }
  }

  std::vector<bool> in_g(u.size(), false);
  for (const auto& e : x) in_g[*u.index_of(e)] = true;
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (in_g[k]) continue;
    const std::string& e = u.elements()[k];
    bool fits = true;
    for (const auto& p : pairs) {
      const std::string& a = expls[p.i](e);
      const std::string& b = expls[p.j](e);
      auto fa = p.g.apply(a);
      auto bb = p.g.invert(b);
      if ((fa && *fa != b) || (bb && *bb != a)) {
        fits = false;
        break;
      }
    }
    if (!fits) continue;
    in_g[k] = true;
    for (auto& p : pairs) p.g.add(expls[p.i](e), expls[p.j](e));
  }

  GeneralizationReport report;
  for (std::size_t k = 0; k < u.size(); ++k) {
    (in_g[k] ? report.generalization_set : report.adversarial_set).push_back(u.elements()[k]);
  }
  for (const auto& p : pairs) {
    report.bijections.push_back({p.i, p.j, *isomorphic_on(expls[p.i], expls[p.j], report.generalization_set)});
  }
  return report;
}

bool is_generalization_set(const ElementSet& g, const std::vector<Explanation>& expls, const ElementSet& x,
                           const FiniteUniverse& u) {
  std::unordered_set<std::string> members;
  for (const auto& e : g) {
    if (!u.contains(e) || !members.insert(e).second) return false;
  }
  for (const auto& e : x) {
    if (!members.count(e)) return false;
  }
  if (!pairwise_isomorphic(expls, g)) return false;
  ElementSet extended = g;
  extended.emplace_back();
  for (const auto& e : u.elements()) {
    if (members.count(e)) continue;
    extended.back() = e;
    if (pairwise_isomorphic(expls, extended)) return false;
  }
  return true;
}

bool is_adversarial_example(std::string_view e, const std::vector<Explanation>& expls, const ElementSet& x,
                            const FiniteUniverse& u) {
  if (!u.contains(e)) throw UniverseError("element '" + std::string(e) + "' outside the universe");
  GeneralizationReport r = generalization_set(expls, x, u);
  for (const auto& a : r.adversarial_set) {
    if (a == e) return true;
  }
  return false;
}

std::string render_report(const GeneralizationReport& report) {
  std::string s;
  s += "generalization_set " + std::to_string(report.generalization_set.size()) + "\n";
  for (const auto& e : report.generalization_set) s += "  " + e + "\n";
  s += "adversarial_set " + std::to_string(report.adversarial_set.size()) + "\n";
  for (const auto& e : report.adversarial_set) s += "  " + e + "\n";
  for (const auto& p : report.bijections) {
    s += "bijection " + std::to_string(p.first + 1) + " " + std::to_string(p.second + 1) + " " +
         render_bijection(p.bijection) + "\n";
  }
  return s;
}

FiniteUniverse formula_universe(const std::vector<Formula>& formulas) {
  ElementSet elements;
  elements.reserve(formulas.size());
  for (const auto& f : formulas) elements.push_back(render_formula(f));
  return FiniteUniverse(std::move(elements));
}

Explanation classification_explanation(const std::vector<Formula>& formulas, const LogicalMatrix& m,
                                       const EvaluationBudget& budget) {
  std::vector<std::pair<std::string, std::string>> labeling;
  labeling.reserve(formulas.size());
  for (const auto& f : formulas) {
    labeling.emplace_back(render_formula(f), std::string(label_name(classify(f, m, budget))));
  }
  return Explanation(std::move(labeling));
}

namespace {

bool skip_line(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line.empty() || line.front() == '#';
}

}  // namespace

ElementSet read_elements(std::istream& in) {
  ElementSet out;
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (skip_line(line)) continue;
    if (!seen.insert(line).second) throw ElementFormatError(number, "duplicate element '" + line + "'");
    out.push_back(line);
  }
  return out;
}

Explanation read_explanation(std::istream& in) {
  std::vector<std::pair<std::string, std::string>> labeling;
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (skip_line(line)) continue;
    auto tab = line.rfind('\t');
    if (tab == std::string::npos || tab + 1 == line.size()) {
      throw ElementFormatError(number, "expected <element>\\t<label>");
    }
    std::string element = line.substr(0, tab);
    if (!seen.insert(element).second) throw ElementFormatError(number, "element '" + element + "' labelled twice");
    labeling.emplace_back(std::move(element), line.substr(tab + 1));
  }
  return Explanation(std::move(labeling));
}

void write_explanation(std::ostream& out, const Explanation& f) {
  for (const auto& [e, l] : f.entries()) out << e << '\t' << l << '\n';
}

}  // namespace advlogic
