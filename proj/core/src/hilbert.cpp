#include "advlogic/hilbert.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "flat_term.hpp"

namespace advlogic {

AxiomSet hx_axioms() {
  return {
      parse_formula("p->(q->p)"),
      parse_formula("(p->(q->r))->((p->q)->(p->r))"),
      parse_formula("~p->(p->q)"),
      parse_formula("(p->~p)->~p"),
  };
}

Formula peirce_law() { return parse_formula("((p->q)->p)->p"); }

// ---------------------------------------------------------------------------
// Proof checking

ProofVerdict check_proof(const Proof& proof, const AxiomSet& axioms) {
  if (proof.steps.empty()) return {false, 0, "empty proof"};
  for (std::size_t k = 0; k < proof.steps.size(); ++k) {
    const auto& step = proof.steps[k];
    auto reject = [&](std::string reason) { return ProofVerdict{false, k, std::move(reason)}; };
    if (const auto* ax = std::get_if<AxiomRef>(&step.justification)) {
      if (ax->axiom >= axioms.size()) return reject("AX: no axiom X" + std::to_string(ax->axiom + 1));
      if (!(axioms[ax->axiom] == step.formula)) {
        return reject("AX: formula is not axiom X" + std::to_string(ax->axiom + 1));
      }
    } else if (const auto* mp = std::get_if<ModusPonens>(&step.justification)) {
      if (mp->major >= k || mp->minor >= k) return reject("MP: premise does not precede the step");
      const Formula& major = proof.steps[mp->major].formula;
      if (!major.is_implication()) return reject("MP: major premise is not an implication");
      if (!(major.antecedent() == proof.steps[mp->minor].formula)) {
        return reject("MP: antecedent of the major premise differs from the minor premise");
      }
      if (!(major.consequent() == step.formula)) {
        return reject("MP: conclusion differs from the consequent of the major premise");
      }
    } else {
      const auto& sub = std::get<SubstitutionRule>(step.justification);
      if (sub.source >= k) return reject("SUB: source does not precede the step");
      if (!(apply_substitution(proof.steps[sub.source].formula, sub.substitution) == step.formula)) {
        return reject("SUB: formula is not the stated instance of its source");
      }
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Proof text format

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::size_t parse_index(const std::string& tok, std::size_t line) {
  if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw ProofFormatError(line, "expected a step number, found '" + tok + "'");
  }
  return std::stoul(tok);
}

Substitution parse_substitution_text(std::string_view text, std::size_t line) {
  std::string body = trim(text);
  if (body.size() < 2 || body.front() != '{' || body.back() != '}') {
    throw ProofFormatError(line, "substitution must be written {v:=formula; ...}");
  }
  body = body.substr(1, body.size() - 2);
  Substitution s;
  std::size_t start = 0;
  while (start <= body.size()) {
    auto end = body.find(';', start);
    std::string binding = trim(std::string_view(body).substr(start, end == std::string::npos ? std::string::npos : end - start));
    start = end == std::string::npos ? body.size() + 1 : end + 1;
    if (binding.empty()) continue;
    auto assign = binding.find(":=");
    if (assign == std::string::npos) throw ProofFormatError(line, "binding '" + binding + "' lacks ':='");
    std::string name = trim(std::string_view(binding).substr(0, assign));
    if (!is_valid_variable_name(name)) throw ProofFormatError(line, "bad variable '" + name + "'");
    try {
      if (!s.emplace(name, parse_formula(binding.substr(assign + 2))).second) {
        throw ProofFormatError(line, "variable '" + name + "' bound twice");
      }
    } catch (const ParseError& e) {
      throw ProofFormatError(line, e.what());
    }
  }
  return s;
}

}  // namespace

Proof parse_proof(std::string_view text) {
  Proof proof;
  std::istringstream in{std::string(text)};
  std::size_t line_no = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    auto dot = line.find('.');
    if (dot == std::string::npos) throw ProofFormatError(line_no, "expected '<n>. <formula> ; <rule>'");
    std::size_t number = parse_index(trim(std::string_view(line).substr(0, dot)), line_no);
    if (number != proof.steps.size() + 1) {
      throw ProofFormatError(line_no, "expected step " + std::to_string(proof.steps.size() + 1));
    }
    auto semi = line.find(';', dot);
    if (semi == std::string::npos) throw ProofFormatError(line_no, "missing '; <rule>'");
    Formula f = [&] {
      try {
        return parse_formula(std::string_view(line).substr(dot + 1, semi - dot - 1));
      } catch (const ParseError& e) {
        throw ProofFormatError(line_no, e.what());
      }
    }();
    std::string rule = trim(std::string_view(line).substr(semi + 1));
    auto reference = [&](const std::string& tok) {
      std::size_t i = parse_index(tok, line_no);
      if (i == 0 || i > proof.steps.size()) {
        throw ProofFormatError(line_no, "step reference " + tok + " does not precede this step");
      }
      return i - 1;
    };
    if (rule.rfind("AX", 0) == 0) {
      std::size_t k = parse_index(trim(std::string_view(rule).substr(2)), line_no);
      if (k == 0) throw ProofFormatError(line_no, "axioms are numbered from 1");
      proof.steps.push_back({std::move(f), AxiomRef{k - 1}});
    } else if (rule.rfind("MP", 0) == 0) {
      std::istringstream args(rule.substr(2));
      std::string i, j, extra;
      args >> i >> j;
      if (i.empty() || j.empty() || (args >> extra)) throw ProofFormatError(line_no, "MP takes two step numbers");
      proof.steps.push_back({std::move(f), ModusPonens{reference(i), reference(j)}});
    } else if (rule.rfind("SUB", 0) == 0) {
      std::string rest = trim(std::string_view(rule).substr(3));
      auto brace = rest.find('{');
      if (brace == std::string::npos) throw ProofFormatError(line_no, "SUB needs a substitution");
      std::size_t source = reference(trim(std::string_view(rest).substr(0, brace)));
      proof.steps.push_back(
          {std::move(f), SubstitutionRule{source, parse_substitution_text(std::string_view(rest).substr(brace), line_no)}});
    } else {
      throw ProofFormatError(line_no, "unknown rule '" + rule + "'");
    }
  }
  return proof;
}

std::string render_proof(const Proof& proof) {
  std::ostringstream out;
  for (std::size_t k = 0; k < proof.steps.size(); ++k) {
    const auto& step = proof.steps[k];
    out << k + 1 << ". " << render_formula(step.formula) << " ; ";
    if (const auto* ax = std::get_if<AxiomRef>(&step.justification)) {
      out << "AX" << ax->axiom + 1;
    } else if (const auto* mp = std::get_if<ModusPonens>(&step.justification)) {
      out << "MP " << mp->major + 1 << ' ' << mp->minor + 1;
    } else {
      const auto& sub = std::get<SubstitutionRule>(step.justification);
      out << "SUB " << sub.source + 1 << ' ' << render_substitution(sub.substitution);
    }
    out << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Matching and unification

namespace {

bool match_into(const Formula& pattern, const Formula& target, Substitution& s) {
  switch (pattern.kind()) {
    case FormulaKind::Variable: {
      auto [it, inserted] = s.emplace(pattern.name(), target);
      return inserted || it->second == target;
    }
    case FormulaKind::Negation:
      return target.is_negation() && match_into(pattern.operand(), target.operand(), s);
    case FormulaKind::Implication:
      return target.is_implication() && match_into(pattern.antecedent(), target.antecedent(), s) &&
             match_into(pattern.consequent(), target.consequent(), s);
  }
  return false;
}

using Bindings = std::unordered_map<std::string, Formula>;

Formula walk(Formula f, const Bindings& b) {
  while (f.is_variable()) {
    auto it = b.find(f.name());
    if (it == b.end()) break;
    f = it->second;
  }
  return f;
}

bool occurs(const std::string& name, const Formula& f, const Bindings& b) {
  Formula g = walk(f, b);
  switch (g.kind()) {
    case FormulaKind::Variable:
      return g.name() == name;
    case FormulaKind::Negation:
      return occurs(name, g.operand(), b);
    case FormulaKind::Implication:
      return occurs(name, g.antecedent(), b) || occurs(name, g.consequent(), b);
  }
  return false;
}

bool unify_into(const Formula& x, const Formula& y, Bindings& b) {
  Formula a = walk(x, b);
  Formula c = walk(y, b);
  if (a.is_variable() && c.is_variable() && a.name() == c.name()) return true;
  if (a.is_variable()) {
    if (occurs(a.name(), c, b)) return false;
    b.emplace(a.name(), c);
    return true;
  }
  if (c.is_variable()) {
    if (occurs(c.name(), a, b)) return false;
    b.emplace(c.name(), a);
    return true;
  }
  if (a.kind() != c.kind()) return false;
  if (a.is_negation()) return unify_into(a.operand(), c.operand(), b);
  return unify_into(a.antecedent(), c.antecedent(), b) && unify_into(a.consequent(), c.consequent(), b);
}

Formula resolve(const Formula& f, const Bindings& b) {
  switch (f.kind()) {
    case FormulaKind::Variable: {
      auto it = b.find(f.name());
      return it == b.end() ? f : resolve(it->second, b);
    }
    case FormulaKind::Negation: {
      Formula op = resolve(f.operand(), b);
      return op.identity() == f.operand().identity() ? f : neg(op);
    }
    case FormulaKind::Implication: {
      Formula lhs = resolve(f.antecedent(), b);
      Formula rhs = resolve(f.consequent(), b);
      if (lhs.identity() == f.antecedent().identity() && rhs.identity() == f.consequent().identity()) return f;
      return imp(lhs, rhs);
    }
  }
  return f;
}

}  // namespace

std::optional<Substitution> match(const Formula& pattern, const Formula& target) {
  Substitution s;
  if (!match_into(pattern, target, s)) return std::nullopt;
  return s;
}

std::optional<Substitution> unify(const Formula& a, const Formula& b) {
  Bindings bindings;
  if (!unify_into(a, b, bindings)) return std::nullopt;
  Substitution s;
  for (const auto& [name, value] : bindings) s.emplace(name, resolve(value, bindings));
  return s;
}

// ---------------------------------------------------------------------------
// Condensed detachment

namespace {

struct DetachmentResult {
  Formula conclusion;
  Substitution major_substitution;
  Substitution minor_substitution;
};

// Detaches `minor` from `major` after renaming the minor premise apart and
// unifying it with the major antecedent. Returns nothing when they do not
// unify or the conclusion would exceed max_size.
std::optional<DetachmentResult> condensed_detachment(const Formula& major, const Formula& minor,
                                                     std::size_t max_size) {
  if (!major.is_implication()) return std::nullopt;
  auto major_vars = variables_of(major);
  auto minor_vars = variables_of(minor);
  std::unordered_set<std::string> taken(major_vars.begin(), major_vars.end());
  taken.insert(minor_vars.begin(), minor_vars.end());
  Substitution rename;
  std::size_t fresh = 0;
  for (const auto& v : minor_vars) {
    std::string name;
    do {
      name = "z_" + std::to_string(fresh++);
    } while (taken.count(name) != 0);
    rename.emplace(v, var(name));
  }
  Formula renamed_minor = apply_substitution(minor, rename);
  auto mgu = unify(major.antecedent(), renamed_minor);
  if (!mgu) return std::nullopt;
  Formula raw = apply_substitution(major.consequent(), *mgu);
  if (raw.size() > max_size) return std::nullopt;

  Substitution normalize;
  auto raw_vars = variables_of(raw);
  for (std::size_t i = 0; i < raw_vars.size(); ++i) normalize.emplace(raw_vars[i], var(detail::canonical_variable(i)));

  auto image = [&](const std::string& v) {
    auto it = mgu->find(v);
    return apply_substitution(it == mgu->end() ? var(v) : it->second, normalize);
  };
  DetachmentResult out{apply_substitution(raw, normalize), {}, {}};
  for (const auto& v : major_vars) out.major_substitution.emplace(v, image(v));
  for (const auto& v : minor_vars) out.minor_substitution.emplace(v, image(rename.at(v).name()));
  return out;
}

bool is_identity(const Substitution& s) {
  return std::all_of(s.begin(), s.end(), [](const auto& kv) {
    return kv.second.is_variable() && kv.second.name() == kv.first;
  });
}

}  // namespace

// ---------------------------------------------------------------------------
// Theorem enumeration

struct TheoremEnumerator::Workspace {
  std::vector<detail::FlatTerm> given_terms;
  detail::Unifier unifier;
};

TheoremEnumerator::TheoremEnumerator(AxiomSet axioms, EnumerationBudget budget)
    : axioms_(std::move(axioms)), budget_(std::move(budget)), work_(std::make_unique<Workspace>()) {
  if (axioms_.empty()) throw std::invalid_argument("axiom set is empty");
  if (budget_.max_theorems == 0 || budget_.max_size == 0) {
    throw std::invalid_argument("enumeration budget must be positive");
  }
  if (budget_.pool_max_size > 0) pool_ = enumerate_formulas(budget_.pool_vars, budget_.pool_max_size);
}

TheoremEnumerator::~TheoremEnumerator() = default;
TheoremEnumerator::TheoremEnumerator(TheoremEnumerator&&) noexcept = default;
TheoremEnumerator& TheoremEnumerator::operator=(TheoremEnumerator&&) noexcept = default;

std::size_t TheoremEnumerator::emit(Formula f, Derivation d, bool general) {
  std::size_t id = records_.size();
  emitted_.emplace(f, id);
  records_.push_back({std::move(f), std::move(d), general});
  return id;
}

bool TheoremEnumerator::subsumed(std::size_t id) {
  detail::FlatTerm term = detail::flatten(records_[id].formula);
  bool covered = std::any_of(work_->given_terms.begin(), work_->given_terms.end(),
                             [&](const detail::FlatTerm& g) { return work_->unifier.matches(g, term); });
  if (!covered) work_->given_terms.push_back(std::move(term));
  return covered;
}

void TheoremEnumerator::detach(std::size_t major, std::size_t minor) {
  const auto& terms = work_->given_terms;
  auto conclusion = work_->unifier.detach(terms[major], terms[minor], budget_.max_size);
  if (!conclusion) return;
  if (emitted_.count(*conclusion) != 0 || !queued_.insert(*conclusion).second) return;
  queue_.push({render_formula(*conclusion), *conclusion, Detachment{givens_[major], givens_[minor]}});
}

void TheoremEnumerator::select_given(std::size_t id) {
  if (pool_.size() > 0) instance_sources_.push(id);
  if (subsumed(id)) return;
  givens_.push_back(id);
  std::size_t fresh = givens_.size() - 1;
  for (std::size_t g = 0; g < givens_.size(); ++g) {
    detach(g, fresh);
    if (g != fresh) detach(fresh, g);
  }
}

std::vector<std::string> TheoremEnumerator::pool_variables(const Formula& f) const {
  std::vector<std::string> out;
  for (const auto& v : variables_of(f)) {
    if (std::find(budget_.substituted_vars.begin(), budget_.substituted_vars.end(), v) !=
        budget_.substituted_vars.end()) {
      out.push_back(v);
    }
  }
  return out;
}

Substitution TheoremEnumerator::pool_substitution(const std::vector<std::string>& vars,
                                                  std::uint64_t combination) const {
  Substitution s;
  for (std::size_t i = vars.size(); i > 0; --i) {
    s.emplace(vars[i - 1], pool_[combination % pool_.size()]);
    combination /= pool_.size();
  }
  return s;
}

std::optional<Theorem> TheoremEnumerator::next_instance() {
  while (true) {
    if (!cursor_) {
      if (instance_sources_.empty()) return std::nullopt;
      std::size_t source = instance_sources_.front();
      instance_sources_.pop();
      InstanceCursor c{source, pool_variables(records_[source].formula)};
      if (c.vars.empty()) continue;
      c.total = 1;
      for (std::size_t i = 0; i < c.vars.size(); ++i) c.total *= pool_.size();
      cursor_ = std::move(c);
    }
    auto& c = *cursor_;
    if (c.combination >= c.total) {
      cursor_.reset();
      continue;
    }
    std::uint64_t combination = c.combination++;
    Substitution s = pool_substitution(c.vars, combination);
    if (is_identity(s)) continue;
    Formula f = apply_substitution(records_[c.source].formula, s);
    if (f.size() > budget_.max_size || emitted_.count(f) != 0) continue;
    std::size_t id = emit(f, Instance{c.source, combination}, false);
    return Theorem{id, records_[id].formula};
  }
}

std::optional<Theorem> TheoremEnumerator::next() {
  if (records_.size() >= budget_.max_theorems) return std::nullopt;
  if (next_axiom_ < axioms_.size()) {
    while (next_axiom_ < axioms_.size()) {
      std::size_t k = next_axiom_++;
      if (emitted_.count(axioms_[k]) != 0) continue;
      std::size_t id = emit(axioms_[k], AxiomRef{k}, true);
      select_given(id);
      return Theorem{id, records_[id].formula};
    }
  }
  if (auto t = next_instance()) return t;
  while (!queue_.empty()) {
    // The queue only holds const access; the candidate is copied out.
    Candidate c = queue_.top();
    queue_.pop();
    queued_.erase(c.formula);
    if (emitted_.count(c.formula) != 0) continue;
    std::size_t id = emit(std::move(c.formula), std::move(c.derivation), true);
    select_given(id);
    return Theorem{id, records_[id].formula};
  }
  exhausted_ = true;
  return std::nullopt;
}

Proof TheoremEnumerator::proof_of(std::size_t id) const {
  Proof proof;
  std::unordered_map<std::size_t, std::size_t> step_of;
  std::function<std::size_t(std::size_t)> build = [&](std::size_t t) -> std::size_t {
    if (auto it = step_of.find(t); it != step_of.end()) return it->second;
    const Record& r = records_[t];
    std::size_t step = 0;
    if (const auto* ax = std::get_if<AxiomRef>(&r.derivation)) {
      proof.steps.push_back({r.formula, *ax});
      step = proof.steps.size() - 1;
    } else if (const auto* inst = std::get_if<Instance>(&r.derivation)) {
      std::size_t source = build(inst->source);
      auto s = pool_substitution(pool_variables(records_[inst->source].formula), inst->combination);
      proof.steps.push_back({r.formula, SubstitutionRule{source, std::move(s)}});
      step = proof.steps.size() - 1;
    } else {
      const auto& d = std::get<Detachment>(r.derivation);
      std::size_t major_step = build(d.major);
      std::size_t minor_step = build(d.minor);
      const Formula& major = records_[d.major].formula;
      const Formula& minor = records_[d.minor].formula;
      auto cd = condensed_detachment(major, minor, budget_.max_size);
      if (!cd || !(cd->conclusion == r.formula)) throw std::logic_error("stored detachment does not replay");
      auto instantiate = [&](std::size_t from, const Formula& f, const Substitution& s) {
        if (is_identity(s)) return from;
        proof.steps.push_back({apply_substitution(f, s), SubstitutionRule{from, s}});
        return proof.steps.size() - 1;
      };
      std::size_t major_instance = instantiate(major_step, major, cd->major_substitution);
      std::size_t minor_instance = instantiate(minor_step, minor, cd->minor_substitution);
      proof.steps.push_back({r.formula, ModusPonens{major_instance, minor_instance}});
      step = proof.steps.size() - 1;
    }
    step_of.emplace(t, step);
    return step;
  };
  build(id);
  return proof;
}

std::vector<std::pair<Formula, Proof>> enumerate_theorems(const AxiomSet& axioms, const EnumerationBudget& budget) {
  TheoremEnumerator e(axioms, budget);
  std::vector<std::pair<Formula, Proof>> out;
  while (auto t = e.next()) out.emplace_back(t->formula, e.proof_of(t->id));
  return out;
}

std::optional<Proof> bounded_prove(const Formula& target, const AxiomSet& axioms, const EnumerationBudget& budget) {
  // Pool instances are redundant here since matching covers them.
  EnumerationBudget general = budget;
  general.pool_max_size = 0;
  TheoremEnumerator e(axioms, general);
  while (auto t = e.next()) {
    std::optional<Substitution> s;
    if (e.is_general(t->id)) {
      s = match(t->formula, target);
    } else if (t->formula == target) {
      s = Substitution{};
    }
    if (!s) continue;
    Proof proof = e.proof_of(t->id);
    if (!is_identity(*s)) {
      proof.steps.push_back({target, SubstitutionRule{proof.steps.size() - 1, std::move(*s)}});
    }
    return proof;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Soundness audit

bool SoundnessReport::passed() const {
  return modus_ponens.preserves &&
         std::all_of(axioms.begin(), axioms.end(), [](const AxiomAudit& a) { return a.verdict.is_tautology(); });
}

SoundnessReport soundness_audit(const AxiomSet& axioms, const LogicalMatrix& m) {
  SoundnessReport report;
  for (const auto& ax : axioms) report.axioms.push_back({ax, check_tautology(ax, m)});
  report.modus_ponens = check_mp_preserves(m);
  return report;
}

std::string render_soundness_report(const SoundnessReport& report) {
  std::ostringstream out;
  for (std::size_t i = 0; i < report.axioms.size(); ++i) {
    const auto& a = report.axioms[i];
    out << 'X' << i + 1 << ' ' << render_formula(a.axiom) << ": ";
    if (a.verdict.is_tautology()) {
      out << "designated under every assignment\n";
    } else {
      out << "counterexample " << render_assignment(a.verdict.counterexample->assignment) << " value "
          << int(a.verdict.counterexample->value) << '\n';
    }
  }
  out << "mp preserves designation: ";
  if (report.modus_ponens.preserves) {
    out << "yes\n";
  } else {
    out << "no (a=" << int(report.modus_ponens.counterexample->first)
        << ", b=" << int(report.modus_ponens.counterexample->second) << ")\n";
  }
  out << "sub preserves designation: yes (substitution lemma)\n";
  out << "overall: " << (report.passed() ? "pass" : "fail") << '\n';
  return out.str();
}

}  // namespace advlogic
