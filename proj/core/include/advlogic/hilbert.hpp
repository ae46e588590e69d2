#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <variant>
#include <vector>

#include "advlogic/formula.hpp"
#include "advlogic/matrix.hpp"

namespace advlogic {

// Concrete axioms; generality comes from the substitution rule.
using AxiomSet = std::vector<Formula>;

// X1 p->(q->p), X2 (p->(q->r))->((p->q)->(p->r)), X3 ~p->(p->q), X4 (p->~p)->~p.
AxiomSet hx_axioms();
Formula peirce_law();

// Step references are 0-based positions in Proof::steps; the text format
// uses 1-based numbers.
struct AxiomRef {
  std::size_t axiom;
};
struct ModusPonens {
  std::size_t major;  // step holding phi->psi
  std::size_t minor;  // step holding phi
};
struct SubstitutionRule {
  std::size_t source;
  Substitution substitution;
};
using Justification = std::variant<AxiomRef, ModusPonens, SubstitutionRule>;

struct ProofStep {
  Formula formula;
  Justification justification;
};

struct Proof {
  std::vector<ProofStep> steps;
  const Formula& conclusion() const { return steps.back().formula; }
};

struct ProofVerdict {
  bool accepted = true;
  std::size_t failed_step = 0;  // 0-based, meaningful when rejected
  std::string reason;
};

ProofVerdict check_proof(const Proof& proof, const AxiomSet& axioms);

class ProofFormatError : public std::runtime_error {
 public:
  ProofFormatError(std::size_t line, const std::string& what)
      : std::runtime_error("proof line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// One step per line:
//   <n>. <formula> ; AX<k>
//   <n>. <formula> ; MP <i> <j>
//   <n>. <formula> ; SUB <i> {v:=<formula>; ...}
// Lines starting with '#' and blank lines are ignored.
Proof parse_proof(std::string_view text);
std::string render_proof(const Proof& proof);

struct EnumerationBudget {
  std::size_t max_theorems = 10000;
  std::size_t max_size = 15;
  // Pool instances: each variable in `substituted_vars` is mapped to every
  // formula over `pool_vars` of size <= pool_max_size. 0 disables the pool.
  std::size_t pool_max_size = 3;
  std::vector<std::string> pool_vars = {"p", "q"};
  std::vector<std::string> substituted_vars = {"p", "q", "r"};
};

struct Theorem {
  std::size_t id;
  Formula formula;
};

// Forward saturation of an axiom set.
//
// Axioms are emitted first, in order. Afterwards the enumerator alternates
// between two sources:
//   * general theorems, chosen smallest first (size, then canonical
//     rendering) from a queue fed by condensed detachment: modus ponens
//     applied after the most general substitution that makes the premises
//     fit, with variables renamed to p, q, r, ... by first occurrence;
//   * pool instances of each general theorem, emitted right after it.
// Every emitted formula is new and every derivation unfolds into a proof
// that uses only AX, SUB and MP steps.
class TheoremEnumerator {
 public:
  TheoremEnumerator(AxiomSet axioms, EnumerationBudget budget);
  ~TheoremEnumerator();
  TheoremEnumerator(TheoremEnumerator&&) noexcept;
  TheoremEnumerator& operator=(TheoremEnumerator&&) noexcept;

  std::optional<Theorem> next();

  Proof proof_of(std::size_t id) const;
  const Formula& formula(std::size_t id) const { return records_[id].formula; }
  std::size_t emitted() const { return records_.size(); }
  // True once the queue ran dry before the theorem budget was reached.
  bool exhausted() const { return exhausted_; }
  // Whether the theorem was produced as a general (non pool) theorem.
  bool is_general(std::size_t id) const { return records_[id].general; }

 private:
  // Premise ids only; the unifier is recomputed when a proof is unfolded.
  struct Detachment {
    std::size_t major;
    std::size_t minor;
  };
  // Pool instance; `combination` indexes the pool choice per rewritten
  // variable, most significant digit first.
  struct Instance {
    std::size_t source;
    std::uint64_t combination;
  };
  using Derivation = std::variant<AxiomRef, Instance, Detachment>;

  struct Record {
    Formula formula;
    Derivation derivation;
    bool general;
  };

  struct Candidate {
    std::string key;
    Formula formula;
    Derivation derivation;
  };
  struct CandidateAfter {
    bool operator()(const Candidate& a, const Candidate& b) const {
      if (a.formula.size() != b.formula.size()) return a.formula.size() > b.formula.size();
      return a.key > b.key;
    }
  };

  struct InstanceCursor {
    std::size_t source;
    std::vector<std::string> vars;
    std::uint64_t combination = 0;
    std::uint64_t total = 0;
  };

  std::size_t emit(Formula f, Derivation d, bool general);
  void select_given(std::size_t id);
  void detach(std::size_t major, std::size_t minor);
  std::optional<Theorem> next_instance();
  bool subsumed(std::size_t id);
  // Pattern variables that the pool rewrites, in first-occurrence order.
  std::vector<std::string> pool_variables(const Formula& f) const;
  Substitution pool_substitution(const std::vector<std::string>& vars, std::uint64_t combination) const;

  AxiomSet axioms_;
  EnumerationBudget budget_;
  std::vector<Formula> pool_;

  std::vector<Record> records_;
  std::unordered_map<Formula, std::size_t> emitted_;
  std::unordered_set<Formula> queued_;
  std::priority_queue<Candidate, std::vector<Candidate>, CandidateAfter> queue_;
  std::vector<std::size_t> givens_;
  struct Workspace;  // flat copies of the givens plus unifier buffers
  std::unique_ptr<Workspace> work_;
  std::queue<std::size_t> instance_sources_;
  std::optional<InstanceCursor> cursor_;
  std::size_t next_axiom_ = 0;
  bool exhausted_ = false;
};

std::vector<std::pair<Formula, Proof>> enumerate_theorems(const AxiomSet& axioms,
                                                          const EnumerationBudget& budget);

// Best-effort search; absence of a proof says nothing about provability.
std::optional<Proof> bounded_prove(const Formula& target, const AxiomSet& axioms,
                                   const EnumerationBudget& budget);

// Substitution making `pattern` equal to `target`, if one exists.
std::optional<Substitution> match(const Formula& pattern, const Formula& target);

// Most general unifier of two formulas, fully resolved.
std::optional<Substitution> unify(const Formula& a, const Formula& b);

struct AxiomAudit {
  Formula axiom;
  TautologyVerdict verdict;
};

struct SoundnessReport {
  std::vector<AxiomAudit> axioms;
  MpPreservation modus_ponens;
  bool passed() const;
};

SoundnessReport soundness_audit(const AxiomSet& axioms, const LogicalMatrix& m);
std::string render_soundness_report(const SoundnessReport& report);

}  // namespace advlogic
