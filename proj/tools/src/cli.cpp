#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include <advlogic/dataset.hpp>
#include <advlogic/explanation.hpp>
#include <advlogic/formula.hpp>
#include <advlogic/hilbert.hpp>
#include <advlogic/matrix.hpp>
#include <advlogic/turing.hpp>

namespace advlogic::cli {

namespace {

// Raised for bad flag values that CLI11 cannot check on its own.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open " + path);
  buf << file.rdbuf();
  return buf.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << text)) throw UsageError("cannot write " + path);
}

// T, Tprime, or a matrix file.
LogicalMatrix load_matrix(const std::string& name, std::istream& in) {
  if (name == "T") return matrix_T();
  if (name == "Tprime") return matrix_Tprime();
  return parse_matrix(read_text(name, in));
}

AxiomSet load_axioms(const std::string& path, std::istream& in) {
  if (path.empty()) return hx_axioms();
  AxiomSet out;
  std::istringstream lines(read_text(path, in));
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty() || line[0] == '#') continue;
    out.push_back(parse_formula(line));
  }
  if (out.empty()) throw UsageError("axiom file " + path + " holds no formulas");
  return out;
}

std::string render_witness(const Witness& w) {
  std::string a = render_assignment(w.assignment);
  return (a.empty() ? "" : a + " ") + "value " + std::to_string(w.value);
}

CommandResult verdict_result(const EquivalenceVerdict& v) {
  int code = std::holds_alternative<ProvenDifferent>(v) ? kRefuted : kInconclusive;
  std::string text = render_verdict(v);
  if (text.empty() || text.back() != '\n') text += '\n';
  return {code, text};
}

std::size_t default_theorem_budget(std::size_t fallback) {
  const char* env = std::getenv(kBudgetEnv);
  if (env == nullptr || *env == '\0') return fallback;
  std::string text(env);
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || v == 0 || text[0] == '-') {
    throw UsageError(std::string(kBudgetEnv) + " must be a positive integer, got '" + text + "'");
  }
  return static_cast<std::size_t>(v);
}

struct EnumerationFlags {
  std::size_t budget = 0;
  std::size_t max_size = EnumerationBudget{}.max_size;
  std::size_t pool_size = EnumerationBudget{}.pool_max_size;
  std::string axioms;

  void attach(CLI::App* sub, const std::string& budget_help) {
    sub->add_option("--budget", budget, budget_help)->capture_default_str();
    sub->add_option("--max-size", max_size, "Largest formula size kept")->capture_default_str();
    sub->add_option("--pool-size", pool_size, "Largest pool formula size; 0 disables pool instances")
        ->capture_default_str();
    sub->add_option("--axioms", axioms, "File with one axiom per line (default: the four built-in axioms)");
  }

  EnumerationBudget to_budget() const {
    if (budget == 0 || max_size == 0) throw UsageError("--budget and --max-size must be positive");
    EnumerationBudget b;
    b.max_theorems = budget;
    b.max_size = max_size;
    b.pool_max_size = pool_size;
    return b;
  }
};

class Cli {
 public:
  Cli(std::istream& in, std::size_t theorem_budget, std::size_t dataset_budget)
      : in_(in), app_("Logical matrices, Hilbert proofs, explanation analysis and machine reductions", "advlogic") {
    app_.require_subcommand(1);
    app_.set_help_all_flag("--help-all", "Show help for every subcommand");
    enumeration_.budget = theorem_budget;
    prove_.budget = theorem_budget;
    dataset_budget_ = dataset_budget;
    add_logic();
    add_proofs();
    add_datasets();
    add_explanations();
    add_machines();
  }

  CommandResult run(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    try {
      app_.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
      app_.exit(e, out, err);
      return {kOk, out.str()};
    } catch (const CLI::CallForAllHelp& e) {
      app_.exit(e, out, err);
      return {kOk, out.str()};
    } catch (const CLI::ParseError& e) {
      const CLI::App* where = deepest_parsed();
      std::vector<std::string> rest = where->remaining();
      if (!rest.empty() && !rest.front().empty() && rest.front()[0] != '-' && where->get_subcommands({}).size() > 0) {
        err << "unknown command '" << rest.front() << "'\n";
      } else {
        app_.exit(e, out, err);
      }
      return {kUsage, err.str() + "\n" + where->help()};
    }
    return action_();
  }

 private:
  const CLI::App* deepest_parsed() const {
    const CLI::App* cur = &app_;
    while (true) {
      auto subs = cur->get_subcommands();
      if (subs.empty()) return cur;
      cur = subs.front();
    }
  }

  template <typename F>
  void on(CLI::App* sub, F f) {
    sub->callback([this, f] { action_ = f; });
  }

  // -------------------------------------------------------------------------
  void add_logic() {
    auto* taut = app_.add_subcommand("taut", "Check that a formula is a tautology of a matrix");
    taut->add_option("formula", formula_, "Formula over ~ and ->")->required();
    add_matrix_flag(taut);
    taut->add_option("--max-assignments", max_assignments_, "Assignment budget")->capture_default_str();
    on(taut, [this] {
      TautologyVerdict v = check_tautology(parse_formula(formula_), matrix(), assignment_budget());
      if (v.is_tautology()) return CommandResult{kOk, "tautology\n"};
      return CommandResult{kRefuted, "counterexample " + render_witness(*v.counterexample) + "\n"};
    });

    auto* never = app_.add_subcommand("never", "Check that a formula never takes a designated value");
    never->add_option("formula", formula_, "Formula over ~ and ->")->required();
    add_matrix_flag(never);
    never->add_option("--max-assignments", max_assignments_, "Assignment budget")->capture_default_str();
    on(never, [this] {
      NeverDesignatedVerdict v = check_never_designated(parse_formula(formula_), matrix(), assignment_budget());
      if (v.never_designated()) return CommandResult{kOk, "never designated\n"};
      return CommandResult{kRefuted, "designated at " + render_witness(*v.witness) + "\n"};
    });

    auto* eval = app_.add_subcommand("eval", "Evaluate a formula under one assignment");
    eval->add_option("formula", formula_, "Formula over ~ and ->")->required();
    eval->add_option("assignment", assignments_, "Variable values such as p=0 q=2");
    add_matrix_flag(eval);
    on(eval, [this] {
      LogicalMatrix m = matrix();
      Assignment a;
      for (const auto& item : assignments_) {
        auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) throw UsageError("assignment '" + item + "' is not name=value");
        std::string name = item.substr(0, eq);
        int v = -1;
        try {
          std::size_t used = 0;
          v = std::stoi(item.substr(eq + 1), &used);
          if (used != item.size() - eq - 1) v = -1;
        } catch (const std::exception&) {
          v = -1;
        }
        if (v < 0 || static_cast<std::size_t>(v) >= m.value_count()) {
          throw UsageError("value in '" + item + "' is not a truth value of the matrix");
        }
        a[name] = static_cast<TruthValue>(v);
      }
      TruthValue v = evaluate(parse_formula(formula_), m, a);
      return CommandResult{kOk, "value " + std::to_string(v) +
                                    (m.is_designated(v) ? " designated\n" : " not designated\n")};
    });

    auto* classify_cmd = app_.add_subcommand("classify", "Label a formula T, C or Neither under a matrix");
    classify_cmd->add_option("formula", formula_, "Formula over ~ and ->")->required();
    add_matrix_flag(classify_cmd);
    classify_cmd->add_option("--max-assignments", max_assignments_, "Assignment budget")->capture_default_str();
    on(classify_cmd, [this] {
      LogicalMatrix m = matrix();
      Formula f = parse_formula(formula_);
      Label l = classify(f, m, assignment_budget());
      std::string report(label_name(l));
      if (l == Label::Neither) {
        report += " values";
        for (TruthValue v : value_range(f, m, assignment_budget())) report += " " + std::to_string(v);
      }
      return CommandResult{kOk, report + "\n"};
    });

    auto* audit = app_.add_subcommand("audit", "Check axioms and modus ponens against a matrix");
    add_matrix_flag(audit);
    audit->add_option("--axioms", axioms_file_, "File with one axiom per line");
    on(audit, [this] {
      SoundnessReport r = soundness_audit(load_axioms(axioms_file_, in_), matrix());
      return CommandResult{r.passed() ? kOk : kRefuted, render_soundness_report(r)};
    });
  }

  // -------------------------------------------------------------------------
  void add_proofs() {
    auto* check = app_.add_subcommand("check-proof", "Check a proof file step by step");
    check->add_option("file", path_, "Proof file, or - for stdin")->required();
    check->add_option("--axioms", axioms_file_, "File with one axiom per line");
    on(check, [this] {
      Proof p = parse_proof(read_text(path_, in_));
      if (p.steps.empty()) throw UsageError("proof has no steps");
      ProofVerdict v = check_proof(p, load_axioms(axioms_file_, in_));
      if (v.accepted) {
        return CommandResult{kOk, "accepted " + std::to_string(p.steps.size()) + " steps proving " +
                                      render_formula(p.conclusion()) + "\n"};
      }
      return CommandResult{kRefuted, "rejected at step " + std::to_string(v.failed_step + 1) + ": " + v.reason + "\n"};
    });

    auto* prove = app_.add_subcommand("prove", "Search for a proof of a formula");
    prove->add_option("formula", formula_, "Formula over ~ and ->")->required();
    prove_.attach(prove, "Theorems to enumerate before giving up");
    on(prove, [this] {
      Formula target = parse_formula(formula_);
      EnumerationBudget budget = prove_.to_budget();
      AxiomSet axioms = load_axioms(prove_.axioms, in_);
      // The three-valued matrix is only a certificate for the built-in axioms.
      if (prove_.axioms.empty()) {
        TautologyVerdict v = check_tautology(target, matrix_Tprime());
        if (!v.is_tautology()) {
          return CommandResult{kRefuted, "unprovable: not a Tprime tautology, counterexample " +
                                             render_witness(*v.counterexample) + "\n"};
        }
      }
      std::optional<Proof> p = bounded_prove(target, axioms, budget);
      if (!p) {
        return CommandResult{kInconclusive,
                             "no proof within " + std::to_string(budget.max_theorems) + " theorems\n"};
      }
      return CommandResult{kOk, render_proof(*p)};
    });

    auto* enumerate = app_.add_subcommand("enumerate", "List theorems in discovery order");
    enumeration_.attach(enumerate, "Number of theorems to emit");
    enumerate->add_flag("--proofs", with_proofs_, "Print a proof after each theorem");
    on(enumerate, [this] {
      TheoremEnumerator e(load_axioms(enumeration_.axioms, in_), enumeration_.to_budget());
      std::ostringstream out;
      while (auto t = e.next()) {
        out << t->id + 1 << '\t' << render_formula(t->formula) << '\n';
        if (with_proofs_) out << render_proof(e.proof_of(t->id)) << '\n';
      }
      if (e.exhausted()) out << "# search space exhausted after " << e.emitted() << " theorems\n";
      return CommandResult{kOk, out.str()};
    });
  }

  // -------------------------------------------------------------------------
  void add_datasets() {
    auto* gen = app_.add_subcommand("gen-dataset", "Generate a labelled T/C dataset with a manifest");
    gen->add_option("--per-class", gen_.per_class, "Examples per class")->capture_default_str();
    gen->add_option("--max-size", gen_.budget.max_size, "Largest theorem size")->capture_default_str();
    gen->add_option("--wrapper-depth", gen_.wrapper_depth, "Largest number of negations wrapped around a theorem")
        ->capture_default_str();
    gen->add_option("--pool-size", gen_.budget.pool_max_size, "Largest pool formula size; 0 disables pool instances")
        ->capture_default_str();
    gen->add_option("--budget", dataset_budget_, "Theorems to enumerate at most")->capture_default_str();
    gen->add_option("--out", path_, "Dataset file; the manifest goes next to it (default: print the dataset)");
    on(gen, [this] {
      DatasetOptions o = gen_;
      o.budget.max_theorems = dataset_budget_;
      if (o.per_class == 0 || o.budget.max_size == 0 || o.budget.max_theorems == 0) {
        throw UsageError("--per-class, --max-size and --budget must be positive");
      }
      GeneratedDataset d = generate_dataset(o);
      std::ostringstream out;
      if (path_.empty()) {
        write_dataset(out, d.examples);
      } else {
        save_dataset(path_, d.examples);
        write_text(manifest_path(path_).string(), render_manifest(d.manifest));
        out << "wrote " << d.examples.size() << " examples (T " << d.manifest.count_t << ", C "
            << d.manifest.count_c << ") from " << d.manifest.theorems_used << " theorems to " << path_ << '\n'
            << "manifest " << manifest_path(path_).string() << '\n';
      }
      if (!d.manifest.complete) {
        std::string note = "# incomplete: theorem supply ran out before " + std::to_string(o.per_class) +
                           " examples per class\n";
        return CommandResult{kInconclusive, out.str() + note};
      }
      return CommandResult{kOk, out.str()};
    });

    auto* validate = app_.add_subcommand("validate-dataset", "Check every label of a dataset under matrices");
    validate->add_option("file", path_, "Dataset file, or - for stdin")->required();
    validate->add_option("--matrix", matrices_, "T, Tprime or a matrix file; repeatable (default: T and Tprime)");
    validate->add_option("--jobs", jobs_, "Worker threads")->capture_default_str();
    validate->add_option("--show", show_, "Violations to list per matrix")->capture_default_str();
    on(validate, [this] {
      std::istringstream text(read_text(path_, in_));
      std::vector<LabeledExample> examples = read_dataset(text);
      std::vector<std::string> names = matrices_.empty() ? std::vector<std::string>{"T", "Tprime"} : matrices_;
      std::ostringstream out;
      bool ok = true;
      for (const auto& name : names) {
        ValidationReport r = validate_dataset(examples, load_matrix(name, in_), std::max(1u, jobs_));
        out << name << ": checked " << r.checked << ", violations " << r.violations.size() << '\n';
        for (std::size_t i = 0; i < r.violations.size() && i < show_; ++i) {
          const Violation& v = r.violations[i];
          out << "  example " << v.index + 1 << " " << render_formula(examples[v.index].formula) << " expected "
              << label_name(v.expected) << " got " << label_name(v.actual) << '\n';
        }
        ok = ok && r.ok();
      }
      return CommandResult{ok ? kOk : kRefuted, out.str()};
    });
  }

  // -------------------------------------------------------------------------
  void add_explanations() {
    auto* iso = app_.add_subcommand("iso", "Check whether two explanations are isomorphic on a set");
    iso->add_option("first", path_, "Explanation file (element<TAB>label)")->required();
    iso->add_option("second", second_path_, "Explanation file (element<TAB>label)")->required();
    iso->add_option("--on", known_file_, "Element file (default: every element of the first explanation)");
    on(iso, [this] {
      Explanation f1 = explanation_file(path_);
      Explanation f2 = explanation_file(second_path_);
      ElementSet x = known_file_.empty() ? f1.domain() : element_file(known_file_);
      auto g = isomorphic_on(f1, f2, x);
      if (g) return CommandResult{kOk, "isomorphic " + render_bijection(*g) + "\n"};
      return CommandResult{kRefuted, "not isomorphic on " + std::to_string(x.size()) + " elements\n"};
    });

    auto* analyze = app_.add_subcommand("analyze", "Compute the generalization set and adversarial examples");
    analyze->add_option("--universe", universe_file_, "Universe file, one element per line")->required();
    analyze->add_option("--known", known_file_, "Known-sample file, one element per line")->required();
    analyze->add_option("--explain", explain_files_, "Explanation file; repeatable");
    analyze->add_option("--explain-matrix", explain_matrices_,
                        "Classify universe formulas under T, Tprime or a matrix file; repeatable");
    on(analyze, [this] {
      FiniteUniverse u(element_file(universe_file_));
      ElementSet x = element_file(known_file_);
      std::vector<Explanation> expls;
      for (const auto& path : explain_files_) expls.push_back(explanation_file(path));
      if (!explain_matrices_.empty()) {
        std::vector<Formula> formulas;
        for (const auto& e : u.elements()) formulas.push_back(parse_formula(e));
        for (const auto& name : explain_matrices_) {
          Explanation raw = classification_explanation(formulas, load_matrix(name, in_));
          // Keys use the universe's own spelling.
          std::vector<std::pair<std::string, std::string>> entries;
          for (std::size_t i = 0; i < formulas.size(); ++i) entries.emplace_back(u.elements()[i], raw.entries()[i].second);
          expls.emplace_back(std::move(entries));
        }
      }
      if (expls.empty()) throw UsageError("analyze needs at least one --explain or --explain-matrix");
      return CommandResult{kOk, render_report(generalization_set(expls, x, u))};
    });
  }

  // -------------------------------------------------------------------------
  void add_machines() {
    auto* tm = app_.add_subcommand("tm", "Turing machine simulation, reductions and probes");
    tm->require_subcommand(1);

    auto* sim = tm->add_subcommand("sim", "Run a machine on an input");
    sim->add_option("machine", path_, "Machine file, or - for stdin")->required();
    sim->add_option("input", input_, "Input over 0 and 1 (default: empty)");
    sim->add_option("--steps", steps_, "Step budget")->capture_default_str();
    on(sim, [this] {
      SimulationResult r = simulate(machine_file(path_), input_, steps_);
      return CommandResult{std::holds_alternative<Halted>(r) ? kOk : kInconclusive, render_result(r) + "\n"};
    });

    auto* equiv = tm->add_subcommand("equiv", "Bounded input-output comparison of two machines");
    equiv->add_option("first", path_, "Machine file");
    equiv->add_option("second", second_path_, "Machine file");
    equiv->add_option("--encoded", encoded_file_, "File holding an encoded machine pair instead");
    equiv->add_option("--max-length", max_length_, "Compare on all inputs up to this length")->capture_default_str();
    equiv->add_option("--steps", steps_, "Step budget per run")->capture_default_str();
    on(equiv, [this] {
      MachinePair p = machine_pair();
      return verdict_result(bounded_io_equivalence(p.first, p.second, shortlex_strings(max_length_), steps_));
    });

    auto* reduce = tm->add_subcommand("reduce", "Many-one reductions between machine problems");
    reduce->require_subcommand(1);
    auto* h2s = reduce->add_subcommand("halt-to-same", "Map <M, w> to a pair that is equivalent iff M loops on w");
    h2s->add_option("machine", path_, "Machine file");
    h2s->add_option("input", input_, "Input w over 0 and 1 (default: empty)");
    h2s->add_option("--encoded", encoded_file_, "File holding an encoded <M, w> instead");
    h2s->add_option("--out", out_file_, "Write the encoded pair here (default: print it)");
    on(h2s, [this] {
      std::string encoded = encoded_file_.empty()
                                ? encode_halt_instance(HaltInstance{machine_file(path_), input_})
                                : trimmed(read_text(encoded_file_, in_));
      return emit(reduce_halt_to_co_same(std::string_view(encoded)));
    });

    auto* s2d = reduce->add_subcommand("same-to-desiredone", "Map <M1, M2> to <A, M1, {}> with a constant learner A");
    s2d->add_option("first", path_, "Machine file M1");
    s2d->add_option("second", second_path_, "Machine file M2");
    s2d->add_option("--encoded", encoded_file_, "File holding an encoded pair instead");
    s2d->add_option("--out", out_file_, "Write the encoded triple here (default: print it)");
    on(s2d, [this] {
      return emit(reduce_same_to_desiredone(std::string_view(encode_machine_pair(machine_pair()))));
    });

    auto* probe = tm->add_subcommand("probe", "Run a learner on a target's examples and compare what it returns");
    probe->add_option("--learner", path_, "Learner machine file");
    probe->add_option("--target", second_path_, "Target machine file");
    probe->add_option("--example", examples_, "Example input for the target; repeatable");
    probe->add_option("--encoded", encoded_file_, "File holding an encoded <A, E, X> instead");
    probe->add_option("--steps", probe_budget_.step_budget, "Step budget for target and returned machine")
        ->capture_default_str();
    probe->add_option("--learner-steps", probe_budget_.learner_budget, "Step budget for the learner")
        ->capture_default_str();
    probe->add_option("--probe-length", probe_budget_.probe_length, "Compare on all inputs up to this length")
        ->capture_default_str();
    on(probe, [this] {
      if (!encoded_file_.empty()) {
        DesiredOneInstance d = decode_desiredone_instance(trimmed(read_text(encoded_file_, in_)));
        std::vector<std::string> x;
        for (const auto& [input, output] : d.examples) x.push_back(input);
        return verdict_result(desiredone_probe(d.learner, d.target, x, probe_budget_));
      }
      if (path_.empty() || second_path_.empty()) throw UsageError("give --learner and --target, or --encoded");
      return verdict_result(desiredone_probe(machine_file(path_), machine_file(second_path_), examples_, probe_budget_));
    });
  }

  // -------------------------------------------------------------------------
  void add_matrix_flag(CLI::App* sub) {
    sub->add_option("--matrix", matrix_name_, "T, Tprime or a matrix file")->capture_default_str();
  }

  LogicalMatrix matrix() const { return load_matrix(matrix_name_, in_); }
  EvaluationBudget assignment_budget() const { return EvaluationBudget{max_assignments_}; }

  static std::string trimmed(std::string s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    return s;
  }

  TuringMachine machine_file(const std::string& path) const {
    if (path.empty()) throw UsageError("missing machine file");
    return parse_machine(read_text(path, in_));
  }

  MachinePair machine_pair() const {
    if (!encoded_file_.empty()) return decode_machine_pair(trimmed(read_text(encoded_file_, in_)));
    if (path_.empty() || second_path_.empty()) throw UsageError("give two machine files or --encoded");
    return MachinePair{machine_file(path_), machine_file(second_path_)};
  }

  ElementSet element_file(const std::string& path) const {
    std::istringstream s(read_text(path, in_));
    return read_elements(s);
  }

  Explanation explanation_file(const std::string& path) const {
    std::istringstream s(read_text(path, in_));
    return read_explanation(s);
  }

  CommandResult emit(const std::string& encoded) const {
    if (out_file_.empty()) return {kOk, encoded + "\n"};
    write_text(out_file_, encoded + "\n");
    return {kOk, "wrote " + std::to_string(encoded.size()) + " bytes to " + out_file_ + "\n"};
  }

  std::istream& in_;
  CLI::App app_;
  std::function<CommandResult()> action_;

  std::string formula_;
  std::string matrix_name_ = "T";
  std::uint64_t max_assignments_ = EvaluationBudget{}.max_assignments;
  std::vector<std::string> assignments_;
  std::string axioms_file_;
  std::string path_;
  std::string second_path_;
  EnumerationFlags prove_;
  EnumerationFlags enumeration_;
  bool with_proofs_ = false;
  DatasetOptions gen_;
  std::size_t dataset_budget_ = 0;
  std::vector<std::string> matrices_;
  unsigned jobs_ = 1;
  std::size_t show_ = 20;
  std::string universe_file_;
  std::string known_file_;
  std::vector<std::string> explain_files_;
  std::vector<std::string> explain_matrices_;
  std::string input_;
  std::size_t steps_ = kDefaultStepBudget;
  std::string encoded_file_;
  std::string out_file_;
  std::size_t max_length_ = ProbeBudget{}.probe_length;
  std::vector<std::string> examples_;
  ProbeBudget probe_budget_;
};

}  // namespace

CommandResult run(const std::vector<std::string>& args, std::istream& in) {
  try {
    std::size_t theorems = default_theorem_budget(EnumerationBudget{}.max_theorems);
    std::size_t dataset = default_theorem_budget(DatasetOptions{}.budget.max_theorems);
    Cli cli(in, theorems, dataset);
    return cli.run(args);
  } catch (const BudgetExceeded& e) {
    return {kInconclusive, std::string("budget exceeded: ") + e.what() + "\n"};
  } catch (const MembershipError& e) {
    return {kInconclusive, std::string("precondition not established: ") + e.what() + "\n"};
  } catch (const NotIsomorphicOnKnown& e) {
    return {kUsage, std::string("precondition failed: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    // Parse, format, decode and file errors all land here.
    return {kUsage, std::string("error: ") + e.what() + "\n"};
  }
}

CommandResult run(const std::vector<std::string>& args) { return run(args, std::cin); }

}  // namespace advlogic::cli
