#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <advlogic/dataset.hpp>
#include <advlogic/hilbert.hpp>
#include <advlogic/turing.hpp>

#include "cli.hpp"
#include "machines.hpp"
#include "oracles.hpp"

using advlogic::cli::CommandResult;
using advlogic::cli::run;

namespace fs = std::filesystem;

namespace {

CommandResult call(std::vector<std::string> args, const std::string& stdin_text = "") {
  args.insert(args.begin(), "advlogic");
  std::istringstream in(stdin_text);
  return run(args, in);
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("advlogic-cli-" + std::to_string(::getpid()) + "-" + std::to_string(counter_++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name, const std::string& text) const {
    std::ofstream(path_ / name, std::ios::binary) << text;
    return (path_ / name).string();
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST(Cli, PeirceUnderT) {
  CommandResult r = call({"taut", "((p->q)->p)->p", "--matrix", "T"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.report, "tautology\n");
}

TEST(Cli, PeirceUnderTprime) {
  // First failing assignment found by walking the nine cases.
  advlogic::Formula peirce = advlogic::parse_formula("((p->q)->p)->p");
  int fp = -1, fq = -1, fv = -1;
  for (int p = 0; p < 3 && fp < 0; ++p) {
    for (int q = 0; q < 3 && fp < 0; ++q) {
      int v = oracle::three(peirce, {{"p", p}, {"q", q}});
      if (v != 2) fp = p, fq = q, fv = v;
    }
  }
  CommandResult r = call({"taut", "((p->q)->p)->p", "--matrix", "Tprime"});
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_EQ(r.report, "counterexample p=" + std::to_string(fp) + " q=" + std::to_string(fq) + " value " +
                          std::to_string(fv) + "\n");
}

TEST(Cli, SyntaxErrorReportsOffset) {
  CommandResult r = call({"taut", "(p->"});
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_TRUE(contains(r.report, "offset 4")) << r.report;
}

TEST(Cli, UnknownCommandsAndMissingArguments) {
  CommandResult r = call({"frobnicate"});
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_TRUE(contains(r.report, "unknown command 'frobnicate'"));
  EXPECT_TRUE(contains(r.report, "Usage:"));
  EXPECT_EQ(call({}).exit_code, 2);
  EXPECT_EQ(call({"tm"}).exit_code, 2);
  EXPECT_EQ(call({"tm", "reduce", "nope"}).exit_code, 2);
  EXPECT_EQ(call({"taut"}).exit_code, 2);
  EXPECT_EQ(call({"taut", "p", "--bogus"}).exit_code, 2);
}

TEST(Cli, HelpAtEveryLevel) {
  const std::vector<std::vector<std::string>> levels{
      {"--help"},
      {"taut", "--help"},
      {"never", "--help"},
      {"eval", "--help"},
      {"classify", "--help"},
      {"audit", "--help"},
      {"check-proof", "--help"},
      {"prove", "--help"},
      {"enumerate", "--help"},
      {"gen-dataset", "--help"},
      {"validate-dataset", "--help"},
      {"iso", "--help"},
      {"analyze", "--help"},
      {"tm", "--help"},
      {"tm", "sim", "--help"},
      {"tm", "equiv", "--help"},
      {"tm", "reduce", "--help"},
      {"tm", "reduce", "halt-to-same", "--help"},
      {"tm", "reduce", "same-to-desiredone", "--help"},
      {"tm", "probe", "--help"},
  };
  for (const auto& args : levels) {
    CommandResult r = call(args);
    EXPECT_EQ(r.exit_code, 0) << args.front();
    EXPECT_TRUE(contains(r.report, "Usage:")) << args.front();
  }
  EXPECT_TRUE(contains(call({"gen-dataset", "--help"}).report, "--wrapper-depth"));
}

TEST(Cli, EvalAndClassify) {
  CommandResult e = call({"eval", "p->q", "p=2", "q=0", "--matrix", "Tprime"});
  EXPECT_EQ(e.exit_code, 0);
  EXPECT_EQ(e.report, "value 0 not designated\n");
  EXPECT_EQ(call({"eval", "p->q", "p=1"}).exit_code, 2);
  EXPECT_EQ(call({"eval", "p", "p=7"}).exit_code, 2);
  EXPECT_EQ(call({"classify", "~~(((p->q)->p)->p)", "--matrix", "Tprime"}).report, "T\n");
  EXPECT_EQ(call({"classify", "((p->q)->p)->p", "--matrix", "Tprime"}).report, "Neither values 0 2\n");
  EXPECT_EQ(call({"never", "~(p->p)", "--matrix", "Tprime"}).exit_code, 0);
  EXPECT_EQ(call({"never", "p"}).exit_code, 1);
}

TEST(Cli, MatrixFromFile) {
  TempDir dir;
  std::string m = dir.file("m.txt", "values 3\ndesignated 2\nneg 1 2 1\nimp 0: 2 1 2\nimp 1: 2 2 2\nimp 2: 0 1 2\n");
  EXPECT_EQ(call({"taut", "((p->q)->p)->p", "--matrix", m}).exit_code, 1);
  EXPECT_EQ(call({"taut", "p->p", "--matrix", m}).exit_code, 0);
  EXPECT_EQ(call({"taut", "p", "--matrix", dir.path("missing.txt")}).exit_code, 2);
}

TEST(Cli, AssignmentBudget) {
  CommandResult r = call({"taut", "a->b->c->d->e->f", "--matrix", "Tprime", "--max-assignments", "10"});
  EXPECT_EQ(r.exit_code, 3);
}

TEST(Cli, Audit) {
  EXPECT_EQ(call({"audit", "--matrix", "Tprime"}).exit_code, 0);
  TempDir dir;
  std::string ax = dir.file("ax.txt", "p->q->p\n((p->q)->p)->p\n");
  CommandResult r = call({"audit", "--matrix", "Tprime", "--axioms", ax});
  EXPECT_EQ(r.exit_code, 1);
}

TEST(Cli, ProveAndCheck) {
  CommandResult p = call({"prove", "q->(p->(q->p))", "--budget", "200"});
  ASSERT_EQ(p.exit_code, 0) << p.report;
  CommandResult c = call({"check-proof", "-"}, p.report);
  EXPECT_EQ(c.exit_code, 0) << c.report;
  EXPECT_TRUE(contains(c.report, "proving q->p->q->p"));

  CommandResult peirce = call({"prove", "((p->q)->p)->p"});
  EXPECT_EQ(peirce.exit_code, 1);
  EXPECT_TRUE(contains(peirce.report, "p=0 q=1 value 0"));

  // Provable but not within two theorems.
  EXPECT_EQ(call({"prove", "p->~~p", "--budget", "2"}).exit_code, 3);
}

TEST(Cli, CheckProofRejections) {
  CommandResult bad = call({"check-proof", "-"}, "1. p->q->p ; AX1\n2. q ; MP 1 1\n");
  EXPECT_EQ(bad.exit_code, 1);
  EXPECT_TRUE(contains(bad.report, "step 2"));
  EXPECT_EQ(call({"check-proof", "-"}, "1. p->q->p ; AX9\n").exit_code, 1);
  EXPECT_EQ(call({"check-proof", "-"}, "1. p->q->p ; FOO\n").exit_code, 2);
}

TEST(Cli, EnumerateHonoursEnvironmentBudget) {
  ::setenv(advlogic::cli::kBudgetEnv, "4", 1);
  CommandResult r = call({"enumerate"});
  ::unsetenv(advlogic::cli::kBudgetEnv);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.report, "1\tp->q->p\n2\t(p->q->r)->(p->q)->p->r\n3\t~p->p->q\n4\t(p->~p)->~p\n");
  // An explicit flag wins over the environment.
  ::setenv(advlogic::cli::kBudgetEnv, "4", 1);
  CommandResult flagged = call({"enumerate", "--budget", "2"});
  ::setenv(advlogic::cli::kBudgetEnv, "zero", 1);
  CommandResult broken = call({"enumerate"});
  ::unsetenv(advlogic::cli::kBudgetEnv);
  EXPECT_EQ(std::count(flagged.report.begin(), flagged.report.end(), '\n'), 2);
  EXPECT_EQ(broken.exit_code, 2);
}

TEST(Cli, GenerateAndValidateDataset) {
  TempDir dir;
  std::string out = dir.path("d.tsv");
  CommandResult g = call({"gen-dataset", "--per-class", "40", "--max-size", "12", "--wrapper-depth", "1", "--out", out});
  ASSERT_EQ(g.exit_code, 0) << g.report;
  auto examples = advlogic::load_dataset(out);
  EXPECT_EQ(examples.size(), 80u);
  // Axioms are exempt from the size bound; everything else respects it.
  const advlogic::AxiomSet axioms = advlogic::hx_axioms();
  for (const auto& e : examples) {
    advlogic::Formula theorem = e.label == advlogic::Label::T ? e.formula : e.formula.operand();
    if (std::find(axioms.begin(), axioms.end(), theorem) != axioms.end()) continue;
    EXPECT_LE(theorem.size(), 12u) << advlogic::render_formula(e.formula);
  }
  advlogic::DatasetManifest m = advlogic::parse_manifest(slurp(advlogic::manifest_path(out).string()));
  EXPECT_EQ(m.per_class, 40u);
  EXPECT_EQ(m.wrapper_depth, 1u);
  EXPECT_EQ(m.budget.max_size, 12u);
  EXPECT_TRUE(m.complete);

  CommandResult v = call({"validate-dataset", out, "--jobs", "3"});
  EXPECT_EQ(v.exit_code, 0) << v.report;
  EXPECT_EQ(v.report, "T: checked 80, violations 0\nTprime: checked 80, violations 0\n");

  // Identical flags give identical bytes.
  std::string again = dir.path("again.tsv");
  call({"gen-dataset", "--per-class", "40", "--max-size", "12", "--wrapper-depth", "1", "--out", again});
  EXPECT_EQ(slurp(out), slurp(again));
}

TEST(Cli, ValidateFindsMislabels) {
  CommandResult r = call({"validate-dataset", "-", "--matrix", "Tprime"}, "T\tp->p\nT\t((p->q)->p)->p\n");
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_TRUE(contains(r.report, "example 2 ((p->q)->p)->p expected T got Neither")) << r.report;
  EXPECT_EQ(call({"validate-dataset", "-"}, "X\tp\n").exit_code, 2);
}

TEST(Cli, IncompleteDatasetIsInconclusive) {
  CommandResult r = call({"gen-dataset", "--per-class", "50", "--budget", "3", "--pool-size", "0"});
  EXPECT_EQ(r.exit_code, 3);
  EXPECT_TRUE(contains(r.report, "incomplete"));
}

TEST(Cli, IsoAndAnalyze) {
  TempDir dir;
  std::string e1 = dir.file("e1.tsv", "a\tcat\nb\tcat\nc\tdog\n");
  std::string e2 = dir.file("e2.tsv", "a\tchat\nb\tchat\nc\tchien\n");
  std::string e3 = dir.file("e3.tsv", "a\tx\nb\ty\nc\tx\n");
  CommandResult iso = call({"iso", e1, e2});
  EXPECT_EQ(iso.exit_code, 0);
  EXPECT_EQ(iso.report, "isomorphic {cat -> chat, dog -> chien}\n");
  EXPECT_EQ(call({"iso", e1, e3}).exit_code, 1);

  std::string u = dir.file("u.txt", "a\nb\nc\n");
  std::string x = dir.file("x.txt", "a\nc\n");
  CommandResult a = call({"analyze", "--universe", u, "--known", x, "--explain", e1, "--explain", e3});
  EXPECT_EQ(a.exit_code, 2);
  std::string x2 = dir.file("x2.txt", "a\n");
  CommandResult ok = call({"analyze", "--universe", u, "--known", x2, "--explain", e1, "--explain", e3});
  EXPECT_EQ(ok.exit_code, 0);
  // b splits e3 but not e1, c splits e1 but not e3.
  EXPECT_TRUE(contains(ok.report, "generalization_set 1\n  a\nadversarial_set 2\n  b\n  c\n")) << ok.report;
  std::string e4 = dir.file("e4.tsv", "a\tx\nb\tx\nc\ty\n");
  CommandResult both = call({"analyze", "--universe", u, "--known", x2, "--explain", e1, "--explain", e4});
  EXPECT_TRUE(contains(both.report, "generalization_set 3\n  a\n  b\n  c\nadversarial_set 0\n")) << both.report;
}

TEST(Cli, AnalyzeTableWithPeirce) {
  TempDir dir;
  std::string known;
  for (const auto& row : advlogic::reference_table()) known += advlogic::render_formula(row.formula) + "\n";
  std::string x = dir.file("x.txt", known);
  std::string u = dir.file("u.txt", known + "((p->q)->p)->p\n");
  CommandResult r = call({"analyze", "--universe", u, "--known", x, "--explain-matrix", "T", "--explain-matrix", "Tprime"});
  ASSERT_EQ(r.exit_code, 0) << r.report;
  EXPECT_TRUE(contains(r.report, "generalization_set 22\n"));
  EXPECT_TRUE(contains(r.report, "adversarial_set 1\n  ((p->q)->p)->p\n"));
  EXPECT_TRUE(contains(r.report, "bijection 1 2 {T -> T, C -> C}"));
}

TEST(Cli, MachineSimulation) {
  TempDir dir;
  std::string inc = dir.file("inc.tm", advlogic::render_machine(corpus::incrementer()));
  CommandResult r = call({"tm", "sim", inc, "1"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.report, "halted output \"11\" steps 2\n");
  std::string loop = dir.file("loop.tm", advlogic::render_machine(advlogic::build_looper()));
  EXPECT_EQ(call({"tm", "sim", loop, "", "--steps", "100"}).exit_code, 3);
  EXPECT_EQ(call({"tm", "sim", inc, "12"}).exit_code, 2);
  EXPECT_EQ(call({"tm", "sim", "-"}, "states 1 start 0\n0 1 -> 3 1 R\n").exit_code, 2);
}

TEST(Cli, ReductionPipeline) {
  TempDir dir;
  std::string inc = dir.file("inc.tm", advlogic::render_machine(corpus::incrementer()));
  std::string pair = dir.path("pair.enc");
  ASSERT_EQ(call({"tm", "reduce", "halt-to-same", inc, "11", "--out", pair}).exit_code, 0);
  advlogic::MachinePair p = advlogic::decode_machine_pair(slurp(pair).substr(0, slurp(pair).size() - 1));
  EXPECT_EQ(p.first, advlogic::build_looper());
  EXPECT_EQ(p.second, advlogic::build_halt_probe(corpus::incrementer(), "11"));

  CommandResult eq = call({"tm", "equiv", "--encoded", pair});
  EXPECT_EQ(eq.exit_code, 1) << eq.report;

  std::string inst = dir.path("inst.enc");
  ASSERT_EQ(call({"tm", "reduce", "same-to-desiredone", "--encoded", pair, "--out", inst}).exit_code, 0);
  CommandResult probe = call({"tm", "probe", "--encoded", inst});
  EXPECT_EQ(probe.exit_code, 1) << probe.report;

  // Printing instead of writing gives the same encoding.
  CommandResult printed = call({"tm", "reduce", "halt-to-same", inc, "11"});
  EXPECT_EQ(printed.report, slurp(pair));
}

TEST(Cli, ProbeAgreesForSameMachines) {
  TempDir dir;
  std::string halt = dir.file("h.tm", advlogic::render_machine(advlogic::build_immediate_halter()));
  std::string inst = dir.path("inst.enc");
  ASSERT_EQ(call({"tm", "reduce", "same-to-desiredone", halt, halt, "--out", inst}).exit_code, 0);
  CommandResult r = call({"tm", "probe", "--encoded", inst, "--probe-length", "3"});
  EXPECT_EQ(r.exit_code, 3) << r.report;
  EXPECT_TRUE(contains(r.report, "indistinguishable"));

  std::string loop = dir.file("loop.tm", advlogic::render_machine(advlogic::build_looper()));
  CommandResult m = call({"tm", "probe", "--learner", halt, "--target", loop, "--example", "0", "--steps", "50"});
  EXPECT_EQ(m.exit_code, 3);
  EXPECT_TRUE(contains(m.report, "precondition"));
}

TEST(Cli, CorruptEncodingIsAUsageError) {
  EXPECT_EQ(call({"tm", "equiv", "--encoded", "-"}, "3:abc").exit_code, 2);
  EXPECT_EQ(call({"tm", "probe", "--encoded", "-"}, "garbage").exit_code, 2);
}

TEST(Property, CliIsDeterministic) {
  const std::vector<std::vector<std::string>> commands{
      {"taut", "((p->q)->p)->p", "--matrix", "Tprime"},
      {"enumerate", "--budget", "50"},
      {"gen-dataset", "--per-class", "30"},
      {"prove", "p->~~p", "--budget", "400"},
  };
  for (const auto& c : commands) {
    CommandResult a = call(c);
    CommandResult b = call(c);
    EXPECT_EQ(a.exit_code, b.exit_code);
    EXPECT_EQ(a.report, b.report);
  }
}
