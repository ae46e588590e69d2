#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include <advlogic/dataset.hpp>

#include "oracles.hpp"

using namespace advlogic;

namespace {

std::string to_text(const std::vector<LabeledExample>& examples) {
  std::ostringstream out;
  write_dataset(out, examples);
  return out.str();
}

DatasetOptions small(std::size_t per_class) {
  DatasetOptions o;
  o.per_class = per_class;
  return o;
}

}  // namespace

TEST(ReferenceTable, ElevenRowsPerClass) {
  auto rows = reference_table();
  ASSERT_EQ(rows.size(), 22u);
  for (std::size_t i = 0; i < 22; ++i) EXPECT_EQ(rows[i].label, i < 11 ? Label::T : Label::C);
}

TEST(ReferenceTable, ValidatesUnderBothMatrices) {
  auto rows = reference_table();
  EXPECT_TRUE(validate_dataset(rows, matrix_T()).ok());
  EXPECT_TRUE(validate_dataset(rows, matrix_Tprime()).ok());
  for (const auto& r : rows) {
    bool is_t = r.label == Label::T;
    EXPECT_EQ(oracle::classical_tautology(r.formula), is_t);
    EXPECT_EQ(oracle::classical_contradiction(r.formula), !is_t);
    EXPECT_EQ(oracle::three_tautology(r.formula), is_t);
    EXPECT_EQ(oracle::three_never_two(r.formula), !is_t);
  }
}

TEST(ReferenceTable, PeirceRowIsTheOnlyViolation) {
  auto rows = reference_table();
  rows.push_back({peirce_law(), Label::T});
  EXPECT_TRUE(validate_dataset(rows, matrix_T()).ok());
  ValidationReport r = validate_dataset(rows, matrix_Tprime());
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].index, 22u);
  EXPECT_EQ(r.violations[0].actual, Label::Neither);
}

TEST(Generate, MinimalRun) {
  GeneratedDataset d = generate_dataset(small(1));
  ASSERT_EQ(d.examples.size(), 2u);
  EXPECT_EQ(d.examples[0].formula, parse_formula("p->(q->p)"));
  EXPECT_EQ(d.examples[0].label, Label::T);
  EXPECT_EQ(d.examples[1].formula, parse_formula("~(p->(q->p))"));
  EXPECT_EQ(d.examples[1].label, Label::C);
  EXPECT_TRUE(d.manifest.complete);
  EXPECT_EQ(d.manifest.theorems_used, 1u);
}

TEST(Generate, RejectsZero) { EXPECT_THROW(generate_dataset(small(0)), std::invalid_argument); }

TEST(Generate, CountsDistinctAndValid) {
  GeneratedDataset d = generate_dataset(small(3000));
  EXPECT_EQ(d.manifest.count_t, 3000u);
  EXPECT_EQ(d.manifest.count_c, 3000u);
  EXPECT_EQ(d.examples.size(), 6000u);
  std::unordered_set<std::string> seen;
  std::size_t t = 0;
  for (const auto& e : d.examples) {
    EXPECT_TRUE(seen.insert(render_formula(e.formula)).second);
    t += e.label == Label::T;
  }
  EXPECT_EQ(t, 3000u);
  EXPECT_TRUE(validate_dataset(d.examples, matrix_T(), 2).ok());
  EXPECT_TRUE(validate_dataset(d.examples, matrix_Tprime(), 2).ok());
}

TEST(Generate, TripleNegationRowLabelledC) {
  DatasetOptions o = small(300000);
  GeneratedDataset d = generate_dataset(o);
  const Formula target = parse_formula("~~~(~~~~p->~~p)");
  bool found = false;
  for (const auto& e : d.examples) {
    if (e.formula == target) {
      found = true;
      EXPECT_EQ(e.label, Label::C);
    }
  }
  EXPECT_TRUE(found);
}

TEST(Generate, Deterministic) {
  EXPECT_EQ(to_text(generate_dataset(small(2000)).examples), to_text(generate_dataset(small(2000)).examples));
}

TEST(Generate, PartialWhenBudgetRunsOut) {
  DatasetOptions o = small(1000);
  o.budget.max_theorems = 10;
  GeneratedDataset d = generate_dataset(o);
  EXPECT_FALSE(d.manifest.complete);
  EXPECT_EQ(d.manifest.theorems_used, 10u);
  EXPECT_EQ(d.manifest.count_t + d.manifest.count_c, d.examples.size());
}

TEST(Generate, WrapperDepthZeroGivesNoContradictions) {
  DatasetOptions o = small(5);
  o.wrapper_depth = 0;
  o.budget.max_theorems = 50;
  GeneratedDataset d = generate_dataset(o);
  EXPECT_EQ(d.manifest.count_t, 5u);
  EXPECT_EQ(d.manifest.count_c, 0u);
  EXPECT_FALSE(d.manifest.complete);
}

TEST(Files, RoundTripByteIdentical) {
  std::string canonical = "T\tp->q->p\nC\t~(p->q->p)\nT\t~~(~~~~p->~~p)\n";
  std::istringstream in(canonical);
  EXPECT_EQ(to_text(read_dataset(in)), canonical);
}

TEST(Files, EmptyAndComments) {
  std::istringstream empty("");
  EXPECT_TRUE(read_dataset(empty).empty());
  std::istringstream comments("# generated\n\nT\tp->p->p\n");
  EXPECT_EQ(read_dataset(comments).size(), 1u);
}

TEST(Files, RejectsBadLabelWithLineNumber) {
  std::istringstream in("T\tp->q->p\nX\tp\n");
  try {
    read_dataset(in);
    FAIL();
  } catch (const DatasetFormatError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  std::istringstream neither("Neither\tp\n");
  EXPECT_THROW(read_dataset(neither), DatasetFormatError);
  std::istringstream notab("T p\n");
  EXPECT_THROW(read_dataset(notab), DatasetFormatError);
  std::istringstream badformula("T\tp->\n");
  EXPECT_THROW(read_dataset(badformula), DatasetFormatError);
}

TEST(Files, SaveLoad) {
  auto path = std::filesystem::temp_directory_path() / "advlogic_dataset_test.tsv";
  auto rows = reference_table();
  save_dataset(path, rows);
  auto back = load_dataset(path);
  ASSERT_EQ(back.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(back[i].formula, rows[i].formula);
    EXPECT_EQ(back[i].label, rows[i].label);
  }
  std::filesystem::remove(path);
  EXPECT_THROW(load_dataset(path), std::runtime_error);
}

TEST(Manifest, RoundTrip) {
  GeneratedDataset d = generate_dataset(small(10));
  DatasetManifest m = parse_manifest(render_manifest(d.manifest));
  EXPECT_EQ(render_manifest(m), render_manifest(d.manifest));
  EXPECT_EQ(m.count_t, 10u);
  EXPECT_TRUE(m.complete);
  EXPECT_EQ(manifest_path("out/data.tsv"), std::filesystem::path("out/data.tsv.manifest"));
  EXPECT_THROW(parse_manifest("format_version=1\n"), std::runtime_error);
  EXPECT_THROW(parse_manifest("format_version=9\n"), std::runtime_error);
}
