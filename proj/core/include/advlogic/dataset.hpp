#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "advlogic/formula.hpp"
#include "advlogic/hilbert.hpp"
#include "advlogic/matrix.hpp"

namespace advlogic {

struct LabeledExample {
  Formula formula;
  Label label;  // T or C
};

inline constexpr int kDatasetFormatVersion = 1;

struct DatasetManifest {
  int format_version = kDatasetFormatVersion;
  std::size_t per_class = 0;
  std::size_t count_t = 0;
  std::size_t count_c = 0;
  std::size_t wrapper_depth = 0;
  std::size_t theorems_used = 0;
  EnumerationBudget budget;
  bool complete = false;
};

struct DatasetOptions {
  std::size_t per_class = 1000;
  // Largest negation depth used to wrap theorems: even depths feed class T,
  // odd depths class C.
  std::size_t wrapper_depth = 3;
  EnumerationBudget budget = {10'000'000, 15, 3, {"p", "q"}, {"p", "q", "r"}};
};

struct GeneratedDataset {
  std::vector<LabeledExample> examples;
  DatasetManifest manifest;
};

// Walks the theorem stream of the axioms in order; each theorem t contributes
// ~^k t for k = 0..wrapper_depth, labelled T for even k and C for odd k,
// skipping duplicates and classes that are already full.
GeneratedDataset generate_dataset(const DatasetOptions& options, const AxiomSet& axioms = hx_axioms());

class DatasetFormatError : public std::runtime_error {
 public:
  DatasetFormatError(std::size_t line, const std::string& what)
      : std::runtime_error("dataset line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Lines are "<label>\t<formula>" with label T or C; '#' lines are comments.
std::vector<LabeledExample> read_dataset(std::istream& in);
void write_dataset(std::ostream& out, const std::vector<LabeledExample>& examples);
std::vector<LabeledExample> load_dataset(const std::filesystem::path& path);
void save_dataset(const std::filesystem::path& path, const std::vector<LabeledExample>& examples);

std::string render_manifest(const DatasetManifest& m);
DatasetManifest parse_manifest(std::string_view text);
std::filesystem::path manifest_path(const std::filesystem::path& dataset);

struct Violation {
  std::size_t index;  // position in the dataset
  Label expected;
  Label actual;
};

struct ValidationReport {
  std::size_t checked = 0;
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Label T rows must classify T and label C rows must classify C under `m`.
ValidationReport validate_dataset(const std::vector<LabeledExample>& examples, const LogicalMatrix& m,
                                  unsigned jobs = 1);

// The 22 rows of the reference table: 11 class-T formulas then 11 class-C.
std::vector<LabeledExample> reference_table();

}  // namespace advlogic
