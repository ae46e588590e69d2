#include "advlogic/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>
#include <unordered_set>

namespace advlogic {

GeneratedDataset generate_dataset(const DatasetOptions& options, const AxiomSet& axioms) {
  if (options.per_class == 0) throw std::invalid_argument("per_class must be at least 1");
  GeneratedDataset out;
  DatasetManifest& m = out.manifest;
  m.per_class = options.per_class;
  m.wrapper_depth = options.wrapper_depth;
  m.budget = options.budget;

  TheoremEnumerator theorems(axioms, options.budget);
  std::unordered_set<Formula> seen;
  out.examples.reserve(2 * options.per_class);
  while (m.count_t < options.per_class || m.count_c < options.per_class) {
    std::optional<Theorem> t = theorems.next();
    if (!t) break;
    ++m.theorems_used;
    Formula f = t->formula;
    for (std::size_t depth = 0; depth <= options.wrapper_depth; ++depth) {
      if (depth > 0) f = neg(f);
      bool even = depth % 2 == 0;
      std::size_t& count = even ? m.count_t : m.count_c;
      if (count >= options.per_class) continue;
      if (!seen.insert(f).second) continue;
      out.examples.push_back({f, even ? Label::T : Label::C});
      ++count;
    }
  }
  m.complete = m.count_t >= options.per_class && m.count_c >= options.per_class;
  return out;
}

std::vector<LabeledExample> read_dataset(std::istream& in) {
  std::vector<LabeledExample> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) throw DatasetFormatError(number, "expected <label>\\t<formula>");
    std::string_view label_text = std::string_view(line).substr(0, tab);
    std::optional<Label> label = parse_label(label_text);
    if (!label || *label == Label::Neither) {
      throw DatasetFormatError(number, "unknown label '" + std::string(label_text) + "'");
    }
    try {
      out.push_back({parse_formula(std::string_view(line).substr(tab + 1)), *label});
    } catch (const ParseError& e) {
      throw DatasetFormatError(number, e.what());
    }
  }
  return out;
}

void write_dataset(std::ostream& out, const std::vector<LabeledExample>& examples) {
  std::string buffer;
  for (const auto& e : examples) {
    buffer.clear();
    buffer += label_name(e.label);
    buffer += '\t';
    buffer += render_formula(e.formula);
    buffer += '\n';
    out.write(buffer.data(), static_cast<std::streamsize>(buffer.size()));
  }
}

std::vector<LabeledExample> load_dataset(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_dataset(in);
}

void save_dataset(const std::filesystem::path& path, const std::vector<LabeledExample>& examples) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_dataset(out, examples);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

std::filesystem::path manifest_path(const std::filesystem::path& dataset) {
  std::filesystem::path p = dataset;
  p += ".manifest";
  return p;
}

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string s;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) s += ',';
    s += items[i];
  }
  return s;
}

std::vector<std::string> split(std::string_view s) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto comma = s.find(',', start);
    out.emplace_back(s.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::size_t to_count(const std::string& key, std::string_view v) {
  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), n);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    throw std::runtime_error("manifest: bad value for " + key + ": '" + std::string(v) + "'");
  }
  return n;
}

}  // namespace

std::string render_manifest(const DatasetManifest& m) {
  std::ostringstream out;
  out << "format_version=" << m.format_version << '\n'
      << "per_class=" << m.per_class << '\n'
      << "count_T=" << m.count_t << '\n'
      << "count_C=" << m.count_c << '\n'
      << "wrapper_depth=" << m.wrapper_depth << '\n'
      << "theorems_used=" << m.theorems_used << '\n'
      << "max_theorems=" << m.budget.max_theorems << '\n'
      << "max_size=" << m.budget.max_size << '\n'
      << "pool_max_size=" << m.budget.pool_max_size << '\n'
      << "pool_vars=" << join(m.budget.pool_vars) << '\n'
      << "substituted_vars=" << join(m.budget.substituted_vars) << '\n'
      << "complete=" << (m.complete ? "true" : "false") << '\n';
  return out.str();
}

DatasetManifest parse_manifest(std::string_view text) {
  std::map<std::string, std::string, std::less<>> kv;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw std::runtime_error("manifest: expected key=value, got '" + line + "'");
    kv[line.substr(0, eq)] = line.substr(eq + 1);
  }
  auto get = [&](const std::string& key) -> const std::string& {
    auto it = kv.find(key);
    if (it == kv.end()) throw std::runtime_error("manifest: missing key " + key);
    return it->second;
  };
  DatasetManifest m;
  m.format_version = static_cast<int>(to_count("format_version", get("format_version")));
  if (m.format_version != kDatasetFormatVersion) {
    throw std::runtime_error("manifest: unsupported format_version " + std::to_string(m.format_version));
  }
  m.per_class = to_count("per_class", get("per_class"));
  m.count_t = to_count("count_T", get("count_T"));
  m.count_c = to_count("count_C", get("count_C"));
  m.wrapper_depth = to_count("wrapper_depth", get("wrapper_depth"));
  m.theorems_used = to_count("theorems_used", get("theorems_used"));
  m.budget.max_theorems = to_count("max_theorems", get("max_theorems"));
  m.budget.max_size = to_count("max_size", get("max_size"));
  m.budget.pool_max_size = to_count("pool_max_size", get("pool_max_size"));
  m.budget.pool_vars = split(get("pool_vars"));
  m.budget.substituted_vars = split(get("substituted_vars"));
  const std::string& complete = get("complete");
  if (complete != "true" && complete != "false") throw std::runtime_error("manifest: complete must be true or false");
  m.complete = complete == "true";
  return m;
}

ValidationReport validate_dataset(const std::vector<LabeledExample>& examples, const LogicalMatrix& m,
                                  unsigned jobs) {
  ValidationReport report;
  report.checked = examples.size();
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, examples.size() / 1024))));
  std::vector<std::vector<Violation>> found(jobs);
  auto work = [&](unsigned shard) {
    std::size_t begin = examples.size() * shard / jobs;
    std::size_t end = examples.size() * (shard + 1) / jobs;
    for (std::size_t i = begin; i < end; ++i) {
      Label actual = classify(examples[i].formula, m);
      if (actual != examples[i].label) found[shard].push_back({i, examples[i].label, actual});
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned s = 0; s < jobs; ++s) pool.emplace_back(work, s);
    for (auto& t : pool) t.join();
  }
  for (auto& v : found) report.violations.insert(report.violations.end(), v.begin(), v.end());
  return report;
}

std::vector<LabeledExample> reference_table() {
  static constexpr const char* kTrue[] = {
      "p->(q->p)",
      "(p->(q->r))->((p->q)->(p->r))",
      "~p->(p->q)",
      "(p->~p)->~p",
      "p->~~p",
      "~~~~p->~~p",
      "~~(~~~~p->~~p)",
      "(p->q)->(~q->~p)",
      "(p->~q)->(q->~p)",
      "~((~p->~p)->~(q->~~q))",
      "~~(((p->q)->p)->p)",
  };
  static constexpr const char* kContradiction[] = {
      "~(p->(q->p))",
      "~((p->(q->r))->((p->q)->(p->r)))",
      "~(~p->(p->q))",
      "~((p->~p)->~p)",
      "~(p->~~p)",
      "~(~~~~p->~~p)",
      "~~~(~~~~p->~~p)",
      "~((p->q)->(~q->~p))",
      "~((p->~q)->(q->~p))",
      "(~p->~p)->~(q->~~q)",
      "~(((p->q)->p)->p)",
  };
  std::vector<LabeledExample> out;
  for (const char* s : kTrue) out.push_back({parse_formula(s), Label::T});
  for (const char* s : kContradiction) out.push_back({parse_formula(s), Label::C});
  return out;
}

}  // namespace advlogic
