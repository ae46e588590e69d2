#pragma once

// Reference implementations used to cross-check the library. They share no
// code with the core beyond the Formula value type.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <advlogic/formula.hpp>

namespace oracle {

using advlogic::Formula;

inline Formula random_formula(std::mt19937_64& rng, const std::vector<std::string>& vars, std::size_t size) {
  if (size <= 1) return advlogic::var(vars[rng() % vars.size()]);
  if (size == 2) return advlogic::neg(random_formula(rng, vars, 1));
  if (rng() % 3 == 0) return advlogic::neg(random_formula(rng, vars, size - 1));
  std::size_t left = 1 + rng() % (size - 2);
  Formula a = random_formula(rng, vars, left);
  return advlogic::imp(a, random_formula(rng, vars, size - 1 - left));
}

inline Formula random_formula_up_to(std::mt19937_64& rng, const std::vector<std::string>& vars, std::size_t max_size) {
  return random_formula(rng, vars, 1 + rng() % max_size);
}

// Number of formulas of exactly `size` nodes over `vars` variables.
inline std::uint64_t count_of_size(std::size_t vars, std::size_t size) {
  std::vector<std::uint64_t> c(size + 1, 0);
  for (std::size_t s = 1; s <= size; ++s) {
    if (s == 1) {
      c[s] = vars;
      continue;
    }
    c[s] = c[s - 1];
    for (std::size_t i = 1; i + 1 < s; ++i) c[s] += c[i] * c[s - 1 - i];
  }
  return c[size];
}

// Classical semantics with plain booleans.
inline bool truth(const Formula& f, const std::map<std::string, bool>& a) {
  if (f.is_variable()) return a.at(f.name());
  if (f.is_negation()) return !truth(f.operand(), a);
  return !truth(f.antecedent(), a) || truth(f.consequent(), a);
}

inline void collect_vars(const Formula& f, std::vector<std::string>& out) {
  if (f.is_variable()) {
    for (const auto& v : out) {
      if (v == f.name()) return;
    }
    out.push_back(f.name());
    return;
  }
  if (f.is_negation()) {
    collect_vars(f.operand(), out);
    return;
  }
  collect_vars(f.antecedent(), out);
  collect_vars(f.consequent(), out);
}

inline bool classical_tautology(const Formula& f) {
  std::vector<std::string> vars;
  collect_vars(f, vars);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << vars.size()); ++bits) {
    std::map<std::string, bool> a;
    for (std::size_t i = 0; i < vars.size(); ++i) a[vars[i]] = (bits >> i) & 1;
    if (!truth(f, a)) return false;
  }
  return true;
}

inline bool classical_contradiction(const Formula& f) {
  std::vector<std::string> vars;
  collect_vars(f, vars);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << vars.size()); ++bits) {
    std::map<std::string, bool> a;
    for (std::size_t i = 0; i < vars.size(); ++i) a[vars[i]] = (bits >> i) & 1;
    if (truth(f, a)) return false;
  }
  return true;
}

// Three-valued structure written out case by case:
//   ~0 = 1, ~1 = 2, ~2 = 1
//   0->x = 2,1,2   1->x = 2,2,2   2->x = 0,1,2
inline int three_neg(int v) { return v == 1 ? 2 : 1; }
inline int three_imp(int a, int b) {
  if (a == 1) return 2;
  if (a == 0) return b == 1 ? 1 : 2;
  return b;
}

inline int three(const Formula& f, const std::map<std::string, int>& a) {
  if (f.is_variable()) return a.at(f.name());
  if (f.is_negation()) return three_neg(three(f.operand(), a));
  return three_imp(three(f.antecedent(), a), three(f.consequent(), a));
}

// All values of f over every assignment into {0,1,2}.
inline std::vector<bool> three_values(const Formula& f) {
  std::vector<std::string> vars;
  collect_vars(f, vars);
  std::vector<bool> seen(3, false);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < vars.size(); ++i) total *= 3;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::map<std::string, int> a;
    std::uint64_t c = code;
    for (const auto& v : vars) {
      a[v] = static_cast<int>(c % 3);
      c /= 3;
    }
    seen[static_cast<std::size_t>(three(f, a))] = true;
  }
  return seen;
}

inline bool three_tautology(const Formula& f) {
  auto s = three_values(f);
  return !s[0] && !s[1];
}

inline bool three_never_two(const Formula& f) { return !three_values(f)[2]; }

}  // namespace oracle
