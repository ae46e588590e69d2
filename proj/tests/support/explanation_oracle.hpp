#pragma once

// Brute-force reading of the generalization-set definition: a set G with
// X <= G <= U is valid when every pair of explanations satisfies
// f_i(x) = f_i(y) <=> f_j(x) = f_j(y) for all x, y in G, and maximal when no
// strict superset is valid.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <advlogic/explanation.hpp>

namespace oracle {

struct Instance {
  advlogic::FiniteUniverse universe;
  advlogic::ElementSet known;
  std::vector<advlogic::Explanation> expls;
};

inline bool pair_agrees(const advlogic::Explanation& f, const advlogic::Explanation& h,
                        const std::vector<std::string>& g) {
  for (const auto& x : g) {
    for (const auto& y : g) {
      if ((f(x) == f(y)) != (h(x) == h(y))) return false;
    }
  }
  return true;
}

inline bool valid(const std::vector<advlogic::Explanation>& expls, const std::vector<std::string>& g) {
  for (std::size_t i = 0; i < expls.size(); ++i) {
    for (std::size_t j = i + 1; j < expls.size(); ++j) {
      if (!pair_agrees(expls[i], expls[j], g)) return false;
    }
  }
  return true;
}

// Checks over all 2^|U| subsets that `g` contains X, is valid, and that no
// valid strict superset exists.
inline bool is_maximal_exhaustive(const std::vector<advlogic::Explanation>& expls, const advlogic::ElementSet& known,
                                  const advlogic::ElementSet& universe, const advlogic::ElementSet& g) {
  std::uint64_t g_mask = 0;
  std::uint64_t x_mask = 0;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    for (const auto& e : g) {
      if (e == universe[i]) g_mask |= std::uint64_t{1} << i;
    }
    for (const auto& e : known) {
      if (e == universe[i]) x_mask |= std::uint64_t{1} << i;
    }
  }
  if ((g_mask & x_mask) != x_mask) return false;
  auto members = [&](std::uint64_t mask) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < universe.size(); ++i) {
      if (mask >> i & 1) out.push_back(universe[i]);
    }
    return out;
  };
  if (!valid(expls, members(g_mask))) return false;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << universe.size()); ++mask) {
    if (mask == g_mask || (mask & g_mask) != g_mask) continue;
    if (valid(expls, members(mask))) return false;
  }
  return true;
}

// Universe of up to `max_size` elements, `count` explanations over at most
// three labels each, and a known set on which all of them agree.
inline Instance random_instance(std::mt19937_64& rng, std::size_t max_size, std::size_t count) {
  std::size_t n = 1 + rng() % max_size;
  advlogic::ElementSet elements;
  for (std::size_t i = 0; i < n; ++i) elements.push_back("e" + std::to_string(i));
  std::vector<advlogic::Explanation> expls;
  for (std::size_t k = 0; k < count; ++k) {
    std::size_t labels = 1 + rng() % 3;
    std::vector<std::pair<std::string, std::string>> entries;
    for (const auto& e : elements) entries.emplace_back(e, "l" + std::to_string(k) + "_" + std::to_string(rng() % labels));
    expls.emplace_back(std::move(entries));
  }
  advlogic::ElementSet known;
  for (const auto& e : elements) {
    if (rng() % 3 != 0) continue;
    known.push_back(e);
    if (!valid(expls, known)) known.pop_back();
  }
  return {advlogic::FiniteUniverse(elements), known, std::move(expls)};
}

}  // namespace oracle
