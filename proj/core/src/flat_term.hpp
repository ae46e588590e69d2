#pragma once

// Prefix-array form of a formula used by the saturation hot loop. Variables
// are numbered by first occurrence, so two flat terms of formulas that differ
// only by a renaming are identical.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "advlogic/formula.hpp"

namespace advlogic::detail {

struct FlatTerm {
  static constexpr std::int32_t kNeg = -1;
  static constexpr std::int32_t kImp = -2;

  std::vector<std::int32_t> sym;  // kNeg, kImp or a variable id
  std::vector<std::uint32_t> end; // one past the subterm rooted at i
  std::uint32_t var_count = 0;
};

FlatTerm flatten(const Formula& f);

// Variable i of a normalised formula is called canonical_variable(i).
std::string canonical_variable(std::size_t i);

// Reusable buffers for detach/match; not shared between threads.
class Unifier {
 public:
  // Condensed detachment of `minor` from `major` (variables of the two
  // premises are kept apart). Returns the conclusion with variables renamed
  // canonically, or nothing if the premises do not unify or the conclusion
  // exceeds max_size.
  std::optional<Formula> detach(const FlatTerm& major, const FlatTerm& minor, std::size_t max_size);

  // Whether `target` is a substitution instance of `pattern`.
  bool matches(const FlatTerm& pattern, const FlatTerm& target);

 private:
  struct Ref {
    std::int32_t side = -1;  // -1 when unbound
    std::uint32_t pos = 0;
  };

  std::pair<std::int32_t, std::uint32_t> deref(std::int32_t side, std::uint32_t pos) const;
  bool occurs(std::int32_t var_side, std::int32_t var, std::int32_t side, std::uint32_t pos) const;
  bool unify(std::int32_t side_a, std::uint32_t a, std::int32_t side_b, std::uint32_t b);
  bool build(std::int32_t side, std::uint32_t pos, std::size_t max_size);

  const FlatTerm* terms_[2] = {nullptr, nullptr};
  std::vector<Ref> bindings_[2];
  std::vector<std::int32_t> renamed_[2];
  std::vector<std::int32_t> out_;
  std::int32_t next_var_ = 0;
  std::vector<std::tuple<std::int32_t, std::uint32_t, std::int32_t, std::uint32_t>> stack_;
  std::vector<std::uint32_t> match_bind_;
};

}  // namespace advlogic::detail
