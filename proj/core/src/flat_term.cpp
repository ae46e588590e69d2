#include "flat_term.hpp"

#include <algorithm>
#include <unordered_map>

namespace advlogic::detail {

namespace {

void flatten_into(const Formula& f, std::unordered_map<std::string, std::int32_t>& ids, FlatTerm& out) {
  std::size_t at = out.sym.size();
  out.sym.push_back(0);
  out.end.push_back(0);
  switch (f.kind()) {
    case FormulaKind::Variable: {
      auto [it, inserted] = ids.emplace(f.name(), static_cast<std::int32_t>(ids.size()));
      out.sym[at] = it->second;
      break;
    }
    case FormulaKind::Negation:
      out.sym[at] = FlatTerm::kNeg;
      flatten_into(f.operand(), ids, out);
      break;
    case FormulaKind::Implication:
      out.sym[at] = FlatTerm::kImp;
      flatten_into(f.antecedent(), ids, out);
      flatten_into(f.consequent(), ids, out);
      break;
  }
  out.end[at] = static_cast<std::uint32_t>(out.sym.size());
}

Formula unflatten(const std::vector<std::int32_t>& sym, std::size_t& pos, std::vector<std::optional<Formula>>& vars) {
  std::int32_t s = sym[pos++];
  if (s == FlatTerm::kNeg) return neg(unflatten(sym, pos, vars));
  if (s == FlatTerm::kImp) {
    Formula lhs = unflatten(sym, pos, vars);
    return imp(std::move(lhs), unflatten(sym, pos, vars));
  }
  auto id = static_cast<std::size_t>(s);
  if (id >= vars.size()) vars.resize(id + 1);
  if (!vars[id]) vars[id] = var(canonical_variable(id));
  return *vars[id];
}

}  // namespace

FlatTerm flatten(const Formula& f) {
  FlatTerm out;
  out.sym.reserve(f.size());
  out.end.reserve(f.size());
  std::unordered_map<std::string, std::int32_t> ids;
  flatten_into(f, ids, out);
  out.var_count = static_cast<std::uint32_t>(ids.size());
  return out;
}

std::string canonical_variable(std::size_t i) {
  static constexpr std::string_view kLetters = "pqrstuvwxyz";
  if (i < kLetters.size()) return std::string(1, kLetters[i]);
  return "x" + std::to_string(i);
}

std::pair<std::int32_t, std::uint32_t> Unifier::deref(std::int32_t side, std::uint32_t pos) const {
  while (true) {
    std::int32_t s = terms_[side]->sym[pos];
    if (s < 0) return {side, pos};
    const Ref& r = bindings_[side][static_cast<std::size_t>(s)];
    if (r.side < 0) return {side, pos};
    side = r.side;
    pos = r.pos;
  }
}

bool Unifier::occurs(std::int32_t var_side, std::int32_t var, std::int32_t side, std::uint32_t pos) const {
  const FlatTerm& t = *terms_[side];
  for (std::uint32_t i = pos; i < t.end[pos]; ++i) {
    if (t.sym[i] < 0) continue;
    auto [s, p] = deref(side, i);
    std::int32_t sym = terms_[s]->sym[p];
    if (sym >= 0) {
      if (s == var_side && sym == var) return true;
    } else if (occurs(var_side, var, s, p)) {
      return true;
    }
  }
  return false;
}

bool Unifier::unify(std::int32_t side_a, std::uint32_t a, std::int32_t side_b, std::uint32_t b) {
  stack_.clear();
  stack_.emplace_back(side_a, a, side_b, b);
  while (!stack_.empty()) {
    auto [sa0, pa0, sb0, pb0] = stack_.back();
    stack_.pop_back();
    auto [sa, pa] = deref(sa0, pa0);
    auto [sb, pb] = deref(sb0, pb0);
    std::int32_t xa = terms_[sa]->sym[pa];
    std::int32_t xb = terms_[sb]->sym[pb];
    if (xa >= 0 && xb >= 0 && sa == sb && xa == xb) continue;
    if (xa >= 0) {
      if (occurs(sa, xa, sb, pb)) return false;
      bindings_[sa][static_cast<std::size_t>(xa)] = {sb, pb};
      continue;
    }
    if (xb >= 0) {
      if (occurs(sb, xb, sa, pa)) return false;
      bindings_[sb][static_cast<std::size_t>(xb)] = {sa, pa};
      continue;
    }
    if (xa != xb) return false;
    if (xa == FlatTerm::kNeg) {
      stack_.emplace_back(sa, pa + 1, sb, pb + 1);
    } else {
      stack_.emplace_back(sa, terms_[sa]->end[pa + 1], sb, terms_[sb]->end[pb + 1]);
      stack_.emplace_back(sa, pa + 1, sb, pb + 1);
    }
  }
  return true;
}

bool Unifier::build(std::int32_t side0, std::uint32_t pos0, std::size_t max_size) {
  auto [side, pos] = deref(side0, pos0);
  std::int32_t s = terms_[side]->sym[pos];
  if (s >= 0) {
    std::int32_t& id = renamed_[side][static_cast<std::size_t>(s)];
    if (id < 0) id = next_var_++;
    out_.push_back(id);
    return out_.size() <= max_size;
  }
  out_.push_back(s);
  if (out_.size() > max_size) return false;
  if (!build(side, pos + 1, max_size)) return false;
  if (s == FlatTerm::kImp) return build(side, terms_[side]->end[pos + 1], max_size);
  return true;
}

std::optional<Formula> Unifier::detach(const FlatTerm& major, const FlatTerm& minor, std::size_t max_size) {
  if (major.sym.empty() || major.sym[0] != FlatTerm::kImp || minor.sym.empty()) return std::nullopt;
  terms_[0] = &major;
  terms_[1] = &minor;
  for (int side = 0; side < 2; ++side) {
    bindings_[side].assign(terms_[side]->var_count, Ref{});
  }
  if (!unify(0, 1, 1, 0)) return std::nullopt;
  renamed_[0].assign(major.var_count, -1);
  renamed_[1].assign(minor.var_count, -1);
  next_var_ = 0;
  out_.clear();
  if (!build(0, major.end[1], max_size)) return std::nullopt;
  std::size_t pos = 0;
  std::vector<std::optional<Formula>> vars;
  return unflatten(out_, pos, vars);
}

bool Unifier::matches(const FlatTerm& pattern, const FlatTerm& target) {
  if (pattern.sym.size() > target.sym.size()) return false;
  constexpr std::uint32_t kUnbound = 0xFFFFFFFFu;
  match_bind_.assign(pattern.var_count, kUnbound);
  std::uint32_t j = 0;
  for (std::size_t i = 0; i < pattern.sym.size(); ++i) {
    if (j >= target.sym.size()) return false;
    std::int32_t s = pattern.sym[i];
    if (s < 0) {
      if (target.sym[j] != s) return false;
      ++j;
      continue;
    }
    std::uint32_t& bound = match_bind_[static_cast<std::size_t>(s)];
    std::uint32_t next = target.end[j];
    if (bound == kUnbound) {
      bound = j;
    } else {
      std::uint32_t len = target.end[bound] - bound;
      if (len != next - j ||
          !std::equal(target.sym.begin() + bound, target.sym.begin() + bound + len, target.sym.begin() + j)) {
        return false;
      }
    }
    j = next;
  }
  return j == target.sym.size();
}

}  // namespace advlogic::detail
