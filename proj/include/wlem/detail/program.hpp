#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <tuple>
#include <vector>

#include "../error.hpp"
#include "../formula.hpp"

namespace wlem {

/// Shared cap on the number of assignments evaluated by one query.
class Budget {
 public:
  static constexpr std::uint64_t kDefaultCap = 100'000'000;

  explicit Budget(std::uint64_t cap = kDefaultCap) : cap_(cap) {}
  Budget(const Budget&) = delete;
  Budget& operator=(const Budget&) = delete;

  void charge(std::uint64_t n) {
    if (used_.fetch_add(n, std::memory_order_relaxed) + n > cap_) throw ResourceLimitError(cap_);
  }
  std::uint64_t used() const { return used_.load(std::memory_order_relaxed); }
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t cap_;
  std::atomic<std::uint64_t> used_{0};
};

namespace detail {

/// A formula flattened into straight-line code. Structurally equal
/// subformulas share one slot. Instructions are ordered by the highest
/// variable position they depend on, so changing the variable at position j
/// only requires re-running the suffix starting at level_start(j).
class Program {
 public:
  struct Instruction {
    Connective op;
    int a;  // operand slot, or variable position for op == var
    int b;
  };

  explicit Program(const Formula& f) : variables_(vars(f)) {
    std::map<std::tuple<Connective, int, int>, int> interned;
    std::vector<Instruction> raw;
    std::vector<int> level;
    std::vector<bool> var_outside_neg(variables_.size(), false);

    auto position_of = [&](int index) {
      return static_cast<int>(std::lower_bound(variables_.begin(), variables_.end(), index) -
                              variables_.begin());
    };
    auto emit = [&](Connective op, int a, int b, int lvl) {
      auto [it, fresh] = interned.emplace(std::make_tuple(op, a, b), static_cast<int>(raw.size()));
      if (fresh) {
        raw.push_back({op, a, b});
        level.push_back(lvl);
      }
      return it->second;
    };
    auto compile = [&](auto&& self, const Formula& g, bool under_neg) -> int {
      switch (g.kind()) {
        case Connective::var: {
          const int pos = position_of(g.index());
          if (!under_neg) var_outside_neg[pos] = true;
          return emit(Connective::var, pos, 0, pos);
        }
        case Connective::neg: {
          const int a = self(self, g.operand(), true);
          return emit(Connective::neg, a, 0, level[a]);
        }
        default: {
          const int a = self(self, g.left(), false);
          const int b = self(self, g.right(), false);
          return emit(g.kind(), a, b, std::max(level[a], level[b]));
        }
      }
    };
    const int root = compile(compile, f, false);

    std::vector<int> order(raw.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return level[x] < level[y]; });
    std::vector<int> new_slot(raw.size());
    for (std::size_t i = 0; i < order.size(); ++i) new_slot[order[i]] = static_cast<int>(i);

    code_.reserve(raw.size());
    for (int old : order) {
      Instruction ins = raw[old];
      if (ins.op != Connective::var) {
        ins.a = new_slot[ins.a];
        if (ins.op != Connective::neg) ins.b = new_slot[ins.b];
      }
      code_.push_back(ins);
    }
    result_ = new_slot[root];

    level_start_.assign(variables_.size() + 1, code_.size());
    for (std::size_t i = code_.size(); i-- > 0;) level_start_[level[order[i]]] = i;
    for (std::size_t j = variables_.size(); j-- > 0;) {
      level_start_[j] = std::min(level_start_[j], level_start_[j + 1]);
    }
    negation_only_.resize(variables_.size());
    for (std::size_t j = 0; j < variables_.size(); ++j) negation_only_[j] = !var_outside_neg[j];
  }

  const std::vector<int>& variables() const { return variables_; }
  std::size_t arity() const { return variables_.size(); }
  const std::vector<Instruction>& code() const { return code_; }
  int result() const { return result_; }
  std::size_t level_start(std::size_t position) const { return level_start_[position]; }

  /// True if every occurrence of the variable is directly under ~.
  bool negation_only(std::size_t position) const { return negation_only_[position]; }

  /// Semantics must provide value_type and conj, disj, implies, neg.
  template <class Semantics>
  void run(const Semantics& sem, std::vector<typename Semantics::value_type>& slots,
           const std::vector<typename Semantics::value_type>& values, std::size_t from) const {
    for (std::size_t i = from; i < code_.size(); ++i) {
      const Instruction& ins = code_[i];
      switch (ins.op) {
        case Connective::var: slots[i] = values[ins.a]; break;
        case Connective::neg: slots[i] = sem.neg(slots[ins.a]); break;
        case Connective::conj: slots[i] = sem.conj(slots[ins.a], slots[ins.b]); break;
        case Connective::disj: slots[i] = sem.disj(slots[ins.a], slots[ins.b]); break;
        case Connective::implies: slots[i] = sem.implies(slots[ins.a], slots[ins.b]); break;
      }
    }
  }

 private:
  std::vector<int> variables_;
  std::vector<Instruction> code_;
  int result_ = 0;
  std::vector<std::size_t> level_start_;
  std::vector<bool> negation_only_;
};

/// First element of each class of `domain` under the negation map. A formula
/// whose variable only occurs negated cannot tell class members apart.
template <class Semantics>
std::vector<typename Semantics::value_type> negation_representatives(
    const Semantics& sem, const std::vector<typename Semantics::value_type>& domain) {
  std::vector<typename Semantics::value_type> reps;
  std::vector<typename Semantics::value_type> seen;
  for (const auto& v : domain) {
    const auto n = sem.neg(v);
    if (std::find(seen.begin(), seen.end(), n) == seen.end()) {
      seen.push_back(n);
      reps.push_back(v);
    }
  }
  return reps;
}

/// Enumerates assignments in lexicographic order (first variable outermost)
/// and returns the first one whose value fails `accept`.
template <class Semantics, class Accept>
std::optional<std::vector<typename Semantics::value_type>> first_rejected(
    const Program& prog, const Semantics& sem,
    const std::vector<std::vector<typename Semantics::value_type>>& domains, Accept accept,
    Budget* budget, bool quotient = true) {
  using Value = typename Semantics::value_type;
  const std::size_t n = prog.arity();
  std::vector<std::vector<Value>> effective(n);
  for (std::size_t j = 0; j < n; ++j) {
    effective[j] = quotient && prog.negation_only(j) ? negation_representatives(sem, domains[j])
                                                      : domains[j];
    if (effective[j].empty()) return std::nullopt;
  }

  std::vector<std::size_t> digit(n, 0);
  std::vector<Value> values(n);
  for (std::size_t j = 0; j < n; ++j) values[j] = effective[j][0];
  std::vector<Value> slots(prog.code().size());
  std::size_t from = 0;
  std::uint64_t pending = 0;
  constexpr std::uint64_t kBatch = 4096;

  while (true) {
    prog.run(sem, slots, values, from);
    if (budget && ++pending == kBatch) {
      budget->charge(pending);
      pending = 0;
    }
    if (!accept(slots[prog.result()])) {
      if (budget && pending) budget->charge(pending);
      return values;
    }
    std::size_t j = n;
    while (j > 0 && digit[j - 1] + 1 == effective[j - 1].size()) --j;
    if (j == 0) break;
    --j;
    ++digit[j];
    values[j] = effective[j][digit[j]];
    for (std::size_t t = j + 1; t < n; ++t) {
      digit[t] = 0;
      values[t] = effective[t][0];
    }
    from = prog.level_start(j);
  }
  if (budget && pending) budget->charge(pending);
  return std::nullopt;
}

}  // namespace detail
}  // namespace wlem
