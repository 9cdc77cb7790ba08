#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "detail/program.hpp"
#include "error.hpp"
#include "formula.hpp"
#include "poset.hpp"

namespace wlem::kripke {

/// Finite Kripke frame: a partial order with a least world (the root).
class Frame {
 public:
  Frame() = default;

  Frame(Poset order, int root) : order_(std::move(order)), root_(root) {
    if (root_ < 0 || root_ >= order_.size()) {
      throw Error(ErrorCode::not_rooted, "root " + std::to_string(root_) + " is out of range");
    }
    if (order_.up(root_) != order_.all()) {
      throw Error(ErrorCode::not_rooted,
                  "world " + std::to_string(root_) + " is not below every world");
    }
  }

  /// Builds the frame from covering (or any generating) pairs; R is their
  /// reflexive-transitive closure.
  static Frame from_cover(int worlds, const std::vector<std::pair<int, int>>& cover, int root) {
    return Frame(Poset::from_pairs(worlds, cover), root);
  }

  /// Root with the poset's unique minimal element; fails when there is none.
  static Frame rooted(Poset order) {
    const WorldSet mins = order.minimal();
    if (count(mins) != 1) throw Error(ErrorCode::not_rooted, "poset has no least element");
    const int root = members(mins).front();
    return Frame(std::move(order), root);
  }

  int size() const { return order_.size(); }
  int root() const { return root_; }
  const Poset& order() const { return order_; }
  WorldSet worlds() const { return order_.all(); }
  WorldSet up(int x) const { return order_.up(x); }
  bool accessible(int x, int y) const { return order_.leq(x, y); }
  WorldSet maximal() const { return order_.maximal(); }

  /// Optional display names; they play no part in equality.
  const std::vector<std::string>& names() const { return names_; }
  void set_names(std::vector<std::string> names) {
    if (!names.empty() && static_cast<int>(names.size()) != size()) {
      throw Error(ErrorCode::bad_input, "expected " + std::to_string(size()) + " world names");
    }
    names_ = std::move(names);
  }
  std::string name(int x) const { return names_.empty() ? std::to_string(x) : names_[x]; }

  friend bool operator==(const Frame& a, const Frame& b) {
    return a.order_ == b.order_ && a.root_ == b.root_;
  }

 private:
  Poset order_;
  int root_ = 0;
  std::vector<std::string> names_;
};

/// Root 0 followed by m pairwise incomparable tops 1..m.
inline Frame fan(int m) {
  std::vector<std::pair<int, int>> cover;
  for (int t = 1; t <= m; ++t) cover.emplace_back(0, t);
  return Frame::from_cover(m + 1, cover, 0);
}

inline Frame chain(int n) {
  std::vector<std::pair<int, int>> cover;
  for (int x = 0; x + 1 < n; ++x) cover.emplace_back(x, x + 1);
  return Frame::from_cover(n, cover, 0);
}

/// Number of R-maximal worlds.
inline int topwidth(const Frame& frame) { return count(frame.maximal()); }

/// A frame with an upward-closed valuation. Variables without an entry are
/// false everywhere.
class Model {
 public:
  Model(Frame frame, std::map<int, WorldSet> valuation)
      : frame_(std::move(frame)), valuation_(std::move(valuation)) {
    for (const auto& [index, worlds] : valuation_) {
      if (index < 1) throw Error(ErrorCode::bad_input, "variable indices start at 1");
      if ((worlds & ~frame_.worlds()) != 0 || !frame_.order().is_up_set(worlds)) {
        throw Error(ErrorCode::not_up_closed,
                    "valuation of p" + std::to_string(index) + " is not upward closed");
      }
    }
  }

  const Frame& frame() const { return frame_; }
  const std::map<int, WorldSet>& valuation() const { return valuation_; }
  WorldSet value(int index) const {
    auto it = valuation_.find(index);
    return it == valuation_.end() ? 0 : it->second;
  }

 private:
  Frame frame_;
  std::map<int, WorldSet> valuation_;
};

/// A model, a world of it and a formula that world does not force.
struct Countermodel {
  Model model;
  int world;
  Formula formula;
};

/// x forces f, by direct recursion on the forcing clauses.
inline bool force(const Model& m, int x, const Formula& f) {
  const Frame& fr = m.frame();
  if (x < 0 || x >= fr.size()) {
    throw Error(ErrorCode::invalid_argument, "world " + std::to_string(x) + " out of range");
  }
  switch (f.kind()) {
    case Connective::var: return contains(m.value(f.index()), x);
    case Connective::conj: return force(m, x, f.left()) && force(m, x, f.right());
    case Connective::disj: return force(m, x, f.left()) || force(m, x, f.right());
    case Connective::implies:
      for (int y : members(fr.up(x))) {
        if (force(m, y, f.left()) && !force(m, y, f.right())) return false;
      }
      return true;
    case Connective::neg:
      for (int y : members(fr.up(x))) {
        if (force(m, y, f.operand())) return false;
      }
      return true;
  }
  return false;
}

/// Every world forces f.
inline bool holds_in_model(const Model& m, const Formula& f) {
  for (int x = 0; x < m.frame().size(); ++x) {
    if (!force(m, x, f)) return false;
  }
  return true;
}

namespace detail {

/// Truth sets as bitmasks; implication and negation go through the
/// "no successor in S" operator, tabulated for small frames.
class FrameSemantics {
 public:
  using value_type = WorldSet;

  explicit FrameSemantics(const Poset& order) : order_(&order), all_(order.all()) {
    if (order.size() <= kTableLimit) {
      table_.resize(std::size_t{1} << order.size());
      for (std::size_t s = 0; s < table_.size(); ++s) table_[s] = order.disjoint_from(s);
    }
  }

  WorldSet conj(WorldSet a, WorldSet b) const { return a & b; }
  WorldSet disj(WorldSet a, WorldSet b) const { return a | b; }
  WorldSet neg(WorldSet a) const { return none_above(a); }
  WorldSet implies(WorldSet a, WorldSet b) const { return none_above(a & ~b & all_); }

 private:
  static constexpr int kTableLimit = 16;

  WorldSet none_above(WorldSet s) const {
    return table_.empty() ? order_->disjoint_from(s) : table_[s];
  }

  const Poset* order_;
  WorldSet all_;
  std::vector<WorldSet> table_;
};

}  // namespace detail

/// Outcome of checking a formula against every valuation on a frame.
struct FrameCheck {
  std::optional<Countermodel> countermodel;
  bool holds() const { return !countermodel.has_value(); }
};

struct CheckOptions {
  std::uint64_t cap = Budget::kDefaultCap;
  /// Collapse valuations of variables that only occur negated; the answer
  /// and the first countermodel are unchanged.
  bool quotient = true;
};

/// Frame validity over all up-set valuations of vars(f), enumerated with
/// p(min) outermost and up-sets in increasing bitmask order. Returns the
/// first countermodel in that order.
inline FrameCheck holds_in_frame(const Frame& frame, const wlem::detail::Program& prog,
                                 const Formula& f, Budget& budget, bool quotient = true) {
  const detail::FrameSemantics sem(frame.order());
  const std::vector<WorldSet> ups = frame.order().all_up_sets();
  std::vector<std::vector<WorldSet>> domains(prog.arity(), ups);
  const WorldSet all = frame.worlds();
  auto failing = wlem::detail::first_rejected(
      prog, sem, domains, [all](WorldSet truth) { return truth == all; }, &budget, quotient);
  if (!failing) return {};
  std::map<int, WorldSet> valuation;
  for (std::size_t j = 0; j < prog.arity(); ++j) valuation[prog.variables()[j]] = (*failing)[j];
  Model model(frame, std::move(valuation));
  int world = frame.root();
  for (int x = 0; x < frame.size(); ++x) {
    if (!force(model, x, f)) {
      world = x;
      break;
    }
  }
  return {Countermodel{std::move(model), world, f}};
}

inline FrameCheck holds_in_frame(const Frame& frame, const Formula& f, Budget& budget,
                                 bool quotient = true) {
  const wlem::detail::Program prog(f);
  return holds_in_frame(frame, prog, f, budget, quotient);
}

inline FrameCheck holds_in_frame(const Frame& frame, const Formula& f,
                                 const CheckOptions& options = {}) {
  Budget budget(options.cap);
  return holds_in_frame(frame, f, budget, options.quotient);
}

}  // namespace wlem::kripke
