#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "detail/program.hpp"
#include "error.hpp"
#include "formula.hpp"

namespace wlem::brouwer {

using Element = int;

/// Finite Brouwer algebra <L, +, x, ->, ~, 0, 1>: a bounded distributive
/// lattice where a -> b is the least c with b <= a + c, and ~a = a -> 1.
/// Validated on construction; immutable afterwards.
class BrouwerAlgebra {
 public:
  BrouwerAlgebra() = default;

  /// `leq` lists generating pairs (i, j) meaning i <= j; the order is their
  /// reflexive-transitive closure.
  static BrouwerAlgebra from_order(int elements, const std::vector<std::pair<int, int>>& leq,
                                   Element bottom, Element top) {
    if (elements < 1) throw Error(ErrorCode::bad_input, "an algebra needs at least one element");
    const std::size_t m = static_cast<std::size_t>(elements);
    std::vector<std::uint8_t> rel(m * m, 0);
    for (std::size_t i = 0; i < m; ++i) rel[i * m + i] = 1;
    for (auto [i, j] : leq) {
      if (i < 0 || j < 0 || i >= elements || j >= elements) {
        throw Error(ErrorCode::bad_input, "leq pair (" + std::to_string(i) + "," +
                                              std::to_string(j) + ") out of range");
      }
      rel[i * m + j] = 1;
    }
    for (std::size_t k = 0; k < m; ++k) {
      for (std::size_t i = 0; i < m; ++i) {
        if (!rel[i * m + k]) continue;
        for (std::size_t j = 0; j < m; ++j) rel[i * m + j] |= rel[k * m + j];
      }
    }
    return BrouwerAlgebra(elements, std::move(rel), bottom, top);
  }

  int size() const { return size_; }
  Element bottom() const { return bottom_; }
  Element top() const { return top_; }
  bool leq(Element a, Element b) const { return leq_[index(a, b)] != 0; }
  Element join(Element a, Element b) const { return join_[index(a, b)]; }
  Element meet(Element a, Element b) const { return meet_[index(a, b)]; }
  Element implication(Element a, Element b) const { return imp_[index(a, b)]; }
  Element negation(Element a) const { return implication(a, top_); }

  /// Pairs (a, b) with a < b and nothing strictly between.
  std::vector<std::pair<int, int>> covers() const {
    std::vector<std::pair<int, int>> out;
    for (Element a = 0; a < size_; ++a) {
      for (Element b = 0; b < size_; ++b) {
        if (a == b || !leq(a, b)) continue;
        bool direct = true;
        for (Element c = 0; c < size_ && direct; ++c) {
          if (c != a && c != b && leq(a, c) && leq(c, b)) direct = false;
        }
        if (direct) out.emplace_back(a, b);
      }
    }
    return out;
  }

 private:
  BrouwerAlgebra(int elements, std::vector<std::uint8_t> rel, Element bottom, Element top)
      : size_(elements), bottom_(bottom), top_(top), leq_(std::move(rel)) {
    const int m = size_;
    for (Element a = 0; a < m; ++a) {
      for (Element b = a + 1; b < m; ++b) {
        if (leq(a, b) && leq(b, a)) {
          throw Error(ErrorCode::not_partial_order,
                      "elements " + std::to_string(a) + " and " + std::to_string(b) +
                          " are mutually below each other");
        }
      }
    }
    if (bottom < 0 || bottom >= m || top < 0 || top >= m) {
      throw Error(ErrorCode::bad_bounds, "bottom or top out of range");
    }
    for (Element a = 0; a < m; ++a) {
      if (!leq(bottom, a) || !leq(a, top)) {
        throw Error(ErrorCode::bad_bounds, "element " + std::to_string(a) +
                                               " is not between the declared bottom and top");
      }
    }

    join_.assign(leq_.size(), 0);
    meet_.assign(leq_.size(), 0);
    for (Element a = 0; a < m; ++a) {
      for (Element b = a; b < m; ++b) {
        const Element j = extremal_bound(a, b, true);
        const Element k = extremal_bound(a, b, false);
        join_[index(a, b)] = join_[index(b, a)] = j;
        meet_[index(a, b)] = meet_[index(b, a)] = k;
      }
    }

    for (Element a = 0; a < m; ++a) {
      for (Element b = 0; b < m; ++b) {
        for (Element c = 0; c < m; ++c) {
          if (meet(a, join(b, c)) != join(meet(a, b), meet(a, c))) {
            throw Error(ErrorCode::not_distributive,
                        "a x (b + c) != a x b + a x c for a=" + std::to_string(a) +
                            ", b=" + std::to_string(b) + ", c=" + std::to_string(c));
          }
        }
      }
    }

    imp_.assign(leq_.size(), 0);
    for (Element a = 0; a < m; ++a) {
      for (Element b = 0; b < m; ++b) {
        std::optional<Element> least;
        for (Element c = 0; c < m; ++c) {
          if (!leq(b, join(a, c))) continue;
          if (!least || leq(c, *least)) least = c;
        }
        // the minimal candidate found must lie below every candidate
        bool ok = least.has_value();
        for (Element c = 0; c < m && ok; ++c) {
          if (leq(b, join(a, c)) && !leq(*least, c)) ok = false;
        }
        if (!ok) {
          throw Error(ErrorCode::missing_residual, "no least c with " + std::to_string(b) + " <= " +
                                                       std::to_string(a) + " + c");
        }
        imp_[index(a, b)] = *least;
      }
    }
  }

  std::size_t index(Element a, Element b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(size_) + static_cast<std::size_t>(b);
  }

  Element extremal_bound(Element a, Element b, bool upper) const {
    auto bounds = [&](Element c) { return upper ? (leq(a, c) && leq(b, c)) : (leq(c, a) && leq(c, b)); };
    auto below = [&](Element x, Element y) { return upper ? leq(x, y) : leq(y, x); };
    Element found = -1;
    for (Element c = 0; c < size_; ++c) {
      if (bounds(c) && (found < 0 || below(c, found))) found = c;
    }
    for (Element c = 0; c < size_ && found >= 0; ++c) {
      if (bounds(c) && !below(found, c)) found = -1;
    }
    if (found < 0) {
      throw Error(ErrorCode::not_lattice, std::string("elements ") + std::to_string(a) + " and " +
                                              std::to_string(b) + " have no " +
                                              (upper ? "least upper" : "greatest lower") + " bound");
    }
    return found;
  }

  int size_ = 0;
  Element bottom_ = 0;
  Element top_ = 0;
  std::vector<std::uint8_t> leq_;
  std::vector<Element> join_;
  std::vector<Element> meet_;
  std::vector<Element> imp_;
};

inline void check_element(const BrouwerAlgebra& L, Element a) {
  if (a < 0 || a >= L.size()) {
    throw Error(ErrorCode::invalid_argument, "element " + std::to_string(a) + " out of range");
  }
}

/// a -> b, the least c with b <= a + c.
inline Element implication(const BrouwerAlgebra& L, Element a, Element b) {
  check_element(L, a);
  check_element(L, b);
  return L.implication(a, b);
}

inline Element negation(const BrouwerAlgebra& L, Element a) {
  check_element(L, a);
  return L.negation(a);
}

inline Element join_all(const BrouwerAlgebra& L, const std::vector<Element>& xs) {
  Element acc = L.bottom();
  for (Element x : xs) acc = L.join(acc, x);
  return acc;
}

inline Element meet_all(const BrouwerAlgebra& L, const std::vector<Element>& xs) {
  Element acc = L.top();
  for (Element x : xs) acc = L.meet(acc, x);
  return acc;
}

/// Nonzero elements with exactly one lower cover.
inline std::vector<Element> join_irreducibles(const BrouwerAlgebra& L) {
  std::vector<Element> out;
  for (Element a = 0; a < L.size(); ++a) {
    if (a == L.bottom()) continue;
    int lower_covers = 0;
    for (Element c = 0; c < L.size(); ++c) {
      if (c == a || !L.leq(c, a)) continue;
      bool direct = true;
      for (Element d = 0; d < L.size() && direct; ++d) {
        if (d != a && d != c && L.leq(c, d) && L.leq(d, a)) direct = false;
      }
      if (direct) ++lower_covers;
    }
    if (lower_covers == 1) out.push_back(a);
  }
  return out;
}

/// The antichain of join-irreducibles whose join is a: the maximal
/// join-irreducibles below a.
inline std::vector<Element> decompose(const BrouwerAlgebra& L, Element a) {
  check_element(L, a);
  std::vector<Element> below;
  for (Element x : join_irreducibles(L)) {
    if (L.leq(x, a)) below.push_back(x);
  }
  std::vector<Element> out;
  for (Element x : below) {
    bool maximal = true;
    for (Element y : below) {
      if (y != x && L.leq(x, y)) maximal = false;
    }
    if (maximal) out.push_back(x);
  }
  return out;
}

/// b_1..b_n: the join-irreducible antichain joining to 1.
inline std::vector<Element> generators(const BrouwerAlgebra& L) { return decompose(L, L.top()); }

/// n such that L is in class B_n.
inline int b_class(const BrouwerAlgebra& L) { return static_cast<int>(generators(L).size()); }

/// Elements covered by 1.
inline std::vector<Element> coatoms(const BrouwerAlgebra& L) {
  std::vector<Element> out;
  for (Element a = 0; a < L.size(); ++a) {
    if (a == L.top()) continue;
    bool covered = true;
    for (Element c = 0; c < L.size() && covered; ++c) {
      if (c != a && c != L.top() && L.leq(a, c)) covered = false;
    }
    if (covered) out.push_back(a);
  }
  return out;
}

/// x x y = 0 implies x = 0 or y = 0.
inline bool zero_meet_irreducible(const BrouwerAlgebra& L) {
  for (Element x = 0; x < L.size(); ++x) {
    for (Element y = x; y < L.size(); ++y) {
      if (x != L.bottom() && y != L.bottom() && L.meet(x, y) == L.bottom()) return false;
    }
  }
  return true;
}

/// a -> b computed as the join of {x in X : x not <= a}, for a set X of
/// join-irreducibles whose join is b.
inline Element arrow_fast(const BrouwerAlgebra& L, Element a, Element b, const std::vector<Element>& xs) {
  check_element(L, a);
  check_element(L, b);
  const std::vector<Element> ji = join_irreducibles(L);
  for (Element x : xs) {
    check_element(L, x);
    if (std::find(ji.begin(), ji.end(), x) == ji.end()) {
      throw Error(ErrorCode::precondition, "element " + std::to_string(x) + " is not join-irreducible");
    }
  }
  if (join_all(L, xs) != b) throw Error(ErrorCode::precondition, "X does not join to b");
  Element acc = L.bottom();
  for (Element x : xs) {
    if (!L.leq(x, a)) acc = L.join(acc, x);
  }
  return acc;
}

namespace detail {

/// Dual reading: | is meet, & is join, truth is 0.
class AlgebraSemantics {
 public:
  using value_type = Element;
  explicit AlgebraSemantics(const BrouwerAlgebra& L) : L_(&L) {}
  Element conj(Element a, Element b) const { return L_->join(a, b); }
  Element disj(Element a, Element b) const { return L_->meet(a, b); }
  Element implies(Element a, Element b) const { return L_->implication(a, b); }
  Element neg(Element a) const { return L_->negation(a); }

 private:
  const BrouwerAlgebra* L_;
};

}  // namespace detail

/// Value of f with | as meet, & as join, -> as the residual and ~ as negation.
inline Element evaluate(const BrouwerAlgebra& L, const Formula& f, const std::map<int, Element>& assignment) {
  switch (f.kind()) {
    case Connective::var: {
      auto it = assignment.find(f.index());
      if (it == assignment.end()) {
        throw Error(ErrorCode::invalid_argument, "p" + std::to_string(f.index()) + " is unassigned");
      }
      check_element(L, it->second);
      return it->second;
    }
    case Connective::conj: return L.join(evaluate(L, f.left(), assignment), evaluate(L, f.right(), assignment));
    case Connective::disj: return L.meet(evaluate(L, f.left(), assignment), evaluate(L, f.right(), assignment));
    case Connective::implies:
      return L.implication(evaluate(L, f.left(), assignment), evaluate(L, f.right(), assignment));
    case Connective::neg: return L.negation(evaluate(L, f.operand(), assignment));
  }
  return L.bottom();
}

struct AlgebraCheck {
  /// First assignment (p-index -> element) not evaluating to 0, if any.
  std::optional<std::map<int, Element>> counterexample;
  Element value = 0;
  bool satisfied() const { return !counterexample.has_value(); }
};

struct SatisfyOptions {
  std::uint64_t cap = Budget::kDefaultCap;
  /// Variables occurring only negated range over one representative per
  /// value of ~a. Disable to enumerate every assignment.
  bool fast_path = true;
};

/// L satisfies f when every assignment of elements to vars(f) yields 0.
inline AlgebraCheck satisfies(const BrouwerAlgebra& L, const Formula& f, Budget& budget,
                              bool fast_path = true) {
  const wlem::detail::Program prog(f);
  const detail::AlgebraSemantics sem(L);
  std::vector<Element> carrier(L.size());
  for (Element a = 0; a < L.size(); ++a) carrier[a] = a;
  std::vector<std::vector<Element>> domains(prog.arity(), carrier);
  const Element zero = L.bottom();
  auto failing = wlem::detail::first_rejected(
      prog, sem, domains, [zero](Element v) { return v == zero; }, &budget, fast_path);
  if (!failing) return {};
  std::map<int, Element> assignment;
  for (std::size_t j = 0; j < prog.arity(); ++j) assignment[prog.variables()[j]] = (*failing)[j];
  const Element value = evaluate(L, f, assignment);
  return {std::move(assignment), value};
}

inline AlgebraCheck satisfies(const BrouwerAlgebra& L, const Formula& f, const SatisfyOptions& options = {}) {
  Budget budget(options.cap);
  return satisfies(L, f, budget, options.fast_path);
}

}  // namespace wlem::brouwer
