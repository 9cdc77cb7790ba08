#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "brouwer.hpp"
#include "kripke.hpp"
#include "poset.hpp"

namespace wlem::duality {

using brouwer::BrouwerAlgebra;
using brouwer::Element;

/// The algebra of up-closed ("open") subsets of a poset, ordered by reverse
/// inclusion: + is intersection, x is union, 0 is everything, 1 is empty.
struct OpenSetAlgebra {
  BrouwerAlgebra algebra;
  Poset source;
  /// sets[e] is the open set behind element e, in increasing bitmask order.
  std::vector<WorldSet> sets;
  /// False for posets without a least element; such algebras lack a
  /// meet-irreducible 0 and have no Kripke dual.
  bool rooted = true;

  Element element_of(WorldSet open) const {
    auto it = std::lower_bound(sets.begin(), sets.end(), open);
    if (it == sets.end() || *it != open) {
      throw Error(ErrorCode::invalid_argument, "set is not open in the source poset");
    }
    return static_cast<Element>(it - sets.begin());
  }
};

/// The residual on open sets given directly on the poset:
/// A -> B = {x : every y >= x in A is in B}.
inline WorldSet open_set_arrow(const Poset& p, WorldSet a, WorldSet b) {
  return p.disjoint_from(a & ~b);
}

/// Alg(P) for an arbitrary finite poset. The residual computed from the
/// order is checked against open_set_arrow for every pair.
inline OpenSetAlgebra alg_of_poset(const Poset& p) {
  std::vector<WorldSet> sets = p.all_up_sets();
  const int m = static_cast<int>(sets.size());
  std::vector<std::pair<int, int>> leq;
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (a != b && (sets[b] & ~sets[a]) == 0) leq.emplace_back(a, b);  // b subset of a
    }
  }
  const Element bottom = m - 1;  // the full set sorts last
  const Element top = 0;         // the empty set sorts first
  OpenSetAlgebra out{BrouwerAlgebra::from_order(m, leq, bottom, top), p, std::move(sets),
                     count(p.minimal()) == 1};
  for (Element a = 0; a < m; ++a) {
    for (Element b = 0; b < m; ++b) {
      const WorldSet expected = open_set_arrow(p, out.sets[a], out.sets[b]);
      if (out.sets[out.algebra.implication(a, b)] != expected) {
        throw Error(ErrorCode::missing_residual, "residual disagrees with the open-set arrow");
      }
    }
  }
  return out;
}

inline OpenSetAlgebra alg_of_frame(const kripke::Frame& frame) { return alg_of_poset(frame.order()); }

/// Set of algebra elements; bit e is element e.
using ElementSet = std::uint64_t;

/// Prime ideals of L, by filtering every down-set of its order: proper,
/// non-empty, closed under +, and x x y in I forces x or y into I.
/// Sorted by size, then bitmask. Needs |L| <= 64.
inline std::vector<ElementSet> prime_ideals(const BrouwerAlgebra& L) {
  if (L.size() > kMaxWorlds) {
    throw Error(ErrorCode::invalid_argument, "prime ideal search supports at most 64 elements");
  }
  const int m = L.size();
  std::vector<WorldSet> up(m, 0);
  for (Element a = 0; a < m; ++a) {
    for (Element b = 0; b < m; ++b) {
      if (L.leq(a, b)) up[a] |= bit(b);
    }
  }
  const Poset order = Poset::from_up_sets(std::move(up));
  std::vector<ElementSet> out;
  for (ElementSet ideal : order.all_down_sets()) {
    if (ideal == 0 || contains(ideal, L.top())) continue;
    bool ok = true;
    for (Element x : members(ideal)) {
      for (Element y : members(ideal)) {
        if (!contains(ideal, L.join(x, y))) ok = false;
      }
    }
    for (Element x = 0; x < m && ok; ++x) {
      for (Element y = 0; y < m && ok; ++y) {
        if (contains(ideal, L.meet(x, y)) && !contains(ideal, x) && !contains(ideal, y)) ok = false;
      }
    }
    if (ok) out.push_back(ideal);
  }
  std::sort(out.begin(), out.end(), [](ElementSet a, ElementSet b) {
    return count(a) != count(b) ? count(a) < count(b) : a < b;
  });
  return out;
}

/// Kr(L): prime ideals ordered by inclusion, rooted at {0}.
inline kripke::Frame frame_of_algebra(const BrouwerAlgebra& L) {
  if (L.size() < 2) throw Error(ErrorCode::precondition, "the one-element algebra has no prime ideals");
  if (!brouwer::zero_meet_irreducible(L)) {
    throw Error(ErrorCode::precondition, "0 is not meet-irreducible, so {0} is not a prime ideal");
  }
  const std::vector<ElementSet> ideals = prime_ideals(L);
  const int n = static_cast<int>(ideals.size());
  if (n > kMaxWorlds) throw Error(ErrorCode::invalid_argument, "more than 64 prime ideals");
  std::vector<WorldSet> up(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if ((ideals[i] & ~ideals[j]) == 0) up[i] |= bit(j);
    }
  }
  const auto root = std::find(ideals.begin(), ideals.end(), bit(L.bottom()));
  return kripke::Frame(Poset::from_up_sets(std::move(up)), static_cast<int>(root - ideals.begin()));
}

/// K |= f iff L |= f for every formula of the corpus.
inline bool theories_agree(const kripke::Frame& frame, const BrouwerAlgebra& L,
                           const std::vector<Formula>& corpus, std::uint64_t cap = Budget::kDefaultCap) {
  Budget budget(cap);
  for (const Formula& f : corpus) {
    if (kripke::holds_in_frame(frame, f, budget).holds() != brouwer::satisfies(L, f, budget).satisfied()) {
      return false;
    }
  }
  return true;
}

}  // namespace wlem::duality
