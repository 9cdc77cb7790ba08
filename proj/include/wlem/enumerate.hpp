#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include "kripke.hpp"
#include "poset.hpp"

namespace wlem {

namespace detail {

/// Iso-invariant colour of every element: starts from (|down|, |up|) and is
/// refined by the colour multisets of strict predecessors and successors.
/// Colours are ranks, so x < y always gives colour(x) < colour(y).
inline std::vector<int> refined_colours(const Poset& p) {
  const int n = p.size();
  std::vector<int> colour(n);
  {
    std::vector<std::pair<int, int>> key(n);
    for (int x = 0; x < n; ++x) key[x] = {count(p.down(x)), count(p.up(x))};
    std::vector<std::pair<int, int>> sorted = key;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int x = 0; x < n; ++x) {
      colour[x] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), key[x]) - sorted.begin());
    }
  }
  while (true) {
    using Key = std::tuple<int, std::vector<int>, std::vector<int>>;
    std::vector<Key> key(n);
    for (int x = 0; x < n; ++x) {
      std::vector<int> below, above;
      for (int y : members(p.down(x) & ~bit(x))) below.push_back(colour[y]);
      for (int y : members(p.up(x) & ~bit(x))) above.push_back(colour[y]);
      std::sort(below.begin(), below.end());
      std::sort(above.begin(), above.end());
      key[x] = {colour[x], std::move(below), std::move(above)};
    }
    std::vector<Key> sorted = key;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> next(n);
    for (int x = 0; x < n; ++x) {
      next[x] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), key[x]) - sorted.begin());
    }
    const int before = *std::max_element(colour.begin(), colour.end());
    const int after = *std::max_element(next.begin(), next.end());
    colour = std::move(next);
    if (after == before) return colour;
  }
}

}  // namespace detail

/// Canonical labeling: new_of_old[x] is the position of element x. The
/// labeling is a linear extension and the sequence of strict down-sets under
/// it is lexicographically least among all colour-respecting labelings.
struct Canonical {
  Poset poset;
  std::vector<int> new_of_old;
  std::vector<WorldSet> code;
};

inline Canonical canonical_form(const Poset& p) {
  const int n = p.size();
  const std::vector<int> colour = detail::refined_colours(p);
  std::vector<int> by_colour(n);
  std::iota(by_colour.begin(), by_colour.end(), 0);
  std::stable_sort(by_colour.begin(), by_colour.end(),
                   [&](int a, int b) { return colour[a] < colour[b]; });
  // position i may only hold elements of colour slot_colour[i]
  std::vector<int> slot_colour(n);
  for (int i = 0; i < n; ++i) slot_colour[i] = colour[by_colour[i]];

  std::vector<WorldSet> best;
  std::vector<int> best_place;
  std::vector<WorldSet> code(n);
  std::vector<int> place(n, -1);  // old -> new
  WorldSet used = 0;

  // prefix code[0..i] compared against best[0..i]
  auto prefix_greater = [&](int i) {
    for (int t = 0; t <= i; ++t) {
      if (code[t] != best[t]) return code[t] > best[t];
    }
    return false;
  };
  auto search = [&](auto&& self, int i) -> void {
    if (i == n) {
      if (best.empty() || code < best) {
        best = code;
        best_place = place;
      }
      return;
    }
    for (int x = 0; x < n; ++x) {
      if (contains(used, x) || colour[x] != slot_colour[i]) continue;
      WorldSet strict_down = 0;
      for (int y : members(p.down(x) & ~bit(x))) strict_down |= bit(place[y]);
      code[i] = strict_down;
      if (!best.empty() && prefix_greater(i)) continue;
      place[x] = i;
      used |= bit(x);
      self(self, i + 1);
      used &= ~bit(x);
      place[x] = -1;
    }
  };
  search(search, 0);

  std::vector<WorldSet> up(n, 0);
  for (int i = 0; i < n; ++i) {
    up[i] |= bit(i);
    for (int j : members(best[i])) up[j] |= bit(i);
  }
  // best[i] is the full strict down-set, so this is already transitive
  return {Poset::from_up_sets(std::move(up)), best_place, best};
}

inline bool isomorphic(const Poset& a, const Poset& b) {
  if (a.size() != b.size()) return false;
  return canonical_form(a).code == canonical_form(b).code;
}

inline bool isomorphic(const kripke::Frame& a, const kripke::Frame& b) {
  return isomorphic(a.order(), b.order());
}

/// Relabels a frame canonically (root becomes world 0).
inline kripke::Frame canonical_frame(const kripke::Frame& f) {
  return kripke::Frame::rooted(canonical_form(f.order()).poset);
}

/// One representative per isomorphism class of posets with exactly n
/// elements, in increasing canonical-code order.
inline std::vector<Poset> enumerate_posets(int n) {
  if (n < 1) return {};
  std::map<std::vector<WorldSet>, Poset> classes;
  if (n == 1) {
    Canonical c = canonical_form(Poset::from_up_sets({bit(0)}));
    classes.emplace(c.code, c.poset);
  } else {
    // every poset is a smaller one plus a maximal element whose strict
    // down-set is a down-set of the smaller one
    for (const Poset& base : enumerate_posets(n - 1)) {
      for (WorldSet below : base.all_down_sets()) {
        std::vector<WorldSet> up = base.up_sets();
        up.push_back(bit(n - 1));
        for (int x : members(below)) up[x] |= bit(n - 1);
        Canonical c = canonical_form(Poset::from_up_sets(std::move(up)));
        classes.emplace(std::move(c.code), std::move(c.poset));
      }
    }
  }
  std::vector<Poset> out;
  out.reserve(classes.size());
  for (auto& [code, poset] : classes) out.push_back(std::move(poset));
  return out;
}

/// All rooted frames with at most max_size worlds, one per isomorphism
/// class, ordered by size and then canonical code. An optional bound keeps
/// only frames of topwidth at most that value.
inline std::vector<kripke::Frame> enumerate_frames(int max_size,
                                                   std::optional<int> topwidth_bound = {}) {
  if (max_size < 1) throw Error(ErrorCode::invalid_argument, "max_size must be >= 1");
  if (max_size > 9) throw Error(ErrorCode::invalid_argument, "max_size above 9 is not supported");
  std::vector<kripke::Frame> out;
  for (int n = 1; n <= max_size; ++n) {
    std::vector<Poset> tops = n == 1 ? std::vector<Poset>{} : enumerate_posets(n - 1);
    std::map<std::vector<WorldSet>, Poset> classes;
    auto add = [&](std::vector<WorldSet> up) {
      Canonical c = canonical_form(Poset::from_up_sets(std::move(up)));
      classes.emplace(std::move(c.code), std::move(c.poset));
    };
    if (n == 1) {
      add({bit(0)});
    } else {
      for (const Poset& rest : tops) {
        std::vector<WorldSet> up{all_of(n)};
        for (WorldSet u : rest.up_sets()) up.push_back(u << 1);
        add(std::move(up));
      }
    }
    for (auto& [code, poset] : classes) {
      kripke::Frame frame = kripke::Frame::rooted(std::move(poset));
      if (!topwidth_bound || kripke::topwidth(frame) <= *topwidth_bound) out.push_back(std::move(frame));
    }
  }
  return out;
}

}  // namespace wlem
