#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace wlem {

/// Set of worlds (or poset elements) as a bitmask; bit x is element x.
using WorldSet = std::uint64_t;
inline constexpr int kMaxWorlds = 64;

inline constexpr WorldSet bit(int x) { return WorldSet{1} << x; }
inline constexpr WorldSet all_of(int n) { return n >= 64 ? ~WorldSet{0} : bit(n) - 1; }
inline constexpr bool contains(WorldSet s, int x) { return (s >> x) & 1U; }
inline int count(WorldSet s) { return std::popcount(s); }

inline std::vector<int> members(WorldSet s) {
  std::vector<int> out;
  while (s) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

/// Finite partial order on elements 0..n-1, stored as reflexive up-sets.
class Poset {
 public:
  Poset() = default;

  /// Reflexive-transitive closure of the given pairs (i, j), meaning i <= j.
  static Poset from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
    check_size(n);
    std::vector<WorldSet> up(n);
    for (int x = 0; x < n; ++x) up[x] = bit(x);
    for (auto [i, j] : pairs) {
      if (i < 0 || j < 0 || i >= n || j >= n) {
        throw Error(ErrorCode::bad_input, "pair (" + std::to_string(i) + "," +
                                              std::to_string(j) + ") out of range");
      }
      up[i] |= bit(j);
    }
    // Warshall on bitmasks
    for (int k = 0; k < n; ++k) {
      for (int i = 0; i < n; ++i) {
        if (contains(up[i], k)) up[i] |= up[k];
      }
    }
    return from_up_sets(std::move(up));
  }

  /// up[x] must already be reflexive and transitive; antisymmetry is checked.
  static Poset from_up_sets(std::vector<WorldSet> up) {
    const int n = static_cast<int>(up.size());
    check_size(n);
    Poset p;
    p.up_ = std::move(up);
    p.down_.assign(n, 0);
    for (int x = 0; x < n; ++x) {
      if (!contains(p.up_[x], x) || (p.up_[x] & ~all_of(n))) {
        throw Error(ErrorCode::not_partial_order, "relation is not reflexive on " + std::to_string(x));
      }
      for (int y : members(p.up_[x])) {
        if ((p.up_[y] & ~p.up_[x]) != 0) {
          throw Error(ErrorCode::not_partial_order, "relation is not transitive");
        }
        p.down_[y] |= bit(x);
      }
    }
    for (int x = 0; x < n; ++x) {
      for (int y : members(p.up_[x] & ~bit(x))) {
        if (contains(p.up_[y], x)) {
          throw Error(ErrorCode::not_partial_order,
                      "relation is not antisymmetric: " + std::to_string(x) + " and " +
                          std::to_string(y) + " are mutually related");
        }
      }
    }
    return p;
  }

  int size() const { return static_cast<int>(up_.size()); }
  WorldSet all() const { return all_of(size()); }
  WorldSet up(int x) const { return up_[x]; }
  WorldSet down(int x) const { return down_[x]; }
  bool leq(int x, int y) const { return contains(up_[x], y); }
  const std::vector<WorldSet>& up_sets() const { return up_; }

  WorldSet maximal() const {
    WorldSet out = 0;
    for (int x = 0; x < size(); ++x) {
      if (up_[x] == bit(x)) out |= bit(x);
    }
    return out;
  }

  WorldSet minimal() const {
    WorldSet out = 0;
    for (int x = 0; x < size(); ++x) {
      if (down_[x] == bit(x)) out |= bit(x);
    }
    return out;
  }

  bool is_up_set(WorldSet s) const {
    for (int x : members(s)) {
      if ((up_[x] & ~s) != 0) return false;
    }
    return true;
  }

  /// {x : up(x) does not meet s}. On up-set truth sets this is negation.
  WorldSet disjoint_from(WorldSet s) const {
    WorldSet out = 0;
    for (int x = 0; x < size(); ++x) {
      if ((up_[x] & s) == 0) out |= bit(x);
    }
    return out;
  }

  /// Hasse diagram edges (x, y) with x < y and nothing strictly between.
  std::vector<std::pair<int, int>> covers() const {
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < size(); ++x) {
      const WorldSet above = up_[x] & ~bit(x);
      for (int y : members(above)) {
        if ((above & down_[y] & ~bit(y)) == 0) out.emplace_back(x, y);
      }
    }
    return out;
  }

  Poset dual() const {
    Poset p;
    p.up_ = down_;
    p.down_ = up_;
    return p;
  }

  /// All up-sets in increasing bitmask order.
  std::vector<WorldSet> all_up_sets() const {
    std::vector<int> order(size());
    for (int x = 0; x < size(); ++x) order[x] = x;
    // successors before predecessors
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return count(up_[a]) < count(up_[b]); });
    std::vector<WorldSet> out;
    auto grow = [&](auto&& self, std::size_t i, WorldSet acc) -> void {
      if (i == order.size()) {
        out.push_back(acc);
        return;
      }
      const int x = order[i];
      self(self, i + 1, acc);
      if (((up_[x] & ~bit(x)) & ~acc) == 0) self(self, i + 1, acc | bit(x));
    };
    grow(grow, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<WorldSet> all_down_sets() const { return dual().all_up_sets(); }

  friend bool operator==(const Poset& a, const Poset& b) { return a.up_ == b.up_; }

 private:
  static void check_size(int n) {
    if (n < 1 || n > kMaxWorlds) {
      throw Error(ErrorCode::bad_input, "poset size must be in [1, 64], got " + std::to_string(n));
    }
  }

  std::vector<WorldSet> up_;
  std::vector<WorldSet> down_;
};

}  // namespace wlem
