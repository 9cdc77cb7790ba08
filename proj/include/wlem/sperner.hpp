#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "error.hpp"

namespace wlem::sperner {

/// Subset of {1..n}; element i is bit i-1.
using Subset = std::uint64_t;

/// Family of subsets of {1..n}.
struct Antichain {
  int n = 0;
  std::vector<Subset> sets;

  std::size_t size() const { return sets.size(); }
  friend bool operator==(const Antichain&, const Antichain&) = default;
};

inline std::vector<int> elements(Subset s) {
  std::vector<int> out;
  for (int i = 0; s; ++i, s >>= 1) {
    if (s & 1U) out.push_back(i + 1);
  }
  return out;
}

inline Subset subset_of(const std::vector<int>& elems) {
  Subset s = 0;
  for (int e : elems) {
    if (e < 1 || e > 64) throw Error(ErrorCode::invalid_argument, "subset element out of range");
    s |= Subset{1} << (e - 1);
  }
  return s;
}

/// Binomial coefficient; throws if the result does not fit in 64 bits.
inline std::uint64_t binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  unsigned __int128 acc = 1;
  for (int i = 1; i <= r; ++i) {
    acc = acc * static_cast<unsigned>(n - r + i) / static_cast<unsigned>(i);
    if (acc > UINT64_MAX) throw Error(ErrorCode::invalid_argument, "binomial overflows 64 bits");
  }
  return static_cast<std::uint64_t>(acc);
}

/// C(n, floor(n/2)), the largest antichain in the power set of {1..n}.
inline std::uint64_t sperner_number(int n) {
  if (n < 0) throw Error(ErrorCode::invalid_argument, "n must be non-negative");
  return binomial(n, n / 2);
}

/// Least n >= 1 with C(n, floor(n/2)) >= k.
inline int min_topwidth_for(std::uint64_t k) {
  if (k < 1) throw Error(ErrorCode::invalid_argument, "k must be >= 1");
  int n = 1;
  while (sperner_number(n) < k) ++n;
  return n;
}

/// Pairwise incomparable under inclusion, with no repeats.
inline bool is_antichain(const std::vector<Subset>& family) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = 0; j < family.size(); ++j) {
      if (i != j && (family[i] & ~family[j]) == 0) return false;
    }
  }
  return true;
}

inline bool is_antichain(const Antichain& a) {
  const Subset ground = a.n >= 64 ? ~Subset{0} : (Subset{1} << a.n) - 1;
  for (Subset s : a.sets) {
    if (s & ~ground) return false;
  }
  return is_antichain(a.sets);
}

/// The first k subsets of size max(1, floor(n/2)) in colexicographic order.
/// For n = 1 the middle layer is taken as {{1}} rather than {{}}.
inline Antichain max_antichain(int n, std::uint64_t k) {
  if (n < 1 || n > 63) throw Error(ErrorCode::invalid_argument, "n must be in [1, 63]");
  if (k > sperner_number(n)) {
    throw Error(ErrorCode::invalid_argument,
                "no antichain of size " + std::to_string(k) + " in P({1.." + std::to_string(n) + "})");
  }
  const int r = std::max(1, n / 2);
  Antichain out{n, {}};
  if (k == 0) return out;
  // Gosper's hack walks r-subsets in increasing numeric (= colex) order
  Subset s = (Subset{1} << r) - 1;
  while (out.sets.size() < k) {
    out.sets.push_back(s);
    const Subset c = s & (~s + 1);
    const Subset rr = s + c;
    s = (((rr ^ s) >> 2) / c) | rr;
  }
  return out;
}

}  // namespace wlem::sperner
