#pragma once

// Brute-force reference implementations used only by the tests. None of
// them share code paths with the library beyond the public data types.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include <wlem/wlem.hpp>

namespace oracle {

using wlem::Formula;
using Matrix = std::vector<std::vector<bool>>;

inline Matrix matrix_of(const wlem::Poset& p) {
  Matrix m(p.size(), std::vector<bool>(p.size()));
  for (int i = 0; i < p.size(); ++i)
    for (int j = 0; j < p.size(); ++j) m[i][j] = p.leq(i, j);
  return m;
}

inline bool is_partial_order(const Matrix& le) {
  const int n = static_cast<int>(le.size());
  for (int i = 0; i < n; ++i) {
    if (!le[i][i]) return false;
    for (int j = 0; j < n; ++j) {
      if (i != j && le[i][j] && le[j][i]) return false;
      for (int k = 0; k < n; ++k)
        if (le[i][j] && le[j][k] && !le[i][k]) return false;
    }
  }
  return true;
}

/// Every partial order on {0..n-1}, by trying all relations.
inline std::vector<Matrix> labelled_posets(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) slots.emplace_back(i, j);
  std::vector<Matrix> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    Matrix le(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) le[i][i] = true;
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (mask >> s & 1U) le[slots[s].first][slots[s].second] = true;
    if (is_partial_order(le)) out.push_back(std::move(le));
  }
  return out;
}

inline bool isomorphic(const Matrix& a, const Matrix& b) {
  const int n = static_cast<int>(a.size());
  if (static_cast<int>(b.size()) != n) return false;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool same = true;
    for (int i = 0; i < n && same; ++i)
      for (int j = 0; j < n && same; ++j)
        if (a[i][j] != b[perm[i]][perm[j]]) same = false;
    if (same) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline std::vector<Matrix> iso_classes(const std::vector<Matrix>& all) {
  std::vector<Matrix> reps;
  for (const Matrix& m : all) {
    if (std::none_of(reps.begin(), reps.end(), [&](const Matrix& r) { return isomorphic(r, m); }))
      reps.push_back(m);
  }
  return reps;
}

inline bool has_least(const Matrix& le) {
  const int n = static_cast<int>(le.size());
  for (int r = 0; r < n; ++r) {
    bool least = true;
    for (int j = 0; j < n; ++j) least = least && le[r][j];
    if (least) return true;
  }
  return false;
}

inline int maximal_count(const Matrix& le) {
  const int n = static_cast<int>(le.size());
  int c = 0;
  for (int i = 0; i < n; ++i) {
    bool top = true;
    for (int j = 0; j < n; ++j)
      if (j != i && le[i][j]) top = false;
    c += top;
  }
  return c;
}

/// Largest antichain in P({1..n}) by exhaustive branch and bound over the
/// incomparability graph of all 2^n subsets.
inline int max_antichain_size(int n) {
  const int v = 1 << n;
  std::vector<std::vector<bool>> incomparable(v, std::vector<bool>(v));
  for (int a = 0; a < v; ++a)
    for (int b = 0; b < v; ++b) incomparable[a][b] = (a & ~b) != 0 && (b & ~a) != 0;
  int best = 0;
  // an antichain meets each chain at most once, so any chain cover of the
  // candidates bounds what they can still add
  auto chain_cover = [&](const std::vector<int>& cand) {
    std::vector<int> sorted = cand;
    std::sort(sorted.begin(), sorted.end(), [](int a, int b) {
      return __builtin_popcount(static_cast<unsigned>(a)) < __builtin_popcount(static_cast<unsigned>(b));
    });
    std::vector<int> tails;
    for (int c : sorted) {
      auto it = std::find_if(tails.begin(), tails.end(), [&](int t) { return (t & ~c) == 0; });
      if (it == tails.end()) tails.push_back(c);
      else *it = c;
    }
    return static_cast<int>(tails.size());
  };
  auto grow = [&](auto&& self, const std::vector<int>& cand, int size) -> void {
    best = std::max(best, size);
    if (size + chain_cover(cand) <= best) return;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      if (size + static_cast<int>(cand.size() - i) <= best) return;
      std::vector<int> next;
      for (std::size_t j = i + 1; j < cand.size(); ++j)
        if (incomparable[cand[i]][cand[j]]) next.push_back(cand[j]);
      self(self, next, size + 1);
    }
  };
  std::vector<int> all(v);
  std::iota(all.begin(), all.end(), 0);
  grow(grow, all, 0);
  return best;
}

/// Truth set of f in m, computed bottom-up over an explicit relation.
inline std::vector<bool> truth(const wlem::kripke::Model& m, const Formula& f) {
  const int n = m.frame().size();
  const auto& fr = m.frame();
  std::vector<bool> out(n);
  switch (f.kind()) {
    case wlem::Connective::var:
      for (int x = 0; x < n; ++x) out[x] = (m.value(f.index()) >> x) & 1U;
      break;
    case wlem::Connective::conj:
    case wlem::Connective::disj: {
      auto a = truth(m, f.left());
      auto b = truth(m, f.right());
      for (int x = 0; x < n; ++x) out[x] = f.kind() == wlem::Connective::conj ? (a[x] && b[x]) : (a[x] || b[x]);
      break;
    }
    case wlem::Connective::implies: {
      auto a = truth(m, f.left());
      auto b = truth(m, f.right());
      for (int x = 0; x < n; ++x) {
        out[x] = true;
        for (int y = 0; y < n; ++y)
          if (fr.accessible(x, y) && a[y] && !b[y]) out[x] = false;
      }
      break;
    }
    case wlem::Connective::neg: {
      auto a = truth(m, f.operand());
      for (int x = 0; x < n; ++x) {
        out[x] = true;
        for (int y = 0; y < n; ++y)
          if (fr.accessible(x, y) && a[y]) out[x] = false;
      }
      break;
    }
  }
  return out;
}

/// Up-closed subsets of the frame in increasing bitmask order, by filtering
/// all subsets.
inline std::vector<wlem::WorldSet> up_sets(const wlem::kripke::Frame& fr) {
  std::vector<wlem::WorldSet> out;
  const int n = fr.size();
  for (wlem::WorldSet s = 0; s < (wlem::WorldSet{1} << n); ++s) {
    bool closed = true;
    for (int x = 0; x < n && closed; ++x)
      for (int y = 0; y < n && closed; ++y)
        if ((s >> x & 1U) && fr.accessible(x, y) && !(s >> y & 1U)) closed = false;
    if (closed) out.push_back(s);
  }
  return out;
}

/// First valuation (lowest variable outermost, up-sets ascending) under
/// which some world fails f.
inline std::optional<std::map<int, wlem::WorldSet>> first_countermodel(const wlem::kripke::Frame& fr,
                                                                       const Formula& f) {
  const std::vector<int> vs = wlem::vars(f);
  const std::vector<wlem::WorldSet> ups = up_sets(fr);
  std::vector<std::size_t> digit(vs.size(), 0);
  while (true) {
    std::map<int, wlem::WorldSet> val;
    for (std::size_t j = 0; j < vs.size(); ++j) val[vs[j]] = ups[digit[j]];
    wlem::kripke::Model m(fr, val);
    auto t = truth(m, f);
    if (std::find(t.begin(), t.end(), false) != t.end()) return val;
    std::size_t j = vs.size();
    while (j > 0 && ++digit[j - 1] == ups.size()) digit[--j] = 0;
    if (j == 0) return std::nullopt;
  }
}

/// First assignment (lowest variable outermost, elements ascending) under
/// which f does not evaluate to 0.
inline std::optional<std::map<int, wlem::brouwer::Element>> first_counterexample(
    const wlem::brouwer::BrouwerAlgebra& L, const Formula& f) {
  const std::vector<int> vs = wlem::vars(f);
  std::vector<int> digit(vs.size(), 0);
  while (true) {
    std::map<int, wlem::brouwer::Element> a;
    for (std::size_t j = 0; j < vs.size(); ++j) a[vs[j]] = digit[j];
    if (wlem::brouwer::evaluate(L, f, a) != L.bottom()) return a;
    std::size_t j = vs.size();
    while (j > 0 && ++digit[j - 1] == L.size()) digit[--j] = 0;
    if (j == 0) return std::nullopt;
  }
}

/// a -> b in a finite lattice straight from the definition: the least c
/// with b <= a + c, found by scanning for a candidate below all others.
inline wlem::brouwer::Element residual(const wlem::brouwer::BrouwerAlgebra& L, int a, int b) {
  std::vector<int> cands;
  for (int c = 0; c < L.size(); ++c)
    if (L.leq(b, L.join(a, c))) cands.push_back(c);
  for (int c : cands)
    if (std::all_of(cands.begin(), cands.end(), [&](int d) { return L.leq(c, d); })) return c;
  return -1;
}

/// Random rooted frame on n worlds; world 0 is the root.
inline wlem::kripke::Frame random_frame(std::mt19937& rng, int n) {
  std::vector<std::pair<int, int>> pairs;
  std::bernoulli_distribution coin(0.4);
  for (int j = 1; j < n; ++j) {
    std::uniform_int_distribution<int> parent(0, j - 1);
    pairs.emplace_back(parent(rng), j);
    for (int i = 0; i < j; ++i)
      if (coin(rng)) pairs.emplace_back(i, j);
  }
  return wlem::kripke::Frame::from_cover(n, pairs, 0);
}

inline wlem::WorldSet random_up_set(std::mt19937& rng, const wlem::kripke::Frame& fr) {
  std::bernoulli_distribution coin(0.35);
  wlem::WorldSet s = 0;
  for (int x = 0; x < fr.size(); ++x)
    if (coin(rng)) s |= fr.up(x);
  return s;
}

inline wlem::kripke::Model random_model(std::mt19937& rng, int max_worlds, int vars) {
  std::uniform_int_distribution<int> size(1, max_worlds);
  wlem::kripke::Frame fr = random_frame(rng, size(rng));
  std::map<int, wlem::WorldSet> val;
  for (int i = 1; i <= vars; ++i) val[i] = random_up_set(rng, fr);
  return wlem::kripke::Model(std::move(fr), std::move(val));
}

inline Formula random_formula(std::mt19937& rng, int depth, int vars) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 0 : 4);
  std::uniform_int_distribution<int> var(1, vars);
  switch (pick(rng)) {
    case 0: return wlem::var(var(rng));
    case 1: return Formula::conj(random_formula(rng, depth - 1, vars), random_formula(rng, depth - 1, vars));
    case 2: return Formula::disj(random_formula(rng, depth - 1, vars), random_formula(rng, depth - 1, vars));
    case 3: return Formula::implies(random_formula(rng, depth - 1, vars), random_formula(rng, depth - 1, vars));
    default: return Formula::neg(random_formula(rng, depth - 1, vars));
  }
}

}  // namespace oracle
