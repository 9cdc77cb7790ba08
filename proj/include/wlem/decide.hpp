#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "detail/parallel.hpp"
#include "detail/program.hpp"
#include "enumerate.hpp"
#include "formula.hpp"
#include "kripke.hpp"
#include "search.hpp"
#include "sperner.hpp"

namespace wlem::decide {

using kripke::Countermodel;
using kripke::Frame;
using kripke::SearchOptions;

inline constexpr int kDefaultMaxSize = 6;

/// No countermodel among the searched frames. This is a bounded claim only.
struct ValidUpToBound {
  int max_size;
  int topwidth_bound;
  std::size_t frames_checked;
};

/// A verified countermodel; the formula is not in the logic.
struct Refuted {
  Countermodel countermodel;
};

using Verdict = std::variant<ValidUpToBound, Refuted>;

inline bool is_refuted(const Verdict& v) { return std::holds_alternative<Refuted>(v); }

/// Membership of f in IPC + gen_phi(k), searched over all rooted frames of
/// topwidth at most min_topwidth_for(k) with up to max_size worlds.
inline Verdict check_membership(const Formula& f, int k, int max_size = kDefaultMaxSize,
                                const SearchOptions& options = {}) {
  if (k < 1) throw Error(ErrorCode::invalid_argument, "k must be >= 1");
  const int n = sperner::min_topwidth_for(static_cast<std::uint64_t>(k));
  const std::vector<Frame> frames = enumerate_frames(max_size, n);
  const wlem::detail::Program prog(f);
  Budget budget(options.cap);
  auto hit = wlem::detail::first_hit(frames.size(), options.jobs, [&](std::size_t i) {
    return kripke::holds_in_frame(frames[i], prog, f, budget).countermodel;
  });
  if (!hit) return ValidUpToBound{max_size, n, frames.size()};
  Countermodel& cm = hit->second;
  if (kripke::force(cm.model, cm.world, cm.formula)) {
    throw Error(ErrorCode::precondition, "internal error: countermodel does not re-verify");
  }
  return Refuted{std::move(cm)};
}

/// Outcome of comparing two formulas frame by frame.
struct Equivalidity {
  bool equivalid = true;
  std::size_t frames_checked = 0;
  /// First frame validating exactly one of the two formulas.
  std::optional<Frame> witness;
  /// Countermodel on the witness for whichever formula fails there.
  std::optional<Countermodel> countermodel;
  /// True when the witness validates f (and refutes g).
  bool witness_validates_first = false;
};

/// Every enumerated frame validates f iff it validates g.
inline Equivalidity logics_equivalid(const Formula& f, const Formula& g, int max_size,
                                     std::optional<int> topwidth_bound = {},
                                     const SearchOptions& options = {}) {
  const std::vector<Frame> frames = enumerate_frames(max_size, topwidth_bound);
  const wlem::detail::Program pf(f);
  const wlem::detail::Program pg(g);
  Budget budget(options.cap);
  struct Split {
    Countermodel cm;
    bool validates_first;
  };
  auto hit = wlem::detail::first_hit(frames.size(), options.jobs, [&](std::size_t i) -> std::optional<Split> {
    auto cf = kripke::holds_in_frame(frames[i], pf, f, budget).countermodel;
    auto cg = kripke::holds_in_frame(frames[i], pg, g, budget).countermodel;
    if (cf.has_value() == cg.has_value()) return std::nullopt;
    if (cf) return Split{std::move(*cf), false};
    return Split{std::move(*cg), true};
  });
  Equivalidity out;
  out.frames_checked = hit ? hit->first + 1 : frames.size();
  if (hit) {
    out.equivalid = false;
    out.witness = frames[hit->first];
    out.countermodel = std::move(hit->second.cm);
    out.witness_validates_first = hit->second.validates_first;
  }
  return out;
}

}  // namespace wlem::decide
