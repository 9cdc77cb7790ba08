#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "detail/parallel.hpp"
#include "detail/program.hpp"
#include "enumerate.hpp"
#include "formula.hpp"
#include "kripke.hpp"
#include "sperner.hpp"

namespace wlem::kripke {

struct SearchOptions {
  std::uint64_t cap = Budget::kDefaultCap;
  unsigned jobs = 1;
};

/// First countermodel over enumerate_frames(max_size, topwidth_bound) x
/// valuations, in enumeration order.
inline std::optional<Countermodel> countermodel_search(const Formula& f, int max_size,
                                                       std::optional<int> topwidth_bound = {},
                                                       const SearchOptions& options = {}) {
  const std::vector<Frame> frames = enumerate_frames(max_size, topwidth_bound);
  const wlem::detail::Program prog(f);
  Budget budget(options.cap);
  auto hit = wlem::detail::first_hit(frames.size(), options.jobs, [&](std::size_t i) {
    return holds_in_frame(frames[i], prog, f, budget).countermodel;
  });
  if (!hit) return std::nullopt;
  return std::move(hit->second);
}

/// Turns a countermodel of gen_phi(k) into k pairwise incomparable subsets
/// of {1..m}, where m + 1 is the topwidth of its frame: one top above the
/// failing world forces ~p1 & ... & ~pk, the other tops are numbered 1..m in
/// world order and S_i collects the numbers of tops where p_i holds.
inline sperner::Antichain extract_antichain(const Countermodel& cm) {
  const std::vector<int> vs = vars(cm.formula);
  const int k = vs.empty() ? 0 : vs.back();
  if (k < 1 || !(cm.formula == gen_phi(k))) {
    throw Error(ErrorCode::precondition, "formula is not gen_phi(k): " + print(cm.formula));
  }
  const Model& model = cm.model;
  const Frame& frame = model.frame();
  if (force(model, cm.world, cm.formula)) {
    throw Error(ErrorCode::precondition, "world " + std::to_string(cm.world) + " forces the formula");
  }

  WorldSet anywhere = 0;
  for (int i = 1; i <= k; ++i) anywhere |= model.value(i);
  const WorldSet tops = frame.maximal();
  const WorldSet blank = tops & frame.up(cm.world) & ~anywhere;
  if (blank == 0) {
    throw Error(ErrorCode::precondition, "no maximal world above the failing world refutes every p_i");
  }
  const int chosen = members(blank).front();

  std::vector<int> labelled = members(tops & ~bit(chosen));
  sperner::Antichain out{static_cast<int>(labelled.size()), {}};
  for (int i = 1; i <= k; ++i) {
    sperner::Subset s = 0;
    for (std::size_t label = 0; label < labelled.size(); ++label) {
      if (contains(model.value(i), labelled[label])) s |= sperner::Subset{1} << label;
    }
    out.sets.push_back(s);
  }
  return out;
}

}  // namespace wlem::kripke
