#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <wlem/wlem.hpp>

namespace wlem::cli {

enum ExitCode : int {
  ok = 0,
  refuted = 1,
  failure = 2,
  usage = 64,
  bad_file = 66,
  resource = 69,
};

inline int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::bad_input:
    case ErrorCode::not_partial_order:
    case ErrorCode::not_rooted:
    case ErrorCode::not_up_closed:
    case ErrorCode::not_lattice:
    case ErrorCode::not_distributive:
    case ErrorCode::missing_residual:
    case ErrorCode::bad_bounds:
      return bad_file;
    case ErrorCode::resource_limit:
      return resource;
    default:
      return failure;
  }
}

namespace detail {

inline void emit(std::ostream& out, const io::Json& j) { out << j.dump() << '\n'; }

inline io::Json assignment_json(const std::map<int, brouwer::Element>& assignment) {
  io::Json j = io::Json::object();
  for (const auto& [index, e] : assignment) j["p" + std::to_string(index)] = e;
  return j;
}

}  // namespace detail

/// Runs one command; args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Intermediate logics between IPC and the weak excluded middle", "wlem"};
  app.require_subcommand(1);

  unsigned jobs = 1;
  std::uint64_t cap = Budget::kDefaultCap;
  app.add_option("--jobs", jobs, "worker threads for frame searches")->check(CLI::Range(1U, 256U));
  app.add_option("--cap", cap, "maximum number of evaluated assignments")->check(CLI::PositiveNumber);

  std::string family;
  int k = 0;
  auto* gen = app.add_subcommand("gen", "print phi_k or sigma_k");
  gen->add_option("family", family)->required()->check(CLI::IsMember({"phi", "sigma"}));
  gen->add_option("k", k)->required()->check(CLI::Range(1, 64));

  std::string file;
  std::string text;
  std::string text2;
  auto* check_frame = app.add_subcommand("check-frame", "check frame validity of a formula");
  check_frame->add_option("file", file)->required();
  check_frame->add_option("formula", text)->required();

  auto* check_algebra = app.add_subcommand("check-algebra", "check a formula on a Brouwer algebra");
  check_algebra->add_option("file", file)->required();
  check_algebra->add_option("formula", text)->required();

  auto* topwidth_cmd = app.add_subcommand("topwidth", "number of maximal worlds of a frame");
  topwidth_cmd->add_option("file", file)->required();

  int max_size = decide::kDefaultMaxSize;
  std::optional<int> width;
  auto* enum_frames = app.add_subcommand("enum-frames", "rooted frames up to isomorphism, one per line");
  enum_frames->add_option("--max-size", max_size)->required()->check(CLI::Range(1, 9));
  enum_frames->add_option("--topwidth", width)->check(CLI::Range(1, 64));

  std::string direction;
  auto* dual = app.add_subcommand("dual", "convert between frames and algebras");
  dual->add_option("direction", direction)->required()->check(CLI::IsMember({"frame-to-alg", "alg-to-frame"}));
  dual->add_option("file", file)->required();

  auto* decide_cmd = app.add_subcommand("decide", "bounded membership in IPC + phi_k");
  decide_cmd->add_option("--k", k)->required()->check(CLI::Range(1, 1 << 20));
  decide_cmd->add_option("--max-size", max_size)->required()->check(CLI::Range(1, 9));
  decide_cmd->add_option("formula", text)->required();

  auto* equivalid = app.add_subcommand("equivalid", "compare frame validity of two formulas");
  equivalid->add_option("f", text)->required();
  equivalid->add_option("g", text2)->required();
  equivalid->add_option("--max-size", max_size)->required()->check(CLI::Range(1, 9));
  equivalid->add_option("--topwidth", width)->check(CLI::Range(1, 64));

  auto* countermodel = app.add_subcommand("countermodel", "first countermodel over enumerated frames");
  countermodel->add_option("formula", text)->required();
  countermodel->add_option("--max-size", max_size)->required()->check(CLI::Range(1, 9));
  countermodel->add_option("--topwidth", width)->check(CLI::Range(1, 64));

  auto* sperner_cmd = app.add_subcommand("sperner", "least n with C(n, n/2) >= k");
  sperner_cmd->add_option("--k", k)->required()->check(CLI::Range(1, 1 << 30));

  auto* extract = app.add_subcommand("extract-antichain", "antichain from a countermodel of phi_k");
  extract->add_option("file", file)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "wlem: usage: " << e.what() << '\n';
    return usage;
  }

  const kripke::SearchOptions search{cap, jobs};
  try {
    if (gen->parsed()) {
      out << print(family == "phi" ? gen_phi(k) : gen_sigma(k)) << '\n';
      return ok;
    }
    if (check_frame->parsed()) {
      const kripke::Frame frame = io::frame_from_json(io::read_json_file(file));
      const Formula f = parse(text);
      const auto result = kripke::holds_in_frame(frame, f, kripke::CheckOptions{cap});
      io::Json j;
      j["verdict"] = result.holds() ? "valid" : "refuted";
      if (!result.holds()) j["countermodel"] = io::to_json(*result.countermodel);
      detail::emit(out, j);
      return result.holds() ? ok : refuted;
    }
    if (check_algebra->parsed()) {
      const brouwer::BrouwerAlgebra L = io::algebra_from_json(io::read_json_file(file));
      const Formula f = parse(text);
      const auto result = brouwer::satisfies(L, f, brouwer::SatisfyOptions{cap});
      io::Json j;
      j["verdict"] = result.satisfied() ? "satisfied" : "refuted";
      if (!result.satisfied()) {
        j["assignment"] = detail::assignment_json(*result.counterexample);
        j["value"] = result.value;
      }
      detail::emit(out, j);
      return result.satisfied() ? ok : refuted;
    }
    if (topwidth_cmd->parsed()) {
      const kripke::Frame frame = io::frame_from_json(io::read_json_file(file));
      detail::emit(out, io::Json{{"topwidth", kripke::topwidth(frame)}});
      return ok;
    }
    if (enum_frames->parsed()) {
      for (const kripke::Frame& frame : enumerate_frames(max_size, width)) detail::emit(out, io::to_json(frame));
      return ok;
    }
    if (dual->parsed()) {
      const io::Json input = io::read_json_file(file);
      if (direction == "frame-to-alg") {
        detail::emit(out, io::to_json(duality::alg_of_frame(io::frame_from_json(input))));
      } else {
        detail::emit(out, io::to_json(duality::frame_of_algebra(io::algebra_from_json(input))));
      }
      return ok;
    }
    if (decide_cmd->parsed()) {
      const auto verdict = decide::check_membership(parse(text), k, max_size, search);
      detail::emit(out, io::to_json(verdict));
      return decide::is_refuted(verdict) ? refuted : ok;
    }
    if (equivalid->parsed()) {
      const auto result = decide::logics_equivalid(parse(text), parse(text2), max_size, width, search);
      io::Json j;
      j["equivalid"] = result.equivalid;
      j["frames_checked"] = result.frames_checked;
      if (!result.equivalid) {
        j["witness"] = io::to_json(*result.witness);
        j["valid"] = result.witness_validates_first ? "first" : "second";
        j["countermodel"] = io::to_json(*result.countermodel);
      }
      detail::emit(out, j);
      return result.equivalid ? ok : refuted;
    }
    if (countermodel->parsed()) {
      const auto cm = kripke::countermodel_search(parse(text), max_size, width, search);
      io::Json j;
      if (cm) {
        j["verdict"] = "refuted";
        j["countermodel"] = io::to_json(*cm);
      } else {
        j["verdict"] = "none";
        j["max_size"] = max_size;
        if (width) j["topwidth_bound"] = *width;
      }
      detail::emit(out, j);
      return cm ? refuted : ok;
    }
    if (sperner_cmd->parsed()) {
      const int n = sperner::min_topwidth_for(static_cast<std::uint64_t>(k));
      io::Json j;
      j["k"] = k;
      j["n"] = n;
      j["binom"] = sperner::sperner_number(n);
      detail::emit(out, j);
      return ok;
    }
    if (extract->parsed()) {
      const kripke::Countermodel cm = io::countermodel_from_json(io::read_json_file(file));
      detail::emit(out, io::to_json(kripke::extract_antichain(cm)));
      return ok;
    }
  } catch (const Error& e) {
    err << "wlem: error[" << to_string(e.code()) << "]: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "wlem: error: " << e.what() << '\n';
    return failure;
  }
  err << "wlem: usage: no subcommand\n";
  return usage;
}

}  // namespace wlem::cli
