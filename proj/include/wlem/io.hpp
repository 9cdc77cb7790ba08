#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "brouwer.hpp"
#include "decide.hpp"
#include "duality.hpp"
#include "formula.hpp"
#include "kripke.hpp"
#include "sperner.hpp"

// JSON formats:
//   frame        {"worlds": n, "cover": [[i,j],...], "root": r, "names": [...]?}
//   model        frame fields plus {"valuation": {"p1": [worlds...], ...}}
//   countermodel {"frame": F, "valuation": V, "world": x, "formula": "..."}
//   algebra      {"elements": m, "leq": [[i,j],...], "bottom": i0, "top": i1}
// Worlds are indices, or names when the frame declares "names".

namespace wlem::io {

using Json = nlohmann::ordered_json;

namespace detail {

[[noreturn]] inline void bad(const std::string& what) { throw Error(ErrorCode::bad_input, what); }

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

inline int integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<int>();
}

inline std::vector<std::pair<int, int>> pairs(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array of pairs");
  std::vector<std::pair<int, int>> out;
  for (const Json& p : j) {
    if (!p.is_array() || p.size() != 2) bad(std::string(what) + " entries must be [i, j]");
    out.emplace_back(integer(p[0], what), integer(p[1], what));
  }
  return out;
}

inline Json pairs_json(const std::vector<std::pair<int, int>>& ps) {
  Json out = Json::array();
  for (auto [a, b] : ps) out.push_back(Json::array({a, b}));
  return out;
}

inline int world_index(const kripke::Frame& frame, const Json& w) {
  if (w.is_number_integer()) {
    const int x = w.get<int>();
    if (x < 0 || x >= frame.size()) bad("world " + std::to_string(x) + " out of range");
    return x;
  }
  if (w.is_string()) {
    const auto& names = frame.names();
    auto it = std::find(names.begin(), names.end(), w.get<std::string>());
    if (it == names.end()) bad("unknown world \"" + w.get<std::string>() + "\"");
    return static_cast<int>(it - names.begin());
  }
  bad("worlds must be indices or names");
}

inline Json world_json(const kripke::Frame& frame, int x) {
  if (frame.names().empty()) return x;
  return frame.names()[x];
}

}  // namespace detail

inline Json to_json(const kripke::Frame& frame) {
  Json j;
  j["worlds"] = frame.size();
  j["cover"] = detail::pairs_json(frame.order().covers());
  j["root"] = frame.root();
  if (!frame.names().empty()) j["names"] = frame.names();
  return j;
}

inline kripke::Frame frame_from_json(const Json& j) {
  const int n = detail::integer(detail::field(j, "worlds"), "worlds");
  kripke::Frame frame = kripke::Frame::from_cover(n, detail::pairs(detail::field(j, "cover"), "cover"),
                                                  detail::integer(detail::field(j, "root"), "root"));
  if (j.contains("names")) {
    const Json& names = j.at("names");
    if (!names.is_array()) detail::bad("names must be an array of strings");
    std::vector<std::string> out;
    for (const Json& s : names) {
      if (!s.is_string()) detail::bad("names must be an array of strings");
      out.push_back(s.get<std::string>());
    }
    frame.set_names(std::move(out));
  }
  return frame;
}

inline Json valuation_json(const kripke::Frame& frame, const std::map<int, WorldSet>& valuation) {
  Json j = Json::object();
  for (const auto& [index, worlds] : valuation) {
    Json ws = Json::array();
    for (int x : members(worlds)) ws.push_back(detail::world_json(frame, x));
    j["p" + std::to_string(index)] = std::move(ws);
  }
  return j;
}

inline std::map<int, WorldSet> valuation_from_json(const kripke::Frame& frame, const Json& j) {
  if (!j.is_object()) detail::bad("valuation must be an object");
  std::map<int, WorldSet> out;
  for (const auto& [key, ws] : j.items()) {
    const auto index = canonical_var_index(key);
    if (!index) detail::bad("valuation keys must look like p1, p2, ...; got \"" + key + "\"");
    if (!ws.is_array()) detail::bad("valuation of " + key + " must be an array");
    WorldSet set = 0;
    for (const Json& w : ws) set |= bit(detail::world_index(frame, w));
    out[*index] = set;
  }
  return out;
}

inline Json to_json(const kripke::Model& m) {
  Json j = to_json(m.frame());
  j["valuation"] = valuation_json(m.frame(), m.valuation());
  return j;
}

inline kripke::Model model_from_json(const Json& j) {
  kripke::Frame frame = frame_from_json(j);
  auto valuation = valuation_from_json(frame, detail::field(j, "valuation"));
  return kripke::Model(std::move(frame), std::move(valuation));
}

inline Json to_json(const kripke::Countermodel& cm) {
  const kripke::Frame& frame = cm.model.frame();
  Json j;
  j["frame"] = to_json(frame);
  j["valuation"] = valuation_json(frame, cm.model.valuation());
  j["world"] = detail::world_json(frame, cm.world);
  j["formula"] = print(cm.formula);
  return j;
}

/// Accepts a bare countermodel or any object carrying one under
/// "countermodel" (as printed by check-frame, countermodel and decide).
inline kripke::Countermodel countermodel_from_json(const Json& j) {
  if (j.is_object() && j.contains("countermodel")) return countermodel_from_json(j.at("countermodel"));
  kripke::Frame frame = frame_from_json(detail::field(j, "frame"));
  auto valuation = valuation_from_json(frame, detail::field(j, "valuation"));
  const int world = detail::world_index(frame, detail::field(j, "world"));
  const Json& text = detail::field(j, "formula");
  if (!text.is_string()) detail::bad("formula must be a string");
  Formula f = parse(text.get<std::string>());
  return {kripke::Model(std::move(frame), std::move(valuation)), world, std::move(f)};
}

inline Json to_json(const brouwer::BrouwerAlgebra& L) {
  Json j;
  j["elements"] = L.size();
  j["leq"] = detail::pairs_json(L.covers());
  j["bottom"] = L.bottom();
  j["top"] = L.top();
  return j;
}

/// Also lists the open set behind every element.
inline Json to_json(const duality::OpenSetAlgebra& alg) {
  Json j = to_json(alg.algebra);
  Json sets = Json::array();
  for (WorldSet s : alg.sets) sets.push_back(members(s));
  j["sets"] = std::move(sets);
  return j;
}

inline brouwer::BrouwerAlgebra algebra_from_json(const Json& j) {
  return brouwer::BrouwerAlgebra::from_order(
      detail::integer(detail::field(j, "elements"), "elements"), detail::pairs(detail::field(j, "leq"), "leq"),
      detail::integer(detail::field(j, "bottom"), "bottom"), detail::integer(detail::field(j, "top"), "top"));
}

inline Json to_json(const sperner::Antichain& a) {
  Json j;
  j["k"] = a.size();
  j["m"] = a.n;
  Json sets = Json::array();
  for (sperner::Subset s : a.sets) sets.push_back(sperner::elements(s));
  j["sets"] = std::move(sets);
  return j;
}

inline Json to_json(const decide::Verdict& v) {
  Json j;
  if (const auto* ok = std::get_if<decide::ValidUpToBound>(&v)) {
    j["verdict"] = "valid-up-to-bound";
    j["max_size"] = ok->max_size;
    j["topwidth_bound"] = ok->topwidth_bound;
    j["frames_checked"] = ok->frames_checked;
  } else {
    j["verdict"] = "refuted";
    j["countermodel"] = to_json(std::get<decide::Refuted>(v).countermodel);
  }
  return j;
}

inline Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    detail::bad(std::string("malformed JSON: ") + e.what());
  }
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) detail::bad("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

}  // namespace wlem::io
