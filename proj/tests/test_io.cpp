#include <catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace wlem;
using io::Json;

namespace {

ErrorCode error_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::precondition;
}

}  // namespace

TEST_CASE("frame JSON", "[io]") {
  const auto fr = io::frame_from_json(io::read_json_file(WLEM_DATA_DIR "/fork.json"));
  CHECK(fr == kripke::Frame::from_cover(3, {{0, 1}, {0, 2}}, 0));
  CHECK(fr.names() == std::vector<std::string>{"r", "a", "b"});
  CHECK(io::to_json(fr).dump() == R"({"worlds":3,"cover":[[0,1],[0,2]],"root":0,"names":["r","a","b"]})");
  for (const auto& g : enumerate_frames(5)) CHECK(io::frame_from_json(io::to_json(g)) == g);
}

TEST_CASE("model and countermodel JSON", "[io]") {
  const auto m = io::model_from_json(io::read_json_file(WLEM_DATA_DIR "/fork_model.json"));
  CHECK(m.value(1) == bit(1));
  const auto res = kripke::holds_in_frame(m.frame(), gen_phi(1));
  REQUIRE(res.countermodel);
  const Json j = io::to_json(*res.countermodel);
  CHECK(j["valuation"].dump() == R"({"p1":["a"]})");
  CHECK(j["world"] == "r");
  const auto back = io::countermodel_from_json(j);
  CHECK(back.model.valuation() == res.countermodel->model.valuation());
  CHECK(back.world == 0);
  CHECK(back.formula == gen_phi(1));
  const auto wrapped = io::countermodel_from_json(Json{{"verdict", "refuted"}, {"countermodel", j}});
  CHECK(wrapped.model.frame() == m.frame());
}

TEST_CASE("algebra JSON", "[io]") {
  const auto L = io::algebra_from_json(io::read_json_file(WLEM_DATA_DIR "/diamond_algebra.json"));
  CHECK(L.size() == 4);
  const auto alg = duality::alg_of_frame(kripke::fan(2));
  const Json j = io::to_json(alg);
  CHECK(j.contains("sets"));
  const auto back = io::algebra_from_json(j);
  for (int a = 0; a < back.size(); ++a)
    for (int b = 0; b < back.size(); ++b) CHECK(back.leq(a, b) == alg.algebra.leq(a, b));
}

TEST_CASE("loader errors", "[io][errors]") {
  CHECK(error_of([] { io::parse_json("{"); }) == ErrorCode::bad_input);
  CHECK(error_of([] { io::read_json_file("/nonexistent/x.json"); }) == ErrorCode::bad_input);
  CHECK(error_of([] { io::frame_from_json(Json::parse(R"({"cover":[],"root":0})")); }) == ErrorCode::bad_input);
  CHECK(error_of([] { io::frame_from_json(Json::parse(R"({"worlds":2,"cover":[[0]],"root":0})")); }) ==
        ErrorCode::bad_input);
  CHECK(error_of([] { io::frame_from_json(Json::parse(R"({"worlds":2,"cover":[[0,1],[1,0]],"root":0})")); }) ==
        ErrorCode::not_partial_order);
  CHECK(error_of([] { io::frame_from_json(Json::parse(R"({"worlds":3,"cover":[[0,1]],"root":0})")); }) ==
        ErrorCode::not_rooted);
  CHECK(error_of([] {
          io::model_from_json(Json::parse(R"({"worlds":2,"cover":[[0,1]],"root":0,"valuation":{"p1":[0]}})"));
        }) == ErrorCode::not_up_closed);
  CHECK(error_of([] {
          io::model_from_json(Json::parse(R"({"worlds":2,"cover":[[0,1]],"root":0,"valuation":{"q":[1]}})"));
        }) == ErrorCode::bad_input);
  CHECK(error_of([] {
          io::model_from_json(Json::parse(R"({"worlds":2,"cover":[[0,1]],"root":0,"valuation":{"p1":["z"]}})"));
        }) == ErrorCode::bad_input);
  CHECK(error_of([] { io::algebra_from_json(io::read_json_file(WLEM_DATA_DIR "/m3_algebra.json")); }) ==
        ErrorCode::not_distributive);
}

TEST_CASE("antichain and verdict JSON", "[io]") {
  CHECK(io::to_json(sperner::max_antichain(2, 2)).dump() == R"({"k":2,"m":2,"sets":[[1],[2]]})");
  const auto v = decide::check_membership(gen_phi(1), 1, 4);
  CHECK(io::to_json(v).dump() ==
        R"({"verdict":"valid-up-to-bound","max_size":4,"topwidth_bound":1,"frames_checked":5})");
}
