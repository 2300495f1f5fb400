#include <doctest.h>

#include "innervol/error.hpp"
#include "innervol/json_io.hpp"
#include "innervol/shapes.hpp"

using namespace innervol;

namespace {

ErrorCode load_error(const char* text) {
  try {
    polytope_from_json_text(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("polytope json round trip") {
  const auto p = make_cut_dodecahedron();
  const auto q = polytope_from_json(polytope_to_json(p));
  REQUIRE(q.facet_count() == p.facet_count());
  for (std::size_t j = 0; j < p.facet_count(); ++j) {
    CHECK(q.halfspaces()[j].normal == p.halfspaces()[j].normal);
    CHECK(q.halfspaces()[j].offset == p.halfspaces()[j].offset);
  }
}

TEST_CASE("polytope json with <= rows") {
  const auto p = polytope_from_json_text(R"({"dim": 2, "halfspaces": [
    {"a": [1, 0], "b": 1, "sense": "<="}, {"a": [-2, 0], "b": 2, "sense": "<="},
    {"a": [0, 1], "b": 1}, {"a": [0, 1], "b": -1, "sense": ">="}]})");
  CHECK(p.facet_count() == 4);
  CHECK(polytope_volume(p) == doctest::Approx(4.0));
}

TEST_CASE("polytope json errors") {
  CHECK(load_error("{") == ErrorCode::Parse);
  CHECK(load_error(R"({"dim": 2})") == ErrorCode::Parse);
  CHECK(load_error(R"({"dim": 2, "halfspaces": [{"a": [1], "b": 0}]})") == ErrorCode::DimensionMismatch);
  CHECK(load_error(R"({"dim": 1, "halfspaces": [{"a": [0], "b": 1}]})") == ErrorCode::ZeroNormal);
  CHECK(load_error(R"({"dim": 1, "halfspaces": [{"a": [1], "b": 1, "sense": "<"}]})") == ErrorCode::Parse);
  CHECK(load_error(R"({"dim": 2, "halfspaces": [{"a": [1, 0], "b": 1}]})") == ErrorCode::UnboundedInput);
}

TEST_CASE("piecewise json round trip and padding") {
  const auto f = rectangle_closed_form({1, 2, 3});
  const auto j = piecewise_to_json(f);
  CHECK(j["degree"] == 3);
  CHECK(j["left_tail"].is_null());
  CHECK(j["right_tail"].size() == 4);
  CHECK(j["pieces"][0].size() == 4);
  const auto g = piecewise_from_json(j);
  CHECK(g.approx_equal(f, 0.0));
  CHECK(piecewise_to_json(g) == j);
}
