#include <doctest.h>

#include <innervol/innervol.h>

#include <cmath>
#include <cstring>
#include <string>

namespace {

struct Ctx {
  iv_context* c = iv_context_new();
  ~Ctx() { iv_context_free(c); }
};

std::string take(char* s) {
  std::string out = s ? s : "";
  iv_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("generate, serialize and reload") {
  Ctx ctx;
  iv_polytope* p = nullptr;
  REQUIRE(iv_polytope_generate(ctx.c, "rect 1 2 3", &p) == IV_OK);
  CHECK(iv_polytope_dim(p) == 3);
  char* text = nullptr;
  REQUIRE(iv_polytope_to_json(ctx.c, p, &text) == IV_OK);
  iv_polytope* q = nullptr;
  REQUIRE(iv_polytope_from_json(ctx.c, text, &q) == IV_OK);
  iv_string_free(text);
  double vol = 0.0;
  REQUIRE(iv_polytope_volume(ctx.c, q, &vol) == IV_OK);
  CHECK(vol == doctest::Approx(48.0));
  int rank = 0, all = 1;
  REQUIRE(iv_absolute_rank(ctx.c, q, &rank, &all) == IV_OK);
  CHECK(rank == 1);
  CHECK(all == 0);
  iv_polytope_free(p);
  iv_polytope_free(q);
}

TEST_CASE("volume function handle") {
  Ctx ctx;
  iv_polytope* p = nullptr;
  REQUIRE(iv_polytope_generate(ctx.c, "cube", &p) == IV_OK);
  iv_volume_fn* f = nullptr;
  REQUIRE(iv_volume_fn_compute(ctx.c, p, 0.1, &f) == IV_OK);
  CHECK(iv_volume_fn_inradius(f) == doctest::Approx(1.0));
  double v = 0, w = 0;
  REQUIRE(iv_volume_fn_eval(ctx.c, f, 0.5, &v, &w) == IV_OK);
  CHECK(v == doctest::Approx(7.0));
  CHECK(w == doctest::Approx(1.0));
  CHECK(iv_volume_fn_eval(ctx.c, f, -1.0, &v, &w) == IV_ERR_OUT_OF_DOMAIN);
  CHECK(std::strlen(iv_context_last_error(ctx.c)) > 0);
  const std::string j = take([&] {
    char* s = nullptr;
    CHECK(iv_volume_fn_to_json(ctx.c, f, &s) == IV_OK);
    return s;
  }());
  CHECK(j.find("\"measured_class\":2") != std::string::npos);
  CHECK(j.find("\"class_bound\":0") != std::string::npos);
  iv_volume_fn_free(f);
  iv_polytope_free(p);
}

TEST_CASE("roof and inradius") {
  Ctx ctx;
  iv_polytope* sq = nullptr;
  iv_polytope* roof = nullptr;
  REQUIRE(iv_polytope_generate(ctx.c, "square 1 1", &sq) == IV_OK);
  REQUIRE(iv_polytope_roof(ctx.c, sq, &roof) == IV_OK);
  double g = 0, center[3] = {};
  REQUIRE(iv_inradius(ctx.c, roof, &g, center, 3) == IV_OK);
  CHECK(g == doctest::Approx(std::sqrt(2.0) - 1));
  CHECK(iv_inradius(ctx.c, roof, &g, center, 2) == IV_ERR_INVALID_ARGUMENT);
  iv_polytope_free(sq);
  iv_polytope_free(roof);
}

TEST_CASE("error statuses") {
  Ctx ctx;
  iv_polytope* p = nullptr;
  CHECK(iv_polytope_from_json(ctx.c, "{\"dim\":2,\"halfspaces\":[{\"a\":[1,0],\"b\":1}]}", &p) ==
        IV_ERR_UNBOUNDED_INPUT);
  CHECK(p == nullptr);
  CHECK(iv_status_is_input_error(IV_ERR_UNBOUNDED_INPUT));
  CHECK_FALSE(iv_status_is_input_error(IV_ERR_NUMERICAL_FAILURE));
  CHECK(std::string(iv_status_name(IV_ERR_UNBOUNDED_INPUT)) == "UnboundedInput");
  CHECK(iv_polytope_from_json(ctx.c, "not json", &p) == IV_ERR_PARSE);
  CHECK(iv_polytope_generate(ctx.c, "blob", &p) == IV_ERR_INVALID_ARGUMENT);
  CHECK(iv_polytope_generate(ctx.c, nullptr, &p) == IV_ERR_INVALID_ARGUMENT);
  CHECK(iv_polytope_generate(nullptr, "cube", &p) == IV_ERR_INVALID_ARGUMENT);
  CHECK(iv_context_set_tolerances(ctx.c, "{\"nope\": 1}") == IV_ERR_PARSE);
  CHECK(iv_context_set_tolerances(ctx.c, "{\"feas\": 1e-10}") == IV_OK);
}

TEST_CASE("equiangular report and verification") {
  Ctx ctx;
  iv_polytope* d = nullptr;
  REQUIRE(iv_polytope_generate(ctx.c, "cut-dodecahedron", &d) == IV_OK);
  char* s = nullptr;
  REQUIRE(iv_equiangular_report(ctx.c, d, &s) == IV_OK);
  const std::string report = take(s);
  CHECK(report.find("\"equiangular\":true") != std::string::npos);
  iv_polytope_free(d);

  iv_polytope* p = nullptr;
  REQUIRE(iv_polytope_generate(ctx.c, "pentagon", &p) == IV_OK);
  int passed = 0;
  REQUIRE(iv_verify(ctx.c, p, nullptr, 20, 200000, 5, &s, &passed) == IV_OK);
  iv_string_free(s);
  CHECK(passed == 1);
  const char* wrong =
      R"({"degree":2,"breakpoints":[0,1],"pieces":[[0,10,-4.3]],"left_tail":null,"right_tail":[5.7,0,0]})";
  REQUIRE(iv_verify(ctx.c, p, wrong, 20, 200000, 5, &s, &passed) == IV_OK);
  iv_string_free(s);
  CHECK(passed == 0);
  iv_polytope_free(p);
}
