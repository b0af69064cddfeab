#include <doctest.h>

#include <fstream>
#include <sstream>

#include "gen.hpp"
#include "qvariant/closedform.hpp"
#include "qvariant/json_io.hpp"

using namespace qvariant;

namespace {
std::string slurp(const std::string& name) {
  std::ifstream in(std::string(QV_GOLDEN_DIR) + "/" + name);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Params2 golden_params() {
  Params2 p;
  p.h = {HalfInt(1), HalfInt(0)};
  p.l = {HalfInt(0), HalfInt(0)};
  p.alpha1 = 0;
  p.alpha2 = 1;
  p.t = {Scalar(1L), Scalar(2L)};
  return p;
}
}  // namespace

TEST_CASE("golden operator dump") {
  auto ctx = QContext::exact("1/2");
  auto eq = make_variant_deg2(ctx, golden_params());
  CHECK(equation_to_json(eq).dump(2) + "\n" == slurp("var2_operator.json"));
}

TEST_CASE("golden g2 series dump") {
  auto ctx = QContext::exact("1/2");
  auto s = g2_series(ctx, golden_params(), 1, 5);
  CHECK(series_to_json(s).dump(2) + "\n" == slurp("g2_n5.json"));
}

TEST_CASE("scalar encoding") {
  CHECK(scalar_to_json(Scalar(3, 4)) == "3/4");
  CHECK(scalar_to_json(Scalar(5L)) == "5/1");
  CHECK(scalar_to_json(Scalar::floating(0.5, -1)) == json::array({0.5, -1.0}));
  CHECK(scalar_from_json("-2/6", Mode::exact) == Scalar(-1, 3));
  CHECK(scalar_from_json(json::array({1.5, 2.0}), Mode::floating) == Scalar::floating(1.5, 2.0));
}

TEST_CASE("round trips") {
  auto ctx = QContext::exact("2/3");
  gen::for_cases(51, 20, [&](gen::Gen& g) {
    Params2 p2 = gen::params2(g);
    Params2 b2 = params2_from_json(params2_to_json(p2), Mode::exact);
    CHECK(b2.h == p2.h);
    CHECK(b2.l == p2.l);
    CHECK(b2.alpha1 == p2.alpha1);
    CHECK(b2.alpha2 == p2.alpha2);
    CHECK(b2.t == p2.t);
    Params3 p3 = gen::params3(g);
    Params3 b3 = params3_from_json(params3_to_json(p3), Mode::exact);
    CHECK(b3.h == p3.h);
    CHECK(b3.l == p3.l);
    CHECK(b3.alpha == p3.alpha);
    CHECK(b3.t == p3.t);
    auto eq = make_variant_deg3(ctx, p3);
    auto back = equation_from_json(equation_to_json(eq));
    CHECK(back == eq);
    CHECK(back.ctx.p() == ctx.p());
    CHECK(poly_from_json(poly_to_json(eq.v), Mode::exact) == eq.v);
  });
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS(scalar_from_json("1/0", Mode::exact));
  CHECK_THROWS(scalar_from_json(json::object(), Mode::exact));
  CHECK_THROWS(equation_from_json(json{{"schema", 99}}));
}
