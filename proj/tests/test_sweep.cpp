#include <doctest.h>

#include <set>

#include "qvariant/errors.hpp"
#include "qvariant/sweep.hpp"
#include "qvariant/verify.hpp"

using namespace qvariant;

TEST_CASE("draw streams are distinct and reproducible") {
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 1000; ++i) seen.insert(draw_stream_seed(7, i));
  CHECK(seen.size() == 1000);
  CHECK(draw_stream_seed(7, 3) == draw_stream_seed(7, 3));
  CHECK(draw_stream_seed(7, 3) != draw_stream_seed(8, 3));
}

TEST_CASE("sampled values stay in range") {
  DrawRng rng(draw_stream_seed(1, 0));
  std::set<long> halves;
  for (int k = 0; k < 5000; ++k) {
    HalfInt h = rng.half_int();
    CHECK(h.twice() >= -8);
    CHECK(h.twice() <= 8);
    halves.insert(h.twice());
    Scalar r = rng.small_rational(Mode::exact);
    CHECK_FALSE(r.is_zero());
    CHECK(abs(r.rational().get_num()) <= 9);
    CHECK(r.rational().get_den() <= 9);
  }
  CHECK(halves.size() == 17);
}

TEST_CASE("drawn parameters have half-integer lambda and nu") {
  for (int i = 0; i < 200; ++i) {
    DrawRng rng(draw_stream_seed(5, i));
    Params2 p2 = draw_params2(rng, Mode::exact);
    CHECK(((p2.h[0] + p2.h[1] - p2.l[0] - p2.l[1] - p2.alpha1 - p2.alpha2).twice() % 2) == 0);
    Params3 p3 = draw_params3(rng, Mode::exact);
    CHECK(((p3.h[0] + p3.h[1] + p3.h[2] - p3.l[0] - p3.l[1] - p3.l[2]).twice() % 2) == 0);
    for (int k = 0; k < 3; ++k) {
      CHECK(p3.h[k].twice() >= -8);
      CHECK(p3.l[k].twice() <= 8);
    }
  }
}

TEST_CASE("rejections resample from the same stream") {
  auto fn = [](int index, DrawRng& rng) -> json {
    int v = rng.uniform(0, 3);
    if (v != 0) throw DegenerateError("reject");
    return {{"index", index}, {"pass", true}};
  };
  auto recs = run_sweep_serial(20, 3, fn);
  REQUIRE(recs.size() == 20);
  for (int i = 0; i < 20; ++i) {
    CHECK(recs[i]["draw"] == i);
    CHECK(recs[i]["index"] == i);
    CHECK(recs[i]["rejected"].get<int>() >= 0);
  }
}

TEST_CASE("exhausted rejections and hard errors become error records") {
  auto never = [](int, DrawRng&) -> json { throw DegenerateError("always"); };
  auto a = run_sweep_serial(2, 1, never);
  CHECK(a[0].contains("error"));
  CHECK(a[0]["pass"] == false);
  auto hard = [](int i, DrawRng&) -> json {
    if (i == 1) throw DomainError("bad");
    return {{"pass", true}};
  };
  auto b = run_sweep_parallel(3, 1, hard);
  CHECK_FALSE(b[0].contains("error"));
  CHECK(b[1]["error"] == "bad");
  CHECK(b[1]["pass"] == false);
}

TEST_CASE("serial and parallel sweeps agree byte for byte") {
  auto fn = [](int index, DrawRng& rng) -> json {
    Params2 p = draw_params2(rng, Mode::exact);
    return {{"lambda", p.lambda().str()}, {"u", rng.uniform(0, 1000000)}, {"i", index}};
  };
  auto s = run_sweep_serial(64, 11, fn), p = run_sweep_parallel(64, 11, fn);
  CHECK(json(s).dump() == json(p).dump());
}

TEST_CASE("verify reports are deterministic") {
  for (const std::string t : {"thm2", "conj3", "ode"}) {
    VerifyConfig cfg;
    cfg.draws = 4;
    cfg.N = 8;
    cfg.parallel = true;
    auto a = run_verify(t, cfg).to_json().dump();
    auto b = run_verify(t, cfg).to_json().dump();
    cfg.parallel = false;
    auto c = run_verify(t, cfg).to_json().dump();
    CHECK(a == b);
    CHECK(a == c);
  }
  VerifyConfig cfg;
  CHECK_THROWS_AS(run_verify("nope", cfg), DomainError);
}
