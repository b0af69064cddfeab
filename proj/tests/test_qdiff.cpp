#include <doctest.h>

#include <fstream>
#include <sstream>

#include "gen.hpp"
#include "qvariant/errors.hpp"
#include "qvariant/json_io.hpp"
#include "qvariant/qdiff.hpp"

using namespace qvariant;

namespace {
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

TEST_CASE("degree-two variant matches the frozen oracle operator") {
  auto ctx = QContext::exact("1/2");
  auto eq = make_variant_deg2(ctx, golden_params());
  CHECK(eq.u == Poly({Scalar(1, 8), Scalar(-9, 8), Scalar(1L)}));
  CHECK(eq.v == Poly({Scalar(-5, 4), Scalar(3L), Scalar(-5, 4)}));
  CHECK(eq.w == Poly({Scalar(2L), Scalar(-3, 2), Scalar(1, 4)}));
  CHECK(eq.degree() == 2);
}

TEST_CASE("q-hypergeometric operator coefficients") {
  auto ctx = QContext::exact("1/2");
  Scalar a(1, 3), b(2, 5), c(3, 7), q = ctx.q();
  auto eq = make_qhypergeometric(ctx, a, b, c);
  CHECK(eq.u == Poly({-q, ctx.one()}));
  CHECK(eq.v == Poly({q + c, -(a + b)}));
  CHECK(eq.w == Poly({-c, a * b}));
  CHECK(eq.degree() == 1);
}

TEST_CASE("degree-two variant is q-Heun with beta = 1 and its own E") {
  auto ctx = QContext::exact("1/3");
  gen::for_cases(3, 20, [&](gen::Gen& g) {
    Params2 p = gen::params2(g);
    CHECK(make_variant_deg2(ctx, p) == make_qheun(ctx, p, 1, variant_deg2_E(ctx, p)));
  });
}

TEST_CASE("reflection is an involution") {
  auto ctx = QContext::exact("1/2");
  gen::for_cases(7, 20, [&](gen::Gen& g) {
    auto e2 = make_variant_deg2(ctx, gen::params2(g));
    CHECK(e2.reflect().reflect() == e2);
    auto e3 = make_variant_deg3(ctx, gen::params3(g));
    CHECK(e3.reflect().reflect() == e3);
  });
}

TEST_CASE("apply agrees with the gauge-transformed operator") {
  auto ctx = QContext::exact("1/2");
  gen::Gen g(9);
  Params2 p = gen::params2(g);
  auto eq = make_variant_deg2(ctx, p);
  HalfInt mu = HalfInt(2);
  auto eg = gauge_power(eq, mu);
  // g = x^2 h with h = 1 + x
  ScalarFn h = [&](const Scalar& x) { return ctx.one() + x; };
  ScalarFn gfun = [&](const Scalar& x) { return x * x * (ctx.one() + x); };
  Scalar x(3, 5);
  CHECK(apply(eq, gfun, x) == x * x * apply(eg, h, x));
  CHECK_THROWS_AS(apply(eq, h, ctx.zero()), DomainError);
}

TEST_CASE("degree-three variant: gauge by alpha is alpha-free up to normalization") {
  auto ctx = QContext::exact("1/2");
  gen::for_cases(13, 10, [&](gen::Gen& g) {
    Params3 p = gen::params3(g), p0 = p;
    p0.alpha = 0;
    CHECK(gauge_power(make_variant_deg3(ctx, p), -p.alpha).normalized() == make_variant_deg3(ctx, p0).normalized());
  });
}

TEST_CASE("parameter validation") {
  auto ctx = QContext::exact("1/2");
  Params2 p = golden_params();
  p.t[1] = Scalar(0L);
  CHECK_THROWS_AS(make_variant_deg2(ctx, p), DomainError);
  p = golden_params();
  p.alpha2 = HalfInt::half;  // lambda not a half-integer
  CHECK_THROWS_AS(make_variant_deg2(ctx, p), DomainError);
  Params2 s = golden_params().index_swapped();
  CHECK(s.h[0] == HalfInt(0));
  CHECK(s.t[0] == Scalar(2L));
  CHECK(golden_params().lambda() == HalfInt::half);
}
