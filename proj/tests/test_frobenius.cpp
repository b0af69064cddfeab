#include <doctest.h>

#include <algorithm>
#include <complex>

#include "gen.hpp"
#include "qvariant/closedform.hpp"
#include "qvariant/errors.hpp"
#include "qvariant/frobenius.hpp"

using namespace qvariant;

namespace {
void check_pair(const ExponentPair& e, HalfInt a, HalfInt b) {
  REQUIRE(e.exponents.has_value());
  HalfInt lo = a < b ? a : b, hi = a < b ? b : a;
  CHECK((*e.exponents)[0] == lo);
  CHECK((*e.exponents)[1] == hi);
}

bool interior_zero(const std::vector<Scalar>& r, int N) {
  for (int n = 0; n <= N; ++n)
    if (!r[n].is_zero()) return false;
  return true;
}
}  // namespace

TEST_CASE("degree-two exponents at 0 and infinity") {
  auto ctx = QContext::exact("1/2");
  int n = gen::for_cases(11, 60, [&](gen::Gen& g) {
    Params2 p = gen::params2(g);
    auto eq = make_variant_deg2(ctx, p);
    HalfInt lam = p.lambda();
    check_pair(char_exponents_zero(eq), lam, lam + 1);
    check_pair(char_exponents_infinity(eq), p.alpha1, p.alpha2);
  });
  CHECK(n == 60);
}

TEST_CASE("degree-three exponents at 0 and infinity") {
  auto ctx = QContext::exact("2/3");
  int n = gen::for_cases(12, 60, [&](gen::Gen& g) {
    Params3 p = gen::params3(g);
    auto eq = make_variant_deg3(ctx, p);
    HalfInt m = p.nu() - p.alpha;
    check_pair(char_exponents_zero(eq), m, m + 1);
    check_pair(char_exponents_infinity(eq), p.alpha, p.alpha + 1);
  });
  CHECK(n == 60);
}

TEST_CASE("designed singularities are apparent") {
  auto ctx = QContext::exact("1/2");
  gen::for_cases(13, 40, [&](gen::Gen& g) {
    Params2 p2 = gen::params2(g);
    auto a2 = apparency_check(make_variant_deg2(ctx, p2), p2.lambda(), 1);
    CHECK(a2.apparent);
    CHECK(a2.obstruction.is_zero());

    Params3 p3 = gen::params3(g);
    auto e3 = make_variant_deg3(ctx, p3);
    auto z = apparency_check(e3, p3.nu() - p3.alpha, 1);
    CHECK(z.apparent);
    CHECK(z.obstruction.is_zero());
    auto inf = apparency_check_infinity(e3, p3.alpha, 1);
    CHECK(inf.apparent);
    CHECK(inf.obstruction.is_zero());
  });
}

TEST_CASE("perturbing the accessory parameter breaks apparency") {
  auto ctx = QContext::exact("1/2");
  gen::for_cases(14, 30, [&](gen::Gen& g) {
    Params2 p = gen::params2(g);
    Scalar E = variant_deg2_E(ctx, p) + ctx.one();
    auto eq = make_qheun(ctx, p, 1, E);
    auto a = apparency_check(eq, p.lambda(), 1);
    CHECK_FALSE(a.apparent);
    CHECK_FALSE(a.obstruction.is_zero());
    CHECK_THROWS_AS(local_series_zero(eq, p.lambda(), 4), ResonanceError);
    // still a DegenerateError for callers that resample
    CHECK_THROWS_AS(local_series_zero(eq, p.lambda(), 4), DegenerateError);
  });
}

TEST_CASE("local series solve the equation through the truncation order") {
  auto ctx = QContext::exact("1/3");
  const int N = 10;
  gen::for_cases(15, 20, [&](gen::Gen& g) {
    Params2 p = gen::params2(g);
    auto eq = make_variant_deg2(ctx, p);
    for (HalfInt e : {p.lambda(), p.lambda() + 1}) {
      auto s = local_series_zero(eq, e, N);
      CHECK(s.coeffs[0] == ctx.one());
      CHECK(interior_zero(series_residual(eq, s), N));
    }
    auto low = local_series_zero(eq, p.lambda(), N);
    CHECK(low.coeffs[1].is_zero());  // resonant slot on the canonical branch

    auto s1 = local_series_infinity(eq, p.alpha1, N);
    CHECK(s1.anchor == Anchor::infinity);
    CHECK(interior_zero(series_residual(eq, s1), N));
  });
}

TEST_CASE("residual is supported past the truncation order") {
  auto ctx = QContext::exact("1/2");
  gen::for_cases(16, 10, [&](gen::Gen& g) {
    Params3 p = gen::params3(g);
    auto eq = make_variant_deg3(ctx, p);
    auto s = local_series_zero(eq, p.nu() - p.alpha + 1, 6);
    auto r = series_residual(eq, s);
    CHECK(r.size() == 6 + 3 + 1);
    CHECK(interior_zero(r, 6));
  });
}

TEST_CASE("q-hypergeometric series at 0 is 2phi1") {
  auto ctx = QContext::exact("1/2");
  gen::Gen g(17);
  for (int k = 0; k < 15; ++k) {
    Scalar a = g.rational(), b = g.rational(), c = g.rational();
    if (c == ctx.q() || c == ctx.one()) continue;
    auto eq = make_qhypergeometric(ctx, a, b, c);
    auto s = local_series_zero_root(eq, ctx.one(), 8);
    auto ref = phi21_coeffs(ctx, a, b, c, 8);
    for (int n = 0; n <= 8; ++n) CHECK(s.coeffs[n] == ref[n]);
  }
}

TEST_CASE("exponent discrete log") {
  auto ctx = QContext::exact("-2/5");
  CHECK(exponent_of(ctx, qpow(ctx, HalfInt::from_twice(7))) == HalfInt::from_twice(7));
  CHECK(exponent_of(ctx, qpow(ctx, HalfInt::from_twice(-4))) == HalfInt(-2));
  CHECK_FALSE(exponent_of(ctx, Scalar(3, 7)).has_value());
}

TEST_CASE("anchor validation") {
  auto ctx = QContext::exact("1/2");
  auto eq = make_qhypergeometric(ctx, Scalar(1, 3), Scalar(1, 5), Scalar(1, 7));
  CHECK_THROWS_AS(local_series_zero_root(eq, Scalar(3L), 4), DomainError);
  CHECK_THROWS_AS(local_series_zero_root(eq, ctx.one(), -1), DomainError);
  CHECK_THROWS_AS(apparency_check(eq, 0, 0), DomainError);
}

TEST_CASE("float mode tracks exact mode") {
  auto ex = QContext::exact("1/2");
  auto fl = QContext::floating("0.5");
  gen::for_cases(18, 10, [&](gen::Gen& g) {
    Params2 p = gen::params2(g);
    Params2 pf = p;
    for (auto& t : pf.t) t = fl.lift(t);
    auto se = local_series_zero(make_variant_deg2(ex, p), p.lambda() + 1, 8);
    auto sf = local_series_zero(make_variant_deg2(fl, pf), p.lambda() + 1, 8);
    for (int n = 0; n <= 8; ++n) {
      auto ref = se.coeffs[n].complex();
      CHECK(std::abs(sf.coeffs[n].complex() - ref) <= 1e-9 * std::max(1.0, std::abs(ref)));
    }
  });
}
