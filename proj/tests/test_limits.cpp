#include <doctest.h>

#include <cmath>

#include "gen.hpp"
#include "qvariant/frobenius.hpp"
#include "qvariant/limits.hpp"

using namespace qvariant;

namespace {
Params2 restricted(gen::Gen& g) {
  Params2 p = gen::params2(g);
  p.t[0] = Scalar(1L);
  p.h[0] = HalfInt::half;
  p.h[1] = p.l[1] + p.alpha1 + p.alpha2 + p.l[0] - HalfInt::from_twice(3);
  return p;
}

Params2 golden2() {
  Params2 p;
  p.h = {HalfInt(1), HalfInt(0)};
  p.l = {HalfInt(0), HalfInt(0)};
  p.alpha1 = 0;
  p.alpha2 = 1;
  p.t = {Scalar(1L), Scalar(2L)};
  return p;
}

Params3 fixed3() {
  Params3 p;
  p.h = {HalfInt::half, HalfInt(1), HalfInt(0)};
  p.l = {HalfInt(0), HalfInt::half, HalfInt(0)};
  p.alpha = HalfInt::half;
  p.t = {Scalar(1L), Scalar(-2L), Scalar(3L)};
  return p;
}

void check_scheme(const SchemeEntry& e, const char* point, HalfInt a, HalfInt b) {
  CHECK(e.point == point);
  CHECK(e.exponents[0] == a);
  CHECK(e.exponents[1] == b);
}
}  // namespace

TEST_CASE("t3 to infinity: operator limit is the degree-two variant") {
  auto ctx = QContext::exact("1/2");
  int done = gen::for_cases(41, 20, [&](gen::Gen& g) {
    Params3 p = gen::params3(g);
    auto lim = deg3_to_deg2_operator_limit(ctx, p);
    CHECK(lim.linear);
    CHECK(lim.matches);
    CHECK(lim.limit == lim.expected);
    // exponents commute with the degeneration
    Params2 d = degenerate_deg3_to_deg2(p);
    auto e = char_exponents_infinity(lim.limit);
    REQUIRE(e.exponents.has_value());
    HalfInt lo = std::min(d.alpha1, d.alpha2), hi = std::max(d.alpha1, d.alpha2);
    CHECK((*e.exponents)[0] == lo);
    CHECK((*e.exponents)[1] == hi);
  });
  CHECK(done == 20);
}

TEST_CASE("t3 to infinity: conjectural coefficients tend to the degree-two solutions") {
  auto ctx = QContext::exact("1/2");
  const std::vector<std::pair<ConjFamily, Permutation>> cases = {
      {ConjFamily::I, {0, 1, 2}},  {ConjFamily::I, {1, 0, 2}},  {ConjFamily::II, {0, 1, 2}},
      {ConjFamily::II, {1, 0, 2}}, {ConjFamily::II, {2, 0, 1}}, {ConjFamily::II, {2, 1, 0}}};
  gen::for_cases(42, 8, [&](gen::Gen& g) {
    Params3 p = gen::params3(g);
    for (const auto& [fam, perm] : cases) {
      auto c = conj_leading_terms(ctx, p, fam, perm, 6);
      CHECK(c.extracted.size() == 7);
      CHECK(c.matches_printed);
      CHECK(c.matches_closed_form);
    }
  });
}

TEST_CASE("t3 to infinity: float gaps decay like 1/t3") {
  auto fl = QContext::floating("0.5");
  Params3 p = fixed3();
  for (auto& t : p.t) t = fl.lift(t);
  auto op = deg3_operator_gap(fl, p, {2, 3, 4, 5});
  CHECK(op.slope == doctest::Approx(1.0).epsilon(0.1));
  auto co = limit_conj_coeffs(fl, p, ConjFamily::I, {0, 1, 2}, 5);
  CHECK(co.slope >= 0.9);
  CHECK(co.monotone);
  CHECK(co.csv().rfind("1/t3,gap", 0) == 0);
}

TEST_CASE("t2 to 0: first-degree equation and the q-hypergeometric identification") {
  auto ctx = QContext::exact("1/2");
  gen::for_cases(43, 15, [&](gen::Gen& g) {
    Params2 p = gen::params2(g);
    auto lim = degenerate_deg2_to_qhyp(ctx, p);
    CHECK(lim.matches_printed);
    CHECK(lim.limit.degree() == 1);
    if (!satisfies_restriction(ctx, p)) {
      CHECK_FALSE(lim.restriction_applies);
      CHECK_FALSE(lim.abc.has_value());
      CHECK_FALSE(lim.note.empty());
    }

    Params2 r = restricted(g);
    REQUIRE(satisfies_restriction(ctx, r));
    CHECK(r.lambda() == 0);
    auto lr = degenerate_deg2_to_qhyp(ctx, r);
    REQUIRE(lr.abc.has_value());
    CHECK((*lr.abc)[0] == qpow(ctx, r.alpha1));
    CHECK((*lr.abc)[1] == qpow(ctx, r.alpha2));
    CHECK((*lr.abc)[2] == qpow(ctx, r.alpha1 + r.alpha2 + r.l[0] - HalfInt::half));
    CHECK(lr.matches_qhyp.value_or(false));
    CHECK(lr.limit == make_qhypergeometric(ctx, (*lr.abc)[0], (*lr.abc)[1], (*lr.abc)[2]).normalized());
  });
}

TEST_CASE("t2 to 0: solution coefficients") {
  auto ctx = QContext::exact("1/2");
  gen::for_cases(44, 10, [&](gen::Gen& g) {
    Params2 p = gen::params2(g);
    Params2 r = restricted(g);
    for (auto w : {Deg2Solution::g1, Deg2Solution::g2_12, Deg2Solution::g2_21, Deg2Solution::g3_12}) {
      CAPTURE(deg2_solution_name(w));
      auto s = deg2_solution_limit(ctx, p, w, 8);
      CHECK(s.matches_printed);
      CHECK(s.solves_limit_equation);
      auto sr = deg2_solution_limit(ctx, r, w, 8);
      CHECK(sr.matches_printed);
      CHECK(sr.solves_limit_equation);
      if (w != Deg2Solution::g3_12) CHECK(sr.matches_qhyp.value_or(false));
    }
  });
}

TEST_CASE("continuum limit: Riemann schemes as tabulated") {
  gen::for_cases(45, 20, [&](gen::Gen& g) {
    Params2 p = gen::params2(g);
    if (p.t[0] == p.t[1]) throw DegenerateError("confluent");
    auto o = continuum_ode_deg2(p);
    REQUIRE(o.riemann_scheme.size() == 4);
    HalfInt lam = p.lambda();
    check_scheme(o.riemann_scheme[0], "0", lam, lam + 1);
    check_scheme(o.riemann_scheme[1], "t1", 0, p.l[0] - p.h[0]);
    check_scheme(o.riemann_scheme[2], "t2", 0, p.l[1] - p.h[1]);
    check_scheme(o.riemann_scheme[3], "inf", p.alpha1, p.alpha2);
    CHECK(o.fuchs_sum == HalfInt(2));
    CHECK(o.fuchs_expected == 2);
    CHECK(o.gauss.a == lam + p.alpha1);
    CHECK(o.gauss.b == lam + p.alpha2);
    CHECK(o.gauss.c == p.h[0] - p.l[0] + 1);

    Params3 p3 = gen::params3(g);
    if (p3.t[0] == p3.t[1] || p3.t[0] == p3.t[2] || p3.t[1] == p3.t[2]) throw DegenerateError("confluent");
    auto o3 = continuum_ode_deg3(p3);
    REQUIRE(o3.riemann_scheme.size() == 5);
    HalfInt m = p3.nu() - p3.alpha;
    check_scheme(o3.riemann_scheme[0], "0", m, m + 1);
    check_scheme(o3.riemann_scheme[1], "t1", 0, p3.l[0] - p3.h[0]);
    check_scheme(o3.riemann_scheme[2], "t2", 0, p3.l[1] - p3.h[1]);
    check_scheme(o3.riemann_scheme[3], "t3", 0, p3.l[2] - p3.h[2]);
    check_scheme(o3.riemann_scheme[4], "inf", p3.alpha, p3.alpha + 1);
    CHECK(o3.fuchs_sum == HalfInt(3));
    CHECK(o3.fuchs_expected == 3);
  });
}

TEST_CASE("continuum limit: Gauss reduction") {
  gen::for_cases(46, 15, [&](gen::Gen& g) {
    Params2 p = gen::params2(g);
    Params3 p3 = gen::params3(g);
    if (p.t[0] == p.t[1] || p3.t[0] == p3.t[1] || p3.t[0] == p3.t[2] || p3.t[1] == p3.t[2])
      throw DegenerateError("confluent");
    CHECK(gauss_reduction_defect_deg2(p) < 1e-9);
    CHECK(gauss_reduction_defect_deg3(p3) < 1e-9);
    // the displayed prefactor of B~ does not reduce to Gauss
    CHECK(gauss_reduction_defect_deg3(p3, true) > 1e-6);
  });
}

TEST_CASE("continuum limit: q-operator over eps^2 tends to the ODE at rate eps") {
  Poly f = default_test_polynomial();
  CHECK(f.degree() == 6);
  // eps = 0.1 is still pre-asymptotic for the golden instance (gap/eps 3246 -> 9288)
  const std::vector<double> eps = {1e-2, 1e-3, 1e-4};
  auto r2 = continuum_scaling_deg2(golden2(), f, eps);
  CHECK(r2.slope >= 0.9);
  CHECK(r2.monotone);
  auto r3 = continuum_scaling_deg3(fixed3(), f, {1e-1, 1e-2, 1e-3});
  CHECK(r3.slope >= 0.9);
  CHECK(r3.monotone);
  // with the displayed B~ the gap levels off instead of vanishing
  const std::vector<double> fine = {1e-3, 1e-4};
  auto good = continuum_scaling_deg3(fixed3(), f, fine);
  auto bad = continuum_scaling_deg3(fixed3(), f, fine, true);
  CHECK(good.gaps[1] / good.gaps[0] < 0.2);
  CHECK(bad.gaps[1] / bad.gaps[0] > 0.5);
}

TEST_CASE("continuum limit: gap/eps stays bounded on random draws") {
  Poly f = default_test_polynomial();
  gen::for_cases(47, 10, [&](gen::Gen& g) {
    Params2 p = gen::params2(g);
    if (p.t[0] == p.t[1]) throw DegenerateError("confluent");
    auto r = continuum_scaling_deg2(p, f, {1e-2, 1e-3, 1e-4});
    double a = r.gaps[1] / 1e-3, b = r.gaps[2] / 1e-4;
    CHECK(b <= 1.5 * a);
  });
}

TEST_CASE("confluent singular points are rejected") {
  Params2 p = golden2();
  p.t[1] = p.t[0];
  CHECK_THROWS_AS(continuum_ode_deg2(p), DomainError);
}

TEST_CASE("log-log slope fit") {
  CHECK(fit_loglog_slope({1, 10, 100}, {3, 30, 300}) == doctest::Approx(1.0));
  CHECK(fit_loglog_slope({1, 10, 100}, {5, 0.05, 0.0005}) == doctest::Approx(-2.0));
}
