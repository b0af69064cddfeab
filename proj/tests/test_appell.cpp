#include <doctest.h>

#include "gen.hpp"
#include "qvariant/appell.hpp"
#include "qvariant/closedform.hpp"

using namespace qvariant;

namespace {
AppellParams draw(gen::Gen& g) { return {g.rational(), g.rational(), g.rational(), g.rational(9)}; }

// No terminating numerator and no vanishing (c;q)_k on the grid.
bool generic(const QContext& ctx, const AppellParams& a, int M) {
  for (const Scalar& s : {a.a, a.b, a.bp, a.c})
    if (qpoch(ctx, s, M + 2).is_zero()) return false;
  return true;
}
}  // namespace

TEST_CASE("coefficient grid matches the product formula") {
  auto ctx = QContext::exact("1/2");
  gen::Gen g(31);
  for (int k = 0; k < 10; ++k) {
    AppellParams a = draw(g);
    if (!generic(ctx, a, 6)) continue;
    auto F = appell_coeffs(ctx, a, 6);
    for (int m = 0; m <= 6; ++m)
      for (int n = 0; m + n <= 6; ++n) {
        Scalar ref = qpoch(ctx, a.a, m + n) * qpoch(ctx, a.b, m) * qpoch(ctx, a.bp, n) /
                     (qpoch(ctx, a.c, m + n) * qpoch(ctx, ctx.q(), m) * qpoch(ctx, ctx.q(), n));
        CHECK(F[m][n] == ref);
      }
    // y = 0 reduces to 2phi1
    auto ref = phi21_coeffs(ctx, a.a, a.b, a.c, 6);
    for (int m = 0; m <= 6; ++m) CHECK(F[m][0] == ref[m]);
  }
}

TEST_CASE("bivariate polynomial algebra evaluates consistently") {
  auto ctx = QContext::exact("1/3");
  gen::Gen g(32);
  for (int k = 0; k < 10; ++k) {
    auto P = BivariatePoly::affine(g.rational(), g.rational(), g.rational());
    auto Q = BivariatePoly::affine(g.rational(), g.rational(), g.rational()) * BivariatePoly::x(ctx.one());
    Scalar x = g.rational(), y = g.rational(), s = g.rational(), t = g.rational();
    CHECK((P * Q)(x, y) == P(x, y) * Q(x, y));
    CHECK((P - Q)(x, y) == P(x, y) - Q(x, y));
    CHECK(P.scaled(s, t)(x, y) == P(s * x, t * y));
    CHECK((P - P).is_zero());
  }
}

TEST_CASE("contiguous relations vanish slot by slot") {
  auto ctx = QContext::exact("1/2");
  gen::Gen g(33);
  const int M = 10;
  int done = 0;
  for (int k = 0; k < 20 && done < 8; ++k) {
    AppellParams a = draw(g);
    if (!generic(ctx, a, M)) continue;
    ++done;
    auto F = appell_coeffs(ctx, a, M);
    for (int m = 0; m <= 5; ++m)
      for (int n = 0; m + n <= 5; ++n) {
        auto [r1, r2] = contiguous_residuals(ctx, a, m, n);
        CHECK(r1.is_zero());
        CHECK(r2.is_zero());
      }
    Scalar x(1, 3), y(1, 5);
    for (const auto& op : {contiguous_x_operator(ctx, a), contiguous_y_operator(ctx, a),
                           contiguous_y_shifted_operator(ctx, a), third_order_operator(ctx, a)}) {
      auto rep = operator_residual(ctx, op, F, M, x, y);
      CHECK(rep.interior_zero);
      CHECK(rep.interior_max.is_zero());
      CHECK(rep.interior_slots == (M + 1) * (M + 2) / 2);
    }
  }
  CHECK(done == 8);
}

TEST_CASE("second-order relation when c = b b'") {
  auto ctx = QContext::exact("1/2");
  gen::Gen g(34);
  const int M = 10;
  for (int k = 0; k < 8; ++k) {
    Scalar a = g.rational(), b = g.rational(), bp = g.rational();
    AppellParams cbb{a, b, bp, b * bp};
    if (!generic(ctx, cbb, M)) continue;
    auto rep = second_order_cbb_residual(ctx, a, b, bp, Scalar(1, 3), Scalar(1, 5), M);
    CHECK(rep.interior_zero);

    auto L2 = second_order_operator(ctx, a, b, bp);
    CHECK(third_order_operator(ctx, cbb) == L2.shifted_both() * (cbb.c / (ctx.q() * ctx.q())) - L2);
    for (int m = 0; m <= 3; ++m)
      for (int n = 0; n <= 3; ++n) {
        CHECK(L2.monomial_action(m, n) == second_order_monomial_display(ctx, cbb, m, n));
        if (m >= 1 && n >= 1) CHECK(second_order_brace(ctx, cbb, m, n).is_zero());
      }

    AppellParams off{a, b, bp, b * bp + Scalar(1, 7)};
    if (!generic(ctx, off, M)) continue;
    auto bad = second_order_residual(ctx, off, Scalar(1, 3), Scalar(1, 5), M);
    CHECK(!bad.interior_zero);
  }
}

TEST_CASE("elimination identities") {
  auto ctx = QContext::exact("2/3");
  gen::Gen g(35);
  for (int k = 0; k < 5; ++k) {
    AppellParams a = draw(g);
    const Scalar& q = ctx.q();
    Scalar one = ctx.one(), zero = ctx.zero();
    auto A1 = contiguous_x_operator(ctx, a), A3 = contiguous_y_shifted_operator(ctx, a);
    auto E = A1.times(BivariatePoly::affine(zero, a.a, -a.c / q)) +
             A3.times(BivariatePoly::affine(a.a * a.b, zero, -a.c / q));
    auto F = (A1.times(BivariatePoly::affine(zero, one, -one)) + A3.times(BivariatePoly::affine(a.b, zero, -one))) *
             (-one);
    CHECK(eliminated_e_operator(ctx, a) == E);
    CHECK(eliminated_f_operator(ctx, a) == F);
    CHECK(third_order_operator(ctx, a) == F * q + E.shifted_both());
  }
}

TEST_CASE("restriction to the degree-two variant") {
  auto ctx = QContext::exact("1/2");
  gen::for_cases(36, 12, [&](gen::Gen& g) {
    Params2 p = gen::params2(g);
    auto mp = specialize_to_variant2(ctx, p);
    CHECK(mp.b * mp.bp == qpow(ctx, p.alpha1 - p.alpha2 + 1));
    auto var2 = make_variant_deg2(ctx, p).normalized();
    auto L2 = second_order_operator(ctx, mp.a, mp.b, mp.bp);
    CHECK(restrict_to_one_variable(ctx, L2, mp.d1, mp.d2, mp.d3) == var2);
    CHECK(restricted_operator_display(ctx, mp) == var2);
    auto ap = appell_variant2_coeffs(ctx, p, 10);
    auto g1 = g1_series(ctx, p, 10).coeffs;
    REQUIRE(ap.size() == g1.size());
    for (std::size_t n = 0; n < g1.size(); ++n) CHECK(ap[n] == g1[n]);
  });
}

TEST_CASE("pointwise residual is small in float mode") {
  auto fl = QContext::floating("0.5");
  AppellParams a{Scalar::floating(0.3), Scalar::floating(0.2), Scalar::floating(-0.4), Scalar::floating(0.7)};
  auto F = appell_coeffs(fl, a, 40);
  auto rep = operator_residual(fl, contiguous_x_operator(fl, a), F, 40, Scalar::floating(0.2), Scalar::floating(0.1));
  CHECK(rep.interior_max.magnitude() < 1e-12);
  CHECK(rep.pointwise.magnitude() < 1e-12);
}
