#include <doctest.h>

#include <algorithm>

#include "gen.hpp"
#include "qvariant/closedform.hpp"
#include "qvariant/errors.hpp"

using namespace qvariant;

namespace {
bool within(const std::vector<int>& s, int lo, int hi) {
  return std::all_of(s.begin(), s.end(), [&](int n) { return n >= lo && n <= hi; });
}

const std::array<Permutation, 6> kPerms = {
    Permutation{0, 1, 2}, Permutation{0, 2, 1}, Permutation{1, 0, 2},
    Permutation{1, 2, 0}, Permutation{2, 0, 1}, Permutation{2, 1, 0}};
}  // namespace

TEST_CASE("Hahn series solves the q-hypergeometric equation") {
  auto ctx = QContext::exact("1/2");
  gen::Gen g(21);
  for (int k = 0; k < 12; ++k) {
    Scalar a = g.rational(), b = g.rational(), c = g.rational();
    auto eq = make_qhypergeometric(ctx, a, b, c);
    try {
      auto rep = verify_pochhammer_solution(eq, hahn_series(ctx, a, b, c, 10));
      CHECK(rep.passed);
      CHECK(rep.max_interior_residual.is_zero());
      CHECK(within(rep.support, 10, 11));
    } catch (const DegenerateError&) {
    }
  }
}

TEST_CASE("2phi1 partial sums agree with evaluation") {
  auto ctx = QContext::exact("1/3");
  Scalar a(1, 2), b(-2, 3), c(5, 7), x(1, 4);
  auto cs = phi21_coeffs(ctx, a, b, c, 6);
  Scalar acc = ctx.zero(), xn = ctx.one();
  for (auto& cn : cs) {
    acc += cn * xn;
    xn *= x;
  }
  CHECK(acc == phi21(ctx, a, b, c, x, 6));
  CHECK(cs[1] == (ctx.one() - a) * (ctx.one() - b) / ((ctx.one() - c) * (ctx.one() - ctx.q())));
}

TEST_CASE("g1 equals the Frobenius series at infinity") {
  auto ctx = QContext::exact("1/2");
  gen::for_cases(22, 20, [&](gen::Gen& g) {
    Params2 p = gen::params2(g);
    auto eq = make_variant_deg2(ctx, p);
    auto g1 = g1_series(ctx, p, 15);
    auto ref = local_series_infinity(eq, p.alpha1, 15);
    REQUIRE(g1.coeffs.size() == ref.coeffs.size());
    for (std::size_t n = 0; n < ref.coeffs.size(); ++n) CHECK(g1.coeffs[n] == ref.coeffs[n]);
  });
}

TEST_CASE("g2 and g3 have residual only at the boundary") {
  const int N = 12;
  for (const char* p : {"1/2", "3"}) {
    auto ctx = QContext::exact(p);
    gen::for_cases(23, 8, [&](gen::Gen& g) {
      Params2 p2 = gen::params2(g);
      auto eq = make_variant_deg2(ctx, p2);
      for (int i : {1, 2}) {
        auto r2 = verify_pochhammer_solution(eq, g2_series(ctx, p2, i, N));
        CHECK(r2.passed);
        CHECK(within(r2.support, N, N + 2));
        auto r3 = verify_pochhammer_solution(eq, g3_series(ctx, p2, i, N));
        CHECK(r3.passed);
        CHECK(within(r3.support, N, N + 2));
      }
    });
  }
}

TEST_CASE("g2 and g3 recurrences hold") {
  auto ctx = QContext::exact("1/2");
  gen::for_cases(24, 6, [&](gen::Gen& g) {
    Params2 p = gen::params2(g);
    g3_series(ctx, p, 1, 8);  // throws on degenerate draws
    g3_series(ctx, p, 2, 8);
    for (int i : {1, 2}) {
      for (int n = 0; n <= 15; ++n) CHECK(recurrence_residual_thm2(ctx, p, i, n).is_zero());
      for (int n = 0; n <= 8; ++n)
        for (int k = 0; k <= n; ++k) CHECK(recurrence_residual_thm3(ctx, p, i, n, k).is_zero());
    }
  });
}

TEST_CASE("conjectured degree-three solutions: interior residual vanishes") {
  auto ctx = QContext::exact("1/2");
  const int N = 8;
  int done = gen::for_cases(25, 6, [&](gen::Gen& g) {
    Params3 p = gen::params3(g);
    for (auto fam : {ConjFamily::I, ConjFamily::II})
      for (const auto& perm : kPerms) {
        auto rep = verify_conjecture(ctx, p, fam, perm, N);
        CHECK(rep.passed);
        CHECK(within(rep.support, N, N + 3));
      }
  });
  CHECK(done == 6);
}

TEST_CASE("wrong solution is detected") {
  auto ctx = QContext::exact("1/2");
  gen::for_cases(26, 5, [&](gen::Gen& g) {
    Params2 p = gen::params2(g);
    auto s = g2_series(ctx, p, 1, 8);
    s.coeffs[3] += ctx.one();
    auto rep = verify_pochhammer_solution(make_variant_deg2(ctx, p), s);
    CHECK_FALSE(rep.passed);
    CHECK_FALSE(rep.max_interior_residual.is_zero());
  });
}

TEST_CASE("basis re-expansion agrees with evaluation") {
  auto ctx = QContext::exact("2/3");
  gen::for_cases(27, 10, [&](gen::Gen& g) {
    Params2 p = gen::params2(g);
    auto s = g2_series(ctx, p, 1, 6);
    auto pw = pochhammer_to_power(ctx, s, 6);
    Scalar x = g.rational(), acc = ctx.zero(), xn = ctx.one();
    for (auto& c : pw.coeffs) {
      acc += c * xn;
      xn *= x;
    }
    CHECK(acc == evaluate_basis_sum(ctx, s, x));
  });
}

TEST_CASE("float mode g2 passes with tolerance") {
  auto fl = QContext::floating("0.5");
  gen::for_cases(28, 5, [&](gen::Gen& g) {
    Params2 p = gen::params2(g);
    for (auto& t : p.t) t = fl.lift(t);
    auto rep = verify_pochhammer_solution(make_variant_deg2(fl, p), g2_series(fl, p, 2, 10), 1e-9);
    CHECK(rep.passed);
  });
}

TEST_CASE("argument validation") {
  auto ctx = QContext::exact("1/2");
  gen::Gen g(29);
  Params2 p2 = gen::params2(g);
  CHECK_THROWS_AS(g2_series(ctx, p2, 3, 4), DomainError);
  Params3 p3 = gen::params3(g);
  CHECK_THROWS_AS(verify_conjecture(ctx, p3, ConjFamily::I, {0, 0, 1}, 8), DomainError);
  CHECK_THROWS_AS(verify_conjecture(ctx, p3, ConjFamily::I, {0, 1, 2}, 3), DomainError);
}
