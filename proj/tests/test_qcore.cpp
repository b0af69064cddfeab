#include <doctest.h>

#include "gen.hpp"
#include "qvariant/errors.hpp"
#include "qvariant/qcore.hpp"

using namespace qvariant;

TEST_CASE("scalar parsing and printing") {
  CHECK(Scalar::parse("3/4", Mode::exact) == Scalar(3, 4));
  CHECK(Scalar::parse("-6/8", Mode::exact) == Scalar(-3, 4));
  CHECK(Scalar::parse("0.25", Mode::exact) == Scalar(1, 4));
  CHECK(Scalar::parse("1e-2", Mode::exact) == Scalar(1, 100));
  CHECK(Scalar::parse("3/4", Mode::floating).complex().real() == doctest::Approx(0.75));
  CHECK(Scalar(3, 4).str() == "3/4");
  CHECK(Scalar(2L).str() == "2");
  CHECK_THROWS_AS(Scalar::parse("1/0", Mode::exact), ArithmeticError);
  CHECK_THROWS_AS(Scalar::parse("abc", Mode::exact), DomainError);
}

TEST_CASE("mode mixing and exact zero division throw") {
  Scalar a(1, 2), b = Scalar::floating(0.5);
  CHECK_THROWS_AS(a + b, ArithmeticError);
  CHECK_THROWS_AS(a / Scalar(0L), ArithmeticError);
  CHECK_THROWS_AS(Scalar(0L).pow(-1), ArithmeticError);
  CHECK_THROWS_AS(b.rational(), ArithmeticError);
  CHECK(a.in_mode(Mode::floating) == b);
}

TEST_CASE("bit limit guards exact growth") {
  std::size_t old = bit_limit();
  set_bit_limit(64);
  CHECK_THROWS_AS(Scalar(3, 7).pow(200), ArithmeticError);
  set_bit_limit(old);
  CHECK_NOTHROW(Scalar(3, 7).pow(200));
}

TEST_CASE("half-integers") {
  CHECK(HalfInt::parse("3/2").twice() == 3);
  CHECK(HalfInt::parse("0.5") == HalfInt::half);
  CHECK(HalfInt::parse("-2").twice() == -4);
  CHECK(HalfInt::parse("-2.5").twice() == -5);
  CHECK_THROWS_AS(HalfInt::parse("1/3"), DomainError);
  CHECK(HalfInt::from_twice(3).str() == "3/2");
  CHECK(HalfInt(1).str() == "1");
  CHECK(HalfInt::halve(HalfInt(3)) == HalfInt::from_twice(3));
  CHECK_THROWS_AS(HalfInt::halve(HalfInt::half), DomainError);
  CHECK_THROWS_AS(HalfInt::half.as_integer(), DomainError);
}

TEST_CASE("context construction") {
  CHECK_THROWS_AS(QContext::exact("1"), DomainError);
  CHECK_THROWS_AS(QContext::exact("-1"), DomainError);
  CHECK_THROWS_AS(QContext::exact("0"), DomainError);
  auto ctx = QContext::exact("1/2");
  CHECK(ctx.q() == Scalar(1, 4));
  CHECK(qpow(ctx, HalfInt::from_twice(3)) == Scalar(1, 8));
  CHECK(qpow(ctx, HalfInt(-1)) == Scalar(4L));
  CHECK(qpow_half(ctx, HalfInt(3)) == Scalar(1, 8));
  CHECK_THROWS_AS(qpow_half(ctx, HalfInt::half), DomainError);
  auto f = QContext::floating("0.5");
  CHECK(qpow_half(f, HalfInt::half).magnitude() == doctest::Approx(std::sqrt(0.5)));
}

TEST_CASE("q-Pochhammer values") {
  auto ctx = QContext::exact("1/2");
  CHECK(qpoch(ctx, Scalar(2L), 0) == Scalar(1L));
  // (2;1/4)_2 = (1 - 2)(1 - 1/2)
  CHECK(qpoch(ctx, Scalar(2L), 2) == Scalar(-1, 2));
  // (q^{-1};q)_n vanishes from n = 2 on
  CHECK(qpoch(ctx, ctx.q().inverse(), 1) != ctx.zero());
  CHECK(qpoch(ctx, ctx.q().inverse(), 2) == ctx.zero());
  CHECK_THROWS_AS(qpoch(ctx, Scalar(2L), -1), DomainError);
  CHECK(qpoch_ratio_step(ctx, Scalar(2L), 1) == Scalar(1, 2));
}

TEST_CASE("property: (a;q)_{m+n} = (a;q)_m (a q^m;q)_n") {
  for (const char* p : {"1/2", "3", "-2/5"}) {
    auto ctx = QContext::exact(p);
    gen::Gen g(11);
    for (int k = 0; k < 40; ++k) {
      Scalar a = g.rational(9);
      int m = g.range(0, 6), n = g.range(0, 6);
      CHECK(qpoch(ctx, a, m + n) == qpoch(ctx, a, m) * qpoch(ctx, a * qpow_int(ctx, m), n));
    }
  }
}

TEST_CASE("property: qpow is a homomorphism on half-integers") {
  auto ctx = QContext::exact("2/3");
  gen::Gen g(5);
  for (int k = 0; k < 40; ++k) {
    HalfInt a = g.half(12), b = g.half(12);
    CHECK(qpow(ctx, a + b) == qpow(ctx, a) * qpow(ctx, b));
    CHECK(qpow(ctx, a) * qpow(ctx, -a) == ctx.one());
  }
}
