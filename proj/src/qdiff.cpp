#include "qvariant/qdiff.hpp"

#include <algorithm>

#include "qvariant/errors.hpp"

namespace qvariant {

HalfInt Params2::lambda() const { return HalfInt::halve(h[0] + h[1] - l[0] - l[1] - alpha1 - alpha2 + 1); }

static void check_t(const QContext& ctx, const Scalar& t, const char* name) {
  if (t.mode() != ctx.mode()) throw DomainError(std::string(name) + " is not in the context's mode");
  if (t.is_zero()) throw DomainError(std::string(name) + " must be nonzero");
}

void Params2::validate(const QContext& ctx) const {
  check_t(ctx, t[0], "t1");
  check_t(ctx, t[1], "t2");
  (void)lambda();
}

Params2 Params2::index_swapped() const {
  Params2 r = *this;
  std::swap(r.h[0], r.h[1]);
  std::swap(r.l[0], r.l[1]);
  std::swap(r.t[0], r.t[1]);
  return r;
}

Params2 Params2::alpha_swapped() const {
  Params2 r = *this;
  std::swap(r.alpha1, r.alpha2);
  return r;
}

HalfInt Params3::nu() const { return HalfInt::halve(h[0] + h[1] + h[2] - l[0] - l[1] - l[2] + 1); }

void Params3::validate(const QContext& ctx) const {
  check_t(ctx, t[0], "t1");
  check_t(ctx, t[1], "t2");
  check_t(ctx, t[2], "t3");
  (void)nu();
}

Params3 Params3::permuted(const std::array<int, 3>& perm) const {
  Params3 r = *this;
  for (int k = 0; k < 3; ++k) {
    r.h[k] = h[perm[k]];
    r.l[k] = l[perm[k]];
    r.t[k] = t[perm[k]];
  }
  return r;
}

int QDifferenceEquation::degree() const { return std::max({u.degree(), v.degree(), w.degree()}); }

static Poly reversed(const Poly& a, int d, const Scalar& like) {
  std::vector<Scalar> r;
  for (int k = 0; k <= d; ++k) r.push_back(a.coeff(d - k, like));
  return Poly(std::move(r));
}

QDifferenceEquation QDifferenceEquation::reflect() const {
  // g(x/q) becomes G(qy) and vice versa, so u and w trade places.
  int d = degree();
  Scalar z = ctx.zero();
  return {ctx, reversed(w, d, z), reversed(v, d, z), reversed(u, d, z)};
}

QDifferenceEquation QDifferenceEquation::normalized() const {
  if (u.is_zero()) throw DomainError("cannot normalize: u is zero");
  Scalar s = u.lead().inverse();
  return {ctx, u * s, v * s, w * s};
}

QDifferenceEquation make_qhypergeometric(const QContext& ctx, const Scalar& a0, const Scalar& b0,
                                         const Scalar& c0) {
  Scalar a = ctx.lift(a0), b = ctx.lift(b0), c = ctx.lift(c0);
  if (a.is_zero() || b.is_zero() || c.is_zero()) throw DomainError("q-hypergeometric parameters must be nonzero");
  const Scalar& q = ctx.q();
  return {ctx, Poly({-q, ctx.one()}), Poly({q + c, -(a + b)}), Poly({-c, a * b})};
}

namespace {

HalfInt deg2_weight(const Params2& p2) { return p2.h[0] + p2.h[1] + p2.l[0] + p2.l[1] + p2.alpha1 + p2.alpha2; }

Poly quad_roots(const Scalar& r1, const Scalar& r2) { return Poly::linear_root(r1) * Poly::linear_root(r2); }

}  // namespace

Scalar variant_deg2_E(const QContext& ctx, const Params2& p2) {
  Scalar pp = qpow_half(ctx, deg2_weight(p2));
  return -pp * ((qpow(ctx, -p2.h[1]) + qpow(ctx, -p2.l[1])) * p2.t[0] +
                (qpow(ctx, -p2.h[0]) + qpow(ctx, -p2.l[0])) * p2.t[1]);
}

QDifferenceEquation make_qheun(const QContext& ctx, const Params2& p2, HalfInt beta, const Scalar& E) {
  p2.validate(ctx);
  const HalfInt half = HalfInt::half;
  Poly u = quad_roots(qpow(ctx, p2.h[0] + half) * p2.t[0], qpow(ctx, p2.h[1] + half) * p2.t[1]);
  Poly w = quad_roots(qpow(ctx, p2.l[0] - half) * p2.t[0], qpow(ctx, p2.l[1] - half) * p2.t[1]) *
           qpow(ctx, p2.alpha1 + p2.alpha2);
  Scalar c0 = qpow_half(ctx, deg2_weight(p2)) * (qpow_half(ctx, beta) + qpow_half(ctx, -beta)) * p2.t[0] * p2.t[1];
  Poly v({-c0, -ctx.lift(E), -(qpow(ctx, p2.alpha1) + qpow(ctx, p2.alpha2))});
  return {ctx, u, v, w};
}

QDifferenceEquation make_variant_deg2(const QContext& ctx, const Params2& p2) {
  p2.validate(ctx);
  return make_qheun(ctx, p2, HalfInt(1), variant_deg2_E(ctx, p2));
}

QDifferenceEquation make_variant_deg3(const QContext& ctx, const Params3& p3) {
  p3.validate(ctx);
  const HalfInt half = HalfInt::half;
  const Scalar& q = ctx.q();
  const auto& t = p3.t;
  Poly u = Poly::constant(ctx.one()), w = Poly::constant(ctx.one());
  for (int i = 0; i < 3; ++i) {
    u = u * Poly::linear_root(qpow(ctx, p3.h[i] + half) * t[i]);
    w = w * Poly::linear_root(qpow(ctx, p3.l[i] - half) * t[i]);
  }
  w = w * qpow(ctx, p3.alpha * 2 + 1);

  HalfInt S = p3.h[0] + p3.h[1] + p3.h[2] + p3.l[0] + p3.l[1] + p3.l[2];
  auto inv = [&](int i) { return qpow(ctx, -p3.h[i]) + qpow(ctx, -p3.l[i]); };
  auto fwd = [&](int i) { return (qpow(ctx, p3.h[i]) + qpow(ctx, p3.l[i])) * t[i]; };
  Scalar q1 = q + ctx.one();
  Scalar c0 = qpow_half(ctx, S) * q1 * t[0] * t[1] * t[2];
  Scalar c1 = -qpow_half(ctx, S + 1) * (inv(0) * t[1] * t[2] + inv(1) * t[0] * t[2] + inv(2) * t[0] * t[1]);
  Scalar c2 = ctx.p() * (fwd(0) + fwd(1) + fwd(2));
  Scalar c3 = -q1;
  Poly v = Poly({c0, c1, c2, c3}) * qpow(ctx, p3.alpha);
  return {ctx, u, v, w};
}

Scalar apply(const QDifferenceEquation& eq, const ScalarFn& f, const Scalar& x) {
  if (x.is_zero()) throw DomainError("apply: x = 0 is excluded");
  const Scalar& q = eq.ctx.q();
  return eq.u(x) * f(x / q) + eq.v(x) * f(x) + eq.w(x) * f(q * x);
}

QDifferenceEquation gauge_power(const QDifferenceEquation& eq, HalfInt mu) {
  // g(x/q) = q^{-mu} x^mu h(x/q), g(qx) = q^mu x^mu h(qx); the common x^mu drops.
  return {eq.ctx, eq.u * qpow(eq.ctx, -mu), eq.v, eq.w * qpow(eq.ctx, mu)};
}

}  // namespace qvariant
