#include "qvariant/appell.hpp"

#include <algorithm>

#include "qvariant/errors.hpp"

namespace qvariant {

CoeffGrid appell_coeffs(const QContext& ctx, const AppellParams& prm, int M) {
  if (M < 0) throw DomainError("truncation must be >= 0");
  auto table = [&](const Scalar& a) {
    std::vector<Scalar> t{ctx.one()};
    Scalar qk = ctx.one(), aa = ctx.lift(a);
    for (int k = 0; k < M; ++k) {
      t.push_back(t.back() * (ctx.one() - aa * qk));
      qk *= ctx.q();
    }
    return t;
  };
  auto A = table(prm.a), B = table(prm.b), Bp = table(prm.bp), C = table(prm.c), Qq = table(ctx.q());
  CoeffGrid F(static_cast<std::size_t>(M) + 1);
  for (int m = 0; m <= M; ++m)
    for (int n = 0; m + n <= M; ++n) {
      if (C[m + n].is_zero()) throw DegenerateError("Appell: (c;q)_{m+n} vanishes at m+n = " + std::to_string(m + n));
      F[m].push_back(A[m + n] * B[m] * Bp[n] / (C[m + n] * Qq[m] * Qq[n]));
    }
  return F;
}

Scalar phi1(const QContext& ctx, const AppellParams& prm, const Scalar& x1, const Scalar& x2, int M) {
  auto F = appell_coeffs(ctx, prm, M);
  Scalar s = ctx.zero(), X1 = ctx.lift(x1), X2 = ctx.lift(x2), xm = ctx.one();
  for (int m = 0; m <= M; ++m) {
    Scalar yn = ctx.one();
    for (int n = 0; m + n <= M; ++n) {
      s += F[m][n] * xm * yn;
      yn *= X2;
    }
    xm *= X1;
  }
  return s;
}

// ---- BivariatePoly

void BivariatePoly::add(Key k, const Scalar& c) {
  auto it = t_.find(k);
  if (it == t_.end()) {
    if (!c.is_zero()) t_.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

BivariatePoly BivariatePoly::constant(const Scalar& c) {
  BivariatePoly p;
  p.add({0, 0}, c);
  return p;
}

BivariatePoly BivariatePoly::x(const Scalar& like) {
  BivariatePoly p;
  p.add({1, 0}, like.one_like());
  return p;
}

BivariatePoly BivariatePoly::y(const Scalar& like) {
  BivariatePoly p;
  p.add({0, 1}, like.one_like());
  return p;
}

BivariatePoly BivariatePoly::affine(const Scalar& cx, const Scalar& cy, const Scalar& c0) {
  BivariatePoly p;
  p.add({1, 0}, cx);
  p.add({0, 1}, cy);
  p.add({0, 0}, c0);
  return p;
}

BivariatePoly BivariatePoly::operator+(const BivariatePoly& o) const {
  BivariatePoly r = *this;
  for (const auto& [k, c] : o.t_) r.add(k, c);
  return r;
}

BivariatePoly BivariatePoly::operator-(const BivariatePoly& o) const {
  BivariatePoly r = *this;
  for (const auto& [k, c] : o.t_) r.add(k, -c);
  return r;
}

BivariatePoly BivariatePoly::operator*(const BivariatePoly& o) const {
  BivariatePoly r;
  for (const auto& [k1, c1] : t_)
    for (const auto& [k2, c2] : o.t_) r.add({k1.first + k2.first, k1.second + k2.second}, c1 * c2);
  return r;
}

BivariatePoly BivariatePoly::operator*(const Scalar& s) const {
  BivariatePoly r;
  for (const auto& [k, c] : t_) r.add(k, c * s);
  return r;
}

bool BivariatePoly::operator==(const BivariatePoly& o) const {
  if (t_.size() != o.t_.size()) return false;
  for (const auto& [k, c] : t_) {
    auto it = o.t_.find(k);
    if (it == o.t_.end() || it->second != c) return false;
  }
  return true;
}

BivariatePoly BivariatePoly::scaled(const Scalar& sx, const Scalar& sy) const {
  BivariatePoly r;
  for (const auto& [k, c] : t_) r.add(k, c * sx.pow(k.first) * sy.pow(k.second));
  return r;
}

Scalar BivariatePoly::operator()(const Scalar& x, const Scalar& y) const {
  Scalar s = x.zero_like();
  for (const auto& [k, c] : t_) s += c * x.pow(k.first) * y.pow(k.second);
  return s;
}

// ---- BivariateOperator

BivariateOperator::BivariateOperator(const QContext& ctx, std::map<Shift, BivariatePoly> terms)
    : q_(ctx.q()), t_(std::move(terms)) {
  prune();
}

void BivariateOperator::prune() {
  for (auto it = t_.begin(); it != t_.end();) it = it->second.is_zero() ? t_.erase(it) : std::next(it);
}

BivariateOperator BivariateOperator::operator+(const BivariateOperator& o) const {
  BivariateOperator r = *this;
  for (const auto& [s, p] : o.t_) r.t_[s] = r.t_.count(s) ? r.t_[s] + p : p;
  r.prune();
  return r;
}

BivariateOperator BivariateOperator::operator*(const Scalar& s) const {
  BivariateOperator r = *this;
  for (auto& [k, p] : r.t_) p = p * s;
  r.prune();
  return r;
}

BivariateOperator BivariateOperator::operator-(const BivariateOperator& o) const { return *this + o * (-q_.one_like()); }

BivariateOperator BivariateOperator::times(const BivariatePoly& p) const {
  BivariateOperator r = *this;
  for (auto& [k, c] : r.t_) c = p * c;
  r.prune();
  return r;
}

BivariateOperator BivariateOperator::shifted_both() const {
  BivariateOperator r;
  r.q_ = q_;
  for (const auto& [s, p] : t_) r.t_[{s.first + 1, s.second + 1}] = p.scaled(q_, q_);
  return r;
}

BivariateOperator BivariateOperator::shifted_x() const {
  BivariateOperator r;
  r.q_ = q_;
  for (const auto& [s, p] : t_) r.t_[{s.first + 1, s.second}] = p.scaled(q_, q_.one_like());
  return r;
}

bool BivariateOperator::operator==(const BivariateOperator& o) const {
  if (t_.size() != o.t_.size()) return false;
  for (const auto& [s, p] : t_) {
    auto it = o.t_.find(s);
    if (it == o.t_.end() || !(it->second == p)) return false;
  }
  return true;
}

Scalar BivariateOperator::slot(const CoeffGrid& F, int m, int n) const {
  Scalar acc = q_.zero_like();
  for (const auto& [s, p] : t_)
    for (const auto& [k, c] : p.terms()) {
      int mm = m - k.first, nn = n - k.second;
      if (mm < 0 || nn < 0) continue;
      if (mm >= static_cast<int>(F.size()) || nn >= static_cast<int>(F[mm].size())) continue;  // beyond truncation
      acc += c * q_.pow(static_cast<long>(s.first) * mm + static_cast<long>(s.second) * nn) * F[mm][nn];
    }
  return acc;
}

BivariatePoly BivariateOperator::monomial_action(int m, int n) const {
  BivariatePoly r;
  for (const auto& [s, p] : t_) {
    Scalar f = q_.pow(static_cast<long>(s.first) * m + static_cast<long>(s.second) * n);
    BivariatePoly mono;
    mono = BivariatePoly::constant(f);
    for (int i = 0; i < m; ++i) mono = mono * BivariatePoly::x(q_);
    for (int j = 0; j < n; ++j) mono = mono * BivariatePoly::y(q_);
    r = r + p * mono;
  }
  return r;
}

int BivariateOperator::coefficient_degree() const {
  int d = 0;
  for (const auto& [s, p] : t_)
    for (const auto& [k, c] : p.terms()) d = std::max(d, k.first + k.second);
  return d;
}

// ---- contiguous relations and their elimination

namespace {

struct Sym {
  const QContext& ctx;
  Scalar a, b, bp, c, q, cq, one, zero;
  Sym(const QContext& cx, const AppellParams& p)
      : ctx(cx),
        a(cx.lift(p.a)),
        b(cx.lift(p.b)),
        bp(cx.lift(p.bp)),
        c(cx.lift(p.c)),
        q(cx.q()),
        cq(c / q),
        one(cx.one()),
        zero(cx.zero()) {}
  BivariatePoly X(const Scalar& k, const Scalar& k0) const { return BivariatePoly::affine(k, zero, k0); }
  BivariatePoly Y(const Scalar& k, const Scalar& k0) const { return BivariatePoly::affine(zero, k, k0); }
  BivariatePoly K(const Scalar& k) const { return BivariatePoly::constant(k); }
};

}  // namespace

BivariateOperator contiguous_x_operator(const QContext& ctx, const AppellParams& prm) {
  Sym s(ctx, prm);
  return BivariateOperator(ctx, {{{2, 1}, s.X(s.a * s.b, -s.cq)},
                                 {{1, 0}, s.X(-s.b, s.one)},
                                 {{1, 1}, s.X(-s.a, s.cq)},
                                 {{0, 0}, s.X(s.one, -s.one)}});
}

BivariateOperator contiguous_y_operator(const QContext& ctx, const AppellParams& prm) {
  Sym s(ctx, prm);
  return BivariateOperator(ctx, {{{1, 2}, s.Y(s.a * s.bp, -s.cq)},
                                 {{0, 1}, s.Y(-s.bp, s.one)},
                                 {{1, 1}, s.Y(-s.a, s.cq)},
                                 {{0, 0}, s.Y(s.one, -s.one)}});
}

BivariateOperator contiguous_y_shifted_operator(const QContext& ctx, const AppellParams& prm) {
  Sym s(ctx, prm);
  return BivariateOperator(ctx, {{{2, 2}, s.Y(s.a * s.bp, -s.cq)},
                                 {{1, 1}, s.Y(-s.bp, s.one)},
                                 {{2, 1}, s.Y(-s.a, s.cq)},
                                 {{1, 0}, s.Y(s.one, -s.one)}});
}

BivariateOperator eliminated_e_operator(const QContext& ctx, const AppellParams& prm) {
  Sym s(ctx, prm);
  BivariatePoly ay = s.Y(s.a, -s.cq), ax = s.X(s.a, -s.cq), abx = s.X(s.a * s.b, -s.cq);
  BivariatePoly bpy1 = s.Y(s.bp, -s.one), abpy = s.Y(s.a * s.bp, -s.cq);
  BivariatePoly bx_y = BivariatePoly::affine(s.b, -s.one, s.zero);
  return BivariateOperator(ctx, {{{1, 0}, bx_y * (-(s.a - s.cq))},
                                 {{0, 0}, ay * s.X(s.one, -s.one)},
                                 {{1, 1}, (ay * ax + abx * bpy1) * (-s.one)},
                                 {{2, 2}, abx * abpy}});
}

BivariateOperator eliminated_f_operator(const QContext& ctx, const AppellParams& prm) {
  Sym s(ctx, prm);
  BivariatePoly ax = s.X(s.a, -s.cq), bx1 = s.X(s.b, -s.one), y1 = s.Y(s.one, -s.one), x1 = s.X(s.one, -s.one);
  BivariatePoly bpy1 = s.Y(s.bp, -s.one), abpy = s.Y(s.a * s.bp, -s.cq);
  BivariatePoly bx_y = BivariatePoly::affine(s.b, -s.one, s.zero);
  return BivariateOperator(ctx, {{{2, 1}, bx_y * (s.a - s.cq)},
                                 {{2, 2}, bx1 * abpy * (-s.one)},
                                 {{1, 1}, y1 * ax + bpy1 * bx1},
                                 {{0, 0}, x1 * y1 * (-s.one)}});
}

BivariateOperator third_order_operator(const QContext& ctx, const AppellParams& prm) {
  Sym s(ctx, prm);
  const Scalar& q = s.q;
  BivariatePoly abqx = s.X(s.a * s.b * q, -s.cq), abpqy = s.Y(s.a * s.bp * q, -s.cq);
  BivariatePoly aqx = s.X(s.a * q, -s.cq), aqy = s.Y(s.a * q, -s.cq), bpqy = s.Y(s.bp * q, -s.one);
  BivariatePoly bx1 = s.X(s.b, -s.one), abpqy_c = s.Y(s.a * s.bp * q, -s.c);
  BivariatePoly qx1 = s.X(q, -s.one), aqx_c = s.X(s.a * q, -s.c), y1 = s.Y(s.one, -s.one), x1 = s.X(s.one, -s.one);
  BivariatePoly bpy1 = s.Y(s.bp, -s.one);
  return BivariateOperator(ctx, {{{3, 3}, abqx * abpqy},
                                 {{2, 2}, (aqx * aqy + abqx * bpqy + bx1 * abpqy_c) * (-s.one)},
                                 {{1, 1}, qx1 * aqy + aqx_c * y1 + bx1 * bpy1 * q},
                                 {{0, 0}, x1 * y1 * (-q)}});
}

BivariateOperator second_order_operator(const QContext& ctx, const Scalar& a0, const Scalar& b0, const Scalar& bp0) {
  Scalar a = ctx.lift(a0), b = ctx.lift(b0), bp = ctx.lift(bp0), q = ctx.q(), one = ctx.one(), z = ctx.zero();
  BivariatePoly aqx = BivariatePoly::affine(a * q, z, -bp), aqy = BivariatePoly::affine(z, a * q, -b);
  BivariatePoly xy = BivariatePoly::x(one) * BivariatePoly::y(one);
  BivariatePoly mid = xy * (a * q * (q + one)) + BivariatePoly::affine(-q * (a + b), -q * (a + bp), b * bp + q);
  BivariatePoly x1 = BivariatePoly::affine(one, z, -one), y1 = BivariatePoly::affine(z, one, -one);
  return BivariateOperator(ctx, {{{2, 2}, aqx * aqy}, {{1, 1}, mid * (-one)}, {{0, 0}, x1 * y1 * q}});
}

std::pair<Scalar, Scalar> contiguous_residuals(const QContext& ctx, const AppellParams& prm, int m, int n) {
  if (m < 0 || n < 0) throw DomainError("slot indices must be >= 0");
  auto F = appell_coeffs(ctx, prm, m + n);
  return {contiguous_x_operator(ctx, prm).slot(F, m, n), contiguous_y_operator(ctx, prm).slot(F, m, n)};
}

SlotResidualReport operator_residual(const QContext& ctx, const BivariateOperator& op, const CoeffGrid& F, int M,
                                     const Scalar& x0, const Scalar& y0) {
  SlotResidualReport rep;
  rep.interior_max = ctx.zero();
  Scalar x = ctx.lift(x0), y = ctx.lift(y0);
  int top = M + op.coefficient_degree();
  for (int tot = 0; tot <= top; ++tot)
    for (int m = 0; m <= tot; ++m) {
      int n = tot - m;
      Scalar r = op.slot(F, m, n);
      if (tot <= M) {
        ++rep.interior_slots;
        if (!r.is_zero()) rep.interior_zero = false;
        if (r.magnitude() > rep.interior_max.magnitude() || (!r.is_zero() && rep.interior_max.is_zero()))
          rep.interior_max = r;
      } else if (!r.is_zero()) {
        rep.boundary.push_back({m, n, r});
      }
    }
  // direct evaluation on the truncated sum
  Scalar acc = ctx.zero();
  for (const auto& [s, p] : op.terms()) {
    Scalar xs = x * ctx.q().pow(s.first), ys = y * ctx.q().pow(s.second), f = ctx.zero(), xm = ctx.one();
    for (int m = 0; m <= M; ++m) {
      Scalar yn = ctx.one();
      for (int n = 0; m + n <= M; ++n) {
        f += F[m][n] * xm * yn;
        yn *= ys;
      }
      xm *= xs;
    }
    acc += p(x, y) * f;
  }
  rep.pointwise = acc;
  return rep;
}

SlotResidualReport third_order_residual(const QContext& ctx, const AppellParams& prm, const Scalar& x,
                                        const Scalar& y, int M) {
  return operator_residual(ctx, third_order_operator(ctx, prm), appell_coeffs(ctx, prm, M), M, x, y);
}

SlotResidualReport second_order_residual(const QContext& ctx, const AppellParams& prm, const Scalar& x,
                                         const Scalar& y, int M) {
  return operator_residual(ctx, second_order_operator(ctx, prm.a, prm.b, prm.bp), appell_coeffs(ctx, prm, M), M, x,
                           y);
}

SlotResidualReport second_order_cbb_residual(const QContext& ctx, const Scalar& a, const Scalar& b, const Scalar& bp,
                                             const Scalar& x, const Scalar& y, int M) {
  AppellParams prm{ctx.lift(a), ctx.lift(b), ctx.lift(bp), ctx.lift(b) * ctx.lift(bp)};
  return second_order_residual(ctx, prm, x, y, M);
}

Scalar second_order_brace(const QContext& ctx, const AppellParams& prm, int m, int n) {
  Sym s(ctx, prm);
  auto Q = [&](long e) { return s.q.pow(e); };
  const Scalar& one = s.one;
  return (one - s.c * Q(m + n - 2)) * (one - Q(m)) * (one - Q(n)) -
         (one - s.bp * Q(n - 1)) * (one - Q(m)) * (one - s.b * Q(m + n - 1)) -
         (one - s.b * Q(m - 1)) * (one - Q(n)) * (one - s.bp * Q(m + n - 1)) +
         (one - s.b * Q(m - 1)) * (one - s.bp * Q(n - 1)) * (one - Q(m + n));
}

BivariatePoly second_order_monomial_display(const QContext& ctx, const AppellParams& prm, int m, int n) {
  Sym s(ctx, prm);
  auto Q = [&](long e) { return s.q.pow(e); };
  const Scalar& one = s.one;
  auto mono = [&](int i, int j, const Scalar& c) {
    BivariatePoly r = BivariatePoly::constant(c);
    for (int k = 0; k < i; ++k) r = r * BivariatePoly::x(one);
    for (int k = 0; k < j; ++k) r = r * BivariatePoly::y(one);
    return r;
  };
  long e = m + n;
  return mono(m + 1, n + 1, s.q * (one - s.a * Q(e + 1)) * (one - s.a * Q(e))) -
         mono(m + 1, n, s.q * (one - s.a * Q(e)) * (one - s.b * Q(e))) -
         mono(m, n + 1, s.q * (one - s.a * Q(e)) * (one - s.bp * Q(e))) +
         mono(m, n, s.q * (one - s.c * Q(e - 1)) * (one - Q(e)));
}

Variant2Mapping specialize_to_variant2(const QContext& ctx, const Params2& p2) {
  p2.validate(ctx);
  HalfInt base = p2.lambda() + p2.alpha1;
  return {qpow(ctx, base),
          qpow(ctx, base + p2.l[1] - p2.h[1]),
          qpow(ctx, base + p2.l[0] - p2.h[0]),
          qpow(ctx, p2.l[0] - HalfInt::half) * p2.t[0],
          qpow(ctx, p2.l[1] - HalfInt::half) * p2.t[1],
          p2.alpha1};
}

QDifferenceEquation restrict_to_one_variable(const QContext& ctx, const BivariateOperator& op, const Scalar& d1,
                                             const Scalar& d2, HalfInt d3) {
  // f(q^s x1, q^s x2) = (q^{1-s} x)^{d3} g(q^{1-s} x); x1^i x2^j -> d1^i d2^j x^{-(i+j)}
  int deg = op.coefficient_degree();
  std::array<Poly, 3> out;
  for (const auto& [s, p] : op.terms()) {
    if (s.first != s.second || s.first < 0 || s.first > 2)
      throw DomainError("restriction needs diagonal shifts 0, 1, 2");
    std::vector<Scalar> c(static_cast<std::size_t>(deg) + 1, ctx.zero());
    for (const auto& [k, v] : p.terms()) c[deg - k.first - k.second] += v * d1.pow(k.first) * d2.pow(k.second);
    out[s.first] = Poly(c) * qpow(ctx, d3 * (1 - s.first));
  }
  // shift 2 carries g(x/q), shift 1 g(x), shift 0 g(qx)
  QDifferenceEquation eq{ctx, out[2], out[1], out[0]};
  return eq.normalized();
}

QDifferenceEquation restricted_operator_display(const QContext& ctx, const Variant2Mapping& mp) {
  const Scalar& q = ctx.q();
  Scalar one = ctx.one(), bb = mp.b * mp.bp;
  Poly u = Poly::linear_root(mp.a / mp.bp * q * mp.d1) * Poly::linear_root(mp.a / mp.b * q * mp.d2);
  Poly inner({mp.a * (q * q + q) * mp.d1 * mp.d2, -(q * (mp.a + mp.b) * mp.d1 + q * (mp.a + mp.bp) * mp.d2), bb + q});
  Poly v = inner * (-qpow(ctx, mp.d3) / bb);
  Poly w = Poly::linear_root(mp.d1) * Poly::linear_root(mp.d2) * (qpow(ctx, mp.d3 * 2 + 1) / bb);
  return QDifferenceEquation{ctx, u, v, w}.normalized();
}

std::vector<Scalar> appell_variant2_coeffs(const QContext& ctx, const Params2& p2, int N) {
  auto mp = specialize_to_variant2(ctx, p2);
  auto F = appell_coeffs(ctx, {mp.a, mp.b, mp.bp, mp.b * mp.bp}, N);
  Scalar e1 = ctx.q() * mp.d1, e2 = ctx.q() * mp.d2;
  std::vector<Scalar> out;
  for (int n = 0; n <= N; ++n) {
    Scalar s = ctx.zero();
    for (int m = 0; m <= n; ++m) s += F[m][n - m] * e1.pow(m) * e2.pow(n - m);
    out.push_back(s);
  }
  return out;
}

}  // namespace qvariant
