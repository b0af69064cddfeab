#pragma once

// Coefficient formulas, generic over the field: Scalar for ordinary use,
// RatFunc when one t is kept symbolic for limits.

#include <array>
#include <string>
#include <vector>

#include "qvariant/errors.hpp"
#include "qvariant/qcore.hpp"
#include "qvariant/ratfunc.hpp"

namespace qvariant::formulas {

inline bool vanishes(const Scalar& s) { return s.is_zero(); }
inline bool vanishes(const RatFunc& r) { return r.is_zero(); }

template <class F>
F checked_div(const F& num, const F& den, const std::string& what, long n) {
  if (vanishes(den)) throw DegenerateError(what + " vanishes at n = " + std::to_string(n));
  return num / den;
}

// (a;q)_k for k = 0..N
template <class F>
std::vector<F> poch_table(const QContext& ctx, const F& a, int N) {
  std::vector<F> out;
  out.reserve(static_cast<std::size_t>(N) + 1);
  F acc(ctx.one());
  out.push_back(acc);
  Scalar qk = ctx.one();
  for (int k = 0; k < N; ++k) {
    acc = acc * (F(ctx.one()) - a * F(qk));
    qk *= ctx.q();
    out.push_back(acc);
  }
  return out;
}

template <class F>
F ipow(const QContext& ctx, const F& x, int k) {
  F r(ctx.one());
  for (int i = 0; i < k; ++i) r = r * x;
  return r;
}

inline std::vector<Scalar> scalar_poch(const QContext& ctx, const Scalar& a, int N) { return poch_table(ctx, a, N); }

template <class F>
struct Deg2 {
  std::array<HalfInt, 2> h, l;
  HalfInt alpha1, alpha2;
  std::array<F, 2> t;
  HalfInt lambda() const { return HalfInt::halve(h[0] + h[1] - l[0] - l[1] - alpha1 - alpha2 + 1); }
};

template <class F>
struct Deg3 {
  std::array<HalfInt, 3> h, l;
  HalfInt alpha;
  std::array<F, 3> t;
  HalfInt nu() const { return HalfInt::halve(h[0] + h[1] + h[2] - l[0] - l[1] - l[2] + 1); }
};

// coefficients of x^{-alpha1-n}
template <class F>
std::vector<F> g1(const QContext& ctx, const Deg2<F>& P, int N) {
  HalfInt lam = P.lambda();
  auto A = scalar_poch(ctx, qpow(ctx, lam + P.alpha1), N);
  auto D = scalar_poch(ctx, qpow(ctx, P.alpha1 - P.alpha2 + 1), N);
  auto B = scalar_poch(ctx, qpow(ctx, lam + P.alpha1 - P.h[1] + P.l[1]), N);
  auto C = scalar_poch(ctx, qpow(ctx, lam + P.alpha1 - P.h[0] + P.l[0]), N);
  auto Qq = scalar_poch(ctx, ctx.q(), N);
  F y1 = F(qpow(ctx, P.l[0])) * P.t[0], y2 = F(qpow(ctx, P.l[1])) * P.t[1];
  std::vector<F> p1{F(ctx.one())}, p2{F(ctx.one())};
  for (int k = 1; k <= N; ++k) {
    p1.push_back(p1.back() * y1);
    p2.push_back(p2.back() * y2);
  }
  std::vector<F> out;
  for (int n = 0; n <= N; ++n) {
    if (D[n].is_zero()) throw DegenerateError("g1: (q^{alpha1-alpha2+1};q)_n vanishes at n = " + std::to_string(n));
    F s(ctx.zero());
    for (int k = 0; k <= n; ++k) s = s + F(B[k] * C[n - k] / (Qq[k] * Qq[n - k])) * p1[k] * p2[n - k];
    out.push_back(F(ctx.p().pow(n) * A[n] / D[n]) * s);
  }
  return out;
}

// ascending at q^{l_i-1/2} t_i
template <class F>
std::vector<F> g2(const QContext& ctx, const Deg2<F>& P, int i, int N) {
  int j = 1 - i;
  HalfInt lam = P.lambda();
  auto A1 = scalar_poch(ctx, qpow(ctx, lam + P.alpha1), N);
  auto A2 = scalar_poch(ctx, qpow(ctx, lam + P.alpha2), N);
  auto D1 = scalar_poch(ctx, qpow(ctx, P.h[i] - P.l[i] + 1), N);
  auto D2 = poch_table(ctx, F(qpow(ctx, P.h[j] - P.l[i] + 1)) * P.t[j] / P.t[i], N);
  auto Qq = scalar_poch(ctx, ctx.q(), N);
  std::vector<F> out;
  for (int n = 0; n <= N; ++n) {
    if (D1[n].is_zero()) throw DegenerateError("g2: (q^{h_i-l_i+1};q)_n vanishes at n = " + std::to_string(n));
    F num(qpow_int(ctx, n) * A1[n] * A2[n] / (D1[n] * Qq[n]));
    out.push_back(checked_div(num, D2[n], "g2: (q^{h_i'-l_i+1} t_i'/t_i;q)_n", n));
  }
  return out;
}

// descending at q^{h_i+1/2} t_i
template <class F>
std::vector<F> g3(const QContext& ctx, const Deg2<F>& P, int i, int N) {
  int j = 1 - i;
  HalfInt lam = P.lambda();
  auto A = scalar_poch(ctx, qpow(ctx, lam + P.alpha1), N);
  auto B = scalar_poch(ctx, qpow(ctx, lam - P.h[j] + P.l[j] + P.alpha1), N);
  auto C = scalar_poch(ctx, qpow(ctx, P.h[i] - P.l[i] + 1), N);
  auto Qq = scalar_poch(ctx, ctx.q(), N);
  F ratio = P.t[i] / P.t[j];
  auto D = poch_table(ctx, F(qpow(ctx, P.h[i] - P.l[j] + 1)) * ratio, N);
  F X = F(-qpow(ctx, P.h[i] - P.l[j])) * ratio;
  std::vector<F> xp{F(ctx.one())};
  for (int k = 1; k <= N; ++k) xp.push_back(xp.back() * X);
  std::vector<F> out;
  for (int n = 0; n <= N; ++n) {
    F s(ctx.zero());
    for (int k = 0; k <= n; ++k) {
      if (C[k].is_zero()) throw DegenerateError("g3: (q^{h_i-l_i+1};q)_k vanishes at k = " + std::to_string(k));
      s = s + F(B[k] * qpow_int(ctx, static_cast<long>(k) * (k + 1) / 2) / (C[k] * Qq[k] * Qq[n - k])) * xp[k];
    }
    out.push_back(checked_div(F(qpow_int(ctx, n) * A[n]) * s, D[n], "g3: (q^{h_i-l_i'+1} t_i/t_i';q)_n", n));
  }
  return out;
}

// Double sum shared by both conjectural families; X1, X2 carry the t dependence.
template <class F>
std::vector<F> conj(const QContext& ctx, const Deg3<F>& P, bool family_one, const std::array<int, 3>& perm, int N) {
  int i = perm[0], j = perm[1], k = perm[2];
  HalfInt nu = P.nu();
  auto Nu = scalar_poch(ctx, qpow(ctx, nu), N);
  auto Aj = scalar_poch(ctx, qpow(ctx, nu - P.h[j] + P.l[j]), N);
  auto Ak = scalar_poch(ctx, qpow(ctx, nu - P.h[k] + P.l[k]), N);
  auto Hi = scalar_poch(ctx, qpow(ctx, P.h[i] - P.l[i] + 1), N);
  auto Qq = scalar_poch(ctx, ctx.q(), N);
  F X1(ctx.zero()), X2(ctx.zero()), d1s(ctx.zero()), d2s(ctx.zero());
  if (family_one) {
    F rj = P.t[j] / P.t[i], rk = P.t[k] / P.t[i];
    X1 = F(-qpow(ctx, P.h[j] - P.l[i])) * rj;
    X2 = F(-qpow(ctx, P.h[k] - P.l[i])) * rk;
    d1s = F(qpow(ctx, P.h[j] - P.l[i] + 1)) * rj;
    d2s = F(qpow(ctx, P.h[k] - P.l[i] + 1)) * rk;
  } else {
    F rj = P.t[i] / P.t[j], rk = P.t[i] / P.t[k];
    X1 = F(-qpow(ctx, P.h[i] - P.l[j])) * rj;
    X2 = F(-qpow(ctx, P.h[i] - P.l[k])) * rk;
    d1s = F(qpow(ctx, P.h[i] - P.l[j] + 1)) * rj;
    d2s = F(qpow(ctx, P.h[i] - P.l[k] + 1)) * rk;
  }
  auto D1 = poch_table(ctx, d1s, N), D2 = poch_table(ctx, d2s, N);
  std::vector<F> x1p{F(ctx.one())}, x2p{F(ctx.one())};
  for (int m = 1; m <= N; ++m) {
    x1p.push_back(x1p.back() * X1);
    x2p.push_back(x2p.back() * X2);
  }
  std::vector<F> out;
  for (int n = 0; n <= N; ++n) {
    F s(ctx.zero());
    for (int a = 0; a <= n; ++a)
      for (int b = 0; a + b <= n; ++b) {
        if (Hi[a + b].is_zero())
          throw DegenerateError("conjecture: (q^{h_i-l_i+1};q)_k vanishes at k = " + std::to_string(a + b));
        long e = static_cast<long>(a + b) * (a + b + 1) / 2;
        Scalar c = qpow_int(ctx, e) * Aj[a] * Ak[b] / (Qq[n - a - b] * Qq[a] * Qq[b] * Hi[a + b]);
        s = s + F(c) * x1p[a] * x2p[b];
      }
    F pre(qpow_int(ctx, n) * Nu[n]);
    out.push_back(checked_div(pre * s, D1[n] * D2[n], "conjecture: prefactor Pochhammer denominator", n));
  }
  return out;
}

}  // namespace qvariant::formulas
