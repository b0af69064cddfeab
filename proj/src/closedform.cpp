#include "qvariant/closedform.hpp"

#include <algorithm>

#include "formulas.hpp"
#include "qvariant/errors.hpp"

namespace qvariant {

using formulas::scalar_poch;

const char* orientation_name(Orientation o) { return o == Orientation::ascending ? "ascending" : "descending"; }

namespace {

formulas::Deg2<Scalar> deg2_of(const Params2& p) { return {p.h, p.l, p.alpha1, p.alpha2, p.t}; }
formulas::Deg3<Scalar> deg3_of(const Params3& p) { return {p.h, p.l, p.alpha, p.t}; }

int index_of(int i) {
  if (i != 1 && i != 2) throw DomainError("index i must be 1 or 2");
  return i - 1;
}

void check_perm(const Permutation& perm) {
  std::array<int, 3> s = perm;
  std::sort(s.begin(), s.end());
  if (s != std::array<int, 3>{0, 1, 2}) throw DomainError("not a permutation of (1,2,3)");
}

}  // namespace

std::vector<Scalar> phi21_coeffs(const QContext& ctx, const Scalar& a, const Scalar& b, const Scalar& c, int N) {
  if (N < 0) throw DomainError("truncation must be >= 0");
  auto A = scalar_poch(ctx, ctx.lift(a), N), B = scalar_poch(ctx, ctx.lift(b), N);
  auto C = scalar_poch(ctx, ctx.lift(c), N), Qq = scalar_poch(ctx, ctx.q(), N);
  std::vector<Scalar> out;
  for (int n = 0; n <= N; ++n) {
    if (C[n].is_zero()) throw DegenerateError("2phi1: (c;q)_n vanishes at n = " + std::to_string(n));
    out.push_back(A[n] * B[n] / (C[n] * Qq[n]));
  }
  return out;
}

Scalar phi21(const QContext& ctx, const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& x, int N) {
  auto co = phi21_coeffs(ctx, a, b, c, N);
  Scalar s = ctx.zero(), xv = ctx.lift(x);
  for (auto it = co.rbegin(); it != co.rend(); ++it) s = s * xv + *it;
  return s;
}

PochhammerSeries hahn_series(const QContext& ctx, const Scalar& a0, const Scalar& b0, const Scalar& c0, int N) {
  if (N < 0) throw DomainError("truncation must be >= 0");
  Scalar a = ctx.lift(a0), b = ctx.lift(b0), c = ctx.lift(c0);
  auto A = scalar_poch(ctx, a, N), B = scalar_poch(ctx, b, N);
  auto D = scalar_poch(ctx, a * b * ctx.q() / c, N), Qq = scalar_poch(ctx, ctx.q(), N);
  PochhammerSeries s;
  s.prefactor_exponent = HalfInt(0);
  s.node = c / (a * b);
  s.orientation = Orientation::ascending;
  for (int n = 0; n <= N; ++n) {
    if (D[n].is_zero()) throw DegenerateError("3phi2: (abq/c;q)_n vanishes at n = " + std::to_string(n));
    s.coeffs.push_back(A[n] * B[n] * qpow_int(ctx, n) / (D[n] * Qq[n]));
  }
  return s;
}

Scalar phi32_hahn(const QContext& ctx, const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& x, int N) {
  return evaluate_basis_sum(ctx, hahn_series(ctx, a, b, c, N), ctx.lift(x));
}

std::vector<Scalar> qhyp_infinity_coeffs(const QContext& ctx, const Scalar& a0, const Scalar& b0, const Scalar& c0,
                                         int N) {
  Scalar a = ctx.lift(a0), b = ctx.lift(b0), c = ctx.lift(c0);
  auto co = phi21_coeffs(ctx, a, a * ctx.q() / c, a * ctx.q() / b, N);
  Scalar z = c * ctx.q() / (a * b), zn = ctx.one();
  for (auto& x : co) {
    x *= zn;
    zn *= z;
  }
  return co;
}

PowerSeriesSolution g1_series(const QContext& ctx, const Params2& p2, int N) {
  p2.validate(ctx);
  if (N < 0) throw DomainError("truncation must be >= 0");
  PowerSeriesSolution s;
  s.anchor = Anchor::infinity;
  s.exponent = p2.alpha1;
  s.root = qpow(ctx, p2.alpha1);
  s.coeffs = formulas::g1(ctx, deg2_of(p2), N);
  return s;
}

PochhammerSeries g2_series(const QContext& ctx, const Params2& p2, int i, int N) {
  p2.validate(ctx);
  if (N < 0) throw DomainError("truncation must be >= 0");
  int ii = index_of(i);
  PochhammerSeries s;
  s.prefactor_exponent = p2.lambda();
  s.node = qpow(ctx, p2.l[ii] - HalfInt::half) * p2.t[ii];
  s.orientation = Orientation::ascending;
  s.coeffs = formulas::g2(ctx, deg2_of(p2), ii, N);
  return s;
}

PochhammerSeries g3_series(const QContext& ctx, const Params2& p2, int i, int N) {
  p2.validate(ctx);
  if (N < 0) throw DomainError("truncation must be >= 0");
  int ii = index_of(i);
  PochhammerSeries s;
  s.prefactor_exponent = -p2.alpha1;
  s.node = qpow(ctx, p2.h[ii] + HalfInt::half) * p2.t[ii];
  s.orientation = Orientation::descending;
  s.coeffs = formulas::g3(ctx, deg2_of(p2), ii, N);
  return s;
}

PochhammerSeries conj3_series(const QContext& ctx, const Params3& p3, ConjFamily family, const Permutation& perm,
                              int N) {
  p3.validate(ctx);
  check_perm(perm);
  if (N < 0) throw DomainError("truncation must be >= 0");
  int i = perm[0];
  PochhammerSeries s;
  if (family == ConjFamily::I) {
    s.prefactor_exponent = p3.nu() - p3.alpha;
    s.node = qpow(ctx, p3.l[i] - HalfInt::half) * p3.t[i];
    s.orientation = Orientation::ascending;
  } else {
    s.prefactor_exponent = -p3.alpha;
    s.node = qpow(ctx, p3.h[i] + HalfInt::half) * p3.t[i];
    s.orientation = Orientation::descending;
  }
  s.coeffs = formulas::conj(ctx, deg3_of(p3), family == ConjFamily::I, perm, N);
  return s;
}

Scalar evaluate_basis_sum(const QContext& ctx, const PochhammerSeries& s, const Scalar& x) {
  // ratio r with B_n = (r;q)_n
  Scalar r = s.orientation == Orientation::ascending ? x / s.node : s.node / x;
  Scalar sum = ctx.zero(), basis = ctx.one(), qn = ctx.one();
  for (const auto& a : s.coeffs) {
    sum += a * basis;
    basis *= ctx.one() - r * qn;
    qn *= ctx.q();
  }
  return sum;
}

BasisResidual pochhammer_residual(const QDifferenceEquation& eq0, const PochhammerSeries& s) {
  const QContext& ctx = eq0.ctx;
  // A descending series in x is an ascending one in y = 1/x.
  bool asc = s.orientation == Orientation::ascending;
  QDifferenceEquation eq = asc ? eq0 : eq0.reflect();
  Scalar X = qpow(ctx, asc ? s.prefactor_exponent : -s.prefactor_exponent);
  Scalar d = asc ? s.node : s.node.inverse();
  if (d.is_zero()) throw DomainError("basis node must be nonzero");
  Scalar Xinv = X.inverse();
  const Scalar& q = ctx.q();
  int N = static_cast<int>(s.coeffs.size()) - 1;
  int D = N + eq.degree();

  // S(d q^e) = sum a_n (q^e;q)_n
  auto S_at = [&](long e) {
    Scalar base = qpow_int(ctx, e), sum = ctx.zero(), bas = ctx.one(), qn = ctx.one();
    for (const auto& a : s.coeffs) {
      sum += a * bas;
      bas *= ctx.one() - base * qn;
      qn *= q;
    }
    return sum;
  };

  BasisResidual out;
  std::vector<Scalar> R;
  for (int j = 0; j <= D; ++j) {
    Scalar x = d * qpow_int(ctx, -j);
    Scalar t1 = eq.u(x) * Xinv * S_at(-j - 1), t2 = eq.v(x) * S_at(-j), t3 = eq.w(x) * X * S_at(-j + 1);
    out.scale = std::max({out.scale, t1.magnitude(), t2.magnitude(), t3.magnitude()});
    R.push_back(t1 + t2 + t3);
  }
  // Newton-type forward solve: B_m(d q^{-j}) = (q^{-j};q)_m vanishes for m > j.
  for (int j = 0; j <= D; ++j) {
    Scalar base = qpow_int(ctx, -j), acc = R[j], bm = ctx.one(), qm = ctx.one();
    for (int m = 0; m < j; ++m) {
      acc -= out.beta[m] * bm;
      bm *= ctx.one() - base * qm;
      qm *= q;
    }
    out.beta.push_back(acc / bm);
  }
  return out;
}

ConjectureReport verify_pochhammer_solution(const QDifferenceEquation& eq, const PochhammerSeries& s, double tol) {
  auto res = pochhammer_residual(eq, s);
  int N = static_cast<int>(s.coeffs.size()) - 1;
  ConjectureReport rep;
  rep.max_interior_residual = eq.ctx.zero();
  rep.orders_checked = N;
  rep.passed = true;
  for (int n = 0; n < static_cast<int>(res.beta.size()); ++n) {
    const Scalar& b = res.beta[n];
    bool zero = negligible(b, res.scale, tol);
    if (!zero) rep.support.push_back(n);
    if (n < N) {
      if (b.magnitude() > rep.max_interior_residual.magnitude() || (!zero && rep.max_interior_residual.is_zero()))
        rep.max_interior_residual = b;
      if (!zero) rep.passed = false;
    }
  }
  return rep;
}

ConjectureReport verify_conjecture(const QContext& ctx, const Params3& p3, ConjFamily family,
                                   const Permutation& perm, int N, double tol) {
  if (N < 5) throw DomainError("verify_conjecture needs N >= 5");
  check_perm(perm);
  // nodes of the chosen family must be distinct for the re-expansion to be meaningful
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) {
      Scalar na = family == ConjFamily::I ? qpow(ctx, p3.l[a] - HalfInt::half) * p3.t[a]
                                          : qpow(ctx, p3.h[a] + HalfInt::half) * p3.t[a];
      Scalar nb = family == ConjFamily::I ? qpow(ctx, p3.l[b] - HalfInt::half) * p3.t[b]
                                          : qpow(ctx, p3.h[b] + HalfInt::half) * p3.t[b];
      if (na == nb) throw DegenerateError("basis node coincidence between indices " + std::to_string(a + 1) +
                                          " and " + std::to_string(b + 1));
    }
  auto s = conj3_series(ctx, p3, family, perm, N);
  return verify_pochhammer_solution(make_variant_deg3(ctx, p3), s, tol);
}

Scalar recurrence_residual_thm2(const QContext& ctx, const Params2& p2_in, int i, int n, double* scale) {
  Params2 p2 = index_of(i) == 0 ? p2_in : p2_in.index_swapped();
  if (n < 0) throw DomainError("recurrence order must be >= 0");
  auto a = formulas::g2(ctx, deg2_of(p2), 0, n + 1);
  auto A = [&](int m) { return m < 0 ? ctx.zero() : a[m]; };
  HalfInt lam = p2.lambda();
  const Scalar& q = ctx.q();
  Scalar one = ctx.one();
  Scalar Y11 = qpow(ctx, p2.h[0] - p2.l[0]);
  Scalar Y21 = qpow(ctx, p2.h[1] - p2.l[0]) * p2.t[1] / p2.t[0];
  Scalar La = qpow(ctx, lam + p2.alpha1), Lb = qpow(ctx, lam + p2.alpha2);
  auto den = [&](int m) { return (one - Y11 * q.pow(m)) * (one - Y21 * q.pow(m)) * (one - q.pow(m)); };
  auto numf = [&](int m) { return (one - La * q.pow(m)) * (one - Lb * q.pow(m)); };
  std::array<Scalar, 6> terms{den(n + 1) * A(n + 1),
                              -q * numf(n) * A(n),
                              -q.pow(3) * (one + q.inverse()) * den(n) * A(n),
                              q.pow(4) * (one + q.inverse()) * numf(n - 1) * A(n - 1),
                              q.pow(5) * den(n - 1) * A(n - 1),
                              -q.pow(6) * numf(n - 2) * A(n - 2)};
  Scalar r = ctx.zero();
  for (const auto& t : terms) {
    r += t;
    if (scale) *scale = std::max(*scale, t.magnitude());
  }
  return r;
}

Scalar recurrence_residual_thm3(const QContext& ctx, const Params2& p2_in, int i, int n, int k, double* scale) {
  Params2 p2 = index_of(i) == 0 ? p2_in : p2_in.index_swapped();
  if (n < 0 || k < 0) throw DomainError("recurrence indices must be >= 0");
  HalfInt lam = p2.lambda();
  const Scalar& q = ctx.q();
  Scalar one = ctx.one();
  Scalar Y1 = qpow(ctx, p2.h[0] - p2.l[0]);
  Scalar Y2 = qpow(ctx, lam + p2.alpha1);
  Scalar Y3 = qpow(ctx, p2.h[1] - p2.l[1]);
  int M = n + 1;
  auto P23 = scalar_poch(ctx, Y2 * Y3, M), P1 = scalar_poch(ctx, Y1 * q, M);
  auto Qq = scalar_poch(ctx, q, M);
  auto c = [&](int m, int j) {
    if (m < 0 || j < 0 || j > m) return ctx.zero();
    if (P1[j].is_zero()) throw DegenerateError("recurrence: (q^{h_i-l_i+1};q)_k vanishes at k = " + std::to_string(j));
    return qpow_int(ctx, static_cast<long>(j) * (j + 1) / 2) * P23[j] / (P1[j] * Qq[j] * Qq[m - j]);
  };
  auto Q = [&](long e) { return q.pow(e); };
  Scalar r = ctx.zero();
  auto add = [&](const Scalar& t) {
    r += t;
    if (scale) *scale = std::max(*scale, t.magnitude());
  };
  add(Q(n + 1) * c(n - 2, k - 2));
  add(q * (one + q) * c(n - 2, k - 1));
  add(Q(2 - n) * c(n - 2, k));
  add(-(Q(n + 1) * (one - Y2 * Y3 * Q(n - 1)) * c(n - 1, k - 2)));
  add(-(q * (Scalar(2L).in_mode(ctx.mode()) + q.inverse() + q - Q(n) - Y1 * Q(n) - Y2 * Q(n - 1) - Y2 * Y3 * Q(n - 1)) *
        c(n - 1, k - 1)));
  add(q * (one - Q(1 - n) - Q(-n) - Q(-n - 1) + Y1 + Y2 / q) * c(n - 1, k));
  add((one + q - Q(n + 1) - Y1 * (Q(n + 1) - Q(2 * n + 1)) - Y2 * Q(n) - Y2 * Y3 * Q(n) + Y2 * Y2 * Y3 * Q(2 * n)) *
      c(n, k - 1));
  add(-((one + q - Q(-n - 1) - Q(-n) - Q(1 - n) + Y1 * (one + q - Q(n + 1)) + Y2 * (one + q.inverse() - Q(n)) -
         Y1 * Y2 * Q(n)) *
        c(n, k)));
  add((one - Y1 * Q(n + 1)) * (one - Y2 * Q(n)) * (one - Q(-n - 1)) * c(n + 1, k));
  return r;
}

PowerSeriesSolution pochhammer_to_power(const QContext& ctx, const PochhammerSeries& s, int N) {
  if (s.node.is_zero()) throw DomainError("basis node must be nonzero");
  bool asc = s.orientation == Orientation::ascending;
  // B_n as a polynomial in z = x/d (ascending) or z = d/x (descending)
  Scalar zscale = asc ? s.node.inverse() : s.node;
  std::vector<Scalar> acc(static_cast<std::size_t>(N) + 1, ctx.zero());
  Poly basis = Poly::constant(ctx.one());
  Scalar qn = ctx.one();
  for (const auto& a : s.coeffs) {
    for (int k = 0; k <= std::min(N, basis.degree()); ++k) acc[k] += a * basis.coeffs()[k];
    basis = basis * Poly({ctx.one(), -qn * zscale});
    qn *= ctx.q();
  }
  PowerSeriesSolution out;
  out.anchor = asc ? Anchor::zero : Anchor::infinity;
  out.exponent = asc ? s.prefactor_exponent : -s.prefactor_exponent;
  out.root = qpow(ctx, *out.exponent);
  out.coeffs = std::move(acc);
  return out;
}

}  // namespace qvariant
