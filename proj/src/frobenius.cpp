#include "qvariant/frobenius.hpp"

#include <algorithm>
#include <cmath>

#include "qvariant/errors.hpp"

namespace qvariant {

const char* anchor_name(Anchor a) { return a == Anchor::zero ? "zero" : "infinity"; }

namespace {

// Exact square root of a rational, if it has one.
std::optional<mpq_class> rational_sqrt(const mpq_class& r) {
  if (sgn(r) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(r.get_num_mpz_t()) || !mpz_perfect_square_p(r.get_den_mpz_t())) return std::nullopt;
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), r.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), r.get_den_mpz_t());
  return mpq_class(n, d);
}

double log_abs(const Scalar& x) {
  if (!x.is_exact()) return std::log(std::abs(x.complex()));
  const mpq_class& r = x.rational();
  long en = 0, ed = 0;
  double mn = mpz_get_d_2exp(&en, r.get_num_mpz_t());
  double md = mpz_get_d_2exp(&ed, r.get_den_mpz_t());
  return std::log(std::abs(mn)) - std::log(md) + static_cast<double>(en - ed) * std::log(2.0);
}

// Roots of a X^2 + b X + c with a, c nonzero.
std::array<Scalar, 2> quadratic_roots(const Scalar& a, const Scalar& b, const Scalar& c) {
  Scalar disc = b * b - Scalar(4L).in_mode(a.mode()) * a * c;
  Scalar s;
  if (a.is_exact()) {
    auto r = rational_sqrt(disc.rational());
    if (!r) throw DomainError("characteristic roots are irrational (discriminant " + disc.str() + "); use float mode");
    s = Scalar(*r);
  } else {
    // a double root is only resolved to sqrt(machine eps); snap rounding-level discriminants
    double scale = std::max(std::norm(b.complex()), std::abs(4.0 * a.complex() * c.complex()));
    if (std::abs(disc.complex()) <= 1e-12 * scale) disc = Scalar::floating(0.0);
    std::complex<double> sb = std::sqrt(disc.complex()), bb = b.complex();
    // pick the sign that avoids cancellation, then use Vieta for the partner
    if (std::real(std::conj(bb) * sb) < 0) sb = -sb;
    std::complex<double> big = -(bb + sb) / 2.0;
    if (big == 0.0) return {Scalar(std::complex<double>(0.0)), Scalar(std::complex<double>(0.0))};
    return {Scalar(big / a.complex()), Scalar(c.complex() / big)};
  }
  Scalar two_a = Scalar(2L).in_mode(a.mode()) * a;
  return {(-b - s) / two_a, (-b + s) / two_a};
}

ExponentPair solve_characteristic(const QContext& ctx, const Scalar& a, const Scalar& b, const Scalar& c) {
  ExponentPair out{quadratic_roots(a, b, c), std::nullopt};
  auto e0 = exponent_of(ctx, out.roots[0]);
  auto e1 = exponent_of(ctx, out.roots[1]);
  if (e0 && e1) {
    if (*e1 < *e0) {
      std::swap(e0, e1);
      std::swap(out.roots[0], out.roots[1]);
    }
    out.exponents = std::array<HalfInt, 2>{*e0, *e1};
  }
  return out;
}

// Relative smallness of `v` against the magnitudes in `terms`.
bool small_against(const Scalar& v, std::initializer_list<Scalar> terms, double tol) {
  if (v.is_exact()) return v.is_zero();
  double scale = 0;
  for (const auto& t : terms) scale = std::max(scale, t.magnitude());
  return v.magnitude() <= tol * std::max(scale, 1e-300);
}

// Coefficient of c_k in the order-n equation.
Scalar shift_factor(const QDifferenceEquation& eq, const Scalar& X, const Scalar& Xinv, int j, long k) {
  const Scalar z = eq.ctx.zero();
  Scalar qk = qpow_int(eq.ctx, k);
  return eq.u.coeff(j, z) * Xinv / qk + eq.v.coeff(j, z) + eq.w.coeff(j, z) * X * qk;
}

// Magnitude of the largest summand inside shift_factor, before cancellation.
double shift_scale(const QDifferenceEquation& eq, const Scalar& X, const Scalar& Xinv, int j, long k) {
  const Scalar z = eq.ctx.zero();
  Scalar qk = qpow_int(eq.ctx, k);
  return std::max({(eq.u.coeff(j, z) * Xinv / qk).magnitude(), eq.v.coeff(j, z).magnitude(),
                   (eq.w.coeff(j, z) * X * qk).magnitude()});
}

}  // namespace

std::optional<HalfInt> exponent_of(const QContext& ctx, const Scalar& X, long max_twice) {
  if (X.is_zero()) return std::nullopt;
  double est = log_abs(X) / log_abs(ctx.p());
  if (!std::isfinite(est) || std::abs(est) > static_cast<double>(max_twice) + 2) return std::nullopt;
  long k0 = std::lround(est);
  for (long k : {k0, k0 - 1, k0 + 1}) {
    if (std::labs(k) > max_twice) continue;
    Scalar pk = ctx.p().pow(k);
    if (X.is_exact()) {
      if (pk == X) return HalfInt::from_twice(k);
    } else if (std::abs(pk.complex() - X.complex()) <= 1e-9 * std::abs(X.complex())) {
      return HalfInt::from_twice(k);
    }
  }
  return std::nullopt;
}

ExponentPair char_exponents_zero(const QDifferenceEquation& eq) {
  const Scalar z = eq.ctx.zero();
  Scalar u0 = eq.u.coeff(0, z), v0 = eq.v.coeff(0, z), w0 = eq.w.coeff(0, z);
  if (u0.is_zero() || w0.is_zero()) throw DomainError("x = 0 is not a regular-singular anchor (u0 or w0 vanishes)");
  return solve_characteristic(eq.ctx, w0, v0, u0);
}

ExponentPair char_exponents_infinity(const QDifferenceEquation& eq) {
  int d = eq.degree();
  if (eq.u.degree() != d || eq.w.degree() != d)
    throw DomainError("x = infinity is not a regular-singular anchor (leading coefficients degenerate)");
  return char_exponents_zero(eq.reflect());
}

Apparency apparency_check_root(const QDifferenceEquation& eq, const Scalar& X, int N) {
  if (N < 1) throw DomainError("apparency_check: gap must be a positive integer");
  const QContext& ctx = eq.ctx;
  Scalar Xinv = X.inverse();
  const Scalar z = ctx.zero();
  Scalar u0 = eq.u.coeff(0, z), v0 = eq.v.coeff(0, z), w0 = eq.w.coeff(0, z);
  Scalar qN = qpow_int(ctx, N);
  Scalar LN = u0 * Xinv / qN + v0 + w0 * X * qN;
  if (!small_against(LN, {u0 * Xinv / qN, v0, w0 * X * qN}, kResonanceTol))
    throw DomainError("apparency_check: exponents are not separated by the integer " + std::to_string(N));
  PowerSeriesSolution low = local_series_zero_root(eq, X, N - 1);
  Scalar obs = z;
  double mag = 0;
  for (int k = 0; k < N; ++k) {
    obs += shift_factor(eq, X, Xinv, N - k, k) * low.coeffs[k];
    mag = std::max(mag, shift_scale(eq, X, Xinv, N - k, k) * low.coeffs[k].magnitude());
  }
  bool ok = obs.is_exact() ? obs.is_zero() : obs.magnitude() <= kResonanceTol * std::max(mag, 1e-300);
  return {ok, obs};
}

Apparency apparency_check(const QDifferenceEquation& eq, HalfInt lambda_low, int N) {
  return apparency_check_root(eq, qpow(eq.ctx, lambda_low), N);
}

Apparency apparency_check_infinity(const QDifferenceEquation& eq, HalfInt exponent_low, int N) {
  return apparency_check(eq.reflect(), exponent_low, N);
}

PowerSeriesSolution local_series_zero_root(const QDifferenceEquation& eq, const Scalar& X0, int N) {
  if (N < 0) throw DomainError("series truncation must be >= 0");
  const QContext& ctx = eq.ctx;
  Scalar X = ctx.lift(X0);
  if (X.is_zero()) throw DomainError("characteristic root must be nonzero");
  const Scalar z = ctx.zero();
  Scalar u0 = eq.u.coeff(0, z), v0 = eq.v.coeff(0, z), w0 = eq.w.coeff(0, z);
  if (u0.is_zero() || w0.is_zero()) throw DomainError("x = 0 is not a regular-singular anchor (u0 or w0 vanishes)");
  Scalar Xinv = X.inverse();
  // characteristic check at order 0
  Scalar L0 = u0 * Xinv + v0 + w0 * X;
  if (!small_against(L0, {u0 * Xinv, v0, w0 * X}, kResonanceTol))
    throw DomainError("X = " + X.str() + " is not a characteristic root");
  Scalar other = u0 / (w0 * X);  // Vieta partner

  PowerSeriesSolution s;
  s.anchor = Anchor::zero;
  s.root = X;
  s.exponent = exponent_of(ctx, X);
  s.coeffs.push_back(ctx.one());
  int d = eq.degree();
  for (int n = 1; n <= N; ++n) {
    Scalar rhs = z;
    double mag = 0;
    for (int k = std::max(0, n - d); k < n; ++k) {
      rhs -= shift_factor(eq, X, Xinv, n - k, k) * s.coeffs[k];
      mag = std::max(mag, shift_scale(eq, X, Xinv, n - k, k) * s.coeffs[k].magnitude());
    }
    Scalar qn = qpow_int(ctx, n);
    Scalar L = u0 * Xinv / qn + v0 + w0 * X * qn;
    bool resonant;
    if (X.is_exact()) {
      resonant = L.is_zero();
    } else {
      resonant = std::abs(other.complex() / X.complex() - qn.complex()) <= kResonanceTol * std::abs(qn.complex());
    }
    if (resonant) {
      bool clear = rhs.is_exact() ? rhs.is_zero() : rhs.magnitude() <= kResonanceTol * std::max(mag, 1e-300);
      if (!clear)
        throw ResonanceError("logarithmic case: resonance at order " + std::to_string(n) +
                             " with nonzero obstruction " + rhs.str());
      s.coeffs.push_back(z);  // canonical branch: resonant coefficient fixed to 0
    } else {
      s.coeffs.push_back(rhs / L);
    }
  }
  return s;
}

PowerSeriesSolution local_series_zero(const QDifferenceEquation& eq, HalfInt exponent, int N) {
  auto s = local_series_zero_root(eq, qpow(eq.ctx, exponent), N);
  s.exponent = exponent;
  return s;
}

PowerSeriesSolution local_series_infinity_root(const QDifferenceEquation& eq, const Scalar& X, int N) {
  int d = eq.degree();
  if (eq.u.degree() != d || eq.w.degree() != d)
    throw DomainError("x = infinity is not a regular-singular anchor (leading coefficients degenerate)");
  auto s = local_series_zero_root(eq.reflect(), X, N);
  s.anchor = Anchor::infinity;
  return s;
}

PowerSeriesSolution local_series_infinity(const QDifferenceEquation& eq, HalfInt exponent, int N) {
  auto s = local_series_infinity_root(eq, qpow(eq.ctx, exponent), N);
  s.exponent = exponent;
  return s;
}

std::vector<Scalar> series_residual(const QDifferenceEquation& eq, const Scalar& X0, const std::vector<Scalar>& c) {
  const QContext& ctx = eq.ctx;
  Scalar X = ctx.lift(X0), Xinv = X.inverse();
  int N = static_cast<int>(c.size()) - 1, d = eq.degree();
  std::vector<Scalar> r;
  for (int n = 0; n <= N + d; ++n) {
    Scalar acc = ctx.zero();
    for (int k = std::max(0, n - d); k <= std::min(n, N); ++k) acc += shift_factor(eq, X, Xinv, n - k, k) * c[k];
    r.push_back(acc);
  }
  return r;
}

std::vector<Scalar> series_residual(const QDifferenceEquation& eq, const PowerSeriesSolution& s) {
  if (s.anchor == Anchor::zero) return series_residual(eq, s.root, s.coeffs);
  return series_residual(eq.reflect(), s.root, s.coeffs);
}

}  // namespace qvariant
