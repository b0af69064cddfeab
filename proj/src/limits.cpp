#include "qvariant/limits.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <limits>
#include <sstream>

#include "formulas.hpp"
#include "qvariant/errors.hpp"
#include "qvariant/frobenius.hpp"

namespace qvariant {

namespace {

constexpr double kFloatTol = 1e-9;

bool same_scalar(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return a == b;
  Scalar d = a.in_mode(Mode::floating) - b.in_mode(Mode::floating);
  return negligible(d, std::max({1.0, a.magnitude(), b.magnitude()}), kFloatTol);
}

bool same_vector(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!same_scalar(a[k], b[k])) return false;
  return true;
}

double coeff_scale(std::initializer_list<const Poly*> ps) {
  double m = 1.0;
  for (const Poly* p : ps)
    for (const auto& c : p->coeffs()) m = std::max(m, c.magnitude());
  return m;
}

bool same_poly(const Poly& a, const Poly& b, const Scalar& like, double scale) {
  int d = std::max(a.degree(), b.degree());
  for (int k = 0; k <= d; ++k) {
    const Scalar x = a.coeff(k, like), y = b.coeff(k, like);
    if (x.is_exact() && y.is_exact() ? x != y
                                     : !negligible(x.in_mode(Mode::floating) - y.in_mode(Mode::floating), scale,
                                                   kFloatTol))
      return false;
  }
  return true;
}

// Float comparisons are relative to the largest coefficient of either operator.
bool same_equation(const QDifferenceEquation& a, const QDifferenceEquation& b) {
  Scalar like = a.ctx.zero();
  double s = coeff_scale({&a.u, &a.v, &a.w, &b.u, &b.v, &b.w});
  return same_poly(a.u, b.u, like, s) && same_poly(a.v, b.v, like, s) && same_poly(a.w, b.w, like, s);
}

Scalar fl(HalfInt h) { return Scalar::floating(h.value()); }
Scalar fl(const Scalar& s) { return s.in_mode(Mode::floating); }

// Coefficient-wise affine interpolation f(T) = f0 + T f1 from samples at T = 1, 2, 3.
struct Affine {
  Poly f0, f1;
  bool linear;
};
Affine affine_fit(const Poly& a1, const Poly& a2, const Poly& a3, const Scalar& like) {
  Scalar two = like.one_like() + like.one_like();
  Poly second = a3 - a2 * two + a1;
  Affine r{a1 * two - a2, a2 - a1, true};
  double scale = coeff_scale({&a1, &a2, &a3});
  for (const auto& c : second.coeffs())
    if (!negligible(c, scale, kFloatTol)) r.linear = false;
  return r;
}

Poly divide_by_x(const Poly& p, const Scalar& like) {
  if (!p.is_zero() && !negligible(p.coeff(0, like), coeff_scale({&p}), kFloatTol))
    throw DomainError("limit equation is not divisible by x");
  if (p.degree() < 1) return Poly();
  return Poly(std::vector<Scalar>(p.coeffs().begin() + 1, p.coeffs().end()));
}

formulas::Deg3<RatFunc> symbolic_t3(const QContext& ctx, const Params3& p3) {
  return {p3.h, p3.l, p3.alpha, {RatFunc(ctx.lift(p3.t[0])), RatFunc(ctx.lift(p3.t[1])), RatFunc::variable(ctx.one())}};
}

formulas::Deg2<RatFunc> symbolic_t2(const QContext& ctx, const Params2& p2) {
  return {p2.h, p2.l, p2.alpha1, p2.alpha2, {RatFunc(ctx.lift(p2.t[0])), RatFunc::variable(ctx.one())}};
}

formulas::Deg2<Scalar> numeric(const QContext& ctx, const Params2& p2) {
  return {p2.h, p2.l, p2.alpha1, p2.alpha2, {ctx.lift(p2.t[0]), ctx.lift(p2.t[1])}};
}

// Behaviour of (d/x;q)_n or (x/d;q)_n as d -> infinity resp. 0: (-r)^n q^{n(n-1)/2}.
Scalar collapse(const QContext& ctx, const Scalar& r, int n) {
  return (-r).pow(n) * qpow_int(ctx, static_cast<long>(n) * (n - 1) / 2);
}

void check_supported(ConjFamily family, const Permutation& perm) {
  bool ok12 = perm == Permutation{0, 1, 2} || perm == Permutation{1, 0, 2};
  bool ok3 = family == ConjFamily::II && (perm == Permutation{2, 0, 1} || perm == Permutation{2, 1, 0});
  if (!ok12 && !ok3) throw DomainError("no limit display for this family and permutation");
}

std::string perm_label(int i) { return i == 0 ? "(1,2)" : "(2,1)"; }

}  // namespace

// ---- t3 -> infinity

Params2 degenerate_deg3_to_deg2(const Params3& p3) {
  Params2 p2;
  for (int k = 0; k < 2; ++k) {
    p2.h[k] = p3.h[k];
    p2.l[k] = p3.l[k];
    p2.t[k] = p3.t[k];
  }
  p2.alpha1 = p3.alpha;
  p2.alpha2 = p3.alpha - p3.h[2] + p3.l[2];
  return p2;
}

OperatorLimit deg3_to_deg2_operator_limit(const QContext& ctx, const Params3& p3) {
  std::array<QDifferenceEquation, 3> eqs{make_variant_deg3(ctx, {p3.h, p3.l, p3.alpha, {p3.t[0], p3.t[1], ctx.integer(1)}}),
                                         make_variant_deg3(ctx, {p3.h, p3.l, p3.alpha, {p3.t[0], p3.t[1], ctx.integer(2)}}),
                                         make_variant_deg3(ctx, {p3.h, p3.l, p3.alpha, {p3.t[0], p3.t[1], ctx.integer(3)}})};
  Scalar like = ctx.zero();
  auto fu = affine_fit(eqs[0].u, eqs[1].u, eqs[2].u, like);
  auto fv = affine_fit(eqs[0].v, eqs[1].v, eqs[2].v, like);
  auto fw = affine_fit(eqs[0].w, eqs[1].w, eqs[2].w, like);
  Scalar k = (-qpow(ctx, p3.h[2] + HalfInt::half)).inverse();
  OperatorLimit out{QDifferenceEquation{ctx, fu.f1 * k, fv.f1 * k, fw.f1 * k},
                    make_variant_deg2(ctx, degenerate_deg3_to_deg2(p3)), fu.linear && fv.linear && fw.linear, false};
  out.matches = out.linear && same_equation(out.limit, out.expected);
  return out;
}

double fit_loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 2) throw DomainError("slope fit needs at least two samples");
  double n = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (ys[k] <= 0) return std::numeric_limits<double>::infinity();  // exact hit
    double lx = std::log(xs[k]), ly = std::log(ys[k]);
    n += 1;
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::string LimitReport::csv() const {
  std::ostringstream os;
  os.precision(12);
  os << parameter << ",gap,slope\n";
  for (std::size_t k = 0; k < values.size(); ++k) os << values[k] << "," << gaps[k] << "," << slope << "\n";
  return os.str();
}

namespace {
LimitReport finish(std::string parameter, std::vector<double> values, std::vector<double> gaps) {
  LimitReport r;
  r.parameter = std::move(parameter);
  r.values = std::move(values);
  r.gaps = std::move(gaps);
  r.slope = fit_loglog_slope(r.values, r.gaps);
  r.monotone = true;
  for (std::size_t k = 1; k < r.gaps.size(); ++k)
    if (!(r.gaps[k] < r.gaps[k - 1])) r.monotone = false;
  return r;
}
}  // namespace

LimitReport deg3_operator_gap(const QContext& ctx, const Params3& p3, const std::vector<int>& ks) {
  Params2 p2 = degenerate_deg3_to_deg2(p3);
  p2.t = {ctx.lift(p2.t[0]), ctx.lift(p2.t[1])};
  auto e2 = make_variant_deg2(ctx, p2);
  Scalar like = ctx.zero();
  std::vector<double> vals, gaps;
  for (int k : ks) {
    Scalar t3 = ctx.integer(10).pow(k);
    auto e3 = make_variant_deg3(ctx, {p3.h, p3.l, p3.alpha, {ctx.lift(p3.t[0]), ctx.lift(p3.t[1]), t3}});
    Scalar s = (-qpow(ctx, p3.h[2] + HalfInt::half) * t3).inverse();
    double gap = 0;
    for (auto [a, b] : {std::pair{&e3.u, &e2.u}, {&e3.v, &e2.v}, {&e3.w, &e2.w}}) {
      int d = std::max(a->degree(), b->degree());
      for (int j = 0; j <= d; ++j) gap = std::max(gap, (a->coeff(j, like) * s - b->coeff(j, like)).magnitude());
    }
    vals.push_back(1.0 / t3.magnitude());
    gaps.push_back(gap);
  }
  return finish("1/t3", vals, gaps);
}

std::vector<Scalar> printed_limit_conj_one(const QContext& ctx, const Params3& p3, int i, int N) {
  int j = 1 - i;
  HalfInt nu = p3.nu();
  auto A = formulas::scalar_poch(ctx, qpow(ctx, nu), N);
  auto B = formulas::scalar_poch(ctx, qpow(ctx, nu - p3.h[2] + p3.l[2]), N);
  auto D = formulas::scalar_poch(ctx, qpow(ctx, p3.h[j] - p3.l[i] + 1) * ctx.lift(p3.t[j]) / ctx.lift(p3.t[i]), N);
  auto Qq = formulas::scalar_poch(ctx, ctx.q(), N);
  auto H = formulas::scalar_poch(ctx, qpow(ctx, p3.h[i] - p3.l[i] + 1), N);
  std::vector<Scalar> out;
  for (int n = 0; n <= N; ++n) out.push_back(qpow_int(ctx, n) * A[n] * B[n] / (D[n] * Qq[n] * H[n]));
  return out;
}

std::vector<Scalar> printed_limit_conj_two(const QContext& ctx, const Params3& p3, int i, int N) {
  int j = 1 - i;
  HalfInt nu = p3.nu();
  Scalar r = ctx.lift(p3.t[i]) / ctx.lift(p3.t[j]);
  auto A = formulas::scalar_poch(ctx, qpow(ctx, nu), N);
  auto D = formulas::scalar_poch(ctx, qpow(ctx, p3.h[i] - p3.l[j] + 1) * r, N);
  auto B = formulas::scalar_poch(ctx, qpow(ctx, nu - p3.h[j] + p3.l[j]), N);
  auto H = formulas::scalar_poch(ctx, qpow(ctx, p3.h[i] - p3.l[i] + 1), N);
  auto Qq = formulas::scalar_poch(ctx, ctx.q(), N);
  Scalar X = -qpow(ctx, p3.h[i] - p3.l[j]) * r;
  std::vector<Scalar> out;
  for (int n = 0; n <= N; ++n) {
    Scalar s = ctx.zero();
    for (int k = 0; k <= n; ++k)
      s += qpow_int(ctx, static_cast<long>(k) * (k + 1) / 2) * B[k] / (Qq[n - k] * Qq[k] * H[k]) * X.pow(k);
    out.push_back(qpow_int(ctx, n) * A[n] / D[n] * s);
  }
  return out;
}

std::vector<Scalar> printed_limit_conj_two_third(const QContext& ctx, const Params3& p3, bool swap12, int N) {
  int i1 = swap12 ? 1 : 0, i2 = 1 - i1;
  HalfInt nu = p3.nu();
  auto A = formulas::scalar_poch(ctx, qpow(ctx, nu), N);
  auto H = formulas::scalar_poch(ctx, qpow(ctx, p3.h[2] - p3.l[2] + 1), N);
  auto B1 = formulas::scalar_poch(ctx, qpow(ctx, nu - p3.h[i1] + p3.l[i1]), N);
  auto B2 = formulas::scalar_poch(ctx, qpow(ctx, nu - p3.h[i2] + p3.l[i2]), N);
  auto Qq = formulas::scalar_poch(ctx, ctx.q(), N);
  Scalar y1 = qpow(ctx, p3.l[i1]) * ctx.lift(p3.t[i1]), y2 = qpow(ctx, p3.l[i2]) * ctx.lift(p3.t[i2]);
  std::vector<Scalar> out;
  for (int n = 0; n <= N; ++n) {
    Scalar s = ctx.zero();
    for (int k = 0; k <= n; ++k) s += B1[n - k] * B2[k] / (Qq[k] * Qq[n - k]) * y1.pow(k) * y2.pow(n - k);
    out.push_back(ctx.p().pow(n) * A[n] / H[n] * s);
  }
  return out;
}

CoefficientLimit conj_leading_terms(const QContext& ctx, const Params3& p3, ConjFamily family,
                                    const Permutation& perm, int N) {
  check_supported(family, perm);
  if (N < 0) throw DomainError("truncation must be >= 0");
  auto c = formulas::conj(ctx, symbolic_t3(ctx, p3), family == ConjFamily::I, perm, N);
  Params2 p2 = degenerate_deg3_to_deg2(p3);
  auto d2 = numeric(ctx, p2);
  CoefficientLimit out;
  int i = perm[0];
  if (family == ConjFamily::II && i == 2) {
    RatFunc r = RatFunc::variable(qpow(ctx, p3.h[2] + HalfInt::half));
    for (int n = 0; n <= N; ++n) {
      RatFunc scale = formulas::ipow(ctx, -r, n) * RatFunc(qpow_int(ctx, static_cast<long>(n) * (n - 1) / 2));
      out.extracted.push_back((c[n] * scale).limit_infinity());
    }
    out.target = "g1";
    out.printed = printed_limit_conj_two_third(ctx, p3, perm[1] == 1, N);
    out.closed_form = formulas::g1(ctx, d2, N);
  } else {
    for (int n = 0; n <= N; ++n) out.extracted.push_back(c[n].limit_infinity());
    if (family == ConjFamily::I) {
      out.target = "g2 " + perm_label(i);
      out.printed = printed_limit_conj_one(ctx, p3, i, N);
      out.closed_form = formulas::g2(ctx, d2, i, N);
    } else {
      out.target = "g3 " + perm_label(i);
      out.printed = printed_limit_conj_two(ctx, p3, i, N);
      out.closed_form = formulas::g3(ctx, d2, i, N);
    }
  }
  out.matches_printed = same_vector(out.extracted, out.printed);
  out.matches_closed_form = same_vector(out.extracted, out.closed_form);
  return out;
}

LimitReport limit_conj_coeffs(const QContext& ctx, const Params3& p3, ConjFamily family, const Permutation& perm,
                              int N, const std::vector<int>& ks) {
  check_supported(family, perm);
  int i = perm[0];
  bool third = family == ConjFamily::II && i == 2;
  std::vector<Scalar> target = family == ConjFamily::I ? printed_limit_conj_one(ctx, p3, i, N)
                               : third                  ? printed_limit_conj_two_third(ctx, p3, perm[1] == 1, N)
                                                        : printed_limit_conj_two(ctx, p3, i, N);
  std::vector<double> vals, gaps;
  for (int k : ks) {
    Scalar t3 = ctx.integer(10).pow(k);
    formulas::Deg3<Scalar> P{p3.h, p3.l, p3.alpha, {ctx.lift(p3.t[0]), ctx.lift(p3.t[1]), t3}};
    auto c = formulas::conj(ctx, P, family == ConjFamily::I, perm, N);
    double gap = 0;
    for (int n = 0; n <= N; ++n) {
      Scalar v = third ? c[n] * collapse(ctx, qpow(ctx, p3.h[2] + HalfInt::half) * t3, n) : c[n];
      gap = std::max(gap, (v - target[n]).magnitude() / std::max(1.0, target[n].magnitude()));
    }
    vals.push_back(1.0 / t3.magnitude());
    gaps.push_back(gap);
  }
  return finish("1/t3", vals, gaps);
}

// ---- t2 -> 0

bool satisfies_restriction(const QContext& ctx, const Params2& p2) {
  return ctx.lift(p2.t[0]).is_one() && p2.h[0] == HalfInt::half &&
         p2.h[1] - p2.l[1] == p2.alpha1 + p2.alpha2 + p2.l[0] - HalfInt::from_twice(3);
}

QhypLimit degenerate_deg2_to_qhyp(const QContext& ctx, const Params2& p2) {
  Scalar like = ctx.zero();
  std::array<QDifferenceEquation, 3> eqs{make_variant_deg2(ctx, {p2.h, p2.l, p2.alpha1, p2.alpha2, {p2.t[0], ctx.integer(1)}}),
                                         make_variant_deg2(ctx, {p2.h, p2.l, p2.alpha1, p2.alpha2, {p2.t[0], ctx.integer(2)}}),
                                         make_variant_deg2(ctx, {p2.h, p2.l, p2.alpha1, p2.alpha2, {p2.t[0], ctx.integer(3)}})};
  auto fu = affine_fit(eqs[0].u, eqs[1].u, eqs[2].u, like);
  auto fv = affine_fit(eqs[0].v, eqs[1].v, eqs[2].v, like);
  auto fw = affine_fit(eqs[0].w, eqs[1].w, eqs[2].w, like);
  if (!fu.linear || !fv.linear || !fw.linear) throw DomainError("degree-two variant is not affine in t2");
  Scalar t1 = ctx.lift(p2.t[0]);
  const HalfInt half = HalfInt::half;
  Scalar pp = qpow_half(ctx, p2.h[0] + p2.h[1] + p2.l[0] + p2.l[1] + p2.alpha1 + p2.alpha2);
  QhypLimit out{
      QDifferenceEquation{ctx, divide_by_x(fu.f0, like), divide_by_x(fv.f0, like), divide_by_x(fw.f0, like)},
      QDifferenceEquation{ctx, Poly::linear_root(qpow(ctx, p2.h[0] + half) * t1),
                          Poly({pp * (qpow(ctx, -p2.h[1]) + qpow(ctx, -p2.l[1])) * t1,
                                -(qpow(ctx, p2.alpha1) + qpow(ctx, p2.alpha2))}),
                          Poly::linear_root(qpow(ctx, p2.l[0] - half) * t1) * qpow(ctx, p2.alpha1 + p2.alpha2)},
      false, false, std::nullopt, std::nullopt, ""};
  out.matches_printed = same_equation(out.limit, out.printed);
  out.restriction_applies = satisfies_restriction(ctx, p2);
  if (!out.restriction_applies) {
    out.note = "restriction t1 = 1, h1 = 1/2, h2 - l2 = alpha1 + alpha2 + l1 - 3/2 not met; comparison skipped";
    return out;
  }
  std::array<Scalar, 3> abc{qpow(ctx, p2.alpha1), qpow(ctx, p2.alpha2),
                            qpow(ctx, p2.alpha1 + p2.alpha2 + p2.l[0] - half)};
  out.abc = abc;
  out.matches_qhyp = same_equation(out.limit, make_qhypergeometric(ctx, abc[0], abc[1], abc[2]));
  out.note = "lambda = " + p2.lambda().str();
  return out;
}

const char* deg2_solution_name(Deg2Solution s) {
  switch (s) {
    case Deg2Solution::g1: return "g1";
    case Deg2Solution::g2_12: return "g2 (1,2)";
    case Deg2Solution::g2_21: return "g2 (2,1)";
    case Deg2Solution::g3_12: return "g3 (1,2)";
  }
  return "?";
}

SolutionLimit deg2_solution_limit(const QContext& ctx, const Params2& p2, Deg2Solution which, int N) {
  if (N < 0) throw DomainError("truncation must be >= 0");
  auto P = symbolic_t2(ctx, p2);
  HalfInt lam = p2.lambda();
  Scalar t1 = ctx.lift(p2.t[0]);
  const HalfInt half = HalfInt::half;
  auto A1 = formulas::scalar_poch(ctx, qpow(ctx, lam + p2.alpha1), N);
  auto A2 = formulas::scalar_poch(ctx, qpow(ctx, lam + p2.alpha2), N);
  auto Qq = formulas::scalar_poch(ctx, ctx.q(), N);
  SolutionLimit out;
  out.which = which;

  QhypLimit eq = degenerate_deg2_to_qhyp(ctx, p2);
  const auto& L = eq.limit;
  auto interior_zero = [&](const std::vector<Scalar>& r, double scale) {
    for (int n = 0; n <= N && n < static_cast<int>(r.size()); ++n)
      if (!negligible(r[n], scale, kFloatTol)) return false;
    return true;
  };
  auto scale_of = [](const std::vector<Scalar>& c) {
    double s = 1;
    for (const auto& v : c) s = std::max(s, v.magnitude());
    return s;
  };

  switch (which) {
    case Deg2Solution::g1: {
      auto c = formulas::g1(ctx, P, N);
      for (auto& v : c) out.extracted.push_back(v.limit_zero());
      auto B = formulas::scalar_poch(ctx, qpow(ctx, lam + p2.alpha1 - p2.h[1] + p2.l[1]), N);
      auto D = formulas::scalar_poch(ctx, qpow(ctx, p2.alpha1 - p2.alpha2 + 1), N);
      Scalar y = qpow(ctx, p2.l[0] + half) * t1;
      for (int n = 0; n <= N; ++n) out.printed.push_back(A1[n] * B[n] / (D[n] * Qq[n]) * y.pow(n));
      PowerSeriesSolution s{Anchor::infinity, p2.alpha1, qpow(ctx, p2.alpha1), out.extracted};
      out.solves_limit_equation = interior_zero(series_residual(L, s), scale_of(out.extracted));
      if (eq.abc)
        out.matches_qhyp = same_vector(out.extracted, qhyp_infinity_coeffs(ctx, (*eq.abc)[0], (*eq.abc)[1], (*eq.abc)[2], N));
      break;
    }
    case Deg2Solution::g2_12: {
      auto c = formulas::g2(ctx, P, 0, N);
      for (auto& v : c) out.extracted.push_back(v.limit_zero());
      auto H = formulas::scalar_poch(ctx, qpow(ctx, p2.h[0] - p2.l[0] + 1), N);
      for (int n = 0; n <= N; ++n) out.printed.push_back(A1[n] * A2[n] / (H[n] * Qq[n]) * qpow_int(ctx, n));
      PochhammerSeries s{lam, qpow(ctx, p2.l[0] - half) * t1, Orientation::ascending, out.extracted};
      out.solves_limit_equation = verify_pochhammer_solution(L, s, kFloatTol).passed;
      if (eq.abc) {
        auto h = hahn_series(ctx, (*eq.abc)[0], (*eq.abc)[1], (*eq.abc)[2], N);
        out.matches_qhyp = same_vector(out.extracted, h.coeffs) && same_scalar(h.node, s.node);
      }
      break;
    }
    case Deg2Solution::g2_21: {
      auto c = formulas::g2(ctx, P, 1, N);
      // (x/(q^{l2-1/2} t2);q)_n collapses to a monomial as t2 -> 0
      Scalar k = -qpow(ctx, p2.l[1] - half).inverse();
      for (int n = 0; n <= N; ++n) {
        RatFunc scale = RatFunc(k.pow(n) * qpow_int(ctx, static_cast<long>(n) * (n - 1) / 2)).times_power(-n);
        out.extracted.push_back((c[n] * scale).limit_zero());
      }
      auto H = formulas::scalar_poch(ctx, qpow(ctx, p2.h[1] - p2.l[1] + 1), N);
      Scalar y = (qpow(ctx, p2.h[0] - half) * t1).inverse();
      for (int n = 0; n <= N; ++n) out.printed.push_back(A1[n] * A2[n] / (H[n] * Qq[n]) * y.pow(n));
      auto r = series_residual(L, qpow(ctx, lam), out.extracted);
      out.solves_limit_equation = interior_zero(r, scale_of(out.extracted));
      if (eq.abc) out.matches_qhyp = same_vector(out.extracted, phi21_coeffs(ctx, (*eq.abc)[0], (*eq.abc)[1], (*eq.abc)[2], N));
      break;
    }
    case Deg2Solution::g3_12: {
      auto c = formulas::g3(ctx, P, 0, N);
      for (auto& v : c) out.extracted.push_back(v.limit_zero());
      auto B = formulas::scalar_poch(ctx, qpow(ctx, lam + p2.alpha1 - p2.h[1] + p2.l[1]), N);
      auto H = formulas::scalar_poch(ctx, qpow(ctx, p2.h[0] - p2.l[0] + 1), N);
      for (int n = 0; n <= N; ++n) out.printed.push_back(A1[n] * B[n] / (H[n] * Qq[n]) * qpow_int(ctx, n));
      PochhammerSeries s{-p2.alpha1, qpow(ctx, p2.h[0] + half) * t1, Orientation::descending, out.extracted};
      out.solves_limit_equation = verify_pochhammer_solution(L, s, kFloatTol).passed;
      break;
    }
  }
  out.matches_printed = same_vector(out.extracted, out.printed);
  return out;
}

// ---- q -> 1

Scalar OdeSpec::apply(const Poly& f, const Scalar& x) const {
  Poly d1 = f.derivative(), d2 = d1.derivative();
  return p2(x) * d2(x) + p1(x) * d1(x) + p0(x) * f(x);
}

namespace {

Poly xpoly() { return Poly::monomial(Scalar::floating(1.0), 1); }

void finish_scheme(OdeSpec& s) {
  HalfInt sum = 0;
  for (const auto& e : s.riemann_scheme) sum += e.exponents[0] + e.exponents[1];
  s.fuchs_sum = sum;
  s.fuchs_expected = static_cast<int>(s.riemann_scheme.size()) - 2;
}

template <std::size_t K>
void require_distinct(const std::array<Scalar, K>& t) {
  for (std::size_t a = 0; a < K; ++a)
    for (std::size_t b = a + 1; b < K; ++b)
      if (same_scalar(t[a], t[b]))
        throw DomainError("confluent singular points t" + std::to_string(a + 1) + " = t" + std::to_string(b + 1));
}

}  // namespace

OdeSpec continuum_ode_deg2(const Params2& p) {
  std::array<Scalar, 2> t{fl(p.t[0]), fl(p.t[1])};
  for (const auto& v : t)
    if (v.is_zero()) throw DomainError("t must be nonzero");
  require_distinct(t);
  HalfInt lam = p.lambda();
  Poly x = xpoly(), X1 = Poly::linear_root(t[0]), X2 = Poly::linear_root(t[1]);
  Scalar L = fl(lam);
  OdeSpec s;
  s.p2 = x * x * X1 * X2;
  s.p1 = x * (x * X1 * fl(p.h[1] - p.l[1] + 1) + x * X2 * fl(p.h[0] - p.l[0] + 1) - X1 * X2 * (L + L));
  Scalar Bt = -L * fl(lam - p.h[1] + p.l[1]) * t[0] - L * fl(lam - p.h[0] + p.l[0]) * t[1];
  s.p0 = Poly({t[0] * t[1] * L * fl(lam + 1), Bt, fl(p.alpha1) * fl(p.alpha2)});
  s.riemann_scheme = {{"0", Scalar::floating(0), {lam, lam + 1}},
                      {"t1", t[0], {0, p.l[0] - p.h[0]}},
                      {"t2", t[1], {0, p.l[1] - p.h[1]}},
                      {"inf", std::nullopt, {p.alpha1, p.alpha2}}};
  finish_scheme(s);
  s.gauss = {lam + p.alpha1, lam + p.alpha2, p.h[0] - p.l[0] + 1, "g = x^lambda F(z), z = (x - t1)/(t2 - t1)"};
  return s;
}

OdeSpec continuum_ode_deg3(const Params3& p, bool printed_btilde) {
  std::array<Scalar, 3> t{fl(p.t[0]), fl(p.t[1]), fl(p.t[2])};
  for (const auto& v : t)
    if (v.is_zero()) throw DomainError("t must be nonzero");
  require_distinct(t);
  HalfInt nu = p.nu(), m = nu - p.alpha;
  Poly x = xpoly();
  std::array<Poly, 3> X{Poly::linear_root(t[0]), Poly::linear_root(t[1]), Poly::linear_root(t[2])};
  Poly prod = X[0] * X[1] * X[2];
  OdeSpec s;
  s.p2 = x * x * prod;
  Poly sum;
  for (int i = 0; i < 3; ++i) sum = sum + X[(i + 1) % 3] * X[(i + 2) % 3] * fl(p.h[i] - p.l[i] + 1);
  s.p1 = x * x * sum - x * prod * fl(m * 2);
  Scalar a = fl(p.alpha), M = fl(m);
  Scalar c2 = Scalar::floating(0);
  for (int i = 0; i < 3; ++i) c2 += fl(p.l[i] - p.h[i] + p.alpha) * t[i];
  Scalar kappa = printed_btilde ? Scalar::floating(m.value() + 0.5) : M;
  Scalar Bt = kappa * (fl(m - p.h[0] + p.l[0]) * t[1] * t[2] + fl(m - p.h[1] + p.l[1]) * t[2] * t[0] +
                       fl(m - p.h[2] + p.l[2]) * t[0] * t[1]);
  s.p0 = Poly({-t[0] * t[1] * t[2] * M * fl(m + 1), Bt, -a * c2, a * fl(p.alpha + 1)});
  s.riemann_scheme = {{"0", Scalar::floating(0), {m, m + 1}},
                      {"t1", t[0], {0, p.l[0] - p.h[0]}},
                      {"t2", t[1], {0, p.l[1] - p.h[1]}},
                      {"t3", t[2], {0, p.l[2] - p.h[2]}},
                      {"inf", std::nullopt, {p.alpha, p.alpha + 1}}};
  finish_scheme(s);
  s.gauss = {nu, nu - p.h[1] + p.l[1], p.h[0] - p.l[0] + 1,
             "g = x^(nu-alpha) (x - t2)^(-nu) F(z), z = (x - t1)(t3 - t2)/((x - t2)(t3 - t1))"};
  return s;
}

namespace {

// z(x), z'(x), z''(x) and the log-derivative L, L' of the prefactor
struct Jet {
  Scalar z, z1, z2, L, L1;
};

double gauss_defect(const OdeSpec& s, const std::function<Jet(const Scalar&)>& jet) {
  Scalar a = fl(s.gauss.a), b = fl(s.gauss.b), c = fl(s.gauss.c), one = Scalar::floating(1);
  double worst = 0;
  for (auto x : {Scalar::floating(0.37, 0.21), Scalar::floating(-1.3, 0.6), Scalar::floating(2.9, -0.4)}) {
    Jet J = jet(x);
    for (auto [F0, F1] : {std::pair{one, Scalar::floating(0)}, {Scalar::floating(0), one}}) {
      Scalar F2 = (-(c - (a + b + one) * J.z) * F1 + a * b * F0) / (J.z * (one - J.z));
      Scalar Fx = F1 * J.z1, Fxx = F2 * J.z1 * J.z1 + F1 * J.z2;
      Scalar g0 = F0, g1 = J.L * F0 + Fx, g2 = (J.L1 + J.L * J.L) * F0 + J.L * Fx * Scalar::floating(2) + Fxx;
      Scalar t2 = s.p2(x) * g2, t1 = s.p1(x) * g1, t0 = s.p0(x) * g0;
      double scale = std::max({t2.magnitude(), t1.magnitude(), t0.magnitude(), 1e-300});
      worst = std::max(worst, (t2 + t1 + t0).magnitude() / scale);
    }
  }
  return worst;
}

}  // namespace

double gauss_reduction_defect_deg2(const Params2& p) {
  OdeSpec s = continuum_ode_deg2(p);
  Scalar t1 = fl(p.t[0]), t2 = fl(p.t[1]), lam = fl(p.lambda());
  return gauss_defect(s, [&](const Scalar& x) {
    return Jet{(x - t1) / (t2 - t1), (t2 - t1).inverse(), Scalar::floating(0), lam / x, -lam / (x * x)};
  });
}

double gauss_reduction_defect_deg3(const Params3& p, bool printed_btilde) {
  OdeSpec s = continuum_ode_deg3(p, printed_btilde);
  Scalar t1 = fl(p.t[0]), t2 = fl(p.t[1]), t3 = fl(p.t[2]);
  Scalar nu = fl(p.nu()), m = fl(p.nu() - p.alpha), K = (t3 - t2) / (t3 - t1);
  return gauss_defect(s, [&](const Scalar& x) {
    Scalar d = x - t2;
    return Jet{K * (x - t1) / d, K * (t1 - t2) / (d * d), -(K * (t1 - t2) / (d * d * d)) * Scalar::floating(2),
               m / x - nu / d, -m / (x * x) + nu / (d * d)};
  });
}

LimitReport continuum_residual_scaling(const EquationBuilder& build, const OdeSpec& ode, const Poly& testfn,
                                       const std::vector<double>& epsilons) {
  if (testfn.degree() > 8) throw DomainError("test polynomial degree must be <= 8");
  std::vector<double> gaps;
  for (double eps : epsilons) {
    if (!(eps > 0 && eps <= 0.1)) throw DomainError("epsilon must lie in (0, 0.1]");
    QContext ctx = QContext::floating(std::complex<double>(std::sqrt(1.0 + eps), 0.0));
    QDifferenceEquation eq = build(ctx);
    Poly f = testfn;
    ScalarFn fn = [&f](const Scalar& x) { return f(x); };
    Scalar inv = Scalar::floating(1.0 / (eps * eps));
    double gap = 0;
    for (int k = 0; k < 10; ++k) {
      Scalar x = Scalar::floating(0.25 + 0.35 * k);
      gap = std::max(gap, (apply(eq, fn, x) * inv - ode.apply(f, x)).magnitude());
    }
    gaps.push_back(gap);
  }
  return finish("eps", epsilons, gaps);
}

namespace {
Params2 lifted(const QContext& ctx, Params2 p) {
  for (auto& t : p.t) t = ctx.lift(t);
  return p;
}
Params3 lifted(const QContext& ctx, Params3 p) {
  for (auto& t : p.t) t = ctx.lift(t);
  return p;
}
}  // namespace

LimitReport continuum_scaling_deg2(const Params2& p2, const Poly& testfn, const std::vector<double>& epsilons) {
  return continuum_residual_scaling([&](const QContext& ctx) { return make_variant_deg2(ctx, lifted(ctx, p2)); },
                                    continuum_ode_deg2(p2), testfn, epsilons);
}

LimitReport continuum_scaling_deg3(const Params3& p3, const Poly& testfn, const std::vector<double>& epsilons,
                                   bool printed_btilde) {
  return continuum_residual_scaling([&](const QContext& ctx) { return make_variant_deg3(ctx, lifted(ctx, p3)); },
                                    continuum_ode_deg3(p3, printed_btilde), testfn, epsilons);
}

Poly default_test_polynomial() {
  std::vector<Scalar> c;
  for (double v : {1.0, 2.0, -1.0, 0.5, 0.25, -0.125, 0.0625}) c.push_back(Scalar::floating(v));
  return Poly(c);
}

}  // namespace qvariant
