#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qvariant/closedform.hpp"
#include "qvariant/qdiff.hpp"

namespace qvariant {

// ---- t3 -> infinity

// (h, l, t) of indices 1, 2 carried over; alpha1 = alpha, alpha2 = alpha - h3 + l3.
Params2 degenerate_deg3_to_deg2(const Params3& p3);

struct OperatorLimit {
  QDifferenceEquation limit;     // extracted by exact leading-term extraction
  QDifferenceEquation expected;  // variant of degree two at the degenerate parameters
  bool linear = false;           // every coefficient is affine in t3
  bool matches = false;
};
// Leading t3 coefficient of the degree-three operator divided by -q^{h3+1/2}.
OperatorLimit deg3_to_deg2_operator_limit(const QContext& ctx, const Params3& p3);

// Sampled gap of a limit, with the fitted log-log slope of gap against `values`.
struct LimitReport {
  std::string parameter;
  std::vector<double> values;
  std::vector<double> gaps;
  double slope = 0;
  bool monotone = false;
  std::string csv() const;
};
double fit_loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys);

// Float-mode gap between the degree-three operator divided by -q^{h3+1/2} t3
// and the degree-two operator, over t3 = 10^k.
LimitReport deg3_operator_gap(const QContext& ctx, const Params3& p3, const std::vector<int>& ks);

// Exact leading terms of the conjectural coefficients as t3 -> infinity.
// Supported: family I with perm (1,2,3), (2,1,3); family II with (1,2,3),
// (2,1,3), (3,1,2), (3,2,1) (1-based).
struct CoefficientLimit {
  std::string target;              // which degree-two solution the limit should be
  std::vector<Scalar> extracted;   // exact limits
  std::vector<Scalar> printed;     // the displayed limit formula
  std::vector<Scalar> closed_form; // the degree-two closed-form coefficients
  bool matches_printed = false;
  bool matches_closed_form = false;
};
CoefficientLimit conj_leading_terms(const QContext& ctx, const Params3& p3, ConjFamily family,
                                    const Permutation& perm, int N);
// Float-mode rate fit of the same limit at t3 = 10^k.
LimitReport limit_conj_coeffs(const QContext& ctx, const Params3& p3, ConjFamily family, const Permutation& perm,
                              int N, const std::vector<int>& ks = {2, 3, 4, 5, 6});

// Displayed limit formulas, with (i, j) = (perm[0], perm[1]) 0-based.
std::vector<Scalar> printed_limit_conj_one(const QContext& ctx, const Params3& p3, int i, int N);
std::vector<Scalar> printed_limit_conj_two(const QContext& ctx, const Params3& p3, int i, int N);
// Family II with perm[0] = 3: coefficients of x^{-alpha-n}.
std::vector<Scalar> printed_limit_conj_two_third(const QContext& ctx, const Params3& p3, bool swap12, int N);

// ---- t2 -> 0

struct QhypLimit {
  QDifferenceEquation limit;    // t2 = 0 in the degree-two variant, divided by x
  QDifferenceEquation printed;  // the displayed first-degree equation
  bool matches_printed = false;
  bool restriction_applies = false;
  std::optional<std::array<Scalar, 3>> abc;  // (a, b, c) under the restriction
  std::optional<bool> matches_qhyp;
  std::string note;
};
QhypLimit degenerate_deg2_to_qhyp(const QContext& ctx, const Params2& p2);
// t1 = 1, h1 = 1/2, h2 - l2 = alpha1 + alpha2 + l1 - 3/2
bool satisfies_restriction(const QContext& ctx, const Params2& p2);

enum class Deg2Solution { g1, g2_12, g2_21, g3_12 };
const char* deg2_solution_name(Deg2Solution s);

struct SolutionLimit {
  Deg2Solution which;
  std::vector<Scalar> extracted;
  std::vector<Scalar> printed;
  bool matches_printed = false;
  // residual of the limit series against the first-degree equation
  bool solves_limit_equation = false;
  // comparison with the q-hypergeometric series under the restriction
  std::optional<bool> matches_qhyp;
};
SolutionLimit deg2_solution_limit(const QContext& ctx, const Params2& p2, Deg2Solution which, int N);

// ---- q -> 1

struct SchemeEntry {
  std::string point;  // "0", "t1", ..., "inf"
  std::optional<Scalar> location;
  std::array<HalfInt, 2> exponents;
};

struct GaussForm {
  HalfInt a, b, c;
  std::string substitution;
};

struct OdeSpec {
  Poly p2, p1, p0;  // p2 y'' + p1 y' + p0 y
  std::vector<SchemeEntry> riemann_scheme;
  HalfInt fuchs_sum;
  int fuchs_expected = 0;  // number of singular points minus two
  GaussForm gauss;
  Scalar apply(const Poly& f, const Scalar& x) const;
};
OdeSpec continuum_ode_deg2(const Params2& p2);
// printed_btilde uses the prefactor (nu - alpha + 1/2) in B~ as displayed.
OdeSpec continuum_ode_deg3(const Params3& p3, bool printed_btilde = false);

// Largest |ODE residual| / scale of x^{mu} (x - t2)^{sigma} F(z) for a Gauss
// jet F at a few points; zero up to rounding when the reduction is right.
double gauss_reduction_defect_deg2(const Params2& p2);
double gauss_reduction_defect_deg3(const Params3& p3, bool printed_btilde = false);

using EquationBuilder = std::function<QDifferenceEquation(const QContext&)>;
// For each eps: q = 1 + eps, gap = max over a 10-point grid of
// |eps^{-2} (L_q f)(x) - (L_ode f)(x)|.
LimitReport continuum_residual_scaling(const EquationBuilder& build, const OdeSpec& ode, const Poly& testfn,
                                       const std::vector<double>& epsilons);
LimitReport continuum_scaling_deg2(const Params2& p2, const Poly& testfn, const std::vector<double>& epsilons);
LimitReport continuum_scaling_deg3(const Params3& p3, const Poly& testfn, const std::vector<double>& epsilons,
                                   bool printed_btilde = false);
// 1 + 2x - x^2 + ... fixed degree-six test polynomial (float mode).
Poly default_test_polynomial();

}  // namespace qvariant
