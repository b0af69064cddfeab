#pragma once

#include <array>
#include <vector>

#include "qvariant/frobenius.hpp"
#include "qvariant/qdiff.hpp"

namespace qvariant {

enum class Orientation { ascending, descending };
const char* orientation_name(Orientation o);

// x^mu sum a_n B_n(x) with B_n = (x/d;q)_n (ascending) or (d/x;q)_n (descending).
struct PochhammerSeries {
  HalfInt prefactor_exponent{};
  Scalar node;
  Orientation orientation = Orientation::ascending;
  std::vector<Scalar> coeffs;
};

enum class ConjFamily { I, II };
using Permutation = std::array<int, 3>;  // 0-based images of (i, i', i'')

// 2phi1 partial sum through n = N.
std::vector<Scalar> phi21_coeffs(const QContext& ctx, const Scalar& a, const Scalar& b, const Scalar& c, int N);
Scalar phi21(const QContext& ctx, const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& x, int N);

// Hahn's solution of the q-hypergeometric equation:
// sum (abx/c;q)_n (a;q)_n (b;q)_n q^n / ((abq/c;q)_n (q;q)_n).
PochhammerSeries hahn_series(const QContext& ctx, const Scalar& a, const Scalar& b, const Scalar& c, int N);
Scalar phi32_hahn(const QContext& ctx, const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& x, int N);

// Solution at infinity x^{-alpha} 2phi1(a, aq/c; aq/b; cq/(abx)) with a = q^alpha:
// the coefficients of x^{-n}.
std::vector<Scalar> qhyp_infinity_coeffs(const QContext& ctx, const Scalar& a, const Scalar& b, const Scalar& c,
                                         int N);

// Degree-two variant, solution at infinity with exponent alpha1.
PowerSeriesSolution g1_series(const QContext& ctx, const Params2& p2, int N);
// Ascending at q^{l_i-1/2} t_i, prefactor lambda. i is 1 or 2.
PochhammerSeries g2_series(const QContext& ctx, const Params2& p2, int i, int N);
// Descending at q^{h_i+1/2} t_i, prefactor -alpha1.
PochhammerSeries g3_series(const QContext& ctx, const Params2& p2, int i, int N);

// Conjectural solutions of the degree-three variant.
PochhammerSeries conj3_series(const QContext& ctx, const Params3& p3, ConjFamily family, const Permutation& perm,
                              int N);

// Coefficients beta_0..beta_{N+d} of eq applied to the truncated series,
// re-expanded in the series' own basis. `scale` is the largest term
// magnitude met (for float-mode relative tests).
struct BasisResidual {
  std::vector<Scalar> beta;
  double scale = 0;
};
BasisResidual pochhammer_residual(const QDifferenceEquation& eq, const PochhammerSeries& s);

struct ConjectureReport {
  Scalar max_interior_residual;  // largest |beta_n| over n <= N-1
  int orders_checked = 0;
  std::vector<int> support;  // orders with nonzero residual
  bool passed = false;
};
ConjectureReport verify_pochhammer_solution(const QDifferenceEquation& eq, const PochhammerSeries& s,
                                            double tol = 1e-10);
ConjectureReport verify_conjecture(const QContext& ctx, const Params3& p3, ConjFamily family,
                                   const Permutation& perm, int N, double tol = 1e-10);

// Six-term recurrence Q(a_{n+1}, a_n, a_{n-1}, a_{n-2}) on the g2 coefficients.
// If given, *scale is raised to the largest term magnitude in the sum.
Scalar recurrence_residual_thm2(const QContext& ctx, const Params2& p2, int i, int n, double* scale = nullptr);
// Recurrence Q~(n, k) on the inner coefficients c_{n,k} of g3.
Scalar recurrence_residual_thm3(const QContext& ctx, const Params2& p2, int i, int n, int k,
                                double* scale = nullptr);

// Finite basis sum expanded into monomials through order N; ascending gives
// powers of x at 0, descending powers of 1/x at infinity.
PowerSeriesSolution pochhammer_to_power(const QContext& ctx, const PochhammerSeries& s, int N);

// Evaluates the finite basis sum (without the x^mu prefactor).
Scalar evaluate_basis_sum(const QContext& ctx, const PochhammerSeries& s, const Scalar& x);

}  // namespace qvariant
