#pragma once

#include <map>
#include <utility>
#include <vector>

#include "qvariant/qdiff.hpp"

namespace qvariant {

struct AppellParams {
  Scalar a, b, bp, c;  // bp is b'
};

// F[m][n] for m + n <= M.
using CoeffGrid = std::vector<std::vector<Scalar>>;
CoeffGrid appell_coeffs(const QContext& ctx, const AppellParams& prm, int M);
Scalar phi1(const QContext& ctx, const AppellParams& prm, const Scalar& x1, const Scalar& x2, int M);

// Polynomial in x, y: (i, j) -> coefficient of x^i y^j.
class BivariatePoly {
 public:
  using Key = std::pair<int, int>;
  BivariatePoly() = default;
  static BivariatePoly constant(const Scalar& c);
  static BivariatePoly x(const Scalar& like);
  static BivariatePoly y(const Scalar& like);
  // cx x + cy y + c0
  static BivariatePoly affine(const Scalar& cx, const Scalar& cy, const Scalar& c0);

  const std::map<Key, Scalar>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  BivariatePoly operator+(const BivariatePoly& o) const;
  BivariatePoly operator-(const BivariatePoly& o) const;
  BivariatePoly operator*(const BivariatePoly& o) const;
  BivariatePoly operator*(const Scalar& s) const;
  bool operator==(const BivariatePoly& o) const;
  // P(sx x, sy y)
  BivariatePoly scaled(const Scalar& sx, const Scalar& sy) const;
  Scalar operator()(const Scalar& x, const Scalar& y) const;

 private:
  std::map<Key, Scalar> t_;
  void add(Key k, const Scalar& c);
};

// sum over shifts (i, j) of P_ij(x, y) f(q^i x, q^j y)
class BivariateOperator {
 public:
  using Shift = std::pair<int, int>;
  BivariateOperator() = default;
  BivariateOperator(const QContext& ctx, std::map<Shift, BivariatePoly> terms);

  const std::map<Shift, BivariatePoly>& terms() const { return t_; }
  BivariateOperator operator+(const BivariateOperator& o) const;
  BivariateOperator operator-(const BivariateOperator& o) const;
  BivariateOperator operator*(const Scalar& s) const;
  // left multiplication by a polynomial
  BivariateOperator times(const BivariatePoly& p) const;
  // (x, y) -> (qx, qy) applied to the whole relation
  BivariateOperator shifted_both() const;
  // x -> qx
  BivariateOperator shifted_x() const;
  bool operator==(const BivariateOperator& o) const;

  // Coefficient of x^m y^n in (op f) given the coefficient grid of f.
  Scalar slot(const CoeffGrid& F, int m, int n) const;
  // op applied to the monomial x^m y^n
  BivariatePoly monomial_action(int m, int n) const;
  // Largest (i + j) degree of the coefficient polynomials.
  int coefficient_degree() const;

 private:
  Scalar q_;
  std::map<Shift, BivariatePoly> t_;
  void prune();
};

// First and second contiguous relations.
BivariateOperator contiguous_x_operator(const QContext& ctx, const AppellParams& prm);
BivariateOperator contiguous_y_operator(const QContext& ctx, const AppellParams& prm);
// Second relation with x replaced by qx.
BivariateOperator contiguous_y_shifted_operator(const QContext& ctx, const AppellParams& prm);
// The two eliminations, written as "right side minus left side" of the displays.
BivariateOperator eliminated_e_operator(const QContext& ctx, const AppellParams& prm);
BivariateOperator eliminated_f_operator(const QContext& ctx, const AppellParams& prm);
BivariateOperator third_order_operator(const QContext& ctx, const AppellParams& prm);
// Second-order relation valid when c = b b'.
BivariateOperator second_order_operator(const QContext& ctx, const Scalar& a, const Scalar& b, const Scalar& bp);

std::pair<Scalar, Scalar> contiguous_residuals(const QContext& ctx, const AppellParams& prm, int m, int n);

struct SlotValue {
  int m, n;
  Scalar value;
};
struct SlotResidualReport {
  Scalar interior_max;    // largest |residual| over m + n <= M (exact there)
  int interior_slots = 0;
  bool interior_zero = true;
  std::vector<SlotValue> boundary;  // M < m + n <= M + deg, truncation artefacts
  Scalar pointwise;                 // operator on the truncated sum at (x, y)
};

SlotResidualReport operator_residual(const QContext& ctx, const BivariateOperator& op, const CoeffGrid& F, int M,
                                     const Scalar& x, const Scalar& y);
SlotResidualReport third_order_residual(const QContext& ctx, const AppellParams& prm, const Scalar& x,
                                        const Scalar& y, int M);
// Second-order relation applied to the series with the given c (c = bb' expected).
SlotResidualReport second_order_residual(const QContext& ctx, const AppellParams& prm, const Scalar& x,
                                         const Scalar& y, int M);
SlotResidualReport second_order_cbb_residual(const QContext& ctx, const Scalar& a, const Scalar& b, const Scalar& bp,
                                             const Scalar& x, const Scalar& y, int M);

// The curly-brace combination in the coefficient identity; zero when c = bb'.
Scalar second_order_brace(const QContext& ctx, const AppellParams& prm, int m, int n);
// The printed four-term result of the second-order operator on x^m y^n.
BivariatePoly second_order_monomial_display(const QContext& ctx, const AppellParams& prm, int m, int n);

struct Variant2Mapping {
  Scalar a, b, bp, d1, d2;
  HalfInt d3;
};
Variant2Mapping specialize_to_variant2(const QContext& ctx, const Params2& p2);

// Substitutes x1 = d1/x, x2 = d2/x, f(qx1, qx2) = x^{d3} g(x) into a diagonal
// operator; returns the result normalized to monic u.
QDifferenceEquation restrict_to_one_variable(const QContext& ctx, const BivariateOperator& op, const Scalar& d1,
                                             const Scalar& d2, HalfInt d3);
// The one-variable equation as displayed after the substitution, normalized to monic u.
QDifferenceEquation restricted_operator_display(const QContext& ctx, const Variant2Mapping& m);

// Coefficients of x^{-alpha1-n} in x^{-alpha1} Phi(a; b, b'; bb'; q d1/x, q d2/x).
std::vector<Scalar> appell_variant2_coeffs(const QContext& ctx, const Params2& p2, int N);

}  // namespace qvariant
