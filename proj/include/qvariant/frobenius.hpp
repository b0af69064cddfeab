#pragma once

#include <array>
#include <optional>
#include <vector>

#include "qvariant/qdiff.hpp"

namespace qvariant {

enum class Anchor { zero, infinity };
const char* anchor_name(Anchor a);

// Roots X = q^rho of the characteristic equation, plus the half-integer
// exponents when both roots are powers of p (sorted ascending then).
struct ExponentPair {
  std::array<Scalar, 2> roots;
  std::optional<std::array<HalfInt, 2>> exponents;
};

// At 0: w0 X^2 + v0 X + u0 = 0.
ExponentPair char_exponents_zero(const QDifferenceEquation& eq);
// At infinity: u_d X^2 + v_d X + w_d = 0, solutions ~ x^{-rho}.
ExponentPair char_exponents_infinity(const QDifferenceEquation& eq);

// Discrete log of X to base p, searched over |2e| <= max_twice.
std::optional<HalfInt> exponent_of(const QContext& ctx, const Scalar& X, long max_twice = 4096);

struct Apparency {
  bool apparent;
  Scalar obstruction;
};

// Obstruction for exponents {low, low+N} at 0 (only c_0..c_{N-1} enter).
Apparency apparency_check(const QDifferenceEquation& eq, HalfInt lambda_low, int N);
Apparency apparency_check_root(const QDifferenceEquation& eq, const Scalar& X_low, int N);
// Same at infinity, through the reflected equation.
Apparency apparency_check_infinity(const QDifferenceEquation& eq, HalfInt exponent_low, int N);

// x^rho sum c_n x^n at 0, x^{-rho} sum c_n x^{-n} at infinity.
struct PowerSeriesSolution {
  Anchor anchor = Anchor::zero;
  std::optional<HalfInt> exponent;
  Scalar root;  // q^rho
  std::vector<Scalar> coeffs;
};

PowerSeriesSolution local_series_zero(const QDifferenceEquation& eq, HalfInt exponent, int N);
PowerSeriesSolution local_series_zero_root(const QDifferenceEquation& eq, const Scalar& X, int N);
PowerSeriesSolution local_series_infinity(const QDifferenceEquation& eq, HalfInt exponent, int N);
PowerSeriesSolution local_series_infinity_root(const QDifferenceEquation& eq, const Scalar& X, int N);

// Coefficients r_0..r_{N+d} of x^{rho+n} in eq applied to x^rho sum_{k<=N} c_k x^k.
std::vector<Scalar> series_residual(const QDifferenceEquation& eq, const Scalar& X, const std::vector<Scalar>& c);
// Same for an infinity-anchored series (coefficients in 1/x).
std::vector<Scalar> series_residual(const QDifferenceEquation& eq, const PowerSeriesSolution& s);

// Float-mode relative tolerance used for resonance and apparency decisions.
inline constexpr double kResonanceTol = 1e-8;

}  // namespace qvariant
