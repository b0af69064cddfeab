#pragma once

#include <array>
#include <functional>

#include "qvariant/poly.hpp"
#include "qvariant/qcore.hpp"

namespace qvariant {

struct Params2 {
  std::array<HalfInt, 2> h{}, l{};
  HalfInt alpha1{}, alpha2{};
  std::array<Scalar, 2> t{};

  // (h1+h2-l1-l2-a1-a2+1)/2
  HalfInt lambda() const;
  // Throws unless t_i are nonzero, in ctx's mode, and lambda is a half-integer.
  void validate(const QContext& ctx) const;
  Params2 index_swapped() const;  // (h1,l1,t1) <-> (h2,l2,t2)
  Params2 alpha_swapped() const;
};

struct Params3 {
  std::array<HalfInt, 3> h{}, l{};
  HalfInt alpha{};
  std::array<Scalar, 3> t{};

  // (h1+h2+h3-l1-l2-l3+1)/2
  HalfInt nu() const;
  void validate(const QContext& ctx) const;
  // Relabel: slot k of the result takes index perm[k] (0-based) of this.
  Params3 permuted(const std::array<int, 3>& perm) const;
};

// u(x) g(x/q) + v(x) g(x) + w(x) g(qx) = 0
struct QDifferenceEquation {
  QContext ctx;
  Poly u, v, w;

  int degree() const;
  bool operator==(const QDifferenceEquation& o) const { return u == o.u && v == o.v && w == o.w; }
  // Same equation in y = 1/x, multiplied through by y^degree.
  QDifferenceEquation reflect() const;
  // Every coefficient divided by the leading coefficient of u.
  QDifferenceEquation normalized() const;
};

QDifferenceEquation make_qhypergeometric(const QContext& ctx, const Scalar& a, const Scalar& b, const Scalar& c);
QDifferenceEquation make_qheun(const QContext& ctx, const Params2& p2, HalfInt beta, const Scalar& E);
QDifferenceEquation make_variant_deg2(const QContext& ctx, const Params2& p2);
QDifferenceEquation make_variant_deg3(const QContext& ctx, const Params3& p3);

// The accessory parameter E built into the degree-two variant.
Scalar variant_deg2_E(const QContext& ctx, const Params2& p2);

using ScalarFn = std::function<Scalar(const Scalar&)>;
Scalar apply(const QDifferenceEquation& eq, const ScalarFn& f, const Scalar& x);

// Operator for h when g = x^mu h.
QDifferenceEquation gauge_power(const QDifferenceEquation& eq, HalfInt mu);

}  // namespace qvariant
