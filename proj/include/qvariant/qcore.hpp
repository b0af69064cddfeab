#pragma once

#include "qvariant/halfint.hpp"
#include "qvariant/scalar.hpp"

namespace qvariant {

// Base of the q-calculus: p = q^{1/2} and q = p^2.
class QContext {
 public:
  // Exact mode; p rational with p not in {0, 1, -1}.
  static QContext exact(const mpq_class& p);
  static QContext exact(const std::string& p);
  static QContext floating(std::complex<double> p);
  static QContext floating(const std::string& p);

  Mode mode() const { return p_.mode(); }
  const Scalar& p() const { return p_; }
  const Scalar& q() const { return q_; }

  Scalar zero() const { return Scalar(0L).in_mode(mode()); }
  Scalar one() const { return Scalar(1L).in_mode(mode()); }
  Scalar integer(long n) const { return Scalar(n).in_mode(mode()); }
  Scalar rational(long num, long den) const { return Scalar(num, den).in_mode(mode()); }
  // Brings a literal into this context's mode (exact -> float allowed).
  Scalar lift(const Scalar& s) const { return s.in_mode(mode()); }

  std::string str() const;

 private:
  explicit QContext(Scalar p);
  Scalar p_, q_;
};

// q^e = p^(2e).
Scalar qpow(const QContext& ctx, HalfInt e);
// q^{s/2} = p^s. Exact mode needs s integral.
Scalar qpow_half(const QContext& ctx, HalfInt s);
// q^n for integer n.
Scalar qpow_int(const QContext& ctx, long n);

// (a;q)_n = prod_{j<n} (1 - a q^j).
Scalar qpoch(const QContext& ctx, const Scalar& a, long n);
// 1 - a q^n, the factor taking (a;q)_n to (a;q)_{n+1}.
Scalar qpoch_ratio_step(const QContext& ctx, const Scalar& a, long n);

}  // namespace qvariant
