#include "qvariant/qcore.hpp"

#include "qvariant/errors.hpp"

namespace qvariant {

QContext::QContext(Scalar p) : p_(std::move(p)), q_(p_ * p_) {}

QContext QContext::exact(const mpq_class& p) {
  if (sgn(p) == 0 || p == 1 || p == -1) throw DomainError("exact mode needs p outside {0, 1, -1}");
  return QContext(Scalar(p));
}

QContext QContext::exact(const std::string& p) { return exact(Scalar::parse(p, Mode::exact).rational()); }

QContext QContext::floating(std::complex<double> p) {
  if (std::abs(p) == 0.0) throw DomainError("p must be nonzero");
  return QContext(Scalar(p));
}

QContext QContext::floating(const std::string& p) { return floating(Scalar::parse(p, Mode::floating).complex()); }

std::string QContext::str() const { return std::string(mode_name(mode())) + " p=" + p_.str(); }

Scalar qpow(const QContext& ctx, HalfInt e) { return ctx.p().pow(e.twice()); }

Scalar qpow_half(const QContext& ctx, HalfInt s) {
  if (s.is_integer()) return ctx.p().pow(s.as_integer());
  if (ctx.mode() == Mode::exact) throw DomainError("q^(" + s.str() + "/2) is not in Q(p)");
  return Scalar(std::pow(ctx.p().complex(), s.value()));
}

Scalar qpow_int(const QContext& ctx, long n) { return ctx.q().pow(n); }

Scalar qpoch(const QContext& ctx, const Scalar& a, long n) {
  if (n < 0) throw DomainError("qpoch: negative index " + std::to_string(n));
  Scalar r = ctx.one(), one = ctx.one(), term = ctx.lift(a);
  for (long j = 0; j < n; ++j) {
    r *= one - term;
    term *= ctx.q();
  }
  return r;
}

Scalar qpoch_ratio_step(const QContext& ctx, const Scalar& a, long n) {
  if (n < 0) throw DomainError("qpoch_ratio_step: negative index " + std::to_string(n));
  return ctx.one() - ctx.lift(a) * qpow_int(ctx, n);
}

}  // namespace qvariant
