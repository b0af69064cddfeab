#include "qvariant/json_io.hpp"

#include "qvariant/errors.hpp"

namespace qvariant {

json scalar_to_json(const Scalar& s) {
  if (s.is_exact()) {
    const mpq_class& r = s.rational();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
  }
  return json::array({s.complex().real(), s.complex().imag()});
}

Scalar scalar_from_json(const json& j, Mode mode) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>(), mode);
  if (j.is_number_integer()) return Scalar(j.get<long>()).in_mode(mode);
  if (j.is_number()) {
    if (mode == Mode::exact) throw DomainError("exact mode needs a rational string, got " + j.dump());
    return Scalar::floating(j.get<double>());
  }
  if (j.is_array() && j.size() == 2) {
    if (mode == Mode::exact) throw DomainError("exact mode cannot read a complex pair");
    return Scalar::floating(j[0].get<double>(), j[1].get<double>());
  }
  throw DomainError("not a scalar: " + j.dump());
}

json poly_to_json(const Poly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(scalar_to_json(c));
  return a;
}

Poly poly_from_json(const json& j, Mode mode) {
  std::vector<Scalar> c;
  for (const auto& e : j) c.push_back(scalar_from_json(e, mode));
  return Poly(c);
}

json equation_to_json(const QDifferenceEquation& eq) {
  json j;
  j["schema"] = kSchemaVersion;
  j["mode"] = mode_name(eq.ctx.mode());
  j["p"] = scalar_to_json(eq.ctx.p());
  j["u"] = poly_to_json(eq.u);
  j["v"] = poly_to_json(eq.v);
  j["w"] = poly_to_json(eq.w);
  return j;
}

QDifferenceEquation equation_from_json(const json& j) {
  std::string m = j.at("mode").get<std::string>();
  Mode mode = m == "exact" ? Mode::exact : Mode::floating;
  Scalar p = scalar_from_json(j.at("p"), mode);
  QContext ctx = mode == Mode::exact ? QContext::exact(p.rational()) : QContext::floating(p.complex());
  return {ctx, poly_from_json(j.at("u"), mode), poly_from_json(j.at("v"), mode), poly_from_json(j.at("w"), mode)};
}

namespace {
HalfInt half_from(const json& j, const char* key) {
  const json& v = j.at(key);
  if (v.is_string()) return HalfInt::parse(v.get<std::string>());
  if (v.is_number_integer()) return HalfInt(v.get<int>());
  if (v.is_number()) return HalfInt::parse(std::to_string(v.get<double>()));
  throw DomainError(std::string("bad half-integer for ") + key);
}
}  // namespace

json params2_to_json(const Params2& p) {
  json j;
  j["h1"] = p.h[0].str();
  j["h2"] = p.h[1].str();
  j["l1"] = p.l[0].str();
  j["l2"] = p.l[1].str();
  j["alpha1"] = p.alpha1.str();
  j["alpha2"] = p.alpha2.str();
  j["t1"] = scalar_to_json(p.t[0]);
  j["t2"] = scalar_to_json(p.t[1]);
  return j;
}

Params2 params2_from_json(const json& j, Mode mode) {
  Params2 p;
  p.h = {half_from(j, "h1"), half_from(j, "h2")};
  p.l = {half_from(j, "l1"), half_from(j, "l2")};
  p.alpha1 = half_from(j, "alpha1");
  p.alpha2 = half_from(j, "alpha2");
  p.t = {scalar_from_json(j.at("t1"), mode), scalar_from_json(j.at("t2"), mode)};
  return p;
}

json params3_to_json(const Params3& p) {
  json j;
  for (int k = 0; k < 3; ++k) j["h" + std::to_string(k + 1)] = p.h[k].str();
  for (int k = 0; k < 3; ++k) j["l" + std::to_string(k + 1)] = p.l[k].str();
  j["alpha"] = p.alpha.str();
  for (int k = 0; k < 3; ++k) j["t" + std::to_string(k + 1)] = scalar_to_json(p.t[k]);
  return j;
}

Params3 params3_from_json(const json& j, Mode mode) {
  Params3 p;
  p.h = {half_from(j, "h1"), half_from(j, "h2"), half_from(j, "h3")};
  p.l = {half_from(j, "l1"), half_from(j, "l2"), half_from(j, "l3")};
  p.alpha = half_from(j, "alpha");
  p.t = {scalar_from_json(j.at("t1"), mode), scalar_from_json(j.at("t2"), mode), scalar_from_json(j.at("t3"), mode)};
  return p;
}

json exponents_to_json(const ExponentPair& e) {
  json j;
  j["roots"] = json::array({scalar_to_json(e.roots[0]), scalar_to_json(e.roots[1])});
  if (e.exponents)
    j["exponents"] = json::array({(*e.exponents)[0].str(), (*e.exponents)[1].str()});
  else
    j["exponents"] = nullptr;
  return j;
}

json series_to_json(const PowerSeriesSolution& s) {
  json j;
  j["schema"] = kSchemaVersion;
  j["basis"] = s.anchor == Anchor::zero ? "x^n" : "x^-n";
  j["anchor"] = anchor_name(s.anchor);
  j["exponent"] = s.exponent ? json(s.exponent->str()) : json(nullptr);
  j["root"] = scalar_to_json(s.root);
  json c = json::array();
  for (const auto& v : s.coeffs) c.push_back(scalar_to_json(v));
  j["coeffs"] = c;
  return j;
}

json series_to_json(const PochhammerSeries& s) {
  json j;
  j["schema"] = kSchemaVersion;
  j["basis"] = s.orientation == Orientation::ascending ? "(x/d;q)_n" : "(d/x;q)_n";
  j["orientation"] = orientation_name(s.orientation);
  j["prefactor_exponent"] = s.prefactor_exponent.str();
  j["node"] = scalar_to_json(s.node);
  json c = json::array();
  for (const auto& v : s.coeffs) c.push_back(scalar_to_json(v));
  j["coeffs"] = c;
  return j;
}

}  // namespace qvariant
