// qvariant: command-line driver for the library.
#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "qvariant/appell.hpp"
#include "qvariant/closedform.hpp"
#include "qvariant/errors.hpp"
#include "qvariant/frobenius.hpp"
#include "qvariant/json_io.hpp"
#include "qvariant/limits.hpp"
#include "qvariant/verify.hpp"

using namespace qvariant;

namespace {

struct Options {
  std::string mode = "exact";
  std::string p;
  int N = 12;
  std::uint64_t seed = 1;
  int draws = 10;
  std::string out;  // per-command default: text for series, json otherwise
  double tol = 1e-10;
  std::string config;
  std::string epsilons = "1e-1,1e-2,1e-3";
  bool serial = false;
  // per-symbol parameters, kept as text until the mode is known
  std::map<std::string, std::string> sym{{"h1", "1"},   {"h2", "0"},     {"h3", "0"},     {"l1", "0"},
                                         {"l2", "0"},   {"l3", "0"},     {"alpha1", "0"}, {"alpha2", "1"},
                                         {"alpha", "0"}, {"t1", "1"},     {"t2", "2"},     {"t3", "3"},
                                         {"beta", "1"}, {"a", "1/3"},    {"b", "1/5"},    {"bp", "2/7"},
                                         {"c", "3/11"}, {"x", "1/3"},    {"y", "1/5"}};
  std::string E;  // empty: the value built into the degree-two variant
  // series / exponents / limits selectors
  std::string eq = "var2";
  std::string which = "g2";
  int i = 1;
  std::string family = "I";
  std::string perm = "1,2,3";
  std::string anchor = "zero";
  std::string exponent;
  std::string kind = "t3";
};

void add_common(CLI::App* app, Options& o) {
  app->add_option("--mode", o.mode, "exact or float")->check(CLI::IsMember({"exact", "float"}));
  app->add_option("--p", o.p, "p = q^(1/2); rational in exact mode");
  app->add_option("--N", o.N, "truncation order");
  app->add_option("--seed", o.seed, "sweep seed (falls back to QVARIANT_SEED)");
  app->add_option("--draws", o.draws, "number of seeded draws");
  app->add_option("--out", o.out, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app->add_option("--tol", o.tol, "float-mode relative tolerance");
  app->add_option("--config", o.config, "JSON file with any of the option names as keys");
  app->add_option("--epsilons", o.epsilons, "comma-separated eps values for the continuum check");
  for (auto& [k, v] : o.sym) app->add_option("--" + k, v);
  app->add_option("--E", o.E, "accessory parameter of the q-Heun equation");
}

// Config-file values fill every option not given on the command line.
void apply_config(CLI::App* app, Options& o) {
  if (o.config.empty()) return;
  std::ifstream in(o.config);
  if (!in) throw DomainError("cannot open config " + o.config);
  json j = json::parse(in);
  auto given = [&](const std::string& k) { return app->count("--" + k) > 0; };
  auto text = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& k = it.key();
    if (given(k)) continue;
    const json& v = it.value();
    if (k == "mode") o.mode = v.get<std::string>();
    else if (k == "p") o.p = text(v);
    else if (k == "N") o.N = v.get<int>();
    else if (k == "seed") o.seed = v.get<std::uint64_t>();
    else if (k == "draws") o.draws = v.get<int>();
    else if (k == "out") o.out = v.get<std::string>();
    else if (k == "tol") o.tol = v.get<double>();
    else if (k == "E") o.E = text(v);
    else if (k == "epsilons") o.epsilons = text(v);
    else if (o.sym.count(k)) o.sym[k] = text(v);
    else if (k == "params" && v.is_object()) {
      for (auto p = v.begin(); p != v.end(); ++p)
        if (o.sym.count(p.key()) && !given(p.key())) o.sym[p.key()] = text(p.value());
    } else throw DomainError("unknown config key " + k);
  }
}

void apply_seed_env(CLI::App* app, Options& o) {
  if (app->count("--seed")) return;
  if (const char* s = std::getenv("QVARIANT_SEED")) o.seed = std::stoull(s);
}

Mode mode_of(const Options& o) { return o.mode == "exact" ? Mode::exact : Mode::floating; }

QContext context(const Options& o) {
  if (mode_of(o) == Mode::exact) return QContext::exact(o.p.empty() ? "1/2" : o.p);
  return QContext::floating(o.p.empty() ? "0.5" : o.p);
}

HalfInt H(const Options& o, const std::string& k) { return HalfInt::parse(o.sym.at(k)); }
Scalar S(const Options& o, const std::string& k) { return Scalar::parse(o.sym.at(k), mode_of(o)); }

Params2 params2(const Options& o) {
  Params2 p;
  p.h = {H(o, "h1"), H(o, "h2")};
  p.l = {H(o, "l1"), H(o, "l2")};
  p.alpha1 = H(o, "alpha1");
  p.alpha2 = H(o, "alpha2");
  p.t = {S(o, "t1"), S(o, "t2")};
  return p;
}

Params3 params3(const Options& o) {
  Params3 p;
  p.h = {H(o, "h1"), H(o, "h2"), H(o, "h3")};
  p.l = {H(o, "l1"), H(o, "l2"), H(o, "l3")};
  p.alpha = H(o, "alpha");
  p.t = {S(o, "t1"), S(o, "t2"), S(o, "t3")};
  return p;
}

Permutation parse_perm(const std::string& s) {
  Permutation p{};
  std::stringstream ss(s);
  std::string tok;
  int k = 0;
  while (std::getline(ss, tok, ',')) {
    if (k >= 3) throw DomainError("permutation needs three entries");
    p[k++] = std::stoi(tok) - 1;
  }
  if (k != 3) throw DomainError("permutation needs three entries");
  return p;
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) v.push_back(std::stod(tok));
  return v;
}

QDifferenceEquation build_equation(const QContext& ctx, const Options& o) {
  if (o.eq == "qhyp") return make_qhypergeometric(ctx, S(o, "a"), S(o, "b"), S(o, "c"));
  if (o.eq == "var2") return make_variant_deg2(ctx, params2(o));
  if (o.eq == "var3") return make_variant_deg3(ctx, params3(o));
  if (o.eq == "qheun") {
    Params2 p = params2(o);
    Scalar E = o.E.empty() ? variant_deg2_E(ctx, p) : Scalar::parse(o.E, mode_of(o));
    return make_qheun(ctx, p, H(o, "beta"), E);
  }
  throw DomainError("unknown equation " + o.eq + " (qhyp, qheun, var2, var3)");
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// exponents at an anchor, with the obstruction when the gap is a positive integer
json anchor_report(const QDifferenceEquation& eq, Anchor a) {
  ExponentPair e = a == Anchor::zero ? char_exponents_zero(eq) : char_exponents_infinity(eq);
  json j = exponents_to_json(e);
  j["gap"] = nullptr;
  j["apparent"] = nullptr;
  j["obstruction"] = nullptr;
  if (!e.exponents) return j;
  HalfInt gap = (*e.exponents)[1] - (*e.exponents)[0];
  j["gap"] = gap.str();
  if (!gap.is_integer() || gap.as_integer() == 0) return j;
  int g = static_cast<int>(gap.as_integer());
  Apparency ap = a == Anchor::zero ? apparency_check(eq, (*e.exponents)[0], g)
                                   : apparency_check_infinity(eq, (*e.exponents)[0], g);
  j["apparent"] = ap.apparent;
  j["obstruction"] = scalar_to_json(ap.obstruction);
  return j;
}

int cmd_exponents(const Options& o) {
  QContext ctx = context(o);
  auto eq = build_equation(ctx, o);
  json j;
  j["schema"] = kSchemaVersion;
  j["equation"] = o.eq;
  j["operator"] = equation_to_json(eq);
  j["zero"] = anchor_report(eq, Anchor::zero);
  j["infinity"] = anchor_report(eq, Anchor::infinity);
  emit(j);
  return 0;
}

void print_coeffs(const std::vector<Scalar>& c) {
  for (const auto& v : c) std::cout << v.str() << "\n";
}

int cmd_series(const Options& o) {
  QContext ctx = context(o);
  json j;
  std::vector<Scalar> coeffs;
  auto take = [&](const auto& s) {
    j = series_to_json(s);
    coeffs = s.coeffs;
  };
  if (o.which == "g1") take(g1_series(ctx, params2(o), o.N));
  else if (o.which == "g2") take(g2_series(ctx, params2(o), o.i, o.N));
  else if (o.which == "g3") take(g3_series(ctx, params2(o), o.i, o.N));
  else if (o.which == "conjI" || o.which == "conjII")
    take(conj3_series(ctx, params3(o), o.which == "conjI" ? ConjFamily::I : ConjFamily::II, parse_perm(o.perm), o.N));
  else if (o.which == "frobenius") {
    auto eq = build_equation(ctx, o);
    bool zero = o.anchor == "zero";
    if (!zero && o.anchor != "infinity") throw DomainError("anchor must be zero or infinity");
    HalfInt e;
    if (o.exponent.empty()) {
      auto ex = zero ? char_exponents_zero(eq) : char_exponents_infinity(eq);
      if (!ex.exponents) throw DomainError("exponents are not half-integers; pass --exponent");
      e = (*ex.exponents)[1];
    } else {
      e = HalfInt::parse(o.exponent);
    }
    take(zero ? local_series_zero(eq, e, o.N) : local_series_infinity(eq, e, o.N));
  } else {
    throw DomainError("unknown series " + o.which + " (g1, g2, g3, conjI, conjII, frobenius)");
  }
  if (o.out == "json") emit(j);
  else print_coeffs(coeffs);  // text: one coefficient per line
  return 0;
}

int cmd_verify(const Options& o, const std::string& target) {
  VerifyConfig cfg;
  cfg.mode = mode_of(o);
  cfg.p = o.p.empty() ? (cfg.mode == Mode::exact ? "1/2" : "0.5") : o.p;
  cfg.N = o.N;
  cfg.seed = o.seed;
  cfg.draws = o.draws;
  cfg.tol = o.tol;
  cfg.epsilons = parse_list(o.epsilons);
  cfg.parallel = !o.serial;
  auto rep = run_verify(target, cfg);
  if (o.out == "csv" && target == "ode") {
    std::cout << "draw,degree,eps,gap,slope\n";
    for (const auto& r : rep.records)
      for (const char* d : {"deg2", "deg3"}) {
        if (!r.contains(d)) continue;
        const json& s = r[d]["scaling"];
        for (std::size_t k = 0; k < s["values"].size(); ++k)
          std::cout << r["draw"] << "," << d << "," << s["values"][k] << "," << s["gaps"][k] << "," << s["slope"]
                    << "\n";
      }
  } else {
    emit(rep.to_json());
  }
  std::cerr << target << ": " << rep.passed << "/" << rep.draws << " passed\n";
  return rep.ok() ? 0 : 1;
}

json coeff_limit_json(const CoefficientLimit& L) {
  json ex = json::array(), pr = json::array();
  for (const auto& v : L.extracted) ex.push_back(scalar_to_json(v));
  for (const auto& v : L.printed) pr.push_back(scalar_to_json(v));
  return {{"target", L.target}, {"extracted", ex}, {"printed", pr}, {"matches_printed", L.matches_printed},
          {"matches_closed_form", L.matches_closed_form}};
}

int cmd_limits(const Options& o) {
  QContext ctx = context(o);
  json j;
  j["schema"] = kSchemaVersion;
  j["kind"] = o.kind;
  bool ok = true;
  if (o.kind == "t3") {
    Params3 p3 = params3(o);
    auto op = deg3_to_deg2_operator_limit(ctx, p3);
    j["params"] = params3_to_json(p3);
    j["limit_operator"] = equation_to_json(op.limit);
    j["matches_degree_two"] = op.matches;
    ok = op.matches;
    ConjFamily fam = o.family == "I" ? ConjFamily::I : ConjFamily::II;
    Permutation perm = parse_perm(o.perm);
    if (ctx.mode() == Mode::exact) {
      auto L = conj_leading_terms(ctx, p3, fam, perm, o.N);
      j["coefficients"] = coeff_limit_json(L);
      ok = ok && L.matches_printed && L.matches_closed_form;
    } else {
      auto R = limit_conj_coeffs(ctx, p3, fam, perm, o.N);
      if (o.out == "csv") {
        std::cout << R.csv();
        return R.slope >= 0.9 && ok ? 0 : 1;
      }
      j["rate"] = {{"values", R.values}, {"gaps", R.gaps}, {"slope", R.slope}};
      ok = ok && R.slope >= 0.9;
    }
  } else if (o.kind == "t2") {
    Params2 p2 = params2(o);
    auto lim = degenerate_deg2_to_qhyp(ctx, p2);
    j["params"] = params2_to_json(p2);
    j["limit_operator"] = equation_to_json(lim.limit);
    j["matches_printed"] = lim.matches_printed;
    j["restriction_applies"] = lim.restriction_applies;
    if (lim.matches_qhyp) j["matches_qhyp"] = *lim.matches_qhyp;
    j["note"] = lim.note;
    ok = lim.matches_printed && lim.matches_qhyp.value_or(true);
  } else if (o.kind == "q1") {
    auto eps = parse_list(o.epsilons);
    Poly f = default_test_polynomial();
    LimitReport R = o.eq == "var3" ? continuum_scaling_deg3(params3(o), f, eps) : continuum_scaling_deg2(params2(o), f, eps);
    if (o.out == "csv") {
      std::cout << R.csv();
      return R.slope >= 0.9 ? 0 : 1;
    }
    OdeSpec s = o.eq == "var3" ? continuum_ode_deg3(params3(o)) : continuum_ode_deg2(params2(o));
    json sch = json::array();
    for (const auto& e : s.riemann_scheme)
      sch.push_back({{"point", e.point}, {"exponents", {e.exponents[0].str(), e.exponents[1].str()}}});
    j["riemann_scheme"] = sch;
    j["fuchs_sum"] = s.fuchs_sum.str();
    j["gauss"] = {{"a", s.gauss.a.str()}, {"b", s.gauss.b.str()}, {"c", s.gauss.c.str()}, {"substitution", s.gauss.substitution}};
    j["scaling"] = {{"values", R.values}, {"gaps", R.gaps}, {"slope", R.slope}};
    ok = R.slope >= 0.9 && s.fuchs_sum == HalfInt(s.fuchs_expected);
  } else {
    throw DomainError("unknown limit kind " + o.kind + " (t3, t2, q1)");
  }
  emit(j);
  return ok ? 0 : 1;
}

int cmd_appell(const Options& o) {
  QContext ctx = context(o);
  AppellParams prm{S(o, "a"), S(o, "b"), S(o, "bp"), S(o, "c")};
  Scalar x = S(o, "x"), y = S(o, "y");
  auto F = appell_coeffs(ctx, prm, o.N);
  auto rep = [&](const SlotResidualReport& r) {
    return json{{"interior_slots", r.interior_slots},
                {"interior_zero", r.interior_zero},
                {"interior_max", scalar_to_json(r.interior_max)},
                {"boundary_nonzero", r.boundary.size()},
                {"pointwise", scalar_to_json(r.pointwise)}};
  };
  json j;
  j["schema"] = kSchemaVersion;
  j["params"] = {{"a", scalar_to_json(prm.a)}, {"b", scalar_to_json(prm.b)}, {"bp", scalar_to_json(prm.bp)},
                 {"c", scalar_to_json(prm.c)}};
  j["phi1"] = scalar_to_json(phi1(ctx, prm, x, y, o.N));
  j["first"] = rep(operator_residual(ctx, contiguous_x_operator(ctx, prm), F, o.N, x, y));
  j["second"] = rep(operator_residual(ctx, contiguous_y_operator(ctx, prm), F, o.N, x, y));
  j["third_order"] = rep(third_order_residual(ctx, prm, x, y, o.N));
  j["second_order_at_c"] = rep(second_order_residual(ctx, prm, x, y, o.N));
  j["second_order_c_eq_bbp"] = rep(second_order_cbb_residual(ctx, prm.a, prm.b, prm.bp, x, y, o.N));
  emit(j);
  return j["first"]["interior_zero"].get<bool>() && j["second"]["interior_zero"].get<bool>() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"q-difference equations of hypergeometric type: exponents, series, verification"};
  app.require_subcommand(1);
  Options o;
  std::string target;

  auto* ex = app.add_subcommand("exponents", "characteristic exponents and apparency at 0 and infinity");
  add_common(ex, o);
  ex->add_option("--eq", o.eq, "qhyp, qheun, var2, var3");

  auto* se = app.add_subcommand("series", "coefficient dump of a series solution");
  add_common(se, o);
  se->add_option("--which", o.which, "g1, g2, g3, conjI, conjII, frobenius");
  se->add_option("--i", o.i, "index i of the closed form (1 or 2)");
  se->add_option("--perm", o.perm, "permutation for the degree-three families, e.g. 3,1,2");
  se->add_option("--anchor", o.anchor, "zero or infinity (frobenius)");
  se->add_option("--exponent", o.exponent, "exponent of the Frobenius branch");
  se->add_option("--eq", o.eq, "equation for frobenius");

  auto* ve = app.add_subcommand("verify", "seeded verification sweep");
  add_common(ve, o);
  ve->add_option("target", target, "thm1 thm2 thm3 conj3 appell-a2 appell-a6 prop31 limits ode exponents")->required();
  ve->add_flag("--serial", o.serial, "run draws on one thread");

  auto* li = app.add_subcommand("limits", "degeneration limits");
  add_common(li, o);
  li->add_option("--kind", o.kind, "t3 (t3 -> infinity), t2 (t2 -> 0), q1 (q -> 1)");
  li->add_option("--family", o.family, "I or II");
  li->add_option("--perm", o.perm, "permutation, e.g. 1,2,3");
  li->add_option("--eq", o.eq, "var2 or var3 (q1)");

  auto* ap = app.add_subcommand("appell", "q-Appell relations on the truncated double series");
  add_common(ap, o);

  CLI11_PARSE(app, argc, argv);
  try {
    CLI::App* sub = app.get_subcommands().front();
    apply_config(sub, o);
    apply_seed_env(sub, o);
    if (sub == ex) return cmd_exponents(o);
    if (sub == se) return cmd_series(o);
    if (sub == ve) return cmd_verify(o, target);
    if (sub == li) return cmd_limits(o);
    return cmd_appell(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
