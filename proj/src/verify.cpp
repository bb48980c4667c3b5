#include "seifert/verify.hpp"

#include "seifert/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace seifert {

namespace {

std::string str(std::int64_t v) { return std::to_string(v); }
std::string str(const Rational& v) { return to_string(v); }
std::string str(const std::string& s) { return s; }
std::string str(TorusClass c) { return "(" + str(c.x) + ", " + str(c.y) + ")"; }

std::string str(std::vector<TorusClass> cs) {
  std::sort(cs.begin(), cs.end(), [](TorusClass a, TorusClass b) { return std::tie(a.x, a.y) < std::tie(b.x, b.y); });
  std::string s = "[";
  for (std::size_t i = 0; i < cs.size(); ++i) s += (i ? ", " : "") + str(cs[i]);
  return s + "]";
}

template <class T>
Verdict verdict(std::string name, const T& expected, const T& actual) {
  Verdict v;
  v.name = std::move(name);
  v.pass = expected == actual;
  v.expected = str(expected);
  v.actual = str(actual);
  return v;
}

Verdict flag(std::string name, bool ok, std::string expected, std::string actual) {
  Verdict v;
  v.name = std::move(name);
  v.pass = ok;
  v.expected = std::move(expected);
  v.actual = std::move(actual);
  return v;
}

TorusClass sum(const std::vector<TorusClass>& cs) {
  TorusClass t;
  for (const auto& c : cs) t = t + c;
  return t;
}

std::vector<TorusClass> negated(std::vector<TorusClass> cs) {
  for (auto& c : cs) c = -c;
  return cs;
}

}  // namespace

Verdict check_corollary(const SeifertReport& rep) {
  const BoundarySlope expected = corollary_slope(rep.lens, rep.dec, rep.writhe);
  Verdict v;
  v.name = "corollary-slope";
  v.expected = "(" + str(expected.lambda_coeff) + ", " + str(expected.mu_coeff) + ")";
  v.actual = "(" + str(rep.slope_lambda) + ", " + str(rep.slope_mu) + ")";
  v.pass = rep.slope_lambda == Rational(expected.lambda_coeff) && rep.slope_mu == expected.mu_coeff;
  return v;
}

std::vector<Verdict> check_budgets(const SeifertReport& rep) {
  std::vector<Verdict> out;
  const auto& dec = rep.dec;
  out.push_back(verdict("splice-sum", checked_neg(checked_mul(checked_mul(dec.n, dec.b), dec.c_mu1)), rep.splice_sum));
  out.push_back(verdict("twist-sum", checked_neg(checked_mul(dec.r, rep.writhe)), rep.twist_sum));
  out.push_back(verdict("longitude-total", Rational(dec.r), rep.slope_lambda));
  out.push_back(verdict("l-plus-budget", dec.c_mu2 * mu2_class(rep.lens), sum(rep.l_plus_classes)));
  out.push_back(verdict("l-minus-budget", TorusClass{dec.c_mu1, 0}, sum(rep.l_minus_classes)));
  out.push_back(verdict("upper-cycles", str(rep.l_plus_classes), str(negated(rep.upper_cycle_classes))));
  out.push_back(verdict("lower-cycles", str(rep.l_minus_classes), str(negated(rep.lower_cycle_classes))));
  out.push_back(verdict("euler-recount", rep.euler_incremental, rep.euler));
  out.push_back(flag("orientable", rep.orientable, "true", rep.orientable ? "true" : "false"));
  out.push_back(verdict("tube-only-boundary", std::int64_t{0}, static_cast<std::int64_t>(rep.non_tube_cycles)));

  const BoundarySlope slope = corollary_slope(rep.lens, dec, rep.writhe);
  const std::int64_t g = std::gcd(slope.lambda_coeff, slope.mu_coeff < 0 ? -slope.mu_coeff : slope.mu_coeff);
  out.push_back(verdict("boundary-count", g, static_cast<std::int64_t>(rep.boundary_count)));
  bool each = g > 0 && rep.cycle_slopes.size() == static_cast<std::size_t>(g);
  std::string actual;
  for (const auto& cs : rep.cycle_slopes) {
    actual += "(" + str(cs.dlambda) + ", " + str(cs.dmu) + ")";
    if (g > 0 && (cs.dlambda != Rational(slope.lambda_coeff / g) || cs.dmu != slope.mu_coeff / g)) each = false;
  }
  out.push_back(flag("cycle-slopes", each,
                     g > 0 ? str(g) + " x (" + str(slope.lambda_coeff / g) + ", " + str(slope.mu_coeff / g) + ")" : "",
                     actual));
  return out;
}

Verdict s3_oracle(const KnotDiagram& d) {
  if (!d.curve.homology_class().is_zero())
    throw Error(ErrorCode::InapplicableClass, "s3 oracle needs a null-homologous knot", Stage::Verify);
  const SmoothingResult L = smooth_crossings(d);
  for (const auto& c : L.components)
    if (!c.homology_class().is_zero())
      throw Error(ErrorCode::InapplicableClass, "s3 oracle needs null-homologous Seifert circles", Stage::Verify);
  const std::int64_t chi = static_cast<std::int64_t>(L.components.size()) - static_cast<std::int64_t>(d.crossings.size());
  const SeifertReport rep = build(d);
  Verdict v;
  v.name = "s3-oracle";
  v.expected = "chi=" + str(chi) + " genus=" + str((1 - chi) / 2);
  v.actual = "chi=" + str(rep.euler) + " genus=" + str(rep.genus);
  v.pass = rep.euler == chi && rep.genus == (1 - chi) / 2 && rep.boundary_count == 1;
  return v;
}

}  // namespace seifert
