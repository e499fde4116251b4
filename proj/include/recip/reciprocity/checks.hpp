#pragma once
/**
 * @file checks.hpp
 * @brief Reciprocity laws as finite, certified identities.
 *
 * Every check enumerates a finite support that provably contains all places
 * (or flags) with a nontrivial local value, folds the local values in
 * canonical order, and records a certificate: the support, why everything
 * outside it is trivial, and a recomputation at a fixed number of random
 * pieces outside the support. A failed spot check fails the report.
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "recip/curve/symbols.hpp"
#include "recip/surface/parshin.hpp"

namespace recip {

struct LocalValue {
  std::string piece;
  std::string value;
};

struct Certificate {
  std::vector<std::string> support;
  std::string argument;
  /// Pieces outside the support, each recomputed to the identity.
  std::vector<LocalValue> spot_checks;
  bool spot_checks_trivial = true;
};

struct ReciprocityReport {
  std::string law;
  std::string field;
  std::vector<std::string> inputs;
  /// "sum" or "product".
  std::string fold;
  std::vector<LocalValue> local;
  std::string aggregate;
  bool pass = false;
  Certificate certificate;
};

inline constexpr int kSpotChecks = 20;

namespace detail {

inline constexpr std::uint64_t kSpotSeed = 0x51f15eedULL;

/// Random place of P^1 over k that is not in `avoid`; deterministic for a given rng state.
template <class Rng>
std::optional<Place> random_place_off(const FieldPtr& k, const std::vector<Place>& avoid, Rng& rng) {
  const bool tiny = k->is_finite() && k->order() <= 3;
  std::uniform_int_distribution<int> deg(1, tiny ? 6 : 3);
  for (int attempt = 0; attempt < 400; ++attempt) {
    const int d = deg(rng);
    Poly p = random_monic(k, static_cast<std::size_t>(d), rng, 7);
    if (!is_irreducible(p)) continue;
    Place pl = Place::unchecked(p);
    if (std::find(avoid.begin(), avoid.end(), pl) == avoid.end()) return pl;
  }
  return std::nullopt;
}

template <class LocalFn, class TrivialFn>
void spot_check_places(ReciprocityReport& r, const FieldPtr& k, const std::vector<Place>& support, LocalFn local,
                       TrivialFn trivial, const std::string& var = "t") {
  std::mt19937_64 rng(kSpotSeed);
  for (int i = 0; i < kSpotChecks; ++i) {
    auto p = random_place_off(k, support, rng);
    if (!p) break;
    r.certificate.spot_checks.push_back({p->label(var), local(*p)});
    if (!trivial(*p)) r.certificate.spot_checks_trivial = false;
  }
  if (!r.certificate.spot_checks_trivial) r.pass = false;
}

inline std::vector<std::string> labels(const std::vector<Place>& ps, const std::string& var = "t") {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.label(var));
  return out;
}

}  // namespace detail

/// Sum over places of [k(p):k] v_p(f) = 0.
inline ReciprocityReport degree_sum_check(const RationalFunction& f) {
  if (f.is_zero()) throw ZeroFunctionError("degree check of the zero function");
  ReciprocityReport r;
  r.law = "degree";
  r.field = f.field()->describe();
  r.inputs = {to_string(f)};
  r.fold = "sum";
  std::vector<Place> support = divisor(f).support();
  const Place inf = Place::infinity(f.field());
  if (std::find(support.begin(), support.end(), inf) == support.end()) support.push_back(inf);
  long total = 0;
  for (const auto& p : support) {
    const long d = degree_symbol(f, p);
    total += d;
    r.local.push_back({p.label(), std::to_string(d)});
  }
  r.aggregate = std::to_string(total);
  r.pass = total == 0;
  r.certificate.support = detail::labels(support);
  r.certificate.argument = "v_p(f) = 0 at every place outside div(f), so those places contribute 0";
  detail::spot_check_places(
      r, f.field(), support, [&](const Place& p) { return std::to_string(degree_symbol(f, p)); },
      [&](const Place& p) { return degree_symbol(f, p) == 0; });
  return r;
}

/// Product over places of the tame symbol (f, g)_p = 1.
inline ReciprocityReport weil_check(const RationalFunction& f, const RationalFunction& g) {
  if (f.is_zero() || g.is_zero()) throw ZeroFunctionError("Weil check with a zero function");
  ReciprocityReport r;
  r.law = "weil";
  r.field = f.field()->describe();
  r.inputs = {to_string(f), to_string(g)};
  r.fold = "product";
  const std::vector<Place> support = joint_support({f, g});
  Scalar total = Scalar::one(f.field());
  for (const auto& p : support) {
    const Scalar v = tame_symbol(f, g, p).value;
    total *= v;
    r.local.push_back({p.label(), v.to_string()});
  }
  r.aggregate = total.to_string();
  r.pass = total.is_one();
  r.certificate.support = detail::labels(support);
  r.certificate.argument = "outside div(f) and div(g) both functions are units and the unit-unit symbol is 1";
  detail::spot_check_places(
      r, f.field(), support, [&](const Place& p) { return tame_symbol(f, g, p).value.to_string(); },
      [&](const Place& p) { return tame_symbol(f, g, p).value.is_one(); });
  return r;
}

/// Sum over places of Res_p(f dg) = 0.
inline ReciprocityReport residue_sum_check(const RationalFunction& f, const RationalFunction& g) {
  if (f.is_zero() || g.is_zero()) throw ZeroFunctionError("residue check with a zero function");
  ReciprocityReport r;
  r.law = "residue";
  r.field = f.field()->describe();
  r.inputs = {to_string(f), to_string(g)};
  r.fold = "sum";
  const std::vector<Place> support = joint_support({f, g});
  Scalar total = Scalar::zero(f.field());
  for (const auto& p : support) {
    const Scalar v = residue_fdg(f, g, p);
    total += v;
    r.local.push_back({p.label(), v.to_string()});
  }
  r.aggregate = total.to_string();
  r.pass = total.is_zero();
  r.certificate.support = detail::labels(support);
  r.certificate.argument = "f dg is regular at every finite place outside div(f) and div(g), so its residue there is 0";
  detail::spot_check_places(
      r, f.field(), support, [&](const Place& p) { return residue_fdg(f, g, p).to_string(); },
      [&](const Place& p) { return residue_fdg(f, g, p).is_zero(); });
  return r;
}

/// Product of Parshin symbols over all points of a complete curve.
inline ReciprocityReport parshin_point_sum_check(const RationalFunction2& f1, const RationalFunction2& f2,
                                                 const RationalFunction2& f3, const SurfaceCurve& curve, int chart = 0) {
  ReciprocityReport r;
  r.law = "parshin-points";
  r.field = f1.field()->describe();
  r.inputs = {to_string(f1), to_string(f2), to_string(f3), "curve=" + curve.label() + ";chart=" + std::to_string(chart)};
  r.fold = "product";
  const Place probe = Place::infinity(curve.field());
  const Flag2D base = make_flag(curve, probe, chart);
  std::vector<RationalFunction> reductions;
  for (const auto* f : {&f1, &f2, &f3}) {
    reductions.push_back(curve_expansion(detail::normalize_for_flag(*f, base), detail::normalized_shape(base)).second);
  }
  const std::vector<Place> support = joint_support(reductions);
  const std::string var = curve.coordinate();
  Scalar total = Scalar::one(curve.field());
  for (const auto& p : support) {
    const Scalar v = parshin_symbol(f1, f2, f3, make_flag(curve, p, chart)).value;
    total *= v;
    r.local.push_back({p.label(var), v.to_string()});
  }
  r.aggregate = total.to_string();
  r.pass = total.is_one();
  r.certificate.support = detail::labels(support, var);
  r.certificate.argument =
      "outside the divisors of the reductions u1_i every a2 digit is 0, so the digit matrix has a zero column";
  auto value_at = [&](const Place& p) { return parshin_symbol(f1, f2, f3, make_flag(curve, p, chart)).value; };
  detail::spot_check_places(
      r, curve.field(), support, [&](const Place& p) { return value_at(p).to_string(); },
      [&](const Place& p) { return value_at(p).is_one(); }, var);
  return r;
}

namespace detail {

/// Curves V(x - alpha) or graphs through (alpha, beta) along which some piece vanishes.
inline void curves_through(const BiPoly& F, const Scalar& alpha, const Scalar& beta, std::vector<SurfaceCurve>& out) {
  if (F.is_constant() || !F.eval(alpha, beta).is_zero()) return;
  auto add = [&](const SurfaceCurve& c) {
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  };
  const Poly content = F.content();
  if (!content.is_zero() && content.eval(alpha).is_zero()) add(SurfaceCurve::line(alpha));
  const BiPoly prim = content.is_constant() ? F : divide_coeffs(F, content);
  if (prim.is_constant() || !prim.eval(alpha, beta).is_zero()) return;
  if (!prim.depends_on_x()) {
    add(SurfaceCurve::graph(Poly::constant(beta)));
    return;
  }
  if (prim.degree_y() == 1 && prim.lead_y().is_constant()) {
    add(SurfaceCurve::graph((-prim.coeff_y(0)).scale(prim.lead_y().lead().inverse())));
    return;
  }
  throw UnsupportedError("the curve " + prim.to_string() +
                         " = 0 passes through the point but is not a graph y = s(x) or a line x = a;"
                         " give it as a separate parenthesized factor of supported shape");
}

}  // namespace detail

/// Curves through an affine point (chart 0) that are components of some div(f_i).
inline std::vector<SurfaceCurve> curves_through_point(const std::vector<RationalFunction2>& fs, const Scalar& alpha,
                                                      const Scalar& beta) {
  std::vector<SurfaceCurve> out;
  for (const auto& f : fs) {
    if (f.is_zero()) throw ZeroFunctionError("curve enumeration for the zero function");
    if (f.factored().empty()) {
      detail::curves_through(f.numerator(), alpha, beta, out);
      detail::curves_through(f.denominator(), alpha, beta, out);
    } else {
      for (const auto& pc : f.factored()) detail::curves_through(pc.poly, alpha, beta, out);
    }
  }
  std::sort(out.begin(), out.end(), [](const SurfaceCurve& a, const SurfaceCurve& b) {
    if (a.kind() != b.kind()) return a.kind() == CurveKind::line;
    return a.shape() < b.shape();
  });
  return out;
}

/// The point (alpha, beta) as a place on a curve through it.
inline Place point_on(const SurfaceCurve& c, const Scalar& alpha, const Scalar& beta) {
  const FieldPtr& k = c.field();
  const Scalar& coord = c.kind() == CurveKind::graph ? alpha : beta;
  return Place::unchecked(Poly(k, {-coord, Scalar::one(k)}));
}

/// Product of Parshin symbols over all curves through an affine point.
inline ReciprocityReport parshin_curve_sum_check(const RationalFunction2& f1, const RationalFunction2& f2,
                                                 const RationalFunction2& f3, const Scalar& alpha, const Scalar& beta) {
  ReciprocityReport r;
  r.law = "parshin-curves";
  const FieldPtr& k = f1.field();
  r.field = k->describe();
  r.inputs = {to_string(f1), to_string(f2), to_string(f3), "point=(" + alpha.to_string() + "," + beta.to_string() + ")"};
  r.fold = "product";
  const auto curves = curves_through_point({f1, f2, f3}, alpha, beta);
  Scalar total = Scalar::one(k);
  for (const auto& c : curves) {
    const Scalar v = parshin_symbol(f1, f2, f3, make_flag(c, point_on(c, alpha, beta))).value;
    total *= v;
    r.local.push_back({c.label(), v.to_string()});
    r.certificate.support.push_back(c.label());
  }
  r.aggregate = total.to_string();
  r.pass = total.is_one();
  r.certificate.argument =
      "along any other curve through the point every f_i is a unit, so the a1 column of the digit matrix is 0";
  // Random graphs y = beta + (x - alpha) r(x) through the point that are not in the support.
  std::mt19937_64 rng(detail::kSpotSeed);
  const Poly xa(k, {-alpha, Scalar::one(k)});
  std::uniform_int_distribution<int> deg(0, 2);
  for (int i = 0, attempts = 0; i < kSpotChecks && attempts < 400; ++attempts) {
    Poly s = Poly::constant(beta) + xa * random_poly(k, static_cast<std::size_t>(deg(rng)), rng, 7);
    const SurfaceCurve c = SurfaceCurve::graph(s);
    if (std::find(curves.begin(), curves.end(), c) != curves.end()) continue;
    const Scalar v = parshin_symbol(f1, f2, f3, make_flag(c, point_on(c, alpha, beta))).value;
    r.certificate.spot_checks.push_back({c.label(), v.to_string()});
    if (!v.is_one()) r.certificate.spot_checks_trivial = false;
    ++i;
  }
  if (!r.certificate.spot_checks_trivial) r.pass = false;
  return r;
}

}  // namespace recip
