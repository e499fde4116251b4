#pragma once
// Local symbols on the projective line: degree, tame, and the eps-residue pairings.

#include <string>
#include <utility>
#include <vector>

#include "recip/curve/milnor.hpp"
#include "recip/curve/series.hpp"

namespace recip {

/// A local symbol value together with where and how it was computed.
struct SymbolValue {
  Scalar value;
  std::string symbol;
  std::string place;
  std::vector<std::string> inputs;
  std::string formula;
};

inline long degree_symbol(const RationalFunction& f, const Place& p) {
  return static_cast<long>(p.degree()) * valuation(f, p);
}

/// Tame symbol before the norm, as an element of k(p).
inline Scalar tame_symbol_local(const RationalFunction& f, const RationalFunction& g, const Place& p) {
  const int a = valuation(f, p), b = valuation(g, p);
  const Scalar uf = reduce_at(unit_part(f, p), p);
  const Scalar ug = reduce_at(unit_part(g, p), p);
  Scalar v = uf.pow(static_cast<long>(b)) / ug.pow(static_cast<long>(a));
  if ((static_cast<long>(a) * b) % 2 != 0) v = -v;
  return v;
}

/// N_{k(p)/k}((-1)^{v(f)v(g)} (f^{v(g)} / g^{v(f)})(p)).
inline SymbolValue tame_symbol(const RationalFunction& f, const RationalFunction& g, const Place& p) {
  if (f.is_zero() || g.is_zero()) throw ZeroFunctionError("tame symbol of a zero function");
  return {norm_to(tame_symbol_local(f, g, p), f.field()), "tame", p.label(), {to_string(f), to_string(g)},
          "N((-1)^(v(f)v(g)) f^v(g)/g^v(f))"};
}

/// 1 - eps1 eps2 Res_p(f dg) in k[eps1, eps2]/(eps1^2, eps2^2).
inline SymbolValue residue_pairing(const RationalFunction& f, const RationalFunction& g, const Place& p) {
  const FieldPtr& k = f.field();
  const FieldPtr ke = Field::square_zero(k, 2);
  const Scalar r = residue_fdg(f, g, p);
  const Scalar e12 = Scalar::epsilon(ke, 1) * Scalar::epsilon(ke, 2);
  Scalar v = Scalar::one(ke) - e12 * Scalar::embed(ke, r);
  // Constant term 1 and no pure eps1 / eps2 part.
  const auto& c = v.coords();
  if (!c[0].is_one() || !c[1].is_zero() || !c[2].is_zero()) throw Error("residue pairing left the principal units");
  return {std::move(v), "eps-pairing", p.label(), {to_string(f), to_string(g)}, "1 - eps1*eps2*Res(f dg)"};
}

/// 1 - eps^2 Res_p(f dg) in k[eps]/(eps^3).
inline SymbolValue eps3_pairing(const RationalFunction& f, const RationalFunction& g, const Place& p) {
  const FieldPtr& k = f.field();
  const FieldPtr ke = Field::truncated(k, 3);
  const Scalar r = residue_fdg(f, g, p);
  const Scalar e = Scalar::epsilon(ke, 1);
  Scalar v = Scalar::one(ke) - e * e * Scalar::embed(ke, r);
  const auto& c = v.coords();
  if (!c[0].is_one() || !c[1].is_zero()) throw Error("eps3 pairing left the principal units");
  return {std::move(v), "eps3-pairing", p.label(), {to_string(f), to_string(g)}, "1 - eps^2*Res(f dg)"};
}

/// The eps1 eps2 coefficient of a residue-pairing value, negated: recovers Res_p(f dg).
inline Scalar pairing_residue(const Scalar& v) {
  const FieldPtr& ke = v.field();
  if (ke->kind() != FieldKind::nilpotent) throw Error("not a pairing value");
  if (ke->nil_kind() == NilKind::square_zero) return -v.coords()[3];
  return -v.coords()[2];
}

/// Valuation data of a place of P^1, for milnor_boundary over k(t).
class PlaceLocalizer {
 public:
  using Source = RationalFunction;
  using Target = Scalar;
  explicit PlaceLocalizer(Place p) : p_(std::move(p)) {}
  int valuation(const RationalFunction& f) const { return recip::valuation(f, p_); }
  RationalFunction unit_part(const RationalFunction& f) const { return recip::unit_part(f, p_); }
  Scalar reduce(const RationalFunction& u) const { return reduce_at(u, p_); }
  Scalar minus_one() const { return -Scalar::one(p_.residue_field()); }
  bool is_one(const Scalar& s) const { return s.is_one(); }
  const Place& place() const { return p_; }

 private:
  Place p_;
};

/// Pre-norm value of the boundary of {f, g} at p, in k(p).
inline Scalar tame_via_boundary(const RationalFunction& f, const RationalFunction& g, const Place& p) {
  const auto b = milnor_boundary(MilnorSymbol<RationalFunction>::wedge({f, g}), PlaceLocalizer(p));
  return evaluate_weight_one(b, Scalar::one(p.residue_field()));
}

}  // namespace recip
