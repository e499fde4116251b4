#pragma once
// Closed points of the projective line over k, valuations, reduction and divisors.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "recip/algebra/factor.hpp"
#include "recip/algebra/rational_function.hpp"

namespace recip {

class Place {
 public:
  /// The place of a monic irreducible polynomial; irreducibility is checked.
  static Place finite(const Poly& p) {
    if (p.degree() < 1 || !p.is_monic()) throw Error("a place needs a monic polynomial of positive degree");
    if (!is_irreducible(p)) throw Error("place polynomial " + p.to_string() + " is not (certifiably) irreducible");
    return unchecked(p);
  }
  /// Caller guarantees p is monic irreducible (e.g. it came out of factorize).
  static Place unchecked(const Poly& p) {
    Place r;
    r.k_ = p.field();
    r.p_ = p;
    r.kp_ = p.degree() == 1 ? r.k_ : Field::extension(r.k_, p.coeffs(), "t");
    return r;
  }
  static Place infinity(const FieldPtr& k) {
    Place r;
    r.k_ = k;
    r.kp_ = k;
    return r;
  }

  bool is_infinity() const { return !p_.has_value(); }
  const Poly& poly() const { return *p_; }
  const FieldPtr& base() const { return k_; }
  /// k(p): k itself for rational places, k[t]/(p) otherwise.
  const FieldPtr& residue_field() const { return kp_; }
  unsigned degree() const { return p_ ? static_cast<unsigned>(p_->degree()) : 1u; }

  /// p(t), or 1/t at infinity.
  RationalFunction uniformizer() const {
    if (p_) return RationalFunction(*p_);
    return RationalFunction(Poly::variable(k_)).inverse();
  }

  /// The point t = alpha of a degree-one finite place.
  Scalar rational_point() const {
    if (!p_ || p_->degree() != 1) throw Error("not a rational finite place");
    return -p_->constant_term();
  }

  /// Class of t in k(p) (finite places only).
  Scalar class_of_t() const {
    if (!p_) throw Error("infinity has no class of t");
    return p_->degree() == 1 ? rational_point() : Scalar::generator(kp_);
  }

  std::string label(const std::string& var = "t") const { return p_ ? "(" + p_->to_string(var) + ")" : "inf"; }

  /// Degree first, then coefficients; infinity last.
  friend bool operator<(const Place& a, const Place& b) {
    if (a.is_infinity() || b.is_infinity()) return !a.is_infinity() && b.is_infinity();
    return *a.p_ < *b.p_;
  }
  friend bool operator==(const Place& a, const Place& b) {
    if (a.is_infinity() != b.is_infinity()) return false;
    return a.is_infinity() ? same_field(a.k_, b.k_) : *a.p_ == *b.p_;
  }
  friend bool operator!=(const Place& a, const Place& b) { return !(a == b); }

 private:
  FieldPtr k_;
  std::optional<Poly> p_;
  FieldPtr kp_;
};

inline int valuation(const RationalFunction& f, const Place& p) {
  if (f.is_zero()) throw ZeroFunctionError("valuation of the zero function");
  if (p.is_infinity()) return static_cast<int>(f.denominator().degree() - f.numerator().degree());
  return f.numerator().multiplicity(p.poly()) - f.denominator().multiplicity(p.poly());
}

/// Image of a polynomial in k(p) (finite places).
inline Scalar poly_class(const Poly& a, const Place& p) {
  if (p.degree() == 1) return a.eval(p.rational_point());
  const Poly r = a % p.poly();
  std::vector<Scalar> c = r.coeffs();
  return Scalar::from_coords(p.residue_field(), std::move(c));
}

/// f(p) in k(p); throws PoleError when v_p(f) < 0.
inline Scalar reduce_at(const RationalFunction& f, const Place& p) {
  const int v = valuation(f, p);
  if (v < 0) throw PoleError("function has a pole at " + p.label());
  if (v > 0) return Scalar::zero(p.residue_field());
  if (p.is_infinity()) {
    // deg num == deg den here.
    return f.numerator().lead() / f.denominator().lead();
  }
  return poly_class(f.numerator(), p) / poly_class(f.denominator(), p);
}

/// f / z^{v_p(f)} for the fixed uniformizer z of p.
inline RationalFunction unit_part(const RationalFunction& f, const Place& p) {
  const int v = valuation(f, p);
  if (v == 0) return f;
  return f * p.uniformizer().pow(-v);
}

/// Finite formal sum of places with nonzero multiplicities, in place order.
struct Divisor {
  std::vector<std::pair<Place, int>> terms;

  /// Sum of deg(p) * mult.
  long degree() const {
    long d = 0;
    for (const auto& [p, m] : terms) d += static_cast<long>(p.degree()) * m;
    return d;
  }
  int multiplicity(const Place& p) const {
    for (const auto& [q, m] : terms) {
      if (q == p) return m;
    }
    return 0;
  }
  std::vector<Place> support() const {
    std::vector<Place> s;
    for (const auto& [p, m] : terms) s.push_back(p);
    return s;
  }
};

/// Finite places where f has a zero or pole, as a factorization of num * den^-1.
/// Uses the factored form of f when present.
inline Factorization factor_function(const RationalFunction& f) {
  if (f.is_zero()) throw ZeroFunctionError("divisor of the zero function");
  std::vector<std::pair<Poly, int>> pieces;
  if (!f.factored().empty()) {
    for (const auto& pc : f.factored()) pieces.emplace_back(pc.poly, pc.mult);
  } else {
    if (!f.numerator().is_constant()) pieces.emplace_back(f.numerator().monic(), 1);
    if (!f.denominator().is_constant()) pieces.emplace_back(f.denominator(), -1);
  }
  return factorize_hinted(f.unit(), pieces);
}

inline Divisor divisor(const RationalFunction& f) {
  const Factorization fz = factor_function(f);
  Divisor d;
  for (const auto& fac : fz.factors) {
    if (fac.multiplicity != 0) d.terms.emplace_back(Place::unchecked(fac.poly), fac.multiplicity);
  }
  const Place inf = Place::infinity(f.field());
  const int vinf = valuation(f, inf);
  if (vinf != 0) d.terms.emplace_back(inf, vinf);
  return d;
}

/// Sorted union of the supports of the given functions, always including infinity.
inline std::vector<Place> joint_support(const std::vector<RationalFunction>& fs) {
  if (fs.empty()) throw Error("joint support of an empty list");
  std::vector<Place> out;
  for (const auto& f : fs) {
    for (const auto& [p, m] : divisor(f).terms) {
      if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    }
  }
  const Place inf = Place::infinity(fs.front().field());
  if (std::find(out.begin(), out.end(), inf) == out.end()) out.push_back(inf);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace recip
