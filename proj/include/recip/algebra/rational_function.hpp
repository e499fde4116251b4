#pragma once
/**
 * @file rational_function.hpp
 * @brief Reduced fractions of polynomials, with an optional factored form.
 *
 * Fraction<P> works for any polynomial type P that provides the free functions
 * `normalize_unit`, `poly_gcd` and `divide_exact` (see the Poly overloads below
 * and bipoly.hpp). The canonical form is num/den with gcd(num, den) = 1 and the
 * denominator normalized (leading scalar 1).
 *
 * The factored form records pieces (normalized, non-constant polynomials with
 * nonzero integer multiplicities) whose product, times the leading scalar of
 * the numerator, equals the fraction. Pieces need not be irreducible; they
 * record how the value was built (products, quotients, powers) and let
 * factorization proceed piece by piece.
 */

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "recip/algebra/poly.hpp"

namespace recip {

inline Scalar normalize_unit(const Poly& p) { return p.lead(); }
inline Poly poly_gcd(const Poly& a, const Poly& b) { return gcd(a, b); }
inline Poly divide_exact(const Poly& a, const Poly& b) {
  auto [q, r] = a.divmod(b);
  if (!r.is_zero()) throw Error("inexact polynomial division");
  return q;
}

template <class P>
class Fraction {
 public:
  struct Piece {
    P poly;
    int mult = 0;
  };

  Fraction() = default;
  explicit Fraction(const FieldPtr& f) : num_(P::zero(f)), den_(P::one(f)) {}
  /// A polynomial, recorded as a single piece.
  explicit Fraction(P num) : num_(std::move(num)), den_(P::one(num_.field())) {
    if (!num_.is_constant()) hint_.push_back({normalized(num_), 1});
    normalize_den();
  }

  static Fraction constant(const Scalar& c) { return Fraction(P::constant(c)); }

  /// num/den reduced; the factored form is (num)^1 (den)^-1.
  static Fraction from_parts(P num, P den) {
    if (den.is_zero()) throw ZeroFunctionError("zero denominator");
    Fraction r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    if (!r.num_.is_constant()) r.hint_.push_back({normalized(r.num_), 1});
    if (!r.den_.is_constant()) r.hint_.push_back({normalized(r.den_), -1});
    r.reduce();
    return r;
  }

  const FieldPtr& field() const { return num_.field(); }
  const P& numerator() const { return num_; }
  const P& denominator() const { return den_; }
  const std::vector<Piece>& factored() const { return hint_; }
  /// Leading scalar of the numerator (the denominator is normalized).
  Scalar unit() const { return normalize_unit(num_); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Scalar constant_value() const { return num_.constant_term() / den_.constant_term(); }

  Fraction operator-() const {
    Fraction r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend Fraction operator+(const Fraction& a, const Fraction& b) {
    return from_parts(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Fraction operator-(const Fraction& a, const Fraction& b) { return a + (-b); }

  friend Fraction operator*(const Fraction& a, const Fraction& b) {
    Fraction r;
    r.num_ = a.num_ * b.num_;
    r.den_ = a.den_ * b.den_;
    r.hint_ = a.hint_;
    r.hint_.insert(r.hint_.end(), b.hint_.begin(), b.hint_.end());
    r.reduce();
    return r;
  }

  Fraction inverse() const {
    if (is_zero()) throw ZeroFunctionError("zero denominator");
    Fraction r;
    r.num_ = den_;
    r.den_ = num_;
    r.hint_ = hint_;
    for (auto& pc : r.hint_) pc.mult = -pc.mult;
    r.reduce();
    return r;
  }

  friend Fraction operator/(const Fraction& a, const Fraction& b) { return a * b.inverse(); }

  Fraction pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Fraction r = constant(Scalar::one(field()));
    Fraction b = *this;
    while (e) {
      if (e & 1) r = r * b;
      e >>= 1;
      if (e) b = b * b;
    }
    return r;
  }

  Fraction scale(const Scalar& s) const {
    if (s.is_zero()) return Fraction(field());
    Fraction r = *this;
    r.num_ = r.num_.scale(s);
    return r;
  }

  friend bool operator==(const Fraction& a, const Fraction& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const Fraction& a, const Fraction& b) { return !(a == b); }

  /// Product of the factored form equals the fraction exactly.
  bool factored_consistent() const {
    if (is_zero()) return hint_.empty();
    P n = P::constant(unit());
    P d = P::one(field());
    for (const auto& pc : hint_) {
      const int m = pc.mult > 0 ? pc.mult : -pc.mult;
      P& target = pc.mult > 0 ? n : d;
      for (int i = 0; i < m; ++i) target = target * pc.poly;
    }
    return n * den_ == num_ * d;
  }

  /// Replace the factored form; throws when the product does not match.
  void set_factored(std::vector<Piece> pieces) {
    std::vector<Piece> old = std::move(hint_);
    hint_.clear();
    for (auto& pc : pieces) {
      if (pc.poly.is_zero()) throw ZeroFunctionError("zero piece in factored form");
      if (pc.poly.is_constant() || pc.mult == 0) continue;
      hint_.push_back({normalized(pc.poly), pc.mult});
    }
    merge_hint();
    if (!factored_consistent()) {
      hint_ = std::move(old);
      throw Error("factored form does not match the function");
    }
  }

 private:
  static P normalized(const P& p) { return p.scale(normalize_unit(p).inverse()); }

  void normalize_den() {
    const Scalar s = normalize_unit(den_);
    if (!s.is_one()) {
      const Scalar inv = s.inverse();
      num_ = num_.scale(inv);
      den_ = den_.scale(inv);
    }
  }

  void merge_hint() {
    std::vector<Piece> out;
    for (auto& pc : hint_) {
      bool merged = false;
      for (auto& o : out) {
        if (o.poly == pc.poly) {
          o.mult += pc.mult;
          merged = true;
          break;
        }
      }
      if (!merged) out.push_back(std::move(pc));
    }
    hint_.clear();
    for (auto& o : out) {
      if (o.mult != 0) hint_.push_back(std::move(o));
    }
  }

  void reduce() {
    if (den_.is_zero()) throw ZeroFunctionError("zero denominator");
    if (num_.is_zero()) {
      den_ = P::one(field());
      hint_.clear();
      return;
    }
    P g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = divide_exact(num_, g);
      den_ = divide_exact(den_, g);
    }
    normalize_den();
    merge_hint();
  }

  P num_;
  P den_;
  std::vector<Piece> hint_;
};

/// Element of k(t).
using RationalFunction = Fraction<Poly>;

inline RationalFunction variable_function(const FieldPtr& f) { return RationalFunction(Poly::variable(f)); }

inline RationalFunction derivative(const RationalFunction& f) {
  const Poly& n = f.numerator();
  const Poly& d = f.denominator();
  return RationalFunction::from_parts(n.derivative() * d - n * d.derivative(), d * d);
}

/// Value at x (in k or in a ring over k); throws PoleError if the denominator vanishes.
inline Scalar evaluate(const RationalFunction& f, const Scalar& x) {
  Scalar d = f.denominator().eval(x);
  if (!d.is_unit()) throw PoleError("function has a pole at " + x.to_string());
  return f.numerator().eval(x) / d;
}

/// Same function with coefficients mapped into an extension of k.
inline RationalFunction base_change(const RationalFunction& f, const FieldPtr& target) {
  RationalFunction r = RationalFunction::from_parts(f.numerator().base_change(target), f.denominator().base_change(target));
  return r;
}

/// f(1/t).
inline RationalFunction invert_variable(const RationalFunction& f) {
  const Poly& n = f.numerator();
  const Poly& d = f.denominator();
  const std::size_t m = static_cast<std::size_t>(std::max(n.degree(), d.degree()));
  return RationalFunction::from_parts(n.reverse(m), d.reverse(m));
}

inline std::string to_string(const RationalFunction& f, const std::string& var = "t") {
  if (f.denominator().is_constant()) return f.numerator().to_string(var);
  std::string n = f.numerator().to_string(var);
  if (!f.numerator().is_constant() || detail::needs_parens(n)) n = "(" + n + ")";
  return n + "/(" + f.denominator().to_string(var) + ")";
}

}  // namespace recip
