#pragma once
// Truncated Laurent series and residues of f dg.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "recip/curve/place.hpp"

namespace recip {

/// sum_{n >= val} c_n z^n, with coefficients known for exponents below `bound`.
/// A series with no known nonzero coefficient has val == bound.
class LaurentSeries {
 public:
  LaurentSeries(FieldPtr f, long val, std::vector<Scalar> coeffs, long bound)
      : f_(std::move(f)), val_(val), c_(std::move(coeffs)), bound_(bound) {
    if (static_cast<long>(c_.size()) > bound_ - val_) c_.resize(static_cast<std::size_t>(std::max(0L, bound_ - val_)));
    normalize();
  }
  static LaurentSeries known_zero(const FieldPtr& f, long bound) { return LaurentSeries(f, bound, {}, bound); }

  const FieldPtr& field() const { return f_; }
  /// Exponent of the first nonzero coefficient, or the bound when none is known.
  long valuation() const { return val_; }
  long bound() const { return bound_; }
  /// Number of known terms from the valuation on.
  long precision() const { return bound_ - val_; }
  bool known_zero() const { return c_.empty(); }
  const std::vector<Scalar>& coeffs() const { return c_; }

  /// Coefficient of z^n; n must be below the bound.
  Scalar coeff(long n) const {
    if (n >= bound_) throw Error("coefficient of z^" + std::to_string(n) + " is beyond the known precision");
    if (n < val_) return Scalar::zero(f_);
    return c_[static_cast<std::size_t>(n - val_)];
  }

  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    require_same(a.f_, b.f_);
    const long lo = std::min(a.val_, b.val_);
    const long hi = std::min(a.bound_, b.bound_);
    std::vector<Scalar> c;
    for (long n = lo; n < hi; ++n) c.push_back(a.coeff(n) + b.coeff(n));
    return LaurentSeries(a.f_, lo, std::move(c), hi);
  }
  LaurentSeries operator-() const {
    std::vector<Scalar> c;
    for (const auto& x : c_) c.push_back(-x);
    return LaurentSeries(f_, val_, std::move(c), bound_);
  }
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    require_same(a.f_, b.f_);
    const long hi = std::min(a.val_ + b.bound_, b.val_ + a.bound_);
    const long lo = a.val_ + b.val_;
    if (a.known_zero() || b.known_zero()) return known_zero(a.f_, hi);
    std::vector<Scalar> c(static_cast<std::size_t>(std::max(0L, hi - lo)), Scalar::zero(a.f_));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      for (std::size_t j = 0; j < b.c_.size() && i + j < c.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return LaurentSeries(a.f_, lo, std::move(c), hi);
  }

  /// Multiplicative inverse; the leading coefficient must be a unit.
  LaurentSeries inverse() const {
    if (known_zero()) throw ZeroFunctionError("inverse of a series with no known nonzero term");
    const long n = precision();
    const Scalar inv0 = c_[0].inverse();
    std::vector<Scalar> d(static_cast<std::size_t>(n), Scalar::zero(f_));
    d[0] = inv0;
    for (long k = 1; k < n; ++k) {
      Scalar s = Scalar::zero(f_);
      for (long j = 1; j <= k; ++j) s += c_[static_cast<std::size_t>(j)] * d[static_cast<std::size_t>(k - j)];
      d[static_cast<std::size_t>(k)] = -s * inv0;
    }
    return LaurentSeries(f_, -val_, std::move(d), -val_ + n);
  }

  /// d/dz.
  LaurentSeries derivative() const {
    std::vector<Scalar> c;
    for (long n = val_; n < bound_; ++n) c.push_back(coeff(n) * Scalar::from_int(f_, n));
    return LaurentSeries(f_, val_ - 1, std::move(c), bound_ - 1);
  }

  std::string to_string(const std::string& var = "z") const {
    std::vector<std::string> terms;
    for (long n = val_; n < bound_; ++n) {
      const Scalar& c = c_[static_cast<std::size_t>(n - val_)];
      if (c.is_zero()) continue;
      std::string mono = n == 0 ? "" : (n == 1 ? var : var + "^" + (n < 0 ? "(" + std::to_string(n) + ")" : std::to_string(n)));
      terms.push_back(detail::format_term(c.to_string(), c.is_one(), mono));
    }
    std::string s = terms.empty() ? "0" : detail::join_terms(terms);
    return s + " + O(" + var + "^" + std::to_string(bound_) + ")";
  }

 private:
  void normalize() {
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead].is_zero()) ++lead;
    if (lead == c_.size()) {
      c_.clear();
      val_ = bound_;
      return;
    }
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
    val_ += static_cast<long>(lead);
  }

  FieldPtr f_;
  long val_;
  std::vector<Scalar> c_;
  long bound_;
};

namespace detail {

/// Expansion of num/den at z = 0 with n_terms known from the valuation on.
inline LaurentSeries expand_at_zero(const Poly& num, const Poly& den, long n_terms) {
  const FieldPtr& f = num.field();
  if (num.is_zero()) throw ZeroFunctionError("expansion of the zero function");
  auto low_order = [](const Poly& p) {
    long k = 0;
    while (p.coeff(static_cast<std::size_t>(k)).is_zero()) ++k;
    return k;
  };
  const long a = low_order(num), b = low_order(den);
  std::vector<Scalar> nc, dc;
  for (long i = 0; i < n_terms; ++i) {
    nc.push_back(num.coeff(static_cast<std::size_t>(a + i)));
    dc.push_back(den.coeff(static_cast<std::size_t>(b + i)));
  }
  LaurentSeries n(f, 0, std::move(nc), n_terms);
  LaurentSeries d(f, 0, std::move(dc), n_terms);
  LaurentSeries q = n * d.inverse();
  std::vector<Scalar> c = q.coeffs();
  return LaurentSeries(f, q.valuation() + a - b, std::move(c), q.bound() + a - b);
}

}  // namespace detail

/// Expansion of f at a rational place in z = t - alpha, or in s = 1/t at infinity.
inline LaurentSeries laurent_expand(const RationalFunction& f, const Place& p, long n_terms) {
  if (n_terms < 1) throw Error("n_terms must be positive");
  if (!p.is_infinity() && p.degree() != 1) {
    throw UnsupportedError("laurent_expand needs a rational place; " + p.label() + " has degree " + std::to_string(p.degree()));
  }
  if (f.is_zero()) throw ZeroFunctionError("expansion of the zero function");
  if (p.is_infinity()) {
    const RationalFunction g = invert_variable(f);
    return detail::expand_at_zero(g.numerator(), g.denominator(), n_terms);
  }
  const Scalar alpha = p.rational_point();
  return detail::expand_at_zero(f.numerator().shift(alpha), f.denominator().shift(alpha), n_terms);
}

/// Expansion of f in z = t - theta over an extension K of k containing theta.
inline LaurentSeries laurent_expand_at(const RationalFunction& f, const Scalar& theta, long n_terms) {
  const FieldPtr& K = theta.field();
  const Poly n = f.numerator().base_change(K).shift(theta);
  const Poly d = f.denominator().base_change(K).shift(theta);
  return detail::expand_at_zero(n, d, n_terms);
}

/// Res_p(f dg): the z^-1 coefficient of f dg/dz, traced down to k for places of degree > 1.
inline Scalar residue_fdg(const RationalFunction& f, const RationalFunction& g, const Place& p) {
  if (f.is_zero() || g.is_zero()) throw ZeroFunctionError("residue of a form with a zero function");
  const FieldPtr& k = f.field();
  const int vf = valuation(f, p), vg = valuation(g, p);
  const long n = std::abs(vf) + std::abs(vg) + 2;
  LaurentSeries sf = LaurentSeries::known_zero(k, 0), sg = sf;
  if (p.is_infinity() || p.degree() == 1) {
    sf = laurent_expand(f, p, n);
    sg = laurent_expand(g, p, n);
  } else {
    const Scalar theta = p.class_of_t();
    sf = laurent_expand_at(f, theta, n);
    sg = laurent_expand_at(g, theta, n);
  }
  const Scalar r = (sf * sg.derivative()).coeff(-1);
  return trace_to(r, k);
}

}  // namespace recip
