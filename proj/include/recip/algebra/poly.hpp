#pragma once
// Dense univariate polynomials over a Field.

#include <gmpxx.h>

#include <algorithm>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "recip/algebra/field.hpp"

namespace recip {

class Poly {
 public:
  Poly() = default;
  explicit Poly(FieldPtr f) : f_(std::move(f)) {}
  /// Coefficients low-to-high.
  Poly(FieldPtr f, std::vector<Scalar> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {
    for (const auto& c : c_) require_same(c.field(), f_);
    trim();
  }

  static Poly zero(const FieldPtr& f) { return Poly(f); }
  static Poly one(const FieldPtr& f) { return constant(Scalar::one(f)); }
  static Poly constant(const Scalar& c) { return Poly(c.field(), {c}); }
  static Poly monomial(const Scalar& c, std::size_t n) {
    std::vector<Scalar> v(n + 1, Scalar::zero(c.field()));
    v[n] = c;
    return Poly(c.field(), std::move(v));
  }
  static Poly variable(const FieldPtr& f) { return monomial(Scalar::one(f), 1); }
  static Poly from_ints(const FieldPtr& f, const std::vector<long>& low_to_high) {
    std::vector<Scalar> v;
    for (long x : low_to_high) v.push_back(Scalar::from_int(f, x));
    return Poly(f, std::move(v));
  }

  const FieldPtr& field() const { return f_; }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Scalar::zero(f_); }
  Scalar lead() const { return c_.empty() ? Scalar::zero(f_) : c_.back(); }
  Scalar constant_term() const { return coeff(0); }

  Poly operator-() const {
    Poly r(f_);
    for (const auto& c : c_) r.c_.push_back(-c);
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    require_same(a.f_, b.f_);
    Poly r(a.f_);
    const std::size_t n = std::max(a.c_.size(), b.c_.size());
    r.c_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) r.c_.push_back(a.coeff(i) + b.coeff(i));
    r.trim();
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    require_same(a.f_, b.f_);
    if (a.is_zero() || b.is_zero()) return Poly(a.f_);
    std::vector<Scalar> out(a.c_.size() + b.c_.size() - 1, Scalar::zero(a.f_));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(a.f_, std::move(out));
  }

  Poly scale(const Scalar& s) const {
    Poly r(f_);
    for (const auto& c : c_) r.c_.push_back(c * s);
    r.trim();
    return r;
  }

  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  /// Quotient and remainder; the divisor's leading coefficient must be a unit.
  std::pair<Poly, Poly> divmod(const Poly& d) const {
    require_same(f_, d.f_);
    if (d.is_zero()) throw NonUnitError("polynomial division by zero");
    Poly r = *this;
    if (degree() < d.degree()) return {Poly(f_), r};
    const Scalar inv = d.lead().inverse();
    std::vector<Scalar> q(static_cast<std::size_t>(degree() - d.degree() + 1), Scalar::zero(f_));
    const std::size_t dd = d.c_.size() - 1;
    for (std::size_t i = r.c_.size(); i-- > dd;) {
      const Scalar c = r.c_[i] * inv;
      if (c.is_zero()) continue;
      q[i - dd] = c;
      for (std::size_t j = 0; j <= dd; ++j) r.c_[i - dd + j] -= c * d.c_[j];
    }
    r.trim();
    return {Poly(f_, std::move(q)), r};
  }
  friend Poly operator/(const Poly& a, const Poly& b) { return a.divmod(b).first; }
  friend Poly operator%(const Poly& a, const Poly& b) { return a.divmod(b).second; }

  friend bool operator==(const Poly& a, const Poly& b) { return same_field(a.f_, b.f_) && a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Degree first, then coefficients from the top down.
  int compare(const Poly& o) const {
    if (degree() != o.degree()) return degree() < o.degree() ? -1 : 1;
    for (std::size_t i = c_.size(); i-- > 0;) {
      int c = c_[i].compare(o.c_[i]);
      if (c != 0) return c;
    }
    return 0;
  }
  friend bool operator<(const Poly& a, const Poly& b) { return a.compare(b) < 0; }

  Poly monic() const {
    if (is_zero()) return *this;
    return scale(lead().inverse());
  }

  Poly derivative() const {
    Poly r(f_);
    for (std::size_t i = 1; i < c_.size(); ++i) r.c_.push_back(c_[i] * Scalar::from_int(f_, static_cast<long>(i)));
    r.trim();
    return r;
  }

  /// Evaluation at x, which may live in f or in a ring built over f.
  Scalar eval(const Scalar& x) const {
    Scalar acc = Scalar::zero(x.field());
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + Scalar::embed(x.field(), c_[i]);
    return acc;
  }

  /// p(t + a).
  Poly shift(const Scalar& a) const {
    Poly acc(f_);
    const Poly lin(f_, {a, Scalar::one(f_)});
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * lin + constant(c_[i]);
    return acc;
  }

  /// t^n p(1/t) for n >= degree.
  Poly reverse(std::size_t n) const {
    std::vector<Scalar> v(n + 1, Scalar::zero(f_));
    for (std::size_t i = 0; i < c_.size(); ++i) v[n - i] = c_[i];
    return Poly(f_, std::move(v));
  }

  /// p(q(t)).
  Poly compose(const Poly& q) const {
    Poly acc(f_);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * q + constant(c_[i]);
    return acc;
  }

  /// Coefficients mapped into a ring built over the current field.
  Poly base_change(const FieldPtr& target) const {
    std::vector<Scalar> v;
    for (const auto& c : c_) v.push_back(Scalar::embed(target, c));
    return Poly(target, std::move(v));
  }

  Poly pow(unsigned long e) const {
    Poly r = one(f_);
    Poly b = *this;
    while (e) {
      if (e & 1) r *= b;
      e >>= 1;
      if (e) b *= b;
    }
    return r;
  }

  /// Highest power of d dividing this (this nonzero, d non-constant).
  int multiplicity(const Poly& d) const {
    int m = 0;
    Poly r = *this;
    for (;;) {
      auto [q, rem] = r.divmod(d);
      if (!rem.is_zero()) return m;
      r = std::move(q);
      ++m;
    }
  }

  std::string to_string(const std::string& var = "t") const {
    std::vector<std::string> terms;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i].is_zero()) continue;
      terms.push_back(detail::format_term(c_[i].to_string(), c_[i].is_one(), detail::power_name(var, i)));
    }
    return detail::join_terms(terms);
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  FieldPtr f_;
  std::vector<Scalar> c_;
};

/// Monic gcd (zero if both are zero).
inline Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Returns (g, s, t) with s a + t b = g, g monic.
inline std::tuple<Poly, Poly, Poly> ext_gcd(const Poly& a, const Poly& b) {
  const FieldPtr& f = a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::one(f), s1 = Poly::zero(f);
  Poly t0 = Poly::zero(f), t1 = Poly::one(f);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Scalar inv = r0.lead().inverse();
  return {r0.scale(inv), s0.scale(inv), t0.scale(inv)};
}

inline Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return (a * b) % m; }

/// base^e mod m.
inline Poly powmod(const Poly& base, const mpz_class& e, const Poly& m) {
  Poly result = Poly::one(base.field()) % m;
  Poly b = base % m;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mulmod(result, result, m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mulmod(result, b, m);
  }
  return result;
}

template <class Rng>
Poly random_poly(const FieldPtr& f, std::size_t degree, Rng& rng, long rational_bound = 9) {
  std::vector<Scalar> v;
  for (std::size_t i = 0; i <= degree; ++i) v.push_back(random_scalar(f, rng, rational_bound));
  return Poly(f, std::move(v));
}

template <class Rng>
Poly random_monic(const FieldPtr& f, std::size_t degree, Rng& rng, long rational_bound = 9) {
  std::vector<Scalar> v;
  for (std::size_t i = 0; i < degree; ++i) v.push_back(random_scalar(f, rng, rational_bound));
  v.push_back(Scalar::one(f));
  return Poly(f, std::move(v));
}

}  // namespace recip
