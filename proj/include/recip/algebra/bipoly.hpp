#pragma once
// Polynomials in x and y, stored as polynomials in y with coefficients in k[x].

#include <string>
#include <utility>
#include <vector>

#include "recip/algebra/rational_function.hpp"

namespace recip {

class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(FieldPtr f) : f_(std::move(f)) {}
  /// c[j] is the coefficient of y^j.
  BiPoly(FieldPtr f, std::vector<Poly> c) : f_(std::move(f)), c_(std::move(c)) {
    for (auto& p : c_) {
      if (!p.field()) p = Poly(f_);
      require_same(p.field(), f_);
    }
    trim();
  }

  static BiPoly zero(const FieldPtr& f) { return BiPoly(f); }
  static BiPoly one(const FieldPtr& f) { return constant(Scalar::one(f)); }
  static BiPoly constant(const Scalar& c) { return BiPoly(c.field(), {Poly::constant(c)}); }
  static BiPoly from_x(const Poly& p) { return BiPoly(p.field(), {p}); }
  /// p(y).
  static BiPoly from_y(const Poly& p) {
    std::vector<Poly> c;
    for (const auto& s : p.coeffs()) c.push_back(Poly::constant(s));
    return BiPoly(p.field(), std::move(c));
  }
  static BiPoly var_x(const FieldPtr& f) { return from_x(Poly::variable(f)); }
  static BiPoly var_y(const FieldPtr& f) { return BiPoly(f, {Poly(f), Poly::one(f)}); }

  const FieldPtr& field() const { return f_; }
  bool is_zero() const { return c_.empty(); }
  long degree_y() const { return static_cast<long>(c_.size()) - 1; }
  long degree_x() const {
    long d = -1;
    for (const auto& p : c_) d = std::max(d, p.degree());
    return d;
  }
  bool is_constant() const { return c_.size() <= 1 && (c_.empty() || c_[0].is_constant()); }
  bool depends_on_y() const { return c_.size() > 1; }
  bool depends_on_x() const {
    for (const auto& p : c_) {
      if (p.degree() > 0) return true;
    }
    return false;
  }
  Scalar constant_term() const { return c_.empty() ? Scalar::zero(f_) : c_[0].coeff(0); }
  const std::vector<Poly>& coeffs() const { return c_; }
  Poly coeff_y(std::size_t j) const { return j < c_.size() ? c_[j] : Poly(f_); }
  Poly lead_y() const { return c_.empty() ? Poly(f_) : c_.back(); }

  BiPoly operator-() const {
    BiPoly r(f_);
    for (const auto& p : c_) r.c_.push_back(-p);
    return r;
  }
  friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    require_same(a.f_, b.f_);
    BiPoly r(a.f_);
    const std::size_t n = std::max(a.c_.size(), b.c_.size());
    for (std::size_t j = 0; j < n; ++j) r.c_.push_back(a.coeff_y(j) + b.coeff_y(j));
    r.trim();
    return r;
  }
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    require_same(a.f_, b.f_);
    if (a.is_zero() || b.is_zero()) return BiPoly(a.f_);
    std::vector<Poly> out(a.c_.size() + b.c_.size() - 1, Poly(a.f_));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return BiPoly(a.f_, std::move(out));
  }
  BiPoly& operator+=(const BiPoly& b) { return *this = *this + b; }
  BiPoly& operator*=(const BiPoly& b) { return *this = *this * b; }

  BiPoly scale(const Scalar& s) const {
    BiPoly r(f_);
    for (const auto& p : c_) r.c_.push_back(p.scale(s));
    r.trim();
    return r;
  }
  BiPoly scale(const Poly& px) const {
    BiPoly r(f_);
    for (const auto& p : c_) r.c_.push_back(p * px);
    r.trim();
    return r;
  }
  /// Multiply by y^k.
  BiPoly shift_y(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<Poly> c(k, Poly(f_));
    c.insert(c.end(), c_.begin(), c_.end());
    return BiPoly(f_, std::move(c));
  }

  friend bool operator==(const BiPoly& a, const BiPoly& b) { return same_field(a.f_, b.f_) && a.c_ == b.c_; }
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

  Scalar eval(const Scalar& x, const Scalar& y) const {
    Scalar acc = Scalar::zero(y.field());
    for (std::size_t j = c_.size(); j-- > 0;) acc = acc * y + c_[j].eval(x);
    return acc;
  }

  /// F(x, b) as a polynomial in x.
  Poly restrict_y(const Scalar& b) const {
    Poly acc(f_);
    for (std::size_t j = c_.size(); j-- > 0;) acc = acc.scale(b) + c_[j];
    return acc;
  }

  /// F(x, s(x) + y).
  BiPoly substitute_y_shift(const Poly& s) const {
    BiPoly acc(f_);
    const BiPoly lin(f_, {s, Poly::one(f_)});
    for (std::size_t j = c_.size(); j-- > 0;) acc = acc * lin + from_x(c_[j]);
    return acc;
  }

  /// F(y, x).
  BiPoly swapped() const {
    const long dx = degree_x();
    if (dx < 0) return *this;
    std::vector<Poly> out;
    for (long i = 0; i <= dx; ++i) {
      std::vector<Scalar> v;
      for (const auto& p : c_) v.push_back(p.coeff(static_cast<std::size_t>(i)));
      out.emplace_back(f_, std::move(v));
    }
    return BiPoly(f_, std::move(out));
  }

  /// x^n F(1/x, y), n >= degree_x.
  BiPoly reverse_x(std::size_t n) const {
    BiPoly r(f_);
    for (const auto& p : c_) r.c_.push_back(p.is_zero() ? p : p.reverse(n));
    r.trim();
    return r;
  }

  /// y^n F(x, 1/y), n >= degree_y.
  BiPoly reverse_y(std::size_t n) const {
    std::vector<Poly> c(n + 1, Poly(f_));
    for (std::size_t j = 0; j < c_.size(); ++j) c[n - j] = c_[j];
    return BiPoly(f_, std::move(c));
  }

  /// Monic gcd in k[x] of the y-coefficients.
  Poly content() const {
    Poly g(f_);
    for (const auto& p : c_) g = gcd(g, p);
    return g;
  }

  std::string to_string() const {
    std::vector<std::string> terms;
    for (std::size_t j = c_.size(); j-- > 0;) {
      const auto& p = c_[j];
      for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        const Scalar& c = p.coeffs()[i];
        if (c.is_zero()) continue;
        std::string mono = detail::power_name("x", i);
        const std::string ym = detail::power_name("y", j);
        if (!ym.empty()) mono = mono.empty() ? ym : mono + "*" + ym;
        terms.push_back(detail::format_term(c.to_string(), c.is_one(), mono));
      }
    }
    return detail::join_terms(terms);
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  FieldPtr f_;
  std::vector<Poly> c_;
};

inline Scalar normalize_unit(const BiPoly& p) { return p.lead_y().lead(); }

namespace detail {

inline BiPoly divide_coeffs(const BiPoly& a, const Poly& d) {
  std::vector<Poly> c;
  for (const auto& p : a.coeffs()) c.push_back(divide_exact(p, d));
  return BiPoly(a.field(), std::move(c));
}

inline BiPoly primitive_part(const BiPoly& a) {
  if (a.is_zero()) return a;
  return divide_coeffs(a, a.content());
}

/// lc(b)^(deg a - deg b + 1) a mod b in k[x][y].
inline BiPoly pseudo_remainder(BiPoly a, const BiPoly& b) {
  const long db = b.degree_y();
  const Poly lb = b.lead_y();
  long steps = a.degree_y() - db + 1;
  while (!a.is_zero() && a.degree_y() >= db) {
    const Poly la = a.lead_y();
    const std::size_t sh = static_cast<std::size_t>(a.degree_y() - db);
    a = a.scale(lb) - b.scale(la).shift_y(sh);
    --steps;
  }
  for (; steps > 0; --steps) a = a.scale(lb);
  return a;
}

}  // namespace detail

/// Exact quotient a / b; throws if b does not divide a.
inline BiPoly divide_exact(BiPoly a, const BiPoly& b) {
  if (b.is_zero()) throw ZeroFunctionError("division by the zero polynomial");
  BiPoly q(a.field());
  const Poly lb = b.lead_y();
  while (!a.is_zero()) {
    if (a.degree_y() < b.degree_y()) throw Error("inexact bivariate division");
    const Poly c = divide_exact(a.lead_y(), lb);
    const std::size_t sh = static_cast<std::size_t>(a.degree_y() - b.degree_y());
    const BiPoly term = BiPoly::from_x(c).shift_y(sh);
    a = a - term * b;
    q += term;
  }
  return q;
}

/// Normalized gcd (leading scalar 1) via primitive polynomial remainder sequences.
inline BiPoly poly_gcd(const BiPoly& a0, const BiPoly& b0) {
  const FieldPtr& f = a0.field();
  if (a0.is_zero() && b0.is_zero()) return BiPoly(f);
  auto norm = [](const BiPoly& p) { return p.scale(normalize_unit(p).inverse()); };
  if (a0.is_zero()) return norm(b0);
  if (b0.is_zero()) return norm(a0);
  const Poly c = gcd(a0.content(), b0.content());
  BiPoly a = detail::primitive_part(a0);
  BiPoly b = detail::primitive_part(b0);
  if (a.degree_y() < b.degree_y()) std::swap(a, b);
  while (!b.is_zero()) {
    BiPoly r = detail::pseudo_remainder(a, b);
    a = std::move(b);
    b = detail::primitive_part(r);
  }
  BiPoly g = a.degree_y() == 0 ? BiPoly::one(f) : detail::primitive_part(a);
  return norm(g.scale(c));
}

/// Element of k(x, y).
using RationalFunction2 = Fraction<BiPoly>;

inline std::string to_string(const RationalFunction2& f) {
  if (f.denominator().is_constant()) return f.numerator().to_string();
  std::string n = f.numerator().to_string();
  if (!f.numerator().is_constant() || detail::needs_parens(n)) n = "(" + n + ")";
  return n + "/(" + f.denominator().to_string() + ")";
}

}  // namespace recip
