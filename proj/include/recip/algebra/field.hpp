#pragma once
/**
 * @file field.hpp
 * @brief Coefficient domains and their elements.
 *
 * A Field describes one of
 *  - the rationals (arbitrary precision, GMP backed),
 *  - a prime field F_p,
 *  - a simple extension base[a]/(m(a)) with m monic irreducible over the base,
 *  - a truncated nilpotent ring over a base field: either square-zero generators
 *    eps1..epsm (eps_i^2 = 0, commuting) or a single eps with eps^N = 0.
 *
 * Scalars carry a shared pointer to their Field and are immutable values.
 * Extension and nilpotent elements are stored densely: coordinates over the base
 * in the power basis (extensions) or in the monomial basis (nilpotent rings).
 */

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "recip/algebra/error.hpp"

namespace recip {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

enum class FieldKind { rational, prime, extension, nilpotent };
enum class NilKind { square_zero, truncated };

namespace detail {

__extension__ using u128 = unsigned __int128;
__extension__ using i128 = __int128;

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

inline std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return (s >= p || s < a) ? s - p : s;
}

inline std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + (p - b);
}

inline std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  i128 t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    i128 q = r / nr;
    std::swap(t, nt);
    nt -= q * t;
    std::swap(r, nr);
    nr -= q * r;
  }
  if (r != 1) throw NonUnitError("element is not invertible modulo " + std::to_string(p));
  if (t < 0) t += p;
  return static_cast<std::uint64_t>(t);
}

inline std::uint64_t mpz_mod_u64(const mpz_class& n, std::uint64_t p) {
  mpz_class p_z;
  mpz_import(p_z.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), p_z.get_mpz_t());
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, r.get_mpz_t());
  return out;
}

inline mpz_class u64_to_mpz(std::uint64_t v) {
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return z;
}

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(u64_to_mpz(n).get_mpz_t(), 40) > 0;
}

}  // namespace detail

/// An element of a coefficient domain.
class Scalar {
 public:
  Scalar() = default;

  static Scalar zero(const FieldPtr& f);
  static Scalar one(const FieldPtr& f);
  static Scalar from_int(const FieldPtr& f, const mpz_class& n);
  static Scalar from_int(const FieldPtr& f, long n) { return from_int(f, mpz_class(n)); }
  /// In characteristic p the denominator must be invertible.
  static Scalar from_rational(const FieldPtr& f, const mpq_class& q);
  static Scalar from_coords(const FieldPtr& f, std::vector<Scalar> coords);
  /// The class of the adjoined variable in an extension.
  static Scalar generator(const FieldPtr& f);
  /// eps_i (1-based) of a nilpotent ring; the truncated ring has only eps_1.
  static Scalar epsilon(const FieldPtr& f, unsigned i);
  /// Image of x under the chain of base inclusions ending in `target`.
  static Scalar embed(const FieldPtr& target, const Scalar& x);

  const FieldPtr& field() const { return f_; }
  bool valid() const { return static_cast<bool>(f_); }

  bool is_zero() const;
  bool is_one() const;
  bool is_unit() const;

  const mpq_class& rational() const { return std::get<mpq_class>(v_); }
  std::uint64_t residue() const { return std::get<std::uint64_t>(v_); }
  const std::vector<Scalar>& coords() const { return std::get<std::vector<Scalar>>(v_); }

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  Scalar inverse() const;
  Scalar pow(const mpz_class& e) const;
  Scalar pow(long e) const { return pow(mpz_class(e)); }

  /// Total order on canonical representatives (within one field).
  int compare(const Scalar& o) const;
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  friend bool operator<(const Scalar& a, const Scalar& b) { return a.compare(b) < 0; }

  std::string to_string() const;

 private:
  Scalar(FieldPtr f, mpq_class q) : f_(std::move(f)) {
    q.canonicalize();
    v_ = std::move(q);
  }
  Scalar(FieldPtr f, std::uint64_t r) : f_(std::move(f)), v_(r) {}
  Scalar(FieldPtr f, std::vector<Scalar> c) : f_(std::move(f)), v_(std::move(c)) {}

  FieldPtr f_;
  std::variant<std::monostate, mpq_class, std::uint64_t, std::vector<Scalar>> v_;
};

class Field : public std::enable_shared_from_this<Field> {
  struct Key {};

 public:
  static FieldPtr rationals() {
    static const FieldPtr q = std::make_shared<const Field>(Key{}, FieldKind::rational);
    return q;
  }

  static FieldPtr prime(std::uint64_t p) {
    if (!detail::is_prime_u64(p)) throw Error("prime field requires a prime, got " + std::to_string(p));
    auto f = std::make_shared<Field>(Key{}, FieldKind::prime);
    f->p_ = p;
    return f;
  }

  /// `modulus` is given low-to-high over `base`, must be monic of degree >= 1.
  /// Irreducibility is the caller's responsibility (see factor.hpp for checked builders).
  static FieldPtr extension(const FieldPtr& base, std::vector<Scalar> modulus, std::string generator = "a");

  static FieldPtr square_zero(const FieldPtr& base, unsigned generators) {
    if (generators == 0 || generators > 8) throw UnsupportedError("square-zero rings support 1..8 generators");
    return make_nil(base, NilKind::square_zero, generators);
  }

  static FieldPtr truncated(const FieldPtr& base, unsigned order) {
    if (order < 2 || order > 64) throw UnsupportedError("truncated ring order must be in 2..64");
    return make_nil(base, NilKind::truncated, order);
  }

  Field(Key, FieldKind k) : kind_(k) {}

  FieldKind kind() const { return kind_; }
  bool is_field() const { return kind_ != FieldKind::nilpotent; }
  bool is_finite() const {
    return kind_ == FieldKind::prime || (kind_ == FieldKind::extension && base_->is_finite());
  }
  std::uint64_t characteristic() const {
    switch (kind_) {
      case FieldKind::rational: return 0;
      case FieldKind::prime: return p_;
      default: return base_->characteristic();
    }
  }
  /// Number of elements; only meaningful for finite fields.
  mpz_class order() const {
    if (kind_ == FieldKind::prime) return detail::u64_to_mpz(p_);
    if (kind_ == FieldKind::extension && base_->is_finite()) {
      mpz_class r;
      mpz_pow_ui(r.get_mpz_t(), base_->order().get_mpz_t(), degree());
      return r;
    }
    throw Error("order requested for an infinite ring");
  }
  std::uint64_t p() const { return p_; }
  const FieldPtr& base() const { return base_; }
  /// Monic modulus, low-to-high, length degree()+1.
  const std::vector<Scalar>& modulus() const { return modulus_; }
  /// Degree over the base for extensions, 1 otherwise.
  std::size_t degree() const { return kind_ == FieldKind::extension ? modulus_.size() - 1 : 1; }
  /// Number of stored coordinates (extension degree or nilpotent basis size).
  std::size_t dim() const {
    if (kind_ == FieldKind::extension) return degree();
    if (kind_ == FieldKind::nilpotent) return nil_kind_ == NilKind::square_zero ? (std::size_t{1} << nil_size_) : nil_size_;
    return 1;
  }
  NilKind nil_kind() const { return nil_kind_; }
  unsigned nil_size() const { return nil_size_; }
  const std::string& generator_name() const { return gen_name_; }

  /// Name of the nilpotent basis monomial with index i (empty for i = 0).
  std::string nil_monomial(std::size_t i) const {
    if (i == 0) return {};
    if (nil_kind_ == NilKind::truncated) return i == 1 ? "eps" : "eps^" + std::to_string(i);
    std::string s;
    for (unsigned b = 0; b < nil_size_; ++b) {
      if (i & (std::size_t{1} << b)) {
        if (!s.empty()) s += "*";
        s += "eps" + std::to_string(b + 1);
      }
    }
    return s;
  }

  bool equals(const Field& o) const;

  std::string describe() const {
    switch (kind_) {
      case FieldKind::rational: return "q";
      case FieldKind::prime: return "fp:" + std::to_string(p_);
      case FieldKind::extension:
        return base_->describe() + "[" + gen_name_ + "]/(" + modulus_string() + ")";
      case FieldKind::nilpotent:
        return (nil_kind_ == NilKind::square_zero ? "eps" + std::to_string(nil_size_) + "sq("
                                                  : "trunc" + std::to_string(nil_size_) + "(") +
               base_->describe() + ")";
    }
    return {};
  }

  std::string modulus_string() const;

 private:
  static FieldPtr make_nil(const FieldPtr& base, NilKind k, unsigned n) {
    if (!base->is_field()) throw UnsupportedError("nilpotent rings must sit over a field");
    auto f = std::make_shared<Field>(Key{}, FieldKind::nilpotent);
    f->base_ = base;
    f->nil_kind_ = k;
    f->nil_size_ = n;
    return f;
  }

  FieldKind kind_;
  std::uint64_t p_ = 0;
  FieldPtr base_;
  std::vector<Scalar> modulus_;
  std::string gen_name_;
  NilKind nil_kind_ = NilKind::square_zero;
  unsigned nil_size_ = 0;
};

inline bool same_field(const FieldPtr& a, const FieldPtr& b) {
  return a == b || (a && b && a->equals(*b));
}

inline void require_same(const FieldPtr& a, const FieldPtr& b) {
  if (!same_field(a, b)) {
    throw FieldMismatchError("operands live in different rings: " + (a ? a->describe() : "?") + " vs " +
                             (b ? b->describe() : "?"));
  }
}

// ---------------------------------------------------------------------------
// Scalar implementation

namespace detail {

inline bool needs_parens(const std::string& s) {
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i] == '+' || s[i] == '-') return true;
  }
  return false;
}

/// "c*m" with the usual shortcuts for 1 and -1.
inline std::string format_term(const std::string& cs, bool coeff_is_one, const std::string& mono) {
  if (mono.empty()) return cs;
  if (coeff_is_one) return mono;
  if (cs == "-1") return "-" + mono;
  if (needs_parens(cs)) return "(" + cs + ")*" + mono;
  return cs + "*" + mono;
}

inline std::string join_terms(const std::vector<std::string>& terms) {
  if (terms.empty()) return "0";
  std::string out = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (!terms[i].empty() && terms[i][0] == '-') {
      out += terms[i];
    } else {
      out += "+" + terms[i];
    }
  }
  return out;
}

inline std::string power_name(const std::string& var, std::size_t i) {
  if (i == 0) return {};
  if (i == 1) return var;
  return var + "^" + std::to_string(i);
}

using Matrix = std::vector<std::vector<Scalar>>;

/// Determinant over a field by Gaussian elimination.
inline Scalar determinant(Matrix m, const FieldPtr& f) {
  const std::size_t n = m.size();
  Scalar det = Scalar::one(f);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) return Scalar::zero(f);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    Scalar inv = m[col][col].inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      Scalar factor = m[r][col] * inv;
      for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return det;
}

/// Unique solution of m x = rhs, or nullopt when m is singular.
inline std::optional<std::vector<Scalar>> solve(Matrix m, std::vector<Scalar> rhs) {
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    Scalar inv = m[col][col].inverse();
    for (std::size_t c = col; c < n; ++c) m[col][c] *= inv;
    rhs[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      Scalar factor = m[r][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
      rhs[r] -= factor * rhs[col];
    }
  }
  return rhs;
}

inline std::vector<Scalar> zeros(const FieldPtr& f, std::size_t n) {
  return std::vector<Scalar>(n, Scalar::zero(f));
}

}  // namespace detail

inline Scalar Scalar::zero(const FieldPtr& f) { return from_int(f, 0L); }
inline Scalar Scalar::one(const FieldPtr& f) { return from_int(f, 1L); }

inline Scalar Scalar::from_int(const FieldPtr& f, const mpz_class& n) {
  switch (f->kind()) {
    case FieldKind::rational: return Scalar(f, mpq_class(n));
    case FieldKind::prime: return Scalar(f, detail::mpz_mod_u64(n, f->p()));
    default: {
      auto c = detail::zeros(f->base(), f->dim());
      c[0] = from_int(f->base(), n);
      return Scalar(f, std::move(c));
    }
  }
}

inline Scalar Scalar::from_rational(const FieldPtr& f, const mpq_class& q) {
  if (f->kind() == FieldKind::rational) return Scalar(f, q);
  return from_int(f, q.get_num()) / from_int(f, q.get_den());
}

inline Scalar Scalar::from_coords(const FieldPtr& f, std::vector<Scalar> coords) {
  if (f->kind() != FieldKind::extension && f->kind() != FieldKind::nilpotent) {
    throw Error("coordinates only apply to extension or nilpotent rings");
  }
  if (coords.size() > f->dim()) throw Error("too many coordinates for " + f->describe());
  for (const auto& c : coords) require_same(c.field(), f->base());
  while (coords.size() < f->dim()) coords.push_back(zero(f->base()));
  return Scalar(f, std::move(coords));
}

inline Scalar Scalar::generator(const FieldPtr& f) {
  if (f->kind() != FieldKind::extension) throw Error("generator requested for a non-extension");
  auto c = detail::zeros(f->base(), f->dim());
  if (f->degree() == 1) {
    c[0] = -f->modulus()[0];
  } else {
    c[1] = one(f->base());
  }
  return Scalar(f, std::move(c));
}

inline Scalar Scalar::epsilon(const FieldPtr& f, unsigned i) {
  if (f->kind() != FieldKind::nilpotent) throw Error("epsilon requested outside a nilpotent ring");
  std::size_t idx = 0;
  if (f->nil_kind() == NilKind::truncated) {
    if (i != 1) throw Error("truncated ring has a single generator");
    idx = 1;
  } else {
    if (i == 0 || i > f->nil_size()) throw Error("no generator eps" + std::to_string(i));
    idx = std::size_t{1} << (i - 1);
  }
  auto c = detail::zeros(f->base(), f->dim());
  c[idx] = one(f->base());
  return Scalar(f, std::move(c));
}

inline Scalar Scalar::embed(const FieldPtr& target, const Scalar& x) {
  if (same_field(target, x.field())) return x;
  if (target->kind() == FieldKind::extension || target->kind() == FieldKind::nilpotent) {
    auto c = detail::zeros(target->base(), target->dim());
    c[0] = embed(target->base(), x);
    return Scalar(target, std::move(c));
  }
  throw FieldMismatchError("cannot embed " + x.field()->describe() + " into " + target->describe());
}

inline bool Scalar::is_zero() const {
  switch (v_.index()) {
    case 1: return sgn(rational()) == 0;
    case 2: return residue() == 0;
    case 3: return std::all_of(coords().begin(), coords().end(), [](const Scalar& s) { return s.is_zero(); });
    default: return true;
  }
}

inline bool Scalar::is_one() const {
  switch (v_.index()) {
    case 1: return rational() == 1;
    case 2: return residue() == 1;
    case 3: {
      const auto& c = coords();
      if (!c[0].is_one()) return false;
      return std::all_of(c.begin() + 1, c.end(), [](const Scalar& s) { return s.is_zero(); });
    }
    default: return false;
  }
}

inline bool Scalar::is_unit() const {
  if (f_->kind() == FieldKind::nilpotent) return coords()[0].is_unit();
  return !is_zero();
}

inline Scalar Scalar::operator-() const {
  switch (v_.index()) {
    case 1: return Scalar(f_, mpq_class(-rational()));
    case 2: return Scalar(f_, detail::submod(0, residue(), f_->p()));
    default: {
      std::vector<Scalar> c;
      c.reserve(coords().size());
      for (const auto& x : coords()) c.push_back(-x);
      return Scalar(f_, std::move(c));
    }
  }
}

inline Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same(a.f_, b.f_);
  switch (a.v_.index()) {
    case 1: return Scalar(a.f_, mpq_class(a.rational() + b.rational()));
    case 2: return Scalar(a.f_, detail::addmod(a.residue(), b.residue(), a.f_->p()));
    default: {
      std::vector<Scalar> c(a.coords());
      for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coords()[i];
      return Scalar(a.f_, std::move(c));
    }
  }
}

inline Scalar operator-(const Scalar& a, const Scalar& b) {
  require_same(a.f_, b.f_);
  switch (a.v_.index()) {
    case 1: return Scalar(a.f_, mpq_class(a.rational() - b.rational()));
    case 2: return Scalar(a.f_, detail::submod(a.residue(), b.residue(), a.f_->p()));
    default: {
      std::vector<Scalar> c(a.coords());
      for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coords()[i];
      return Scalar(a.f_, std::move(c));
    }
  }
}

inline Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same(a.f_, b.f_);
  const FieldPtr& f = a.f_;
  switch (f->kind()) {
    case FieldKind::rational: return Scalar(f, mpq_class(a.rational() * b.rational()));
    case FieldKind::prime: return Scalar(f, detail::mulmod(a.residue(), b.residue(), f->p()));
    case FieldKind::extension: {
      const std::size_t d = f->degree();
      const auto& x = a.coords();
      const auto& y = b.coords();
      auto prod = detail::zeros(f->base(), 2 * d - 1);
      for (std::size_t i = 0; i < d; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < d; ++j) prod[i + j] += x[i] * y[j];
      }
      const auto& m = f->modulus();
      for (std::size_t i = prod.size(); i-- > d;) {
        if (prod[i].is_zero()) continue;
        Scalar c = prod[i];
        for (std::size_t j = 0; j < d; ++j) prod[i - d + j] -= c * m[j];
      }
      prod.resize(d);
      return Scalar(f, std::move(prod));
    }
    case FieldKind::nilpotent: {
      const std::size_t n = f->dim();
      const auto& x = a.coords();
      const auto& y = b.coords();
      auto out = detail::zeros(f->base(), n);
      const bool sq = f->nil_kind() == NilKind::square_zero;
      for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (y[j].is_zero()) continue;
          if (sq) {
            if ((i & j) == 0) out[i | j] += x[i] * y[j];
          } else if (i + j < n) {
            out[i + j] += x[i] * y[j];
          }
        }
      }
      return Scalar(f, std::move(out));
    }
  }
  return {};
}

inline Scalar Scalar::inverse() const {
  switch (f_->kind()) {
    case FieldKind::rational:
      if (is_zero()) throw NonUnitError("division by zero in q");
      return Scalar(f_, mpq_class(1 / rational()));
    case FieldKind::prime:
      if (is_zero()) throw NonUnitError("division by zero in " + f_->describe());
      return Scalar(f_, detail::invmod(residue(), f_->p()));
    case FieldKind::extension: {
      if (is_zero()) throw NonUnitError("division by zero in " + f_->describe());
      const std::size_t d = f_->degree();
      detail::Matrix m(d, detail::zeros(f_->base(), d));
      Scalar col = *this;
      const Scalar gen = generator(f_);
      for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < d; ++i) m[i][j] = col.coords()[i];
        col *= gen;
      }
      auto rhs = detail::zeros(f_->base(), d);
      rhs[0] = one(f_->base());
      auto sol = detail::solve(std::move(m), std::move(rhs));
      if (!sol) throw NonUnitError("element " + to_string() + " is a zero divisor; modulus is reducible");
      return Scalar(f_, std::move(*sol));
    }
    case FieldKind::nilpotent: {
      const Scalar& c0 = coords()[0];
      if (!c0.is_unit()) throw NonUnitError("nilpotent-ring element " + to_string() + " is not a unit");
      const Scalar c0inv = embed(f_, c0.inverse());
      // x = c0 (1 + n) with n nilpotent, so x^-1 = c0^-1 sum (-n)^k.
      const Scalar n = *this * c0inv - one(f_);
      const Scalar minus_n = -n;
      Scalar term = one(f_);
      Scalar sum = one(f_);
      for (std::size_t k = 0; k < 64; ++k) {
        term *= minus_n;
        if (term.is_zero()) break;
        sum += term;
      }
      return sum * c0inv;
    }
  }
  return {};
}

inline Scalar Scalar::pow(const mpz_class& e) const {
  if (sgn(e) < 0) return inverse().pow(mpz_class(-e));
  Scalar result = one(f_);
  Scalar base = *this;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result *= result;
    if (mpz_tstbit(e.get_mpz_t(), i)) result *= base;
  }
  return result;
}

inline int Scalar::compare(const Scalar& o) const {
  require_same(f_, o.f_);
  switch (v_.index()) {
    case 1: return cmp(rational(), o.rational()) < 0 ? -1 : (rational() == o.rational() ? 0 : 1);
    case 2: return residue() < o.residue() ? -1 : (residue() == o.residue() ? 0 : 1);
    default: {
      const auto& x = coords();
      const auto& y = o.coords();
      for (std::size_t i = x.size(); i-- > 0;) {
        int c = x[i].compare(y[i]);
        if (c != 0) return c;
      }
      return 0;
    }
  }
}

inline bool operator==(const Scalar& a, const Scalar& b) {
  if (!same_field(a.f_, b.f_)) return false;
  switch (a.v_.index()) {
    case 1: return a.rational() == b.rational();
    case 2: return a.residue() == b.residue();
    case 3: return a.coords() == b.coords();
    default: return b.v_.index() == 0;
  }
}

inline std::string Scalar::to_string() const {
  switch (v_.index()) {
    case 1: return rational().get_str();
    case 2: return std::to_string(residue());
    case 3: {
      std::vector<std::string> terms;
      const auto& c = coords();
      if (f_->kind() == FieldKind::extension) {
        for (std::size_t i = c.size(); i-- > 0;) {
          if (c[i].is_zero()) continue;
          terms.push_back(detail::format_term(c[i].to_string(), c[i].is_one(), detail::power_name(f_->generator_name(), i)));
        }
      } else {
        for (std::size_t i = 0; i < c.size(); ++i) {
          if (c[i].is_zero()) continue;
          terms.push_back(detail::format_term(c[i].to_string(), c[i].is_one(), f_->nil_monomial(i)));
        }
      }
      return detail::join_terms(terms);
    }
    default: return "<invalid>";
  }
}

// ---------------------------------------------------------------------------
// Field out-of-line members

inline FieldPtr Field::extension(const FieldPtr& base, std::vector<Scalar> modulus, std::string generator) {
  if (!base->is_field()) throw UnsupportedError("extensions must sit over a field");
  if (modulus.size() < 2) throw Error("extension modulus must have degree >= 1");
  for (const auto& c : modulus) require_same(c.field(), base);
  if (!modulus.back().is_one()) throw Error("extension modulus must be monic");
  auto f = std::make_shared<Field>(Key{}, FieldKind::extension);
  f->base_ = base;
  f->modulus_ = std::move(modulus);
  f->gen_name_ = std::move(generator);
  return f;
}

inline bool Field::equals(const Field& o) const {
  if (this == &o) return true;
  if (kind_ != o.kind_) return false;
  switch (kind_) {
    case FieldKind::rational: return true;
    case FieldKind::prime: return p_ == o.p_;
    case FieldKind::extension: {
      if (!base_->equals(*o.base_) || modulus_.size() != o.modulus_.size()) return false;
      for (std::size_t i = 0; i < modulus_.size(); ++i) {
        if (!(modulus_[i] == o.modulus_[i])) return false;
      }
      return true;
    }
    case FieldKind::nilpotent:
      return nil_kind_ == o.nil_kind_ && nil_size_ == o.nil_size_ && base_->equals(*o.base_);
  }
  return false;
}

inline std::string Field::modulus_string() const {
  std::vector<std::string> terms;
  for (std::size_t i = modulus_.size(); i-- > 0;) {
    if (modulus_[i].is_zero()) continue;
    terms.push_back(detail::format_term(modulus_[i].to_string(), modulus_[i].is_one(), detail::power_name(gen_name_, i)));
  }
  return detail::join_terms(terms);
}

// ---------------------------------------------------------------------------
// Norm and trace of a simple extension over its base.

/// Matrix of multiplication by e on K = base[a]/(m) in the power basis.
inline detail::Matrix multiplication_matrix(const Scalar& e) {
  const FieldPtr& f = e.field();
  if (f->kind() != FieldKind::extension) throw Error("multiplication matrix needs an extension element");
  const std::size_t d = f->degree();
  detail::Matrix m(d, detail::zeros(f->base(), d));
  Scalar col = e;
  const Scalar gen = Scalar::generator(f);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) m[i][j] = col.coords()[i];
    col *= gen;
  }
  return m;
}

/// N_{K/k}(e) for e in K = k[a]/(m); identity on elements that are not extension elements.
inline Scalar norm(const Scalar& e) {
  if (e.field()->kind() != FieldKind::extension) return e;
  return detail::determinant(multiplication_matrix(e), e.field()->base());
}

/// Tr_{K/k}(e); identity on elements that are not extension elements.
inline Scalar trace(const Scalar& e) {
  if (e.field()->kind() != FieldKind::extension) return e;
  auto m = multiplication_matrix(e);
  Scalar t = Scalar::zero(e.field()->base());
  for (std::size_t i = 0; i < m.size(); ++i) t += m[i][i];
  return t;
}

/// Norm down to `target`, which must be e's field or its immediate base.
inline Scalar norm_to(const Scalar& e, const FieldPtr& target) {
  if (same_field(e.field(), target)) return e;
  if (e.field()->kind() == FieldKind::extension && same_field(e.field()->base(), target)) return norm(e);
  throw FieldMismatchError("cannot take the norm from " + e.field()->describe() + " to " + target->describe());
}

inline Scalar trace_to(const Scalar& e, const FieldPtr& target) {
  if (same_field(e.field(), target)) return e;
  if (e.field()->kind() == FieldKind::extension && same_field(e.field()->base(), target)) return trace(e);
  throw FieldMismatchError("cannot take the trace from " + e.field()->describe() + " to " + target->describe());
}

// ---------------------------------------------------------------------------
// Random elements (for property tests and spot checks).

template <class Rng>
Scalar random_scalar(const FieldPtr& f, Rng& rng, long rational_bound = 9) {
  switch (f->kind()) {
    case FieldKind::rational: {
      std::uniform_int_distribution<long> num(-rational_bound, rational_bound);
      std::uniform_int_distribution<long> den(1, rational_bound);
      return Scalar::from_rational(f, mpq_class(num(rng), den(rng)));
    }
    case FieldKind::prime: {
      std::uniform_int_distribution<std::uint64_t> d(0, f->p() - 1);
      return Scalar::from_int(f, detail::u64_to_mpz(d(rng)));
    }
    default: {
      std::vector<Scalar> c;
      for (std::size_t i = 0; i < f->dim(); ++i) c.push_back(random_scalar(f->base(), rng, rational_bound));
      return Scalar::from_coords(f, std::move(c));
    }
  }
}

template <class Rng>
Scalar random_unit(const FieldPtr& f, Rng& rng, long rational_bound = 9) {
  for (;;) {
    Scalar s = random_scalar(f, rng, rational_bound);
    if (s.is_unit()) return s;
  }
}

}  // namespace recip
