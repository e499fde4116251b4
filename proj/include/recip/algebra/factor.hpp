#pragma once
/**
 * @file factor.hpp
 * @brief Factorization of univariate polynomials over finite fields and over Q.
 *
 * Finite fields: squarefree decomposition, distinct-degree factorization and
 * Cantor-Zassenhaus equal-degree splitting (trace map in characteristic 2).
 *
 * Rationals: squarefree decomposition, rational-root extraction, and a
 * certificate for every remaining factor of degree >= 2: a prime p <= 1000
 * modulo which the factor keeps its degree, stays squarefree and is
 * irreducible. Factors without such a witness raise FactorizationError.
 */

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "recip/algebra/poly.hpp"

namespace recip {

struct Factor {
  Poly poly;  // monic irreducible
  int multiplicity = 0;
  /// Prime certifying irreducibility over Q (0 when not needed).
  std::uint64_t witness_prime = 0;
};

struct Factorization {
  Scalar unit;
  std::vector<Factor> factors;

  Poly expand() const {
    Poly r = Poly::constant(unit);
    for (const auto& f : factors) r *= f.poly.pow(static_cast<unsigned long>(f.multiplicity));
    return r;
  }
};

namespace detail {

inline bool is_finite_coeff_field(const FieldPtr& f) { return f->is_field() && f->is_finite(); }

inline const std::vector<std::uint64_t>& small_primes() {
  static const std::vector<std::uint64_t> primes = [] {
    std::vector<std::uint64_t> out;
    std::vector<bool> sieve(1001, true);
    for (std::uint64_t i = 2; i <= 1000; ++i) {
      if (!sieve[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = i * i; j <= 1000; j += i) sieve[j] = false;
    }
    return out;
  }();
  return primes;
}

/// g with g(t^p) = f, over a finite field of characteristic p (requires f' = 0).
inline Poly pth_root(const Poly& f) {
  const FieldPtr& F = f.field();
  const std::uint64_t p = F->characteristic();
  const mpz_class exponent = F->order() / u64_to_mpz(p);
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) out.push_back(f.coeffs()[i].pow(exponent));
  return Poly(F, std::move(out));
}

inline void sort_and_merge(std::vector<Factor>& fs) {
  std::sort(fs.begin(), fs.end(), [](const Factor& a, const Factor& b) { return a.poly < b.poly; });
  std::vector<Factor> out;
  for (auto& f : fs) {
    if (!out.empty() && out.back().poly == f.poly) {
      out.back().multiplicity += f.multiplicity;
      out.back().witness_prime = std::max(out.back().witness_prime, f.witness_prime);
    } else {
      out.push_back(std::move(f));
    }
  }
  fs.clear();
  for (auto& f : out) {
    if (f.multiplicity != 0) fs.push_back(std::move(f));
  }
}

/// Squarefree decomposition of a monic polynomial over a finite field.
inline std::vector<std::pair<Poly, int>> squarefree_finite(const Poly& f) {
  std::vector<std::pair<Poly, int>> out;
  if (f.degree() <= 0) return out;
  const FieldPtr& F = f.field();
  const int p = static_cast<int>(F->characteristic());
  const Poly one = Poly::one(F);
  const Poly df = f.derivative();
  if (df.is_zero()) {
    for (auto& [g, m] : squarefree_finite(pth_root(f))) out.emplace_back(g, m * p);
    return out;
  }
  Poly c = gcd(f, df);
  Poly w = f / c;
  int i = 1;
  while (w != one) {
    Poly y = gcd(w, c);
    Poly z = w / y;
    if (z.degree() > 0) out.emplace_back(z.monic(), i);
    ++i;
    w = y;
    c = c / y;
  }
  if (c != one) {
    for (auto& [g, m] : squarefree_finite(pth_root(c.monic()))) out.emplace_back(g, m * p);
  }
  return out;
}

/// Distinct-degree factorization of a squarefree monic polynomial: (product, degree) pairs.
inline std::vector<std::pair<Poly, int>> distinct_degree(Poly f) {
  std::vector<std::pair<Poly, int>> out;
  const FieldPtr& F = f.field();
  const mpz_class q = F->order();
  const Poly x = Poly::variable(F);
  Poly h = x % f;
  int i = 1;
  while (f.degree() >= 2 * i) {
    h = powmod(h, q, f);
    Poly g = gcd(h - x, f);
    if (g.degree() > 0) {
      out.emplace_back(g, i);
      f = f / g;
      h = h % f;
    }
    ++i;
  }
  if (f.degree() > 0) out.emplace_back(f.monic(), static_cast<int>(f.degree()));
  return out;
}

/// Cantor-Zassenhaus splitting of a product of distinct irreducibles of degree d.
template <class Rng>
void equal_degree(const Poly& f, int d, Rng& rng, std::vector<Poly>& out) {
  if (f.degree() == d) {
    out.push_back(f.monic());
    return;
  }
  const FieldPtr& F = f.field();
  const mpz_class q = F->order();
  const std::uint64_t p = F->characteristic();
  for (;;) {
    Poly a = random_poly(F, static_cast<std::size_t>(f.degree() - 1), rng);
    if (a.degree() <= 0) continue;
    Poly b(F);
    if (p == 2) {
      // q = 2^k, trace map sum_{j < k d} a^(2^j).
      const std::size_t k = mpz_sizeinbase(q.get_mpz_t(), 2) - 1;
      Poly term = a % f;
      b = term;
      for (std::size_t j = 1; j < k * static_cast<std::size_t>(d); ++j) {
        term = mulmod(term, term, f);
        b += term;
      }
    } else {
      mpz_class e;
      mpz_pow_ui(e.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(d));
      e = (e - 1) / 2;
      b = powmod(a, e, f) - Poly::one(F);
    }
    Poly g = gcd(b, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(f / g, d, rng, out);
      return;
    }
  }
}

inline Factorization factor_finite(const Poly& f) {
  Factorization out{f.lead(), {}};
  if (f.degree() <= 0) return out;
  std::mt19937_64 rng(0x5eed5eedULL);
  for (auto& [sq, mult] : squarefree_finite(f.monic())) {
    for (auto& [prod, deg] : distinct_degree(sq)) {
      std::vector<Poly> pieces;
      equal_degree(prod, deg, rng, pieces);
      for (auto& piece : pieces) out.factors.push_back({piece, mult, 0});
    }
  }
  sort_and_merge(out.factors);
  return out;
}

inline bool irreducible_finite(const Poly& f) {
  if (f.degree() <= 0) return false;
  if (f.degree() == 1) return true;
  Poly m = f.monic();
  if (gcd(m, m.derivative()).degree() != 0) return false;
  auto dd = distinct_degree(m);
  return dd.size() == 1 && dd[0].second == m.degree();
}

/// Integer coefficient vector of c * f with c chosen to make it primitive and positive-leading.
inline std::vector<mpz_class> primitive_integers(const Poly& f) {
  mpz_class l = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.rational().get_den_mpz_t());
  std::vector<mpz_class> v;
  mpz_class g = 0;
  for (const auto& c : f.coeffs()) {
    mpq_class s = c.rational() * l;
    v.push_back(s.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_num_mpz_t());
  }
  if (sgn(v.back()) < 0) g = -g;
  for (auto& x : v) x /= g;
  return v;
}

/// Positive divisors of |n| (n != 0); throws when |n| cannot be factored by trial division.
inline std::vector<mpz_class> positive_divisors(mpz_class n) {
  n = abs(n);
  std::vector<std::pair<mpz_class, unsigned>> pf;
  for (mpz_class d = 2; d * d <= n; ++d) {
    if (d > 1000000) {
      if (mpz_probab_prime_p(n.get_mpz_t(), 40) > 0) break;
      throw FactorizationError("coefficient " + n.get_str() + " too large to enumerate rational roots");
    }
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) pf.emplace_back(d, e);
  }
  if (n > 1) pf.emplace_back(n, 1);
  std::vector<mpz_class> divs{1};
  for (const auto& [pr, e] : pf) {
    const std::size_t sz = divs.size();
    mpz_class pw = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pw *= pr;
      for (std::size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * pw);
    }
  }
  return divs;
}

/// Yun's squarefree decomposition over a field of characteristic 0.
inline std::vector<std::pair<Poly, int>> squarefree_char0(const Poly& f) {
  std::vector<std::pair<Poly, int>> out;
  if (f.degree() <= 0) return out;
  Poly a = f.monic();
  Poly da = a.derivative();
  Poly b = gcd(a, da);
  Poly c = a / b;
  Poly d = da / b - c.derivative();
  int i = 1;
  while (c.degree() > 0) {
    Poly g = gcd(c, d);
    if (g.degree() > 0) out.emplace_back(g.monic(), i);
    c = c / g;
    d = d / g - c.derivative();
    ++i;
  }
  return out;
}

/// Witness prime p <= 1000 certifying irreducibility over Q, or 0 if none exists.
inline std::uint64_t irreducibility_witness(const Poly& f) {
  if (f.degree() == 1) return 0;
  const auto ints = primitive_integers(f);
  for (std::uint64_t p : small_primes()) {
    if (ints.back() % u64_to_mpz(p) == 0) continue;
    const FieldPtr Fp = Field::prime(p);
    std::vector<Scalar> v;
    for (const auto& c : ints) v.push_back(Scalar::from_int(Fp, c));
    const Poly red(Fp, std::move(v));
    if (red.degree() != f.degree()) continue;
    if (gcd(red, red.derivative()).degree() != 0) continue;
    if (irreducible_finite(red)) return p;
  }
  return 0;
}

/// Rational roots of a squarefree polynomial over Q, returned as monic linear factors.
inline std::vector<Poly> rational_linear_factors(const Poly& f) {
  std::vector<Poly> out;
  const FieldPtr& Q = f.field();
  const auto ints = primitive_integers(f);
  std::size_t low = 0;
  while (low < ints.size() && sgn(ints[low]) == 0) ++low;
  if (low > 0) out.push_back(Poly::variable(Q));
  if (low + 1 >= ints.size()) return out;
  const auto nums = positive_divisors(ints[low]);
  const auto dens = positive_divisors(ints.back());
  std::vector<mpq_class> seen;
  for (const auto& n : nums) {
    for (const auto& d : dens) {
      for (int s : {1, -1}) {
        mpq_class r(n * s, d);
        r.canonicalize();
        if (std::find(seen.begin(), seen.end(), r) != seen.end()) continue;
        seen.push_back(r);
        if (f.eval(Scalar::from_rational(Q, r)).is_zero()) {
          out.push_back(Poly(Q, {Scalar::from_rational(Q, -r), Scalar::one(Q)}));
        }
      }
    }
  }
  return out;
}

inline Factorization factor_rational(const Poly& f) {
  Factorization out{f.lead(), {}};
  if (f.degree() <= 0) return out;
  for (auto& [sq, mult] : squarefree_char0(f)) {
    Poly rest = sq;
    for (auto& lin : rational_linear_factors(sq)) {
      out.factors.push_back({lin, mult, 0});
      rest = rest / lin;
    }
    if (rest.degree() <= 0) continue;
    if (rest.degree() == 2) {
      // Quadratic without rational roots: the discriminant is a non-square.
      const Scalar disc = rest.coeff(1) * rest.coeff(1) - Scalar::from_int(f.field(), 4L) * rest.coeff(0);
      mpq_class dq = disc.rational();
      if (sgn(dq) >= 0 && mpz_perfect_square_p(dq.get_num_mpz_t()) && mpz_perfect_square_p(dq.get_den_mpz_t())) {
        throw FactorizationError("internal: quadratic " + rest.to_string() + " has a rational root");
      }
    }
    const std::uint64_t w = irreducibility_witness(rest);
    if (w == 0) {
      throw FactorizationError("cannot certify irreducibility of " + rest.to_string() +
                               " over q (no witness prime <= 1000); supply a factored form");
    }
    out.factors.push_back({rest.monic(), mult, w});
  }
  sort_and_merge(out.factors);
  return out;
}

}  // namespace detail

/// Factorization into monic irreducibles times a unit.
inline Factorization factorize(const Poly& f) {
  if (f.is_zero()) throw ZeroFunctionError("cannot factor the zero polynomial");
  const FieldPtr& F = f.field();
  if (F->kind() == FieldKind::rational) return detail::factor_rational(f);
  if (detail::is_finite_coeff_field(F)) return detail::factor_finite(f);
  throw UnsupportedError("factorization is not supported over " + F->describe());
}

/// Factorization of prod hint_i^{m_i} (times unit), factoring each hint piece separately.
inline Factorization factorize_hinted(const Scalar& unit, const std::vector<std::pair<Poly, int>>& hint) {
  Factorization out{unit, {}};
  for (const auto& [piece, mult] : hint) {
    if (piece.is_zero()) throw ZeroFunctionError("zero factor in factored form");
    Factorization part = factorize(piece);
    out.unit *= part.unit.pow(static_cast<long>(mult));
    for (auto& fac : part.factors) {
      fac.multiplicity *= mult;
      out.factors.push_back(std::move(fac));
    }
  }
  detail::sort_and_merge(out.factors);
  return out;
}

/// Exact over finite fields; certified over Q (false means "not certified").
inline bool is_irreducible(const Poly& f) {
  if (f.degree() <= 0) return false;
  if (f.degree() == 1) return true;
  const FieldPtr& F = f.field();
  if (detail::is_finite_coeff_field(F)) return detail::irreducible_finite(f);
  if (F->kind() == FieldKind::rational) {
    try {
      const auto fz = detail::factor_rational(f);
      return fz.factors.size() == 1 && fz.factors[0].multiplicity == 1;
    } catch (const FactorizationError&) {
      return false;
    }
  }
  throw UnsupportedError("irreducibility test is not supported over " + F->describe());
}

/// Lexicographically first monic irreducible of degree d over a finite field,
/// comparing coefficients from degree d-1 down to 0.
inline Poly first_irreducible(const FieldPtr& F, unsigned d) {
  if (F->kind() != FieldKind::prime) throw UnsupportedError("first_irreducible needs a prime field");
  if (d == 0) throw Error("degree must be positive");
  const std::uint64_t p = F->p();
  std::vector<std::uint64_t> digits(d, 0);  // digits[0] is the coefficient of t^(d-1)
  for (;;) {
    std::vector<Scalar> c(d + 1, Scalar::zero(F));
    for (unsigned i = 0; i < d; ++i) c[d - 1 - i] = Scalar::from_int(F, detail::u64_to_mpz(digits[i]));
    c[d] = Scalar::one(F);
    Poly cand(F, std::move(c));
    if (detail::irreducible_finite(cand)) return cand;
    std::size_t i = d;
    while (i-- > 0) {
      if (++digits[i] < p) break;
      digits[i] = 0;
      if (i == 0) throw Error("no irreducible polynomial found");
    }
  }
}

/// Extension base[gen]/(modulus) after checking modulus is monic irreducible.
inline FieldPtr make_extension(const Poly& modulus, const std::string& gen = "a") {
  if (!modulus.is_monic()) throw Error("extension modulus must be monic");
  if (!is_irreducible(modulus)) {
    throw Error("extension modulus " + modulus.to_string(gen) + " is not (certifiably) irreducible");
  }
  return Field::extension(modulus.field(), modulus.coeffs(), gen);
}

/// F_{p^d} with the lexicographically first modulus; F_p itself when d = 1.
inline FieldPtr finite_field(std::uint64_t p, unsigned d, const std::string& gen = "a") {
  FieldPtr Fp = Field::prime(p);
  if (d == 1) return Fp;
  return Field::extension(Fp, first_irreducible(Fp, d).coeffs(), gen);
}

}  // namespace recip
