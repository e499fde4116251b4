#pragma once
// Shared helpers for the test suites.

#include <gtest/gtest.h>

#include <cstdint>
#include <ostream>
#include <random>
#include <vector>

#include "recip/algebra/bipoly.hpp"
#include "recip/algebra/factor.hpp"

namespace recip {
inline void PrintTo(const Scalar& s, std::ostream* os) { *os << s.to_string(); }
inline void PrintTo(const Poly& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const BiPoly& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const RationalFunction& f, std::ostream* os) { *os << to_string(f); }
inline void PrintTo(const RationalFunction2& f, std::ostream* os) { *os << to_string(f); }
}  // namespace recip

namespace recip::test {

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t salt) { return Rng(0x9e3779b97f4a7c15ULL ^ salt); }

inline Scalar num(const FieldPtr& f, long n) { return Scalar::from_int(f, n); }
inline Scalar frac(const FieldPtr& f, long n, long d) { return Scalar::from_rational(f, mpq_class(n, d)); }

inline Poly P(const FieldPtr& f, std::vector<long> c) { return Poly::from_ints(f, c); }
inline Poly T(const FieldPtr& f) { return Poly::variable(f); }
inline RationalFunction RF(const Poly& p) { return RationalFunction(p); }
inline RationalFunction RF(const Poly& n, const Poly& d) { return RationalFunction::from_parts(n, d); }
inline RationalFunction RC(const FieldPtr& f, long c) { return RationalFunction::constant(num(f, c)); }

/// Random nonzero polynomial of degree <= max_deg with random leading behaviour.
template <class R>
Poly random_nonzero_poly(const FieldPtr& f, int max_deg, R& rng, long bound = 5) {
  std::uniform_int_distribution<int> dd(0, max_deg);
  for (;;) {
    Poly p = random_poly(f, static_cast<std::size_t>(dd(rng)), rng, bound);
    if (!p.is_zero()) return p;
  }
}

/// Random nonzero rational function with numerator and denominator degree <= max_deg.
template <class R>
RationalFunction random_function(const FieldPtr& f, int max_deg, R& rng, long bound = 5) {
  return RationalFunction::from_parts(random_nonzero_poly(f, max_deg, rng, bound), random_nonzero_poly(f, max_deg, rng, bound));
}

}  // namespace recip::test
