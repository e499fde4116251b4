#include "support.hpp"

using namespace recip;
using namespace recip::test;

namespace {

// Brute-force root count over a finite prime field.
int count_roots(const Poly& f) {
  int n = 0;
  for (std::uint64_t a = 0; a < f.field()->p(); ++a) {
    if (f.eval(Scalar::from_int(f.field(), static_cast<long>(a))).is_zero()) ++n;
  }
  return n;
}

// Exhaustive irreducibility oracle for small finite prime fields: no monic divisor of degree <= d/2.
bool brute_irreducible(const Poly& f) {
  const FieldPtr& F = f.field();
  const std::uint64_t p = F->p();
  for (long d = 1; 2 * d <= f.degree(); ++d) {
    std::vector<std::uint64_t> digits(static_cast<std::size_t>(d), 0);
    for (;;) {
      std::vector<Scalar> c;
      for (auto v : digits) c.push_back(Scalar::from_int(F, static_cast<long>(v)));
      c.push_back(Scalar::one(F));
      if ((f % Poly(F, c)).is_zero()) return false;
      std::size_t i = 0;
      while (i < digits.size() && ++digits[i] == p) digits[i++] = 0;
      if (i == digits.size()) break;
    }
  }
  return f.degree() >= 1;
}

}  // namespace

TEST(Factorize, SpecExamples) {
  FieldPtr q = Field::rationals();
  auto fq = factorize(P(q, {-1, 0, 1}));
  ASSERT_EQ(fq.factors.size(), 2u);
  EXPECT_EQ(fq.factors[0].poly, P(q, {-1, 1}));
  EXPECT_EQ(fq.factors[1].poly, P(q, {1, 1}));

  FieldPtr f5 = Field::prime(5);
  auto f5f = factorize(P(f5, {1, 0, 1}));
  ASSERT_EQ(f5f.factors.size(), 2u);
  EXPECT_EQ(f5f.factors[0].poly, P(f5, {2, 1}));
  EXPECT_EQ(f5f.factors[1].poly, P(f5, {3, 1}));
  EXPECT_EQ(f5f.expand(), P(f5, {1, 0, 1}));

  FieldPtr f3 = Field::prime(3);
  auto f3f = factorize(P(f3, {1, 0, 1}));
  ASSERT_EQ(f3f.factors.size(), 1u);
  EXPECT_EQ(count_roots(P(f3, {1, 0, 1})), 0);
}

TEST(Factorize, ZeroPolynomialIsAnError) {
  EXPECT_THROW(factorize(Poly(Field::prime(5))), ZeroFunctionError);
}

TEST(Factorize, FiniteFieldsReexpandAndFactorsAreIrreducible) {
  auto rng = make_rng(11);
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL}) {
    FieldPtr F = Field::prime(p);
    for (int i = 0; i < 150; ++i) {
      Poly f = random_nonzero_poly(F, 9, rng);
      auto fz = factorize(f);
      ASSERT_EQ(fz.expand(), f);
      for (const auto& fac : fz.factors) {
        ASSERT_TRUE(fac.poly.is_monic());
        ASSERT_TRUE(brute_irreducible(fac.poly)) << fac.poly.to_string();
      }
    }
  }
}

TEST(Factorize, ExtensionFieldsReexpand) {
  auto rng = make_rng(12);
  for (auto F : {finite_field(2, 2), finite_field(3, 2), finite_field(5, 2)}) {
    for (int i = 0; i < 60; ++i) {
      Poly f = random_nonzero_poly(F, 6, rng);
      auto fz = factorize(f);
      ASSERT_EQ(fz.expand(), f);
      for (const auto& fac : fz.factors) {
        ASSERT_TRUE(fac.poly.is_monic());
        // A root-free quadratic or cubic is irreducible; higher degrees are checked by gcd with t^(q^j) - t.
        const mpz_class qq = F->order();
        for (long j = 1; 2 * j <= fac.poly.degree(); ++j) {
          mpz_class e;
          mpz_pow_ui(e.get_mpz_t(), qq.get_mpz_t(), static_cast<unsigned long>(j));
          Poly x = Poly::variable(F);
          Poly g = gcd(fac.poly, powmod(x, e, fac.poly) - x);
          ASSERT_TRUE(g.is_constant()) << fac.poly.to_string();
        }
      }
    }
  }
}

TEST(Factorize, RationalProductsOfCertifiedFactors) {
  auto rng = make_rng(13);
  FieldPtr q = Field::rationals();
  const std::vector<Poly> linear = {P(q, {1, 1}), P(q, {-2, 1}), P(q, {1, 2}), P(q, {5, -3})};
  const std::vector<Poly> nonlinear = {P(q, {1, 0, 1}), P(q, {-2, 0, 1}), P(q, {1, 1, 1}), P(q, {-2, 0, 0, 1}), P(q, {3, 0, 1})};
  std::uniform_int_distribution<std::size_t> pl(0, linear.size() - 1), pn(0, nonlinear.size() - 1);
  for (int i = 0; i < 100; ++i) {
    // Without a factored form at most one nonlinear factor can be separated.
    Poly f = Poly::constant(frac(q, 3, 2)) * linear[pl(rng)] * linear[pl(rng)] * nonlinear[pn(rng)];
    auto fz = factorize(f);
    ASSERT_EQ(fz.expand(), f);
    for (const auto& fac : fz.factors) {
      ASSERT_TRUE(fac.poly.is_monic());
      ASSERT_TRUE(is_irreducible(fac.poly));
      if (fac.poly.degree() > 2) {
        ASSERT_NE(fac.witness_prime, 0u);
      }
    }
    // With a factored form any product of certified pieces works.
    Poly a = nonlinear[pn(rng)], b = nonlinear[pn(rng)], l = linear[pl(rng)];
    auto hz = factorize_hinted(num(q, 2), {{a, 2}, {b, -1}, {l, 1}});
    Poly n = Poly::constant(hz.unit), d = Poly::one(q);
    for (const auto& fac : hz.factors) {
      for (int m = 0; m < std::abs(fac.multiplicity); ++m) (fac.multiplicity > 0 ? n : d) *= fac.poly;
    }
    ASSERT_EQ(n * b, (a * a * l).scale(num(q, 2)) * d);
  }
}

TEST(Factorize, ProductOfTwoQuadraticsNeedsAFactoredForm) {
  FieldPtr q = Field::rationals();
  EXPECT_THROW(factorize(P(q, {1, 0, 1}) * P(q, {3, 0, 1})), FactorizationError);
}

TEST(Factorize, UncertifiableRationalFactorIsAnError) {
  // x^4 + 1 is irreducible over Q but reducible modulo every prime.
  EXPECT_THROW(factorize(P(Field::rationals(), {1, 0, 0, 0, 1})), FactorizationError);
}

TEST(Factorize, HintedFactorizationUsesPieces) {
  FieldPtr q = Field::rationals();
  Poly x41 = P(q, {1, 0, 0, 0, 1});
  // With a hint the pieces are still certified individually.
  EXPECT_THROW(factorize_hinted(num(q, 1), {{x41, 1}}), FactorizationError);
  auto fz = factorize_hinted(num(q, 2), {{P(q, {1, 0, 1}), 2}, {P(q, {0, 1}), -1}});
  ASSERT_EQ(fz.factors.size(), 2u);
}

TEST(Poly, DivisionAndGcd) {
  auto rng = make_rng(14);
  FieldPtr F = Field::prime(7);
  for (int i = 0; i < 300; ++i) {
    Poly a = random_nonzero_poly(F, 8, rng), b = random_nonzero_poly(F, 5, rng);
    auto [qq, r] = a.divmod(b);
    ASSERT_EQ(qq * b + r, a);
    ASSERT_LT(r.degree(), b.degree());
    auto [g, s, t] = ext_gcd(a, b);
    ASSERT_EQ(s * a + t * b, g);
    ASSERT_TRUE((a % g).is_zero());
    ASSERT_TRUE((b % g).is_zero());
  }
}

TEST(Poly, FirstIrreducibleIsLexicographicallyFirst) {
  FieldPtr f3 = Field::prime(3);
  EXPECT_EQ(first_irreducible(f3, 2), P(f3, {1, 0, 1}));
  FieldPtr f2 = Field::prime(2);
  EXPECT_EQ(first_irreducible(f2, 2), P(f2, {1, 1, 1}));
  EXPECT_EQ(first_irreducible(f2, 3), P(f2, {1, 1, 0, 1}));
}

TEST(Poly, PrintsWithVariableName) {
  FieldPtr q = Field::rationals();
  EXPECT_EQ(P(q, {1, 0, 1}).to_string(), "t^2+1");
  EXPECT_EQ(P(q, {-1, 1}).to_string("x"), "x-1");
}
