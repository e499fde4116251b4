#include "support.hpp"

using namespace recip;
using namespace recip::test;

namespace {

std::vector<FieldPtr> descriptors() {
  FieldPtr q = Field::rationals();
  FieldPtr f5 = Field::prime(5);
  return {
      q,
      f5,
      Field::prime(7),
      finite_field(3, 2),
      finite_field(2, 3),
      Field::extension(q, {num(q, 1), num(q, 0), num(q, 1)}, "i"),
      Field::square_zero(q, 2),
      Field::square_zero(f5, 2),
      Field::truncated(q, 3),
      Field::truncated(finite_field(3, 2), 3),
  };
}

// Frobenius norm: N_{F_{p^d}/F_p}(x) = x^((p^d - 1)/(p - 1)), independent of the determinant.
Scalar frobenius_norm(const Scalar& x) {
  const FieldPtr& f = x.field();
  mpz_class pd = f->order();
  mpz_class p(static_cast<unsigned long>(f->base()->p()));
  Scalar y = x.pow(mpz_class((pd - 1) / (p - 1)));
  // y lies in the prime field; read its constant coordinate.
  for (std::size_t i = 1; i < y.coords().size(); ++i) EXPECT_TRUE(y.coords()[i].is_zero());
  return y.coords()[0];
}

// Frobenius trace: sum of the conjugates x^(p^i).
Scalar frobenius_trace(const Scalar& x) {
  const FieldPtr& f = x.field();
  const std::uint64_t p = f->base()->p();
  Scalar acc = Scalar::zero(f);
  Scalar c = x;
  for (std::size_t i = 0; i < f->degree(); ++i) {
    acc += c;
    c = c.pow(static_cast<long>(p));
  }
  for (std::size_t i = 1; i < acc.coords().size(); ++i) EXPECT_TRUE(acc.coords()[i].is_zero());
  return acc.coords()[0];
}

}  // namespace

TEST(FieldAxioms, RandomTriplesPerDescriptor) {
  auto rng = make_rng(1);
  for (const auto& f : descriptors()) {
    SCOPED_TRACE(f->describe());
    for (int i = 0; i < 1000; ++i) {
      Scalar a = random_scalar(f, rng), b = random_scalar(f, rng), c = random_scalar(f, rng);
      ASSERT_EQ((a + b) + c, a + (b + c));
      ASSERT_EQ((a * b) * c, a * (b * c));
      ASSERT_EQ(a * (b + c), a * b + a * c);
      ASSERT_EQ(a * b, b * a);
      ASSERT_EQ(a - a, Scalar::zero(f));
      if (a.is_unit()) {
        ASSERT_EQ(a * a.inverse(), Scalar::one(f));
      }
    }
  }
}

TEST(FieldAxioms, CanonicalFormIsIdempotent) {
  auto rng = make_rng(2);
  for (const auto& f : descriptors()) {
    for (int i = 0; i < 100; ++i) {
      Scalar a = random_scalar(f, rng);
      if (f->kind() == FieldKind::rational) {
        ASSERT_EQ(Scalar::from_rational(f, a.rational()), a);
        ASSERT_GT(sgn(a.rational().get_den()), 0);
      } else if (f->kind() != FieldKind::prime) {
        ASSERT_EQ(Scalar::from_coords(f, a.coords()), a);
      }
      ASSERT_EQ(a + Scalar::zero(f), a);
    }
  }
}

TEST(FieldAxioms, UnitsOfNilpotentRingsAreDecidedByTheConstantTerm) {
  auto rng = make_rng(3);
  for (const auto& f : descriptors()) {
    if (f->kind() != FieldKind::nilpotent) continue;
    for (int i = 0; i < 200; ++i) {
      Scalar a = random_scalar(f, rng);
      ASSERT_EQ(a.is_unit(), !a.coords()[0].is_zero());
    }
  }
}

TEST(NormTrace, SpecExamples) {
  FieldPtr f9 = Field::extension(Field::prime(3), {num(Field::prime(3), 1), num(Field::prime(3), 0), num(Field::prime(3), 1)}, "x");
  Scalar x = Scalar::generator(f9);
  EXPECT_EQ(norm(x), num(f9->base(), 1));
  EXPECT_EQ(frobenius_norm(x), num(f9->base(), 1));
  EXPECT_EQ(x.pow(4L), Scalar::one(f9));

  FieldPtr q = Field::rationals();
  FieldPtr qi = Field::extension(q, {num(q, 1), num(q, 0), num(q, 1)}, "i");
  Scalar one_plus_i = Scalar::one(qi) + Scalar::generator(qi);
  EXPECT_EQ(norm(one_plus_i), num(q, 2));
  EXPECT_EQ(norm(Scalar::one(qi)), num(q, 1));
  EXPECT_EQ(trace(Scalar::one(qi)), num(q, 2));
  EXPECT_EQ(trace(Scalar::one(f9)), num(f9->base(), 2));
}

TEST(NormTrace, AgreesWithFrobeniusOracleAndIsMultiplicative) {
  auto rng = make_rng(4);
  for (auto f : {finite_field(3, 2), finite_field(5, 3), finite_field(2, 4), finite_field(7, 2)}) {
    SCOPED_TRACE(f->describe());
    for (int i = 0; i < 500; ++i) {
      Scalar a = random_scalar(f, rng), b = random_scalar(f, rng);
      ASSERT_EQ(norm(a * b), norm(a) * norm(b));
      ASSERT_EQ(trace(a + b), trace(a) + trace(b));
      if (i < 100) {
        ASSERT_EQ(norm(a), frobenius_norm(a));
        ASSERT_EQ(trace(a), frobenius_trace(a));
      }
    }
  }
}

TEST(NormTrace, GaussianRationalsMatchClosedForm) {
  auto rng = make_rng(5);
  FieldPtr q = Field::rationals();
  FieldPtr qi = Field::extension(q, {num(q, 1), num(q, 0), num(q, 1)}, "i");
  for (int i = 0; i < 500; ++i) {
    Scalar a = random_scalar(qi, rng), b = random_scalar(qi, rng);
    const Scalar& re = a.coords()[0];
    const Scalar& im = a.coords()[1];
    ASSERT_EQ(norm(a), re * re + im * im);
    ASSERT_EQ(trace(a), re + re);
    ASSERT_EQ(norm(a * b), norm(a) * norm(b));
  }
}

TEST(NormTrace, BaseElementsScaleByDegree) {
  auto rng = make_rng(6);
  FieldPtr f = finite_field(5, 3);
  for (int i = 0; i < 50; ++i) {
    Scalar c = random_scalar(f->base(), rng);
    Scalar e = Scalar::embed(f, c);
    ASSERT_EQ(norm(e), c.pow(3L));
    ASSERT_EQ(trace(e), c * num(f->base(), 3));
  }
}

TEST(NilInverse, SpecExamples) {
  FieldPtr k = Field::square_zero(Field::rationals(), 2);
  Scalar one = Scalar::one(k), e1 = Scalar::epsilon(k, 1), e2 = Scalar::epsilon(k, 2);
  EXPECT_EQ((one - e1).inverse(), one + e1);
  Scalar two = Scalar::from_int(k, 2L);
  EXPECT_EQ((one - e1 - e2).inverse(), one + e1 + e2 + two * e1 * e2);
  EXPECT_THROW(e1.inverse(), NonUnitError);
  EXPECT_EQ(e1 * e1, Scalar::zero(k));
}

TEST(NilInverse, RandomUnitsInvertExactly) {
  auto rng = make_rng(7);
  for (const auto& f : descriptors()) {
    if (f->kind() != FieldKind::nilpotent) continue;
    for (int i = 0; i < 300; ++i) {
      Scalar a = random_unit(f, rng);
      ASSERT_EQ(a * a.inverse(), Scalar::one(f));
    }
  }
}

TEST(Field, TruncatedRingNilpotencyOrder) {
  FieldPtr k = Field::truncated(Field::rationals(), 3);
  Scalar e = Scalar::epsilon(k, 1);
  EXPECT_FALSE((e * e).is_zero());
  EXPECT_TRUE((e * e * e).is_zero());
  EXPECT_EQ((Scalar::one(k) - e).inverse(), Scalar::one(k) + e + e * e);
}

TEST(Field, DescriptorsPrintCanonically) {
  EXPECT_EQ(Field::rationals()->describe(), "q");
  EXPECT_EQ(Field::prime(5)->describe(), "fp:5");
  EXPECT_EQ(Field::square_zero(Field::rationals(), 2)->describe(), "eps2sq(q)");
  EXPECT_EQ(Field::truncated(Field::rationals(), 3)->describe(), "trunc3(q)");
}

TEST(Field, MismatchedFieldsAreRejected) {
  EXPECT_THROW(num(Field::prime(5), 1) + num(Field::prime(7), 1), FieldMismatchError);
  EXPECT_THROW(Field::prime(6), Error);
}
