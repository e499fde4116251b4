#include "generators.hpp"
#include "oracles.hpp"

using namespace recip;
using namespace recip::test;

namespace {

struct Vars {
  FieldPtr k;
  RationalFunction2 x, y;
  explicit Vars(FieldPtr f) : k(f), x(BiPoly::var_x(f)), y(BiPoly::var_y(f)) {}
  RationalFunction2 c(long v) const { return RationalFunction2::constant(Scalar::from_int(k, v)); }
};

Flag2D horizontal_axis_flag(const FieldPtr& k) {
  return make_flag(SurfaceCurve::graph(Poly(k)), Place::finite(Poly::variable(k)));
}

}  // namespace

TEST(ParshinDigits, SpecExamples) {
  Vars v(Field::rationals());
  const Flag2D fl = horizontal_axis_flag(v.k);
  auto d = parshin_digits(v.y, fl);
  EXPECT_EQ(d.a1, 1);
  EXPECT_EQ(d.a2, 0);
  EXPECT_TRUE(d.unit.is_one());
  d = parshin_digits(v.x, fl);
  EXPECT_EQ(d.a1, 0);
  EXPECT_EQ(d.a2, 1);
  EXPECT_TRUE(d.unit.is_one());
  d = parshin_digits(v.c(7), fl);
  EXPECT_EQ(d.a1, 0);
  EXPECT_EQ(d.a2, 0);
  EXPECT_EQ(d.unit, num(v.k, 7));
  EXPECT_THROW(parshin_digits(RationalFunction2(v.k), fl), ZeroFunctionError);
}

TEST(ParshinDigits, ReconstructTheFunction) {
  // f = z1^a1 u1 and u1bar = z2^a2 u2 with u2(point) = unit.
  auto rng = make_rng(51);
  FieldPtr k = Field::prime(7);
  for (int i = 0; i < 200; ++i) {
    const Flag2D fl = random_flag(k, rng);
    const auto f = random_flag_friendly(k, rng, flag_pieces(fl));
    const auto d = parshin_digits(f, fl);
    const auto g = detail::normalize_for_flag(f, fl);
    const CurveLocalizer loc(fl.curve.shape());
    ASSERT_EQ(loc.valuation(g), d.a1);
    ASSERT_EQ(loc.reduce(loc.unit_part(g)), d.curve_unit);
    ASSERT_EQ(valuation(d.curve_unit, fl.point), d.a2);
    ASSERT_EQ(reduce_at(unit_part(d.curve_unit, fl.point), fl.point), d.unit);
    ASSERT_TRUE(d.curve_unit.factored_consistent());
  }
}

TEST(ParshinSymbol, WorkedExamplesWithBoundaryOrientation) {
  Vars v(Field::rationals());
  const Flag2D fl = horizontal_axis_flag(v.k);
  const Scalar c = num(v.k, 3);
  // {y, x, c} -> {x, c} along V(y) -> c^-1 at x = 0 (the uniformizer x must move to the last slot).
  EXPECT_EQ(parshin_symbol(v.y, v.x, v.c(3), fl).value, c.inverse());
  EXPECT_EQ(parshin_oracle(v.y, v.x, v.c(3), fl).value, c.inverse());
  EXPECT_EQ(parshin_symbol(v.x, v.y, v.c(3), fl).value, c);
  EXPECT_EQ(parshin_oracle(v.x, v.y, v.c(3), fl).value, c);
  EXPECT_TRUE(parshin_symbol(v.x + v.c(1), v.y + v.c(2), v.c(3), fl).value.is_one());
  EXPECT_EQ(parshin_symbol(v.y, v.y, v.c(3), fl).value, parshin_oracle(v.y, v.y, v.c(3), fl).value);
}

TEST(ParshinSymbol, MatrixExpressionIsTheInverseOfTheBoundary) {
  Vars v(Field::rationals());
  const Flag2D fl = horizontal_axis_flag(v.k);
  std::array<ParshinDigits, 3> d = {parshin_digits(v.y, fl), parshin_digits(v.x, fl), parshin_digits(v.c(3), fl)};
  EXPECT_EQ(parshin_matrix_expression(d), num(v.k, 3));
}

TEST(ParshinSymbol, FormulaMatchesOracleOverF5) {
  auto rng = make_rng(52);
  FieldPtr k = Field::prime(5);
  for (int i = 0; i < 300; ++i) {
    const Flag2D fl = random_flag(k, rng);
    const auto pieces = flag_pieces(fl);
    const auto f1 = random_flag_friendly(k, rng, pieces), f2 = random_flag_friendly(k, rng, pieces),
               f3 = random_flag_friendly(k, rng, pieces);
    ASSERT_EQ(parshin_symbol(f1, f2, f3, fl).value, parshin_oracle(f1, f2, f3, fl).value) << fl.label();
  }
}

TEST(ParshinSymbol, FormulaMatchesOracleOverQ) {
  auto rng = make_rng(53);
  FieldPtr k = Field::rationals();
  for (int i = 0; i < 50; ++i) {
    const Flag2D fl = random_flag(k, rng);
    const auto pieces = flag_pieces(fl);
    const auto f1 = random_flag_friendly(k, rng, pieces), f2 = random_flag_friendly(k, rng, pieces),
               f3 = random_flag_friendly(k, rng, pieces);
    ASSERT_EQ(parshin_symbol(f1, f2, f3, fl).value, parshin_oracle(f1, f2, f3, fl).value) << fl.label();
  }
}

TEST(ParshinSymbol, MultilinearAndAntisymmetric) {
  auto rng = make_rng(54);
  FieldPtr k = Field::prime(7);
  for (int i = 0; i < 150; ++i) {
    const Flag2D fl = random_flag(k, rng);
    const auto pc = flag_pieces(fl);
    const auto f = random_flag_friendly(k, rng, pc), g = random_flag_friendly(k, rng, pc),
               h = random_flag_friendly(k, rng, pc), f2 = random_flag_friendly(k, rng, pc);
    auto P = [&](const RationalFunction2& a, const RationalFunction2& b, const RationalFunction2& c) {
      return parshin_symbol(a, b, c, fl).value;
    };
    ASSERT_EQ(P(f * f2, g, h), P(f, g, h) * P(f2, g, h));
    ASSERT_EQ(P(g, f * f2, h), P(g, f, h) * P(g, f2, h));
    ASSERT_EQ(P(g, h, f * f2), P(g, h, f) * P(g, h, f2));
    ASSERT_TRUE((P(f, g, h) * P(g, f, h)).is_one());
    ASSERT_TRUE((P(f, g, h) * P(f, h, g)).is_one());
    ASSERT_TRUE((P(f, g, h) * P(h, g, f)).is_one());
  }
}

TEST(ParshinSymbol, DegeneratesToTheTameSymbol) {
  auto rng = make_rng(55);
  for (auto k : {Field::prime(5), Field::rationals()}) {
    const RationalFunction2 y(BiPoly::var_y(k));
    for (int i = 0; i < 100; ++i) {
      const auto g1 = random_function(k, 3, rng, 3), g2 = random_function(k, 3, rng, 3);
      Place p = Place::infinity(k);
      if (i % 3 == 0) p = Place::unchecked(Poly(k, {-random_scalar(k, rng, 3), Scalar::one(k)}));
      if (i % 3 == 1) p = Place::unchecked(k->is_finite() ? first_irreducible(k, 2) : Poly::from_ints(k, {1, 0, 1}));
      const Flag2D fl = make_flag(SurfaceCurve::graph(Poly(k)), p);
      ASSERT_EQ(parshin_symbol(lift_x(g1), lift_x(g2), y, fl).value, tame_symbol(g1, g2, p).value);
    }
  }
}

TEST(ParshinSymbol, ChartCovariance) {
  auto rng = make_rng(56);
  FieldPtr k = Field::prime(7);
  int compared = 0;
  for (int i = 0; i < 100; ++i) {
    // y = b (b != 0) at x = a (a != 0) is visible in all four charts.
    const Scalar a = random_unit(k, rng), b = random_unit(k, rng);
    const Place pa = Place::unchecked(Poly(k, {-a, Scalar::one(k)}));
    const Place pa_inv = Place::unchecked(Poly(k, {-a.inverse(), Scalar::one(k)}));
    const Flag2D f0 = make_flag(SurfaceCurve::graph(Poly::constant(b)), pa, 0);
    const Flag2D f1 = make_flag(SurfaceCurve::graph(Poly::constant(b)), pa_inv, 1);
    const Flag2D f2 = make_flag(SurfaceCurve::graph(Poly::constant(b.inverse())), pa, 2);
    const Flag2D f3 = make_flag(SurfaceCurve::graph(Poly::constant(b.inverse())), pa_inv, 3);
    // The vertical line x = a through y = b, in charts 0 and 1.
    const Flag2D l0 = make_flag(SurfaceCurve::line(a), Place::unchecked(Poly(k, {-b, Scalar::one(k)})), 0);
    const Flag2D l1 = make_flag(SurfaceCurve::line(a.inverse()), Place::unchecked(Poly(k, {-b, Scalar::one(k)})), 1);
    const std::vector<BiPoly> pcs = {BiPoly::var_y(k) - BiPoly::constant(b), BiPoly::var_x(k) - BiPoly::constant(a)};
    const auto g1 = random_flag_friendly(k, rng, pcs), g2 = random_flag_friendly(k, rng, pcs),
               g3 = random_flag_friendly(k, rng, pcs);
    const Scalar v0 = parshin_symbol(g1, g2, g3, f0).value;
    ASSERT_EQ(parshin_symbol(g1, g2, g3, f1).value, v0);
    ASSERT_EQ(parshin_symbol(g1, g2, g3, f2).value, v0);
    ASSERT_EQ(parshin_symbol(g1, g2, g3, f3).value, v0);
    ASSERT_EQ(parshin_symbol(g1, g2, g3, l0).value, parshin_symbol(g1, g2, g3, l1).value);
    ++compared;
  }
  EXPECT_EQ(compared, 100);
}

TEST(Charts, SubstitutionsAreInvolutionsAndKeepFactoredForms) {
  auto rng = make_rng(57);
  FieldPtr k = Field::rationals();
  for (int i = 0; i < 50; ++i) {
    const auto f = random_flag_friendly(k, rng, {}, 3);
    for (int c = 0; c < 4; ++c) {
      const auto g = to_chart(f, c);
      ASSERT_TRUE(g.factored_consistent());
      ASSERT_EQ(to_chart(g, c), f);
    }
    ASSERT_EQ(swap_xy(swap_xy(f)), f);
  }
}

TEST(Flags, InvalidChartIsRejected) {
  FieldPtr k = Field::rationals();
  EXPECT_THROW(make_flag(SurfaceCurve::graph(Poly(k)), Place::infinity(k), 4), Error);
  EXPECT_THROW(make_flag(SurfaceCurve::graph(Poly(k)), Place::infinity(Field::prime(5))), FieldMismatchError);
}
