#pragma once
/**
 * @file parshin.hpp
 * @brief Digit sequences, the Parshin symbol by the matrix formula, and the iterated-boundary oracle.
 *
 * All computations happen in normalized coordinates: the function is first
 * written in the flag's chart, and for a line V(x - alpha) the coordinates are
 * swapped so that every curve is a graph y = s(x) parametrized by x.
 * Uniformizers are z1 = y - s(x) along the curve and the place's own
 * uniformizer (p(x), or 1/x at infinity) at the point.
 */

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "recip/curve/symbols.hpp"
#include "recip/surface/flag.hpp"

namespace recip {

struct ParshinDigits {
  int a1 = 0;
  int a2 = 0;
  /// Reduction of u2 at the point, in k(point).
  Scalar unit;
  /// Reduction of u1 to the curve, a function of the curve's coordinate.
  RationalFunction curve_unit;
};

namespace detail {

/// f in chart coordinates, with x and y swapped for lines.
inline RationalFunction2 normalize_for_flag(const RationalFunction2& f, const Flag2D& flag) {
  RationalFunction2 g = to_chart(f, flag.chart);
  if (flag.curve.kind() == CurveKind::line) g = swap_xy(g);
  return g;
}

/// The curve as y = s(x) in normalized coordinates.
inline const Poly& normalized_shape(const Flag2D& flag) { return flag.curve.shape(); }

/// Lowest y-order and its coefficient of F(x, s(x) + y).
inline std::pair<int, Poly> order_along(const BiPoly& F, const Poly& s) {
  const BiPoly G = F.substitute_y_shift(s);
  for (std::size_t j = 0; j < G.coeffs().size(); ++j) {
    if (!G.coeffs()[j].is_zero()) return {static_cast<int>(j), G.coeffs()[j]};
  }
  throw ZeroFunctionError("order along a curve of the zero polynomial");
}

}  // namespace detail

/// (a1, reduction of f / z1^a1) for g in normalized coordinates and the curve y = s(x).
/// The reduction carries a factored form built from the pieces of g.
inline std::pair<int, RationalFunction> curve_expansion(const RationalFunction2& g, const Poly& s) {
  if (g.is_zero()) throw ZeroFunctionError("digits of the zero function");
  const FieldPtr& k = g.field();
  std::vector<std::pair<BiPoly, int>> pieces;
  Scalar unit = Scalar::one(k);
  if (g.factored().empty()) {
    pieces = {{g.numerator(), 1}, {g.denominator(), -1}};
  } else {
    unit = g.unit();
    for (const auto& pc : g.factored()) pieces.emplace_back(pc.poly, pc.mult);
  }
  int a1 = 0;
  RationalFunction u = RationalFunction::constant(unit);
  for (const auto& [piece, mult] : pieces) {
    auto [ord, low] = detail::order_along(piece, s);
    a1 += ord * mult;
    u = u * RationalFunction(low).pow(mult);
  }
  return {a1, u};
}

/// Digits of f (given in chart-0 coordinates) at a flag.
inline ParshinDigits parshin_digits(const RationalFunction2& f, const Flag2D& flag) {
  auto [a1, u1] = curve_expansion(detail::normalize_for_flag(f, flag), detail::normalized_shape(flag));
  const int a2 = valuation(u1, flag.point);
  const Scalar fin = reduce_at(unit_part(u1, flag.point), flag.point);
  return {a1, a2, fin, u1};
}

/// (-1)^B prod final_i^((-1)^(i+1) A_i), the matrix expression before orientation and norm.
inline Scalar parshin_matrix_expression(const std::array<ParshinDigits, 3>& d) {
  long a[3][2];
  for (int i = 0; i < 3; ++i) {
    a[i][0] = d[i].a1;
    a[i][1] = d[i].a2;
  }
  // A_i: determinant with row i deleted; the remaining rows keep their order.
  auto minor = [&](int i) {
    const int r0 = i == 0 ? 1 : 0;
    const int r1 = i == 2 ? 1 : 2;
    return a[r0][0] * a[r1][1] - a[r0][1] * a[r1][0];
  };
  const long e[3] = {minor(0), -minor(1), minor(2)};
  // A^k_ij: the entry left after deleting rows i, j and column k.
  long B = 0;
  for (int k = 0; k < 2; ++k) {
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        const int l = 3 - i - j;
        B += a[i][k] * a[j][k] * a[l][1 - k];
      }
    }
  }
  Scalar v = Scalar::one(d[0].unit.field());
  for (int i = 0; i < 3; ++i) v *= d[i].unit.pow(e[i]);
  if (B % 2 != 0) v = -v;
  return v;
}

/// The Parshin symbol (f1, f2, f3) at a flag, by the digit-matrix formula.
inline SymbolValue parshin_symbol(const RationalFunction2& f1, const RationalFunction2& f2, const RationalFunction2& f3,
                                  const Flag2D& flag) {
  const std::array<ParshinDigits, 3> d = {parshin_digits(f1, flag), parshin_digits(f2, flag), parshin_digits(f3, flag)};
  // The matrix expression is written for the (z2, z1) slot orientation; inverting it gives the
  // orientation of the iterated boundary, which ends each wedge with the uniformizer.
  const Scalar local = parshin_matrix_expression(d).inverse();
  return {norm_to(local, flag.point.base()), "parshin", flag.label(), {to_string(f1), to_string(f2), to_string(f3)},
          "N(((-1)^B prod u_i^((-1)^(i+1) A_i))^-1)"};
}

/// Valuation along y = s(x) in normalized coordinates, by repeated division by y - s(x).
class CurveLocalizer {
 public:
  using Source = RationalFunction2;
  using Target = RationalFunction;
  explicit CurveLocalizer(Poly s) : s_(std::move(s)), z_(BiPoly::var_y(s_.field()) - BiPoly::from_x(s_)) {}

  int valuation(const RationalFunction2& f) const {
    return multiplicity(f.numerator()) - multiplicity(f.denominator());
  }
  RationalFunction2 unit_part(const RationalFunction2& f) const {
    const int a = valuation(f);
    return a == 0 ? f : f * RationalFunction2(z_).pow(-a);
  }
  RationalFunction reduce(const RationalFunction2& u) const {
    return RationalFunction::from_parts(restrict(u.numerator()), restrict(u.denominator()));
  }
  RationalFunction minus_one() const { return RationalFunction::constant(-Scalar::one(s_.field())); }
  bool is_one(const RationalFunction& r) const { return r.is_constant() && r.constant_value().is_one(); }

  /// F(x, s(x)).
  Poly restrict(const BiPoly& F) const {
    Poly acc(s_.field());
    for (std::size_t j = F.coeffs().size(); j-- > 0;) acc = acc * s_ + F.coeffs()[j];
    return acc;
  }

 private:
  int multiplicity(BiPoly F) const {
    int m = 0;
    while (!F.is_zero() && restrict(F).is_zero()) {
      // Synthetic division by y - s(x).
      const auto& c = F.coeffs();
      std::vector<Poly> q(c.size() - 1, Poly(s_.field()));
      Poly carry(s_.field());
      for (std::size_t j = c.size(); j-- > 1;) {
        carry = c[j] + carry * s_;
        q[j - 1] = carry;
      }
      F = BiPoly(s_.field(), std::move(q));
      ++m;
    }
    return m;
  }

  Poly s_;
  BiPoly z_;
};

/// Pre-norm value of the iterated boundary of {f1, f2, f3}: first along the curve, then at the point.
inline Scalar parshin_oracle_local(const RationalFunction2& f1, const RationalFunction2& f2, const RationalFunction2& f3,
                                   const Flag2D& flag) {
  const auto g = [&](const RationalFunction2& f) { return detail::normalize_for_flag(f, flag); };
  const auto s3 = MilnorSymbol<RationalFunction2>::wedge({g(f1), g(f2), g(f3)});
  const auto s2 = milnor_boundary(s3, CurveLocalizer(detail::normalized_shape(flag)));
  const auto s1 = milnor_boundary(s2, PlaceLocalizer(flag.point));
  return evaluate_weight_one(s1, Scalar::one(flag.point.residue_field()));
}

inline SymbolValue parshin_oracle(const RationalFunction2& f1, const RationalFunction2& f2, const RationalFunction2& f3,
                                  const Flag2D& flag) {
  return {norm_to(parshin_oracle_local(f1, f2, f3, flag), flag.point.base()), "parshin-oracle", flag.label(),
          {to_string(f1), to_string(f2), to_string(f3)}, "N(boundary at point of boundary along curve)"};
}

}  // namespace recip
