#pragma once
// Flags (curve, point) on charts of P^1 x P^1, and functions of two variables in chart coordinates.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "recip/algebra/bipoly.hpp"
#include "recip/curve/place.hpp"

namespace recip {

enum class CurveKind { graph, line };

/// V(y - s(x)) or V(x - alpha), in the coordinates of some chart.
class SurfaceCurve {
 public:
  static SurfaceCurve graph(Poly s) {
    SurfaceCurve c;
    c.kind_ = CurveKind::graph;
    c.s_ = std::move(s);
    return c;
  }
  static SurfaceCurve line(const Scalar& alpha) {
    SurfaceCurve c;
    c.kind_ = CurveKind::line;
    c.s_ = Poly::constant(alpha);
    return c;
  }

  CurveKind kind() const { return kind_; }
  const FieldPtr& field() const { return s_.field(); }
  /// s(x) for a graph; the constant alpha for a line.
  const Poly& shape() const { return s_; }
  Scalar alpha() const { return s_.constant_term(); }
  /// Name of the coordinate that parametrizes the curve.
  std::string coordinate() const { return kind_ == CurveKind::graph ? "x" : "y"; }

  /// z1 = y - s(x) or x - alpha, as a polynomial in chart coordinates.
  BiPoly equation() const {
    const FieldPtr& f = field();
    if (kind_ == CurveKind::graph) return BiPoly::var_y(f) - BiPoly::from_x(s_);
    return BiPoly::var_x(f) - BiPoly::constant(alpha());
  }

  std::string label() const {
    const std::string var = kind_ == CurveKind::graph ? "y" : "x";
    if (s_.is_zero()) return var;
    return var + "-(" + s_.to_string("x") + ")";
  }

  friend bool operator==(const SurfaceCurve& a, const SurfaceCurve& b) { return a.kind_ == b.kind_ && a.s_ == b.s_; }

 private:
  CurveKind kind_ = CurveKind::graph;
  Poly s_;
};

/// Chart ids: bit 0 replaces x by 1/x, bit 1 replaces y by 1/y.
struct Flag2D {
  int chart = 0;
  SurfaceCurve curve;
  /// A place of the curve's coordinate line (x for graphs, y for lines).
  Place point;

  std::string label() const {
    return "curve=" + curve.label() + ";point=" + point.label(curve.coordinate()) + ";chart=" + std::to_string(chart);
  }
};

inline Flag2D make_flag(const SurfaceCurve& curve, const Place& point, int chart = 0) {
  if (chart < 0 || chart > 3) throw Error("chart id must be 0, 1, 2 or 3");
  if (!same_field(curve.field(), point.base())) throw FieldMismatchError("curve and point are over different fields");
  return Flag2D{chart, curve, point};
}

namespace detail {

/// Apply a piecewise substitution to f, keeping the factored form.
template <class Fn>
RationalFunction2 map_pieces(const RationalFunction2& f, Fn fn) {
  if (f.is_zero()) throw ZeroFunctionError("substitution into the zero function");
  if (f.factored().empty()) return fn(f.numerator()) / fn(f.denominator());
  RationalFunction2 r = RationalFunction2::constant(f.unit());
  for (const auto& pc : f.factored()) r = r * fn(pc.poly).pow(pc.mult);
  return r;
}

}  // namespace detail

/// f(1/x, y).
inline RationalFunction2 invert_x(const RationalFunction2& f) {
  const FieldPtr k = f.field();
  return detail::map_pieces(f, [&](const BiPoly& p) {
    const long d = std::max(0L, p.degree_x());
    return RationalFunction2(p.reverse_x(static_cast<std::size_t>(d))) * RationalFunction2(BiPoly::var_x(k)).pow(-d);
  });
}

/// f(x, 1/y).
inline RationalFunction2 invert_y(const RationalFunction2& f) {
  const FieldPtr k = f.field();
  return detail::map_pieces(f, [&](const BiPoly& p) {
    const long d = std::max(0L, p.degree_y());
    return RationalFunction2(p.reverse_y(static_cast<std::size_t>(d))) * RationalFunction2(BiPoly::var_y(k)).pow(-d);
  });
}

/// f(y, x).
inline RationalFunction2 swap_xy(const RationalFunction2& f) {
  return detail::map_pieces(f, [](const BiPoly& p) { return RationalFunction2(p.swapped()); });
}

/// f written in the coordinates of a chart (the substitutions are involutions).
inline RationalFunction2 to_chart(const RationalFunction2& f, int chart) {
  RationalFunction2 r = f;
  if (chart & 1) r = invert_x(r);
  if (chart & 2) r = invert_y(r);
  return r;
}

/// A function of one variable, read as a function of x.
inline RationalFunction2 lift_x(const RationalFunction& f) {
  if (f.factored().empty()) {
    return RationalFunction2::from_parts(BiPoly::from_x(f.numerator()), BiPoly::from_x(f.denominator()));
  }
  RationalFunction2 r = RationalFunction2::constant(f.unit());
  for (const auto& pc : f.factored()) r = r * RationalFunction2(BiPoly::from_x(pc.poly)).pow(pc.mult);
  return r;
}

/// A function of one variable, read as a function of y.
inline RationalFunction2 lift_y(const RationalFunction& f) { return swap_xy(lift_x(f)); }

}  // namespace recip
