#pragma once
// Field descriptors, places, curves, flags and affine points given as text.

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "recip/cli/parser.hpp"
#include "recip/surface/flag.hpp"

namespace recip::cli {

/// Malformed command-line data that is not an expression syntax error.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct FieldSpec {
  /// Ring of the values (nilpotent for eps2/eps3).
  FieldPtr ring;
  /// Field of function coefficients.
  FieldPtr base;
  /// Canonical descriptor string, e.g. "fq:3^2".
  std::string canonical;
  /// Modulus of the (base) extension in the generator a, when there is one.
  std::optional<std::string> modulus;
  /// 0, 2 for eps2(...), 3 for eps3(...).
  int nil = 0;
};

namespace detail {

inline std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

inline std::uint64_t parse_u64(const std::string& s, const std::string& what) {
  if (s.empty() || s.size() > 18 || s.find_first_not_of("0123456789") != std::string::npos) {
    throw UsageError("invalid " + what + " '" + s + "'");
  }
  return std::stoull(s);
}

}  // namespace detail

/// q | fp:<p> | fq:<p>^<d> | eps2(<base>) | eps3(<base>).
inline FieldSpec parse_field_spec(std::string_view text) {
  const std::string s = detail::trim(text);
  FieldSpec out;
  if (s == "q") {
    out.ring = out.base = Field::rationals();
    out.canonical = "q";
    return out;
  }
  if (s.rfind("fp:", 0) == 0) {
    const std::uint64_t p = detail::parse_u64(s.substr(3), "prime");
    if (!recip::detail::is_prime_u64(p)) throw UsageError("fp:" + std::to_string(p) + " is not a prime field");
    out.ring = out.base = Field::prime(p);
    out.canonical = "fp:" + std::to_string(p);
    return out;
  }
  if (s.rfind("fq:", 0) == 0) {
    const std::size_t caret = s.find('^');
    if (caret == std::string::npos) throw UsageError("expected fq:<p>^<d>, got '" + s + "'");
    const std::uint64_t p = detail::parse_u64(s.substr(3, caret - 3), "prime");
    const std::uint64_t d = detail::parse_u64(s.substr(caret + 1), "degree");
    if (!recip::detail::is_prime_u64(p)) throw UsageError(std::to_string(p) + " is not prime");
    if (d < 1 || d > 64) throw UsageError("extension degree must be in 1..64");
    if (d == 1) return parse_field_spec("fp:" + std::to_string(p));
    out.ring = out.base = finite_field(p, static_cast<unsigned>(d));
    out.canonical = "fq:" + std::to_string(p) + "^" + std::to_string(d);
    out.modulus = out.base->modulus_string();
    return out;
  }
  for (int n : {2, 3}) {
    const std::string head = "eps" + std::to_string(n) + "(";
    if (s.rfind(head, 0) == 0 && s.back() == ')') {
      FieldSpec inner = parse_field_spec(std::string_view(s).substr(head.size(), s.size() - head.size() - 1));
      if (inner.nil != 0) throw UsageError("nilpotent descriptors cannot be nested");
      inner.ring = n == 2 ? Field::square_zero(inner.base, 2) : Field::truncated(inner.base, 3);
      inner.canonical = head + inner.canonical + ")";
      inner.nil = n;
      return inner;
    }
  }
  throw UsageError("unknown field descriptor '" + s + "' (expected q, fp:<p>, fq:<p>^<d>, eps2(...) or eps3(...))");
}

/// A polynomial expression in `var` (made monic), or "inf".
inline Place parse_place(std::string_view text, const FieldPtr& k, const std::string& var = "t") {
  const std::string s = detail::trim(text);
  if (s == "inf") return Place::infinity(k);
  const RationalFunction f = parse_function(s, k, var);
  if (!f.denominator().is_constant() || f.numerator().degree() < 1) {
    throw UsageError("a place must be a non-constant polynomial in " + var + " or 'inf', got '" + s + "'");
  }
  const Poly p = f.numerator().monic();
  if (!is_irreducible(p)) throw UsageError("place polynomial " + p.to_string(var) + " is not (certifiably) irreducible");
  return Place::unchecked(p);
}

/// y-<s(x)> (a graph) or x-<alpha> (a line), read as a polynomial in x and y.
inline SurfaceCurve parse_curve(std::string_view text, const FieldPtr& k) {
  const std::string s = detail::trim(text);
  const RationalFunction2 f = parse_function2(s, k);
  const BiPoly& F = f.numerator();
  const auto reject = [&]() -> SurfaceCurve {
    throw UsageError("curve must be y-<polynomial in x> or x-<constant>, got '" + s + "'");
  };
  if (!f.denominator().is_constant() || F.is_zero()) return reject();
  const BiPoly G = F.scale(normalize_unit(F).inverse());
  if (G.degree_y() == 1 && G.coeff_y(1).is_constant() && G.coeff_y(1).constant_term().is_one()) {
    return SurfaceCurve::graph(-G.coeff_y(0));
  }
  if (G.degree_y() == 0) {
    const Poly& c = G.coeff_y(0);
    if (c.degree() == 1 && c.lead().is_one()) return SurfaceCurve::line(-c.constant_term());
  }
  return reject();
}

/// curve=<curve>;point=<place>;chart=<id>; the point is written in the curve's coordinate.
inline Flag2D parse_flag(std::string_view text, const FieldPtr& k) {
  std::optional<std::string> curve, point;
  int chart = 0;
  std::string rest(text);
  std::size_t start = 0;
  while (start <= rest.size()) {
    std::size_t end = rest.find(';', start);
    if (end == std::string::npos) end = rest.size();
    const std::string item = detail::trim(std::string_view(rest).substr(start, end - start));
    start = end + 1;
    if (item.empty()) continue;
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("flag item '" + item + "' is not key=value");
    const std::string key = detail::trim(std::string_view(item).substr(0, eq));
    const std::string value = item.substr(eq + 1);
    if (key == "curve") {
      curve = value;
    } else if (key == "point") {
      point = value;
    } else if (key == "chart") {
      const std::uint64_t c = detail::parse_u64(detail::trim(value), "chart");
      if (c > 3) throw UsageError("chart id must be 0, 1, 2 or 3");
      chart = static_cast<int>(c);
    } else {
      throw UsageError("unknown flag key '" + key + "'");
    }
  }
  if (!curve || !point) throw UsageError("a flag needs curve=... and point=...");
  const SurfaceCurve c = parse_curve(*curve, k);
  return make_flag(c, parse_place(*point, k, c.coordinate()), chart);
}

/// "alpha,beta", optionally in parentheses.
inline std::pair<Scalar, Scalar> parse_point(std::string_view text, const FieldPtr& k) {
  std::string s = detail::trim(text);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  const std::size_t comma = s.find(',');
  if (comma == std::string::npos || s.find(',', comma + 1) != std::string::npos) {
    throw UsageError("a point must be written alpha,beta");
  }
  return {parse_scalar(s.substr(0, comma), k), parse_scalar(s.substr(comma + 1), k)};
}

}  // namespace recip::cli
