#pragma once
// Independent reference computations used to cross-check the library.

#include <optional>

#include "recip/curve/series.hpp"
#include "support.hpp"

namespace recip::test {

/// v_alpha(f) from Taylor coefficients of num and den at alpha (no polynomial division).
inline int taylor_valuation(const RationalFunction& f, const Scalar& alpha) {
  auto low = [&](const Poly& p) {
    const Poly s = p.shift(alpha);
    int k = 0;
    while (s.coeff(static_cast<std::size_t>(k)).is_zero()) ++k;
    return k;
  };
  return low(f.numerator()) - low(f.denominator());
}

/// Leading Laurent coefficient of f at t = alpha, from Taylor coefficients.
inline Scalar leading_coefficient_at(const RationalFunction& f, const Scalar& alpha) {
  auto first = [&](const Poly& p) {
    const Poly s = p.shift(alpha);
    std::size_t k = 0;
    while (s.coeff(k).is_zero()) ++k;
    return s.coeff(k);
  };
  return first(f.numerator()) / first(f.denominator());
}

/// Leading coefficient at infinity in s = 1/t.
inline Scalar leading_coefficient_at_infinity(const RationalFunction& f) {
  return f.numerator().lead() / f.denominator().lead();
}

/// Tame symbol at a rational place from leading Laurent coefficients.
inline Scalar tame_by_leading_coefficients(const RationalFunction& f, const RationalFunction& g, const std::optional<Scalar>& alpha) {
  int a, b;
  Scalar cf, cg;
  if (alpha) {
    a = taylor_valuation(f, *alpha);
    b = taylor_valuation(g, *alpha);
    cf = leading_coefficient_at(f, *alpha);
    cg = leading_coefficient_at(g, *alpha);
  } else {
    a = static_cast<int>(f.denominator().degree() - f.numerator().degree());
    b = static_cast<int>(g.denominator().degree() - g.numerator().degree());
    cf = leading_coefficient_at_infinity(f);
    cg = leading_coefficient_at_infinity(g);
  }
  Scalar v = cf.pow(static_cast<long>(b)) / cg.pow(static_cast<long>(a));
  if ((a * b) % 2 != 0) v = -v;
  return v;
}

/// Res_{t=theta} h dt for h with a pole of order <= m at theta, characteristic 0:
/// (1/(m-1)!) d^{m-1}/dt^{m-1} [(t - theta)^m h] at theta.
inline Scalar residue_by_derivatives(const RationalFunction& h, const Scalar& theta, int m) {
  const FieldPtr& K = theta.field();
  const Poly lin(K, {-theta, Scalar::one(K)});
  RationalFunction w = base_change(h, K) * RationalFunction(lin.pow(static_cast<unsigned long>(m)));
  mpz_class fact = 1;
  for (int i = 1; i < m; ++i) {
    w = derivative(w);
    fact *= i;
  }
  return evaluate(w, theta) / Scalar::from_int(K, fact);
}

/// Sum of residues of h dt over all roots of an irreducible q, computed in K = k[t]/(q) with pole
/// order up to m. Over an algebraically closed field the roots are the conjugates of theta, whose
/// residues are the conjugates of the residue at theta; their sum is the trace.
inline Scalar splitting_residue_sum(const RationalFunction& h, const Poly& q, int m) {
  const FieldPtr K = Field::extension(q.field(), q.coeffs(), "r");
  return trace(residue_by_derivatives(h, Scalar::generator(K), m));
}

/// Res_inf(h dt) = -Res_{s=0} h(1/s) s^-2 ds, via the derivative formula in s.
inline Scalar residue_at_infinity_by_derivatives(const RationalFunction& h, int m) {
  const FieldPtr& k = h.field();
  const Poly s = Poly::variable(k);
  RationalFunction w = invert_variable(h) * RationalFunction::from_parts(Poly::one(k), s * s);
  return -residue_by_derivatives(w, Scalar::zero(k), m);
}

}  // namespace recip::test
