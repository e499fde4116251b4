#pragma once
/**
 * @file milnor.hpp
 * @brief Formal Milnor symbols and the boundary map at a discrete valuation.
 *
 * A MilnorSymbol<E> is an integer combination of wedges {e_1, ..., e_m}. The
 * boundary at a valuation with fixed uniformizer z is computed by writing each
 * slot as z^a u, expanding multilinearly, and applying
 *   (i)   a wedge of units maps to 0,
 *   (ii)  {..., z, z} = {..., -1, z},
 *   (iii) {u_1, ..., u_{m-1}, z} maps to {u_1bar, ..., u_{m-1}bar},
 * with a sign for every transposition used to move z to the last slot.
 *
 * The valuation is supplied by a Localizer with
 *   using Source = E; using Target = R;
 *   int valuation(const E&) const;
 *   E unit_part(const E&) const;        // e / z^valuation(e)
 *   R reduce(const E&) const;           // residue class of a unit
 *   R minus_one() const;
 *   bool is_one(const R&) const;       // wedges with a slot equal to 1 vanish
 */

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "recip/algebra/error.hpp"

namespace recip {

template <class E>
struct MilnorTerm {
  long coeff = 0;
  std::vector<E> slots;
};

template <class E>
class MilnorSymbol {
 public:
  MilnorSymbol() = default;
  explicit MilnorSymbol(std::size_t weight) : weight_(weight) {}
  /// The single wedge {e_1, ..., e_m}.
  static MilnorSymbol wedge(std::vector<E> slots) {
    MilnorSymbol s(slots.size());
    s.terms_.push_back({1, std::move(slots)});
    return s;
  }

  std::size_t weight() const { return weight_; }
  const std::vector<MilnorTerm<E>>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  void add(long coeff, std::vector<E> slots) {
    if (slots.size() != weight_) throw Error("wedge of the wrong weight");
    if (coeff != 0) terms_.push_back({coeff, std::move(slots)});
  }

 private:
  std::size_t weight_ = 0;
  std::vector<MilnorTerm<E>> terms_;
};

namespace detail {

/// Sign of the permutation that moves the slots in `chosen` (a bitmask) to the end, keeping relative order.
inline int move_to_end_sign(unsigned chosen, std::size_t m) {
  // Each chosen slot passes over every unchosen slot to its right.
  long swaps = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (!(chosen >> i & 1u)) continue;
    for (std::size_t j = i + 1; j < m; ++j) {
      if (!(chosen >> j & 1u)) ++swaps;
    }
  }
  return swaps % 2 == 0 ? 1 : -1;
}

}  // namespace detail

/// Boundary of a weight-m symbol (1 <= m <= 3), a weight m-1 symbol over the residue field.
template <class Loc>
MilnorSymbol<typename Loc::Target> milnor_boundary(const MilnorSymbol<typename Loc::Source>& s, const Loc& loc) {
  using R = typename Loc::Target;
  const std::size_t m = s.weight();
  if (m > 3) throw UnsupportedError("milnor_boundary supports weight at most 3");
  if (m == 0) throw Error("a weight-0 symbol has no boundary");
  MilnorSymbol<R> out(m - 1);
  for (const auto& term : s.terms()) {
    std::vector<int> a;
    std::vector<typename Loc::Source> u;
    for (const auto& e : term.slots) {
      a.push_back(loc.valuation(e));
      u.push_back(loc.unit_part(e));
    }
    // Subsets of slots that contribute a z; the empty subset is a unit wedge (rule i).
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
      long c = term.coeff;
      std::size_t zs = 0;
      for (std::size_t i = 0; i < m; ++i) {
        if (mask >> i & 1u) {
          c *= a[i];
          ++zs;
        }
      }
      if (c == 0) continue;
      c *= detail::move_to_end_sign(mask, m);
      std::vector<R> slots;
      bool trivial = false;
      for (std::size_t i = 0; i < m && !trivial; ++i) {
        if (mask >> i & 1u) continue;
        slots.push_back(loc.reduce(u[i]));
        trivial = loc.is_one(slots.back());
      }
      if (trivial) continue;
      // Rule ii turns all but the last z into -1; rule iii then drops the last z.
      for (std::size_t j = 1; j < zs; ++j) slots.push_back(loc.minus_one());
      out.add(c, std::move(slots));
    }
  }
  return out;
}

/// Value of a weight-1 symbol in the multiplicative group: prod e^coeff.
template <class R>
R evaluate_weight_one(const MilnorSymbol<R>& s, R one) {
  if (s.weight() != 1) throw Error("only weight-1 symbols evaluate to a unit");
  R acc = std::move(one);
  for (const auto& t : s.terms()) acc = acc * t.slots[0].pow(t.coeff);
  return acc;
}

/// Integer value of a weight-0 symbol.
template <class R>
long evaluate_weight_zero(const MilnorSymbol<R>& s) {
  if (s.weight() != 0) throw Error("only weight-0 symbols evaluate to an integer");
  long acc = 0;
  for (const auto& t : s.terms()) acc += t.coeff;
  return acc;
}

}  // namespace recip
