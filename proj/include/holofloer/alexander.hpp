#pragma once

#include <string>

#include "holofloer/algebra.hpp"

namespace holofloer {

/// Symmetrized Alexander polynomial: invariant under q -> q^-1, with a
/// positive lowest coefficient. Constructed through symmetrize() so the
/// invariants hold for every instance.
class AlexanderPoly {
public:
  /// Normalize an arbitrary Laurent representative to the symmetric form.
  /// Throws std::domain_error naming the obstruction when no unit multiple
  /// of the input is palindromic. |value at q = 1| != 1 only warns (on
  /// stderr): it signals dubious input but breaks none of the algebra here.
  static AlexanderPoly symmetrize(const LaurentPoly& raw);

  const LaurentPoly& symmetric() const { return sym_; }
  /// Half the support span; the top exponent of the symmetric form.
  long degree() const { return sym_.max_exp(); }
  /// Positive form q^degree * symmetric: lowest exponent 0, constant term
  /// positive.
  LaurentPoly positive_form() const { return sym_.shifted(degree()); }

  bool operator==(const AlexanderPoly& o) const { return sym_ == o.sym_; }

private:
  explicit AlexanderPoly(LaurentPoly sym) : sym_(std::move(sym)) {}
  LaurentPoly sym_;
};

/// Alexander polynomial of the (r, s) torus knot,
/// (q^(rs) - 1)(q - 1) / ((q^r - 1)(q^s - 1)), symmetrized.
/// Requires r, s >= 1 and gcd(r, s) = 1 (std::domain_error otherwise).
AlexanderPoly torus_knot_alexander(long r, long s);

/// Alexander polynomial of the (r, s) cable of a knot with polynomial a:
/// a(q^r) times the (r, s) torus polynomial. Same argument requirements as
/// torus_knot_alexander.
AlexanderPoly cable_alexander(const AlexanderPoly& a, long r, long s);

/// Unreduced colored polynomial at color r >= 1 as a truncated series:
/// q^(r*degree) * sym(q^r) * (1 - q) / (1 - q^r).
TruncatedSeries colored_unreduced(const AlexanderPoly& a, long r,
                                  long order = kDefaultOrder);

/// Reduced colored polynomial at color r >= 1: positive_form evaluated at
/// q^r. An honest polynomial, no truncation involved.
LaurentPoly colored_reduced(const AlexanderPoly& a, long r);

/// First exponent where the positive form of the (r, r*n+1) cable disagrees
/// with the unreduced colored series (or `order` when they agree throughout).
/// The cable approximates the series q-adically: the defect is at least
/// r*n + 1.
long convergence_defect(const AlexanderPoly& a, long r, long n,
                        long order = kDefaultOrder);

}  // namespace holofloer
