#include "holofloer/alexander.hpp"

#include <iostream>
#include <numeric>
#include <stdexcept>

namespace holofloer {

AlexanderPoly AlexanderPoly::symmetrize(const LaurentPoly& raw) {
  if (raw.is_zero())
    throw std::domain_error("symmetrize: the zero polynomial admits no symmetric form");
  const long lo = raw.min_exp();
  const long hi = raw.max_exp();
  if ((lo + hi) % 2 != 0)
    throw std::domain_error(
        "symmetrize: support span is odd, no monomial shift centers it");
  LaurentPoly s = raw.shifted(-(lo + hi) / 2);
  if (s.mirrored() != s)
    throw std::domain_error(
        "symmetrize: coefficients are not palindromic after centering");
  if (s.coeff(s.min_exp()) < 0) s = -s;
  const Int at_one = s.eval_at_one();
  if (at_one != 1 && at_one != -1)
    std::cerr << "warning: symmetrized polynomial evaluates to " << at_one
              << " at q = 1 (expected a unit)\n";
  return AlexanderPoly(std::move(s));
}

AlexanderPoly torus_knot_alexander(long r, long s) {
  if (r < 1 || s < 1)
    throw std::domain_error("torus_knot_alexander requires r, s >= 1");
  if (std::gcd(r, s) != 1)
    throw std::domain_error("torus_knot_alexander requires gcd(r, s) = 1");
  const LaurentPoly num =
      LaurentPoly::from_pairs({{r * s, 1}, {0, -1}}) *
      LaurentPoly::from_pairs({{1, 1}, {0, -1}});
  const LaurentPoly den =
      LaurentPoly::from_pairs({{r, 1}, {0, -1}}) *
      LaurentPoly::from_pairs({{s, 1}, {0, -1}});
  return AlexanderPoly::symmetrize(divide_exact(num, den));
}

AlexanderPoly cable_alexander(const AlexanderPoly& a, long r, long s) {
  const AlexanderPoly torus = torus_knot_alexander(r, s);
  return AlexanderPoly::symmetrize(substitute_power(a.symmetric(), r) *
                                   torus.symmetric());
}

TruncatedSeries colored_unreduced(const AlexanderPoly& a, long r, long order) {
  if (r < 1) throw std::domain_error("colored_unreduced requires r >= 1");
  const LaurentPoly num = substitute_power(a.positive_form(), r) *
                          LaurentPoly::from_pairs({{0, 1}, {1, -1}});
  return series_from_rational(num, {r}, order);
}

LaurentPoly colored_reduced(const AlexanderPoly& a, long r) {
  if (r < 1) throw std::domain_error("colored_reduced requires r >= 1");
  return substitute_power(a.positive_form(), r);
}

long convergence_defect(const AlexanderPoly& a, long r, long n, long order) {
  if (n < 1) throw std::domain_error("convergence_defect requires n >= 1");
  const AlexanderPoly cab = cable_alexander(a, r, r * n + 1);
  const TruncatedSeries cable_series =
      TruncatedSeries::from_poly(cab.positive_form(), order);
  const TruncatedSeries limit = colored_unreduced(a, r, order);
  const auto diff = cable_series.first_difference(limit);
  return diff ? *diff : order;
}

}  // namespace holofloer
