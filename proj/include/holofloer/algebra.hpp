#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace holofloer {

/// Coefficient type. Arbitrary precision is contractual: every arithmetic
/// result in this library is exact, never rounded and never overflowed.
using Int = boost::multiprecision::cpp_int;

/// Default truncation order used by series-producing operations when the
/// caller does not specify one.
inline constexpr long kDefaultOrder = 64;

/// Sparse Laurent polynomial in one variable q with Int coefficients.
/// Only nonzero coefficients are stored; the zero polynomial has an empty
/// term map.
class LaurentPoly {
public:
  LaurentPoly() = default;

  /// c * q^exp
  static LaurentPoly monomial(long exp, Int c = Int(1));
  static LaurentPoly constant(Int c);
  /// Build from (exponent, coefficient) pairs; repeated exponents accumulate.
  static LaurentPoly from_pairs(const std::vector<std::pair<long, Int>>& pairs);

  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of q^exp (zero when absent).
  Int coeff(long exp) const;
  /// Lowest/highest exponent with nonzero coefficient; throws
  /// std::domain_error on the zero polynomial.
  long min_exp() const;
  long max_exp() const;
  std::size_t term_count() const { return coeffs_.size(); }
  const std::map<long, Int>& terms() const { return coeffs_; }
  /// Sorted list of exponents carrying a nonzero coefficient.
  std::vector<long> support() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly operator-() const;
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  /// Multiply by q^exp.
  LaurentPoly shifted(long exp) const;
  LaurentPoly scaled(const Int& c) const;
  /// Substitute q -> q^(-1).
  LaurentPoly mirrored() const;
  Int eval_at_one() const;
  Int eval_at_minus_one() const;

  /// Human-readable form with ascending exponents, e.g. "q^-1 - 1 + q".
  std::string to_string() const;

private:
  std::map<long, Int> coeffs_;
  void set(long exp, Int c);
  friend LaurentPoly substitute_power(const LaurentPoly&, long);
  friend LaurentPoly laurent_product(const LaurentPoly&, const LaurentPoly&);
};

/// Ring product; kept as a named free function because it is part of the
/// module surface, operator* forwards here.
LaurentPoly laurent_product(const LaurentPoly& a, const LaurentPoly& b);

/// Substitute q -> q^r with r >= 1; throws std::domain_error otherwise.
LaurentPoly substitute_power(const LaurentPoly& a, long r);

/// Exact division: returns num / den, throwing std::domain_error when den is
/// zero or the division leaves a remainder.
LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den);

/// Gauss binomial G(n, d) in the variable q^2, defined by G(n, 0) =
/// G(n, n) = 1 and G(n, d) = q^(2(n-d)) G(n-1, d-1) + G(n-1, d).
/// Requires 0 <= d <= n (std::domain_error otherwise).
LaurentPoly gauss_binomial(long n, long d);

/// Power series in q truncated at a known order, with a tracked lower bound
/// on the support. Coefficients at exponents e with min_exp() <= e < order()
/// are exact; nothing is known at or above order().
class TruncatedSeries {
public:
  explicit TruncatedSeries(long order, long min_exp = 0);
  static TruncatedSeries from_poly(const LaurentPoly& p, long order);

  long order() const { return order_; }
  long min_exp() const { return min_exp_; }
  /// Coefficient of q^exp; throws std::out_of_range for exp >= order().
  Int coeff(long exp) const;
  /// True when every known coefficient vanishes.
  bool is_zero() const { return coeffs_.empty(); }
  const std::map<long, Int>& terms() const { return coeffs_; }
  /// Lowest exponent with a nonzero known coefficient, if any.
  std::optional<long> first_nonzero() const;

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  TruncatedSeries operator-() const;
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const LaurentPoly& b);
  friend TruncatedSeries operator*(const LaurentPoly& a, const TruncatedSeries& b) { return b * a; }

  /// Congruence modulo q^min(order(), o.order()); this is also what
  /// operator== means for mixed-order operands.
  bool congruent(const TruncatedSeries& o) const;
  bool operator==(const TruncatedSeries& o) const { return congruent(o); }
  bool operator!=(const TruncatedSeries& o) const { return !congruent(o); }
  /// Smallest exponent below both orders where the two series differ.
  std::optional<long> first_difference(const TruncatedSeries& o) const;

  TruncatedSeries truncated(long new_order) const;
  std::string to_string() const;

private:
  long min_exp_ = 0;
  long order_ = 0;
  std::map<long, Int> coeffs_;  // keys in [min_exp_, order_), values nonzero
  void set(long exp, Int c);
};

/// Expand num / prod_k (1 - q^(d_k)) as a truncated series: each factor
/// becomes the geometric series sum_i q^(i*d_k). Every d_k must be >= 1
/// (std::domain_error otherwise).
TruncatedSeries series_from_rational(const LaurentPoly& num,
                                     const std::vector<long>& denom_exps,
                                     long order);

namespace detail {
/// Shared term formatting for q-polynomials and series.
std::string format_q_terms(const std::map<long, Int>& coeffs);
}  // namespace detail

}  // namespace holofloer
