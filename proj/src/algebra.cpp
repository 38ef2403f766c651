#include "holofloer/algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace holofloer {

void LaurentPoly::set(long exp, Int c) {
  if (c == 0)
    coeffs_.erase(exp);
  else
    coeffs_[exp] = std::move(c);
}

LaurentPoly LaurentPoly::monomial(long exp, Int c) {
  LaurentPoly p;
  p.set(exp, std::move(c));
  return p;
}

LaurentPoly LaurentPoly::constant(Int c) { return monomial(0, std::move(c)); }

LaurentPoly LaurentPoly::from_pairs(const std::vector<std::pair<long, Int>>& pairs) {
  LaurentPoly p;
  for (const auto& [e, c] : pairs) p.set(e, p.coeff(e) + c);
  return p;
}

Int LaurentPoly::coeff(long exp) const {
  auto it = coeffs_.find(exp);
  return it == coeffs_.end() ? Int(0) : it->second;
}

long LaurentPoly::min_exp() const {
  if (coeffs_.empty()) throw std::domain_error("zero polynomial has no support");
  return coeffs_.begin()->first;
}

long LaurentPoly::max_exp() const {
  if (coeffs_.empty()) throw std::domain_error("zero polynomial has no support");
  return coeffs_.rbegin()->first;
}

std::vector<long> LaurentPoly::support() const {
  std::vector<long> out;
  out.reserve(coeffs_.size());
  for (const auto& [e, c] : coeffs_) out.push_back(e);
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.coeffs_) set(e, coeff(e) + c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.coeffs_) set(e, coeff(e) - c);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p;
  for (const auto& [e, c] : coeffs_) p.coeffs_[e] = -c;
  return p;
}

LaurentPoly laurent_product(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p;
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) {
      long e = ea + eb;
      p.set(e, p.coeff(e) + ca * cb);
    }
  return p;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  return laurent_product(a, b);
}

LaurentPoly LaurentPoly::shifted(long exp) const {
  LaurentPoly p;
  for (const auto& [e, c] : coeffs_) p.coeffs_[e + exp] = c;
  return p;
}

LaurentPoly LaurentPoly::scaled(const Int& c) const {
  LaurentPoly p;
  if (c == 0) return p;
  for (const auto& [e, v] : coeffs_) p.coeffs_[e] = v * c;
  return p;
}

LaurentPoly LaurentPoly::mirrored() const {
  LaurentPoly p;
  for (const auto& [e, c] : coeffs_) p.coeffs_[-e] = c;
  return p;
}

Int LaurentPoly::eval_at_one() const {
  Int s = 0;
  for (const auto& [e, c] : coeffs_) s += c;
  return s;
}

Int LaurentPoly::eval_at_minus_one() const {
  Int s = 0;
  for (const auto& [e, c] : coeffs_) s += (e % 2 == 0) ? c : -c;
  return s;
}

LaurentPoly substitute_power(const LaurentPoly& a, long r) {
  if (r < 1) throw std::domain_error("substitute_power requires r >= 1");
  LaurentPoly p;
  for (const auto& [e, c] : a.coeffs_) p.coeffs_[e * r] = c;
  return p;
}

LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw std::domain_error("division by the zero polynomial");
  LaurentPoly rem = num;
  LaurentPoly quot;
  const long dexp = den.max_exp();
  const Int dlead = den.coeff(dexp);
  // Exact quotients live above this exponent; falling below it means the
  // greedy elimination would descend forever, so the division is inexact.
  const long quot_floor = num.is_zero() ? 0 : num.min_exp() - den.min_exp();
  while (!rem.is_zero()) {
    const long rexp = rem.max_exp();
    const Int rlead = rem.coeff(rexp);
    if (rexp - dexp < quot_floor || rlead % dlead != 0)
      throw std::domain_error("inexact polynomial division");
    const Int q = rlead / dlead;
    LaurentPoly t = LaurentPoly::monomial(rexp - dexp, q);
    quot += t;
    rem -= t * den;
    if (!rem.is_zero() && rem.max_exp() >= rexp)
      throw std::domain_error("inexact polynomial division");
  }
  return quot;
}

LaurentPoly gauss_binomial(long n, long d) {
  if (n < 0 || d < 0 || d > n)
    throw std::domain_error("gauss_binomial requires 0 <= d <= n");
  // Row-by-row evaluation of the defining recurrence.
  std::vector<LaurentPoly> row{LaurentPoly::constant(1)};
  for (long m = 1; m <= n; ++m) {
    std::vector<LaurentPoly> next(static_cast<std::size_t>(m) + 1);
    next[0] = LaurentPoly::constant(1);
    next[static_cast<std::size_t>(m)] = LaurentPoly::constant(1);
    for (long k = 1; k < m; ++k)
      next[static_cast<std::size_t>(k)] =
          row[static_cast<std::size_t>(k - 1)].shifted(2 * (m - k)) +
          row[static_cast<std::size_t>(k)];
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(d)];
}

TruncatedSeries::TruncatedSeries(long order, long min_exp)
    : min_exp_(min_exp), order_(order) {}

void TruncatedSeries::set(long exp, Int c) {
  if (exp >= order_ || c == 0)
    coeffs_.erase(exp);
  else
    coeffs_[exp] = std::move(c);
}

TruncatedSeries TruncatedSeries::from_poly(const LaurentPoly& p, long order) {
  TruncatedSeries s(order, p.is_zero() ? 0 : std::min(p.min_exp(), order));
  for (const auto& [e, c] : p.terms())
    if (e < order) s.coeffs_[e] = c;
  return s;
}

Int TruncatedSeries::coeff(long exp) const {
  if (exp >= order_)
    throw std::out_of_range("coefficient requested at or above truncation order");
  auto it = coeffs_.find(exp);
  return it == coeffs_.end() ? Int(0) : it->second;
}

std::optional<long> TruncatedSeries::first_nonzero() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.begin()->first;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  order_ = std::min(order_, o.order_);
  min_exp_ = std::min(min_exp_, o.min_exp_);
  // Re-truncate anything either side holds at or above the narrowed order.
  for (auto it = coeffs_.begin(); it != coeffs_.end();)
    it = (it->first >= order_) ? coeffs_.erase(it) : std::next(it);
  for (const auto& [e, c] : o.coeffs_)
    if (e < order_) set(e, coeff(e) + c);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  return *this += -o;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries s(order_, min_exp_);
  for (const auto& [e, c] : coeffs_) s.coeffs_[e] = -c;
  return s;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  // a is exact below a.order(), so a*b is exact below
  // min(a.order() + b.min_exp(), b.order() + a.min_exp()).
  TruncatedSeries s(std::min(a.order_ + b.min_exp_, b.order_ + a.min_exp_),
                    a.min_exp_ + b.min_exp_);
  for (const auto& [ea, ca] : a.coeffs_)
    for (const auto& [eb, cb] : b.coeffs_) {
      long e = ea + eb;
      if (e < s.order_) s.set(e, s.coeff(e) + ca * cb);
    }
  return s;
}

TruncatedSeries operator*(const TruncatedSeries& a, const LaurentPoly& b) {
  if (b.is_zero()) return TruncatedSeries(a.order_, a.min_exp_);
  TruncatedSeries s(a.order_ + b.min_exp(), a.min_exp_ + b.min_exp());
  for (const auto& [ea, ca] : a.coeffs_)
    for (const auto& [eb, cb] : b.terms()) {
      long e = ea + eb;
      if (e < s.order_) s.set(e, s.coeff(e) + ca * cb);
    }
  return s;
}

bool TruncatedSeries::congruent(const TruncatedSeries& o) const {
  const long ord = std::min(order_, o.order_);
  for (const auto& [e, c] : coeffs_)
    if (e < ord && o.coeff(e) != c) return false;
  for (const auto& [e, c] : o.coeffs_)
    if (e < ord && coeff(e) != c) return false;
  return true;
}

std::optional<long> TruncatedSeries::first_difference(const TruncatedSeries& o) const {
  const long ord = std::min(order_, o.order_);
  std::optional<long> best;
  auto scan = [&](const std::map<long, Int>& m, const TruncatedSeries& other) {
    for (const auto& [e, c] : m)
      if (e < ord && other.coeff(e) != c && (!best || e < *best)) best = e;
  };
  scan(coeffs_, o);
  scan(o.coeffs_, *this);
  return best;
}

TruncatedSeries TruncatedSeries::truncated(long new_order) const {
  TruncatedSeries s(std::min(new_order, order_), min_exp_);
  for (const auto& [e, c] : coeffs_)
    if (e < s.order_) s.coeffs_[e] = c;
  return s;
}

TruncatedSeries series_from_rational(const LaurentPoly& num,
                                     const std::vector<long>& denom_exps,
                                     long order) {
  for (long d : denom_exps)
    if (d < 1) throw std::domain_error("series_from_rational requires denominator exponents >= 1");
  // Work at an internal order wide enough that the final product, whose
  // lower bound is num.min_exp(), is still exact below `order`.
  const long base = num.is_zero() ? 0 : std::min(num.min_exp(), 0L);
  const long internal = order - base;
  TruncatedSeries acc = TruncatedSeries::from_poly(LaurentPoly::constant(1), internal);
  for (long d : denom_exps) {
    LaurentPoly geom;
    for (long e = 0; e < internal; e += d) geom += LaurentPoly::monomial(e);
    acc = acc * TruncatedSeries::from_poly(geom, internal);
  }
  return (acc * num).truncated(order);
}

namespace detail {

std::string format_q_terms(const std::map<long, Int>& coeffs) {
  if (coeffs.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : coeffs) {
    const bool neg = c < 0;
    const Int mag = neg ? Int(-c) : c;
    if (first)
      out << (neg ? "-" : "");
    else
      out << (neg ? " - " : " + ");
    first = false;
    if (e == 0) {
      out << mag.str();
    } else {
      if (mag != 1) out << mag.str() << "·";
      out << "q";
      if (e != 1) out << "^" << e;
    }
  }
  return out.str();
}

}  // namespace detail

std::string LaurentPoly::to_string() const { return detail::format_q_terms(coeffs_); }

std::string TruncatedSeries::to_string() const { return detail::format_q_terms(coeffs_); }

}  // namespace holofloer
