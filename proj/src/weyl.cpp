#include "holofloer/weyl.hpp"

#include <limits>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace holofloer {

void WeylElement::add_term(long a, long b, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(a, b);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

WeylElement WeylElement::monomial(long a, long b, LaurentPoly c) {
  if (a < 0 || b < 0)
    throw std::domain_error("Weyl monomials require nonnegative M- and L-exponents");
  WeylElement w;
  w.add_term(a, b, c);
  return w;
}

long WeylElement::l_degree() const {
  if (terms_.empty()) throw std::domain_error("zero Weyl element has no L-degree");
  long deg = 0;
  for (const auto& [key, c] : terms_) deg = std::max(deg, key.second);
  return deg;
}

LaurentPoly WeylElement::coeff(long a, long b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? LaurentPoly() : it->second;
}

WeylElement& WeylElement::operator+=(const WeylElement& o) {
  for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
  return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& o) {
  for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, -c);
  return *this;
}

WeylElement WeylElement::operator-() const {
  WeylElement w;
  for (const auto& [key, c] : terms_) w.terms_.emplace(key, -c);
  return w;
}

WeylElement weyl_multiply(const WeylElement& a, const WeylElement& b) {
  WeylElement w;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      const auto [a1, b1] = ka;
      const auto [a2, b2] = kb;
      // (M^a1 L^b1)(M^a2 L^b2) = q^(-b1*a2) M^(a1+a2) L^(b1+b2).
      LaurentPoly c = (ca * cb).shifted(-b1 * a2);
      WeylElement t = WeylElement::monomial(a1 + a2, b1 + b2, std::move(c));
      w += t;
    }
  return w;
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  return weyl_multiply(a, b);
}

WeylElement d_operator(const LaurentPoly& x) {
  return WeylElement::one() - WeylElement::monomial(0, 1, x);
}

WeylElement knot_annihilator(const LaurentPoly& delta1) {
  if (delta1.is_zero())
    throw std::domain_error("knot_annihilator: zero polynomial has no exponent set");
  WeylElement w = WeylElement::one();
  for (long n : delta1.support())  // ascending
    w = w * d_operator(LaurentPoly::monomial(-n));
  return w;
}

WeylElement unreduced_annihilator(const LaurentPoly& delta1) {
  return (WeylElement::gen_m() - WeylElement::one()) * knot_annihilator(delta1);
}

std::string WeylElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Proper operator terms first: descending (M, L) exponents.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto [a, b] = it->first;
    const LaurentPoly& c = it->second;
    std::string cs = c.to_string();
    const bool is_one = (c == LaurentPoly::constant(1));
    const bool is_minus_one = (c == LaurentPoly::constant(-1));
    const bool bare = is_one || is_minus_one ||
                      (c.term_count() == 1 && c.coeff(c.min_exp()) > 0);
    if (first) {
      first = false;
      if (is_minus_one && (a != 0 || b != 0)) out << "-";
    } else {
      if (is_minus_one && (a != 0 || b != 0)) {
        out << " - ";
      } else if (bare && c.coeff(c.min_exp()) < 0) {
        out << " - ";
        cs = (-c).to_string();
      } else {
        out << " + ";
      }
    }
    if (a == 0 && b == 0) {
      out << (bare ? cs : "(" + cs + ")");
      continue;
    }
    if (!is_one && !is_minus_one) {
      out << (bare ? cs : "(" + cs + ")") << "·";
    }
    if (a != 0) {
      out << "M";
      if (a != 1) out << "^" << a;
      if (b != 0) out << "·";
    }
    if (b != 0) {
      out << "L";
      if (b != 1) out << "^" << b;
    }
  }
  return out.str();
}

struct SeriesSequence::State {
  long start;
  Generator gen;
  mutable std::mutex mutex;
  mutable std::map<long, TruncatedSeries> cache;
};

SeriesSequence::SeriesSequence(long start_index, Generator gen)
    : state_(std::make_shared<State>()) {
  state_->start = start_index;
  state_->gen = std::move(gen);
}

long SeriesSequence::start_index() const { return state_->start; }

TruncatedSeries SeriesSequence::at(long n) const {
  if (n < state_->start)
    throw std::out_of_range("sequence index below start_index");
  std::lock_guard<std::mutex> lock(state_->mutex);
  auto it = state_->cache.find(n);
  if (it == state_->cache.end())
    it = state_->cache.emplace(n, state_->gen(n)).first;
  return it->second;
}

SeriesSequence reduced_sequence(const AlexanderPoly& a, long order) {
  return SeriesSequence(1, [a, order](long n) {
    return TruncatedSeries::from_poly(colored_reduced(a, n), order);
  });
}

SeriesSequence unreduced_sequence(const AlexanderPoly& a, long order) {
  return SeriesSequence(1, [a, order](long n) {
    return colored_unreduced(a, n, order);
  });
}

TruncatedSeries apply_weyl(const WeylElement& op, const SeriesSequence& f, long n) {
  if (op.is_zero()) return TruncatedSeries(std::numeric_limits<long>::max() / 2);
  bool any = false;
  TruncatedSeries acc(0);
  for (const auto& [key, c] : op.terms()) {
    const auto [a, b] = key;
    // Leftmost-first action: (c M^a L^b f)(n) = c * q^(a(n+b)) * f(n+b).
    TruncatedSeries term = f.at(n + b) * c.shifted(a * (n + b));
    if (!any) {
      acc = std::move(term);
      any = true;
    } else {
      acc += term;
    }
  }
  return acc;
}

VerificationReport verify_annihilation(const WeylElement& op, const SeriesSequence& f,
                                       long index_lo, long index_hi, long order) {
  VerificationReport report;
  report.index_lo = index_lo;
  report.index_hi = index_hi;
  report.order = order;
  for (long n = index_lo; n <= index_hi; ++n) {
    TruncatedSeries res = apply_weyl(op, f, n).truncated(order);
    report.order = std::min(report.order, res.order());
    if (!res.is_zero()) {
      report.clean = false;
      report.failed_index = n;
      report.residual = res;
      return report;
    }
  }
  return report;
}

}  // namespace holofloer
