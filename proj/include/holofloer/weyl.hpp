#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "holofloer/alexander.hpp"
#include "holofloer/algebra.hpp"

namespace holofloer {

/// Element of the q-Weyl algebra Z[q, q^-1]<L, M> / (qLM - ML), kept in the
/// normal form sum_i c_i(q) M^(a_i) L^(b_i) with M-powers to the left.
/// Reordering uses L^b M^a = q^(-ab) M^a L^b.
///
/// Words act on sequences with the leftmost factor applied first; on normal
/// monomials this reads (M^a L^b f)(n) = q^(a(n+b)) f(n+b), consistent with
/// the generator actions (L f)(n) = f(n+1) and (M f)(n) = q^n f(n).
class WeylElement {
public:
  WeylElement() = default;

  static WeylElement zero() { return WeylElement(); }
  static WeylElement one() { return monomial(0, 0); }
  static WeylElement gen_l() { return monomial(0, 1); }
  static WeylElement gen_m() { return monomial(1, 0); }
  /// c(q) * M^a L^b with a, b >= 0 (std::domain_error otherwise).
  static WeylElement monomial(long a, long b,
                              LaurentPoly c = LaurentPoly::constant(1));
  static WeylElement scalar(LaurentPoly c) { return monomial(0, 0, std::move(c)); }

  bool is_zero() const { return terms_.empty(); }
  /// Largest L-exponent appearing (0 for scalars; throws on zero element).
  long l_degree() const;
  const std::map<std::pair<long, long>, LaurentPoly>& terms() const { return terms_; }
  LaurentPoly coeff(long a, long b) const;

  WeylElement& operator+=(const WeylElement& o);
  WeylElement& operator-=(const WeylElement& o);
  WeylElement operator-() const;
  friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
  friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
  bool operator==(const WeylElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const WeylElement& o) const { return !(*this == o); }

  /// Pretty form such as "(q^-1 - 1)·M^2·L + M", proper terms first.
  std::string to_string() const;

private:
  // (M-exponent, L-exponent) -> coefficient, nonzero only.
  std::map<std::pair<long, long>, LaurentPoly> terms_;
  void add_term(long a, long b, const LaurentPoly& c);
};

/// Product in the algebra; operator* forwards here.
WeylElement weyl_multiply(const WeylElement& a, const WeylElement& b);

/// D_X = 1 - X L for a Laurent coefficient X.
WeylElement d_operator(const LaurentPoly& x);

/// Product of D_(q^(-n)) over the distinct exponents n of delta1, ascending.
/// Annihilates n |-> delta1(q^n). Throws std::domain_error on zero input.
WeylElement knot_annihilator(const LaurentPoly& delta1);

/// (M - 1) * knot_annihilator(delta1); with the leftmost-first action this
/// annihilates the unreduced colored sequence.
WeylElement unreduced_annihilator(const LaurentPoly& delta1);

/// Lazily evaluated, memoized sequence of truncated series indexed by
/// integers n >= start_index(). Reads are safe from concurrent threads.
class SeriesSequence {
public:
  using Generator = std::function<TruncatedSeries(long)>;
  SeriesSequence(long start_index, Generator gen);

  long start_index() const;
  /// Value at index n; throws std::out_of_range when n < start_index().
  TruncatedSeries at(long n) const;

private:
  struct State;
  std::shared_ptr<State> state_;
};

/// Reduced colored sequence n |-> positive_form(q^n), defined from n = 1.
SeriesSequence reduced_sequence(const AlexanderPoly& a, long order = kDefaultOrder);
/// Unreduced colored sequence n |-> colored_unreduced(a, n), from n = 1.
SeriesSequence unreduced_sequence(const AlexanderPoly& a, long order = kDefaultOrder);

/// Apply a Weyl element to a sequence at index n (leftmost factor first).
TruncatedSeries apply_weyl(const WeylElement& op, const SeriesSequence& f, long n);

/// Outcome of checking op * f = 0 across an index range. `clean` reports
/// success; a failure keeps the first offending index and its residual.
/// `order` is the weakest truncation order among the residuals inspected.
struct VerificationReport {
  bool clean = true;
  long index_lo = 0;
  long index_hi = 0;
  long order = 0;
  std::optional<long> failed_index;
  std::optional<TruncatedSeries> residual;
};

/// Evaluate op * f at every index in [index_lo, index_hi], truncating
/// comparisons at `order`. Reports rather than throws on nonzero residuals.
VerificationReport verify_annihilation(const WeylElement& op, const SeriesSequence& f,
                                       long index_lo, long index_hi,
                                       long order = kDefaultOrder);

}  // namespace holofloer
