#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "holofloer/algebra.hpp"
#include "holofloer/grading.hpp"

namespace holofloer {

/// Two-step summand Lambda(x): cycle generator 1 at `base`, partner x at
/// base + (t_len, q_len), differential d(x) = 1. q_len >= 1 is the Alexander
/// drop of the differential, t_len its Maslov drop (normally 1). Because the
/// differential strictly drops the Alexander grading, a pair is never an
/// internal isomorphism: pairs do not cancel against themselves.
struct PairSummand {
  std::string label;
  AffineBidegree base;
  long q_len = 1;
  long t_len = 1;
};

/// One generator, no differential.
struct FreeSummand {
  std::string label;
  AffineBidegree degree;
};

/// Infinite tail F2[u] (x) Lambda(xi), shifted by theta: generators
/// u^n xi^k sit at theta + n*u_deg + k*xi_deg, with d(xi) = 1 and d(u) = 0.
/// Kept symbolic; no operation ever enumerates u-powers except the bounded
/// Poincare expansion.
struct TailSummand {
  AffineBidegree theta;
  AffineBidegree u_deg = tail_u_degree();
  AffineBidegree xi_deg = tail_xi_degree();
  bool operator==(const TailSummand& o) const {
    return theta == o.theta && u_deg == o.u_deg && xi_deg == o.xi_deg;
  }
};

/// Direct sum of pair, free, and at most one tail summand, in split normal
/// form: no differentials connect distinct summands. Degrees are affine in
/// the color parameter r; instantiated complexes are the slope-zero case.
struct SplitComplex {
  std::vector<PairSummand> pairs;
  std::vector<FreeSummand> frees;
  std::optional<TailSummand> tail;

  /// Labels must be unique across pairs and frees (std::invalid_argument).
  void validate() const;
  bool empty() const { return pairs.empty() && frees.empty() && !tail; }
  std::size_t generator_count_finite() const { return 2 * pairs.size() + frees.size(); }
};

/// Chain map between split complexes whose only nonzero components are
/// degree-zero isomorphisms between matched summands. A match pairs a source
/// label with a target label of equal shape (pair with equal lengths, or
/// free) and equal degree; match_tail marks the identity on equal tails.
struct SplitMap {
  SplitComplex source;
  SplitComplex target;
  std::vector<std::pair<std::string, std::string>> matches;
  bool match_tail = false;

  /// Throws std::invalid_argument when a match is missing, repeated, or
  /// connects summands of different shape or degree.
  void validate() const;
};

/// Shift every degree (pair bases, free degrees, tail theta) by d.
SplitComplex shift_complex(const SplitComplex& c, const AffineBidegree& d);

/// Evaluate all affine degrees at color r, producing a constant complex.
SplitComplex instantiate(const SplitComplex& c, long r);

/// Replace each pair of q-length n by n pairs of q-length 1: pair j sits at
/// base + (j-1) * (t^(2r-2) q^r) with lengths (1, 1), labelled "parent:j".
/// Frees pass through. Requires t_len = 1 on every pair and no tail
/// (std::domain_error otherwise).
SplitComplex subdivide(const SplitComplex& c);

/// Mapping cone: matched summands cancel (Gaussian elimination of an
/// isomorphism component), unmatched target summands survive at their
/// degrees, unmatched source summands survive with the homological shift t
/// applied and a prime appended to their labels. Two surviving tails cannot
/// be represented (std::domain_error).
SplitComplex cone(const SplitMap& f);

/// Bigraded generating series truncated in the q-direction.
struct BigradedPoly {
  std::map<Bidegree, Int> terms;  // nonzero only
  long q_order = 0;

  void add(const Bidegree& d, const Int& c);
  Int coeff(const Bidegree& d) const;
  bool operator==(const BigradedPoly& o) const;
  /// Collapse t -> -1 into a truncated q-series.
  TruncatedSeries euler() const;
  std::string to_string() const;
};

/// Generator-counting series of c at color r, truncated below q^q_order.
/// The tail contributes theta * (1 + xi) * (geometric series in u); its
/// u-degree must have positive q-part at r (std::domain_error otherwise).
BigradedPoly poincare(const SplitComplex& c, long r, long q_order);

/// Euler characteristic: poincare with t = -1.
TruncatedSeries euler(const SplitComplex& c, long r, long q_order);

/// Canonical form under relabeling: summands sorted by degree data.
SplitComplex normal_form(const SplitComplex& c);

/// A split complex is contractible only when it is the zero object: pairs
/// never cancel internally (their differentials drop the Alexander
/// filtration), so nothing else reduces away.
bool is_contractible(const SplitComplex& c);

/// Equality of normal forms up to relabeling.
bool is_equivalent(const SplitComplex& a, const SplitComplex& b);

}  // namespace holofloer
