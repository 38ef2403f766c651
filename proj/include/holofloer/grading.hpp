#pragma once

#include <compare>
#include <sstream>
#include <string>

namespace holofloer {

/// Integer-valued affine function of the color parameter r: slope*r + offset.
struct AffineLinear {
  long slope = 0;
  long offset = 0;

  long at(long r) const { return slope * r + offset; }
  bool is_constant() const { return slope == 0; }
  /// Precompose with r -> r+1.
  AffineLinear index_shifted() const { return {slope, offset + slope}; }

  AffineLinear operator+(const AffineLinear& o) const { return {slope + o.slope, offset + o.offset}; }
  AffineLinear operator-(const AffineLinear& o) const { return {slope - o.slope, offset - o.offset}; }
  AffineLinear operator-() const { return {-slope, -offset}; }
  auto operator<=>(const AffineLinear&) const = default;

  /// "2r-2", "r", "-r+3", "5", "0"
  std::string to_string() const {
    std::ostringstream out;
    if (slope == 0) return std::to_string(offset);
    if (slope == -1)
      out << "-r";
    else if (slope == 1)
      out << "r";
    else
      out << slope << "r";
    if (offset > 0) out << "+" << offset;
    if (offset < 0) out << offset;
    return out.str();
  }
};

/// Constant bigrading (t-exponent, q-exponent): the homological and the
/// Alexander direction of a monomial t^t_exp q^q_exp.
struct Bidegree {
  long t = 0;
  long q = 0;

  Bidegree operator+(const Bidegree& o) const { return {t + o.t, q + o.q}; }
  Bidegree operator-(const Bidegree& o) const { return {t - o.t, q - o.q}; }
  Bidegree operator-() const { return {-t, -q}; }
  auto operator<=>(const Bidegree&) const = default;

  std::string to_string() const {
    if (t == 0 && q == 0) return "1";
    std::ostringstream out;
    bool sep = false;
    if (t != 0) {
      out << "t";
      if (t != 1) out << "^" << t;
      sep = true;
    }
    if (q != 0) {
      if (sep) out << "·";
      out << "q";
      if (q != 1) out << "^" << q;
    }
    return out.str();
  }
};

/// Bigrading whose two exponents are affine in the color parameter r,
/// e.g. t^(2r-2) q^r. Constant bigradings are the slope-zero case.
struct AffineBidegree {
  AffineLinear t;
  AffineLinear q;

  static AffineBidegree constant(long t_exp, long q_exp) {
    return {{0, t_exp}, {0, q_exp}};
  }
  static AffineBidegree constant(const Bidegree& d) { return constant(d.t, d.q); }

  Bidegree at(long r) const { return {t.at(r), q.at(r)}; }
  bool is_constant() const { return t.is_constant() && q.is_constant(); }
  /// The slope pair, i.e. the per-index growth (d(r+1) - d(r)).
  Bidegree slope() const { return {t.slope, q.slope}; }
  /// Precompose both exponents with r -> r+1.
  AffineBidegree index_shifted() const { return {t.index_shifted(), q.index_shifted()}; }

  AffineBidegree operator+(const AffineBidegree& o) const { return {t + o.t, q + o.q}; }
  AffineBidegree operator-(const AffineBidegree& o) const { return {t - o.t, q - o.q}; }
  AffineBidegree operator-() const { return {-t, -q}; }
  auto operator<=>(const AffineBidegree&) const = default;

  std::string to_string() const {
    std::ostringstream out;
    out << "t^{" << t.to_string() << "}·q^{" << q.to_string() << "}";
    return out.str();
  }
};

/// Degree of the tail step u at color r: t^(2r-2) q^r.
inline AffineBidegree tail_u_degree() { return {{2, -2}, {1, 0}}; }
/// Degree of the tail exterior generator xi: t q.
inline AffineBidegree tail_xi_degree() { return AffineBidegree::constant(1, 1); }

}  // namespace holofloer
