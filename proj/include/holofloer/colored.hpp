#pragma once

#include <optional>
#include <string>
#include <vector>

#include "holofloer/alexander.hpp"
#include "holofloer/complexes.hpp"
#include "holofloer/grading.hpp"

namespace holofloer {

/// Generator of a vertically simplified knot Floer basis, carrying its
/// Maslov (homological) and Alexander (filtration) gradings.
struct CfkGenerator {
  std::string label;
  long maslov = 0;
  long alexander = 0;
  bool operator==(const CfkGenerator&) const = default;
};

/// Vertical differential arrow source -> target: drops Maslov by exactly 1
/// and strictly drops the Alexander grading.
struct CfkArrow {
  std::string source;
  std::string target;
  bool operator==(const CfkArrow&) const = default;
};

/// Vertically simplified basis: two-generator pairs (one per arrow) plus a
/// single distinguished cycle untouched by any arrow.
struct CfkBasis {
  std::vector<CfkGenerator> generators;
  std::vector<CfkArrow> arrows;
  bool operator==(const CfkBasis&) const = default;

  /// Structural invariants: unique labels, arrows drop Maslov by 1 and
  /// strictly drop Alexander, each generator in at most one arrow, exactly
  /// one untouched generator. Throws std::invalid_argument.
  void validate() const;
  const CfkGenerator& find(const std::string& label) const;
  /// The unique generator untouched by arrows.
  const CfkGenerator& distinguished() const;
  /// The least-Maslov generator at minimal Alexander grading; degrees are
  /// normalized relative to it.
  const CfkGenerator& bottom() const;
};

/// One head seed: a pair anchored at `base` (affine in the color r) whose
/// differential drops the Alexander grading by `length`. Subdivision turns
/// it into `length` unit pairs spaced by t^(2r-2) q^r.
struct HeadChain {
  AffineBidegree base;
  long length = 1;
  std::string label;
  bool operator==(const HeadChain&) const = default;
};

/// Everything the constructions need to know about one knot: classical
/// polynomial, genus, tau, the optional Floer basis, and the head/theta
/// data of the stable colored model (derived from the basis when present).
struct KnotData {
  std::string name;
  AlexanderPoly alexander = AlexanderPoly::symmetrize(LaurentPoly::constant(1));
  long genus = 0;
  long tau = 0;
  std::optional<CfkBasis> cfk;
  std::vector<HeadChain> head;
  AffineBidegree theta;
  /// Label of the distinguished cycle (free generator of the r = 1 complex).
  std::string distinguished = "x0";

  bool operator==(const KnotData&) const = default;

  /// Derive head chains and theta from the basis: each arrow with target 1_i
  /// yields a chain of length A(src) - A(1_i) anchored at
  /// t^(2k r + (m - 2k)) q^(k r) where k = A(1_i) + genus and m is the Maslov
  /// grading of 1_i relative to the bottom generator; theta defaults to
  /// t^(2(tau+g) r + (m0 - 2(tau+g))) q^((tau+g) r) with m0 the relative
  /// Maslov grading of the distinguished cycle. Throws std::domain_error on
  /// inconsistent genus or grading data.
  static KnotData from_cfk(std::string name, AlexanderPoly alexander, long genus,
                           long tau, CfkBasis basis,
                           std::optional<AffineBidegree> theta_override = std::nullopt);
  static KnotData from_head_spec(std::string name, AlexanderPoly alexander,
                                 long genus, long tau, std::vector<HeadChain> head,
                                 AffineBidegree theta);

  /// Full consistency check: structural invariants plus the Euler
  /// cross-check euler(build_colored_complex(r)) = colored_unreduced(r) for
  /// r in {2, 3} to the given order. Mismatches throw std::domain_error
  /// naming the first bad coefficient, or only warn on stderr when
  /// warn_only is set.
  void validate(bool warn_only = false, long order = 32) const;
};

/// Affine model of the stable colored complex, one object for all r >= 2:
/// the subdivided head plus the theta-shifted tail.
SplitComplex symbolic_complex(const KnotData& k);

/// Concrete colored complex: r = 1 is the finite basis complex (pairs plus
/// the distinguished free generator, no tail); r >= 2 instantiates the
/// affine model. Throws std::domain_error for r <= 0.
SplitComplex build_colored_complex(const KnotData& k, long r);

/// Outcome of comparing euler(build_colored_complex(k, r)) against
/// colored_unreduced(k.alexander, r): `shift` is the normalizing exponent c
/// with euler = q^c * expected (0 on exact agreement), and `first_mismatch`
/// the lowest disagreeing exponent when even the shifted forms differ.
struct EulerCheckReport {
  bool match = false;
  long shift = 0;
  std::optional<long> first_mismatch;
  long order = 0;
};

/// Requires r >= 2 (std::domain_error otherwise); mismatch is an outcome,
/// not an error.
EulerCheckReport colored_euler_check(const KnotData& k, long r, long order);

/// Built-in knots: unknot, 3_1, 4_1, T(2,5), T(2,7).
const std::vector<KnotData>& knot_table();
/// Lookup by name; throws std::out_of_range for unknown names.
const KnotData& find_knot(const std::string& name);

}  // namespace holofloer
