#pragma once

#include <string>
#include <vector>

#include "holofloer/colored.hpp"
#include "holofloer/complexes.hpp"
#include "holofloer/weyl.hpp"

namespace holofloer {

/// A whole sequence of complexes held as one symbolic object: index r maps
/// to instantiate(body, r). Degrees affine in r make regularity decidable by
/// slope comparison; concrete instantiation exists only for cross-checks.
struct SymbolicSequence {
  SplitComplex body;
  long start_index = 2;
};

/// Pairs whose affine base degrees share a slope: the per-index growth
/// `ratio` is the monomial by which the degree-zero comparison maps between
/// consecutive indices shift the class.
struct CongruenceClass {
  Bidegree ratio;
  std::vector<std::string> members;
};

enum class StepKind { TailCollapse, ClassCone, FinalIso };

/// One triangle of the reduction tower. `shift` is the twist applied to the
/// sequence being coned off: the tail step records t^(2r-2) q^r, a class
/// cone records the constant inverse slope monomial of its class.
/// `classes_before` is the congruence-class count the step faces (for the
/// tail collapse, the count it creates).
struct CertificateStep {
  StepKind kind = StepKind::FinalIso;
  AffineBidegree shift;
  long classes_before = 0;
};

/// Machine-checkable holonomicity certificate: the ordered tower of
/// distinguished triangles ending in the zero object.
struct HolonomyCertificate {
  std::string knot;
  long start_index = 2;
  std::vector<CertificateStep> steps;
  SplitComplex final;
};

struct Classification {
  bool reduced = false;
  bool regular = false;
  std::vector<CongruenceClass> classes;  // sorted by ratio
};

/// The stable colored sequence of a knot (affine body, indices from 2).
SymbolicSequence knot_sequence(const KnotData& k);

/// Shift every degree by the affine monomial t^(2r-2) q^r.
SymbolicSequence functor_m(const SymbolicSequence& s);
/// Substitute r -> r+1 in every affine degree (including tail steps).
SymbolicSequence functor_l(const SymbolicSequence& s);

/// Group the head pairs by degree slope. Requires a collapsed (tail-free)
/// body (std::domain_error otherwise). `reduced` reports whether the body
/// consists solely of q-length-1 pairs; `regular` asserts that distinct
/// classes have distinct slopes, which the affine model guarantees.
Classification classify(const SymbolicSequence& s);

struct CollapseOutcome {
  SymbolicSequence result;
  CertificateStep step;
};

/// Cone off the degree-preserving tail shift: rewrites the body to
/// u-shifted head + homologically shifted head + the theta-shifted
/// xi pair, eliminating the tail. Requires a standard tail
/// (std::domain_error otherwise).
CollapseOutcome tail_collapse(const SymbolicSequence& s);

struct ReduceOutcome {
  SymbolicSequence result;
  CertificateStep step;
};

/// Cone off one congruence class: the result is the inverse-slope-twisted
/// index shift of the remainder plus the homologically shifted remainder,
/// dropping the class count by exactly 1 and doubling the surviving
/// classes. Requires a reduced sequence and a class of s
/// (std::domain_error otherwise).
ReduceOutcome reduce_step(const SymbolicSequence& s, const CongruenceClass& cls);

/// Full reduction tower: tail collapse, one cone per class in ascending
/// slope order, final isomorphism onto the zero object. Throws
/// std::logic_error if the tower fails to terminate in the zero object.
HolonomyCertificate certify(const KnotData& k);

/// certify plus the intermediate data needed for concrete cross-checks:
/// bodies[i] is the sequence entering step i, classes[i] the class coned at
/// step i (empty for non-cone steps).
struct CertifyTrace {
  HolonomyCertificate certificate;
  std::vector<SymbolicSequence> bodies;
  std::vector<CongruenceClass> classes;
};
CertifyTrace certify_trace(const KnotData& k);

/// Collapse the tower to its t = -1 shadow: the tail step contributes
/// 1 - q^c M^a from its shift t-part evaluated at -1, a class cone
/// contributes 1 - (+/-) q^c M^a L, a final isomorphism contributes
/// nothing. Requires every shift to have an even t-slope so the sign is
/// index-independent (std::domain_error otherwise).
WeylElement decategorify(const HolonomyCertificate& cert);

/// Check that the decategorified operator annihilates the unreduced colored
/// sequence of the knot over indices [certificate start, r_max].
VerificationReport certificate_verify(const HolonomyCertificate& cert,
                                      const KnotData& k, long r_max = 12,
                                      long order = kDefaultOrder);

}  // namespace holofloer
