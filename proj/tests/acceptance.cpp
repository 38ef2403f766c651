// Acceptance harness: one line per criterion, exit code = number of failures.
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "holofloer/alexander.hpp"
#include "holofloer/algebra.hpp"
#include "holofloer/colored.hpp"
#include "holofloer/complexes.hpp"
#include "holofloer/holonomy.hpp"
#include "holofloer/weyl.hpp"

using namespace holofloer;

namespace {

const std::vector<std::string> kKnotNames = {"unknot", "3_1", "4_1", "T(2,5)",
                                             "T(2,7)"};

SeriesSequence power_sequence(long c, long order) {
  return SeriesSequence(0, [c, order](long n) {
    return TruncatedSeries::from_poly(LaurentPoly::monomial(c * n), order);
  });
}

SeriesSequence poly_sequence(std::vector<std::tuple<long, long, Int>> data,
                             long order) {
  return SeriesSequence(0, [data = std::move(data), order](long n) {
    LaurentPoly p;
    for (const auto& [a, b, c] : data) p += LaurentPoly::monomial(a * n + b, c);
    return TruncatedSeries::from_poly(p, order);
  });
}

bool classical_values() {
  const KnotData& k = find_knot("3_1");
  if (k.alexander.positive_form() !=
      LaurentPoly::from_pairs({{0, 1}, {1, -1}, {2, 1}}))
    return false;
  for (long r = 1; r <= 8; ++r) {
    if (colored_reduced(k.alexander, r) !=
        LaurentPoly::from_pairs({{0, 1}, {r, -1}, {2 * r, 1}}))
      return false;
  }
  return true;
}

bool unknot_series() {
  const AlexanderPoly& a = find_knot("unknot").alexander;
  for (long r : {2L, 3L, 5L}) {
    TruncatedSeries s = colored_unreduced(a, r, 64);
    for (long e = 0; e < 64; ++e) {
      const Int want = (e % r == 0) ? 1 : (e % r == 1 ? -1 : 0);
      if (s.coeff(e) != want) return false;
    }
  }
  return true;
}

bool cable_convergence() {
  for (const std::string& name : {"unknot", "3_1", "4_1"}) {
    const AlexanderPoly& a = find_knot(name).alexander;
    for (long r : {2L, 3L}) {
      for (long n = 2; n <= 8; ++n) {
        if (convergence_defect(a, r, n, 64) < r * n + 1) return false;
      }
    }
  }
  return true;
}

bool annihilators_kill() {
  for (const std::string& name : kKnotNames) {
    const AlexanderPoly& a = find_knot(name).alexander;
    const LaurentPoly delta1 = a.positive_form();
    if (!verify_annihilation(knot_annihilator(delta1), reduced_sequence(a, 64), 1,
                             12, 64)
             .clean)
      return false;
    if (!verify_annihilation(unreduced_annihilator(delta1),
                             unreduced_sequence(a, 64), 1, 12, 64)
             .clean)
      return false;
  }
  return true;
}

bool d_operator_laws() {
  std::mt19937 rng(2026);
  std::uniform_int_distribution<long> small(-4, 4);
  std::uniform_int_distribution<long> nonzero_mag(1, 3);
  auto random_mono = [&]() {
    Int c = Int(nonzero_mag(rng)) * (small(rng) < 0 ? -1 : 1);
    return LaurentPoly::monomial(small(rng), c);
  };
  const long order = 40;

  // Linearity: D_X(c f + g) = c D_X(f) + D_X(g), pointwise.
  for (int i = 0; i < 100; ++i) {
    LaurentPoly X = random_mono(), c = random_mono();
    SeriesSequence f = poly_sequence({{1, 0, Int(1)}, {0, 2, Int(-2)}}, order);
    SeriesSequence g = poly_sequence({{2, -1, Int(small(rng))}}, order);
    SeriesSequence combo(0, [f, g, c](long n) { return f.at(n) * c + g.at(n); });
    WeylElement d = d_operator(X);
    const long n = i % 5;
    if (apply_weyl(d, combo, n) !=
        apply_weyl(d, f, n) * c + apply_weyl(d, g, n))
      return false;
  }

  // Derivation: D_X(f g) = D_X(f) g + (X Lf) D_1(g), pointwise.
  for (int i = 0; i < 100; ++i) {
    LaurentPoly X = random_mono();
    SeriesSequence f = poly_sequence({{1, 0, Int(1)}, {0, 1, Int(2)}}, order);
    SeriesSequence g =
        poly_sequence({{2, -1, Int(1)}, {1, 1, Int(small(rng))}}, order);
    SeriesSequence prod(0, [f, g](long n) { return f.at(n) * g.at(n); });
    WeylElement dx = d_operator(X);
    WeylElement d1 = d_operator(LaurentPoly::constant(1));
    const long n = i % 5;
    TruncatedSeries lhs = apply_weyl(dx, prod, n);
    TruncatedSeries rhs =
        apply_weyl(dx, f, n) * g.at(n) + (f.at(n + 1) * X) * apply_weyl(d1, g, n);
    if (lhs != rhs) return false;
  }

  // Commutation: D_X D_Y = D_Y D_X in the algebra.
  for (int i = 0; i < 100; ++i) {
    LaurentPoly X = random_mono(), Y = random_mono();
    if (d_operator(X) * d_operator(Y) != d_operator(Y) * d_operator(X))
      return false;
  }

  // Annihilation: D_(q^-C) kills n |-> q^(Cn).
  for (int i = 0; i < 100; ++i) {
    const long C = small(rng);
    WeylElement d = d_operator(LaurentPoly::monomial(-C));
    SeriesSequence f = power_sequence(C, order);
    if (!apply_weyl(d, f, i % 6).is_zero()) return false;
  }
  return true;
}

bool colored_poincare() {
  const KnotData& unknot = find_knot("unknot");
  for (long r : {2L, 3L, 4L}) {
    BigradedPoly expected;
    expected.q_order = 48;
    for (long n = 0; n * r < 48; ++n) {
      expected.add({(2 * r - 2) * n, r * n}, 1);
      expected.add({(2 * r - 2) * n + 1, r * n + 1}, 1);
    }
    if (!(poincare(build_colored_complex(unknot, r), r, 48) == expected))
      return false;
  }
  const KnotData& trefoil = find_knot("3_1");
  for (long r : {2L, 3L, 4L}) {
    BigradedPoly p = poincare(build_colored_complex(trefoil, r), r, 4 * r + 2);
    if (p.coeff({0, 0}) != 1 || p.coeff({1, 1}) != 1) return false;
    // Tail lead term: homological shift 4r-2 with q-shift 2r...
    if (p.coeff({4 * r - 2, 2 * r}) != 1) return false;
    // ...whereas a q-shift of 4r would leave this coefficient empty. The
    // Euler cross-check (next criterion) is what pins 2r as the value
    // consistent with the colored Alexander series.
    if (p.coeff({4 * r - 2, 4 * r}) != 0) return false;
  }
  return true;
}

bool euler_categorification() {
  for (const std::string& name : kKnotNames) {
    const KnotData& k = find_knot(name);
    for (long r : {2L, 3L, 4L}) {
      EulerCheckReport rep = colored_euler_check(k, r, 64);
      if (!rep.match || rep.shift != 0) return false;
    }
  }
  return true;
}

bool certificate_towers() {
  auto cone_count = [](const HolonomyCertificate& cert) {
    long n = 0;
    for (const CertificateStep& s : cert.steps)
      if (s.kind == StepKind::ClassCone) ++n;
    return n;
  };
  if (cone_count(certify(find_knot("unknot"))) != 1) return false;
  if (cone_count(certify(find_knot("3_1"))) != 3) return false;
  for (const std::string& name : kKnotNames) {
    HolonomyCertificate cert = certify(find_knot(name));
    if (!is_contractible(cert.final)) return false;
    long expected = -1;
    for (const CertificateStep& s : cert.steps) {
      if (s.kind != StepKind::ClassCone) continue;
      if (expected >= 0 && s.classes_before != expected) return false;
      expected = s.classes_before - 1;
    }
    if (expected != 0) return false;
  }
  return true;
}

bool decategorification_closure() {
  for (const std::string& name : kKnotNames) {
    const KnotData& k = find_knot(name);
    HolonomyCertificate cert = certify(k);
    if (!certificate_verify(cert, k, 12, 64).clean) return false;
  }
  WeylElement op = decategorify(certify(find_knot("unknot")));
  WeylElement expected = (WeylElement::gen_m() - WeylElement::one()) *
                         (WeylElement::gen_l() - WeylElement::one());
  return op == expected || op == -expected;
}

bool instantiation_coherence() {
  for (const std::string& name : kKnotNames) {
    CertifyTrace trace = certify_trace(find_knot(name));
    for (std::size_t i = 0; i < trace.certificate.steps.size(); ++i) {
      if (trace.certificate.steps[i].kind != StepKind::ClassCone) continue;
      const SymbolicSequence& s = trace.bodies[i];
      const CongruenceClass& cls = trace.classes[i];
      ReduceOutcome symbolic = reduce_step(s, cls);
      for (long r : {2L, 3L, 4L}) {
        SplitMap f;
        f.source = instantiate(s.body, r);
        const AffineBidegree twist =
            AffineBidegree::constant(-cls.ratio.t, -cls.ratio.q);
        f.target = instantiate(
            shift_complex(functor_l(s).body, twist), r);
        for (const std::string& m : cls.members) f.matches.push_back({m, m});
        if (!is_equivalent(cone(f), instantiate(symbolic.result.body, r)))
          return false;
      }
    }
  }
  return true;
}

bool gauss_binomial_fixture() {
  std::vector<std::vector<Int>> pascal(13);
  for (long n = 0; n <= 12; ++n) {
    pascal[n].assign(n + 1, 1);
    for (long d = 1; d < n; ++d)
      pascal[n][d] = pascal[n - 1][d - 1] + pascal[n - 1][d];
  }
  for (long n = 1; n <= 12; ++n) {
    for (long d = 0; d <= n; ++d) {
      const LaurentPoly g = gauss_binomial(n, d);
      if (g.eval_at_one() != pascal[n][d]) return false;
      if (d == 0 || d == n) {
        if (g != LaurentPoly::constant(1)) return false;
      } else {
        LaurentPoly recurrence =
            gauss_binomial(n - 1, d - 1).shifted(2 * (n - d)) +
            gauss_binomial(n - 1, d);
        if (g != recurrence) return false;
      }
    }
  }
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    std::string name;
    std::function<bool()> check;
  };
  const std::vector<Criterion> criteria = {
      {"classical values: trefoil positive form and reduced colored family",
       classical_values},
      {"unknot colored series pattern (+1 at q^{ir}, -1 at q^{ir+1})",
       unknot_series},
      {"q-adic convergence: cable defect >= rn+1", cable_convergence},
      {"annihilators kill the reduced and unreduced sequences", annihilators_kill},
      {"D-operator laws: linearity, derivation, commutation, annihilation",
       d_operator_laws},
      {"colored Poincare polynomials: unknot closed form and trefoil head/tail",
       colored_poincare},
      {"Euler characteristic equals the colored series (shift 0)",
       euler_categorification},
      {"certificate towers: cone counts and decreasing class counts",
       certificate_towers},
      {"decategorified certificates verify; unknot gives (M-1)(L-1)",
       decategorification_closure},
      {"instantiated cones agree with symbolic reduction", instantiation_coherence},
      {"Gauss binomials: Pascal recurrence and q = 1 evaluation",
       gauss_binomial_fixture},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    bool ok = false;
    std::string detail;
    try {
      ok = criteria[i].check();
    } catch (const std::exception& e) {
      detail = std::string(" (exception: ") + e.what() + ")";
    }
    if (!ok) ++failures;
    std::cout << (ok ? "PASS" : "FAIL") << " " << (i + 1) << ". "
              << criteria[i].name << detail << "\n";
  }
  if (failures == 0)
    std::cout << "all " << criteria.size() << " acceptance criteria passed\n";
  else
    std::cout << failures << " acceptance criteria FAILED\n";
  return failures;
}
