#include "holofloer/holonomy.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace holofloer {

namespace {

const AffineBidegree kTShift = AffineBidegree::constant(1, 0);

SplitComplex index_shift_body(const SplitComplex& c) {
  SplitComplex out = c;
  for (PairSummand& p : out.pairs) p.base = p.base.index_shifted();
  for (FreeSummand& f : out.frees) f.degree = f.degree.index_shifted();
  if (out.tail) {
    out.tail->theta = out.tail->theta.index_shifted();
    out.tail->u_deg = out.tail->u_deg.index_shifted();
    out.tail->xi_deg = out.tail->xi_deg.index_shifted();
  }
  return out;
}

SplitComplex relabeled(const SplitComplex& c, const std::string& suffix) {
  SplitComplex out = c;
  for (PairSummand& p : out.pairs) p.label += suffix;
  for (FreeSummand& f : out.frees) f.label += suffix;
  return out;
}

void append(SplitComplex& into, const SplitComplex& part) {
  into.pairs.insert(into.pairs.end(), part.pairs.begin(), part.pairs.end());
  into.frees.insert(into.frees.end(), part.frees.begin(), part.frees.end());
}

}  // namespace

SymbolicSequence knot_sequence(const KnotData& k) {
  return {symbolic_complex(k), 2};
}

SymbolicSequence functor_m(const SymbolicSequence& s) {
  return {shift_complex(s.body, tail_u_degree()), s.start_index};
}

SymbolicSequence functor_l(const SymbolicSequence& s) {
  return {index_shift_body(s.body), s.start_index};
}

Classification classify(const SymbolicSequence& s) {
  if (s.body.tail)
    throw std::domain_error(
        "classification requires a tail-free body; apply tail_collapse first");
  Classification out;
  out.reduced = s.body.frees.empty();
  for (const PairSummand& p : s.body.pairs)
    if (p.q_len != 1) out.reduced = false;
  std::map<Bidegree, std::vector<std::string>> by_slope;
  for (const PairSummand& p : s.body.pairs)
    by_slope[p.base.slope()].push_back(p.label);
  for (auto& [slope, members] : by_slope)
    out.classes.push_back({slope, std::move(members)});
  // Distinct map keys guarantee distinct ratios; the affine model never
  // produces two classes with one slope, so regularity holds by inspection.
  out.regular = true;
  return out;
}

CollapseOutcome tail_collapse(const SymbolicSequence& s) {
  if (!s.body.tail) throw std::domain_error("tail_collapse requires a tail");
  const TailSummand& tail = *s.body.tail;
  if (!(tail.u_deg == tail_u_degree()) || !(tail.xi_deg == tail_xi_degree()))
    throw std::domain_error("tail_collapse requires the standard tail steps");

  SplitComplex head = s.body;
  head.tail.reset();

  SplitComplex body;
  append(body, relabeled(shift_complex(head, tail.u_deg), ".u"));
  append(body, relabeled(shift_complex(head, kTShift), ".s"));
  body.pairs.push_back({"xi", tail.theta + kTShift, 1, 1});
  body.validate();

  CollapseOutcome out;
  out.result = {std::move(body), s.start_index};
  out.step.kind = StepKind::TailCollapse;
  out.step.shift = tail.u_deg;
  out.step.classes_before =
      static_cast<long>(classify(out.result).classes.size());
  return out;
}

ReduceOutcome reduce_step(const SymbolicSequence& s, const CongruenceClass& cls) {
  Classification c = classify(s);
  if (!c.reduced)
    throw std::domain_error("reduce_step requires a reduced sequence");
  const CongruenceClass* chosen = nullptr;
  for (const CongruenceClass& candidate : c.classes)
    if (candidate.ratio == cls.ratio) chosen = &candidate;
  if (!chosen) throw std::domain_error("no congruence class with that slope");

  SplitComplex rest;
  for (const PairSummand& p : s.body.pairs) {
    if (std::find(chosen->members.begin(), chosen->members.end(), p.label) ==
        chosen->members.end())
      rest.pairs.push_back(p);
  }

  const AffineBidegree inverse_slope =
      AffineBidegree::constant(-chosen->ratio.t, -chosen->ratio.q);
  SplitComplex body;
  append(body, relabeled(shift_complex(index_shift_body(rest), inverse_slope), ".L"));
  append(body, relabeled(shift_complex(rest, kTShift), ".s"));
  body.validate();

  ReduceOutcome out;
  out.result = {std::move(body), s.start_index};
  out.step.kind = StepKind::ClassCone;
  out.step.shift = inverse_slope;
  out.step.classes_before = static_cast<long>(c.classes.size());
  return out;
}

CertifyTrace certify_trace(const KnotData& k) {
  CertifyTrace trace;
  SymbolicSequence cur = knot_sequence(k);

  trace.bodies.push_back(cur);
  trace.classes.push_back({});
  CollapseOutcome collapsed = tail_collapse(cur);
  trace.certificate.steps.push_back(collapsed.step);
  cur = std::move(collapsed.result);

  for (Classification c = classify(cur); !c.classes.empty();
       c = classify(cur)) {
    trace.bodies.push_back(cur);
    trace.classes.push_back(c.classes.front());
    ReduceOutcome reduced = reduce_step(cur, c.classes.front());
    trace.certificate.steps.push_back(reduced.step);
    cur = std::move(reduced.result);
  }

  trace.bodies.push_back(cur);
  trace.classes.push_back({});
  trace.certificate.steps.push_back(
      {StepKind::FinalIso, AffineBidegree{}, 0});

  if (!is_contractible(cur.body))
    throw std::logic_error(
        "reduction tower did not terminate in the zero object");
  trace.certificate.knot = k.name;
  trace.certificate.start_index = cur.start_index;
  trace.certificate.final = cur.body;
  return trace;
}

HolonomyCertificate certify(const KnotData& k) {
  return certify_trace(k).certificate;
}

WeylElement decategorify(const HolonomyCertificate& cert) {
  WeylElement op = WeylElement::one();
  for (const CertificateStep& step : cert.steps) {
    if (step.kind == StepKind::FinalIso) continue;
    if (step.shift.t.slope % 2 != 0)
      throw std::domain_error(
          "shift with odd homological slope has no index-independent sign");
    const Int sign = (step.shift.t.offset % 2 == 0) ? 1 : -1;
    const long m_exp = step.shift.q.slope;
    const long l_exp = (step.kind == StepKind::ClassCone) ? 1 : 0;
    if (m_exp < 0)
      throw std::domain_error("shift with negative q-slope does not decategorify");
    WeylElement factor =
        WeylElement::one() -
        WeylElement::monomial(m_exp, l_exp,
                              LaurentPoly::monomial(step.shift.q.offset, sign));
    op = op * factor;
  }
  return op;
}

VerificationReport certificate_verify(const HolonomyCertificate& cert,
                                      const KnotData& k, long r_max,
                                      long order) {
  WeylElement op = decategorify(cert);
  SeriesSequence seq = unreduced_sequence(k.alexander, order);
  return verify_annihilation(op, seq, cert.start_index, r_max, order);
}

}  // namespace holofloer
