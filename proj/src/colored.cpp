#include "holofloer/colored.hpp"

#include <algorithm>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace holofloer {

void CfkBasis::validate() const {
  if (generators.empty())
    throw std::invalid_argument("basis needs at least one generator");
  std::map<std::string, const CfkGenerator*> by_label;
  for (const CfkGenerator& g : generators)
    if (!by_label.emplace(g.label, &g).second)
      throw std::invalid_argument("duplicate generator label: " + g.label);
  std::set<std::string> touched;
  for (const CfkArrow& a : arrows) {
    auto s = by_label.find(a.source);
    auto t = by_label.find(a.target);
    if (s == by_label.end())
      throw std::invalid_argument("arrow source missing: " + a.source);
    if (t == by_label.end())
      throw std::invalid_argument("arrow target missing: " + a.target);
    if (s->second->maslov - t->second->maslov != 1)
      throw std::invalid_argument("arrow must drop the Maslov grading by 1: " +
                                  a.source + " -> " + a.target);
    if (s->second->alexander <= t->second->alexander)
      throw std::invalid_argument(
          "arrow must strictly drop the Alexander grading: " + a.source + " -> " +
          a.target);
    if (!touched.insert(a.source).second)
      throw std::invalid_argument("generator in two arrows: " + a.source);
    if (!touched.insert(a.target).second)
      throw std::invalid_argument("generator in two arrows: " + a.target);
  }
  if (generators.size() != 2 * arrows.size() + 1)
    throw std::invalid_argument(
        "basis must split into arrow pairs plus one distinguished cycle");
}

const CfkGenerator& CfkBasis::find(const std::string& label) const {
  for (const CfkGenerator& g : generators)
    if (g.label == label) return g;
  throw std::out_of_range("no generator labelled " + label);
}

const CfkGenerator& CfkBasis::distinguished() const {
  std::set<std::string> touched;
  for (const CfkArrow& a : arrows) {
    touched.insert(a.source);
    touched.insert(a.target);
  }
  const CfkGenerator* found = nullptr;
  for (const CfkGenerator& g : generators) {
    if (touched.count(g.label)) continue;
    if (found)
      throw std::invalid_argument("more than one untouched generator");
    found = &g;
  }
  if (!found) throw std::invalid_argument("no untouched generator");
  return *found;
}

const CfkGenerator& CfkBasis::bottom() const {
  if (generators.empty())
    throw std::invalid_argument("basis needs at least one generator");
  const CfkGenerator* best = &generators.front();
  for (const CfkGenerator& g : generators) {
    if (g.alexander < best->alexander ||
        (g.alexander == best->alexander && g.maslov < best->maslov))
      best = &g;
  }
  return *best;
}

KnotData KnotData::from_cfk(std::string name, AlexanderPoly alexander, long genus,
                            long tau, CfkBasis basis,
                            std::optional<AffineBidegree> theta_override) {
  basis.validate();
  long min_a = basis.generators.front().alexander;
  long max_a = min_a;
  for (const CfkGenerator& g : basis.generators) {
    min_a = std::min(min_a, g.alexander);
    max_a = std::max(max_a, g.alexander);
  }
  if (max_a != genus || min_a != -genus)
    throw std::domain_error(
        "genus must equal the Alexander grading span: max " +
        std::to_string(max_a) + ", min " + std::to_string(min_a) +
        ", genus " + std::to_string(genus));
  const CfkGenerator& b = basis.bottom();
  const CfkGenerator& chi = basis.distinguished();
  if (chi.alexander != tau)
    throw std::domain_error("distinguished cycle sits at Alexander grading " +
                            std::to_string(chi.alexander) + ", expected tau = " +
                            std::to_string(tau));

  KnotData k;
  k.name = std::move(name);
  k.alexander = std::move(alexander);
  k.genus = genus;
  k.tau = tau;
  k.distinguished = chi.label;
  for (const CfkArrow& a : basis.arrows) {
    const CfkGenerator& src = basis.find(a.source);
    const CfkGenerator& tgt = basis.find(a.target);
    const long kk = tgt.alexander + genus;
    const long m = tgt.maslov - b.maslov;
    k.head.push_back(
        {AffineBidegree{{2 * kk, m - 2 * kk}, {kk, 0}},
         src.alexander - tgt.alexander, tgt.label});
  }
  const long tg = tau + genus;
  const long m0 = chi.maslov - b.maslov;
  k.theta = theta_override ? *theta_override
                           : AffineBidegree{{2 * tg, m0 - 2 * tg}, {tg, 0}};
  k.cfk = std::move(basis);
  return k;
}

KnotData KnotData::from_head_spec(std::string name, AlexanderPoly alexander,
                                  long genus, long tau,
                                  std::vector<HeadChain> head,
                                  AffineBidegree theta) {
  KnotData k;
  k.name = std::move(name);
  k.alexander = std::move(alexander);
  k.genus = genus;
  k.tau = tau;
  k.head = std::move(head);
  k.theta = theta;
  for (std::size_t i = 0; i < k.head.size(); ++i)
    if (k.head[i].label.empty()) k.head[i].label = "c" + std::to_string(i + 1);
  return k;
}

void KnotData::validate(bool warn_only, long order) const {
  if (genus < 0) throw std::domain_error("genus must be nonnegative");
  if (alexander.degree() != genus)
    throw std::domain_error("polynomial degree " +
                            std::to_string(alexander.degree()) +
                            " does not match genus " + std::to_string(genus));
  for (const HeadChain& c : head)
    if (c.length < 1)
      throw std::domain_error("head chain length must be positive: " + c.label);
  if (cfk) cfk->validate();

  for (long r : {2L, 3L}) {
    EulerCheckReport rep = colored_euler_check(*this, r, order);
    if (rep.match && rep.shift == 0) continue;
    std::ostringstream msg;
    msg << "euler characteristic of the colored complex for " << name
        << " disagrees with the colored polynomial at r = " << r;
    if (rep.match)
      msg << " (off by the monomial q^" << rep.shift << ")";
    else if (rep.first_mismatch)
      msg << " (first bad coefficient at q^" << *rep.first_mismatch << ")";
    if (!warn_only) throw std::domain_error(msg.str());
    std::cerr << "warning: " << msg.str() << "\n";
  }
}

SplitComplex symbolic_complex(const KnotData& k) {
  SplitComplex seeds;
  for (const HeadChain& c : k.head)
    seeds.pairs.push_back({c.label, c.base, c.length, 1});
  SplitComplex body = subdivide(seeds);
  body.tail = TailSummand{k.theta};
  return body;
}

SplitComplex build_colored_complex(const KnotData& k, long r) {
  if (r <= 0) throw std::domain_error("color must be positive");
  if (r == 1) {
    SplitComplex c;
    for (const HeadChain& chain : k.head)
      c.pairs.push_back({chain.label,
                         AffineBidegree::constant(chain.base.at(1)),
                         chain.length, 1});
    c.frees.push_back({k.distinguished, AffineBidegree::constant(k.theta.at(1))});
    c.validate();
    return c;
  }
  return instantiate(symbolic_complex(k), r);
}

EulerCheckReport colored_euler_check(const KnotData& k, long r, long order) {
  if (r < 2) throw std::domain_error("the euler check applies to colors >= 2");
  EulerCheckReport rep;
  rep.order = order;
  TruncatedSeries actual = euler(build_colored_complex(k, r), r, order);
  TruncatedSeries expected = colored_unreduced(k.alexander, r, order);
  if (actual == expected) {
    rep.match = true;
    return rep;
  }
  const auto a0 = actual.first_nonzero();
  const auto e0 = expected.first_nonzero();
  if (a0 && e0 && *a0 != *e0) {
    const long shift = *a0 - *e0;
    if (actual == expected * LaurentPoly::monomial(shift)) {
      rep.match = true;
      rep.shift = shift;
      return rep;
    }
  }
  rep.first_mismatch = actual.first_difference(expected);
  return rep;
}

namespace {

KnotData make_unknot() {
  CfkBasis basis;
  basis.generators = {{"x0", 0, 0}};
  return KnotData::from_cfk("unknot",
                            AlexanderPoly::symmetrize(LaurentPoly::constant(1)),
                            0, 0, basis);
}

KnotData make_trefoil() {
  CfkBasis basis;
  basis.generators = {{"a", 0, 1}, {"b", -1, 0}, {"c", -2, -1}};
  basis.arrows = {{"b", "c"}};
  return KnotData::from_cfk("3_1", torus_knot_alexander(2, 3), 1, 1, basis);
}

KnotData make_figure_eight() {
  CfkBasis basis;
  basis.generators = {
      {"z", 0, 0}, {"a", 1, 1}, {"b", 0, 0}, {"c", 0, 0}, {"d", -1, -1}};
  basis.arrows = {{"a", "b"}, {"c", "d"}};
  return KnotData::from_cfk(
      "4_1",
      AlexanderPoly::symmetrize(LaurentPoly::from_pairs({{-1, 1}, {0, -3}, {1, 1}})),
      1, 0, basis);
}

KnotData make_t25() {
  CfkBasis basis;
  basis.generators = {
      {"z", 0, 2}, {"a", -1, 1}, {"b", -2, 0}, {"c", -3, -1}, {"d", -4, -2}};
  basis.arrows = {{"a", "b"}, {"c", "d"}};
  return KnotData::from_cfk("T(2,5)", torus_knot_alexander(2, 5), 2, 2, basis);
}

KnotData make_t27() {
  CfkBasis basis;
  basis.generators = {{"z", 0, 3},  {"a", -1, 2}, {"b", -2, 1}, {"c", -3, 0},
                      {"d", -4, -1}, {"e", -5, -2}, {"f", -6, -3}};
  basis.arrows = {{"a", "b"}, {"c", "d"}, {"e", "f"}};
  return KnotData::from_cfk("T(2,7)", torus_knot_alexander(2, 7), 3, 3, basis);
}

}  // namespace

const std::vector<KnotData>& knot_table() {
  static const std::vector<KnotData> table = [] {
    std::vector<KnotData> t = {make_unknot(), make_trefoil(), make_figure_eight(),
                               make_t25(), make_t27()};
    for (const KnotData& k : t) k.validate();
    return t;
  }();
  return table;
}

const KnotData& find_knot(const std::string& name) {
  for (const KnotData& k : knot_table())
    if (k.name == name) return k;
  throw std::out_of_range("unknown knot: " + name);
}

}  // namespace holofloer
