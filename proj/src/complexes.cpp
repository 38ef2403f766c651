#include "holofloer/complexes.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace holofloer {

namespace {

/// Homological shift t: degree + (1, 0).
const AffineBidegree kTShift = AffineBidegree::constant(1, 0);

struct SummandRef {
  enum Kind { kPair, kFree } kind;
  std::size_t index;
};

std::map<std::string, SummandRef> label_index(const SplitComplex& c) {
  std::map<std::string, SummandRef> out;
  for (std::size_t i = 0; i < c.pairs.size(); ++i) {
    if (!out.emplace(c.pairs[i].label, SummandRef{SummandRef::kPair, i}).second)
      throw std::invalid_argument("duplicate summand label: " + c.pairs[i].label);
  }
  for (std::size_t i = 0; i < c.frees.size(); ++i) {
    if (!out.emplace(c.frees[i].label, SummandRef{SummandRef::kFree, i}).second)
      throw std::invalid_argument("duplicate summand label: " + c.frees[i].label);
  }
  return out;
}

}  // namespace

void SplitComplex::validate() const {
  for (const PairSummand& p : pairs)
    if (p.q_len < 1)
      throw std::invalid_argument("pair summand requires q_len >= 1: " + p.label);
  label_index(*this);
}

void SplitMap::validate() const {
  source.validate();
  target.validate();
  const auto src = label_index(source);
  const auto tgt = label_index(target);
  std::set<std::string> used_src, used_tgt;
  for (const auto& [a, b] : matches) {
    auto sit = src.find(a);
    auto tit = tgt.find(b);
    if (sit == src.end()) throw std::invalid_argument("match source missing: " + a);
    if (tit == tgt.end()) throw std::invalid_argument("match target missing: " + b);
    if (!used_src.insert(a).second)
      throw std::invalid_argument("match source repeated: " + a);
    if (!used_tgt.insert(b).second)
      throw std::invalid_argument("match target repeated: " + b);
    if (sit->second.kind != tit->second.kind)
      throw std::invalid_argument("match connects different shapes: " + a + " -> " + b);
    if (sit->second.kind == SummandRef::kPair) {
      const PairSummand& p = source.pairs[sit->second.index];
      const PairSummand& q = target.pairs[tit->second.index];
      if (p.q_len != q.q_len || p.t_len != q.t_len)
        throw std::invalid_argument("match connects pairs of different lengths: " +
                                    a + " -> " + b);
      if (p.base != q.base)
        throw std::invalid_argument("match is not degree-zero: " + a + " -> " + b);
    } else {
      const FreeSummand& p = source.frees[sit->second.index];
      const FreeSummand& q = target.frees[tit->second.index];
      if (p.degree != q.degree)
        throw std::invalid_argument("match is not degree-zero: " + a + " -> " + b);
    }
  }
  if (match_tail) {
    if (!source.tail || !target.tail)
      throw std::invalid_argument("tail match requires tails on both sides");
    if (!(*source.tail == *target.tail))
      throw std::invalid_argument("tail match is not degree-zero");
  }
}

SplitComplex shift_complex(const SplitComplex& c, const AffineBidegree& d) {
  SplitComplex out = c;
  for (PairSummand& p : out.pairs) p.base = p.base + d;
  for (FreeSummand& f : out.frees) f.degree = f.degree + d;
  if (out.tail) out.tail->theta = out.tail->theta + d;
  return out;
}

SplitComplex instantiate(const SplitComplex& c, long r) {
  SplitComplex out = c;
  for (PairSummand& p : out.pairs) p.base = AffineBidegree::constant(p.base.at(r));
  for (FreeSummand& f : out.frees)
    f.degree = AffineBidegree::constant(f.degree.at(r));
  if (out.tail) {
    out.tail->theta = AffineBidegree::constant(out.tail->theta.at(r));
    out.tail->u_deg = AffineBidegree::constant(out.tail->u_deg.at(r));
    out.tail->xi_deg = AffineBidegree::constant(out.tail->xi_deg.at(r));
  }
  return out;
}

SplitComplex subdivide(const SplitComplex& c) {
  if (c.tail) throw std::domain_error("subdivide does not apply to tails");
  c.validate();
  SplitComplex out;
  out.frees = c.frees;
  const AffineBidegree step = tail_u_degree();
  for (const PairSummand& p : c.pairs) {
    if (p.t_len != 1)
      throw std::domain_error("subdivide requires t_len = 1: " + p.label);
    AffineBidegree base = p.base;
    for (long j = 1; j <= p.q_len; ++j) {
      out.pairs.push_back({p.label + ":" + std::to_string(j), base, 1, 1});
      base = base + step;
    }
  }
  return out;
}

SplitComplex cone(const SplitMap& f) {
  f.validate();
  std::set<std::string> matched_src, matched_tgt;
  for (const auto& [a, b] : f.matches) {
    matched_src.insert(a);
    matched_tgt.insert(b);
  }
  SplitComplex out;
  for (const PairSummand& p : f.target.pairs)
    if (!matched_tgt.count(p.label)) out.pairs.push_back(p);
  for (const FreeSummand& g : f.target.frees)
    if (!matched_tgt.count(g.label)) out.frees.push_back(g);
  for (const PairSummand& p : f.source.pairs)
    if (!matched_src.count(p.label))
      out.pairs.push_back({p.label + "'", p.base + kTShift, p.q_len, p.t_len});
  for (const FreeSummand& g : f.source.frees)
    if (!matched_src.count(g.label))
      out.frees.push_back({g.label + "'", g.degree + kTShift});
  const bool src_tail = f.source.tail && !f.match_tail;
  const bool tgt_tail = f.target.tail && !f.match_tail;
  if (src_tail && tgt_tail)
    throw std::domain_error("cone cannot carry two surviving tails");
  if (tgt_tail) out.tail = f.target.tail;
  if (src_tail) {
    out.tail = f.source.tail;
    out.tail->theta = out.tail->theta + kTShift;
  }
  return out;
}

void BigradedPoly::add(const Bidegree& d, const Int& c) {
  if (d.q >= q_order || c == 0) return;
  auto it = terms.find(d);
  if (it == terms.end()) {
    terms.emplace(d, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

Int BigradedPoly::coeff(const Bidegree& d) const {
  auto it = terms.find(d);
  return it == terms.end() ? Int(0) : it->second;
}

bool BigradedPoly::operator==(const BigradedPoly& o) const {
  // Congruence below the weaker q-order.
  const long ord = std::min(q_order, o.q_order);
  for (const auto& [d, c] : terms)
    if (d.q < ord && o.coeff(d) != c) return false;
  for (const auto& [d, c] : o.terms)
    if (d.q < ord && coeff(d) != c) return false;
  return true;
}

TruncatedSeries BigradedPoly::euler() const {
  long lo = 0;
  for (const auto& [d, c] : terms) lo = std::min(lo, d.q);
  TruncatedSeries s(q_order, lo);
  std::map<long, Int> acc;
  for (const auto& [d, c] : terms) acc[d.q] += (d.t % 2 == 0) ? c : -c;
  LaurentPoly p;
  for (const auto& [e, c] : acc) p += LaurentPoly::monomial(e, c);
  return s + TruncatedSeries::from_poly(p, q_order);
}

std::string BigradedPoly::to_string() const {
  if (terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Sort by (q, t) so the series reads in increasing q-order.
  std::map<std::pair<long, long>, Int> sorted;
  for (const auto& [d, c] : terms) sorted[{d.q, d.t}] = c;
  for (const auto& [key, c] : sorted) {
    const Bidegree d{key.second, key.first};
    const bool neg = c < 0;
    const Int mag = neg ? Int(-c) : c;
    if (first)
      out << (neg ? "-" : "");
    else
      out << (neg ? " - " : " + ");
    first = false;
    if (mag != 1 || (d.t == 0 && d.q == 0)) {
      out << mag.str();
      if (!(d.t == 0 && d.q == 0)) out << "·";
    }
    if (!(d.t == 0 && d.q == 0)) out << d.to_string();
  }
  return out.str();
}

BigradedPoly poincare(const SplitComplex& c, long r, long q_order) {
  c.validate();
  BigradedPoly out;
  out.q_order = q_order;
  for (const PairSummand& p : c.pairs) {
    const Bidegree b = p.base.at(r);
    out.add(b, 1);
    out.add(b + Bidegree{p.t_len, p.q_len}, 1);
  }
  for (const FreeSummand& g : c.frees) out.add(g.degree.at(r), 1);
  if (c.tail) {
    const Bidegree theta = c.tail->theta.at(r);
    const Bidegree u = c.tail->u_deg.at(r);
    const Bidegree xi = c.tail->xi_deg.at(r);
    if (u.q < 1)
      throw std::domain_error("tail does not converge: u-degree has q-part < 1");
    for (Bidegree d = theta; d.q < q_order; d = d + u) {
      out.add(d, 1);
      out.add(d + xi, 1);
    }
  }
  return out;
}

TruncatedSeries euler(const SplitComplex& c, long r, long q_order) {
  return poincare(c, r, q_order).euler();
}

SplitComplex normal_form(const SplitComplex& c) {
  SplitComplex out = c;
  auto pair_key = [](const PairSummand& p) {
    return std::make_tuple(p.base, p.q_len, p.t_len);
  };
  std::sort(out.pairs.begin(), out.pairs.end(),
            [&](const PairSummand& a, const PairSummand& b) {
              return pair_key(a) < pair_key(b);
            });
  std::sort(out.frees.begin(), out.frees.end(),
            [](const FreeSummand& a, const FreeSummand& b) {
              return a.degree < b.degree;
            });
  return out;
}

bool is_contractible(const SplitComplex& c) { return c.empty(); }

bool is_equivalent(const SplitComplex& a, const SplitComplex& b) {
  const SplitComplex na = normal_form(a);
  const SplitComplex nb = normal_form(b);
  if (na.pairs.size() != nb.pairs.size() || na.frees.size() != nb.frees.size())
    return false;
  for (std::size_t i = 0; i < na.pairs.size(); ++i) {
    const PairSummand& p = na.pairs[i];
    const PairSummand& q = nb.pairs[i];
    if (p.base != q.base || p.q_len != q.q_len || p.t_len != q.t_len) return false;
  }
  for (std::size_t i = 0; i < na.frees.size(); ++i)
    if (na.frees[i].degree != nb.frees[i].degree) return false;
  if (na.tail.has_value() != nb.tail.has_value()) return false;
  if (na.tail && !(*na.tail == *nb.tail)) return false;
  return true;
}

}  // namespace holofloer
