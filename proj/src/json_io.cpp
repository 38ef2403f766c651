#include "holofloer/json_io.hpp"

#include <cstdint>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <utility>

namespace holofloer {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw std::invalid_argument(path + ": " + msg);
}

void require_object(const Json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
}

const Json& field(const Json& j, const char* key, const std::string& path) {
  require_object(j, path);
  auto it = j.find(key);
  if (it == j.end())
    fail(path, std::string("missing required field \"") + key + "\"");
  return *it;
}

long long_at(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<long>();
}

std::string string_at(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

Json int_json(const Int& v) {
  static const Int lo = Int(std::numeric_limits<std::int64_t>::min());
  static const Int hi = Int(std::numeric_limits<std::int64_t>::max());
  if (lo <= v && v <= hi) return v.convert_to<std::int64_t>();
  return v.str();
}

Int int_at(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
      fail(path, "expected an integer or a decimal string");
    }
  }
  fail(path, "expected an integer or a decimal string");
}

Json pairs_json(const std::map<long, Int>& terms) {
  Json out = Json::array();
  for (const auto& [e, c] : terms) out.push_back(Json::array({e, int_json(c)}));
  return out;
}

std::vector<std::pair<long, Int>> pairs_at(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of [exponent, coefficient] pairs");
  std::vector<std::pair<long, Int>> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    const Json& e = j[i];
    if (!e.is_array() || e.size() != 2)
      fail(p, "expected an [exponent, coefficient] pair");
    out.emplace_back(long_at(e[0], p + "[0]"), int_at(e[1], p + "[1]"));
  }
  return out;
}

}  // namespace

Json json_of(const LaurentPoly& p) { return {{"coeffs", pairs_json(p.terms())}}; }

LaurentPoly laurent_from_json(const Json& j, const std::string& path) {
  return LaurentPoly::from_pairs(pairs_at(field(j, "coeffs", path), path + ".coeffs"));
}

Json json_of(const TruncatedSeries& s) {
  return {{"coeffs", pairs_json(s.terms())}, {"order", s.order()}};
}

TruncatedSeries series_from_json(const Json& j, const std::string& path) {
  const long order = long_at(field(j, "order", path), path + ".order");
  LaurentPoly p =
      LaurentPoly::from_pairs(pairs_at(field(j, "coeffs", path), path + ".coeffs"));
  return TruncatedSeries::from_poly(p, order);
}

Json json_of(const AlexanderPoly& a) {
  return {{"coeffs", pairs_json(a.symmetric().terms())}};
}

AlexanderPoly alexander_from_json(const Json& j, const std::string& path) {
  LaurentPoly raw = laurent_from_json(j, path);
  try {
    return AlexanderPoly::symmetrize(raw);
  } catch (const std::domain_error& e) {
    fail(path, e.what());
  }
}

Json json_of(const WeylElement& w) {
  Json out = Json::array();
  for (const auto& [exps, c] : w.terms())
    out.push_back(Json::array({exps.first, exps.second, pairs_json(c.terms())}));
  return out;
}

WeylElement weyl_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of [m_exp, l_exp, coeffs] terms");
  WeylElement out = WeylElement::zero();
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    const Json& term = j[i];
    if (!term.is_array() || term.size() != 3)
      fail(p, "expected an [m_exp, l_exp, coeffs] term");
    const long a = long_at(term[0], p + "[0]");
    const long b = long_at(term[1], p + "[1]");
    LaurentPoly c = LaurentPoly::from_pairs(pairs_at(term[2], p + "[2]"));
    try {
      out += WeylElement::monomial(a, b, std::move(c));
    } catch (const std::domain_error& e) {
      fail(p, e.what());
    }
  }
  return out;
}

Json json_of(const AffineLinear& f) { return Json::array({f.slope, f.offset}); }

AffineLinear affine_from_json(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) fail(path, "expected a [slope, offset] pair");
  return {long_at(j[0], path + "[0]"), long_at(j[1], path + "[1]")};
}

Json json_of(const AffineBidegree& d) {
  return {{"t", json_of(d.t)}, {"q", json_of(d.q)}};
}

AffineBidegree bidegree_from_json(const Json& j, const std::string& path) {
  return {affine_from_json(field(j, "t", path), path + ".t"),
          affine_from_json(field(j, "q", path), path + ".q")};
}

Json json_of(const PairSummand& p) {
  return {{"label", p.label},
          {"base", json_of(p.base)},
          {"q_len", p.q_len},
          {"t_len", p.t_len}};
}

Json json_of(const FreeSummand& f) {
  return {{"label", f.label}, {"degree", json_of(f.degree)}};
}

Json json_of(const TailSummand& t) {
  return {{"theta", json_of(t.theta)},
          {"u", json_of(t.u_deg)},
          {"xi", json_of(t.xi_deg)}};
}

Json json_of(const SplitComplex& c) {
  Json pairs = Json::array();
  for (const PairSummand& p : c.pairs) pairs.push_back(json_of(p));
  Json frees = Json::array();
  for (const FreeSummand& f : c.frees) frees.push_back(json_of(f));
  return {{"pairs", pairs},
          {"frees", frees},
          {"tail", c.tail ? json_of(*c.tail) : Json(nullptr)}};
}

SplitComplex complex_from_json(const Json& j, const std::string& path) {
  require_object(j, path);
  SplitComplex out;
  if (j.contains("pairs")) {
    const Json& pairs = j["pairs"];
    if (!pairs.is_array()) fail(path + ".pairs", "expected an array");
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const std::string p = path + ".pairs[" + std::to_string(i) + "]";
      PairSummand ps;
      ps.label = string_at(field(pairs[i], "label", p), p + ".label");
      ps.base = bidegree_from_json(field(pairs[i], "base", p), p + ".base");
      if (pairs[i].contains("q_len")) ps.q_len = long_at(pairs[i]["q_len"], p + ".q_len");
      if (pairs[i].contains("t_len")) ps.t_len = long_at(pairs[i]["t_len"], p + ".t_len");
      out.pairs.push_back(std::move(ps));
    }
  }
  if (j.contains("frees")) {
    const Json& frees = j["frees"];
    if (!frees.is_array()) fail(path + ".frees", "expected an array");
    for (std::size_t i = 0; i < frees.size(); ++i) {
      const std::string p = path + ".frees[" + std::to_string(i) + "]";
      FreeSummand fs;
      fs.label = string_at(field(frees[i], "label", p), p + ".label");
      fs.degree = bidegree_from_json(field(frees[i], "degree", p), p + ".degree");
      out.frees.push_back(std::move(fs));
    }
  }
  if (j.contains("tail") && !j["tail"].is_null()) {
    const std::string p = path + ".tail";
    TailSummand tail;
    tail.theta = bidegree_from_json(field(j["tail"], "theta", p), p + ".theta");
    if (j["tail"].contains("u")) tail.u_deg = bidegree_from_json(j["tail"]["u"], p + ".u");
    if (j["tail"].contains("xi")) tail.xi_deg = bidegree_from_json(j["tail"]["xi"], p + ".xi");
    out.tail = tail;
  }
  try {
    out.validate();
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
  return out;
}

Json json_of(const BigradedPoly& p) {
  Json terms = Json::array();
  for (const auto& [d, c] : p.terms)
    terms.push_back(Json::array({d.t, d.q, int_json(c)}));
  return {{"terms", terms}, {"q_order", p.q_order}};
}

Json json_of(const CfkBasis& b) {
  Json gens = Json::array();
  for (const CfkGenerator& g : b.generators)
    gens.push_back({{"label", g.label}, {"maslov", g.maslov}, {"alexander", g.alexander}});
  Json arrows = Json::array();
  for (const CfkArrow& a : b.arrows)
    arrows.push_back(Json::array({a.source, a.target}));
  return {{"generators", gens}, {"vertical_arrows", arrows}};
}

namespace {

CfkBasis basis_from_json(const Json& j, const std::string& path) {
  CfkBasis basis;
  const Json& gens = field(j, "generators", path);
  if (!gens.is_array()) fail(path + ".generators", "expected an array");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string p = path + ".generators[" + std::to_string(i) + "]";
    CfkGenerator g;
    g.label = string_at(field(gens[i], "label", p), p + ".label");
    g.maslov = long_at(field(gens[i], "maslov", p), p + ".maslov");
    g.alexander = long_at(field(gens[i], "alexander", p), p + ".alexander");
    basis.generators.push_back(std::move(g));
  }
  const Json& arrows = field(j, "vertical_arrows", path);
  if (!arrows.is_array()) fail(path + ".vertical_arrows", "expected an array");
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    const std::string p = path + ".vertical_arrows[" + std::to_string(i) + "]";
    if (!arrows[i].is_array() || arrows[i].size() != 2)
      fail(p, "expected a [source, target] pair");
    basis.arrows.push_back(
        {string_at(arrows[i][0], p + "[0]"), string_at(arrows[i][1], p + "[1]")});
  }
  return basis;
}

std::vector<HeadChain> head_spec_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of head chains");
  std::vector<HeadChain> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    HeadChain h;
    h.base = bidegree_from_json(field(j[i], "base", p), p + ".base");
    h.length = long_at(field(j[i], "length", p), p + ".length");
    if (j[i].contains("label")) h.label = string_at(j[i]["label"], p + ".label");
    out.push_back(std::move(h));
  }
  return out;
}

}  // namespace

Json json_of(const HeadChain& h) {
  return {{"base", json_of(h.base)}, {"length", h.length}, {"label", h.label}};
}

Json json_of(const KnotData& k) {
  Json out = {{"name", k.name},
              {"alexander", json_of(k.alexander)},
              {"genus", k.genus},
              {"tau", k.tau},
              {"theta", json_of(k.theta)}};
  if (k.cfk) {
    out["cfk"] = json_of(*k.cfk);
  } else {
    Json chains = Json::array();
    for (const HeadChain& h : k.head) chains.push_back(json_of(h));
    out["head_spec"] = chains;
  }
  return out;
}

KnotData knot_from_json(const Json& j, const std::string& path) {
  require_object(j, path);
  const std::string name = string_at(field(j, "name", path), path + ".name");
  const AlexanderPoly alexander =
      alexander_from_json(field(j, "alexander", path), path + ".alexander");
  const long genus = long_at(field(j, "genus", path), path + ".genus");
  const long tau = long_at(field(j, "tau", path), path + ".tau");

  std::optional<AffineBidegree> theta;
  if (j.contains("theta")) theta = bidegree_from_json(j["theta"], path + ".theta");
  std::optional<std::vector<HeadChain>> head_spec;
  if (j.contains("head_spec"))
    head_spec = head_spec_from_json(j["head_spec"], path + ".head_spec");

  if (j.contains("cfk")) {
    CfkBasis basis = basis_from_json(j["cfk"], path + ".cfk");
    KnotData k;
    try {
      k = KnotData::from_cfk(name, alexander, genus, tau, std::move(basis), theta);
    } catch (const std::exception& e) {
      fail(path + ".cfk", e.what());
    }
    if (head_spec) {
      KnotData override_knot = KnotData::from_head_spec(
          name, alexander, genus, tau, *head_spec, theta.value_or(k.theta));
      override_knot.cfk = std::move(k.cfk);
      override_knot.distinguished = k.distinguished;
      k = std::move(override_knot);
    }
    return k;
  }

  if (!head_spec || !theta)
    fail(path, "either \"cfk\" or both \"head_spec\" and \"theta\" are required");
  try {
    return KnotData::from_head_spec(name, alexander, genus, tau, *head_spec, *theta);
  } catch (const std::exception& e) {
    fail(path + ".head_spec", e.what());
  }
}

KnotData load_knot_file(const std::string& file_path) {
  std::ifstream in(file_path);
  if (!in) fail(file_path, "cannot open file");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    fail(file_path, e.what());
  }
  return knot_from_json(doc, file_path);
}

const char* step_kind_name(StepKind kind) {
  switch (kind) {
    case StepKind::TailCollapse: return "tail_collapse";
    case StepKind::ClassCone: return "class_cone";
    case StepKind::FinalIso: return "final_iso";
  }
  throw std::invalid_argument("unknown step kind");
}

StepKind step_kind_parse(const std::string& name, const std::string& path) {
  if (name == "tail_collapse") return StepKind::TailCollapse;
  if (name == "class_cone") return StepKind::ClassCone;
  if (name == "final_iso") return StepKind::FinalIso;
  fail(path, "unknown step kind \"" + name + "\"");
}

Json json_of(const CertificateStep& s) {
  return {{"kind", step_kind_name(s.kind)},
          {"shift", json_of(s.shift)},
          {"classes_before", s.classes_before}};
}

Json json_of(const HolonomyCertificate& cert) {
  Json steps = Json::array();
  for (const CertificateStep& s : cert.steps) steps.push_back(json_of(s));
  return {{"knot", cert.knot},
          {"start_index", cert.start_index},
          {"steps", steps}};
}

HolonomyCertificate certificate_from_json(const Json& j, const std::string& path) {
  HolonomyCertificate cert;
  cert.knot = string_at(field(j, "knot", path), path + ".knot");
  cert.start_index = long_at(field(j, "start_index", path), path + ".start_index");
  const Json& steps = field(j, "steps", path);
  if (!steps.is_array()) fail(path + ".steps", "expected an array");
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const std::string p = path + ".steps[" + std::to_string(i) + "]";
    CertificateStep step;
    step.kind = step_kind_parse(string_at(field(steps[i], "kind", p), p + ".kind"), p + ".kind");
    step.shift = bidegree_from_json(field(steps[i], "shift", p), p + ".shift");
    step.classes_before =
        long_at(field(steps[i], "classes_before", p), p + ".classes_before");
    cert.steps.push_back(step);
  }
  return cert;
}

Json json_of(const VerificationReport& rep) {
  Json residual(nullptr);
  if (!rep.clean) {
    residual = Json::object();
    if (rep.failed_index) residual["index"] = *rep.failed_index;
    if (rep.residual) residual["series"] = json_of(*rep.residual);
  }
  return {{"r_max", rep.index_hi}, {"order", rep.order}, {"residual", residual}};
}

Json json_of(const EulerCheckReport& rep) {
  return {{"match", rep.match},
          {"shift", rep.shift},
          {"first_mismatch",
           rep.first_mismatch ? Json(*rep.first_mismatch) : Json(nullptr)},
          {"order", rep.order}};
}

namespace {

bool type_matches(const std::string& t, const Json& v) {
  if (t == "object") return v.is_object();
  if (t == "array") return v.is_array();
  if (t == "string") return v.is_string();
  if (t == "integer") return v.is_number_integer();
  if (t == "number") return v.is_number();
  if (t == "boolean") return v.is_boolean();
  if (t == "null") return v.is_null();
  return false;
}

void schema_check(const Json& schema, const Json& v, const std::string& path,
                  std::vector<std::string>& errs) {
  if (schema.contains("anyOf")) {
    for (const Json& alt : schema["anyOf"]) {
      std::vector<std::string> sub;
      schema_check(alt, v, path, sub);
      if (sub.empty()) return;
    }
    errs.push_back(path + ": matches no allowed alternative");
    return;
  }
  if (schema.contains("type")) {
    const Json& t = schema["type"];
    bool ok = false;
    if (t.is_array()) {
      for (const Json& one : t) ok = ok || type_matches(one.get<std::string>(), v);
    } else {
      ok = type_matches(t.get<std::string>(), v);
    }
    if (!ok) {
      errs.push_back(path + ": expected type " + t.dump() + ", got " +
                     std::string(v.type_name()));
      return;
    }
  }
  if (schema.contains("enum")) {
    bool ok = false;
    for (const Json& e : schema["enum"]) ok = ok || (e == v);
    if (!ok) {
      errs.push_back(path + ": value " + v.dump() + " not in " + schema["enum"].dump());
      return;
    }
  }
  if (v.is_object()) {
    if (schema.contains("required"))
      for (const Json& r : schema["required"])
        if (!v.contains(r.get<std::string>()))
          errs.push_back(path + ": missing required property \"" +
                         r.get<std::string>() + "\"");
    const bool closed = schema.contains("additionalProperties") &&
                        schema["additionalProperties"].is_boolean() &&
                        !schema["additionalProperties"].get<bool>();
    for (auto it = v.begin(); it != v.end(); ++it) {
      if (schema.contains("properties") && schema["properties"].contains(it.key()))
        schema_check(schema["properties"][it.key()], it.value(),
                     path + "." + it.key(), errs);
      else if (closed)
        errs.push_back(path + "." + it.key() + ": unexpected property");
    }
  }
  if (v.is_array()) {
    if (schema.contains("minItems") && v.size() < schema["minItems"].get<std::size_t>())
      errs.push_back(path + ": expected at least " +
                     std::to_string(schema["minItems"].get<std::size_t>()) + " items");
    if (schema.contains("maxItems") && v.size() > schema["maxItems"].get<std::size_t>())
      errs.push_back(path + ": expected at most " +
                     std::to_string(schema["maxItems"].get<std::size_t>()) + " items");
    if (schema.contains("items"))
      for (std::size_t i = 0; i < v.size(); ++i)
        schema_check(schema["items"], v[i], path + "[" + std::to_string(i) + "]", errs);
  }
}

}  // namespace

std::vector<std::string> schema_errors(const Json& schema, const Json& value,
                                       const std::string& path) {
  std::vector<std::string> errs;
  schema_check(schema, value, path, errs);
  return errs;
}

}  // namespace holofloer
