#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "holofloer/alexander.hpp"
#include "holofloer/algebra.hpp"
#include "holofloer/colored.hpp"
#include "holofloer/complexes.hpp"
#include "holofloer/grading.hpp"
#include "holofloer/holonomy.hpp"
#include "holofloer/weyl.hpp"

namespace holofloer {

using Json = nlohmann::json;

/// Serialization conventions, shared by the CLI and the test suite:
///   LaurentPoly        {"coeffs": [[exponent, coefficient]...]} (sorted)
///   TruncatedSeries    {"coeffs": [...], "order": n}
///   AlexanderPoly      {"coeffs": [...]} holding the symmetric form
///   WeylElement        [[m_exp, l_exp, [[e, c]...]]...]
///   AffineLinear       [slope, offset]
///   AffineBidegree     {"t": [slope, offset], "q": [slope, offset]}
///   SplitComplex       {"pairs": [...], "frees": [...], "tail": {...}|null}
///   KnotData           the knot file format (see knot_from_json)
/// Coefficients that fit in 64 bits serialize as JSON integers, larger ones
/// as decimal strings; parsers accept both.
Json json_of(const LaurentPoly& p);
Json json_of(const TruncatedSeries& s);
Json json_of(const AlexanderPoly& a);
Json json_of(const WeylElement& w);
Json json_of(const AffineLinear& f);
Json json_of(const AffineBidegree& d);
Json json_of(const PairSummand& p);
Json json_of(const FreeSummand& f);
Json json_of(const TailSummand& t);
Json json_of(const SplitComplex& c);
Json json_of(const BigradedPoly& p);
Json json_of(const CfkBasis& b);
Json json_of(const HeadChain& h);
Json json_of(const KnotData& k);
Json json_of(const CertificateStep& s);
Json json_of(const HolonomyCertificate& cert);
Json json_of(const VerificationReport& rep);
Json json_of(const EulerCheckReport& rep);

/// Parsers throw std::invalid_argument with the offending field path
/// ("knot.cfk.generators[2].maslov: expected an integer").
LaurentPoly laurent_from_json(const Json& j, const std::string& path = "laurent");
TruncatedSeries series_from_json(const Json& j, const std::string& path = "series");
AlexanderPoly alexander_from_json(const Json& j, const std::string& path = "alexander");
WeylElement weyl_from_json(const Json& j, const std::string& path = "weyl");
AffineLinear affine_from_json(const Json& j, const std::string& path = "affine");
AffineBidegree bidegree_from_json(const Json& j, const std::string& path = "degree");
SplitComplex complex_from_json(const Json& j, const std::string& path = "complex");
HolonomyCertificate certificate_from_json(const Json& j,
                                          const std::string& path = "certificate");

/// Knot file format:
///   {"name": str, "alexander": {"coeffs": [[e,c]...]}, "genus": n, "tau": n,
///    "cfk": {"generators": [{"label","maslov","alexander"}...],
///            "vertical_arrows": [["src","tgt"]...]}?,
///    "head_spec": [{"base": {"t":[s,c],"q":[s,c]}, "length": n,
///                   "label"?: str}...]?,
///    "theta": {"t":[s,c],"q":[s,c]}?}
/// With "cfk" present the head and theta are derived (a supplied "theta" or
/// "head_spec" overrides the derived data); without it both "head_spec" and
/// "theta" are required. Structural invariants are enforced here; the Euler
/// cross-check is the caller's choice (KnotData::validate).
KnotData knot_from_json(const Json& j, const std::string& path = "knot");

/// Read and parse a knot file; parse errors and schema violations become
/// std::invalid_argument mentioning the file.
KnotData load_knot_file(const std::string& file_path);

/// Minimal JSON-schema checker covering the subset the committed schemas
/// use: "type" (string or list), "properties", "required", "items" (single
/// schema), "enum", "anyOf", "minItems", and boolean "additionalProperties".
/// Returns human-readable violations; empty means valid.
std::vector<std::string> schema_errors(const Json& schema, const Json& value,
                                       const std::string& path = "$");

const char* step_kind_name(StepKind kind);
StepKind step_kind_parse(const std::string& name, const std::string& path);

}  // namespace holofloer
