#pragma once

#include <json.hpp>

#include "skewpf/classify.hpp"
#include "skewpf/closure.hpp"
#include "skewpf/jets.hpp"
#include "skewpf/skew_matrix.hpp"

namespace skewpf {

using Json = nlohmann::json;

// Interchange formats (all coefficients are "p/q" strings):
//   skew matrix   {"entries": [{"i":0,"j":1,"coeffs":["1/1","0/1",...]}, ...]}
//                 one object per pair i<j, coefficients of x0..x4
//   cubic         {"coeffs": {"3,0,0,0,0": "1/1", ...}}, exponent-vector keys
//   jet           {"order": n, "coefficients": [<skew matrix>, ...]}
//   polynomial    [[[e0,...,e4], "p/q"], ...] for polynomials in x only

Json skew_to_json(const SkewLinMatrix& m);
SkewLinMatrix skew_from_json(const Json& j);

Json cubic_to_json(const Polynomial& f);
Polynomial cubic_from_json(const Json& j);

Json xpoly_to_json(const Polynomial& p);
Polynomial xpoly_from_json(const Json& j);

Json jet_to_json(const JetMatrix& j);
JetMatrix jet_from_json(const Json& j);

Json fingerprint_to_json(const Fingerprint& fp);
Json verdict_to_json(const ClosureVerdict& v);

}  // namespace skewpf
