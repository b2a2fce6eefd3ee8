#pragma once

#include <json.hpp>

#include "starcfg/classifier.hpp"
#include "starcfg/cubic_group.hpp"
#include "starcfg/matrix.hpp"
#include "starcfg/proof_harness.hpp"
#include "starcfg/star_config.hpp"
#include "starcfg/tangent_ideal.hpp"

namespace starcfg {

// JSON views of the public types. Rationals are emitted as canonical "p" or
// "p/q" strings (JSON numbers cannot hold them exactly); forms as canonical
// polynomial text; point-pair keys as 1-based "i,j". Keys keep insertion
// order so identical inputs serialize byte-identically.
using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Json to_json(const Form& f);
Json to_json(const Matrix& m);
Json to_json(const ProjPoint& p);
Json to_json(const StarConfig& x);
Json to_json(const DominanceVerdict& v);
Json to_json(const Verdict& v);
Json to_json(const DimensionCount& dc);
Json to_json(const CrossValidation& cv);
Json to_json(const EvalMatrix& em);
Json to_json(const ReplicationReport& report);
Json to_json(const WeierstrassCurve& c);
Json to_json(const CurvePoint& p);
Json to_json(const X4OnCubic& x4);

}  // namespace starcfg
