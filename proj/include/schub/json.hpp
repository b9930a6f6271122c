#pragma once

#include <json.hpp>

#include "schub/bp.hpp"
#include "schub/classify.hpp"
#include "schub/grassmann.hpp"
#include "schub/levi.hpp"
#include "schub/poincare.hpp"
#include "schub/toroidal.hpp"

// Canonical JSON encodings. Objects keep a fixed field order and carry only
// integers, booleans and strings, so dump(parse(dump(x))) == dump(x).

namespace schub {

using Json = nlohmann::ordered_json;

Json to_json(const Permutation& w);
Json to_json(const ParabolicSet& s);
Json to_json(const PoincarePolynomial& p);
Json to_json(const GrassmannSchubert& x);
Json to_json(const LeviDescriptor& levi);
Json to_json(const HeadReport& report);
Json to_json(const ToroidalReport& report);
Json to_json(const BPDecomposition& bp);
Json to_json(const DivisorProjection& projection);
Json to_json(const TransportReport& report);
Json to_json(const PasquierCase& c);
Json to_json(const CaseFamily& family);

std::string to_string(Criterion criterion);
std::string to_string(Verdict verdict);
std::string to_string(ProjectionKind kind);
std::string to_string(TransportVerdict verdict);

}  // namespace schub
