#pragma once

#include <json.hpp>

#include "pathforge/checkmark.hpp"
#include "pathforge/enumeration.hpp"
#include "pathforge/path.hpp"
#include "pathforge/weighting.hpp"

// Serializers for the external JSON forms. Key order is fixed.
namespace pathforge::json {

using Json = nlohmann::ordered_json;

Json path(PathView p);
Json checkmarks(const CheckmarkPair& pair);
CheckmarkPair checkmarks_from(const Json& j);
Json monomial(const BiBandedMonomial& m);
Json monomial(const PeakMonomial& m);
Json coefficients(const WeightPolynomial& poly);
Json polynomial(const WeightPolynomial& poly, Lattice lattice);
/// {"input","image","bibanded","peaks","dyck_in","dyck_out"}; `inverse`
/// selects which side carries which weighting.
Json mapping(PathView input, PathView image, bool inverse);
Json report(const VerifyReport& r, bool with_timing);

}  // namespace pathforge::json
