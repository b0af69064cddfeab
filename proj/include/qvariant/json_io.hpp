#pragma once

#include <json.hpp>

#include "qvariant/closedform.hpp"
#include "qvariant/frobenius.hpp"
#include "qvariant/qdiff.hpp"

namespace qvariant {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Exact scalars as "num/den", floats as [re, im].
json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const json& j, Mode mode);

json poly_to_json(const Poly& p);
Poly poly_from_json(const json& j, Mode mode);

// {"schema", "mode", "p", "u", "v", "w"}
json equation_to_json(const QDifferenceEquation& eq);
QDifferenceEquation equation_from_json(const json& j);

// Parameter objects keyed h1, h2, l1, l2, alpha1, alpha2, t1, t2 (resp. alpha, t3).
json params2_to_json(const Params2& p);
Params2 params2_from_json(const json& j, Mode mode);
json params3_to_json(const Params3& p);
Params3 params3_from_json(const json& j, Mode mode);

json exponents_to_json(const ExponentPair& e);
json series_to_json(const PowerSeriesSolution& s);
json series_to_json(const PochhammerSeries& s);

}  // namespace qvariant
