#pragma once

#include "brauer/structure.hpp"

#include <json.hpp>

namespace brauer {

using Json = nlohmann::ordered_json;

/// Integer that fits in 64 bits as a number, otherwise as a decimal string.
Json to_json(const BigInt& v);
Json to_json(const LaurentPoly& p);
Json to_json(const Diagram& d);
Json to_json(const Monomial& m);
Json to_json(const WordA& w);
Json to_json(const WordC& w);
Json to_json(const RootA& r);
Json to_json(const AdmissibleSetA& b);
Json to_json(const RootC& r);
Json to_json(const NormalForm& nf, const WeylGroup& w);
Json to_json(const UVWDecomposition& d);
Json to_json(const CellDatum& datum, const WeylGroup& w);
Json to_json(const Report& r);

LaurentPoly laurent_from_json(const Json& j);
Diagram diagram_from_json(const Json& j);
Monomial monomial_from_json(const Json& j);

}  // namespace brauer
