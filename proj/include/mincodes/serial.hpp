#pragma once

#include <string>

#include <json.hpp>

#include "mincodes/codes.hpp"
#include "mincodes/constructions.hpp"
#include "mincodes/field.hpp"

namespace mincodes {

// {n, k, generator_rows_hex, field_m, primitive_poly}; rows are hex strings,
// little-endian nibbles over the coordinate order.
nlohmann::json code_to_json(const LinearCode& c, const FieldSpec* field = nullptr);

struct ParsedCode {
    LinearCode code;
    int field_m = 0;
    std::uint32_t primitive_poly = 0;
};
ParsedCode code_from_json(const nlohmann::json& j);

nlohmann::json minimality_to_json(const MinimalityReport& r);
nlohmann::json construction_to_json(const ConstructionResult& r, const FieldSpec* field = nullptr);
nlohmann::json bound_report_to_json(const BoundReport& b);

}  // namespace mincodes
