#include "mincodes/serial.hpp"

namespace mincodes {

using nlohmann::json;

json code_to_json(const LinearCode& c, const FieldSpec* field) {
    json rows = json::array();
    for (const BitVec& r : c.rows) rows.push_back(r.to_hex());
    json j{{"n", c.n}, {"k", c.k}, {"generator_rows_hex", rows}};
    if (field) {
        j["field_m"] = field->m();
        j["primitive_poly"] = field->primitive_poly_mask();
    }
    return j;
}

ParsedCode code_from_json(const json& j) {
    try {
        ParsedCode p;
        p.code.n = j.at("n").get<int>();
        p.code.k = j.at("k").get<int>();
        if (p.code.n < 0 || p.code.k < 0) throw ParseError("negative code parameters");
        for (const auto& row : j.at("generator_rows_hex"))
            p.code.rows.push_back(BitVec::from_hex(row.get<std::string>(), std::size_t(p.code.n)));
        if (int(p.code.rows.size()) != p.code.k)
            throw ParseError("row count does not match k");
        if (gf2_rank(p.code.rows) != p.code.k)
            throw ParseError("generator rows are not independent");
        p.field_m = j.value("field_m", 0);
        p.primitive_poly = j.value("primitive_poly", 0u);
        return p;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad code JSON: ") + e.what());
    }
}

json minimality_to_json(const MinimalityReport& r) {
    json j{{"verdict", to_string(r.verdict)},
           {"method", to_string(r.method)},
           {"dimension_preserved", r.dimension_preserved}};
    if (r.witness)
        j["witness"] = {{"contained", r.witness->first.to_hex()},
                        {"containing", r.witness->second.to_hex()}};
    return j;
}

json construction_to_json(const ConstructionResult& r, const FieldSpec* field) {
    json bounds = json::array();
    for (const NamedBound& b : r.claimed_bounds)
        bounds.push_back({{"name", b.name}, {"value", b.value}});
    json j{{"provenance", r.provenance},
           {"code", code_to_json(r.code, field)},
           {"claimed_bounds", bounds},
           {"minimality", minimality_to_json(r.minimality)},
           {"ai_precondition_met", r.ai_precondition_met}};
    if (r.measured_distance) j["measured_distance"] = *r.measured_distance;
    return j;
}

json bound_report_to_json(const BoundReport& b) {
    return json{{"name", b.name}, {"value", b.value}, {"inputs", b.inputs}};
}

}  // namespace mincodes
