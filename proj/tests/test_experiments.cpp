#include <doctest.h>

#include "mincodes/experiments.hpp"
#include "mincodes/serial.hpp"

using namespace mincodes;

TEST_CASE("epsilon distribution command") {
    ExperimentConfig cfg;
    cfg.m_min = cfg.m_max = 5;
    const auto rows = table1_rows(cfg);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].m == 5);
    CHECK(rows[0].epsilon == 0);
    CHECK(rows[0].frequency == 10);
    CHECK(rows[1].epsilon == 1);
    CHECK(rows[1].frequency == 20);

    // byte-identical on repeated runs
    CHECK(cmd_table1(cfg) == cmd_table1(cfg));

    cfg.format = "json";
    CHECK(cmd_table1(cfg).find("\"epsilon\":0") != std::string::npos);

    ExperimentConfig over;
    over.m_min = over.m_max = 10;
    CHECK_THROWS_AS(table1_rows(over), BudgetExceeded);
    over.budget_k = 8;
    over.m_min = over.m_max = 9;
    CHECK_THROWS_AS(table1_rows(over), BudgetExceeded);
}

TEST_CASE("field override by polynomial mask") {
    ExperimentConfig cfg;
    cfg.m_min = cfg.m_max = 5;
    cfg.poly_mask = 0x29;
    const FieldSpec f = field_for(5, cfg);
    CHECK(f.primitive_poly_mask() == 0x29);
    // an override of the wrong degree falls back to the default
    CHECK(field_for(6, cfg).primitive_poly_mask() == default_primitive_poly_mask(6));
}

TEST_CASE("distance extremes command") {
    ExperimentConfig cfg;
    cfg.m_min = 5;
    cfg.m_max = 6;
    const auto rows = figure2_rows(cfg);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].d_max == 5);
    CHECK(rows[0].d_min == 5);
    CHECK(rows[0].reference == 5);
    CHECK(rows[1].d_max == 7);
    CHECK(rows[1].d_min == 6);
    CHECK(rows[1].reference == 6);
    CHECK(cmd_figure2(cfg) == cmd_figure2(cfg));

    ExperimentConfig over;
    over.m_min = 5;
    over.m_max = 13;
    CHECK_THROWS_AS(figure2_rows(over), BudgetExceeded);
}

TEST_CASE("bound curve command") {
    const auto rows = figure1_rows(8);
    CHECK(rows.size() == 219);  // lengths 36..254
    CHECK(rows.front().delta == 36);
    CHECK(rows.front().interval_bound == 8);
    CHECK(rows.front().trace_bound == 8);
    CHECK(rows.back().delta == 254);
    CHECK(rows.back().interval_bound == 127);
    CHECK(rows.back().trace_bound == 127);

    for (const Figure1Row& r : rows) {
        CHECK(r.interval_bound >= r.trace_bound);  // it is a max over two terms
        if (r.delta == 47) CHECK(r.interval_bound == 9);
        if (r.delta == 92) CHECK(r.trace_bound == 29);
        if (r.delta == 218) {
            CHECK(r.interval_bound == 99);
            CHECK(r.trace_bound == 99);
        }
    }
    ExperimentConfig cfg;
    CHECK(cmd_figure1(cfg, 8) == cmd_figure1(cfg, 8));
}

TEST_CASE("worked examples report") {
    const ExamplesReport rep = examples_report();
    for (const ExampleCheck& c : rep.checks) {
        INFO(c.name, ": expected ", c.expected, ", got ", c.got);
        CHECK(c.pass);
    }
    CHECK(rep.all_pass());
}

TEST_CASE("conjecture evidence") {
    ExperimentConfig cfg;
    cfg.m_min = 5;
    cfg.m_max = 7;
    const auto rows = conjecture_rows(cfg);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].d_min_half_pascal == 5);
    CHECK(!rows[0].distance_exceeds_m);
    CHECK(rows[0].weight_witness_exists);  // some class has wt(g*) = 12 > 8
    CHECK(rows[1].max_wt_gstar >= 24);     // witness weight 24 > 16
    CHECK(rows[1].weight_witness_exists);
    CHECK(rows[2].m == 7);
    CHECK(rows[2].d_min_half_pascal == 9);
    CHECK(rows[2].distance_exceeds_m);  // 9 > 7
}

TEST_CASE("verification dispatch") {
    const FieldSpec f = build_field(4);
    const SupportSet star = nonzero_points(f);
    const LinearCode simplex = code_from_functions(f, simplex_functions(f), &star);
    CHECK(verify_code(simplex, "exact").verdict == Verdict::Minimal);
    CHECK(verify_code(simplex, "ab").verdict == Verdict::Minimal);
    CHECK(verify_code(simplex, "auto").method == Method::ExactPairwise);
    CHECK_THROWS_AS(verify_code(simplex, "fancy"), BadParams);

    LinearCode wide;
    wide.n = 40;
    wide.k = 20;
    for (int i = 0; i < 20; ++i) {
        BitVec row(40);
        row.set(std::size_t(i));
        row.set(std::size_t(i + 20));
        wide.rows.push_back(row);
    }
    CHECK(verify_code(wide, "auto").method == Method::AshikhminBarg);

    LinearCode huge;
    huge.n = 30;
    huge.k = 27;
    CHECK_THROWS_AS(verify_code(huge, "auto"), BudgetExceeded);
}

TEST_CASE("code JSON round trip") {
    const FieldSpec f = build_field(4);
    const SupportSet star = nonzero_points(f);
    const LinearCode simplex = code_from_functions(f, simplex_functions(f), &star);
    const nlohmann::json j = code_to_json(simplex, &f);
    CHECK(j["n"] == 15);
    CHECK(j["k"] == 4);
    CHECK(j["field_m"] == 4);
    CHECK(j["primitive_poly"] == 0x13);

    const ParsedCode parsed = code_from_json(j);
    CHECK(parsed.code.n == simplex.n);
    CHECK(parsed.code.k == simplex.k);
    for (int i = 0; i < simplex.k; ++i) CHECK(parsed.code.rows[std::size_t(i)] == simplex.rows[std::size_t(i)]);
    CHECK(parsed.field_m == 4);

    nlohmann::json bad = j;
    bad["k"] = 5;
    CHECK_THROWS_AS(code_from_json(bad), ParseError);
    nlohmann::json dependent = j;
    dependent["generator_rows_hex"][1] = dependent["generator_rows_hex"][0];
    CHECK_THROWS_AS(code_from_json(dependent), ParseError);
    CHECK_THROWS_AS(code_from_json(nlohmann::json::object()), ParseError);
}

TEST_CASE("construction JSON carries bounds and verdicts") {
    const FieldSpec f = build_field(5);
    const ConstructionResult r = code_half_pascal(f);
    const nlohmann::json j = construction_to_json(r, &f);
    CHECK(j["provenance"] == "half-pascal-prefix");
    CHECK(j["measured_distance"] == 5);
    CHECK(j["minimality"]["verdict"] == "minimal");
    CHECK(j["claimed_bounds"].size() == 2);

    const nlohmann::json b = bound_report_to_json(gauss_log_bound(8, 47));
    CHECK(b["name"] == "gauss-log");
    CHECK(b["value"] == 9);
    CHECK(b["inputs"]["delta"] == 47);
}
