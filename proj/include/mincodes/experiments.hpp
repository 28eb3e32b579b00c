#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mincodes/constructions.hpp"
#include "mincodes/field.hpp"

namespace mincodes {

// Shared knobs for the experiment commands. budget_k = 0 picks the
// per-command default; larger sweeps must raise it explicitly.
struct ExperimentConfig {
    int m_min = 0;  // 0 = command default
    int m_max = 0;
    std::optional<std::uint32_t> poly_mask;  // primitive polynomial override
    int jobs = 0;                            // 0 = all cores
    int budget_k = 0;
    std::string format = "csv";  // csv | json
};

FieldSpec field_for(int m, const ExperimentConfig& cfg);

// --- epsilon distribution over primitive elements --------------------------

struct Table1Row {
    int m = 0;
    int epsilon = 0;
    long long frequency = 0;
};
// One epsilon_max evaluation per conjugacy class, frequencies scaled by
// class size; per-m frequencies sum to phi(2^m - 1).
std::vector<Table1Row> table1_rows(const ExperimentConfig& cfg);
std::string cmd_table1(const ExperimentConfig& cfg);

// --- extreme distances of the half-pascal codes -----------------------------

struct Figure2Row {
    int m = 0;
    long long d_max = 0;
    long long d_min = 0;
    long long reference = 0;  // measured distance of the pair-sum code
};
std::vector<Figure2Row> figure2_rows(const ExperimentConfig& cfg);
std::string cmd_figure2(const ExperimentConfig& cfg);

// --- lower-bound curves -----------------------------------------------------

struct Figure1Row {
    std::uint64_t delta = 0;
    long long interval_bound = 0;  // max of the AI term and the Gauss-log term
    long long trace_bound = 0;     // AI term alone
};
std::vector<Figure1Row> figure1_rows(int m);
std::string cmd_figure1(const ExperimentConfig& cfg, int m = 8);

// --- worked examples ---------------------------------------------------------

struct ExampleCheck {
    std::string name;
    std::string expected;
    std::string got;
    bool pass = false;
};
struct ExamplesReport {
    std::vector<ExampleCheck> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};
ExamplesReport examples_report();
std::string cmd_examples();

// --- conjecture evidence ------------------------------------------------------

struct ConjectureRow {
    int m = 0;
    long long d_min_half_pascal = 0;
    bool distance_exceeds_m = false;
    long long max_wt_gstar = 0;
    long long threshold = 0;  // 2^{m-2}
    bool weight_witness_exists = false;
};
std::vector<ConjectureRow> conjecture_rows(const ExperimentConfig& cfg);
std::string cmd_conjectures(const ExperimentConfig& cfg);

// --- verification ------------------------------------------------------------

// method: "auto", "exact" or "ab"
MinimalityReport verify_code(const LinearCode& code, const std::string& method);

}  // namespace mincodes
