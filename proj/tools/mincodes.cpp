#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mincodes/experiments.hpp"
#include "mincodes/serial.hpp"

using namespace mincodes;

namespace {

struct CommonOpts {
    int m = 0;
    std::string range;
    std::string poly_hex;
    int jobs = 0;
    int budget_k = 0;
    std::string format = "csv";
    std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_m = true) {
    if (with_m) cmd->add_option("--m", o.m, "single extension degree m");
    cmd->add_option("--range", o.range, "m range as lo:hi");
    cmd->add_option("--poly", o.poly_hex, "primitive polynomial override, hex mask (bit i = coeff of x^i)");
    cmd->add_option("--jobs", o.jobs, "worker threads (0 = all cores)");
    cmd->add_option("--budget-k", o.budget_k, "max dimension for exact sweeps");
    cmd->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", o.out, "write output to a file instead of stdout");
}

ExperimentConfig to_config(const CommonOpts& o) {
    ExperimentConfig cfg;
    if (o.m) cfg.m_min = cfg.m_max = o.m;
    if (!o.range.empty()) {
        const auto colon = o.range.find(':');
        if (colon == std::string::npos)
            throw CLI::ValidationError("--range", "expected lo:hi");
        cfg.m_min = std::stoi(o.range.substr(0, colon));
        cfg.m_max = std::stoi(o.range.substr(colon + 1));
    }
    if (!o.poly_hex.empty()) cfg.poly_mask = std::uint32_t(std::stoul(o.poly_hex, nullptr, 16));
    cfg.jobs = o.jobs;
    cfg.budget_k = o.budget_k;
    cfg.format = o.format;
    return cfg;
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out);
    if (!f) throw std::runtime_error("cannot open output file " + out);
    f << text;
}

int run_verify(const std::string& path, const std::string& method) {
    nlohmann::json j;
    if (path == "-") {
        std::cin >> j;
    } else {
        std::ifstream f(path);
        if (!f) throw ParseError("cannot open " + path);
        try {
            f >> j;
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("invalid JSON: ") + e.what());
        }
    }
    const ParsedCode parsed = code_from_json(j);
    const MinimalityReport rep = verify_code(parsed.code, method);
    std::cout << minimality_to_json(rep).dump(2) << "\n";
    switch (rep.verdict) {
        case Verdict::Minimal: return 0;
        case Verdict::NotMinimal: return 1;
        default: return 2;
    }
}

int run_construct(const std::string& kind, const CommonOpts& o, long long h, long long delta,
                  const std::string& variant, int r) {
    const ExperimentConfig cfg = to_config(o);
    const int m = o.m ? o.m : 8;
    const FieldSpec field = field_for(m, cfg);

    std::optional<ConstructionResult> res;
    if (kind == "interval") {
        res = code_interval(field, h, std::uint64_t(delta));
    } else if (kind == "half-pascal") {
        res = code_half_pascal(field);
    } else if (kind == "single-f") {
        res = code_single_f(field, std::uint64_t(delta));
    } else if (kind == "punctured-quad") {
        res = punctured_quad_code(field, std::uint64_t(delta),
                                  variant == "odd" ? QuadVariant::OddPure : QuadVariant::Mixed);
    } else if (kind == "quad-odd" || kind == "quad-mixed") {
        const LinearCode code = kind == "quad-odd" ? quad_code_odd(field) : quad_code_mixed(field);
        ConstructionResult cr;
        cr.code = code;
        cr.provenance = kind == "quad-odd" ? "quadratic-odd" : "quadratic-mixed";
        cr.claimed_bounds.push_back({"weight-floor", 3ll << (m - 3)});
        cr.minimality = is_minimal_ab(code);
        if (code.k <= kWeightEnumBudget) cr.measured_distance = min_distance(code);
        res = cr;
    } else if (kind == "simplex-vecfun") {
        if (!simplex_vecfun_gate(m, r))
            throw BadParams("m^2 + m + 2 <= 2^{m-r+1} fails for these m, r");
        res = direct_sum_code(field, simplex_functions(field), 1, vecfun_equal_blocks(field, r));
    } else if (kind == "trace-set" ) {
        res = code_C_of_D(field, interval_support(field, h, std::uint64_t(delta)));
    } else {
        throw BadParams("unknown construction kind " + kind);
    }
    emit(construction_to_json(*res, &field).dump(2) + "\n", o.out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"constructions and verification of minimal binary linear codes"};
    app.require_subcommand(1);

    CommonOpts o_table1, o_fig1, o_fig2, o_conj, o_construct;
    std::string verify_path, verify_method = "auto";
    std::string construct_kind = "interval", construct_variant = "mixed";
    long long construct_h = 0, construct_delta = 0;
    int construct_r = 1;
    std::string examples_out;

    CLI::App* c_table1 = app.add_subcommand("table1", "epsilon distribution over primitive elements");
    add_common(c_table1, o_table1);
    CLI::App* c_fig1 = app.add_subcommand("figure1", "lower-bound curves for interval trace codes");
    add_common(c_fig1, o_fig1);
    CLI::App* c_fig2 = app.add_subcommand("figure2", "extreme distances of half-pascal codes");
    add_common(c_fig2, o_fig2);
    CLI::App* c_examples = app.add_subcommand("examples", "recompute the worked examples");
    c_examples->add_option("--out", examples_out, "write output to a file");
    CLI::App* c_verify = app.add_subcommand("verify", "minimality of a serialized code");
    c_verify->add_option("code", verify_path, "code JSON file, or - for stdin")->required();
    c_verify->add_option("--method", verify_method, "auto, exact or ab")
        ->check(CLI::IsMember({"auto", "exact", "ab"}));
    CLI::App* c_conj = app.add_subcommand("conjectures", "numerical evidence tables");
    add_common(c_conj, o_conj);
    CLI::App* c_construct = app.add_subcommand("construct", "build a code family member as JSON");
    add_common(c_construct, o_construct);
    c_construct->add_option("--kind", construct_kind,
                            "interval | half-pascal | single-f | punctured-quad | quad-odd | "
                            "quad-mixed | simplex-vecfun | trace-set");
    c_construct->add_option("--start", construct_h, "interval start exponent");
    c_construct->add_option("--delta", construct_delta, "interval length");
    c_construct->add_option("--variant", construct_variant, "odd or mixed (punctured-quad)");
    c_construct->add_option("--r", construct_r, "vectorial output width");

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_table1->parsed()) emit(cmd_table1(to_config(o_table1)), o_table1.out);
        if (c_fig1->parsed()) emit(cmd_figure1(to_config(o_fig1), o_fig1.m ? o_fig1.m : 8), o_fig1.out);
        if (c_fig2->parsed()) emit(cmd_figure2(to_config(o_fig2)), o_fig2.out);
        if (c_examples->parsed()) {
            const ExamplesReport rep = examples_report();
            emit(cmd_examples(), examples_out);
            return rep.all_pass() ? 0 : 1;
        }
        if (c_verify->parsed()) return run_verify(verify_path, verify_method);
        if (c_conj->parsed()) emit(cmd_conjectures(to_config(o_conj)), o_conj.out);
        if (c_construct->parsed())
            return run_construct(construct_kind, o_construct, construct_h, construct_delta,
                                 construct_variant, construct_r);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 3;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
