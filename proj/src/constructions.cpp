#include "mincodes/constructions.hpp"

#include <cmath>
#include <string>

namespace mincodes {

namespace {

// rows Tr(alpha^b beta^i), i < length, for b < m; beta = alpha^e
LinearCode prefix_trace_code(const FieldSpec& field, std::uint32_t e, std::uint64_t length) {
    const int m = field.m();
    const std::uint64_t n = field.group_order();
    LinearCode c;
    c.n = int(length);
    c.k = m;
    for (int b = 0; b < m; ++b) {
        BitVec row(length);
        for (std::uint64_t i = 0; i < length; ++i)
            if (field.trace_of_exponent(std::uint32_t((b + e * i) % n))) row.set(std::size_t(i));
        c.rows.push_back(std::move(row));
    }
    for (std::uint64_t i = 0; i < length; ++i)
        c.coordinate_labels.push_back(field.antilog(std::uint32_t((e * i) % n)));
    if (gf2_rank(c.rows) != m) throw Error("prefix trace code dropped rank");
    return c;
}

long long guarded_ceil(double x) {
    return (long long)std::ceil(std::nextafter(std::nextafter(x, -1e30), -1e30));
}

void measure_if_feasible(ConstructionResult& r) {
    if (r.code.k >= 1 && r.code.k <= kWeightEnumBudget)
        r.measured_distance = min_distance(r.code);
}

}  // namespace

std::vector<BooleanFunction> simplex_functions(const FieldSpec& field) {
    std::vector<BooleanFunction> funcs;
    for (int b = 0; b < field.m(); ++b) funcs.push_back(trace_function(field, field.alpha_pow(b)));
    return funcs;
}

ConstructionResult code_C_of_D(const FieldSpec& field, const SupportSet& D) {
    if (D.contains_zero()) throw ZeroInD("D must avoid the zero element");
    if (D.mask.none()) throw BadSize("D must be nonempty");

    ConstructionResult r;
    r.provenance = "trace-code";
    r.code = code_from_functions(field, simplex_functions(field), &D);

    const AiValue ai = ai_of_set(D.with_zero());
    if (ai.is_finite() && ai.finite_value() >= 3) {
        const int t = ai.finite_value();
        r.claimed_bounds.push_back(
            {"ai-binomial", lb_annihilator_weight(field.m(), t, 1).value});
        r.minimality = {Verdict::Minimal, Method::AnnihilatorCriterion, std::nullopt, true};
    } else {
        r.ai_precondition_met = false;
        r.minimality = {Verdict::Unknown, Method::AnnihilatorCriterion, std::nullopt, true};
    }
    measure_if_feasible(r);
    return r;
}

ConstructionResult code_interval(const FieldSpec& field, std::int64_t h, std::uint64_t delta) {
    const int m = field.m();
    const int t = interval_t_parameter(m, delta);
    if (t < 3) throw DeltaOutOfRange("interval parameter t = " + std::to_string(t) +
                                     " is below 3; no minimality claim applies");

    ConstructionResult r;
    r.provenance = "interval-trace-code";
    const SupportSet D = interval_support(field, h, delta);
    r.code = code_from_functions(field, simplex_functions(field), &D);
    if (r.code.k != m) throw Error("interval trace code dropped rank");
    r.claimed_bounds.push_back({"ai-binomial", lb_annihilator_weight(m, t, 1).value});
    r.claimed_bounds.push_back({"gauss-log", gauss_log_bound(m, delta).value});
    r.minimality = {Verdict::Minimal, Method::AnnihilatorCriterion, std::nullopt, true};
    measure_if_feasible(r);
    return r;
}

ConstructionResult code_half_pascal(const FieldSpec& field, std::uint32_t beta_exponent) {
    const int m = field.m();
    if (m < 5) throw MTooSmall("need m >= 5");
    const std::uint64_t length = std::uint64_t(m) * (m + 1) / 2;

    ConstructionResult r;
    r.provenance = "half-pascal-prefix";
    r.code = prefix_trace_code(field, beta_exponent, length);
    r.claimed_bounds.push_back({"ai-binomial", lb_annihilator_weight(m, 3, 1).value});
    r.claimed_bounds.push_back({"gauss-log", gauss_log_bound(m, length).value});
    r.minimality = {Verdict::Minimal, Method::AnnihilatorCriterion, std::nullopt, true};
    measure_if_feasible(r);
    return r;
}

int epsilon_max(const FieldSpec& field, std::uint32_t beta_exponent) {
    const int m = field.m();
    if (m < 5) throw MTooSmall("need m >= 5");
    const std::uint64_t full = std::uint64_t(m) * (m + 1) / 2;
    int best = -1;
    for (int eps = 0; eps < m * (m - 1) / 2; ++eps) {
        const LinearCode c = prefix_trace_code(field, beta_exponent, full - std::uint64_t(eps));
        if (is_minimal_exact(c).verdict == Verdict::Minimal) best = eps;
    }
    if (best < 0) throw Error("the full-length prefix code was not minimal");
    return best;
}

WeightCriterion check_weight_criteria(const FieldSpec& field, int offset,
                                      std::uint32_t beta_exponent) {
    const int m = field.m();
    if (m < 5) throw MTooSmall("need m >= 5");
    if (offset != 2 && offset != 3) throw BadParams("offset must be 2 or 3");

    const BinaryPolynomial gstar = srm_generator_poly(field, 2, beta_exponent);
    const BinaryPolynomial shifted = BinaryPolynomial::from_mask(0x3) * gstar;  // (1+X) g*
    const long long quarter = 1ll << (m - 2);

    WeightCriterion w;
    w.wt_gstar = (long long)gstar.weight();
    w.wt_gstar_times_1px = (long long)shifted.weight();
    w.prefix_length = std::uint64_t(m) * (m + 1) / 2 - std::uint64_t(offset) + 1;
    w.minimal = offset == 2 ? w.wt_gstar != quarter
                            : (w.wt_gstar > quarter && w.wt_gstar_times_1px > quarter);
    return w;
}

ConstructionResult punctured_quad_code(const FieldSpec& field, std::uint64_t delta,
                                       QuadVariant variant) {
    const int m = field.m();
    if (m < 5) throw MTooSmall("need m >= 5");
    const bool degenerate = delta == field.group_order();  // keeps every coordinate
    int t = 0;
    if (!degenerate) {
        t = interval_t_parameter(m, delta);
        if (t < 5 || t > m)
            throw DeltaOutOfRange("interval parameter t = " + std::to_string(t) +
                                  " is outside [5, m]");
    }

    const std::vector<BooleanFunction> funcs =
        variant == QuadVariant::OddPure ? quad_odd_functions(field) : quad_mixed_functions(field);
    const SupportSet D = interval_support(field, 0, delta);

    ConstructionResult r;
    r.provenance = variant == QuadVariant::OddPure ? "punctured-quadratic-odd"
                                                   : "punctured-quadratic-mixed";
    r.code = code_from_functions(field, funcs, &D);
    if (r.code.k != m * (m - 1) / 2 || r.code.rank_collapsed)
        throw Error("puncturing the quadratic code dropped rank");
    if (degenerate)
        r.claimed_bounds.push_back({"weight-floor", 3ll << (m - 3)});
    else
        r.claimed_bounds.push_back({"punctured-ai-binomial", lb_annihilator_weight(m, t, 2).value});
    r.minimality = {Verdict::Minimal, Method::AnnihilatorCriterion, std::nullopt, true};
    measure_if_feasible(r);
    return r;
}

LinearCode span_code(const VectorialFunction& F) {
    LinearCode c = code_from_functions(*F.field, F.components);
    if (c.rank_collapsed) throw DependentComponents("component functions are dependent");
    return c;
}

ConstructionResult direct_sum_code(const FieldSpec& field,
                                   const std::vector<BooleanFunction>& base_funcs, int base_order,
                                   const VectorialFunction& F) {
    const int k = int(base_funcs.size());
    const int r_dim = F.r();
    if (k <= 1) throw DimensionOne("the base code must have dimension > 1");
    for (const BooleanFunction& f : base_funcs) {
        const auto deg = algebraic_degree(f);
        if (!deg || *deg > base_order)
            throw BadParams("base function of degree above the stated order");
    }
    const AiValue ai = ai_of_vectorial(F);
    if (ai < AiValue::finite(2 * base_order + 1))
        throw AiTooSmall("AI(F) must be at least 2 ell + 1");

    std::vector<BooleanFunction> all = base_funcs;
    all.insert(all.end(), F.components.begin(), F.components.end());
    const SupportSet coords = nonzero_points(field);

    ConstructionResult res;
    res.provenance = "direct-sum-vectorial";
    res.code = code_from_functions(field, all, &coords);
    if (res.code.k != k + r_dim) throw Error("direct sum lost rank on the nonzero points");
    if (res.code.k <= kPairwiseBudget)
        res.minimality = is_minimal_exact(res.code);
    else
        res.minimality = {Verdict::Minimal, Method::AnnihilatorCriterion, std::nullopt, true};
    measure_if_feasible(res);
    return res;
}

ConstructionResult code_single_f(const FieldSpec& field, std::uint64_t delta) {
    const int m = field.m();
    const int t = interval_t_parameter_no_zero(m, delta);
    if (t < 3 || t > m - 3)
        throw DeltaOutOfRange("interval parameter t = " + std::to_string(t) +
                              " is outside [3, m-3]");
    const int t_prime = delta == binomial_sum(m, 0, t - 1) ? m - t + 1 : m - t;

    const BooleanFunction f = interval_support(field, 0, delta).characteristic();
    ConstructionResult res =
        direct_sum_code(field, simplex_functions(field), 1, VectorialFunction{&field, {f}});
    res.provenance = "simplex-plus-interval-function";

    const double pi = std::acos(-1.0);
    const double analytic =
        std::ldexp(1.0, m - 1) - 1.0 - std::log(2.0) / pi * (m + 1) * std::sqrt(std::ldexp(1.0, m));
    const long long ai_term = (long long)(binomial_sum(m - 1, 0, t - 2) +
                                          binomial_sum(m - 1, 0, t_prime - 2));
    const long long inner = std::max(ai_term, std::max<long long>(0, guarded_ceil(analytic)));
    res.claimed_bounds.push_back({"single-f", std::min<long long>((long long)delta, inner)});
    return res;
}

LinearCode reference_pairsum_code(const FieldSpec& field) {
    const int m = field.m();
    LinearCode c;
    c.n = m * (m + 1) / 2;
    c.k = m;
    for (int b = 0; b < m; ++b) {
        const std::uint32_t a = field.alpha_pow(b);
        BitVec row(std::size_t(c.n));
        std::size_t col = 0;
        for (int i = 0; i < m; ++i, ++col)
            if (field.trace(field.mul(a, field.alpha_pow(i)))) row.set(col);
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j, ++col)
                if (field.trace(field.mul(a, field.alpha_pow(i) ^ field.alpha_pow(j))))
                    row.set(col);
        c.rows.push_back(std::move(row));
    }
    if (gf2_rank(c.rows) != m) throw Error("pair-sum reference code dropped rank");
    return c;
}

VectorialFunction vecfun_equal_blocks(const FieldSpec& field, int r) {
    const int m = field.m();
    if (r < 1 || r >= m) throw BadParams("need 1 <= r < m");
    const std::uint32_t block = std::uint32_t(1) << (m - r);
    std::vector<std::uint32_t> breakpoints{0};
    breakpoints.push_back(block - 1);
    for (std::uint32_t i = 2; i <= (std::uint32_t(1) << r); ++i)
        breakpoints.push_back(block - 1 + (i - 1) * block);
    return partition_vectorial(field, breakpoints);
}

bool simplex_vecfun_gate(int m, int r) {
    return std::uint64_t(m) * m + m + 2 <= (std::uint64_t(1) << (m - r + 1));
}

VectorialFunction example_vectorial_function(const FieldSpec& field) {
    if (field.m() != 7) throw BadParams("the worked example lives on GF(2^7)");
    BooleanFunction f1 = interval_support(field, 63, 64).characteristic();
    BooleanFunction f2 = interval_support(field, 31, 32).characteristic();
    f2.tt |= interval_support(field, 95, 32).mask;
    return VectorialFunction{&field, {f1, f2}};
}

}  // namespace mincodes
