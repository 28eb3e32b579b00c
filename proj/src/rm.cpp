#include "mincodes/rm.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "mincodes/bounds.hpp"

namespace mincodes {

namespace {

// expand prod (X - beta^s) over the given exponents s; coefficients must
// land in GF(2)
BinaryPolynomial expand_root_product(const FieldSpec& field, std::uint32_t beta_exponent,
                                     const std::vector<std::uint32_t>& exponents) {
    const std::uint64_t n = field.group_order();
    std::vector<std::uint32_t> coeff{1};  // constant polynomial 1
    coeff.reserve(exponents.size() + 1);
    for (std::uint32_t s : exponents) {
        const std::uint32_t root = field.antilog(std::uint32_t((std::uint64_t(beta_exponent) * s) % n));
        coeff.push_back(0);
        for (std::size_t i = coeff.size() - 1; i > 0; --i)
            coeff[i] = coeff[i - 1] ^ field.mul(root, coeff[i]);
        coeff[0] = field.mul(root, coeff[0]);
    }
    BinaryPolynomial p;
    for (std::size_t i = 0; i < coeff.size(); ++i) {
        if (coeff[i] > 1)
            throw Error("root product has a coefficient outside GF(2)");
        if (coeff[i]) p.set_coeff(int(i), true);
    }
    return p;
}

void require_primitive_exponent(const FieldSpec& field, std::uint32_t e) {
    if (std::gcd(e, field.group_order()) != 1)
        throw BadParams("exponent " + std::to_string(e) + " is not coprime to 2^m - 1");
}

}  // namespace

BinaryPolynomial prm_generator_poly(const FieldSpec& field, int ell, std::uint32_t beta_exponent) {
    const int m = field.m();
    if (ell < 0 || ell > m - 1) throw BadOrder("order must be in [0, m-1]");
    require_primitive_exponent(field, beta_exponent);

    std::vector<std::uint32_t> exponents;
    for (std::uint32_t s = 1; s < field.field_size(); ++s)
        if (std::popcount(s) <= m - 1 - ell) exponents.push_back(s);

    BinaryPolynomial g = expand_root_product(field, beta_exponent, exponents);
    const int expected_degree = int(field.group_order() - binomial_sum(m, 0, ell));
    if (g.degree() != expected_degree) throw Error("generator polynomial degree mismatch");
    if (!BinaryPolynomial::xn_minus_1(int(field.group_order())).divmod(g).rem.is_zero())
        throw Error("generator polynomial does not divide X^n - 1");
    return g;
}

BinaryPolynomial srm_generator_poly(const FieldSpec& field, int ell, std::uint32_t beta_exponent) {
    BinaryPolynomial x_minus_1 = BinaryPolynomial::from_mask(0x3);  // X + 1
    return x_minus_1 * prm_generator_poly(field, ell, beta_exponent);
}

LinearCode subcode_c_epsilon(const FieldSpec& field, int epsilon, std::uint32_t beta_exponent) {
    const int m = field.m();
    const int n = int(field.group_order());
    if (epsilon < 1 || epsilon >= m * (m - 1) / 2)
        throw BadEpsilon("epsilon must be in [1, m(m-1)/2)");
    const BinaryPolynomial gstar = srm_generator_poly(field, 2, beta_exponent);
    LinearCode c;
    c.n = n;
    c.k = epsilon;
    for (int i = 0; i < epsilon; ++i)
        c.rows.push_back(gstar.shifted(i).mod_xn_minus_1(n).coefficient_vector(std::size_t(n)));
    for (int i = 0; i < n; ++i)
        c.coordinate_labels.push_back(
            field.antilog(std::uint32_t((std::uint64_t(beta_exponent) * std::uint32_t(i)) % field.group_order())));
    if (gf2_rank(c.rows) != epsilon) throw Error("cyclic shifts of g* collapsed in rank");
    return c;
}

BooleanFunction gold_function(const FieldSpec& field, int i, std::uint32_t a) {
    BooleanFunction f = zero_function(field);
    if (a == 0) return f;
    const std::uint64_t n = field.group_order();
    const std::uint64_t exp_factor = (std::uint64_t(1) << i) + 1;
    const std::uint32_t la = field.log(a);
    for (std::uint64_t j = 0; j < n; ++j)
        if (field.trace_of_exponent(std::uint32_t((la + exp_factor * j) % n))) f.tt.set(std::size_t(j) + 1);
    return f;
}

BooleanFunction gold_function_subfield(const FieldSpec& field, std::uint32_t a) {
    const int m = field.m();
    if (m % 2 != 0) throw BadParams("subfield quadratic form needs even m");
    BooleanFunction f = zero_function(field);
    if (a == 0) return f;
    const std::uint64_t n = field.group_order();
    const std::uint64_t exp_factor = (std::uint64_t(1) << (m / 2)) + 1;
    for (std::uint64_t j = 0; j < n; ++j) {
        const std::uint32_t norm = field.antilog(std::uint32_t((exp_factor * j) % n));
        if (field.subfield_trace(m / 2, field.mul(a, norm))) f.tt.set(std::size_t(j) + 1);
    }
    return f;
}

std::vector<BooleanFunction> quad_odd_functions(const FieldSpec& field) {
    const int m = field.m();
    if (m < 3) throw BadParams("need m >= 3");
    if (m % 2 == 0) throw EvenM("the pure quadratic code is not minimal for even m");
    std::vector<BooleanFunction> funcs;
    for (int i = 1; i <= (m - 1) / 2; ++i)
        for (int b = 0; b < m; ++b)
            funcs.push_back(gold_function(field, i, field.alpha_pow(b)));
    return funcs;
}

std::vector<BooleanFunction> quad_mixed_functions(const FieldSpec& field) {
    const int m = field.m();
    if (m < 3) throw BadParams("need m >= 3");
    std::vector<BooleanFunction> funcs;
    for (int i = 2; i <= m / 2; ++i) {
        if (m % 2 == 0 && i == m / 2) {
            // the top Gold exponent collapses onto the subfield GF(2^{m/2}):
            // sweep a subfield basis under the half trace
            const std::uint32_t beta =
                field.alpha_pow(std::int64_t(field.group_order() / ((1u << (m / 2)) - 1)));
            std::uint32_t b = 1;
            for (int j = 0; j < m / 2; ++j) {
                funcs.push_back(gold_function_subfield(field, b));
                b = field.mul(b, beta);
            }
        } else {
            for (int b = 0; b < m; ++b)
                funcs.push_back(gold_function(field, i, field.alpha_pow(b)));
        }
    }
    for (int b = 0; b < m; ++b) funcs.push_back(trace_function(field, field.alpha_pow(b)));
    return funcs;
}

SupportSet nonzero_points(const FieldSpec& field) {
    SupportSet s{&field, BitVec(field.field_size()).complement()};
    s.mask.set(0, false);
    return s;
}

namespace {

LinearCode quad_code(const FieldSpec& field, const std::vector<BooleanFunction>& funcs) {
    const SupportSet coords = nonzero_points(field);
    LinearCode c = code_from_functions(field, funcs, &coords);
    const int m = field.m();
    if (c.k != m * (m - 1) / 2)
        throw Error("quadratic code rank " + std::to_string(c.k) + " != m(m-1)/2");
    return c;
}

}  // namespace

LinearCode quad_code_odd(const FieldSpec& field) {
    return quad_code(field, quad_odd_functions(field));
}

LinearCode quad_code_mixed(const FieldSpec& field) {
    return quad_code(field, quad_mixed_functions(field));
}

std::vector<BooleanFunction> rm_monomial_functions(const FieldSpec& field, int ell) {
    const int m = field.m();
    if (ell < 0 || ell > m) throw BadOrder("order must be in [0, m]");
    std::vector<std::uint32_t> mono;
    for (std::uint32_t s = 0; s < field.field_size(); ++s)
        if (std::popcount(s) <= ell) mono.push_back(s);
    std::stable_sort(mono.begin(), mono.end(), [](std::uint32_t a, std::uint32_t b) {
        const int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    std::vector<BooleanFunction> funcs;
    for (std::uint32_t s : mono) {
        BooleanFunction f = zero_function(field);
        for (std::size_t j = 0; j < field.field_size(); ++j)
            if ((field.point(j) & s) == s) f.tt.set(j);
        funcs.push_back(std::move(f));
    }
    return funcs;
}

LinearCode rm_code(const FieldSpec& field, int ell) {
    return code_from_functions(field, rm_monomial_functions(field, ell));
}

LinearCode prm_code(const FieldSpec& field, int ell) {
    LinearCode full = rm_code(field, ell);
    BitVec keep(std::size_t(full.n));
    for (int j = 1; j < full.n; ++j) keep.set(std::size_t(j));
    return puncture(full, keep);
}

LinearCode srm_code(const FieldSpec& field, int ell) {
    LinearCode full = rm_code(field, ell);
    BitVec drop(std::size_t(full.n));
    drop.set(0);
    return shorten(full, drop);
}

std::vector<BooleanFunction> srm2_trace_form_basis(const FieldSpec& field) {
    const int m = field.m();
    std::vector<BooleanFunction> funcs;
    for (int i = 1; i <= m / 2; ++i) {
        if (m % 2 == 0 && i == m / 2) {
            const std::uint32_t beta =
                field.alpha_pow(std::int64_t(field.group_order() / ((1u << (m / 2)) - 1)));
            std::uint32_t b = 1;
            for (int j = 0; j < m / 2; ++j) {
                funcs.push_back(gold_function_subfield(field, b));
                b = field.mul(b, beta);
            }
        } else {
            for (int b = 0; b < m; ++b)
                funcs.push_back(gold_function(field, i, field.alpha_pow(b)));
        }
    }
    for (int b = 0; b < m; ++b) funcs.push_back(trace_function(field, field.alpha_pow(b)));
    return funcs;
}

}  // namespace mincodes
