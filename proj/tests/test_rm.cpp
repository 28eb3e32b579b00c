#include <doctest.h>

#include <bit>

#include "mincodes/bounds.hpp"
#include "mincodes/rm.hpp"

using namespace mincodes;

TEST_CASE("punctured generator polynomial basics") {
    const FieldSpec f5 = build_field(5, BinaryPolynomial::from_mask(0x29));
    CHECK(prm_generator_poly(f5, 4) == BinaryPolynomial::one());  // empty product

    const BinaryPolynomial g = prm_generator_poly(f5, 2);
    CHECK(g.degree() == 15);  // 31 - (1 + 5 + 10)

    // vanishes at alpha^s for the low-weight exponents, not at weight m-ell
    for (std::uint32_t s = 1; s < 32; ++s) {
        const std::uint32_t val = evaluate(g, f5, f5.alpha_pow(s));
        if (std::popcount(s) <= 2) CHECK(val == 0);
        if (std::popcount(s) == 3) CHECK(val != 0);
    }

    // generator times check polynomial recovers X^n - 1 exactly
    const auto dm = BinaryPolynomial::xn_minus_1(31).divmod(g);
    CHECK(dm.rem.is_zero());
    CHECK(dm.quot * g == BinaryPolynomial::xn_minus_1(31));

    CHECK_THROWS_AS(prm_generator_poly(f5, 5), BadOrder);
    CHECK_THROWS_AS(prm_generator_poly(f5, -1), BadOrder);
    // exponent not coprime to 2^m - 1
    CHECK_THROWS_AS(prm_generator_poly(build_field(4), 1, 3), BadParams);
}

TEST_CASE("shortened generator polynomials reproduce the worked examples") {
    const FieldSpec f5 = build_field(5, BinaryPolynomial::from_mask(0x29));
    const BinaryPolynomial g5 = srm_generator_poly(f5, 2);
    CHECK(g5.to_string() == "X^16 + X^12 + X^11 + X^10 + X^9 + X^4 + X + 1");
    CHECK(g5.weight() == 8);

    const FieldSpec f6a = build_field(6, BinaryPolynomial::from_mask(0x6D));
    const BinaryPolynomial g6a = srm_generator_poly(f6a, 2);
    CHECK(g6a.weight() == 24);
    CHECK((BinaryPolynomial::from_mask(0x3) * g6a).weight() == 16);

    const FieldSpec f6b = build_field(6, BinaryPolynomial::from_mask(0x73));
    const BinaryPolynomial g6b = srm_generator_poly(f6b, 2);
    CHECK(g6b.weight() == 24);
    CHECK((BinaryPolynomial::from_mask(0x3) * g6b).weight() == 28);

    // (X-1) g divides X^n - 1 as well
    CHECK(BinaryPolynomial::xn_minus_1(31).divmod(g5).rem.is_zero());
}

TEST_CASE("shortened generator polynomial is conjugation invariant") {
    const FieldSpec f5 = build_field(5);
    for (const auto& cl : primitive_conjugacy_classes(f5)) {
        const BinaryPolynomial first = srm_generator_poly(f5, 2, cl[0]);
        for (std::uint32_t e : cl) CHECK(srm_generator_poly(f5, 2, e) == first);
    }
}

TEST_CASE("cyclic-shift subcode of the shortened second-order code") {
    const FieldSpec f5 = build_field(5, BinaryPolynomial::from_mask(0x29));
    const BinaryPolynomial gstar = srm_generator_poly(f5, 2);

    const LinearCode c1 = subcode_c_epsilon(f5, 1);
    CHECK(c1.k == 1);
    CHECK(c1.rows[0] == gstar.coefficient_vector(31));
    CHECK(min_distance(c1) == 8);  // the generator weight

    for (int eps : {2, 5, 9}) CHECK(subcode_c_epsilon(f5, eps).k == eps);
    CHECK_THROWS_AS(subcode_c_epsilon(f5, 0), BadEpsilon);
    CHECK_THROWS_AS(subcode_c_epsilon(f5, 10), BadEpsilon);

    // rows live in the shortened second-order code, built independently from
    // the quadratic trace forms
    const auto basis_funcs = srm2_trace_form_basis(f5);
    const SupportSet star = nonzero_points(f5);
    const LinearCode srm2 = code_from_functions(f5, basis_funcs, &star);
    CHECK(srm2.k == 15);  // m(m+1)/2
    const LinearCode c9 = subcode_c_epsilon(f5, 9);
    for (const BitVec& row : c9.rows) CHECK(row_space_contains(srm2.rows, row));

    // and the trace-form construction matches the monomial construction
    const LinearCode srm2_monomial = srm_code(f5, 2);
    for (const BitVec& row : srm2.rows) CHECK(row_space_contains(srm2_monomial.rows, row));
    for (const BitVec& row : srm2_monomial.rows) CHECK(row_space_contains(srm2.rows, row));
}

TEST_CASE("pure quadratic code, odd m") {
    const FieldSpec f5 = build_field(5);
    const LinearCode c = quad_code_odd(f5);
    CHECK(c.n == 31);
    CHECK(c.k == 10);  // m(m-1)/2

    const WeightDistribution d = weight_distribution(c);
    CHECK(d.counts.count(8) == 0);    // 2^{m-2}
    CHECK(d.counts.count(24) == 0);   // 3 2^{m-2}
    CHECK(d.min_nonzero_weight() >= 12);
    CHECK(d.max_weight() <= 20);
    CHECK(is_minimal_ab(c).verdict == Verdict::Minimal);

    CHECK_THROWS_AS(quad_code_odd(build_field(4)), EvenM);
    CHECK_THROWS_AS(quad_code_odd(build_field(6)), EvenM);

    const LinearCode c3 = quad_code_odd(build_field(3));
    CHECK(c3.k == 3);
    CHECK(weight_distribution(c3).counts == std::map<int, std::uint64_t>{{0, 1}, {4, 7}});
}

TEST_CASE("quadratic-plus-linear code, any m") {
    const FieldSpec f5 = build_field(5);
    const LinearCode c5 = quad_code_mixed(f5);
    CHECK(c5.k == 10);
    CHECK(is_minimal_ab(c5).verdict == Verdict::Minimal);

    const FieldSpec f6 = build_field(6);
    const LinearCode c6 = quad_code_mixed(f6);
    CHECK(c6.n == 63);
    CHECK(c6.k == 15);
    const WeightDistribution d6 = weight_distribution(c6);
    CHECK(d6.counts.count(16) == 0);
    CHECK(d6.counts.count(48) == 0);
    CHECK(d6.min_nonzero_weight() >= 24);
    CHECK(d6.max_weight() <= 40);
    CHECK(is_minimal_ab(c6).verdict == Verdict::Minimal);

    const LinearCode c4 = quad_code_mixed(build_field(4));
    CHECK(c4.k == 6);
    CHECK(is_minimal_ab(c4).verdict == Verdict::Minimal);
}

TEST_CASE("minimum weights of the RM family at desk scale") {
    for (int m : {3, 4, 5}) {
        const FieldSpec f = build_field(m);
        for (int ell = 1; ell <= 2 && ell < m; ++ell) {
            CHECK(min_distance(rm_code(f, ell)) == (1 << (m - ell)));
            CHECK(min_distance(prm_code(f, ell)) == (1 << (m - ell)) - 1);
            CHECK(min_distance(srm_code(f, ell)) == (1 << (m - ell)));
        }
    }
}

TEST_CASE("minimum-weight words of the shortened code are flats avoiding zero") {
    for (int m : {4, 5}) {
        const FieldSpec f = build_field(m);
        for (int ell = 1; ell <= 2; ++ell) {
            const LinearCode srm = srm_code(f, ell);
            const int w = 1 << (m - ell);
            enumerate_codewords(srm, [&](const BitVec& cw) {
                if (cw.count() != std::size_t(w)) return;
                // support as field values; must be a coset of a subspace
                std::vector<std::uint32_t> vals;
                cw.for_each_set([&](std::size_t col) {
                    vals.push_back(srm.coordinate_labels[col]);
                });
                for (std::uint32_t v : vals) CHECK(v != 0);
                // translate by the first point: the result must be a subspace
                BitVec translated(f.field_size());
                for (std::uint32_t v : vals) translated.set(v ^ vals[0]);
                for (std::uint32_t a : vals)
                    for (std::uint32_t b : vals)
                        CHECK(translated.get((a ^ vals[0]) ^ (b ^ vals[0])));
            });
        }
    }
}
