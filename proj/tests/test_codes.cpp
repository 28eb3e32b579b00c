#include <doctest.h>

#include <random>

#include "mincodes/constructions.hpp"

using namespace mincodes;

namespace {

std::mt19937 rng(0xc0de5);

SupportSet random_support(const FieldSpec& f, double density) {
    SupportSet s{&f, BitVec(f.field_size())};
    std::bernoulli_distribution coin(density);
    for (std::size_t j = 0; j < f.field_size(); ++j)
        if (coin(rng)) s.mask.set(j);
    return s;
}

LinearCode code_from_rows(int n, const std::vector<std::vector<int>>& bit_lists) {
    LinearCode c;
    c.n = n;
    for (const auto& bits : bit_lists) {
        BitVec row{std::size_t(n)};
        for (int b : bits) row.set(std::size_t(b));
        c.rows.push_back(row);
    }
    c.k = int(c.rows.size());
    return c;
}

}  // namespace

TEST_CASE("evaluation codes from functions") {
    const FieldSpec f = build_field(5);
    const SupportSet star = nonzero_points(f);
    const LinearCode simplex = code_from_functions(f, simplex_functions(f), &star);
    CHECK(simplex.n == 31);
    CHECK(simplex.k == 5);
    CHECK(!simplex.rank_collapsed);
    enumerate_codewords(simplex, [&](const BitVec& cw) {
        if (cw.any()) CHECK(cw.count() == 16);  // constant-weight code
    });

    const LinearCode one = code_from_functions(f, {trace_function(f, 1)}, &star);
    CHECK(one.k == 1);

    const LinearCode dup =
        code_from_functions(f, {trace_function(f, 1), trace_function(f, 1)}, &star);
    CHECK(dup.k == 1);
    CHECK(dup.rank_collapsed);
}

TEST_CASE("weight distributions") {
    const FieldSpec f4 = build_field(4);
    const SupportSet star = nonzero_points(f4);
    const WeightDistribution simplex = weight_distribution(code_from_functions(
        f4, simplex_functions(f4), &star));
    CHECK(simplex.counts == std::map<int, std::uint64_t>{{0, 1}, {8, 15}});

    const FieldSpec f3 = build_field(3);
    const WeightDistribution rm13 = weight_distribution(rm_code(f3, 1));
    CHECK(rm13.counts == std::map<int, std::uint64_t>{{0, 1}, {4, 14}, {8, 1}});
    CHECK(rm13.total() == 16);
    CHECK(rm13.min_nonzero_weight() == 4);
    CHECK(rm13.max_weight() == 8);

    LinearCode big;
    big.n = 30;
    big.k = 27;
    CHECK_THROWS_AS(weight_distribution(big), TooLarge);
}

TEST_CASE("exact minimality") {
    const FieldSpec f = build_field(5);
    const SupportSet star = nonzero_points(f);
    CHECK(is_minimal_exact(code_from_functions(f, simplex_functions(f), &star)).verdict ==
          Verdict::Minimal);

    const LinearCode bad = code_from_rows(4, {{0, 1}, {0}});
    const MinimalityReport rep = is_minimal_exact(bad);
    CHECK(rep.verdict == Verdict::NotMinimal);
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->first.is_subset_of(rep.witness->second));
    CHECK(rep.witness->first != rep.witness->second);
    CHECK(rep.witness->first.any());

    CHECK(is_minimal_exact(code_half_pascal(f).code).verdict == Verdict::Minimal);

    LinearCode big;
    big.n = 20;
    big.k = 17;
    CHECK_THROWS_AS(is_minimal_exact(big), TooLarge);
}

TEST_CASE("sufficient weight-ratio condition") {
    const FieldSpec f = build_field(5);
    const SupportSet star = nonzero_points(f);
    CHECK(is_minimal_ab(code_from_functions(f, simplex_functions(f), &star)).verdict ==
          Verdict::Minimal);  // w_min = w_max

    CHECK(is_minimal_ab(quad_code_odd(f)).verdict == Verdict::Minimal);  // 12..20

    // weights 4 and 9 with disjoint supports: 2*4 <= 13, inconclusive
    const LinearCode mixed = code_from_rows(13, {{0, 1, 2, 3}, {4, 5, 6, 7, 8, 9, 10, 11, 12}});
    CHECK(is_minimal_ab(mixed).verdict == Verdict::Unknown);
}

TEST_CASE("weight-ratio verdicts are sound on random codes") {
    std::bernoulli_distribution coin(0.5);
    for (int trial = 0; trial < 60; ++trial) {
        LinearCode c;
        c.n = 12;
        std::vector<BitVec> rows;
        for (int r = 0; r < 4; ++r) {
            BitVec row(12);
            for (int i = 0; i < 12; ++i)
                if (coin(rng)) row.set(std::size_t(i));
            rows.push_back(row);
        }
        c.rows = independent_subset(rows);
        c.k = int(c.rows.size());
        if (c.k == 0) continue;
        if (is_minimal_ab(c).verdict == Verdict::Minimal)
            CHECK(is_minimal_exact(c).verdict == Verdict::Minimal);
    }
}

TEST_CASE("annihilator criterion for punctured codes") {
    const FieldSpec f = build_field(5);
    const auto simplex = simplex_functions(f);

    // AI([0;15] with 0) = 3, so the punctured Simplex survives
    const SupportSet d15 = interval_support(f, 0, 15);
    CHECK(annihilator_minimality_criterion(f, simplex, d15).verdict == Verdict::Minimal);

    const FieldSpec f3 = build_field(3);
    SupportSet pt{&f3, BitVec(f3.field_size())};
    pt.mask.set(1);
    const MinimalityReport rep = annihilator_minimality_criterion(f3, simplex_functions(f3), pt);
    CHECK(rep.verdict == Verdict::NotMinimal);
    CHECK(!rep.dimension_preserved);
}

TEST_CASE("annihilator criterion matches exact minimality of the punctured code") {
    for (int m : {4, 5, 6}) {
        const FieldSpec f = build_field(m);
        const auto simplex = simplex_functions(f);
        for (int trial = 0; trial < 40; ++trial) {
            // random minimal base: a subset of the Simplex rows (subcodes of a
            // minimal code stay minimal)
            std::vector<BooleanFunction> funcs;
            std::bernoulli_distribution coin(0.7);
            for (const BooleanFunction& g : simplex)
                if (coin(rng)) funcs.push_back(g);
            if (funcs.size() < 2) continue;

            const SupportSet D = random_support(f, trial % 2 ? 0.5 : 0.15);
            if (D.mask.none()) continue;
            const MinimalityReport fast = annihilator_minimality_criterion(f, funcs, D);
            const LinearCode punctured = code_from_functions(f, funcs, &D);
            const bool exact_minimal_full_rank =
                !punctured.rank_collapsed &&
                is_minimal_exact(punctured).verdict == Verdict::Minimal;
            CHECK((fast.verdict == Verdict::Minimal) == exact_minimal_full_rank);
            CHECK(fast.dimension_preserved == !punctured.rank_collapsed);
            if (fast.witness) {
                CHECK(fast.witness->first.is_subset_of(fast.witness->second));
                CHECK(fast.witness->first.any());
                CHECK(fast.witness->first != fast.witness->second);
            }
        }
    }
}

TEST_CASE("puncturing and shortening") {
    for (int m : {3, 4}) {
        const FieldSpec f = build_field(m);
        const LinearCode rm1 = rm_code(f, 1);

        BitVec keep(std::size_t(rm1.n));
        for (int j = 1; j < rm1.n; ++j) keep.set(std::size_t(j));
        const LinearCode prm_direct = puncture(rm1, keep);
        CHECK(prm_direct.n == (1 << m) - 1);
        CHECK(prm_direct.k == m + 1);

        // the cyclic generator produces the same row space
        const BinaryPolynomial g = prm_generator_poly(f, 1);
        std::vector<BitVec> cyclic_rows;
        for (int i = 0; i <= m; ++i)
            cyclic_rows.push_back(
                g.shifted(i).mod_xn_minus_1(prm_direct.n).coefficient_vector(std::size_t(prm_direct.n)));
        for (const BitVec& r : cyclic_rows) CHECK(row_space_contains(prm_direct.rows, r));
        for (const BitVec& r : prm_direct.rows) CHECK(row_space_contains(cyclic_rows, r));

        // shortening at the zero point drops one dimension
        const LinearCode srm1 = srm_code(f, 1);
        CHECK(srm1.n == (1 << m) - 1);
        CHECK(srm1.k == m);
        for (const BitVec& r : srm1.rows) CHECK(row_space_contains(prm_direct.rows, r));
    }

    const FieldSpec f4 = build_field(4);
    const LinearCode rm1 = rm_code(f4, 1);
    BitVec one_col(std::size_t(rm1.n));
    one_col.set(3);
    CHECK(puncture(rm1, one_col).k <= 1);
    CHECK_THROWS_AS(puncture(rm1, BitVec(std::size_t(rm1.n))), EmptyKeepSet);
}

TEST_CASE("shortening keeps exactly the codewords that vanish on the dropped set") {
    const FieldSpec f = build_field(4);
    const LinearCode rm2 = rm_code(f, 2);
    BitVec drop(std::size_t(rm2.n));
    drop.set(0);
    drop.set(5);
    const LinearCode s = shorten(rm2, drop);
    CHECK(s.n == rm2.n - 2);

    std::size_t vanishing = 0;
    enumerate_codewords(rm2, [&](const BitVec& cw) {
        if (!cw.get(0) && !cw.get(5)) ++vanishing;
    });
    CHECK(vanishing == (std::size_t(1) << s.k));
}

TEST_CASE("column masks from point sets") {
    const FieldSpec f = build_field(4);
    const SupportSet star = nonzero_points(f);
    const LinearCode c = code_from_functions(f, simplex_functions(f), &star);
    const BitVec cols = columns_for_points(c, interval_support(f, 0, 5));
    CHECK(cols.count() == 5);
    CHECK(cols.get(0));  // alpha^0 is the first nonzero point
    CHECK(cols.get(4));
    CHECK(!cols.get(5));
}
