#include <doctest.h>

#include "mincodes/bounds.hpp"

using namespace mincodes;

TEST_CASE("binomials") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(16, 8) == 12870);
    CHECK(binomial_sum(5, 0, 1) == 6);
    CHECK(binomial_sum(5, 1, 2) == 15);
    CHECK(binomial_sum(5, 3, 1) == 0);  // empty range
    CHECK(binomial_sum(8, 0, 8) == 256);
}

TEST_CASE("annihilator product weight floor") {
    CHECK(lb_annihilator_weight(8, 3, 2).value == 1);  // single term C(6,0)
    CHECK(lb_annihilator_weight(8, 3, 1).value == 8);  // 1 + 7
    CHECK(lb_annihilator_weight(8, 5, 2).value == 1 + 6 + 15);
    CHECK_THROWS_AS(lb_annihilator_weight(8, 3, 3), BadParams);
    CHECK_THROWS_AS(lb_annihilator_weight(8, 9, 1), BadParams);

    // monotone in t
    for (int t = 2; t < 8; ++t)
        CHECK(lb_annihilator_weight(8, t, 1).value <= lb_annihilator_weight(8, t + 1, 1).value);
}

TEST_CASE("gauss-log term at the plotted anchors") {
    CHECK(gauss_log_bound(8, 46).value == 8);
    CHECK(gauss_log_bound(8, 47).value == 9);
    CHECK(gauss_log_bound(8, 48).value == 9);
    CHECK(gauss_log_bound(8, 49).value == 10);
    CHECK(gauss_log_bound(8, 36).value == 3);  // the curve's 8 comes from the AI term
    CHECK(gauss_log_bound(8, 5).value == 0);   // clamped
}

TEST_CASE("sine sum versus the logarithmic envelope") {
    // The printed inequality fails numerically for every m in range: the sum
    // exceeds ((q-1)/(2 pi)) ln(4(q-1)/pi) by a factor between 1 and 2.
    // Doubling the constant (i.e. (q-1)/pi) restores it. Frozen as computed.
    for (int m = 2; m <= 16; ++m) {
        const SinSumCheck c = sin_sum_check(m);
        CHECK(!c.pass);
        CHECK(c.lhs > c.rhs);
        CHECK(c.lhs < 2 * c.rhs);
    }
    CHECK_THROWS_AS(sin_sum_check(1), BadParams);
    CHECK_THROWS_AS(sin_sum_check(17), BadParams);
}

TEST_CASE("nonlinearity bounds") {
    CHECK(nl1_bound(9, 1).value == 0);  // empty sum
    CHECK(nl1_bound(9, 3).value == 18);  // 2 (1 + 8)
    CHECK_THROWS_AS(nl1_bound(9, 0), BadParams);

    // at r = tau = 1 the general bound collapses to the first-order one
    for (int m = 4; m <= 16; ++m)
        for (int t = 2; t <= (m + 1) / 2; ++t)
            CHECK(upsilon(m, 1, t, 1).value == nl1_bound(m, t).value);

    CHECK_THROWS_AS(upsilon(8, 1, 1, 1), BadParams);  // needs t > tau
    CHECK(upsilon(8, 2, 3, 1).value == 2 * binomial_sum(8, 0, 1) + 2 * binomial_sum(7, 1, 1));
    // lower summation index clamps at zero
    CHECK(upsilon(8, 1, 3, 2).value == binomial_sum(8, 0, 0) + binomial_sum(6, 0, 0));
}

TEST_CASE("support-size distance bound") {
    // balanced: reduces to the binomial sum
    CHECK(lb_cor_supp_f(7, 3, 64).value == (long long)binomial_sum(6, 0, 1));
    // odd m with optimal immunity t = ceil(m/2)
    CHECK(lb_cor_supp_f(7, 4, 64).value == (long long)binomial_sum(6, 0, 2));
    CHECK(lb_cor_supp_f(7, 3, 70).value == (long long)binomial_sum(6, 0, 1) + 3);
    CHECK_THROWS_AS(lb_cor_supp_f(7, 2, 64), BadParams);
    CHECK_THROWS_AS(lb_cor_supp_f(7, 3, 63), BadParams);
}

TEST_CASE("interval parameters") {
    CHECK(interval_t_parameter(8, 47) == 3);
    CHECK(interval_t_parameter(8, 92) == 4);
    CHECK(interval_t_parameter(8, 218) == 6);
    CHECK(interval_t_parameter(8, 254) == 8);
    CHECK(interval_t_parameter(5, 15) == 3);
    CHECK_THROWS_AS(interval_t_parameter(5, 31), BadSize);

    CHECK(interval_t_parameter_no_zero(8, 93) == 4);   // breakpoint exactly
    CHECK(interval_t_parameter_no_zero(8, 92) == 3);
    CHECK(interval_t_parameter_no_zero(5, 31) == 5);   // whole multiplicative group
    CHECK(interval_t_parameter_no_zero(5, 1) == 1);
}
