#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "mincodes/errors.hpp"

namespace mincodes {

std::uint64_t binomial(int n, int k);
// sum_{i=lo}^{hi} C(m, i); empty when lo > hi, indices clamped to [0, m]
std::uint64_t binomial_sum(int m, int lo, int hi);

struct BoundReport {
    std::string name;
    long long value = 0;
    std::map<std::string, long long> inputs;
};

// sum_{i=0}^{t-tau-1} C(m-tau, i): weight floor for the product of a set's
// characteristic function (AI = t) with a degree-tau function.
BoundReport lb_annihilator_weight(int m, int t, int tau);

// ceil((delta-1)/2 - (sqrt(q)/(2 pi)) ln(4(q-1)/pi)), clamped to >= 0.
// The ceiling is nudged down 2 ulps first so exact-integer arguments do not
// round up spuriously.
BoundReport gauss_log_bound(int m, std::uint64_t delta);

struct SinSumCheck {
    double lhs = 0;
    double rhs = 0;
    bool pass = false;
};
// sum_{j=1}^{2^{m-1}-1} 1/sin(pi j/(q-1)) <= ((q-1)/(2 pi)) ln(4(q-1)/pi)
SinSumCheck sin_sum_check(int m);

// 2^{r-1} sum_{i=0}^{t-tau-1} C(m,i) + 2^{r-1} sum_{i=t-2tau}^{t-tau-1} C(m-tau,i),
// the lower index clamped to 0; requires t > tau >= 1.
BoundReport upsilon(int m, int r, int t, int tau);

// 2 sum_{i=0}^{ai-2} C(m-1, i)
BoundReport nl1_bound(int m, int ai);

// sum_{i=0}^{t-2} C(m-1,i) + floor((wt_f - 2^{m-1})/2); requires t >= 3 and
// wt_f >= 2^{m-1}.
BoundReport lb_cor_supp_f(int m, int t, std::uint64_t wt_f);

// The t with sum_{i=1}^{t-1} C(m,i) <= delta < sum_{i=1}^{t} C(m,i); this is
// AI([h;delta] with 0 adjoined). Requires 1 <= delta <= 2^m - 1.
int interval_t_parameter(int m, std::uint64_t delta);

// The t with sum_{i=0}^{t-1} C(m,i) <= delta < sum_{i=0}^{t} C(m,i), i.e.
// AI([h;delta]) without 0.
int interval_t_parameter_no_zero(int m, std::uint64_t delta);

}  // namespace mincodes
