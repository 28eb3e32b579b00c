#include "mincodes/bounds.hpp"

#include <cmath>
#include <string>

namespace mincodes {

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * std::uint64_t(n - k + i) / std::uint64_t(i);
    return r;
}

std::uint64_t binomial_sum(int m, int lo, int hi) {
    std::uint64_t s = 0;
    for (int i = std::max(lo, 0); i <= std::min(hi, m); ++i) s += binomial(m, i);
    return s;
}

BoundReport lb_annihilator_weight(int m, int t, int tau) {
    if (!(0 <= tau && tau < t && t <= m))
        throw BadParams("need 0 <= tau < t <= m");
    BoundReport r;
    r.name = "annihilator-weight";
    r.inputs = {{"m", m}, {"t", t}, {"tau", tau}};
    r.value = (long long)binomial_sum(m - tau, 0, t - tau - 1);
    return r;
}

namespace {
long long guarded_ceil(double x) {
    // two ulps of slack so values that are integers in exact arithmetic do
    // not tip over the ceiling
    return (long long)std::ceil(std::nextafter(std::nextafter(x, -1e30), -1e30));
}
}  // namespace

BoundReport gauss_log_bound(int m, std::uint64_t delta) {
    const double q = std::ldexp(1.0, m);
    const double term =
        (double(delta) - 1.0) / 2.0 -
        std::sqrt(q) / (2.0 * std::acos(-1.0)) * std::log(4.0 * (q - 1.0) / std::acos(-1.0));
    BoundReport r;
    r.name = "gauss-log";
    r.inputs = {{"m", m}, {"delta", (long long)delta}};
    r.value = std::max<long long>(0, guarded_ceil(term));
    return r;
}

SinSumCheck sin_sum_check(int m) {
    if (m < 2 || m > 16) throw BadParams("m must be in [2, 16]");
    const double pi = std::acos(-1.0);
    const double q = std::ldexp(1.0, m);
    SinSumCheck c;
    for (std::uint64_t j = 1; j < (std::uint64_t(1) << (m - 1)); ++j)
        c.lhs += 1.0 / std::sin(pi * double(j) / (q - 1.0));
    c.rhs = (q - 1.0) / (2.0 * pi) * std::log(4.0 * (q - 1.0) / pi);
    c.pass = c.lhs <= c.rhs;
    return c;
}

BoundReport upsilon(int m, int r, int t, int tau) {
    if (!(t > tau && tau >= 1) || r < 1 || m < 1)
        throw BadParams("need t > tau >= 1, r >= 1");
    BoundReport b;
    b.name = "upsilon";
    b.inputs = {{"m", m}, {"r", r}, {"t", t}, {"tau", tau}};
    const std::uint64_t half = std::uint64_t(1) << (r - 1);
    b.value = (long long)(half * binomial_sum(m, 0, t - tau - 1) +
                          half * binomial_sum(m - tau, std::max(t - 2 * tau, 0), t - tau - 1));
    return b;
}

BoundReport nl1_bound(int m, int ai) {
    if (ai < 1) throw BadParams("need ai >= 1");
    BoundReport b;
    b.name = "nl1";
    b.inputs = {{"m", m}, {"ai", ai}};
    b.value = (long long)(2 * binomial_sum(m - 1, 0, ai - 2));
    return b;
}

BoundReport lb_cor_supp_f(int m, int t, std::uint64_t wt_f) {
    const std::uint64_t half_space = std::uint64_t(1) << (m - 1);
    if (t < 3) throw BadParams("need t >= 3");
    if (wt_f < half_space) throw BadParams("need wt(f) >= 2^{m-1}");
    BoundReport b;
    b.name = "supp-f";
    b.inputs = {{"m", m}, {"t", t}, {"wt_f", (long long)wt_f}};
    b.value = (long long)(binomial_sum(m - 1, 0, t - 2) + (wt_f - half_space) / 2);
    return b;
}

int interval_t_parameter(int m, std::uint64_t delta) {
    // delta = 2^m - 1 would adjoin 0 to the whole multiplicative group
    if (delta < 1 || delta > (std::uint64_t(1) << m) - 2)
        throw BadSize("delta out of range [1, 2^m - 2]");
    int t = 1;
    while (t < m && binomial_sum(m, 1, t) <= delta) ++t;
    return t;
}

int interval_t_parameter_no_zero(int m, std::uint64_t delta) {
    if (delta < 1 || delta > (std::uint64_t(1) << m) - 1)
        throw BadSize("delta out of range [1, 2^m - 1]");
    int t = 0;
    while (t < m && binomial_sum(m, 0, t) <= delta) ++t;
    return t;
}

}  // namespace mincodes
