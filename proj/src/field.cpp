#include "mincodes/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <string>

namespace mincodes {

namespace {

// Arithmetic in GF(2)[x] mod a degree-m polynomial, masks up to degree 16.
std::uint32_t mulmod_mask(std::uint32_t a, std::uint32_t b, std::uint32_t mod, int m) {
    std::uint32_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        b >>= 1;
        a <<= 1;
        if (a & (std::uint32_t(1) << m)) a ^= mod;
    }
    return r;
}

std::uint32_t powmod_mask(std::uint32_t a, std::uint64_t e, std::uint32_t mod, int m) {
    std::uint32_t r = 1;
    while (e) {
        if (e & 1) r = mulmod_mask(r, a, mod, m);
        a = mulmod_mask(a, a, mod, m);
        e >>= 1;
    }
    return r;
}

int mask_degree(std::uint32_t v) { return v ? 31 - std::countl_zero(v) : -1; }

std::uint32_t gcd_mask(std::uint32_t a, std::uint32_t b) {
    while (b) {
        int da = mask_degree(a);
        const int db = mask_degree(b);
        while (da >= db) {  // a mod b
            a ^= b << (da - db);
            da = mask_degree(a);
        }
        std::swap(a, b);
    }
    return a;
}

bool is_irreducible_mask(std::uint32_t poly, int m) {
    // x^{2^m} == x mod poly, and gcd(x^{2^{m/p}} - x, poly) = 1 for primes p | m
    std::uint32_t x2k = 2;  // x
    for (int i = 0; i < m; ++i) x2k = mulmod_mask(x2k, x2k, poly, m);
    if (x2k != 2) return false;
    for (int p = 2; p <= m; ++p) {
        if (m % p != 0) continue;
        bool prime = true;
        for (int d = 2; d * d <= p; ++d)
            if (p % d == 0) prime = false;
        if (!prime) continue;
        std::uint32_t t = 2;
        for (int i = 0; i < m / p; ++i) t = mulmod_mask(t, t, poly, m);
        if (gcd_mask(t ^ 2u, poly) != 1) return false;
    }
    return true;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
    std::vector<std::uint32_t> ps;
    for (std::uint32_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

bool root_is_primitive(std::uint32_t poly, int m) {
    const std::uint32_t n = (std::uint32_t(1) << m) - 1;
    if (powmod_mask(2, n, poly, m) != 1) return false;
    for (std::uint32_t p : prime_factors(n))
        if (powmod_mask(2, n / p, poly, m) == 1) return false;
    return true;
}

}  // namespace

std::uint32_t default_primitive_poly_mask(int m) {
    static std::map<int, std::uint32_t> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    for (std::uint32_t mask = (std::uint32_t(1) << m) | 1;
         mask < (std::uint32_t(1) << (m + 1)); mask += 2) {
        if (is_irreducible_mask(mask, m) && root_is_primitive(mask, m)) {
            cache[m] = mask;
            return mask;
        }
    }
    throw Error("no primitive polynomial found for m=" + std::to_string(m));
}

FieldSpec build_field(int m, std::optional<BinaryPolynomial> poly) {
    if (m < 2 || m > 16) throw BadParams("extension degree m must be in [2, 16]");
    if (!poly) poly = BinaryPolynomial::from_mask(default_primitive_poly_mask(m));
    if (poly->degree() != m)
        throw BadParams("polynomial degree " + std::to_string(poly->degree()) +
                        " does not match m=" + std::to_string(m));

    const std::uint32_t mask = std::uint32_t(poly->mask());
    if (!is_irreducible_mask(mask, m))
        throw NotIrreducible("polynomial " + poly->to_string() + " is reducible over GF(2)");
    if (!root_is_primitive(mask, m))
        throw NotPrimitive("polynomial " + poly->to_string() +
                           " is irreducible but its root is not primitive");

    FieldSpec f;
    f.m_ = m;
    f.poly_mask_ = mask;
    f.poly_ = *poly;

    const std::uint32_t n = f.group_order();
    f.antilog_.resize(n);
    f.log_.assign(f.field_size(), -1);
    std::uint32_t cur = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        f.antilog_[i] = cur;
        f.log_[cur] = std::int32_t(i);
        cur <<= 1;
        if (cur & (std::uint32_t(1) << m)) cur ^= mask;
    }

    f.trace_bit_ = BitVec(f.field_size());
    f.trace_exp_ = BitVec(n);
    for (std::uint32_t v = 1; v < f.field_size(); ++v) {
        std::uint32_t acc = 0, t = v;
        for (int i = 0; i < m; ++i) {
            acc ^= t;
            t = f.mul(t, t);
        }
        if (acc & 1) {
            f.trace_bit_.set(v);
            f.trace_exp_.set(std::uint32_t(f.log_[v]));
        }
        if (acc != 0 && acc != 1) throw Error("trace did not land in GF(2)");
    }
    return f;
}

int FieldSpec::subfield_trace(int s, std::uint32_t a) const {
    if (s <= 0 || m_ % s != 0) throw BadParams("subfield degree must divide m");
    std::uint32_t acc = 0, t = a;
    for (int i = 0; i < s; ++i) {
        acc ^= t;
        t = mul(t, t);
    }
    if (acc > 1) throw BadParams("element not in the subfield GF(2^" + std::to_string(s) + ")");
    return int(acc);
}

int trace(const FieldSpec& field, std::uint32_t a) { return field.trace(a); }

std::vector<std::uint32_t> point_enumeration(const FieldSpec& field) {
    std::vector<std::uint32_t> pts(field.field_size());
    for (std::size_t j = 0; j < pts.size(); ++j) pts[j] = field.point(j);
    return pts;
}

std::vector<std::vector<std::uint32_t>> primitive_conjugacy_classes(const FieldSpec& field) {
    const std::uint32_t n = field.group_order();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<std::uint32_t>> classes;
    for (std::uint32_t e = 1; e < n; ++e) {
        if (seen[e] || std::gcd(e, n) != 1) continue;
        std::vector<std::uint32_t> orbit;
        std::uint32_t cur = e;
        do {
            orbit.push_back(cur);
            seen[cur] = true;
            cur = std::uint32_t((std::uint64_t(cur) * 2) % n);
        } while (cur != e);
        std::sort(orbit.begin(), orbit.end());
        classes.push_back(std::move(orbit));
    }
    return classes;
}

std::uint32_t evaluate(const BinaryPolynomial& p, const FieldSpec& field, std::uint32_t x) {
    std::uint32_t acc = 0;
    for (int i = p.degree(); i >= 0; --i) {
        acc = field.mul(acc, x);
        if (p.coeff(i)) acc ^= 1;
    }
    return acc;
}

}  // namespace mincodes
