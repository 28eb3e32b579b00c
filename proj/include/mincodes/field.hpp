#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mincodes/bitvec.hpp"
#include "mincodes/errors.hpp"
#include "mincodes/gf2poly.hpp"

namespace mincodes {

// GF(2^m) for 2 <= m <= 16, realized as GF(2)[x]/(p) for a primitive p of
// degree m. Elements are integer bit patterns: the coefficient vector in the
// power basis {1, alpha, ..., alpha^{m-1}} of the root alpha = x.
//
// Immutable after construction; all operations are const and thread-safe.
class FieldSpec {
public:
    int m() const { return m_; }
    std::uint32_t field_size() const { return std::uint32_t(1) << m_; }  // q = 2^m
    std::uint32_t group_order() const { return field_size() - 1; }       // q - 1
    const BinaryPolynomial& primitive_poly() const { return poly_; }
    std::uint32_t primitive_poly_mask() const { return poly_mask_; }
    std::uint32_t alpha() const { return 2; }  // the root x

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return a ^ b; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        return antilog_[(std::uint64_t(log_[a]) + log_[b]) % group_order()];
    }
    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) throw BadParams("inverse of zero");
        return antilog_[(group_order() - log_[a]) % group_order()];
    }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        if (a == 0) return e == 0 ? 1 : 0;
        return antilog_[(std::uint64_t(log_[a]) * (e % group_order())) % group_order()];
    }

    // alpha^e, exponent reduced mod 2^m - 1 (negative allowed)
    std::uint32_t alpha_pow(std::int64_t e) const {
        const std::int64_t n = group_order();
        return antilog_[std::uint32_t(((e % n) + n) % n)];
    }
    std::uint32_t antilog(std::uint32_t i) const { return antilog_[i % group_order()]; }
    std::uint32_t log(std::uint32_t a) const {
        if (a == 0) throw BadParams("log of zero");
        return log_[a];
    }

    int trace(std::uint32_t a) const { return trace_bit_.get(a) ? 1 : 0; }
    int trace_of_exponent(std::uint32_t e) const {
        return trace_exp_.get(e % group_order()) ? 1 : 0;
    }
    // Tr^{m/s}_1 relative to the subfield GF(2^s); s must divide m
    int subfield_trace(int s, std::uint32_t a) const;

    // Point enumeration P_0 = 0, P_j = alpha^{j-1}: value of P_j.
    std::uint32_t point(std::size_t j) const {
        return j == 0 ? 0 : antilog_[std::uint32_t(j - 1)];
    }
    std::size_t point_index(std::uint32_t value) const {
        return value == 0 ? 0 : std::size_t(log_[value]) + 1;
    }

    friend FieldSpec build_field(int m, std::optional<BinaryPolynomial> poly);

private:
    FieldSpec() = default;

    int m_ = 0;
    std::uint32_t poly_mask_ = 0;
    BinaryPolynomial poly_;
    std::vector<std::uint32_t> antilog_;  // exponent -> element, length 2^m - 1
    std::vector<std::int32_t> log_;       // element -> exponent, log_[0] = -1
    BitVec trace_bit_;                    // Tr(value), indexed by element value
    BitVec trace_exp_;                    // Tr(alpha^e), indexed by exponent
};

// Builds GF(2^m). With no polynomial given, picks the lexicographically
// smallest primitive polynomial of degree m (smallest coefficient mask).
// Throws NotIrreducible / NotPrimitive on a bad polynomial.
FieldSpec build_field(int m, std::optional<BinaryPolynomial> poly = std::nullopt);

int trace(const FieldSpec& field, std::uint32_t a);

// (0, alpha^0, alpha^1, ..., alpha^{2^m-2}) as element values
std::vector<std::uint32_t> point_enumeration(const FieldSpec& field);

// Partition of {e : gcd(e, 2^m-1) = 1} into orbits of e -> 2e mod (2^m-1).
// alpha^e for e in one orbit are conjugate primitive elements and generate
// identical trace codes. Each orbit is sorted, orbits sorted by first element.
std::vector<std::vector<std::uint32_t>> primitive_conjugacy_classes(const FieldSpec& field);

std::uint32_t default_primitive_poly_mask(int m);

// Horner evaluation of a GF(2)-coefficient polynomial at a field element.
std::uint32_t evaluate(const BinaryPolynomial& p, const FieldSpec& field, std::uint32_t x);

}  // namespace mincodes
