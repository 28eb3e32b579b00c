#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mincodes/bitvec.hpp"
#include "mincodes/errors.hpp"
#include "mincodes/field.hpp"

namespace mincodes {

// Algebraic immunity value with the conventions AI(empty set) = -inf and
// AI(whole field) = +inf, kept as explicit markers so comparisons stay safe.
struct AiValue {
    enum class Kind { NegInf, Finite, PosInf };
    Kind kind = Kind::Finite;
    int value = 0;

    static AiValue neg_inf() { return {Kind::NegInf, 0}; }
    static AiValue pos_inf() { return {Kind::PosInf, 0}; }
    static AiValue finite(int v) { return {Kind::Finite, v}; }

    bool is_finite() const { return kind == Kind::Finite; }
    int finite_value() const {
        if (!is_finite()) throw BadParams("infinite algebraic immunity");
        return value;
    }

    friend bool operator==(const AiValue& a, const AiValue& b) {
        return a.kind == b.kind && (a.kind != Kind::Finite || a.value == b.value);
    }
    friend bool operator!=(const AiValue& a, const AiValue& b) { return !(a == b); }
    friend bool operator<(const AiValue& a, const AiValue& b) {
        auto rank = [](const AiValue& v) {
            return v.kind == Kind::NegInf ? -1 : v.kind == Kind::PosInf ? 1 : 0;
        };
        if (rank(a) != rank(b)) return rank(a) < rank(b);
        return a.is_finite() && b.is_finite() && a.value < b.value;
    }
    friend bool operator<=(const AiValue& a, const AiValue& b) { return !(b < a); }
    friend bool operator>=(const AiValue& a, const AiValue& b) { return !(a < b); }
    friend bool operator>(const AiValue& a, const AiValue& b) { return b < a; }
};

// Boolean function on GF(2^m), stored as a truth table over the point
// enumeration P_0 = 0, P_j = alpha^{j-1}.
struct BooleanFunction {
    const FieldSpec* field = nullptr;
    BitVec tt;  // length 2^m, bit j = f(P_j)

    std::size_t weight() const { return tt.count(); }
    bool is_zero() const { return tt.none(); }
    bool is_constant() const { return tt.none() || tt.count() == tt.size(); }
    bool operator()(std::size_t point_idx) const { return tt.get(point_idx); }

    BooleanFunction complement() const { return {field, tt.complement()}; }
    friend BooleanFunction operator+(const BooleanFunction& a, const BooleanFunction& b) {
        return {a.field, a.tt ^ b.tt};
    }
    friend BooleanFunction operator*(const BooleanFunction& a, const BooleanFunction& b) {
        return {a.field, a.tt & b.tt};
    }
};

// Subset of GF(2^m) as a membership mask over the point enumeration.
struct SupportSet {
    const FieldSpec* field = nullptr;
    BitVec mask;  // length 2^m, bit j = (P_j in the set)

    std::size_t size() const { return mask.count(); }
    bool contains_zero() const { return mask.get(0); }

    SupportSet with_zero() const {
        SupportSet s = *this;
        s.mask.set(0);
        return s;
    }
    SupportSet without_zero() const {
        SupportSet s = *this;
        s.mask.set(0, false);
        return s;
    }
    SupportSet complement() const { return {field, mask.complement()}; }

    // characteristic function f_D (same indexing, so the same bits)
    BooleanFunction characteristic() const { return {field, mask}; }
};

struct VectorialFunction {
    const FieldSpec* field = nullptr;
    std::vector<BooleanFunction> components;  // (f_1, ..., f_r)

    int r() const { return int(components.size()); }
    // v . F for a component mask v (bit i selects f_{i+1})
    BooleanFunction component_combination(std::uint32_t v) const;
    // F^{-1}(y) for the output vector y (bit i = value of f_{i+1})
    SupportSet preimage(std::uint32_t y) const;
};

// Basis of the space of functions of degree <= degree_bound vanishing on a
// set. Basis vectors are deterministic: monomials ordered by (degree, mask),
// kernel vectors by ascending free column.
struct AnnihilatorBasis {
    int degree_bound = 0;
    std::vector<BooleanFunction> basis;

    int dimension() const { return int(basis.size()); }
};

// --- supports and functions ---------------------------------------------

SupportSet support_of(const BooleanFunction& f);
SupportSet support_from_values(const FieldSpec& field, const std::vector<std::uint32_t>& values);

// [h; delta]_alpha = {alpha^h, ..., alpha^{h+delta-1}}, exponents mod 2^m-1.
// Requires 1 <= delta <= 2^m - 1; never contains 0.
SupportSet interval_support(const FieldSpec& field, std::int64_t h, std::uint64_t delta);

BooleanFunction zero_function(const FieldSpec& field);
// f(x) = Tr(a x)
BooleanFunction trace_function(const FieldSpec& field, std::uint32_t a);

// --- ANF and degree -------------------------------------------------------

// Binary Moebius transform between a value-indexed truth table and the ANF
// coefficients over the coordinate monomials; the map is an involution.
void mobius_transform(BitVec& value_indexed);

BitVec value_indexed_table(const BooleanFunction& f);
BooleanFunction from_value_indexed(const FieldSpec& field, const BitVec& values);

// Degree of the multivariate ANF in power-basis coordinates; nullopt marks
// the zero function (degree minus infinity).
std::optional<int> algebraic_degree(const BooleanFunction& f);

// --- annihilators and algebraic immunity ----------------------------------

AnnihilatorBasis annihilator_space(const SupportSet& D, int degree_bound);

AiValue ai_of_set(const SupportSet& D);

// Closed-form AI of [h; delta]_alpha (optionally with 0 adjoined),
// independent of h. Requires 1 <= delta <= 2^m - 1.
int ai_of_interval(int m, std::uint64_t delta, bool include_zero);

// min(AI(Supp(f)), AI(Supp(1+f))); f must be nonconstant.
int ai_of_function(const BooleanFunction& f);

AiValue ai_of_vectorial(const VectorialFunction& F);

// AI of {x : v1.F = eps1, v2.F = eps2} for distinct nonzero masks v1, v2;
// checks that it is >= AI(F).
AiValue pairwise_preimage_ai_bound_check(const VectorialFunction& F, std::uint32_t v1,
                                         std::uint32_t v2, int eps1, int eps2);

// F constant on the exponent blocks [n_i, n_{i+1}) with value labels[i],
// F(0) = labels[0]. Breakpoints must satisfy 0 = n_0 < ... < n_{2^r} = 2^m-1
// and labels must be a permutation of GF(2)^r with labels[0] = 0.
VectorialFunction partition_vectorial(const FieldSpec& field,
                                      const std::vector<std::uint32_t>& breakpoints,
                                      const std::vector<std::uint32_t>& labels);
// default labels: block i gets the binary digits of i
VectorialFunction partition_vectorial(const FieldSpec& field,
                                      const std::vector<std::uint32_t>& breakpoints);

// The AI such a partition function attains: the biggest t with
// sum_{j=1}^{t-1} C(m,j) <= n_1 - n_0 and sum_{j=0}^{t-1} C(m,j) <= n_{i+1} - n_i.
int partition_ai_formula(int m, const std::vector<std::uint32_t>& breakpoints);

std::size_t hamming_distance(const BooleanFunction& f, const BooleanFunction& g);

}  // namespace mincodes
