#pragma once

#include <cstdint>
#include <string>

#include "mincodes/bitvec.hpp"

namespace mincodes {

struct PolyDivMod;

// Polynomial over GF(2), coefficient bit i = coefficient of X^i.
// Degree of the zero polynomial is -1.
class BinaryPolynomial {
public:
    BinaryPolynomial() = default;

    static BinaryPolynomial zero() { return BinaryPolynomial(); }
    static BinaryPolynomial one() { return monomial(0); }
    static BinaryPolynomial monomial(int e);
    // low 64 coefficient bits as an integer mask, e.g. x^5+x^3+1 <-> 0x29
    static BinaryPolynomial from_mask(std::uint64_t mask);
    // X^n - 1 (binary: X^n + 1)
    static BinaryPolynomial xn_minus_1(int n);

    int degree() const { return degree_; }
    bool is_zero() const { return degree_ < 0; }
    std::size_t weight() const { return bits_.count(); }

    bool coeff(int i) const {
        return i >= 0 && std::size_t(i) < bits_.size() && bits_.get(std::size_t(i));
    }
    void set_coeff(int i, bool v);

    std::uint64_t mask() const;  // requires degree < 64

    const BitVec& coefficients() const { return bits_; }
    // coefficient vector padded/truncated to length n
    BitVec coefficient_vector(std::size_t n) const;

    friend BinaryPolynomial operator+(const BinaryPolynomial& a, const BinaryPolynomial& b);
    friend BinaryPolynomial operator*(const BinaryPolynomial& a, const BinaryPolynomial& b);
    BinaryPolynomial shifted(int e) const;  // multiply by X^e

    // quotient/remainder; divisor must be nonzero
    PolyDivMod divmod(const BinaryPolynomial& divisor) const;
    BinaryPolynomial mod_xn_minus_1(int n) const;

    friend bool operator==(const BinaryPolynomial& a, const BinaryPolynomial& b) {
        if (a.degree_ != b.degree_) return false;
        if (a.degree_ < 0) return true;
        const std::size_t n = std::size_t(a.degree_) + 1;
        return a.coefficient_vector(n) == b.coefficient_vector(n);
    }
    friend bool operator!=(const BinaryPolynomial& a, const BinaryPolynomial& b) {
        return !(a == b);
    }

    // descending-degree monomial form, e.g. "X^16 + X^12 + X + 1"
    std::string to_string() const;

private:
    void normalize();

    BitVec bits_;
    int degree_ = -1;
};

struct PolyDivMod {
    BinaryPolynomial quot;
    BinaryPolynomial rem;
};

}  // namespace mincodes
