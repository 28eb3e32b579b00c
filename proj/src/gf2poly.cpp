#include "mincodes/gf2poly.hpp"

#include <stdexcept>

namespace mincodes {

void BinaryPolynomial::normalize() {
    degree_ = -1;
    for (std::size_t i = bits_.size(); i-- > 0;) {
        if (bits_.get(i)) {
            degree_ = int(i);
            break;
        }
    }
}

BinaryPolynomial BinaryPolynomial::monomial(int e) {
    BinaryPolynomial p;
    p.bits_ = BitVec(std::size_t(e) + 1);
    p.bits_.set(std::size_t(e));
    p.degree_ = e;
    return p;
}

BinaryPolynomial BinaryPolynomial::from_mask(std::uint64_t mask) {
    BinaryPolynomial p;
    p.bits_ = BitVec(64);
    for (int i = 0; i < 64; ++i)
        if ((mask >> i) & 1) p.bits_.set(std::size_t(i));
    p.normalize();
    return p;
}

BinaryPolynomial BinaryPolynomial::xn_minus_1(int n) {
    BinaryPolynomial p = monomial(n);
    p.bits_.set(0);
    return p;
}

void BinaryPolynomial::set_coeff(int i, bool v) {
    if (i < 0) throw std::invalid_argument("negative exponent");
    if (std::size_t(i) >= bits_.size()) {
        BitVec grown(std::size_t(i) + 1);
        bits_.for_each_set([&](std::size_t j) { grown.set(j); });
        bits_ = grown;
    }
    bits_.set(std::size_t(i), v);
    normalize();
}

std::uint64_t BinaryPolynomial::mask() const {
    if (degree_ >= 64) throw std::invalid_argument("degree too large for mask");
    std::uint64_t m = 0;
    bits_.for_each_set([&](std::size_t i) { m |= std::uint64_t(1) << i; });
    return m;
}

BitVec BinaryPolynomial::coefficient_vector(std::size_t n) const {
    BitVec v(n);
    bits_.for_each_set([&](std::size_t i) {
        if (i < n) v.set(i);
    });
    return v;
}

BinaryPolynomial operator+(const BinaryPolynomial& a, const BinaryPolynomial& b) {
    const std::size_t n = std::max(a.bits_.size(), b.bits_.size());
    BinaryPolynomial r;
    r.bits_ = BitVec(std::max<std::size_t>(n, 1));
    a.bits_.for_each_set([&](std::size_t i) { r.bits_.flip(i); });
    b.bits_.for_each_set([&](std::size_t i) { r.bits_.flip(i); });
    r.normalize();
    return r;
}

BinaryPolynomial operator*(const BinaryPolynomial& a, const BinaryPolynomial& b) {
    BinaryPolynomial r;
    if (a.is_zero() || b.is_zero()) return r;
    r.bits_ = BitVec(std::size_t(a.degree_ + b.degree_) + 1);
    a.bits_.for_each_set([&](std::size_t i) {
        b.bits_.for_each_set([&](std::size_t j) { r.bits_.flip(i + j); });
    });
    r.normalize();
    return r;
}

BinaryPolynomial BinaryPolynomial::shifted(int e) const {
    if (is_zero()) return *this;
    BinaryPolynomial r;
    r.bits_ = BitVec(std::size_t(degree_ + e) + 1);
    bits_.for_each_set([&](std::size_t i) { r.bits_.set(i + std::size_t(e)); });
    r.degree_ = degree_ + e;
    return r;
}

PolyDivMod BinaryPolynomial::divmod(const BinaryPolynomial& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
    PolyDivMod out;
    out.rem = *this;
    if (degree_ < divisor.degree_) return out;
    out.quot.bits_ = BitVec(std::size_t(degree_ - divisor.degree_) + 1);
    while (out.rem.degree_ >= divisor.degree_) {
        const int shift = out.rem.degree_ - divisor.degree_;
        out.quot.bits_.set(std::size_t(shift));
        out.rem = out.rem + divisor.shifted(shift);
    }
    out.quot.normalize();
    return out;
}

BinaryPolynomial BinaryPolynomial::mod_xn_minus_1(int n) const {
    // X^n == 1, so fold every exponent mod n
    BinaryPolynomial r;
    r.bits_ = BitVec(std::size_t(n));
    bits_.for_each_set([&](std::size_t i) { r.bits_.flip(i % std::size_t(n)); });
    r.normalize();
    return r;
}

std::string BinaryPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree_; i >= 0; --i) {
        if (!coeff(i)) continue;
        if (!s.empty()) s += " + ";
        if (i == 0) s += "1";
        else if (i == 1) s += "X";
        else s += "X^" + std::to_string(i);
    }
    return s;
}

}  // namespace mincodes
