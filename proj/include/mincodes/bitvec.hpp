#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace mincodes {

// Fixed-length bit vector packed into 64-bit words. Bits past size() are kept
// zero so that equality, popcount and hashing work on raw words.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    bool empty() const { return n_ == 0; }

    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i, bool v = true) {
        const std::uint64_t m = std::uint64_t(1) << (i & 63);
        if (v) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
    }
    void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t w : w_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (std::uint64_t w : w_) if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    BitVec& operator^=(const BitVec& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }
    BitVec& operator&=(const BitVec& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    BitVec& operator|=(const BitVec& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    friend BitVec operator^(BitVec a, const BitVec& b) { a ^= b; return a; }
    friend BitVec operator&(BitVec a, const BitVec& b) { a &= b; return a; }
    friend BitVec operator|(BitVec a, const BitVec& b) { a |= b; return a; }

    BitVec complement() const {
        BitVec r(n_);
        for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
        r.clear_tail();
        return r;
    }

    // true iff every set bit of *this is also set in o (sizes must match)
    bool is_subset_of(const BitVec& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    bool intersects(const BitVec& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    friend bool operator==(const BitVec& a, const BitVec& b) {
        return a.n_ == b.n_ && a.w_ == b.w_;
    }
    friend bool operator!=(const BitVec& a, const BitVec& b) { return !(a == b); }
    friend bool operator<(const BitVec& a, const BitVec& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        for (std::size_t i = a.w_.size(); i-- > 0;)
            if (a.w_[i] != b.w_[i]) return a.w_[i] < b.w_[i];
        return false;
    }

    std::size_t word_count() const { return w_.size(); }
    std::uint64_t word(std::size_t i) const { return w_[i]; }
    std::uint64_t& word(std::size_t i) { return w_[i]; }

    static constexpr std::size_t npos = ~std::size_t(0);
    std::size_t first_set() const {
        for (std::size_t wi = 0; wi < w_.size(); ++wi)
            if (w_[wi]) return wi * 64 + std::countr_zero(w_[wi]);
        return npos;
    }

    // calls fn(index) for every set bit, ascending
    template <class Fn>
    void for_each_set(Fn&& fn) const {
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            std::uint64_t w = w_[wi];
            while (w) {
                fn(wi * 64 + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    std::vector<std::size_t> set_bits() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for_each_set([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    // Hex encoding, little-endian: hex digit j holds bits [4j, 4j+4).
    std::string to_hex() const {
        static const char* digits = "0123456789abcdef";
        const std::size_t nd = (n_ + 3) / 4;
        std::string s(nd, '0');
        for (std::size_t j = 0; j < nd; ++j)
            s[j] = digits[(w_[j >> 4] >> ((j & 15) * 4)) & 0xf];
        return s;
    }
    static BitVec from_hex(std::string_view s, std::size_t n) {
        BitVec r(n);
        for (std::size_t j = 0; j < s.size() && j * 4 < n; ++j) {
            char c = s[j];
            std::uint64_t v = (c >= '0' && c <= '9')   ? std::uint64_t(c - '0')
                              : (c >= 'a' && c <= 'f') ? std::uint64_t(c - 'a' + 10)
                              : (c >= 'A' && c <= 'F') ? std::uint64_t(c - 'A' + 10)
                                                       : 0;
            r.w_[j >> 4] |= v << ((j & 15) * 4);
        }
        r.clear_tail();
        return r;
    }

private:
    void clear_tail() {
        if (n_ & 63) w_.back() &= (std::uint64_t(1) << (n_ & 63)) - 1;
    }

    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace mincodes
