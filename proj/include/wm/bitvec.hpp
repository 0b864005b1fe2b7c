#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace wm {

// Dense bit vector with the word-level operations the set scans need:
// prefix popcount and shifted XOR/AND accumulation.  Bit indices are
// 0-based here; IntegerSet adds the 1-based convention on top.
class BitVec {
  public:
    BitVec() = default;
    explicit BitVec(uint64_t nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    uint64_t size() const { return nbits_; }

    bool test(uint64_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    void set(uint64_t i, bool v = true) {
        uint64_t mask = uint64_t(1) << (i & 63);
        if (v)
            w_[i >> 6] |= mask;
        else
            w_[i >> 6] &= ~mask;
    }

    uint64_t count() const {
        uint64_t c = 0;
        for (uint64_t w : w_) c += std::popcount(w);
        return c;
    }

    // popcount of bits [0, n)
    uint64_t count_prefix(uint64_t n) const {
        uint64_t c = 0, full = n >> 6;
        for (uint64_t i = 0; i < full; ++i) c += std::popcount(w_[i]);
        uint64_t rem = n & 63;
        if (rem) c += std::popcount(w_[full] & ((uint64_t(1) << rem) - 1));
        return c;
    }

    // bits [lo, lo+64) of the vector packed into one word; out-of-range
    // positions read as 0.  lo may be negative.
    uint64_t window(int64_t lo) const {
        if (lo <= -64 || lo >= int64_t(nbits_)) return 0;
        if (lo < 0) return window(0) << uint64_t(-lo);
        uint64_t q = uint64_t(lo) >> 6, r = uint64_t(lo) & 63;
        uint64_t nw = w_.size();
        uint64_t loW = q < nw ? w_[q] : 0;
        uint64_t hiW = (q + 1 < nw) ? w_[q + 1] : 0;
        return r ? ((loW >> r) | (hiW << (64 - r))) : loW;
    }

    // this ^= (src >> shift): bit i of this flips when bit i+shift of src is
    // set.  Only the first size() bits of this are touched.
    void xor_shifted(const BitVec& src, uint64_t shift) { combine_shifted<true>(src, shift); }

    // this &= (src >> shift); positions shifted past src's end read as 0.
    void and_shifted(const BitVec& src, uint64_t shift) { combine_shifted<false>(src, shift); }

    void flip_all() {
        for (auto& w : w_) w = ~w;
        clear_tail();
    }

    void fill_all() {
        for (auto& w : w_) w = ~uint64_t(0);
        clear_tail();
    }

    bool operator==(const BitVec& o) const { return nbits_ == o.nbits_ && w_ == o.w_; }

    const std::vector<uint64_t>& words() const { return w_; }
    std::vector<uint64_t>& words() { return w_; }

  private:
    template <bool XorOp>
    void combine_shifted(const BitVec& src, uint64_t shift) {
        uint64_t q = shift >> 6, r = shift & 63;
        uint64_t nw = w_.size(), sw = src.w_.size();
        for (uint64_t i = 0; i < nw; ++i) {
            uint64_t lo = (i + q < sw) ? src.w_[i + q] : 0;
            uint64_t hi = (r && i + q + 1 < sw) ? src.w_[i + q + 1] : 0;
            uint64_t v = r ? ((lo >> r) | (hi << (64 - r))) : lo;
            if constexpr (XorOp)
                w_[i] ^= v;
            else
                w_[i] &= v;
        }
        clear_tail();
    }

    void clear_tail() {
        uint64_t rem = nbits_ & 63;
        if (rem && !w_.empty()) w_.back() &= (uint64_t(1) << rem) - 1;
    }

    uint64_t nbits_ = 0;
    std::vector<uint64_t> w_;
};

inline uint64_t reverse_bits64(uint64_t v) {
    v = ((v >> 1) & 0x5555555555555555ull) | ((v & 0x5555555555555555ull) << 1);
    v = ((v >> 2) & 0x3333333333333333ull) | ((v & 0x3333333333333333ull) << 2);
    v = ((v >> 4) & 0x0F0F0F0F0F0F0F0Full) | ((v & 0x0F0F0F0F0F0F0F0Full) << 4);
    v = ((v >> 8) & 0x00FF00FF00FF00FFull) | ((v & 0x00FF00FF00FF00FFull) << 8);
    v = ((v >> 16) & 0x0000FFFF0000FFFFull) | ((v & 0x0000FFFF0000FFFFull) << 16);
    return (v >> 32) | (v << 32);
}

}  // namespace wm
