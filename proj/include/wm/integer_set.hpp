#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "wm/bitvec.hpp"
#include "wm/rational.hpp"

namespace wm {

// Finite truncation of a subset of the positive integers: members live in
// [1, horizon] and are stored as a dense bit vector (bit n-1 <=> n in A).
class IntegerSet {
  public:
    IntegerSet() = default;
    explicit IntegerSet(uint64_t horizon);

    uint64_t horizon() const { return horizon_; }
    bool contains(uint64_t n) const { return n >= 1 && n <= horizon_ && bits_.test(n - 1); }
    void insert(uint64_t n);
    void erase(uint64_t n);

    uint64_t count() const { return bits_.count(); }
    // members in [1, n]
    uint64_t count_upto(uint64_t n) const;
    std::vector<uint64_t> members() const;

    const BitVec& bits() const { return bits_; }
    BitVec& bits() { return bits_; }

    bool operator==(const IntegerSet& o) const {
        return horizon_ == o.horizon_ && bits_ == o.bits_;
    }

  private:
    uint64_t horizon_ = 0;
    BitVec bits_;
};

// +/-1 sequence on [1, horizon]; bit set <=> value +1.
class SignSeq {
  public:
    SignSeq() = default;
    explicit SignSeq(uint64_t horizon) : horizon_(horizon), plus_(horizon) {}

    uint64_t horizon() const { return horizon_; }
    int sign(uint64_t n) const { return plus_.test(n - 1) ? +1 : -1; }
    void set_sign(uint64_t n, int s) { plus_.set(n - 1, s > 0); }

    const BitVec& plus_bits() const { return plus_; }
    BitVec& plus_bits() { return plus_; }

  private:
    uint64_t horizon_ = 0;
    BitVec plus_;
};

// |A intersect [1, N]| / N, exact.
Rat density(const IntegerSet& a);

// chi_A = 2*1_A - 1 as a sign sequence on the same horizon.
SignSeq char_seq(const IntegerSet& a);

// {n : a*n in A}, horizon floor(N/a).
IntegerSet dilate(const IntegerSet& a, uint64_t factor);

// {n : n in A and n+s in A}, horizon N-s.
IntegerSet shift_intersect(const IntegerSet& a, uint64_t s);

// ---- serialization ------------------------------------------------------
// Text: '#' comments, then "horizon <N>", then ascending members one per line.
// Binary: "WMS1", horizon as 8-byte little-endian, ceil(N/8) bytes LSB-first.

void write_set_text(std::ostream& os, const IntegerSet& a);
IntegerSet read_set_text(std::istream& is);
void write_set_binary(std::ostream& os, const IntegerSet& a);
IntegerSet read_set_binary(std::istream& is);

void save_set(const std::string& path, const IntegerSet& a, bool binary);
// Sniffs the WMS1 magic to pick the format.
IntegerSet load_set(const std::string& path);

}  // namespace wm
