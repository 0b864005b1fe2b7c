#include "wm/integer_set.hpp"

#include "wm/errors.hpp"

namespace wm {

IntegerSet::IntegerSet(uint64_t horizon) : horizon_(horizon), bits_(horizon) {
    if (horizon == 0) throw precondition_error("horizon must be positive");
}

void IntegerSet::insert(uint64_t n) {
    if (n < 1 || n > horizon_) throw horizon_error("member outside [1, horizon]");
    bits_.set(n - 1, true);
}

void IntegerSet::erase(uint64_t n) {
    if (n < 1 || n > horizon_) throw horizon_error("member outside [1, horizon]");
    bits_.set(n - 1, false);
}

uint64_t IntegerSet::count_upto(uint64_t n) const {
    if (n >= horizon_) return bits_.count();
    return bits_.count_prefix(n);
}

std::vector<uint64_t> IntegerSet::members() const {
    std::vector<uint64_t> out;
    out.reserve(count());
    const auto& w = bits_.words();
    for (uint64_t i = 0; i < w.size(); ++i) {
        uint64_t v = w[i];
        while (v) {
            out.push_back(i * 64 + uint64_t(std::countr_zero(v)) + 1);
            v &= v - 1;
        }
    }
    return out;
}

Rat density(const IntegerSet& a) { return make_rat(Int(a.count()), Int(a.horizon())); }

SignSeq char_seq(const IntegerSet& a) {
    SignSeq s(a.horizon());
    s.plus_bits() = a.bits();
    return s;
}

IntegerSet dilate(const IntegerSet& a, uint64_t factor) {
    if (factor == 0) throw precondition_error("dilation factor must be >= 1");
    uint64_t m = a.horizon() / factor;
    if (m == 0) throw horizon_error("dilated horizon is empty");
    IntegerSet out(m);
    for (uint64_t n = 1; n <= m; ++n)
        if (a.contains(n * factor)) out.insert(n);
    return out;
}

IntegerSet shift_intersect(const IntegerSet& a, uint64_t s) {
    if (s == 0 || s >= a.horizon()) throw precondition_error("shift must satisfy 0 < s < horizon");
    IntegerSet out(a.horizon() - s);
    out.bits().xor_shifted(a.bits(), 0);  // copy of the first N-s bits
    out.bits().and_shifted(a.bits(), s);
    return out;
}

}  // namespace wm
