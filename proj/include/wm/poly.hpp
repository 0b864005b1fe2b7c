#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wm {

// Integer polynomial, coefficients ascending by degree, trailing zeros
// trimmed.  The zero polynomial has degree -1.
class IntPolynomial {
  public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<long long> coeffs);

    int degree() const { return int(coeffs_.size()) - 1; }
    long long leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
    const std::vector<long long>& coeffs() const { return coeffs_; }

    // Exact evaluation; throws on overflow past the __int128 range.
    __int128 eval(uint64_t x) const;

    IntPolynomial operator-(const IntPolynomial& o) const;

    // "c0,c1,c2" ascending degree
    static IntPolynomial parse(const std::string& text);
    std::string str() const;

  private:
    std::vector<long long> coeffs_;
};

}  // namespace wm
