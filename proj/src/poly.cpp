#include "wm/poly.hpp"

#include <sstream>

#include "wm/errors.hpp"

namespace wm {

namespace {
using i128 = __int128;
constexpr i128 kEvalCap = i128(1) << 100;
}  // namespace

IntPolynomial::IntPolynomial(std::vector<long long> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

__int128 IntPolynomial::eval(uint64_t x) const {
    i128 acc = 0;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * i128(x) + coeffs_[i];
        if (acc > kEvalCap || acc < -kEvalCap)
            throw precondition_error("polynomial value out of range");
    }
    return acc;
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    std::vector<long long> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::parse(const std::string& text) {
    std::vector<long long> c;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t used = 0;
            long long v = std::stoll(tok, &used);
            while (used < tok.size() && isspace((unsigned char)tok[used])) ++used;
            if (used != tok.size()) throw std::invalid_argument(tok);
            c.push_back(v);
        } catch (const std::exception&) {
            throw format_error("bad polynomial coefficient: '" + tok + "'");
        }
    }
    if (c.empty()) throw format_error("empty polynomial");
    return IntPolynomial(std::move(c));
}

std::string IntPolynomial::str() const {
    std::string out;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(coeffs_[i]);
    }
    return out.empty() ? "0" : out;
}

}  // namespace wm
