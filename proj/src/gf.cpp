#include "eae/gf.hpp"

#include <stdexcept>
#include <string>

namespace eae {

uint32_t primitive_polynomial(int degree) {
    // Standard table (Peterson & Weldon); one fixed choice per degree so that
    // generator polynomials are reproducible across builds.
    switch (degree) {
        case 2: return 0x7;     // x^2 + x + 1
        case 3: return 0xB;     // x^3 + x + 1
        case 4: return 0x13;    // x^4 + x + 1
        case 5: return 0x25;    // x^5 + x^2 + 1
        case 6: return 0x43;    // x^6 + x + 1
        case 7: return 0x89;    // x^7 + x^3 + 1
        case 8: return 0x11D;   // x^8 + x^4 + x^3 + x^2 + 1
        case 9: return 0x211;   // x^9 + x^4 + 1
        case 10: return 0x409;  // x^10 + x^3 + 1
        default:
            throw std::invalid_argument("no primitive polynomial tabled for degree " +
                                        std::to_string(degree));
    }
}

GaloisField::GaloisField(int degree)
    : degree_(degree), order_((1 << degree) - 1), exp_(2 * order_), log_(order_ + 1, -1) {
    const uint32_t poly = primitive_polynomial(degree);
    const uint32_t high = 1u << degree;
    uint32_t x = 1;
    for (int i = 0; i < order_; ++i) {
        exp_[i] = x;
        log_[x] = i;
        x <<= 1;
        if (x & high) x ^= poly;
    }
    if (x != 1) throw std::logic_error("polynomial is not primitive");
    for (int i = 0; i < order_; ++i) exp_[order_ + i] = exp_[i];
}

uint32_t GaloisField::mul(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
}

uint32_t GaloisField::inv(uint32_t a) const {
    if (a == 0) throw std::domain_error("inverse of zero in GF(2^m)");
    return exp_[order_ - log_[a]];
}

uint32_t GaloisField::pow(uint32_t a, int e) const {
    if (a == 0) {
        if (e <= 0) throw std::domain_error("0 raised to a non-positive power");
        return 0;
    }
    long long le = (static_cast<long long>(log_[a]) * e) % order_;
    if (le < 0) le += order_;
    return exp_[le];
}

uint32_t GaloisField::alpha_pow(int e) const {
    int r = e % order_;
    if (r < 0) r += order_;
    return exp_[r];
}

int GaloisField::log(uint32_t a) const {
    if (a == 0) throw std::domain_error("log of zero in GF(2^m)");
    return log_[a];
}

}  // namespace eae
