#pragma once

#include <cstdint>
#include <vector>

namespace eae {

// Primitive polynomial used for GF(2^degree), as a bit mask including the
// leading term (e.g. 0x13 = x^4 + x + 1). Throws if no polynomial is tabled.
uint32_t primitive_polynomial(int degree);

// Arithmetic in GF(2^degree) with a fixed primitive element alpha (the root
// of the tabled polynomial). Elements are polynomial-basis bit masks in
// [0, 2^degree). Built once per code; all queries are table lookups.
class GaloisField {
public:
    explicit GaloisField(int degree);

    int degree() const { return degree_; }
    // Multiplicative group order, 2^degree - 1.
    int order() const { return order_; }

    uint32_t add(uint32_t a, uint32_t b) const { return a ^ b; }
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t inv(uint32_t a) const;  // throws std::domain_error on a == 0
    uint32_t pow(uint32_t a, int e) const;

    // alpha^e for any integer e (reduced mod the group order).
    uint32_t alpha_pow(int e) const;
    // Discrete log base alpha; a must be nonzero.
    int log(uint32_t a) const;

private:
    int degree_;
    int order_;
    std::vector<uint32_t> exp_;  // exp_[i] = alpha^i, doubled for cheap reduction
    std::vector<int> log_;
};

}  // namespace eae
