#pragma once

#include <cstdint>
#include <vector>

#include "eae/bch.hpp"
#include "eae/schedule.hpp"
#include "eae/words.hpp"

namespace eae {

// Product code over one component code: n x n arrays (row-major) whose rows
// and columns are all component codewords. Bit (a, b) connects to row CN a
// at socket b and column CN b at socket a.
class ProductCode {
public:
    explicit ProductCode(const ComponentCode& code) : code_(&code) {}

    const ComponentCode& component() const { return *code_; }
    int n() const { return code_->spec().n; }
    int k() const { return code_->spec().k; }
    double rate() const {
        const double kk = k(), nn = n();
        return (kk * kk) / (nn * nn);
    }
    int info_bits() const { return k() * k(); }
    int total_bits() const { return n() * n(); }

    // k*k info bits (row-major) -> n*n codeword array: encode the k info
    // rows, then every column; checks-on-checks come out consistent.
    std::vector<uint8_t> encode(const BinaryWord& info) const;

    bool is_codeword_array(const std::vector<uint8_t>& bits) const;

    // Iterative decoding: half-iterations alternate row-CN and column-CN
    // planes; variable nodes forward each plane's output to the other plane.
    // Terminates early once the messages agree on a valid codeword array.
    // All randomness (fills, ties, final decisions) derives from `seed`.
    DecodeResult decode(const TernaryWord& received, const DecoderConfig& cfg,
                        uint64_t seed) const;

private:
    const ComponentCode* code_;
};

}  // namespace eae
