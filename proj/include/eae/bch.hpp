#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "eae/gf.hpp"
#include "eae/words.hpp"

namespace eae {

// Parameters of one (shortened, optionally even-weight) binary BCH component
// code. n = 2^nu - 1 - shortening, d_des = 2t + 1.
struct ComponentCodeSpec {
    int nu = 0;
    int parent_length = 0;
    int shortening = 0;
    int n = 0;
    int k = 0;
    int t = 0;
    int d_des = 0;
    bool even_weight = false;
};

// Result of bounded-distance decoding. On success `word` is the unique
// codeword within Hamming distance t of the input and `distance` is that
// distance; on failure `word` is the input unchanged and `distance` is
// kInfDistance.
struct BddOutcome {
    bool success = false;
    BinaryWord word;
    int distance = kInfDistance;
};

// Binary BCH component code with systematic encoding and an ideal radius-t
// bounded-distance decoder (syndromes + Berlekamp-Massey + Chien search,
// with full verification of the corrected word). Miscorrections onto wrong
// codewords within radius t are returned, as a sphere decoder would.
//
// Bit j of a word corresponds to the coefficient of x^(n-1-j); info bits
// occupy positions 0..k-1, parity positions k..n-1. Shortening fixes the
// leading info coefficients of the parent code to zero and removes them.
// The even-weight subcode decodes in the parent code and declares failure
// when the result has odd parity.
class ComponentCode {
public:
    ComponentCode(int nu, int t, bool even_weight = false, int shortening = 0);

    const ComponentCodeSpec& spec() const { return spec_; }
    const GaloisField& field() const { return *field_; }
    // Generator polynomial coefficients, ascending degree (g[0] = constant term).
    const std::vector<uint8_t>& generator() const { return generator_; }

    BinaryWord encode(const BinaryWord& info) const;
    bool is_codeword(const BinaryWord& word) const;
    BddOutcome bdd(const BinaryWord& received) const;

private:
    ComponentCodeSpec spec_;
    std::shared_ptr<GaloisField> field_;
    std::vector<uint8_t> generator_;
    // syndrome_table_[l-1][j] = alpha^((n-1-j) * l) for l = 1..2t
    std::vector<std::vector<uint32_t>> syndrome_table_;

    void compute_syndromes(const BinaryWord& word, std::vector<uint32_t>& out) const;
};

}  // namespace eae
