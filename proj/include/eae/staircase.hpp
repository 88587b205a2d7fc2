#pragma once

#include <cstdint>
#include <vector>

#include "eae/bch.hpp"
#include "eae/schedule.hpp"
#include "eae/words.hpp"

namespace eae {

// Staircase code: a chain of L blocks of size m x m (m = n/2, n even), with
// block 1 fixed to all zeros as the reference. Every row of [B_i^T, B_{i+1}]
// is a component codeword; bit (a, b) of block q sits at socket a of row b
// of interface q (to its right) and at socket m+b of row a of interface q-1.
// Only blocks 2..L are transmitted.
class StaircaseCode {
public:
    StaircaseCode(const ComponentCode& code, int chain_length);

    const ComponentCode& component() const { return *code_; }
    int chain_length() const { return chain_length_; }
    int block_dim() const { return m_; }
    // New information bits carried by each transmitted block.
    int info_bits_per_block() const { return m_ * (code_->spec().k - m_); }
    int info_bits() const { return (chain_length_ - 1) * info_bits_per_block(); }
    int payload_bits() const { return (chain_length_ - 1) * m_ * m_; }
    double rate() const {
        return static_cast<double>(code_->spec().k - m_) / static_cast<double>(m_);
    }

    // info -> transmitted blocks 2..L, concatenated row-major per block.
    std::vector<uint8_t> encode(const BinaryWord& info) const;

    // Sliding-window decoding: `window_length` consecutive blocks,
    // `window_iterations` passes over the interfaces inside the window
    // (oldest to newest), then the oldest block is finalized and the window
    // moves by one block. Returns the payload bits of blocks 2..L.
    DecodeResult window_decode(const TernaryWord& received, const DecoderConfig& cfg,
                               uint64_t seed) const;

private:
    const ComponentCode* code_;
    int chain_length_;
    int m_;
};

}  // namespace eae
