#include "eae/staircase.hpp"

#include <stdexcept>

namespace eae {

StaircaseCode::StaircaseCode(const ComponentCode& code, int chain_length)
    : code_(&code), chain_length_(chain_length), m_(code.spec().n / 2) {
    if (code.spec().n % 2 != 0)
        throw std::invalid_argument("staircase needs an even component length (shorten by one)");
    if (code.spec().k <= m_)
        throw std::invalid_argument("staircase needs k > n/2");
    if (chain_length < 2) throw std::invalid_argument("staircase chain needs at least 2 blocks");
}

std::vector<uint8_t> StaircaseCode::encode(const BinaryWord& info) const {
    if (static_cast<int>(info.size()) != info_bits())
        throw std::invalid_argument("staircase encode: wrong info length");
    const int n = code_->spec().n;
    const int k = code_->spec().k;
    const int per_row = k - m_;

    std::vector<std::vector<uint8_t>> blocks(chain_length_,
                                             std::vector<uint8_t>(m_ * m_, 0));
    BinaryWord full_info(k);
    size_t consumed = 0;
    for (int q = 1; q < chain_length_; ++q) {
        for (int c = 0; c < m_; ++c) {
            // codeword positions 0..m-1 are column c of the previous block
            for (int j = 0; j < m_; ++j) full_info[j] = blocks[q - 1][j * m_ + c];
            for (int j = 0; j < per_row; ++j) full_info[m_ + j] = info[consumed + j];
            consumed += per_row;
            const BinaryWord cw = code_->encode(full_info);
            for (int j = 0; j < m_; ++j) blocks[q][c * m_ + j] = cw[m_ + j];
            (void)n;
        }
    }

    std::vector<uint8_t> out;
    out.reserve(payload_bits());
    for (int q = 1; q < chain_length_; ++q)
        out.insert(out.end(), blocks[q].begin(), blocks[q].end());
    return out;
}

DecodeResult StaircaseCode::window_decode(const TernaryWord& received, const DecoderConfig& cfg,
                                          uint64_t seed) const {
    if (static_cast<int>(received.size()) != payload_bits())
        throw std::invalid_argument("staircase decode: wrong payload length");
    const int W = cfg.window_length;
    if (chain_length_ < W) throw std::invalid_argument("chain shorter than the decoding window");
    const int n = code_->spec().n;
    const int bs = m_ * m_;

    // Channel plane; block 0 is the known all-zero reference.
    std::vector<TernaryWord> channel(chain_length_, TernaryWord(bs, Trit::zero));
    for (int q = 1; q < chain_length_; ++q)
        channel[q].assign(received.begin() + (q - 1) * bs, received.begin() + q * bs);

    // to_left[q]: messages toward interface q-1 (also the last messages
    // received from interface q); to_right[q] is the mirror.
    std::vector<TernaryWord> to_left(channel), to_right(channel);

    DecodeResult res;
    res.bits.assign(payload_bits(), 0);
    std::vector<uint8_t> finalized(chain_length_, 0);
    finalized[0] = 1;

    auto finalize_block = [&](int q) {
        if (finalized[q]) return;
        finalized[q] = 1;
        for (int i = 0; i < bs; ++i) {
            RngStream rng = RngStream::keyed(
                seed, {rng_tag::final_decision, static_cast<uint64_t>(q), static_cast<uint64_t>(i)});
            const Trit from_left = to_right[q][i];
            const Trit from_right = q + 1 < chain_length_ ? to_left[q][i] : to_right[q][i];
            res.bits[(q - 1) * bs + i] = vn_final_decision(from_left, from_right, rng);
        }
    };

    TernaryWord y(n), r(n);
    for (int w_start = 0; w_start + W <= chain_length_; ++w_start) {
        for (int it = 0; it < cfg.window_iterations; ++it) {
            for (int iface = w_start; iface < w_start + W - 1; ++iface) {
                for (int row = 0; row < m_; ++row) {
                    for (int j = 0; j < m_; ++j) {
                        y[j] = to_right[iface][j * m_ + row];
                        r[j] = channel[iface][j * m_ + row];
                        y[m_ + j] = to_left[iface + 1][row * m_ + j];
                        r[m_ + j] = channel[iface + 1][row * m_ + j];
                    }
                    RngStream fill_rng = RngStream::keyed(
                        seed, {rng_tag::fill, static_cast<uint64_t>(w_start),
                               static_cast<uint64_t>(it), static_cast<uint64_t>(iface),
                               static_cast<uint64_t>(row)});
                    RngStream tie_rng = RngStream::keyed(
                        seed, {rng_tag::tie, static_cast<uint64_t>(w_start),
                               static_cast<uint64_t>(it), static_cast<uint64_t>(iface),
                               static_cast<uint64_t>(row)});
                    const FillPlan plan = random_fill_plan(n, fill_rng);
                    const CnInput in{y, r, *code_, plan, cfg.tie, &tie_rng};
                    const CnOutput out = run_cn_update(in, cfg);
                    res.stats.merge(out.stats);
                    // block `iface` keeps its reference pin; block iface+1 always updates
                    if (iface > 0) {
                        for (int j = 0; j < m_; ++j)
                            to_left[iface][j * m_ + row] = out.extrinsic[j];
                    }
                    for (int j = 0; j < m_; ++j)
                        to_right[iface + 1][row * m_ + j] = out.extrinsic[m_ + j];
                }
            }
        }
        finalize_block(w_start);
    }
    for (int q = chain_length_ - W + 1; q < chain_length_; ++q) finalize_block(q);
    return res;
}

}  // namespace eae
