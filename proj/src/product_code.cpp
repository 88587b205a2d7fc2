#include "eae/product_code.hpp"

#include <stdexcept>

namespace eae {

uint8_t vn_final_decision(Trit from_first, Trit from_second, RngStream& rng) {
    const Trit chosen = rng.next_bit() ? from_second : from_first;
    if (is_erased(chosen)) return static_cast<uint8_t>(rng.next_bit());
    return bit_of(chosen);
}

CnOutput run_cn_update(const CnInput& in, const DecoderConfig& cfg) {
    switch (cfg.rule) {
        case Rule::imp: return imp_cn_update(in, cfg.component);
        case Rule::emp_naive: return naive_emp_cn_update(in, cfg.component);
        case Rule::lcea:
        case Rule::hlcea: {
            const LceaMode mode = cfg.rule == Rule::lcea ? LceaMode::exact : LceaMode::heuristic;
            switch (cfg.component) {
                case ComponentDecoder::bdd: return lcea_bsc_cn_update(in);
                case ComponentDecoder::eaed: return lcea_eaed_cn_update(in, mode);
                case ComponentDecoder::eaed_plus: return lcea_eaed_plus_cn_update(in, mode);
            }
        }
    }
    throw std::logic_error("unknown decoding rule");
}

std::vector<uint8_t> ProductCode::encode(const BinaryWord& info) const {
    const int nn = n(), kk = k();
    if (static_cast<int>(info.size()) != kk * kk)
        throw std::invalid_argument("product encode: info must be k*k bits");
    std::vector<uint8_t> arr(nn * nn, 0);
    BinaryWord buf(kk);
    for (int a = 0; a < kk; ++a) {
        for (int b = 0; b < kk; ++b) buf[b] = info[a * kk + b];
        const BinaryWord row = code_->encode(buf);
        for (int b = 0; b < nn; ++b) arr[a * nn + b] = row[b];
    }
    for (int b = 0; b < nn; ++b) {
        for (int a = 0; a < kk; ++a) buf[a] = arr[a * nn + b];
        const BinaryWord col = code_->encode(buf);
        for (int a = kk; a < nn; ++a) arr[a * nn + b] = col[a];
    }
    return arr;
}

bool ProductCode::is_codeword_array(const std::vector<uint8_t>& bits) const {
    const int nn = n();
    if (static_cast<int>(bits.size()) != nn * nn) return false;
    BinaryWord buf(nn);
    for (int a = 0; a < nn; ++a) {
        for (int b = 0; b < nn; ++b) buf[b] = bits[a * nn + b];
        if (!code_->is_codeword(buf)) return false;
    }
    for (int b = 0; b < nn; ++b) {
        for (int a = 0; a < nn; ++a) buf[a] = bits[a * nn + b];
        if (!code_->is_codeword(buf)) return false;
    }
    return true;
}

namespace {

// Agreement hard decision: valid only if both incoming messages of every
// variable node are non-erased and equal.
bool extract_candidate(const TernaryWord& to_row, const TernaryWord& to_col,
                       std::vector<uint8_t>& out) {
    out.resize(to_row.size());
    for (size_t i = 0; i < to_row.size(); ++i) {
        if (to_row[i] != to_col[i] || is_erased(to_row[i])) return false;
        out[i] = bit_of(to_row[i]);
    }
    return true;
}

}  // namespace

DecodeResult ProductCode::decode(const TernaryWord& received, const DecoderConfig& cfg,
                                 uint64_t seed) const {
    const int nn = n();
    if (static_cast<int>(received.size()) != nn * nn)
        throw std::invalid_argument("product decode: received must be n*n symbols");

    // to_row[a*n+b]: message bit (a,b) currently sends to its row CN, i.e.
    // the last message it received from its column CN; to_col is the mirror.
    TernaryWord to_row(received), to_col(received);
    DecodeResult res;
    std::vector<uint8_t> candidate;

    auto converged = [&]() {
        return extract_candidate(to_row, to_col, candidate) && is_codeword_array(candidate);
    };

    TernaryWord y(nn), r(nn);
    int l = 0;
    bool done = converged();
    while (!done && l < cfg.half_iterations) {
        const bool row_plane = (l % 2) == 0;
        for (int cn = 0; cn < nn; ++cn) {
            for (int kk = 0; kk < nn; ++kk) {
                const int idx = row_plane ? cn * nn + kk : kk * nn + cn;
                y[kk] = row_plane ? to_row[idx] : to_col[idx];
                r[kk] = received[idx];
            }
            RngStream fill_rng = RngStream::keyed(
                seed, {rng_tag::fill, static_cast<uint64_t>(l), static_cast<uint64_t>(cn)});
            RngStream tie_rng = RngStream::keyed(
                seed, {rng_tag::tie, static_cast<uint64_t>(l), static_cast<uint64_t>(cn)});
            const FillPlan plan = random_fill_plan(nn, fill_rng);
            const CnInput in{y, r, *code_, plan, cfg.tie, &tie_rng};
            const CnOutput out = run_cn_update(in, cfg);
            res.stats.merge(out.stats);
            for (int kk = 0; kk < nn; ++kk) {
                const int idx = row_plane ? cn * nn + kk : kk * nn + cn;
                (row_plane ? to_col : to_row)[idx] = out.extrinsic[kk];
            }
        }
        ++l;
        done = converged();
    }

    res.half_iterations_used = l;
    res.converged = done;
    if (done) {
        res.bits = std::move(candidate);
    } else {
        res.bits.resize(nn * nn);
        for (int i = 0; i < nn * nn; ++i) {
            RngStream rng =
                RngStream::keyed(seed, {rng_tag::final_decision, static_cast<uint64_t>(i)});
            // to_col holds the last message from the row CN, to_row from the column CN
            res.bits[i] = vn_final_decision(to_col[i], to_row[i], rng);
        }
    }
    return res;
}

}  // namespace eae
