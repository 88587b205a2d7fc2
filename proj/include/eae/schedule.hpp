#pragma once

#include <cstdint>

#include "eae/cn_update.hpp"
#include "eae/rng.hpp"

namespace eae {

// Message-passing rule for the check-node side. `lcea` computes exact
// extrinsic messages from one intrinsic decode; `hlcea` replaces the
// re-decode cases with heuristic values; `emp_naive` is the per-position
// oracle (n component decodes per CN update).
enum class Rule : uint8_t { imp, emp_naive, lcea, hlcea };

struct DecoderConfig {
    Rule rule = Rule::lcea;
    ComponentDecoder component = ComponentDecoder::eaed;
    int half_iterations = 20;   // product code
    int window_length = 7;      // staircase
    int window_iterations = 3;  // staircase
    TieRule tie = TieRule::random;
};

struct DecodeResult {
    std::vector<uint8_t> bits;
    CnStats stats;
    int half_iterations_used = 0;
    bool converged = false;
};

// Final value of a variable node: a uniform choice between its two incoming
// messages; an erased choice becomes a uniform random bit.
uint8_t vn_final_decision(Trit from_first, Trit from_second, RngStream& rng);

// Dispatches one CN update according to the configured rule/component.
CnOutput run_cn_update(const CnInput& in, const DecoderConfig& cfg);

}  // namespace eae
