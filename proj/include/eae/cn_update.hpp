#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "eae/bch.hpp"
#include "eae/eaed.hpp"
#include "eae/words.hpp"

namespace eae {

enum class ComponentDecoder : uint8_t { bdd, eaed, eaed_plus };

// Per-position branch taken by the low-complexity update; the histogram is
// part of the stats so coverage and complexity can be audited.
enum class CnCase : uint8_t {
    cn_all_erased,     // whole CN skipped, |E(y)| >= d_des
    unchanged,         // y_k == r_k
    erasure_budget,    // E^k >= d_des
    case1,
    case1_tie,
    case2_forced,      // both trials out of radius, r_k != ?
    case2_redecode,
    case2_heuristic,
    case3_forced,      // one trial in radius, consistency condition holds
    case3_redecode,
    case3_heuristic,
    plus_keep,         // EaED+: updated distance stays inside the sphere
    plus_channel,      // EaED+: out of sphere, channel value is forced
    plus_redecode,     // EaED+: out of sphere, re-decode required
    count
};

std::string_view cn_case_name(CnCase c);

struct CnStats {
    uint64_t bdd_steps = 0;
    uint64_t redecodes = 0;
    uint64_t cn_updates = 0;
    std::array<uint64_t, static_cast<size_t>(CnCase::count)> cases{};

    void add_case(CnCase c) { ++cases[static_cast<size_t>(c)]; }
    uint64_t case_count(CnCase c) const { return cases[static_cast<size_t>(c)]; }
    void merge(const CnStats& other);
};

// One check-node update problem: incoming messages y, channel outputs r at
// the CN's variable nodes, and the randomness shared by all decode calls
// made while solving it. Inputs must satisfy the erasure implication
// y[k] erased => r[k] erased (messages never introduce erasures).
struct CnInput {
    const TernaryWord& messages;          // y
    const TernaryWord& channel;           // r
    const ComponentCode& code;
    const FillPlan& plan;
    TieRule tie = TieRule::prefer_first;
    RngStream* tie_rng = nullptr;
};

struct CnOutput {
    TernaryWord extrinsic;  // w, one message per socket
    CnStats stats;
};

enum class LceaMode : uint8_t { exact, heuristic };

// Intrinsic update: one component decode of y broadcast to every socket.
CnOutput imp_cn_update(const CnInput& in, ComponentDecoder decoder);

// Extrinsic update by definition: for each position k, decode y with
// position k replaced by the channel output, and emit that position. This is
// the oracle the low-complexity rules are tested against; it reuses the
// shared fill plan and tie rule so the equivalence is exact.
CnOutput naive_emp_cn_update(const CnInput& in, ComponentDecoder decoder);

// Same oracle but drawing a fresh fill plan and random ties per position
// from `fresh_rng`, as a literal reading of the per-decode randomness would.
// Statistically interchangeable with the coupled oracle; never bit-coupled
// to the low-complexity updates.
CnOutput naive_emp_cn_update_fresh(const CnInput& in, ComponentDecoder decoder,
                                   RngStream& fresh_rng);

// Extrinsic update for erasure-free inputs over plain BDD: one decode plus a
// per-position distance update.
CnOutput lcea_bsc_cn_update(const CnInput& in);

// Extrinsic update with the two-fill error-and-erasure decoder derived from
// the intrinsic decode. Exact mode re-decodes the few undetermined
// positions; heuristic mode substitutes a fixed value for them.
CnOutput lcea_eaed_cn_update(const CnInput& in, LceaMode mode);

// Extrinsic update with the sphere decoder, derived from the intrinsic
// decode via the combined error-and-erasure distance.
CnOutput lcea_eaed_plus_cn_update(const CnInput& in, LceaMode mode = LceaMode::exact);

// Distance bookkeeping used by the updates, exposed for direct testing
// against from-scratch recomputation. All three propagate kInfDistance.

// d_H(w, fill_i(y^k)) from d = d_H(w, fill_i(y)); fill_bit is the plan value
// p_i at position k, w_bit the trial word's bit there.
int updated_fill_distance(int d, Trit y_k, Trit r_k, uint8_t fill_bit, uint8_t w_bit);

// d_non_erased(y^k, w) from d = d_non_erased(y, w).
int updated_non_erased_distance(int d, Trit y_k, Trit r_k, uint8_t w_bit);

// eae_distance(w, y^k) from d = eae_distance(w, y).
int updated_eae_distance(int d, Trit y_k, Trit r_k, uint8_t w_bit);

}  // namespace eae
