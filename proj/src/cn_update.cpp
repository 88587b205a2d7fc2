#include "eae/cn_update.hpp"

#include <stdexcept>

namespace eae {

std::string_view cn_case_name(CnCase c) {
    switch (c) {
        case CnCase::cn_all_erased: return "cn_all_erased";
        case CnCase::unchanged: return "unchanged";
        case CnCase::erasure_budget: return "erasure_budget";
        case CnCase::case1: return "case1";
        case CnCase::case1_tie: return "case1_tie";
        case CnCase::case2_forced: return "case2_forced";
        case CnCase::case2_redecode: return "case2_redecode";
        case CnCase::case2_heuristic: return "case2_heuristic";
        case CnCase::case3_forced: return "case3_forced";
        case CnCase::case3_redecode: return "case3_redecode";
        case CnCase::case3_heuristic: return "case3_heuristic";
        case CnCase::plus_keep: return "plus_keep";
        case CnCase::plus_channel: return "plus_channel";
        case CnCase::plus_redecode: return "plus_redecode";
        default: return "?";
    }
}

void CnStats::merge(const CnStats& other) {
    bdd_steps += other.bdd_steps;
    redecodes += other.redecodes;
    cn_updates += other.cn_updates;
    for (size_t i = 0; i < cases.size(); ++i) cases[i] += other.cases[i];
}

int updated_fill_distance(int d, Trit y_k, Trit r_k, uint8_t fill_bit, uint8_t w_bit) {
    if (d >= kInfDistance) return kInfDistance;
    const uint8_t old_bit = is_erased(y_k) ? fill_bit : bit_of(y_k);
    const uint8_t new_bit = is_erased(r_k) ? fill_bit : bit_of(r_k);
    return d + (new_bit != w_bit) - (old_bit != w_bit);
}

int updated_non_erased_distance(int d, Trit y_k, Trit r_k, uint8_t w_bit) {
    if (d >= kInfDistance) return kInfDistance;
    if (is_erased(y_k)) return d;
    const int old_term = bit_of(y_k) != w_bit;
    if (is_erased(r_k)) return d - old_term;  // position k becomes erased
    return d + (bit_of(r_k) != w_bit) - old_term;
}

int updated_eae_distance(int d, Trit y_k, Trit r_k, uint8_t w_bit) {
    if (d >= kInfDistance) return kInfDistance;
    if (is_erased(y_k)) return d;
    const int old_term = bit_of(y_k) != w_bit;
    if (is_erased(r_k)) return d + 1 - 2 * old_term;
    return d + 2 * ((bit_of(r_k) != w_bit) - old_term);
}

namespace {

void require_erasure_implication(const CnInput& in) {
    for (size_t k = 0; k < in.messages.size(); ++k) {
        if (is_erased(in.messages[k]) && !is_erased(in.channel[k]))
            throw std::invalid_argument(
                "CN input violates the erasure implication (message erased, channel not)");
    }
}

TernaryWord decode_broadcast(const CnInput& in, const TernaryWord& y, ComponentDecoder decoder,
                             CnStats& stats) {
    switch (decoder) {
        case ComponentDecoder::bdd: {
            const BddOutcome out = in.code.bdd(to_binary(y));
            stats.bdd_steps += 1;
            return out.success ? to_ternary(out.word) : y;
        }
        case ComponentDecoder::eaed: {
            const EaeOutcome out = eaed(y, in.plan, in.tie, in.code, in.tie_rng);
            stats.bdd_steps += out.bdd_steps;
            return out.word;
        }
        case ComponentDecoder::eaed_plus: {
            const EaeOutcome out = eaed_plus(y, in.plan, in.code);
            stats.bdd_steps += out.bdd_steps;
            return out.word;
        }
    }
    throw std::logic_error("unknown component decoder");
}

}  // namespace

CnOutput imp_cn_update(const CnInput& in, ComponentDecoder decoder) {
    CnOutput out;
    out.stats.cn_updates = 1;
    out.extrinsic = decode_broadcast(in, in.messages, decoder, out.stats);
    return out;
}

CnOutput naive_emp_cn_update(const CnInput& in, ComponentDecoder decoder) {
    const size_t n = in.messages.size();
    CnOutput out;
    out.stats.cn_updates = 1;
    out.extrinsic.resize(n);
    TernaryWord modified = in.messages;
    for (size_t k = 0; k < n; ++k) {
        const Trit saved = modified[k];
        modified[k] = in.channel[k];
        out.extrinsic[k] = decode_broadcast(in, modified, decoder, out.stats)[k];
        modified[k] = saved;
    }
    return out;
}

CnOutput naive_emp_cn_update_fresh(const CnInput& in, ComponentDecoder decoder,
                                   RngStream& fresh_rng) {
    const size_t n = in.messages.size();
    CnOutput out;
    out.stats.cn_updates = 1;
    out.extrinsic.resize(n);
    TernaryWord modified = in.messages;
    for (size_t k = 0; k < n; ++k) {
        const Trit saved = modified[k];
        modified[k] = in.channel[k];
        const FillPlan plan = random_fill_plan(static_cast<int>(n), fresh_rng);
        const CnInput per_position{modified, in.channel, in.code, plan, TieRule::random,
                                   &fresh_rng};
        out.extrinsic[k] = decode_broadcast(per_position, modified, decoder, out.stats)[k];
        modified[k] = saved;
    }
    return out;
}

CnOutput lcea_bsc_cn_update(const CnInput& in) {
    const BinaryWord y = to_binary(in.messages);  // throws if any erasure
    const BinaryWord r = to_binary(in.channel);
    const int t = in.code.spec().t;
    CnOutput out;
    out.stats.cn_updates = 1;
    out.stats.bdd_steps = 1;
    const BddOutcome imp = in.code.bdd(y);
    const int d0 = imp.success ? imp.distance : kInfDistance;
    out.extrinsic.resize(y.size());
    for (size_t k = 0; k < y.size(); ++k) {
        if (y[k] == r[k]) {
            out.extrinsic[k] = trit_of(imp.word[k]);
            out.stats.add_case(CnCase::unchanged);
            continue;
        }
        const int dk = d0 >= kInfDistance ? kInfDistance
                                          : d0 + (imp.word[k] == r[k] ? -1 : 1);
        if (dk <= t) {
            out.extrinsic[k] = trit_of(imp.word[k]);
            out.stats.add_case(CnCase::case1);
        } else {
            out.extrinsic[k] = trit_of(r[k]);
            out.stats.add_case(CnCase::case2_forced);
        }
    }
    return out;
}

CnOutput lcea_eaed_cn_update(const CnInput& in, LceaMode mode) {
    require_erasure_implication(in);
    const TernaryWord& y = in.messages;
    const TernaryWord& r = in.channel;
    const int n = static_cast<int>(y.size());
    const int t = in.code.spec().t;
    const int d_des = in.code.spec().d_des;

    CnOutput out;
    out.stats.cn_updates = 1;
    const int erasures = count_erasures(y);
    if (erasures >= d_des) {
        out.extrinsic = r;
        out.stats.add_case(CnCase::cn_all_erased);
        return out;
    }

    const EaedTrials trials = run_fill_trials(y, in.plan, in.code);
    out.stats.bdd_steps += trials.bdd_steps;
    const EaeOutcome imp = select_eaed_result(y, trials, in.tie, in.tie_rng);

    out.extrinsic.resize(n);
    TernaryWord modified;  // lazily built for re-decodes
    auto redecode = [&](int k) {
        if (modified.empty()) modified = y;
        const Trit saved = modified[k];
        modified[k] = r[k];
        const EaeOutcome res = eaed(modified, in.plan, in.tie, in.code, in.tie_rng);
        modified[k] = saved;
        out.stats.bdd_steps += res.bdd_steps;
        ++out.stats.redecodes;
        return res.word[k];
    };

    for (int k = 0; k < n; ++k) {
        const Trit y_k = y[k];
        const Trit r_k = r[k];
        if (y_k == r_k) {
            out.extrinsic[k] = imp.word[k];
            out.stats.add_case(CnCase::unchanged);
            continue;
        }
        const int erasures_k = erasures + (!is_erased(y_k) && is_erased(r_k) ? 1 : 0);
        if (erasures_k >= d_des) {
            out.extrinsic[k] = r_k;
            out.stats.add_case(CnCase::erasure_budget);
            continue;
        }
        const uint8_t fill_bit[2] = {in.plan.base[k], static_cast<uint8_t>(in.plan.base[k] ^ 1)};
        int dist_k[2];
        uint8_t trial_bit[2] = {0, 0};
        for (int i = 0; i < 2; ++i) {
            if (trials.trial[i].success) trial_bit[i] = trials.trial[i].word[k];
            dist_k[i] = updated_fill_distance(
                trials.trial[i].success ? trials.trial[i].distance : kInfDistance, y_k, r_k,
                fill_bit[i], trial_bit[i]);
        }
        const bool in1 = dist_k[0] <= t;
        const bool in2 = dist_k[1] <= t;
        if (in1 && in2) {
            const int dn1 = updated_non_erased_distance(trials.dne[0], y_k, r_k, trial_bit[0]);
            const int dn2 = updated_non_erased_distance(trials.dne[1], y_k, r_k, trial_bit[1]);
            if (dn1 != dn2) {
                out.extrinsic[k] = trit_of(dn1 < dn2 ? trial_bit[0] : trial_bit[1]);
                out.stats.add_case(CnCase::case1);
            } else if (trial_bit[0] == trial_bit[1]) {
                out.extrinsic[k] = trit_of(trial_bit[0]);
                out.stats.add_case(CnCase::case1);
            } else {
                const int pick = (in.tie == TieRule::random && in.tie_rng != nullptr)
                                     ? static_cast<int>(in.tie_rng->next_bit())
                                     : 0;
                out.extrinsic[k] = trit_of(trial_bit[pick]);
                out.stats.add_case(CnCase::case1_tie);
            }
        } else if (in1 || in2) {  // Case 3: exactly one trial stays in radius
            const int i = in1 ? 0 : 1;
            const int j = 1 - i;
            const uint8_t y_fill_j = is_erased(y_k) ? fill_bit[j] : bit_of(y_k);
            const bool consistent = (!is_erased(r_k) && bit_of(r_k) == trial_bit[i]) ||
                                    (is_erased(r_k) && y_fill_j == fill_bit[j]);
            if (consistent) {
                out.extrinsic[k] = trit_of(trial_bit[i]);
                out.stats.add_case(CnCase::case3_forced);
            } else if (mode == LceaMode::exact) {
                out.extrinsic[k] = redecode(k);
                out.stats.add_case(CnCase::case3_redecode);
            } else {
                out.extrinsic[k] = trit_of(trial_bit[i]);
                out.stats.add_case(CnCase::case3_heuristic);
            }
        } else {  // Case 2: both trials out of radius
            if (!is_erased(r_k)) {
                out.extrinsic[k] = r_k;
                out.stats.add_case(CnCase::case2_forced);
            } else if (mode == LceaMode::exact) {
                out.extrinsic[k] = redecode(k);
                out.stats.add_case(CnCase::case2_redecode);
            } else {
                out.extrinsic[k] = r_k;
                out.stats.add_case(CnCase::case2_heuristic);
            }
        }
    }
    return out;
}

CnOutput lcea_eaed_plus_cn_update(const CnInput& in, LceaMode mode) {
    require_erasure_implication(in);
    const TernaryWord& y = in.messages;
    const TernaryWord& r = in.channel;
    const int n = static_cast<int>(y.size());
    const int d_des = in.code.spec().d_des;

    CnOutput out;
    out.stats.cn_updates = 1;
    if (count_erasures(y) >= d_des) {
        out.extrinsic = r;
        out.stats.add_case(CnCase::cn_all_erased);
        return out;
    }

    const EaeOutcome imp = eaed_plus(y, in.plan, in.code);
    out.stats.bdd_steps += imp.bdd_steps;
    BinaryWord imp_bits;
    int dist0 = kInfDistance;
    if (imp.success) {
        imp_bits = to_binary(imp.word);
        dist0 = eae_distance(imp_bits, y);
    }

    out.extrinsic.resize(n);
    TernaryWord modified;
    for (int k = 0; k < n; ++k) {
        const Trit y_k = y[k];
        const Trit r_k = r[k];
        const int dist_k =
            updated_eae_distance(dist0, y_k, r_k, imp.success ? imp_bits[k] : 0);
        if (dist_k < d_des) {
            out.extrinsic[k] = imp.word[k];
            out.stats.add_case(CnCase::plus_keep);
            continue;
        }
        const bool undetermined = is_erased(r_k) && y_k != r_k && !imp.success;
        if (!undetermined) {
            out.extrinsic[k] = r_k;
            out.stats.add_case(CnCase::plus_channel);
        } else if (mode == LceaMode::exact) {
            if (modified.empty()) modified = y;
            const Trit saved = modified[k];
            modified[k] = r_k;
            const EaeOutcome res = eaed_plus(modified, in.plan, in.code);
            modified[k] = saved;
            out.stats.bdd_steps += res.bdd_steps;
            ++out.stats.redecodes;
            out.extrinsic[k] = res.word[k];
            out.stats.add_case(CnCase::plus_redecode);
        } else {
            out.extrinsic[k] = r_k;
            out.stats.add_case(CnCase::plus_channel);
        }
    }
    return out;
}

}  // namespace eae
