#include "eae/eaed.hpp"

#include <stdexcept>

namespace eae {

FillPlan random_fill_plan(int n, RngStream& rng) {
    FillPlan plan;
    plan.base.resize(n);
    for (int i = 0; i < n; ++i) plan.base[i] = static_cast<uint8_t>(rng.next_bit());
    return plan;
}

std::pair<BinaryWord, BinaryWord> fill_erasures(const TernaryWord& y, const FillPlan& plan) {
    const size_t n = y.size();
    if (plan.base.size() != n) throw std::invalid_argument("fill plan length mismatch");
    BinaryWord a(n), b(n);
    for (size_t i = 0; i < n; ++i) {
        if (is_erased(y[i])) {
            a[i] = plan.base[i];
            b[i] = plan.base[i] ^ 1;
        } else {
            a[i] = b[i] = bit_of(y[i]);
        }
    }
    return {std::move(a), std::move(b)};
}

bool in_decoding_sphere(const BinaryWord& c, const TernaryWord& y, int d_des) {
    return eae_distance(c, y) < d_des;
}

EaedTrials run_fill_trials(const TernaryWord& y, const FillPlan& plan, const ComponentCode& code) {
    EaedTrials out;
    out.erasures = count_erasures(y);
    auto [fill1, fill2] = fill_erasures(y, plan);
    out.fill[0] = std::move(fill1);
    out.fill[1] = std::move(fill2);
    out.trial[0] = code.bdd(out.fill[0]);
    if (out.erasures == 0) {
        out.trial[1] = out.trial[0];  // fills coincide, second trial skipped
        out.bdd_steps = 1;
    } else {
        out.trial[1] = code.bdd(out.fill[1]);
        out.bdd_steps = 2;
    }
    for (int i = 0; i < 2; ++i) {
        if (out.trial[i].success) out.dne[i] = d_non_erased(y, out.trial[i].word);
    }
    return out;
}

EaeOutcome select_eaed_result(const TernaryWord& y, const EaedTrials& trials, TieRule tie,
                              RngStream* tie_rng) {
    EaeOutcome out;
    out.d1 = trials.dne[0];
    out.d2 = trials.dne[1];
    out.bdd_steps = trials.bdd_steps;
    const bool s1 = trials.trial[0].success;
    const bool s2 = trials.trial[1].success;
    if (!s1 && !s2) {
        out.word = y;
        return out;
    }
    int pick;
    if (s1 != s2) {
        pick = s1 ? 0 : 1;
    } else if (trials.dne[0] != trials.dne[1]) {
        pick = trials.dne[0] < trials.dne[1] ? 0 : 1;
    } else if (trials.trial[0].word == trials.trial[1].word) {
        pick = 0;  // same codeword either way; do not consume randomness
    } else if (tie == TieRule::prefer_first || tie_rng == nullptr) {
        pick = 0;
    } else {
        pick = static_cast<int>(tie_rng->next_bit());
    }
    out.success = true;
    out.chosen_fill = pick + 1;
    out.word = to_ternary(trials.trial[pick].word);
    return out;
}

EaeOutcome eaed(const TernaryWord& y, const FillPlan& plan, TieRule tie, const ComponentCode& code,
                RngStream* tie_rng) {
    if (count_erasures(y) >= code.spec().d_des) {
        EaeOutcome out;
        out.word = y;
        return out;
    }
    const EaedTrials trials = run_fill_trials(y, plan, code);
    return select_eaed_result(y, trials, tie, tie_rng);
}

EaeOutcome eaed_plus(const TernaryWord& y, const FillPlan& plan, const ComponentCode& code) {
    const int d_des = code.spec().d_des;
    EaeOutcome out;
    if (count_erasures(y) >= d_des) {
        out.word = y;
        return out;
    }
    const EaedTrials trials = run_fill_trials(y, plan, code);
    out.d1 = trials.dne[0];
    out.d2 = trials.dne[1];
    out.bdd_steps = trials.bdd_steps;
    for (int i = 0; i < 2; ++i) {
        if (!trials.trial[i].success) continue;
        if (2 * trials.dne[i] + trials.erasures < d_des) {
            out.success = true;
            out.chosen_fill = i + 1;
            out.word = to_ternary(trials.trial[i].word);
            return out;
        }
    }
    out.word = y;
    return out;
}

}  // namespace eae
