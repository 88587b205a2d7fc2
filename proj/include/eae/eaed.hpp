#pragma once

#include <cstdint>
#include <utility>

#include "eae/bch.hpp"
#include "eae/rng.hpp"
#include "eae/words.hpp"

namespace eae {

// Erasure fill randomness for one component decode. `base` is a full-length
// binary word: fill 1 takes base[e] at every erased position e, fill 2 takes
// the complement. Keeping the plan full-length makes the same randomness
// apply coherently to a word and to its single-position modifications, which
// is what couples the low-complexity update to the naive per-position oracle.
struct FillPlan {
    BinaryWord base;
};

FillPlan random_fill_plan(int n, RngStream& rng);

// Tie handling when both fills decode at equal distance: production draws a
// fair coin from the supplied stream, coupled/test mode prefers fill 1.
enum class TieRule : uint8_t { prefer_first, random };

// Two binary completions of y: equal to y off the erasures, complementary on
// them per the plan.
std::pair<BinaryWord, BinaryWord> fill_erasures(const TernaryWord& y, const FillPlan& plan);

// Ternary Hamming sphere membership: 2*d_non_erased(y, c) + |E(y)| < d_des.
bool in_decoding_sphere(const BinaryWord& c, const TernaryWord& y, int d_des);

// The two BDD trials of one error-and-erasure decode, kept around so the
// check-node update rules can reuse per-trial words and distances.
struct EaedTrials {
    int erasures = 0;
    BinaryWord fill[2];
    BddOutcome trial[2];   // trial[i].distance = d_H(trial word, fill i)
    int dne[2] = {kInfDistance, kInfDistance};  // d_non_erased(y, trial word)
    int bdd_steps = 0;     // 2, or 1 when y had no erasures (fills coincide)
};

// Runs both fills through BDD. Precondition: count_erasures(y) < d_des.
EaedTrials run_fill_trials(const TernaryWord& y, const FillPlan& plan, const ComponentCode& code);

struct EaeOutcome {
    bool success = false;
    TernaryWord word;      // codeword (erasure-free) on success, input on failure
    int d1 = kInfDistance;  // d_non_erased(y, trial i), inf for a failed trial
    int d2 = kInfDistance;
    int chosen_fill = 0;   // 1 or 2; 0 on failure
    int bdd_steps = 0;
};

// Selection step of the two-trial decode (failure passthrough, single
// success, smaller distance, tie rule). Exposed separately for reuse.
EaeOutcome select_eaed_result(const TernaryWord& y, const EaedTrials& trials, TieRule tie,
                              RngStream* tie_rng);

// Error-and-erasure decoder: fail if |E(y)| >= d_des, otherwise decode both
// complementary fills and keep the closer result (distance at non-erased
// coordinates, ties per rule).
EaeOutcome eaed(const TernaryWord& y, const FillPlan& plan, TieRule tie, const ComponentCode& code,
                RngStream* tie_rng = nullptr);

// Sphere decoder on the ternary sphere: succeeds with c iff some codeword c
// satisfies 2*d_non_erased(y, c) + |E(y)| < d_des. Implemented with the two
// complementary fills; if the sphere condition holds for c, at least one
// fill lies within radius t of c, so a trial finds it. Deterministic (no
// tie can occur: such a codeword is unique).
EaeOutcome eaed_plus(const TernaryWord& y, const FillPlan& plan, const ComponentCode& code);

}  // namespace eae
