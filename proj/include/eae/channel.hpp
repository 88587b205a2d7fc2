#pragma once

#include "eae/rng.hpp"
#include "eae/words.hpp"

namespace eae {

// Binary-input AWGN channel with ternary-quantized output. Es/N0 is linear
// here; dB conversion happens at the CLI boundary. The noise variance is
// sigma^2 = 1 / (2 Es/N0); received values in [-T, +T] become erasures.
struct ChannelParams {
    double es_n0 = 1.0;
    double erasure_threshold = 0.0;  // T >= 0

    double sigma_sq() const { return 0.5 / es_n0; }
};

struct EaeChannelStats {
    double error_prob = 0.0;    // delta_c
    double erasure_prob = 0.0;  // epsilon_c
    double correct_prob = 1.0;  // c_c = 1 - delta_c - epsilon_c
};

// Gaussian tail probability Q(x) = P(N(0,1) > x).
double qfunc(double x);

// delta_c = Q(sqrt(2 Es/N0) (T+1)),
// epsilon_c = 1 - Q(sqrt(2 Es/N0) (T-1)) - Q(sqrt(2 Es/N0) (T+1)).
EaeChannelStats eae_probabilities(const ChannelParams& p);

// Capacity of the error-and-erasure channel,
// C = c log2(2c/(1-eps)) + delta log2(2 delta/(1-eps)), with 0 log 0 = 0.
double eae_capacity(const ChannelParams& p);

struct ThresholdOptimum {
    double t_opt = 0.0;
    double capacity = 0.0;
};

// Maximizes capacity over T in [0, 1.5]: coarse grid (step 0.01) plus
// golden-section refinement to 1e-4 absolute tolerance in T. Deterministic.
ThresholdOptimum optimize_erasure_threshold(double es_n0);

// BPSK-maps bits (0 -> +1, 1 -> -1), adds Gaussian noise, quantizes to
// {0, ?, 1} with the closed interval [-T, +T] declared erased.
void transmit(const BinaryWord& bits, const ChannelParams& p, RngStream& rng, TernaryWord& out);

double db_to_linear(double db);
double linear_to_db(double linear);

}  // namespace eae
