#include "eae/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace eae {

double qfunc(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

EaeChannelStats eae_probabilities(const ChannelParams& p) {
    if (p.es_n0 <= 0.0) throw std::invalid_argument("Es/N0 must be positive");
    if (p.erasure_threshold < 0.0) throw std::invalid_argument("erasure threshold must be >= 0");
    const double a = std::sqrt(2.0 * p.es_n0);
    const double T = p.erasure_threshold;
    EaeChannelStats s;
    s.error_prob = qfunc(a * (T + 1.0));
    // P(-T-1 <= noise <= T-1); written as a difference of identical tails so
    // that T = 0 gives exactly zero
    s.erasure_prob = qfunc(-a * (T + 1.0)) - qfunc(a * (T - 1.0));
    if (s.erasure_prob < 0.0) s.erasure_prob = 0.0;
    s.correct_prob = 1.0 - s.error_prob - s.erasure_prob;
    return s;
}

double eae_capacity(const ChannelParams& p) {
    const EaeChannelStats s = eae_probabilities(p);
    const double non_erased = 1.0 - s.erasure_prob;
    if (non_erased <= 0.0) return 0.0;
    double c = 0.0;
    if (s.correct_prob > 0.0) c += s.correct_prob * std::log2(2.0 * s.correct_prob / non_erased);
    if (s.error_prob > 0.0) c += s.error_prob * std::log2(2.0 * s.error_prob / non_erased);
    return c;
}

ThresholdOptimum optimize_erasure_threshold(double es_n0) {
    constexpr double t_max = 1.5;
    constexpr double coarse_step = 0.01;
    auto cap = [&](double t) { return eae_capacity({es_n0, t}); };

    double best_t = 0.0, best_c = cap(0.0);
    for (double t = coarse_step; t <= t_max + 1e-12; t += coarse_step) {
        const double c = cap(t);
        if (c > best_c) {
            best_c = c;
            best_t = t;
        }
    }

    // golden-section refinement around the best coarse point
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double lo = std::max(0.0, best_t - coarse_step);
    double hi = std::min(t_max, best_t + coarse_step);
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = cap(x1), f2 = cap(x2);
    while (hi - lo > 1e-5) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = cap(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = cap(x1);
        }
    }
    const double t_ref = 0.5 * (lo + hi);
    const double c_ref = cap(t_ref);
    if (c_ref > best_c) {
        best_c = c_ref;
        best_t = t_ref;
    }
    return {best_t, best_c};
}

void transmit(const BinaryWord& bits, const ChannelParams& p, RngStream& rng, TernaryWord& out) {
    const double sigma = std::sqrt(p.sigma_sq());
    const double T = p.erasure_threshold;
    out.resize(bits.size());
    for (size_t i = 0; i < bits.size(); ++i) {
        const double v = (bits[i] ? -1.0 : 1.0) + sigma * rng.next_gaussian();
        if (v > T) out[i] = Trit::zero;
        else if (v < -T) out[i] = Trit::one;
        else out[i] = Trit::erased;
    }
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

}  // namespace eae
