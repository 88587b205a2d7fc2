#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eae/bch.hpp"
#include "eae/channel.hpp"
#include "eae/schedule.hpp"

namespace eae {

enum class Structure : uint8_t { pc, scc };

struct CodeParams {
    int nu = 6;
    int t = 2;
    bool even_weight = false;
    int shortening = 0;
};

// Stop after `min_word_errors` erroneous words or `max_words` words,
// whichever comes first. Checked at deterministic batch boundaries so the
// result does not depend on thread scheduling.
struct StopRule {
    uint64_t min_word_errors = 50;
    uint64_t max_words = 100000;
};

struct SimConfig {
    CodeParams code;
    Structure structure = Structure::pc;
    int chain_length = 10;  // staircase blocks including the reference
    DecoderConfig decoder;
    ChannelParams channel;
    StopRule stop;
    uint64_t seed = 1;
    int threads = 0;      // 0 = all hardware threads
    int batch_size = 64;  // trials between stop-rule checks
};

struct RunStats {
    uint64_t bits_sent = 0;
    uint64_t bit_errors = 0;
    uint64_t words_sent = 0;
    uint64_t word_errors = 0;
    uint64_t bdd_steps = 0;
    uint64_t redecodes = 0;
    uint64_t cn_updates = 0;
    uint64_t channel_flips = 0;
    uint64_t channel_erasures = 0;

    double ber() const { return bits_sent ? static_cast<double>(bit_errors) / bits_sent : 0.0; }
    double wer() const { return words_sent ? static_cast<double>(word_errors) / words_sent : 0.0; }
    // Hard-decision channel error rate with erasures resolved by a fair coin.
    double raw_ber() const {
        return bits_sent ? (channel_flips + 0.5 * channel_erasures) / bits_sent : 0.0;
    }
    void merge(const RunStats& other);
};

// Validates a configuration (throws std::invalid_argument): plain BDD
// message passing needs an erasure-free channel (T = 0), staircase needs an
// even component length, etc.
void validate(const SimConfig& cfg);

// Monte Carlo transmission of independent codewords until the stop rule
// fires. Deterministic given (config, seed) regardless of thread count.
RunStats estimate_ber(const SimConfig& cfg);

struct ThresholdOptions {
    double target_ber = 1e-4;
    double bracket_low_db = 0.5;
    double bracket_high_db = 6.0;
    double precision_db = 0.05;
    bool optimize_threshold = true;  // scan the erasure threshold per probe
    StopRule probe_stop{50, 20000};
    StopRule scan_stop{30, 3000};
    double t_grid_max = 0.6;
    double t_grid_step = 0.05;
};

struct ThresholdProbe {
    int index = 0;
    double es_n0_db = 0.0;
    double erasure_threshold = 0.0;
    RunStats stats;
    bool below_target = false;
    bool is_scan = false;  // light estimate from the T-grid scan
};

struct ThresholdResult {
    double threshold_db = 0.0;
    double t_opt = 0.0;
    double target_ber = 0.0;
    double precision_db = 0.0;
    std::vector<ThresholdProbe> probes;
};

// Binary search over Es/N0 (dB) for the smallest value whose post-decoding
// BER is at or below the target. Requires BER(bracket low) > target and
// BER(bracket high) <= target. When optimize_threshold is set, each probe
// first scans a coarse erasure-threshold grid (light stop rule), refines
// once around the best point, and measures at the winner.
ThresholdResult find_threshold(const SimConfig& base, const ThresholdOptions& opt);

struct ComplexityPoint {
    double es_n0_db = 0.0;
    Rule rule = Rule::lcea;
    ComponentDecoder component = ComponentDecoder::bdd;
    double erasure_threshold = 0.0;
    RunStats stats;
    double steps_per_bit() const {
        return stats.bits_sent ? static_cast<double>(stats.bdd_steps) / stats.bits_sent : 0.0;
    }
};

// BDD-step counts per decoded bit over an Es/N0 grid for the T = 0 hard-
// decision baseline and the error-and-erasure variants at the capacity-
// optimal erasure threshold. Early termination stays active.
std::vector<ComplexityPoint> sweep_complexity(const SimConfig& base,
                                              const std::vector<double>& es_n0_db_grid,
                                              const StopRule& stop);

std::string rule_name(Rule r);
std::string component_name(ComponentDecoder c);

}  // namespace eae
