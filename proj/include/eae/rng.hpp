#pragma once

#include <cstdint>
#include <initializer_list>

namespace eae {

// Purpose tags for deriving independent substreams from one master seed.
namespace rng_tag {
constexpr uint64_t channel = 0x01;
constexpr uint64_t info = 0x02;
constexpr uint64_t fill = 0x03;
constexpr uint64_t tie = 0x04;
constexpr uint64_t final_decision = 0x05;
constexpr uint64_t decode = 0x06;
constexpr uint64_t probe = 0x07;
constexpr uint64_t test = 0x7F;
}  // namespace rng_tag

// Key derivation for substreams; RngStream::keyed uses this.
uint64_t derive_key(uint64_t seed, std::initializer_list<uint64_t> tags);

// Counter-based stream: Philox2x64-10 (Salmon et al., "Parallel random
// numbers: as easy as 1, 2, 3"). A stream is (key, block counter); streams
// with distinct keys are independent, so trials/CNs can draw in parallel
// without shared state and results do not depend on execution order.
class RngStream {
public:
    explicit RngStream(uint64_t key, uint64_t counter_hi = 0)
        : key_(key), ctr_hi_(counter_hi) {}

    // Derive a stream key from a master seed plus structured tags
    // (purpose, trial index, iteration, node id, ...).
    static RngStream keyed(uint64_t seed, std::initializer_list<uint64_t> tags);

    uint64_t next_u64();
    double next_double();        // uniform in [0, 1)
    uint32_t next_bit();
    uint64_t next_below(uint64_t bound);  // uniform in [0, bound)
    double next_gaussian();      // standard normal, Box-Muller

private:
    uint64_t key_;
    uint64_t ctr_hi_;
    uint64_t ctr_lo_ = 0;
    uint64_t buffer_[2] = {0, 0};
    int avail_ = 0;
    double cached_gaussian_ = 0.0;
    bool has_cached_gaussian_ = false;

    void refill();
};

// SplitMix64 finalizer; used for key derivation.
uint64_t mix64(uint64_t x);

}  // namespace eae
