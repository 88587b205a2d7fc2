#include "eae/rng.hpp"

#include <cmath>

namespace eae {

uint64_t mix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

uint64_t derive_key(uint64_t seed, std::initializer_list<uint64_t> tags) {
    uint64_t key = mix64(seed ^ 0xE7037ED1A0B428DBull);
    for (uint64_t t : tags) key = mix64(key + t);
    return key;
}

RngStream RngStream::keyed(uint64_t seed, std::initializer_list<uint64_t> tags) {
    return RngStream(derive_key(seed, tags));
}

namespace {

constexpr uint64_t kPhiloxM = 0xD2B74407B1CE6E93ull;
constexpr uint64_t kPhiloxW = 0x9E3779B97F4A7C15ull;

inline void philox_round(uint64_t& x0, uint64_t& x1, uint64_t key) {
    const unsigned __int128 prod = static_cast<unsigned __int128>(kPhiloxM) * x0;
    const uint64_t hi = static_cast<uint64_t>(prod >> 64);
    const uint64_t lo = static_cast<uint64_t>(prod);
    x0 = hi ^ key ^ x1;
    x1 = lo;
}

}  // namespace

void RngStream::refill() {
    uint64_t x0 = ctr_hi_, x1 = ctr_lo_, k = key_;
    for (int r = 0; r < 10; ++r) {
        philox_round(x0, x1, k);
        k += kPhiloxW;
    }
    buffer_[0] = x0;
    buffer_[1] = x1;
    avail_ = 2;
    if (++ctr_lo_ == 0) ++ctr_hi_;
}

uint64_t RngStream::next_u64() {
    if (avail_ == 0) refill();
    return buffer_[--avail_];
}

double RngStream::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

uint32_t RngStream::next_bit() { return static_cast<uint32_t>(next_u64() >> 63); }

uint64_t RngStream::next_below(uint64_t bound) {
    // Rejection-free threshold method would bias by < 2^-64 * bound; for
    // simulation use the plain multiply-shift partition is fine and fast.
    const unsigned __int128 wide = static_cast<unsigned __int128>(next_u64()) * bound;
    return static_cast<uint64_t>(wide >> 64);
}

double RngStream::next_gaussian() {
    if (has_cached_gaussian_) {
        has_cached_gaussian_ = false;
        return cached_gaussian_;
    }
    double u1 = next_double();
    while (u1 <= 0.0) u1 = next_double();
    const double u2 = next_double();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 6.283185307179586476925286766559 * u2;
    cached_gaussian_ = radius * std::sin(angle);
    has_cached_gaussian_ = true;
    return radius * std::cos(angle);
}

}  // namespace eae
