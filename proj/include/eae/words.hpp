#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

namespace eae {

// Ternary channel/message symbol: 0, 1, or erasure (printed "?").
enum class Trit : uint8_t { zero = 0, one = 1, erased = 2 };

using BinaryWord = std::vector<uint8_t>;  // one bit per element, values 0/1
using TernaryWord = std::vector<Trit>;

// Sentinel for "decoding failed" distances; large enough that +/-1 updates
// never wrap, and any comparison against a radius stays on the failure side.
constexpr int kInfDistance = std::numeric_limits<int>::max() / 4;

inline bool is_erased(Trit s) { return s == Trit::erased; }
inline uint8_t bit_of(Trit s) { return static_cast<uint8_t>(s); }  // valid for 0/1 only
inline Trit trit_of(uint8_t bit) { return static_cast<Trit>(bit & 1); }
inline bool trit_matches_bit(Trit s, uint8_t bit) { return s == trit_of(bit); }

TernaryWord to_ternary(const BinaryWord& bits);
// Hard view of an erasure-free word; throws if any symbol is erased.
BinaryWord to_binary(const TernaryWord& word);

int count_erasures(const TernaryWord& y);

// Hamming distance restricted to the non-erased coordinates of y.
int d_non_erased(const TernaryWord& y, const BinaryWord& c);

// Combined error-and-erasure distance 2*d_non_erased + (number of erasures).
int eae_distance(const BinaryWord& c, const TernaryWord& y);

// Literal format "0?1...": '0', '1', '?' per symbol.
std::string to_string(const TernaryWord& y);
TernaryWord parse_ternary(std::string_view text);  // throws on a bad character

}  // namespace eae
