#include "eae/words.hpp"

#include <stdexcept>

namespace eae {

TernaryWord to_ternary(const BinaryWord& bits) {
    TernaryWord y(bits.size());
    for (size_t i = 0; i < bits.size(); ++i) y[i] = trit_of(bits[i]);
    return y;
}

BinaryWord to_binary(const TernaryWord& word) {
    BinaryWord bits(word.size());
    for (size_t i = 0; i < word.size(); ++i) {
        if (is_erased(word[i])) throw std::invalid_argument("to_binary: word contains erasures");
        bits[i] = bit_of(word[i]);
    }
    return bits;
}

int count_erasures(const TernaryWord& y) {
    int e = 0;
    for (Trit s : y) e += is_erased(s);
    return e;
}

int d_non_erased(const TernaryWord& y, const BinaryWord& c) {
    int d = 0;
    for (size_t i = 0; i < y.size(); ++i) {
        if (!is_erased(y[i]) && bit_of(y[i]) != c[i]) ++d;
    }
    return d;
}

int eae_distance(const BinaryWord& c, const TernaryWord& y) {
    return 2 * d_non_erased(y, c) + count_erasures(y);
}

std::string to_string(const TernaryWord& y) {
    std::string s;
    s.reserve(y.size());
    for (Trit t : y) s += is_erased(t) ? '?' : static_cast<char>('0' + bit_of(t));
    return s;
}

TernaryWord parse_ternary(std::string_view text) {
    TernaryWord y;
    y.reserve(text.size());
    for (char ch : text) {
        switch (ch) {
            case '0': y.push_back(Trit::zero); break;
            case '1': y.push_back(Trit::one); break;
            case '?': y.push_back(Trit::erased); break;
            default: throw std::invalid_argument(std::string("bad ternary literal character '") + ch + "'");
        }
    }
    return y;
}

}  // namespace eae
