#include "eae/bch.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace eae {

namespace {

// Minimal polynomial of alpha^i over GF(2): product of (x - alpha^j) over the
// cyclotomic coset of i. Coefficients come out in {0,1}.
std::vector<uint8_t> minimal_polynomial(const GaloisField& gf, int i) {
    std::vector<int> coset;
    int j = i;
    do {
        coset.push_back(j);
        j = (2 * j) % gf.order();
    } while (j != i);

    std::vector<uint32_t> poly{1};
    for (int e : coset) {
        const uint32_t root = gf.alpha_pow(e);
        std::vector<uint32_t> next(poly.size() + 1, 0);
        for (size_t d = 0; d < poly.size(); ++d) {
            next[d + 1] ^= poly[d];
            next[d] ^= gf.mul(poly[d], root);
        }
        poly = std::move(next);
    }
    std::vector<uint8_t> bits(poly.size());
    for (size_t d = 0; d < poly.size(); ++d) {
        if (poly[d] > 1) throw std::logic_error("minimal polynomial has a non-binary coefficient");
        bits[d] = static_cast<uint8_t>(poly[d]);
    }
    return bits;
}

std::vector<uint8_t> poly_mul_gf2(const std::vector<uint8_t>& a, const std::vector<uint8_t>& b) {
    std::vector<uint8_t> out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) out[i + j] ^= b[j];
    }
    return out;
}

bool poly_has_root_one(const std::vector<uint8_t>& g) {
    int ones = 0;
    for (uint8_t c : g) ones ^= c;
    return ones == 0;  // g(1) = parity of coefficients
}

int word_parity(const BinaryWord& w) {
    int p = 0;
    for (uint8_t b : w) p ^= b;
    return p;
}

}  // namespace

ComponentCode::ComponentCode(int nu, int t, bool even_weight, int shortening)
    : field_(std::make_shared<GaloisField>(nu)) {
    const int parent_n = field_->order();
    if (t < 1 || 2 * t + 1 > parent_n)
        throw std::invalid_argument("BCH parameters infeasible: need 2t+1 <= 2^nu - 1");

    // g(x) = lcm of the minimal polynomials of alpha^1 .. alpha^2t.
    std::vector<uint8_t> g{1};
    std::vector<bool> covered(parent_n, false);
    for (int i = 1; i <= 2 * t; ++i) {
        if (covered[i]) continue;
        int j = i;
        do {
            covered[j] = true;
            j = (2 * j) % parent_n;
        } while (j != i);
        g = poly_mul_gf2(g, minimal_polynomial(*field_, i));
    }
    if (even_weight && !poly_has_root_one(g)) g = poly_mul_gf2(g, {1, 1});

    const int deg_g = static_cast<int>(g.size()) - 1;
    const int k_full = parent_n - deg_g;
    if (shortening < 0 || shortening >= k_full)
        throw std::invalid_argument("shortening must be in [0, k)");
    if (k_full - shortening < 1) throw std::invalid_argument("code has no information bits");

    spec_.nu = nu;
    spec_.parent_length = parent_n;
    spec_.shortening = shortening;
    spec_.n = parent_n - shortening;
    spec_.k = k_full - shortening;
    spec_.t = t;
    spec_.d_des = 2 * t + 1;
    spec_.even_weight = even_weight;
    generator_ = std::move(g);

    syndrome_table_.assign(2 * t, std::vector<uint32_t>(spec_.n));
    for (int l = 1; l <= 2 * t; ++l) {
        for (int j = 0; j < spec_.n; ++j) {
            syndrome_table_[l - 1][j] = field_->alpha_pow((spec_.n - 1 - j) * l);
        }
    }
}

BinaryWord ComponentCode::encode(const BinaryWord& info) const {
    if (static_cast<int>(info.size()) != spec_.k)
        throw std::invalid_argument("encode: info length must be k = " + std::to_string(spec_.k));
    const int n = spec_.n;
    const int p = n - spec_.k;  // deg g

    // Coefficient array indexed by exponent; info bit j sits at x^(n-1-j).
    std::vector<uint8_t> rem(n, 0);
    for (int j = 0; j < spec_.k; ++j) rem[n - 1 - j] = info[j];
    for (int e = n - 1; e >= p; --e) {
        if (!rem[e]) continue;
        const int shift = e - p;
        for (int d = 0; d <= p; ++d) rem[shift + d] ^= generator_[d];
    }

    BinaryWord word(n);
    for (int j = 0; j < spec_.k; ++j) word[j] = info[j];
    for (int j = spec_.k; j < n; ++j) word[j] = rem[n - 1 - j];
    return word;
}

void ComponentCode::compute_syndromes(const BinaryWord& word, std::vector<uint32_t>& out) const {
    const int m = 2 * spec_.t;
    out.assign(m, 0);
    for (int j = 0; j < spec_.n; ++j) {
        if (!word[j]) continue;
        for (int l = 0; l < m; ++l) out[l] ^= syndrome_table_[l][j];
    }
}

bool ComponentCode::is_codeword(const BinaryWord& word) const {
    if (static_cast<int>(word.size()) != spec_.n) return false;
    if (spec_.even_weight && word_parity(word) != 0) return false;
    std::vector<uint32_t> synd;
    compute_syndromes(word, synd);
    return std::all_of(synd.begin(), synd.end(), [](uint32_t s) { return s == 0; });
}

BddOutcome ComponentCode::bdd(const BinaryWord& received) const {
    if (static_cast<int>(received.size()) != spec_.n)
        throw std::invalid_argument("bdd: word length must be n");
    const GaloisField& gf = *field_;
    const int t = spec_.t;
    const int m = 2 * t;

    std::vector<uint32_t> synd;
    compute_syndromes(received, synd);
    const bool clean = std::all_of(synd.begin(), synd.end(), [](uint32_t s) { return s == 0; });
    if (clean) {
        if (spec_.even_weight && word_parity(received) != 0) return {false, received, kInfDistance};
        return {true, received, 0};
    }

    // Berlekamp-Massey over GF(2^nu).
    std::vector<uint32_t> lambda(m + 2, 0), prev(m + 2, 0), scratch(m + 2, 0);
    lambda[0] = 1;
    prev[0] = 1;
    int len = 0, gap = 1;
    uint32_t prev_disc = 1;
    for (int i = 0; i < m; ++i) {
        uint32_t disc = synd[i];
        for (int j = 1; j <= len; ++j) disc ^= gf.mul(lambda[j], synd[i - j]);
        if (disc == 0) {
            ++gap;
            continue;
        }
        const uint32_t scale = gf.mul(disc, gf.inv(prev_disc));
        if (2 * len <= i) {
            scratch = lambda;
            for (int j = 0; j + gap <= m + 1; ++j) {
                if (prev[j]) lambda[j + gap] ^= gf.mul(scale, prev[j]);
            }
            len = i + 1 - len;
            prev = std::move(scratch);
            scratch.assign(m + 2, 0);
            prev_disc = disc;
            gap = 1;
        } else {
            for (int j = 0; j + gap <= m + 1; ++j) {
                if (prev[j]) lambda[j + gap] ^= gf.mul(scale, prev[j]);
            }
            ++gap;
        }
    }
    if (len > t) return {false, received, kInfDistance};

    // Chien search over the whole parent field; an error locator pointing at
    // a shortened position, or a root deficit, is a decoding failure.
    std::vector<uint32_t> term(len + 1), step(len + 1);
    for (int j = 0; j <= len; ++j) {
        term[j] = lambda[j];
        step[j] = gf.alpha_pow(-j);
    }
    std::vector<int> error_pos;
    for (int e = 0; e < spec_.parent_length; ++e) {
        uint32_t val = 0;
        for (int j = 0; j <= len; ++j) val ^= term[j];
        if (val == 0) {
            if (e >= spec_.n) return {false, received, kInfDistance};
            error_pos.push_back(spec_.n - 1 - e);
        }
        for (int j = 1; j <= len; ++j) term[j] = gf.mul(term[j], step[j]);
    }
    if (static_cast<int>(error_pos.size()) != len) return {false, received, kInfDistance};

    // Verify: the error pattern must explain every syndrome.
    for (int l = 1; l <= m; ++l) {
        uint32_t s = synd[l - 1];
        for (int pos : error_pos) s ^= syndrome_table_[l - 1][pos];
        if (s != 0) return {false, received, kInfDistance};
    }
    if (spec_.even_weight && (word_parity(received) ^ (len & 1)) != 0)
        return {false, received, kInfDistance};

    BinaryWord word = received;
    for (int pos : error_pos) word[pos] ^= 1;
    return {true, std::move(word), len};
}

}  // namespace eae
