#include "obc/codebook.hpp"

#include <cmath>

#include "obc/errors.hpp"

namespace obc {

std::string Codeword::to_string() const {
    std::string s;
    s.reserve(length);
    for (unsigned i = 0; i < length; ++i)
        s.push_back(bit(i) ? '1' : '0');
    return s;
}

unsigned floor_log2(std::uint32_t q) {
    unsigned l = 0;
    while ((std::uint32_t(1) << (l + 1)) <= q)
        ++l;
    return l;
}

bool is_power_of_two(std::uint32_t q) {
    return q != 0 && (q & (q - 1)) == 0;
}

namespace {

void check_q(std::uint32_t q) {
    if (q < 2)
        throw InvalidParameterError("q must be >= 2, got " + std::to_string(q));
    if (q > kMaxQ)
        throw InvalidParameterError("q exceeds ceiling 2^30, got " + std::to_string(q));
}

struct Split {
    unsigned floor_log;
    std::uint32_t n1;
    std::uint32_t n2;
};

Split split_counts(std::uint32_t q) {
    unsigned l = floor_log2(q);
    std::uint32_t pow = std::uint32_t(1) << (l + 1); // 2^(floor_log+1)
    return {l, pow - q, 2 * q - pow};
}

} // namespace

Codebook build_obc(std::uint32_t q) {
    check_q(q);
    auto [l, n1, n2] = split_counts(q);
    Codebook cb;
    cb.q = q;
    cb.floor_log = l;
    cb.n1 = n1;
    cb.n2 = n2;
    cb.words.reserve(q);
    // Extended children of the n2/2 smallest length-l words, then the rest.
    for (std::uint32_t v = 0; v < n2; ++v)
        cb.words.push_back({v, std::uint8_t(l + 1)});
    for (std::uint32_t v = n2 / 2; v < (std::uint32_t(1) << l); ++v)
        cb.words.push_back({v, std::uint8_t(l)});
    return cb;
}

Codeword codeword_of_index(std::uint32_t q, std::uint32_t i) {
    check_q(q);
    if (i >= q)
        throw IndexError("index " + std::to_string(i) + " out of range for q=" + std::to_string(q));
    auto [l, n1, n2] = split_counts(q);
    if (i < n2)
        return {i, std::uint8_t(l + 1)};
    return {n2 / 2 + (i - n2), std::uint8_t(l)};
}

std::uint32_t index_of_codeword(std::uint32_t q, Codeword w) {
    check_q(q);
    auto [l, n1, n2] = split_counts(q);
    if (w.length == l + 1) {
        if (w.value < n2)
            return w.value;
    } else if (w.length == l) {
        if (w.value >= n2 / 2 && w.value < (std::uint32_t(1) << l))
            return n2 + (w.value - n2 / 2);
    }
    throw NotACodewordError("\"" + w.to_string() + "\" is not a codeword of the q=" +
                            std::to_string(q) + " code");
}

DyadicRational expected_length(std::uint32_t q) {
    check_q(q);
    auto [l, n1, n2] = split_counts(q);
    (void)n1;
    (void)n2;
    // floor_log - 1 + q / 2^floor_log
    return DyadicRational(l - 1) + DyadicRational(q, l);
}

DyadicRational expected_length(const Codebook& cb) {
    return expected_length(cb.q);
}

double min_redundancy(std::uint32_t q) {
    check_q(q);
    if (is_power_of_two(q))
        return 0.0;
    return 1.0 - expected_length(q).to_double() / std::log2(double(q));
}

std::vector<DyadicRational> state_probabilities(const Codebook& cb) {
    std::vector<DyadicRational> probs;
    probs.reserve(cb.words.size());
    for (const Codeword& w : cb.words)
        probs.push_back(DyadicRational::pow2_inv(w.length));
    return probs;
}

} // namespace obc
