#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "obc/rational.hpp"

namespace obc {

// One leaf of the code tree: `length` bits stored in the low bits of `value`,
// most significant bit first.
struct Codeword {
    std::uint32_t value = 0;
    std::uint8_t length = 0;

    bool bit(unsigned i) const { // i = 0 is the leading bit
        return (value >> (length - 1 - i)) & 1u;
    }
    std::string to_string() const;

    bool operator==(const Codeword&) const = default;
};

// The canonical maximum-expected-length prefix code for q modification
// states. Codewords are in strictly increasing lexicographic order: the
// children obtained by extending the n2/2 numerically smallest short words
// occupy indices 0..n2-1, the remaining short words follow.
struct Codebook {
    std::uint32_t q = 0;
    unsigned floor_log = 0;      // floor(log2 q)
    std::uint32_t n1 = 0;        // words of length floor_log
    std::uint32_t n2 = 0;        // words of length floor_log + 1
    std::vector<Codeword> words; // q entries, canonical order
};

inline constexpr std::uint32_t kMaxQ = 1u << 30;

unsigned floor_log2(std::uint32_t q);
bool is_power_of_two(std::uint32_t q);

Codebook build_obc(std::uint32_t q);

// words[i] of build_obc(q) without materializing the codebook.
Codeword codeword_of_index(std::uint32_t q, std::uint32_t i);
std::uint32_t index_of_codeword(std::uint32_t q, Codeword w);

// Expected embedded bits per block, sum of l * 2^-l; equals
// floor_log + q / 2^floor_log - 1.
DyadicRational expected_length(const Codebook& cb);
DyadicRational expected_length(std::uint32_t q);

// 1 - expected_length / log2(q), in [0, 1); exactly 0 iff q is a power of two.
double min_redundancy(std::uint32_t q);

// (2^-l_1, ..., 2^-l_q); sums to exactly 1.
std::vector<DyadicRational> state_probabilities(const Codebook& cb);

} // namespace obc
