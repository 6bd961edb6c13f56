#pragma once

#include <cstdint>
#include <vector>

#include "obc/bitstream.hpp"
#include "obc/codebook.hpp"

namespace obc {

// Message framing: a 64-bit big-endian payload bit count, the payload bits,
// then the zero bits needed to complete the final block's codeword match.
struct Frame {
    std::uint64_t payload_bit_count = 0;
    std::size_t padding_bits = 0;
};

struct EmbeddingRecord {
    std::size_t block_index = 0;
    std::uint32_t state_index = 0;
    unsigned bits_consumed = 0;
};

struct EmbedResult {
    std::vector<std::uint32_t> states; // one per used block
    std::vector<EmbeddingRecord> records;
    Frame frame;
    std::uint64_t bits_embedded = 0; // header + payload, excluding padding
};

struct MatchResult {
    std::uint32_t state_index;
    unsigned bits_consumed;
};

struct PayloadBound {
    double entropy_bound; // block_count * log2 q
    double achievable;    // block_count * expected_length(q)
};

// Consumes the unique codeword of build_obc(q) prefixing the unread stream
// and returns its state index. O(log q): read floor_log bits as v; if
// v < n2/2 one more bit b selects child 2v+b, else the short word itself.
MatchResult match_next_codeword(std::uint32_t q, BitStream& stream);

EmbedResult embed_message(const std::vector<std::uint8_t>& message, std::uint32_t q,
                          std::size_t block_count);

std::vector<std::uint8_t> extract_message(const std::vector<std::uint32_t>& states,
                                          std::uint32_t q);

PayloadBound expected_payload_bound(std::uint32_t q, std::size_t block_count);

// Frame bits required for a message of the given byte length.
inline std::uint64_t frame_bits(std::size_t message_bytes) {
    return 64 + std::uint64_t(message_bytes) * 8;
}

} // namespace obc
