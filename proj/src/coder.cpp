#include "obc/coder.hpp"

#include <cmath>

#include "obc/errors.hpp"

namespace obc {

MatchResult match_next_codeword(std::uint32_t q, BitStream& stream) {
    if (q < 2 || q > kMaxQ)
        throw InvalidParameterError("q must be in [2, 2^30], got " + std::to_string(q));
    unsigned l = floor_log2(q);
    std::uint32_t n2 = 2 * q - (std::uint32_t(1) << (l + 1));
    std::uint32_t v = std::uint32_t(stream.read_bits(l));
    if (v < n2 / 2) {
        std::uint32_t b = std::uint32_t(stream.read_bit());
        return {2 * v + b, l + 1};
    }
    return {n2 + (v - n2 / 2), l};
}

EmbedResult embed_message(const std::vector<std::uint8_t>& message, std::uint32_t q,
                          std::size_t block_count) {
    if (q < 2 || q > kMaxQ)
        throw InvalidParameterError("q must be in [2, 2^30], got " + std::to_string(q));
    if (block_count < 1)
        throw InvalidParameterError("block_count must be >= 1");

    unsigned l = floor_log2(q);
    std::uint64_t needed = frame_bits(message.size());
    std::uint64_t capacity = std::uint64_t(block_count) * l; // worst-case rate
    if (needed > capacity)
        throw CapacityExceededError(
            "message needs " + std::to_string(needed) + " bits but " +
                std::to_string(block_count) + " blocks guarantee only " +
                std::to_string(capacity),
            needed, capacity);

    BitStream stream;
    stream.append_bits(std::uint64_t(message.size()) * 8, 64);
    for (std::uint8_t byte : message)
        stream.append_bits(byte, 8);
    // Zero padding so the last match never underflows; l+1 bits always suffice.
    for (unsigned i = 0; i <= l; ++i)
        stream.append_bit(false);

    EmbedResult res;
    res.frame.payload_bit_count = std::uint64_t(message.size()) * 8;
    while (stream.cursor() < needed) {
        MatchResult m = match_next_codeword(q, stream);
        res.records.push_back({res.states.size(), m.state_index, m.bits_consumed});
        res.states.push_back(m.state_index);
    }
    res.bits_embedded = needed;
    res.frame.padding_bits = stream.cursor() - needed;
    return res;
}

std::vector<std::uint8_t> extract_message(const std::vector<std::uint32_t>& states,
                                          std::uint32_t q) {
    BitStream bits;
    for (std::uint32_t s : states) {
        Codeword w = codeword_of_index(q, s);
        bits.append_bits(w.value, w.length);
    }
    if (bits.size() < 64)
        throw CorruptFrameError("frame header incomplete: only " +
                                std::to_string(bits.size()) + " bits available");
    std::uint64_t payload_bits = bits.read_bits(64);
    if (payload_bits > bits.remaining())
        throw CorruptFrameError("frame declares " + std::to_string(payload_bits) +
                                " payload bits but only " + std::to_string(bits.remaining()) +
                                " are available");
    std::vector<std::uint8_t> out((payload_bits + 7) / 8, 0);
    for (std::uint64_t i = 0; i < payload_bits; ++i)
        if (bits.read_bit())
            out[i / 8] |= std::uint8_t(0x80u >> (i % 8));
    return out;
}

PayloadBound expected_payload_bound(std::uint32_t q, std::size_t block_count) {
    if (q < 2 || q > kMaxQ)
        throw InvalidParameterError("q must be in [2, 2^30], got " + std::to_string(q));
    double n = double(block_count);
    return {n * std::log2(double(q)), n * expected_length(q).to_double()};
}

} // namespace obc
