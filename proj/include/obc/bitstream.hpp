#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "obc/errors.hpp"

namespace obc {

// Packed bit sequence with a read cursor. Bit order is MSB-first within each
// byte: bit 0 of the stream is the most significant bit of byte 0.
class BitStream {
public:
    BitStream() = default;

    static BitStream from_bytes(const std::vector<std::uint8_t>& bytes) {
        BitStream s;
        s.bytes_ = bytes;
        s.bit_count_ = bytes.size() * 8;
        return s;
    }

    std::size_t size() const { return bit_count_; }
    std::size_t cursor() const { return cursor_; }
    std::size_t remaining() const { return bit_count_ - cursor_; }
    bool exhausted() const { return cursor_ == bit_count_; }

    void append_bit(bool b) {
        if (bit_count_ % 8 == 0)
            bytes_.push_back(0);
        if (b)
            bytes_.back() |= std::uint8_t(0x80u >> (bit_count_ % 8));
        ++bit_count_;
    }

    // Appends the low n bits of v, most significant first.
    void append_bits(std::uint64_t v, unsigned n) {
        for (unsigned i = n; i-- > 0;)
            append_bit((v >> i) & 1u);
    }

    bool read_bit() {
        if (cursor_ >= bit_count_)
            throw StreamUnderflowError("bit stream exhausted at bit " + std::to_string(cursor_));
        bool b = (bytes_[cursor_ / 8] >> (7 - cursor_ % 8)) & 1u;
        ++cursor_;
        return b;
    }

    std::uint64_t read_bits(unsigned n) {
        std::uint64_t v = 0;
        for (unsigned i = 0; i < n; ++i)
            v = (v << 1) | std::uint64_t(read_bit());
        return v;
    }

    bool bit_at(std::size_t i) const {
        return (bytes_[i / 8] >> (7 - i % 8)) & 1u;
    }

    void rewind() { cursor_ = 0; }

    // Packed bytes; trailing bits of the last byte are zero.
    const std::vector<std::uint8_t>& bytes() const { return bytes_; }

private:
    std::vector<std::uint8_t> bytes_;
    std::size_t bit_count_ = 0;
    std::size_t cursor_ = 0;
};

} // namespace obc
