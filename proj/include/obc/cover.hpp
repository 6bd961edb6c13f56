#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace obc {

enum class CoverFormat { Raw8, Pgm };

// A cover signal of n d-bit elements, partitioned into s blocks of r
// elements. The trailing n - s*r elements are inert and never modified.
struct CoverObject {
    std::vector<std::uint32_t> elements;
    unsigned d = 8;      // bits per element
    std::size_t r = 1;   // block size
    std::size_t s = 0;   // block count = floor(n / r)
    CoverFormat format = CoverFormat::Raw8;
    std::vector<std::uint8_t> container_header; // verbatim PGM header bytes
    std::size_t width = 0, height = 0;          // PGM only

    std::size_t n() const { return elements.size(); }
    std::span<const std::uint32_t> block(std::size_t k) const {
        return std::span(elements).subspan(k * r, r);
    }
};

using StegoObject = CoverObject;

struct ModificationReport {
    std::size_t changed_elements = 0;
    std::uint64_t total_absolute_change = 0;
    std::vector<std::size_t> per_block_changes; // changed elements per block
    std::size_t blocks_used = 0;
};

// State function g: element sum mod q.
std::uint32_t block_state(std::span<const std::uint32_t> block, std::uint32_t q);

// Rewrites the block so block_state(block, q) == target with minimal change:
// the smaller of the +delta / -(q-delta) adjustments applied to the first
// element where it stays in [0, 2^d-1], then the alternate sign, then greedy
// +-1 distribution across elements.
std::vector<std::uint32_t> realize_state(std::span<const std::uint32_t> block,
                                         std::uint32_t target, std::uint32_t q, unsigned d);

CoverObject load_cover(const std::vector<std::uint8_t>& bytes, CoverFormat format, std::size_t r);
CoverObject load_cover_file(const std::string& path, CoverFormat format, std::size_t r);

std::vector<std::uint8_t> save_cover(const CoverObject& obj);
void save_cover_file(const CoverObject& obj, const std::string& path);

struct ApplyResult {
    StegoObject stego;
    ModificationReport report;
};

ApplyResult apply_embedding(const CoverObject& cover, const std::vector<std::uint32_t>& states,
                            std::uint32_t q);

} // namespace obc
