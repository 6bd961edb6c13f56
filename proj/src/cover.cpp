#include "obc/cover.hpp"

#include <cstdlib>
#include <fstream>

#include "obc/errors.hpp"

namespace obc {

std::uint32_t block_state(std::span<const std::uint32_t> block, std::uint32_t q) {
    std::uint64_t sum = 0;
    for (std::uint32_t e : block)
        sum += e;
    return std::uint32_t(sum % q);
}

namespace {

bool apply_single(std::vector<std::uint32_t>& out, std::int64_t adj, std::uint32_t maxv) {
    for (auto& e : out) {
        std::int64_t nv = std::int64_t(e) + adj;
        if (nv >= 0 && nv <= std::int64_t(maxv)) {
            e = std::uint32_t(nv);
            return true;
        }
    }
    return false;
}

bool apply_greedy(std::vector<std::uint32_t>& out, std::int64_t adj, std::uint32_t maxv) {
    std::int64_t residual = adj;
    for (auto& e : out) {
        if (residual == 0)
            break;
        if (residual > 0) {
            std::int64_t step = std::min(residual, std::int64_t(maxv) - std::int64_t(e));
            e += std::uint32_t(step);
            residual -= step;
        } else {
            std::int64_t step = std::min(-residual, std::int64_t(e));
            e -= std::uint32_t(step);
            residual += step;
        }
    }
    return residual == 0;
}

} // namespace

std::vector<std::uint32_t> realize_state(std::span<const std::uint32_t> block,
                                         std::uint32_t target, std::uint32_t q, unsigned d) {
    if (block.empty())
        throw InvalidParameterError("empty block");
    if (target >= q)
        throw InvalidParameterError("target state " + std::to_string(target) +
                                    " out of range for q=" + std::to_string(q));
    std::vector<std::uint32_t> out(block.begin(), block.end());
    std::uint32_t current = block_state(block, q);
    if (current == target)
        return out;

    std::uint32_t maxv = (d >= 32) ? 0xFFFFFFFFu : ((std::uint32_t(1) << d) - 1);
    std::uint32_t delta = (target + q - current) % q;
    std::int64_t up = std::int64_t(delta);
    std::int64_t down = -std::int64_t(q - delta);
    // Smaller magnitude first; positive wins ties.
    std::int64_t first = (up <= -down) ? up : down;
    std::int64_t second = (first == up) ? down : up;

    for (std::int64_t adj : {first, second}) {
        std::vector<std::uint32_t> cand = out;
        if (apply_single(cand, adj, maxv))
            return cand;
    }
    for (std::int64_t adj : {first, second}) {
        std::vector<std::uint32_t> cand = out;
        if (apply_greedy(cand, adj, maxv))
            return cand;
    }
    throw UnreachableStateError("state " + std::to_string(target) +
                                " unreachable for q=" + std::to_string(q) + ", d=" +
                                std::to_string(d) + ", r=" + std::to_string(block.size()));
}

namespace {

CoverObject parse_pgm(const std::vector<std::uint8_t>& bytes, std::size_t r) {
    std::size_t pos = 0;
    auto eof = [&] { return pos >= bytes.size(); };
    auto skip_ws = [&] {
        while (!eof()) {
            std::uint8_t c = bytes[pos];
            if (c == '#') {
                while (!eof() && bytes[pos] != '\n')
                    ++pos;
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                ++pos;
            } else {
                break;
            }
        }
    };
    auto read_uint = [&]() -> std::uint64_t {
        skip_ws();
        if (eof() || bytes[pos] < '0' || bytes[pos] > '9')
            throw ParseError("expected decimal number in PGM header", pos);
        std::uint64_t v = 0;
        while (!eof() && bytes[pos] >= '0' && bytes[pos] <= '9') {
            v = v * 10 + (bytes[pos] - '0');
            ++pos;
        }
        return v;
    };

    if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5')
        throw ParseError("not a binary PGM (missing P5 magic)", 0);
    pos = 2;
    std::uint64_t width = read_uint();
    std::uint64_t height = read_uint();
    std::uint64_t maxval = read_uint();
    if (maxval != 255)
        throw ParseError("unsupported PGM maxval " + std::to_string(maxval) +
                             " (only 255 supported)",
                         pos);
    if (eof())
        throw ParseError("PGM header truncated before pixel data", pos);
    ++pos; // single whitespace byte after maxval
    std::size_t npix = std::size_t(width) * std::size_t(height);
    if (bytes.size() - pos < npix)
        throw ParseError("PGM pixel data truncated: need " + std::to_string(npix) +
                             " bytes, have " + std::to_string(bytes.size() - pos),
                         pos);

    CoverObject obj;
    obj.format = CoverFormat::Pgm;
    obj.d = 8;
    obj.r = r;
    obj.width = width;
    obj.height = height;
    obj.container_header.assign(bytes.begin(), bytes.begin() + std::ptrdiff_t(pos));
    obj.elements.assign(bytes.begin() + std::ptrdiff_t(pos),
                        bytes.begin() + std::ptrdiff_t(pos + npix));
    obj.s = obj.elements.size() / r;
    return obj;
}

} // namespace

CoverObject load_cover(const std::vector<std::uint8_t>& bytes, CoverFormat format, std::size_t r) {
    if (r < 1)
        throw InvalidParameterError("block size r must be >= 1");
    if (format == CoverFormat::Pgm)
        return parse_pgm(bytes, r);
    CoverObject obj;
    obj.format = CoverFormat::Raw8;
    obj.d = 8;
    obj.r = r;
    obj.elements.assign(bytes.begin(), bytes.end());
    obj.s = obj.elements.size() / r;
    return obj;
}

CoverObject load_cover_file(const std::string& path, CoverFormat format, std::size_t r) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open " + path);
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    return load_cover(bytes, format, r);
}

std::vector<std::uint8_t> save_cover(const CoverObject& obj) {
    std::vector<std::uint8_t> out = obj.container_header;
    out.reserve(out.size() + obj.elements.size());
    for (std::uint32_t e : obj.elements)
        out.push_back(std::uint8_t(e));
    return out;
}

void save_cover_file(const CoverObject& obj, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot write " + path);
    auto bytes = save_cover(obj);
    out.write(reinterpret_cast<const char*>(bytes.data()), std::streamsize(bytes.size()));
}

ApplyResult apply_embedding(const CoverObject& cover, const std::vector<std::uint32_t>& states,
                            std::uint32_t q) {
    if (states.size() > cover.s)
        throw InvalidParameterError("state list (" + std::to_string(states.size()) +
                                    ") longer than block count (" + std::to_string(cover.s) + ")");
    ApplyResult res;
    res.stego = cover;
    res.report.blocks_used = states.size();
    res.report.per_block_changes.assign(states.size(), 0);
    for (std::size_t k = 0; k < states.size(); ++k) {
        std::vector<std::uint32_t> modified;
        try {
            modified = realize_state(cover.block(k), states[k], q, cover.d);
        } catch (const UnreachableStateError& e) {
            throw UnreachableStateError(std::string(e.what()) + " at block " + std::to_string(k));
        }
        for (std::size_t j = 0; j < cover.r; ++j) {
            std::uint32_t before = cover.elements[k * cover.r + j];
            std::uint32_t after = modified[j];
            if (before != after) {
                ++res.report.changed_elements;
                ++res.report.per_block_changes[k];
                res.report.total_absolute_change +=
                    std::uint64_t(before > after ? before - after : after - before);
            }
            res.stego.elements[k * cover.r + j] = after;
        }
    }
    return res;
}

} // namespace obc
