#include "obc/analysis.hpp"

#include <cmath>
#include <cstdio>
#include <random>

#include "obc/coder.hpp"
#include "obc/errors.hpp"

namespace obc::analysis {

namespace {

std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

BitStream random_bits(std::uint64_t bit_count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::uint8_t> bytes((bit_count + 7) / 8);
    std::uint64_t word = 0;
    unsigned have = 0;
    for (auto& b : bytes) {
        if (have == 0) {
            word = rng();
            have = 8;
        }
        b = std::uint8_t(word);
        word >>= 8;
        --have;
    }
    return BitStream::from_bytes(bytes);
}

} // namespace

std::vector<CapacityCurvePoint> capacity_curve(std::uint32_t q_min, std::uint32_t q_max) {
    if (q_min < 2 || q_min > q_max)
        throw RangeError("need 2 <= q_min <= q_max, got [" + std::to_string(q_min) + ", " +
                         std::to_string(q_max) + "]");
    std::vector<CapacityCurvePoint> points;
    points.reserve(q_max - q_min + 1);
    for (std::uint32_t q = q_min; q <= q_max; ++q) {
        CapacityCurvePoint p;
        p.q = q;
        p.entropy_bound = std::log2(double(q));
        p.achievable = expected_length(q).to_double();
        p.redundancy = min_redundancy(q);
        points.push_back(p);
    }
    return points;
}

UsageStats usage_experiment(std::uint32_t q, std::uint64_t block_count, std::uint64_t seed) {
    if (block_count < 1)
        throw InvalidParameterError("block_count must be >= 1");
    unsigned l = floor_log2(q);
    BitStream bits = random_bits(block_count * (l + 1), seed);

    UsageStats st;
    st.q = q;
    st.block_count = block_count;
    st.seed = seed;
    st.counts.assign(q, 0);
    for (std::uint64_t k = 0; k < block_count; ++k) {
        MatchResult m = match_next_codeword(q, bits);
        ++st.counts[m.state_index];
        st.total_bits_consumed += m.bits_consumed;
    }
    st.mean_bits_per_block = double(st.total_bits_consumed) / double(block_count);

    Codebook cb = build_obc(q);
    st.empirical_freq.resize(q);
    st.expected_prob.resize(q);
    double tv = 0;
    for (std::uint32_t i = 0; i < q; ++i) {
        st.empirical_freq[i] = double(st.counts[i]) / double(block_count);
        st.expected_prob[i] = std::ldexp(1.0, -int(cb.words[i].length));
        tv += std::abs(st.empirical_freq[i] - st.expected_prob[i]);
    }
    st.tv_distance = tv / 2;
    return st;
}

double payload_experiment(std::uint32_t q, std::uint64_t block_count, std::uint64_t seed) {
    return usage_experiment(q, block_count, seed).mean_bits_per_block;
}

void write_curve_csv(std::ostream& os, const std::vector<CapacityCurvePoint>& points) {
    os << "q,entropy_bound,achievable_payload,min_redundancy\n";
    for (const auto& p : points)
        os << p.q << "," << fmt12(p.entropy_bound) << "," << fmt12(p.achievable) << ","
           << fmt12(p.redundancy) << "\n";
}

void write_usage_csv(std::ostream& os, const UsageStats& st) {
    os << "state_index,expected_prob,empirical_freq\n";
    for (std::uint32_t i = 0; i < st.q; ++i)
        os << i << "," << fmt12(st.expected_prob[i]) << "," << fmt12(st.empirical_freq[i]) << "\n";
    os << "# generator=std::mt19937_64\n";
    os << "# seed=" << st.seed << "\n";
    os << "# blocks=" << st.block_count << "\n";
    os << "# mean_bits_per_block=" << fmt12(st.mean_bits_per_block) << "\n";
    os << "# tv_distance=" << fmt12(st.tv_distance) << "\n";
}

} // namespace obc::analysis
