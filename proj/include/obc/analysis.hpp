#pragma once

#include <cstdint>
#include <ostream>
#include <vector>

namespace obc::analysis {

struct CapacityCurvePoint {
    std::uint32_t q = 0;
    double entropy_bound = 0;  // log2 q
    double achievable = 0;     // optimal expected bits per block
    double redundancy = 0;     // 1 - achievable / entropy_bound
};

std::vector<CapacityCurvePoint> capacity_curve(std::uint32_t q_min, std::uint32_t q_max);

struct UsageStats {
    std::uint32_t q = 0;
    std::uint64_t block_count = 0;
    std::uint64_t seed = 0;
    std::vector<std::uint64_t> counts;        // per state index
    std::vector<double> empirical_freq;
    std::vector<double> expected_prob;        // 2^-l_i
    double tv_distance = 0;                   // total variation vs expected
    double mean_bits_per_block = 0;
    std::uint64_t total_bits_consumed = 0;
};

// Feeds block_count blocks of seeded pseudo-random bits (std::mt19937_64)
// through the codeword matching loop and tallies state usage.
UsageStats usage_experiment(std::uint32_t q, std::uint64_t block_count, std::uint64_t seed);

// Mean consumed bits per block over random input; same loop as
// usage_experiment, reported without the per-state tallies.
double payload_experiment(std::uint32_t q, std::uint64_t block_count, std::uint64_t seed);

// CSV: q,entropy_bound,achievable_payload,min_redundancy (12 sig. digits)
void write_curve_csv(std::ostream& os, const std::vector<CapacityCurvePoint>& points);
// CSV: state_index,expected_prob,empirical_freq plus summary comment lines
void write_usage_csv(std::ostream& os, const UsageStats& stats);

} // namespace obc::analysis
