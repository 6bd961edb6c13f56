// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "obc/analysis.hpp"
#include "obc/coder.hpp"
#include "obc/cover.hpp"
#include "obc/oracle.hpp"

using namespace obc;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool pass) {
    std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion, what.c_str());
    if (!pass)
        ++failures;
}

// 1. build_obc invariants, exact, for every q in [2, 65536]
bool codebook_exactness() {
    for (std::uint32_t q = 2; q <= 65536; ++q) {
        Codebook cb = build_obc(q);
        unsigned l = cb.floor_log;
        if ((std::uint64_t(1) << l) > q || (std::uint64_t(1) << (l + 1)) <= q)
            return false;
        std::uint64_t n1 = (std::uint64_t(1) << (l + 1)) - q;
        std::uint64_t n2 = 2 * std::uint64_t(q) - (std::uint64_t(1) << (l + 1));
        std::uint64_t short_count = 0, long_count = 0, kraft = 0;
        unsigned min_len = 64, max_len = 0;
        for (const Codeword& w : cb.words) {
            min_len = std::min<unsigned>(min_len, w.length);
            max_len = std::max<unsigned>(max_len, w.length);
            if (w.length == l)
                ++short_count;
            else if (w.length == l + 1)
                ++long_count;
            else
                return false;
        }
        if (max_len - min_len > 1 || min_len != l)
            return false;
        if (short_count != n1 || long_count != n2)
            return false;
        for (const Codeword& w : cb.words)
            kraft += std::uint64_t(1) << (max_len - w.length);
        if (kraft != std::uint64_t(1) << max_len)
            return false;
        // sorted order makes the adjacent check sufficient for prefix-freeness
        for (std::size_t i = 0; i + 1 < cb.words.size(); ++i) {
            const Codeword& a = cb.words[i];
            const Codeword& b = cb.words[i + 1];
            unsigned common = std::min(a.length, b.length);
            std::uint32_t pa = a.value >> (a.length - common);
            std::uint32_t pb = b.value >> (b.length - common);
            if (pa >= pb) // strict lexicographic order and no shared prefix
                return false;
        }
    }
    return true;
}

bool paper_example() {
    Codebook cb = build_obc(6);
    std::vector<std::string> expect{"000", "001", "010", "011", "10", "11"};
    if (cb.words.size() != expect.size())
        return false;
    for (std::size_t i = 0; i < expect.size(); ++i)
        if (cb.words[i].to_string() != expect[i])
            return false;
    return true;
}

bool oracle_certification() {
    for (std::uint32_t q = 2; q <= 12; ++q) {
        auto bf = oracle::brute_force_max_expected_length(q);
        if (bf.max_expected_length != expected_length(q))
            return false;
        if (bf.maximizers.size() != 1)
            return false;
        if (!oracle::certify_obc(q).all_pass())
            return false;
        // the exchange strictly improves every spread>=2 multiset
        for (const auto& [depths, count] : oracle::enumerate_code_trees(q)) {
            (void)count;
            if (depths.back() - depths.front() >= 2) {
                auto next = oracle::exchange_improvement(depths);
                if (!next)
                    return false;
                if (!(oracle::expected_length_of(*next) > oracle::expected_length_of(depths)))
                    return false;
            }
        }
    }
    return true;
}

bool closed_form_indexing() {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::uint32_t> dist(2, 1u << 20);
    for (int trial = 0; trial < 200; ++trial) {
        std::uint32_t q = dist(rng);
        Codebook cb = build_obc(q);
        for (std::uint32_t i = 0; i < q; ++i) {
            Codeword w = codeword_of_index(q, i);
            if (!(w == cb.words[i]))
                return false;
            if (index_of_codeword(q, w) != i)
                return false;
        }
    }
    return true;
}

bool randomized_round_trips() {
    std::mt19937_64 rng(4096);
    std::uniform_int_distribution<std::uint32_t> qdist(2, 64);
    std::uniform_int_distribution<std::size_t> lendist(0, 512);
    std::uniform_int_distribution<std::size_t> rdist(1, 4);
    for (int trial = 0; trial < 1000; ++trial) {
        std::uint32_t q = qdist(rng);
        std::size_t r = rdist(rng);
        std::vector<std::uint8_t> msg(lendist(rng));
        for (auto& b : msg)
            b = std::uint8_t(rng());
        std::size_t blocks = std::size_t(frame_bits(msg.size()) / floor_log2(q)) + 1;
        std::vector<std::uint8_t> bytes(blocks * r);
        for (auto& b : bytes)
            b = std::uint8_t(rng());
        CoverObject cover = load_cover(bytes, CoverFormat::Raw8, r);

        EmbedResult emb = embed_message(msg, q, cover.s);
        ApplyResult applied = apply_embedding(cover, emb.states, q);
        for (std::size_t k = 0; k < emb.states.size(); ++k)
            if (block_state(applied.stego.block(k), q) != emb.states[k])
                return false;

        std::vector<std::uint32_t> read_states;
        for (std::size_t k = 0; k < applied.stego.s; ++k)
            read_states.push_back(block_state(applied.stego.block(k), q));
        if (extract_message(read_states, q) != msg)
            return false;
    }
    return true;
}

bool distribution_law() {
    analysis::UsageStats st = analysis::usage_experiment(6, 100000, 1);
    std::vector<double> target{0.125, 0.125, 0.125, 0.125, 0.25, 0.25};
    double tv = 0;
    for (std::size_t i = 0; i < 6; ++i)
        tv += std::abs(st.empirical_freq[i] - target[i]);
    tv /= 2;
    if (tv >= 0.02)
        return false;
    return std::abs(st.mean_bits_per_block - 2.5) <= 0.01;
}

bool redundancy_curve() {
    auto curve = analysis::capacity_curve(2, 64);
    for (const auto& p : curve) {
        bool pow2 = is_power_of_two(p.q);
        if (pow2 && p.redundancy != 0.0)
            return false;
        if (!pow2 && !(p.redundancy > 0.0))
            return false;
    }
    long double ref = 1.0L - 2.5L / std::log2(6.0L);
    return std::abs(curve[4].redundancy - double(ref)) <= 1e-12;
}

bool payload_bound() {
    for (std::uint32_t q : {2u, 3u, 5u, 6u, 7u, 9u, 12u, 16u, 33u, 64u}) {
        std::uint64_t n = 20000;
        analysis::UsageStats st = analysis::usage_experiment(q, n, 77);
        unsigned l = floor_log2(q);
        if (st.total_bits_consumed > n * (l + 1)) // hard bound
            return false;
        // statistical bound: mean <= log2 q + 3 sigma of the mean
        DyadicRational lplus = expected_length(q);
        DyadicRational second_moment;
        for (const Codeword& w : build_obc(q).words)
            second_moment =
                second_moment + DyadicRational(std::int64_t(w.length) * w.length, w.length);
        double var = second_moment.to_double() - lplus.to_double() * lplus.to_double();
        double sigma = std::sqrt(var / double(n));
        if (st.mean_bits_per_block > std::log2(double(q)) + 3 * sigma)
            return false;
    }
    return true;
}

bool pgm_integrity() {
    const std::size_t w = 256, h = 256, r = 4;
    const std::uint32_t q = 6;
    std::string header = "P5\n256 256\n255\n";
    std::vector<std::uint8_t> file(header.begin(), header.end());
    std::mt19937_64 rng(314159);
    for (std::size_t i = 0; i < w * h; ++i)
        file.push_back(std::uint8_t(rng()));

    CoverObject cover = load_cover(file, CoverFormat::Pgm, r);
    if (cover.s != w * h / r)
        return false;

    std::vector<std::uint8_t> msg(1000);
    for (auto& b : msg)
        b = std::uint8_t(rng());
    EmbedResult emb = embed_message(msg, q, cover.s);
    ApplyResult applied = apply_embedding(cover, emb.states, q);
    auto stego_bytes = save_cover(applied.stego);

    // output is valid P5 and extraction recovers the message
    CoverObject reread = load_cover(stego_bytes, CoverFormat::Pgm, r);
    std::vector<std::uint32_t> states;
    for (std::size_t k = 0; k < reread.s; ++k)
        states.push_back(block_state(reread.block(k), q));
    if (extract_message(states, q) != msg)
        return false;

    // zero-length message: the 64 header bits need at most 32 blocks at the
    // 2-bit minimum rate
    EmbedResult empty_emb = embed_message({}, q, cover.s);
    if (empty_emb.states.size() > 32)
        return false;
    ApplyResult empty_applied = apply_embedding(cover, empty_emb.states, q);
    if (empty_applied.report.changed_elements > 32 * r)
        return false;
    for (std::size_t i = 32 * r; i < cover.n(); ++i)
        if (empty_applied.stego.elements[i] != cover.elements[i])
            return false;
    return true;
}

template <typename F>
bool timed(F&& f, double limit_seconds, const char* label) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = f();
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (dt > limit_seconds) {
        std::printf("  (%s took %.1fs, over the %.0fs limit)\n", label, dt, limit_seconds);
        return false;
    }
    return ok;
}

} // namespace

int main() {
    report(1, "codebook invariants exact for all q in [2, 65536]",
           timed(codebook_exactness, 60, "criterion 1"));
    report(2, "q=6 codebook is {000,001,010,011,10,11}", paper_example());
    report(3, "exhaustive oracle certifies optimality for q in [2, 12]",
           timed(oracle_certification, 60, "criterion 3"));
    report(4, "closed-form indexing matches build_obc for 200 random q in [2, 2^20]",
           closed_form_indexing());
    report(5, "1000 randomized embed/extract round trips are bit-exact", randomized_round_trips());
    report(6, "q=6 state frequencies within TV 0.02 and mean bits 2.5 +- 0.01",
           distribution_law());
    report(7, "redundancy curve zero exactly at powers of two, q=6 point within 1e-12",
           redundancy_curve());
    report(8, "payload never exceeds the entropy bound (hard and 3-sigma forms)",
           payload_bound());
    report(9, "PGM embed/extract with header-only change bound", pgm_integrity());

    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
