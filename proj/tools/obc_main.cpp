#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "obc/analysis.hpp"
#include "obc/coder.hpp"
#include "obc/cover.hpp"
#include "obc/errors.hpp"
#include "obc/oracle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitCorruptFrame = 4;

std::vector<std::uint8_t> read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        const std::string& s = buf.str();
        return {s.begin(), s.end()};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw obc::Error("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::vector<std::uint8_t>& bytes) {
    if (path == "-") {
        std::cout.write(reinterpret_cast<const char*>(bytes.data()),
                        std::streamsize(bytes.size()));
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw obc::Error("cannot write " + path);
    out.write(reinterpret_cast<const char*>(bytes.data()), std::streamsize(bytes.size()));
}

void write_text(const std::string& path, const std::string& text) {
    write_output(path, std::vector<std::uint8_t>(text.begin(), text.end()));
}

obc::CoverFormat parse_format(const std::string& s) {
    if (s == "raw8")
        return obc::CoverFormat::Raw8;
    if (s == "pgm")
        return obc::CoverFormat::Pgm;
    throw obc::InvalidParameterError("unknown cover format: " + s);
}

int run_build_code(std::uint32_t q) {
    obc::Codebook cb = obc::build_obc(q);
    auto probs = obc::state_probabilities(cb);
    for (std::uint32_t i = 0; i < cb.q; ++i) {
        const obc::Codeword& w = cb.words[i];
        std::printf("%u %s %u %g\n", i, w.to_string().c_str(), unsigned(w.length),
                    probs[i].to_double());
    }
    std::printf("# q=%u floor_log=%u n1=%u n2=%u expected_length=%s redundancy=%.12g\n", cb.q,
                cb.floor_log, cb.n1, cb.n2, obc::expected_length(cb).to_string().c_str(),
                obc::min_redundancy(q));
    return kExitOk;
}

int run_embed(const std::string& cover_path, const std::string& format, std::size_t r,
              std::uint32_t q, const std::string& message_path, const std::string& out_path) {
    obc::CoverObject cover = obc::load_cover(read_input(cover_path), parse_format(format), r);
    std::vector<std::uint8_t> message = read_input(message_path);
    obc::EmbedResult emb = obc::embed_message(message, q, cover.s);
    obc::ApplyResult applied = obc::apply_embedding(cover, emb.states, q);
    write_output(out_path, obc::save_cover(applied.stego));
    std::printf("blocks_used=%zu\n", applied.report.blocks_used);
    std::printf("elements_changed=%zu\n", applied.report.changed_elements);
    std::printf("total_absolute_change=%llu\n",
                (unsigned long long)applied.report.total_absolute_change);
    std::printf("bits_embedded=%llu\n", (unsigned long long)emb.bits_embedded);
    std::printf("padding_bits=%zu\n", emb.frame.padding_bits);
    return kExitOk;
}

int run_extract(const std::string& stego_path, const std::string& format, std::size_t r,
                std::uint32_t q, const std::string& out_path) {
    obc::CoverObject stego = obc::load_cover(read_input(stego_path), parse_format(format), r);
    std::vector<std::uint32_t> states;
    states.reserve(stego.s);
    for (std::size_t k = 0; k < stego.s; ++k)
        states.push_back(obc::block_state(stego.block(k), q));
    std::vector<std::uint8_t> message = obc::extract_message(states, q);
    write_output(out_path, message);
    return kExitOk;
}

int run_curve(std::uint32_t q_min, std::uint32_t q_max, const std::string& out_path) {
    std::ostringstream os;
    obc::analysis::write_curve_csv(os, obc::analysis::capacity_curve(q_min, q_max));
    write_text(out_path, os.str());
    return kExitOk;
}

int run_usage(std::uint32_t q, std::uint64_t n, std::uint64_t seed, const std::string& out_path) {
    std::ostringstream os;
    obc::analysis::write_usage_csv(os, obc::analysis::usage_experiment(q, n, seed));
    write_text(out_path, os.str());
    return kExitOk;
}

int run_oracle_check(std::uint32_t q_max) {
    bool all_pass = true;
    for (std::uint32_t q = 2; q <= q_max; ++q) {
        obc::oracle::CertificateReport rep = obc::oracle::certify_obc(q);
        std::printf("q=%u %s\n", q, rep.all_pass() ? "PASS" : "FAIL");
        std::istringstream lines(rep.to_text());
        std::string line;
        while (std::getline(lines, line))
            std::printf("  %s\n", line.c_str());
        if (!rep.all_pass())
            all_pass = false;
    }
    return all_pass ? kExitOk : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Optimal binary coding for q-state steganographic embedding"};
    app.require_subcommand(1);

    std::uint32_t q = 2;
    std::size_t r = 1;
    std::uint32_t q_min = 2, q_max = 64;
    std::uint64_t n = 100000, seed = 1;
    std::string cover_path, message_path, out_path = "-", format = "raw8";

    auto* build = app.add_subcommand("build-code", "Print the optimal code for q states");
    build->add_option("--q", q, "number of stego states")->required();

    auto* embed = app.add_subcommand("embed", "Embed a message into a cover file");
    embed->add_option("--cover", cover_path, "cover file path")->required();
    embed->add_option("--format", format, "cover format: raw8 | pgm");
    embed->add_option("--r", r, "block size in elements")->required();
    embed->add_option("--q", q, "number of stego states")->required();
    embed->add_option("--message", message_path, "message file path")->required();
    embed->add_option("--out", out_path, "stego output path")->required();

    auto* extract = app.add_subcommand("extract", "Extract a message from a stego file");
    extract->add_option("--stego", cover_path, "stego file path")->required();
    extract->add_option("--format", format, "cover format: raw8 | pgm");
    extract->add_option("--r", r, "block size in elements")->required();
    extract->add_option("--q", q, "number of stego states")->required();
    extract->add_option("--out", out_path, "message output path")->required();

    auto* curve = app.add_subcommand("curve", "Capacity/redundancy curve as CSV");
    curve->add_option("--q-min", q_min, "smallest q");
    curve->add_option("--q-max", q_max, "largest q");
    curve->add_option("--out", out_path, "CSV output path");

    auto* usage = app.add_subcommand("usage", "Seeded state-usage experiment as CSV");
    usage->add_option("--q", q, "number of stego states")->required();
    usage->add_option("--n", n, "number of blocks");
    usage->add_option("--seed", seed, "RNG seed");
    usage->add_option("--out", out_path, "CSV output path");

    auto* oracle_check = app.add_subcommand("oracle-check", "Certify optimality by enumeration");
    std::uint32_t oracle_q_max = 12;
    oracle_check->add_option("--q-max", oracle_q_max, "largest q to certify");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (build->parsed())
            return run_build_code(q);
        if (embed->parsed())
            return run_embed(cover_path, format, r, q, message_path, out_path);
        if (extract->parsed())
            return run_extract(cover_path, format, r, q, out_path);
        if (curve->parsed())
            return run_curve(q_min, q_max, out_path);
        if (usage->parsed())
            return run_usage(q, n, seed, out_path);
        if (oracle_check->parsed())
            return run_oracle_check(oracle_q_max);
    } catch (const obc::CapacityExceededError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitCapacity;
    } catch (const obc::CorruptFrameError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitCorruptFrame;
    } catch (const obc::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    }
    return kExitUsage;
}
