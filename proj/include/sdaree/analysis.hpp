#pragma once

#include <array>
#include <cstdint>
#include <cstdio>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sdaree/pipeline.hpp"

namespace sdaree {

struct Histogram {
    std::array<std::uint64_t, 256> counts{};
    std::uint64_t total = 0;
};

inline Histogram histogram(std::span<const std::uint8_t> data) {
    Histogram h;
    for (std::uint8_t b : data) ++h.counts[b];
    h.total = data.size();
    return h;
}

/// Probability that two randomly chosen positions hold the same byte:
/// sum c(c-1) / (N(N-1)). Defined as 0 for N < 2.
inline double index_of_coincidence(const Histogram& h) {
    if (h.total < 2) return 0.0;
    double acc = 0.0;
    for (std::uint64_t c : h.counts) {
        if (c > 1) acc += static_cast<double>(c) * static_cast<double>(c - 1);
    }
    return acc / (static_cast<double>(h.total) * static_cast<double>(h.total - 1));
}

/// Chi-square statistic against the uniform byte distribution.
inline double chi_square_uniform(const Histogram& h) {
    if (h.total == 0) throw std::invalid_argument("chi_square_uniform: empty sample");
    const double expected = static_cast<double>(h.total) / 256.0;
    double acc = 0.0;
    for (std::uint64_t c : h.counts) {
        const double d = static_cast<double>(c) - expected;
        acc += d * d / expected;
    }
    return acc;
}

/// Byte histogram plus the leakage statistics that quantify how much
/// repetition structure survives in a stream.
struct AnalysisReport {
    Histogram histogram;
    double index_of_coincidence = 0.0;
    double chi_square = 0.0;
    std::uint32_t distinct_count = 0;
    std::uint64_t max_count = 0;
    std::uint64_t longest_run = 0;  // longest run of one byte value
};

inline AnalysisReport analyze(std::span<const std::uint8_t> data) {
    AnalysisReport r;
    r.histogram = histogram(data);
    r.index_of_coincidence = index_of_coincidence(r.histogram);
    r.chi_square = r.histogram.total == 0 ? 0.0 : chi_square_uniform(r.histogram);
    for (std::uint64_t c : r.histogram.counts) {
        if (c > 0) ++r.distinct_count;
        if (c > r.max_count) r.max_count = c;
    }
    std::uint64_t run = 0;
    int prev = -1;
    for (std::uint8_t b : data) {
        run = b == prev ? run + 1 : 1;
        prev = b;
        if (run > r.longest_run) r.longest_run = run;
    }
    return r;
}

/// Before/after reports for a plaintext and its ciphertext.
inline std::pair<AnalysisReport, AnalysisReport> leakage_report(
    std::span<const std::uint8_t> plain, std::span<const std::uint8_t> cipher) {
    return {analyze(plain), analyze(cipher)};
}

struct DiffusionReport {
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    double mean_changed_bytes = 0.0;
    // max |i - j| between the flipped input byte i and a changed output byte j
    std::uint64_t max_changed_byte_distance = 0;
};

/// Flip one random bit of a random plaintext byte per trial, re-encrypt, and
/// diff the ciphertexts. SD-AREE's diffusion is block-local, so the distance
/// never reaches 8.
inline DiffusionReport diffusion_test(std::span<const std::uint8_t> message,
                                      const KeyMaterial& key, std::uint64_t trials,
                                      std::uint64_t seed = 0x5da3ee) {
    if (message.empty()) throw std::invalid_argument("diffusion_test: message must not be empty");
    if (trials == 0) throw std::invalid_argument("diffusion_test: trials must be positive");

    const auto base = sd_aree_encrypt(message, key);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick_byte(0, message.size() - 1);
    std::uniform_int_distribution<int> pick_bit(0, 7);

    DiffusionReport report;
    report.trials = trials;
    report.seed = seed;
    std::uint64_t changed_total = 0;
    std::vector<std::uint8_t> mutated(message.begin(), message.end());
    for (std::uint64_t t = 0; t < trials; ++t) {
        const std::size_t i = pick_byte(rng);
        mutated[i] ^= static_cast<std::uint8_t>(1u << pick_bit(rng));
        const auto ct = sd_aree_encrypt(mutated, key);
        mutated[i] = message[i];

        for (std::size_t j = 0; j < ct.size(); ++j) {
            if (ct[j] == base[j]) continue;
            ++changed_total;
            const std::uint64_t dist = j > i ? j - i : i - j;
            if (dist > report.max_changed_byte_distance) {
                report.max_changed_byte_distance = dist;
            }
        }
    }
    report.mean_changed_bytes =
        static_cast<double>(changed_total) / static_cast<double>(trials);
    return report;
}

/// 256-row spectrum: header `byte,count,frequency`, frequency with six
/// decimal places; an empty sample emits frequency 0.000000 on every row.
inline std::string spectrum_csv(const Histogram& h) {
    std::string out = "byte,count,frequency\n";
    char line[64];
    for (int v = 0; v < 256; ++v) {
        const double f =
            h.total == 0 ? 0.0 : static_cast<double>(h.counts[v]) / static_cast<double>(h.total);
        std::snprintf(line, sizeof line, "%d,%llu,%.6f\n", v,
                      static_cast<unsigned long long>(h.counts[v]), f);
        out += line;
    }
    return out;
}

}  // namespace sdaree
