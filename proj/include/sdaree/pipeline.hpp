#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sdaree/bit_matrix.hpp"
#include "sdaree/key_schedule.hpp"
#include "sdaree/poly_caesar.hpp"

namespace sdaree {

/// Thrown when a stage fails; carries the stage name.
class StageError : public std::runtime_error {
public:
    StageError(std::string stage, const std::string& what)
        : std::runtime_error("stage '" + stage + "': " + what), stage_(std::move(stage)) {}

    const std::string& stage() const { return stage_; }

private:
    std::string stage_;
};

/// A named, invertible byte transform parameterized by the key schedule.
/// Contract: inverse(forward(x)) == x on the stage's declared domain.
struct CipherStage {
    using Fn = std::function<std::vector<std::uint8_t>(std::span<const std::uint8_t>,
                                                       const KeySchedule&)>;
    std::string name;
    Fn forward;
    Fn inverse;
};

namespace detail {

inline std::vector<std::uint8_t> cycle_blocks(std::span<const std::uint8_t> data,
                                              std::uint64_t n, bool inverse) {
    auto blocks = pack_blocks(data);
    for (BitMatrix& block : blocks) {
        block = inverse ? uncycle(block, n) : cycle(block, n);
    }
    return unpack_blocks(blocks);
}

}  // namespace detail

/// Stage 1: pack into bit matrices, cycle each block `code` times, unpack.
inline CipherStage bit_cycle_stage() {
    return {
        "bit_cycle",
        [](std::span<const std::uint8_t> in, const KeySchedule& s) {
            return detail::cycle_blocks(in, s.code, false);
        },
        [](std::span<const std::uint8_t> in, const KeySchedule& s) {
            return detail::cycle_blocks(in, s.code, true);
        },
    };
}

/// Stage 2: position-dependent Caesar shift over the whole stream.
inline CipherStage poly_caesar_stage(WrapMode mode) {
    return {
        "poly_caesar",
        [mode](std::span<const std::uint8_t> in, const KeySchedule& s) {
            return encrypt_stream(in, s, mode);
        },
        [mode](std::span<const std::uint8_t> in, const KeySchedule& s) {
            return decrypt_stream(in, s, mode);
        },
    };
}

/// Key, wrap rule, and ordered stage list. The default order is
/// cycle-then-Caesar; decryption runs the inverses in reverse order.
struct PipelineConfig {
    KeyMaterial key;
    WrapMode wrap = WrapMode::ByteMod256;
    std::vector<CipherStage> stages;

    static PipelineConfig standard(KeyMaterial key, WrapMode wrap = WrapMode::ByteMod256) {
        PipelineConfig cfg{std::move(key), wrap, {}};
        cfg.stages = {bit_cycle_stage(), poly_caesar_stage(wrap)};
        return cfg;
    }
};

enum class Direction { Forward, Inverse };

inline std::vector<std::uint8_t> run_pipeline(const PipelineConfig& config,
                                              std::span<const std::uint8_t> input,
                                              Direction direction) {
    if (config.stages.empty()) {
        throw std::invalid_argument("run_pipeline: stage list is empty");
    }
    const KeySchedule schedule = derive_schedule(config.key);

    std::vector<std::uint8_t> data(input.begin(), input.end());
    auto apply = [&](const CipherStage& stage, const CipherStage::Fn& fn) {
        try {
            data = fn(data, schedule);
        } catch (const std::exception& e) {
            throw StageError(stage.name, e.what());
        }
    };

    if (direction == Direction::Forward) {
        for (const CipherStage& stage : config.stages) apply(stage, stage.forward);
    } else {
        for (auto it = config.stages.rbegin(); it != config.stages.rend(); ++it) {
            apply(*it, it->inverse);
        }
    }
    return data;
}

/// SD-AREE encryption: cycle each 8-byte block `code` times at bit level,
/// then apply the positional Caesar shift. Output length equals input length.
inline std::vector<std::uint8_t> sd_aree_encrypt(std::span<const std::uint8_t> message,
                                                 const KeyMaterial& key,
                                                 WrapMode wrap = WrapMode::ByteMod256) {
    const KeySchedule s = derive_schedule(key);
    return encrypt_stream(detail::cycle_blocks(message, s.code, false), s, wrap);
}

/// Inverse of sd_aree_encrypt (exact in ByteMod256).
inline std::vector<std::uint8_t> sd_aree_decrypt(std::span<const std::uint8_t> ciphertext,
                                                 const KeyMaterial& key,
                                                 WrapMode wrap = WrapMode::ByteMod256) {
    const KeySchedule s = derive_schedule(key);
    return detail::cycle_blocks(decrypt_stream(ciphertext, s, wrap), s.code, true);
}

}  // namespace sdaree
