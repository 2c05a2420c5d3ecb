#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sdaree/key_schedule.hpp"

namespace sdaree {

/// Rule for reducing out-of-range byte sums.
///
/// ByteMod256 reduces everything modulo 256 and is a bijection per position.
/// Paper255 reduces modulo 255 only when the sum leaves [0, 255]; the forward
/// map then sends 0x00 and 0xFF to the same value at almost every position,
/// so it is kept only for fidelity experiments.
enum class WrapMode { ByteMod256, Paper255 };

/// y = wrap(x + code + offset_at(i)).
inline std::uint8_t shift_byte(std::uint8_t x, std::uint64_t i, const KeySchedule& s,
                               WrapMode mode) {
    const std::uint64_t sum = x + s.code + offset_at(s, i);
    if (mode == WrapMode::ByteMod256) return static_cast<std::uint8_t>(sum % 256);
    return static_cast<std::uint8_t>(sum > 255 ? sum % 255 : sum);
}

/// Inverse of shift_byte on the domain where the forward map is injective.
inline std::uint8_t unshift_byte(std::uint8_t y, std::uint64_t i, const KeySchedule& s,
                                 WrapMode mode) {
    const auto d = static_cast<std::int64_t>(y) -
                   static_cast<std::int64_t>(s.code + offset_at(s, i));
    if (mode == WrapMode::ByteMod256) {
        return static_cast<std::uint8_t>(((d % 256) + 256) % 256);
    }
    return static_cast<std::uint8_t>(d < 0 ? ((d % 255) + 255) % 255 : d);
}

namespace detail {

// Walks t_i = power_ex^i mod P incrementally; one modular multiply per byte
// instead of a fresh square-and-multiply. Positions are absolute over the
// whole message, so chunked processing stays consistent.
template <typename WrapFn>
std::vector<std::uint8_t> map_stream(std::span<const std::uint8_t> data, const KeySchedule& s,
                                     std::uint64_t first_position, WrapFn wrap) {
    std::vector<std::uint8_t> out;
    out.reserve(data.size());
    const std::uint64_t base = s.power_ex % s.modulus;
    std::uint64_t pos = first_position;
    std::uint64_t t = offset_at(s, pos);
    for (std::uint8_t b : data) {
        out.push_back(wrap(b, t));
        ++pos;
        t = pos == 1 ? base : mul_mod(t, base, s.modulus);
    }
    return out;
}

}  // namespace detail

/// Byte-wise shift_byte at each global position; length preserved.
inline std::vector<std::uint8_t> encrypt_stream(std::span<const std::uint8_t> xs,
                                                const KeySchedule& s, WrapMode mode,
                                                std::uint64_t first_position = 0) {
    return detail::map_stream(xs, s, first_position, [&](std::uint8_t x, std::uint64_t t) {
        const std::uint64_t sum = x + s.code + t;
        if (mode == WrapMode::ByteMod256) return static_cast<std::uint8_t>(sum % 256);
        return static_cast<std::uint8_t>(sum > 255 ? sum % 255 : sum);
    });
}

/// Exact inverse of encrypt_stream in ByteMod256; in Paper255 the inverse
/// holds only for streams free of 0xFF at stage input, and a collided value
/// decodes to the 0x00 preimage.
inline std::vector<std::uint8_t> decrypt_stream(std::span<const std::uint8_t> ys,
                                                const KeySchedule& s, WrapMode mode,
                                                std::uint64_t first_position = 0) {
    return detail::map_stream(ys, s, first_position, [&](std::uint8_t y, std::uint64_t t) {
        const auto d = static_cast<std::int64_t>(y) - static_cast<std::int64_t>(s.code + t);
        if (mode == WrapMode::ByteMod256) {
            return static_cast<std::uint8_t>(((d % 256) + 256) % 256);
        }
        return static_cast<std::uint8_t>(d < 0 ? ((d % 255) + 255) % 255 : d);
    });
}

}  // namespace sdaree
