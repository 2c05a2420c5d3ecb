#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "sdaree/ring.hpp"

namespace sdaree {

/// An m x 8 grid of bits, m in [1, 8]. Row r holds byte r of the block with
/// the most significant bit in column 0. Dimensions are fixed at
/// construction.
class BitMatrix {
public:
    static constexpr std::size_t kCols = 8;
    static constexpr std::size_t kMaxRows = 8;

    explicit BitMatrix(std::span<const std::uint8_t> block) : rows_(block.size()) {
        if (rows_ < 1 || rows_ > kMaxRows) {
            throw std::invalid_argument("BitMatrix: block must hold 1..8 bytes");
        }
        bits_.fill(0);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < kCols; ++c) {
                bits_[r * kCols + c] = static_cast<std::uint8_t>((block[r] >> (7 - c)) & 1u);
            }
        }
    }

    std::size_t rows() const { return rows_; }

    std::uint8_t bit(std::size_t r, std::size_t c) const { return bits_[r * kCols + c]; }

    std::vector<std::uint8_t> to_bytes() const {
        std::vector<std::uint8_t> out(rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            std::uint8_t v = 0;
            for (std::size_t c = 0; c < kCols; ++c) {
                v = static_cast<std::uint8_t>((v << 1) | bits_[r * kCols + c]);
            }
            out[r] = v;
        }
        return out;
    }

    std::size_t ones_count() const {
        std::size_t n = 0;
        for (std::size_t i = 0; i < rows_ * kCols; ++i) n += bits_[i];
        return n;
    }

    bool operator==(const BitMatrix&) const = default;

private:
    friend BitMatrix cycle(const BitMatrix&, std::uint64_t);
    friend BitMatrix uncycle(const BitMatrix&, std::uint64_t);

    std::size_t rows_;
    std::array<std::uint8_t, kMaxRows * kCols> bits_{};
};

/// Split a message into consecutive 8-byte blocks; a final partial group of
/// m bytes becomes one m x 8 matrix. No padding: ciphertext length always
/// equals plaintext length.
inline std::vector<BitMatrix> pack_blocks(std::span<const std::uint8_t> message) {
    std::vector<BitMatrix> blocks;
    blocks.reserve((message.size() + 7) / 8);
    for (std::size_t off = 0; off < message.size(); off += 8) {
        const std::size_t m = std::min<std::size_t>(8, message.size() - off);
        blocks.emplace_back(message.subspan(off, m));
    }
    return blocks;
}

/// Bit-for-bit inverse of pack_blocks.
inline std::vector<std::uint8_t> unpack_blocks(std::span<const BitMatrix> blocks) {
    std::vector<std::uint8_t> out;
    for (const BitMatrix& block : blocks) {
        auto bytes = block.to_bytes();
        out.insert(out.end(), bytes.begin(), bytes.end());
    }
    return out;
}

/// n applications of the cyclic operation, done as one per-ring rotation.
inline BitMatrix cycle(const BitMatrix& matrix, std::uint64_t n) {
    BitMatrix out = matrix;
    rotate_rings(std::span<std::uint8_t>(out.bits_.data(), out.rows_ * BitMatrix::kCols),
                 out.rows_, BitMatrix::kCols, n);
    return out;
}

inline BitMatrix cycle_once(const BitMatrix& matrix) { return cycle(matrix, 1); }

/// Exact inverse of cycle with the same n.
inline BitMatrix uncycle(const BitMatrix& matrix, std::uint64_t n) {
    BitMatrix out = matrix;
    rotate_rings(std::span<std::uint8_t>(out.bits_.data(), out.rows_ * BitMatrix::kCols),
                 out.rows_, BitMatrix::kCols, n, /*inverse=*/true);
    return out;
}

}  // namespace sdaree
