#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sdaree {

/// One concentric ring of a rows x cols grid. Cells are listed clockwise
/// starting at the ring's top-left corner; a degenerate remainder (single
/// row or single column) is listed once, left-to-right or top-to-bottom.
struct RingPath {
    std::size_t depth = 0;  // 0 = outermost
    std::vector<std::pair<std::size_t, std::size_t>> cells;
};

/// Decompose a grid into its concentric rings, outermost first.
/// The rings partition the grid: every cell appears in exactly one ring.
inline std::vector<RingPath> ring_decompose(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0) {
        throw std::invalid_argument("ring_decompose: grid dimensions must be positive");
    }
    std::vector<RingPath> rings;
    for (std::size_t d = 0; 2 * d < rows && 2 * d < cols; ++d) {
        const std::size_t top = d, bottom = rows - 1 - d;
        const std::size_t left = d, right = cols - 1 - d;

        RingPath ring;
        ring.depth = d;
        if (top == bottom) {
            for (std::size_t c = left; c <= right; ++c) ring.cells.emplace_back(top, c);
        } else if (left == right) {
            for (std::size_t r = top; r <= bottom; ++r) ring.cells.emplace_back(r, left);
        } else {
            for (std::size_t c = left; c <= right; ++c) ring.cells.emplace_back(top, c);
            for (std::size_t r = top + 1; r <= bottom; ++r) ring.cells.emplace_back(r, right);
            for (std::size_t c = right - 1; c + 1 > left; --c) ring.cells.emplace_back(bottom, c);
            for (std::size_t r = bottom - 1; r > top; --r) ring.cells.emplace_back(r, left);
        }
        rings.push_back(std::move(ring));
    }
    return rings;
}

/// Rotate every ring of a row-major grid in place, `steps` single cyclic
/// operations at once. One cyclic operation moves even-depth ring contents
/// one cell forward along the clockwise path and odd-depth ring contents one
/// cell backward; `inverse` undoes it. Rotation is applied as steps mod ring
/// length per ring, which is observationally identical to repeating single
/// steps.
template <typename T>
void rotate_rings(std::span<T> grid, std::size_t rows, std::size_t cols,
                  std::uint64_t steps, bool inverse = false) {
    if (grid.size() != rows * cols) {
        throw std::invalid_argument("rotate_rings: grid size does not match dimensions");
    }
    for (const RingPath& ring : ring_decompose(rows, cols)) {
        const std::size_t len = ring.cells.size();
        const std::size_t shift = static_cast<std::size_t>(steps % len);
        if (shift == 0) continue;

        const bool forward = (ring.depth % 2 == 0) != inverse;
        std::vector<T> saved(len);
        for (std::size_t j = 0; j < len; ++j) {
            const auto [r, c] = ring.cells[j];
            saved[j] = grid[r * cols + c];
        }
        for (std::size_t j = 0; j < len; ++j) {
            const std::size_t dst = forward ? (j + shift) % len : (j + len - shift) % len;
            const auto [r, c] = ring.cells[dst];
            grid[r * cols + c] = saved[j];
        }
    }
}

}  // namespace sdaree
