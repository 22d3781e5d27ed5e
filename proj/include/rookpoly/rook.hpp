#pragma once

#include <cstdint>
#include <vector>

#include "rookpoly/grid.hpp"
#include "rookpoly/polynomial.hpp"

namespace rookpoly {

// A set of pairwise non-attacking rooks, one per cell, kept sorted.
struct RookConfig {
    std::vector<Cell> rooks;
    friend auto operator<=>(const RookConfig&, const RookConfig&) = default;
};

// levels[k-1] holds every k-rook configuration; the last level is nonempty
// and its index is the rook number.
struct RookLevels {
    std::vector<std::vector<RookConfig>> levels;
};

// Two cells of P attack iff they are in horizontal or vertical position and
// the connecting cell interval lies entirely in P (equivalently, they share a
// row or a column of P). Throws std::invalid_argument when a cell is outside
// P or the cells coincide.
bool attacks(const Cell& a, const Cell& b, const CellCollection& p);

// Per-collection rook engine: cells are indexed in sorted order and
// configurations are cell-index bitmasks, so extension by one rook is a mask
// test. Collections larger than 64 cells are rejected.
class RookBoard {
public:
    explicit RookBoard(const CellCollection& p);

    const CellCollection& board() const { return board_; }
    const std::vector<Cell>& cells() const { return cells_; }
    int size() const { return static_cast<int>(cells_.size()); }
    int cell_index(Cell c) const;  // -1 when absent
    std::uint64_t attackers(int cell) const { return attack_[static_cast<std::size_t>(cell)]; }

    std::vector<std::uint64_t> singletons() const;
    // All configurations extending `level` by one rook with a higher cell
    // index; each extension is produced exactly once.
    std::vector<std::uint64_t> extend(const std::vector<std::uint64_t>& level) const;

    // Streams the levels of non-attacking configurations bottom up, keeping
    // only the current one; fn(k, configs) is called for k = 1, 2, ...
    template <class F>
    void for_each_level(F&& fn) const {
        std::vector<std::uint64_t> level = singletons();
        for (int k = 1; !level.empty(); ++k) {
            fn(k, level);
            level = extend(level);
        }
    }

    RookConfig to_config(std::uint64_t mask) const;

private:
    CellCollection board_;
    std::vector<Cell> cells_;
    std::vector<std::uint64_t> attack_;
};

// Algorithm: grow configurations level by level, starting from all
// singletons, extending each configuration by every non-attacking cell, and
// deduplicating; stops at the first empty level.
RookLevels all_configurations(const CellCollection& p);

// Coefficient k counts the k-rook configurations; the constant term is 1 and
// the degree is the rook number.
IntPolynomial rook_polynomial(const CellCollection& p);

// Maximum number of pairwise non-attacking rooks in P.
int rook_number(const CellCollection& p);

// Closed form for the m x n board: sum_k C(m,k) * n(n-1)...(n-k+1) * t^k.
IntPolynomial rectangle_rook_polynomial(int m, int n);

}  // namespace rookpoly
