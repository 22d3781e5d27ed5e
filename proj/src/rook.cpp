#include "rookpoly/rook.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "rookpoly/deadline.hpp"

namespace rookpoly {

bool attacks(const Cell& a, const Cell& b, const CellCollection& p) {
    if (!p.contains(a) || !p.contains(b))
        throw std::invalid_argument("attacks: cell outside the collection");
    if (a == b) throw std::invalid_argument("attacks: cells coincide");
    const Point pa = a.lower_left, pb = b.lower_left;
    if (pa.j == pb.j) {
        for (int i = std::min(pa.i, pb.i); i <= std::max(pa.i, pb.i); ++i)
            if (!p.contains(i, pa.j)) return false;
        return true;
    }
    if (pa.i == pb.i) {
        for (int j = std::min(pa.j, pb.j); j <= std::max(pa.j, pb.j); ++j)
            if (!p.contains(pa.i, j)) return false;
        return true;
    }
    return false;
}

RookBoard::RookBoard(const CellCollection& p) : board_(p), cells_(p.cells()) {
    if (cells_.size() > 64) throw std::invalid_argument("RookBoard: more than 64 cells");
    attack_.assign(cells_.size(), 0);
    // Cells attack exactly when they lie in the same row or column interval
    // of P, so label each cell with its row and column id.
    std::vector<int> row_id(cells_.size(), -1), col_id(cells_.size(), -1);
    int id = 0;
    for (const CellInterval& r : rows(p)) {
        for (int i = r.A.lower_left.i; i <= r.B.lower_left.i; ++i)
            row_id[static_cast<std::size_t>(cell_index(cell_at(i, r.A.lower_left.j)))] = id;
        ++id;
    }
    id = 0;
    for (const CellInterval& c : columns(p)) {
        for (int j = c.A.lower_left.j; j <= c.B.lower_left.j; ++j)
            col_id[static_cast<std::size_t>(cell_index(cell_at(c.A.lower_left.i, j)))] = id;
        ++id;
    }
    for (std::size_t x = 0; x < cells_.size(); ++x)
        for (std::size_t y = x + 1; y < cells_.size(); ++y)
            if (row_id[x] == row_id[y] || col_id[x] == col_id[y]) {
                attack_[x] |= 1ull << y;
                attack_[y] |= 1ull << x;
            }
}

int RookBoard::cell_index(Cell c) const {
    auto it = std::lower_bound(cells_.begin(), cells_.end(), c);
    if (it == cells_.end() || *it != c) return -1;
    return static_cast<int>(it - cells_.begin());
}

std::vector<std::uint64_t> RookBoard::singletons() const {
    std::vector<std::uint64_t> out;
    out.reserve(cells_.size());
    for (std::size_t k = 0; k < cells_.size(); ++k) out.push_back(1ull << k);
    return out;
}

std::vector<std::uint64_t> RookBoard::extend(const std::vector<std::uint64_t>& level) const {
    std::vector<std::uint64_t> out;
    const int n = size();
    for (std::uint64_t config : level) {
        detail::poll_deadline();
        const int top = 63 - std::countl_zero(config);
        for (int c = top + 1; c < n; ++c)
            if ((attackers(c) & config) == 0) out.push_back(config | (1ull << c));
    }
    std::sort(out.begin(), out.end());
    return out;
}

RookConfig RookBoard::to_config(std::uint64_t mask) const {
    RookConfig cfg;
    while (mask) {
        int c = std::countr_zero(mask);
        cfg.rooks.push_back(cells_[static_cast<std::size_t>(c)]);
        mask &= mask - 1;
    }
    return cfg;
}

RookLevels all_configurations(const CellCollection& p) {
    if (p.empty()) throw std::invalid_argument("all_configurations: empty collection");
    RookBoard board(p);
    RookLevels out;
    board.for_each_level([&](int, const std::vector<std::uint64_t>& level) {
        std::vector<RookConfig> configs;
        configs.reserve(level.size());
        for (std::uint64_t mask : level) configs.push_back(board.to_config(mask));
        std::sort(configs.begin(), configs.end());
        out.levels.push_back(std::move(configs));
    });
    return out;
}

IntPolynomial rook_polynomial(const CellCollection& p) {
    std::vector<BigInt> coeffs = {1};
    if (!p.empty()) {
        RookBoard board(p);
        board.for_each_level([&coeffs](int, const std::vector<std::uint64_t>& level) {
            coeffs.emplace_back(level.size());
        });
    }
    return IntPolynomial(std::move(coeffs));
}

int rook_number(const CellCollection& p) { return rook_polynomial(p).degree(); }

IntPolynomial rectangle_rook_polynomial(int m, int n) {
    if (m < 1 || n < 1)
        throw std::invalid_argument("rectangle_rook_polynomial: sides must be positive");
    std::vector<BigInt> coeffs;
    for (int k = 0; k <= std::min(m, n); ++k) {
        BigInt binom = 1;  // C(m, k)
        for (int x = 0; x < k; ++x) binom = binom * (m - x) / (x + 1);
        BigInt falling = 1;  // n (n-1) ... (n-k+1)
        for (int x = 0; x < k; ++x) falling *= n - x;
        coeffs.push_back(binom * falling);
    }
    return IntPolynomial(std::move(coeffs));
}

}  // namespace rookpoly
