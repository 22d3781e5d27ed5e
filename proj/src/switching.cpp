#include "rookpoly/switching.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>

#include "rookpoly/deadline.hpp"
#include "rookpoly/disjoint_set.hpp"

namespace rookpoly {

namespace {

// Rooks at a and b (both coordinates distinct) are switching rooks iff the
// cell rectangle they span lies in P; the switched pair swaps the row
// coordinates.
bool switchable(const CellMask& mask, Point a, Point b) {
    if (a.i == b.i || a.j == b.j) return false;
    Cell lo = cell_at(std::min(a.i, b.i), std::min(a.j, b.j));
    Cell hi = cell_at(std::max(a.i, b.i), std::max(a.j, b.j));
    return mask.rect_full(lo, hi);
}

}  // namespace

std::vector<RookConfig> single_switches(const RookConfig& f, const CellCollection& p) {
    for (const Cell& c : f.rooks)
        if (!p.contains(c)) throw std::invalid_argument("single_switches: rook outside the board");
    CellMask mask(p);
    std::vector<RookConfig> out;
    for (std::size_t x = 0; x < f.rooks.size(); ++x)
        for (std::size_t y = x + 1; y < f.rooks.size(); ++y) {
            const Point a = f.rooks[x].lower_left, b = f.rooks[y].lower_left;
            if (!switchable(mask, a, b)) continue;
            RookConfig g = f;
            g.rooks[x] = cell_at(a.i, b.j);
            g.rooks[y] = cell_at(b.i, a.j);
            std::sort(g.rooks.begin(), g.rooks.end());
            out.push_back(std::move(g));
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

IntPolynomial switching_rook_polynomial(const CellCollection& p) {
    std::vector<BigInt> coeffs = {1};
    if (p.empty()) return IntPolynomial(std::move(coeffs));

    RookBoard board(p);
    CellMask mask(p);
    board.for_each_level([&](int, const std::vector<std::uint64_t>& level) {
        detail::poll_deadline();
        std::unordered_map<std::uint64_t, std::size_t> index;
        index.reserve(level.size() * 2);
        for (std::size_t k = 0; k < level.size(); ++k) index.emplace(level[k], k);

        DisjointSet classes(level.size());
        std::vector<int> rooks;
        for (std::size_t k = 0; k < level.size(); ++k) {
            rooks.clear();
            for (std::uint64_t m = level[k]; m;) {
                rooks.push_back(std::countr_zero(m));
                m &= m - 1;
            }
            for (std::size_t x = 0; x < rooks.size(); ++x)
                for (std::size_t y = x + 1; y < rooks.size(); ++y) {
                    const Point a = board.cells()[static_cast<std::size_t>(rooks[x])].lower_left;
                    const Point b = board.cells()[static_cast<std::size_t>(rooks[y])].lower_left;
                    if (!switchable(mask, a, b)) continue;
                    const int xa = board.cell_index(cell_at(a.i, b.j));
                    const int yb = board.cell_index(cell_at(b.i, a.j));
                    std::uint64_t other = level[k];
                    other &= ~(1ull << rooks[x]);
                    other &= ~(1ull << rooks[y]);
                    other |= 1ull << xa;
                    other |= 1ull << yb;
                    auto it = index.find(other);
                    if (it == index.end())
                        throw std::logic_error("switching: switched configuration missing");
                    classes.unite(k, it->second);
                }
        }
        coeffs.emplace_back(classes.component_count());
    });
    return IntPolynomial(std::move(coeffs));
}

SwitchReport switching_rook_number_report(const CellCollection& p) {
    IntPolynomial poly = switching_rook_polynomial(p);
    return {poly, poly.degree()};
}

}  // namespace rookpoly
