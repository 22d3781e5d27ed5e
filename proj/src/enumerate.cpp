#include "rookpoly/enumerate.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace rookpoly {

std::string to_string(ShapeKind k) {
    return k == ShapeKind::polyomino ? "polyomino" : "collection";
}

ShapeKind parse_shape_kind(std::string_view s) {
    if (s == "polyomino") return ShapeKind::polyomino;
    if (s == "collection") return ShapeKind::collection;
    throw std::invalid_argument("unknown shape kind: " + std::string(s));
}

namespace {

// Growth step: extend every canonical rank-r representative by one adjacent
// cell and re-canonicalize. Every free shape of rank r+1 arises this way from
// the canonical form of some shape it covers, so the pass is complete;
// deduplication by canonical form realizes the symmetry reduction.
std::vector<CellCollection> grow(const std::vector<CellCollection>& level, ShapeKind kind) {
    std::unordered_set<CellCollection, CellCollectionHash> next;
    for (const CellCollection& shape : level) {
        for (const Cell& c : shape.cells()) {
            for (int di = -1; di <= 1; ++di)
                for (int dj = -1; dj <= 1; ++dj) {
                    if (di == 0 && dj == 0) continue;
                    // Polyominoes grow across edges only; collections also
                    // grow across corners.
                    if (kind == ShapeKind::polyomino && di != 0 && dj != 0) continue;
                    Cell cand = cell_at(c.lower_left.i + di, c.lower_left.j + dj);
                    if (shape.contains(cand)) continue;
                    next.insert(canonical(shape.with_cell(cand)));
                }
        }
    }
    std::vector<CellCollection> out(next.begin(), next.end());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<std::vector<CellCollection>> enumerate_ranks(ShapeKind kind, int max_rank) {
    if (max_rank < 0) throw std::invalid_argument("enumerate: negative rank");
    std::vector<std::vector<CellCollection>> ranks;
    ranks.push_back({CellCollection{}});
    if (max_rank == 0) return ranks;
    ranks.push_back({CellCollection({cell_at(1, 1)})});
    for (int r = 2; r <= max_rank; ++r) ranks.push_back(grow(ranks.back(), kind));
    return ranks;
}

std::vector<CellCollection> enumerate_shapes(ShapeKind kind, int rank) {
    if (rank < 0) throw std::invalid_argument("enumerate: negative rank");
    if (rank == 0) return {CellCollection{}};
    std::vector<CellCollection> level = {CellCollection({cell_at(1, 1)})};
    for (int r = 2; r <= rank; ++r) level = grow(level, kind);
    return level;
}

std::uint64_t count_shapes(ShapeKind kind, int rank) {
    return static_cast<std::uint64_t>(enumerate_shapes(kind, rank).size());
}

EnumerationStream::EnumerationStream(ShapeKind kind, int rank)
    : kind_(kind), rank_(rank), shapes_(enumerate_shapes(kind, rank)) {}

std::optional<CellCollection> EnumerationStream::next() {
    if (emitted_ >= shapes_.size()) return std::nullopt;
    return shapes_[emitted_++];
}

}  // namespace rookpoly
