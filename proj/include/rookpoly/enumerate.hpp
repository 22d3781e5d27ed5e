#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rookpoly/grid.hpp"

namespace rookpoly {

enum class ShapeKind {
    polyomino,  // edge-connected
    collection  // vertex-connected (weakly connected)
};
std::string to_string(ShapeKind k);
ShapeKind parse_shape_kind(std::string_view s);

// All canonical representatives of the given rank, in sorted order. Rank 0
// yields the single empty collection; negative ranks are rejected.
std::vector<CellCollection> enumerate_shapes(ShapeKind kind, int rank);

// Representatives for every rank 1..max_rank in one growth pass;
// result[r] holds the sorted rank-r shapes (result[0] is the empty
// collection alone).
std::vector<std::vector<CellCollection>> enumerate_ranks(ShapeKind kind, int max_rank);

// Number of canonical representatives of the given rank; keeps only the
// current frontier alive.
std::uint64_t count_shapes(ShapeKind kind, int rank);

class EnumerationStream {
public:
    EnumerationStream(ShapeKind kind, int rank);

    std::optional<CellCollection> next();
    std::uint64_t emitted() const { return emitted_; }
    ShapeKind kind() const { return kind_; }
    int rank() const { return rank_; }

private:
    ShapeKind kind_;
    int rank_;
    std::vector<CellCollection> shapes_;
    std::uint64_t emitted_ = 0;
};

}  // namespace rookpoly
