#include <doctest.h>

#include <set>
#include <stdexcept>

#include "rookpoly/enumerate.hpp"
#include "rookpoly/grid.hpp"

using namespace rookpoly;

TEST_SUITE_BEGIN("enumerate");

TEST_CASE("counts match the reference tables at small ranks") {
    const std::vector<std::uint64_t> collections = {1, 1, 2, 5, 22, 94, 524};
    for (int rank = 0; rank <= 6; ++rank)
        CHECK(count_shapes(ShapeKind::collection, rank) == collections[rank]);

    const std::vector<std::uint64_t> polyominoes = {1, 1, 1, 2, 5, 12, 35, 108};
    for (int rank = 0; rank <= 7; ++rank)
        CHECK(count_shapes(ShapeKind::polyomino, rank) == polyominoes[rank]);
}

TEST_CASE("emitted shapes are canonical, distinct, sorted and connected") {
    for (ShapeKind kind : {ShapeKind::polyomino, ShapeKind::collection}) {
        const auto shapes = enumerate_shapes(kind, 5);
        std::set<CellCollection> seen;
        for (const CellCollection& p : shapes) {
            CHECK(p.rank() == 5);
            CHECK(canonical(p) == p);
            CHECK(seen.insert(p).second);
            CHECK(weak_components(p).size() == 1);
            if (kind == ShapeKind::polyomino) CHECK(connected_components(p).size() == 1);
        }
        CHECK(std::is_sorted(shapes.begin(), shapes.end()));
    }
}

TEST_CASE("rank edge cases") {
    const auto empty = enumerate_shapes(ShapeKind::polyomino, 0);
    REQUIRE(empty.size() == 1);
    CHECK(empty[0].empty());
    CHECK_THROWS_AS(enumerate_shapes(ShapeKind::collection, -1), std::invalid_argument);

    const auto singles = enumerate_shapes(ShapeKind::polyomino, 1);
    REQUIRE(singles.size() == 1);
    CHECK(singles[0] == CellCollection({cell_at(1, 1)}));
}

TEST_CASE("enumerate_ranks matches per-rank enumeration") {
    const auto ranks = enumerate_ranks(ShapeKind::collection, 4);
    REQUIRE(ranks.size() == 5);
    for (int r = 0; r <= 4; ++r) CHECK(ranks[r] == enumerate_shapes(ShapeKind::collection, r));
}

TEST_CASE("stream emits every shape once") {
    EnumerationStream stream(ShapeKind::polyomino, 4);
    std::vector<CellCollection> drained;
    while (auto p = stream.next()) drained.push_back(*p);
    CHECK(drained.size() == 5);
    CHECK(stream.emitted() == 5);
    CHECK(drained == enumerate_shapes(ShapeKind::polyomino, 4));
    CHECK_FALSE(stream.next().has_value());
}

TEST_CASE("kind parsing") {
    CHECK(parse_shape_kind("polyomino") == ShapeKind::polyomino);
    CHECK(parse_shape_kind("collection") == ShapeKind::collection);
    CHECK_THROWS_AS(parse_shape_kind("hexomino"), std::invalid_argument);
    CHECK(to_string(ShapeKind::polyomino) == "polyomino");
}

TEST_SUITE_END();
