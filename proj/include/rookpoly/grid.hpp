#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rookpoly {

// Lattice point; i is the column coordinate, j the row coordinate.
struct Point {
    int i = 0;
    int j = 0;
    friend constexpr auto operator<=>(const Point&, const Point&) = default;
};

// Componentwise partial order on the lattice.
constexpr bool dominated_by(Point a, Point b) { return a.i <= b.i && a.j <= b.j; }
constexpr bool strictly_dominated_by(Point a, Point b) { return a.i < b.i && a.j < b.j; }

// Unit lattice square [a, a+(1,1)] identified by its lower-left corner a.
struct Cell {
    Point lower_left;

    constexpr Point upper_right() const { return {lower_left.i + 1, lower_left.j + 1}; }
    constexpr Point upper_left() const { return {lower_left.i, lower_left.j + 1}; }
    constexpr Point lower_right() const { return {lower_left.i + 1, lower_left.j}; }
    // The four corners: lower-left, upper-left, lower-right, upper-right.
    std::array<Point, 4> corners() const {
        return {lower_left, upper_left(), lower_right(), upper_right()};
    }
    friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

constexpr Cell cell_at(int i, int j) { return Cell{Point{i, j}}; }

// Proper interval [a,b] with a < b strictly componentwise; a, b are the
// diagonal corners, the upper-left/lower-right points are the anti-diagonal
// corners.
struct ProperInterval {
    Point a;
    Point b;

    constexpr Point upper_left() const { return {a.i, b.j}; }
    constexpr Point lower_right() const { return {b.i, a.j}; }
    friend constexpr auto operator<=>(const ProperInterval&, const ProperInterval&) = default;
};

// Rectangle of cells spanned by two cells A <= B (componentwise on the
// lower-left corners).
struct CellInterval {
    Cell A;
    Cell B;

    constexpr int width() const { return B.lower_left.i - A.lower_left.i + 1; }
    constexpr int height() const { return B.lower_left.j - A.lower_left.j + 1; }
    constexpr int size() const { return width() * height(); }
    constexpr bool contains(Cell c) const {
        return dominated_by(A.lower_left, c.lower_left) &&
               dominated_by(c.lower_left, B.lower_left);
    }
    constexpr bool horizontal() const { return A.lower_left.j == B.lower_left.j; }
    constexpr bool vertical() const { return A.lower_left.i == B.lower_left.i; }
    friend constexpr auto operator<=>(const CellInterval&, const CellInterval&) = default;
};

// A finite set of cells. Cells are kept sorted and unique; the empty
// collection has rank 0. Values are immutable after construction.
class CellCollection {
public:
    CellCollection() = default;
    explicit CellCollection(std::vector<Cell> cells);

    // The m x n rectangle (m wide, n tall) with lower-left cell (1,1).
    static CellCollection rectangle(int m, int n);

    const std::vector<Cell>& cells() const { return cells_; }
    int rank() const { return static_cast<int>(cells_.size()); }
    bool empty() const { return cells_.empty(); }
    bool contains(Cell c) const;
    bool contains(int i, int j) const { return contains(cell_at(i, j)); }

    // Inclusive cell-coordinate bounding rectangle; nullopt for the empty
    // collection.
    std::optional<CellInterval> bounding_box() const;

    CellCollection translated(int di, int dj) const;
    CellCollection with_cell(Cell c) const;
    CellCollection without_cell(Cell c) const;

    friend bool operator==(const CellCollection&, const CellCollection&) = default;
    friend auto operator<=>(const CellCollection&, const CellCollection&) = default;

private:
    std::vector<Cell> cells_;
};

struct CellCollectionHash {
    std::size_t operator()(const CellCollection& p) const noexcept;
};

// Occupancy bitmap over the bounding box with a summed-area table, for O(1)
// "is this cell rectangle entirely inside P" queries.
class CellMask {
public:
    explicit CellMask(const CellCollection& p);

    bool contains(int i, int j) const;
    bool contains(Cell c) const { return contains(c.lower_left.i, c.lower_left.j); }
    // All cells c with lo <= c <= lf componentwise belong to P.
    bool rect_full(Cell lo, Cell hi) const;

private:
    int count_rect(Cell lo, Cell hi) const;

    int min_i_ = 0, min_j_ = 0, w_ = 0, h_ = 0;
    std::vector<std::uint8_t> occ_;
    std::vector<int> area_;  // (w+1) x (h+1) prefix sums
};

// --- Basic geometry ---------------------------------------------------------

// V(P): union of the cells' corner sets, sorted.
std::vector<Point> vertices(const CellCollection& p);

// All proper intervals whose cells all belong to P, sorted by (a, b). Every
// cell contributes at least its own unit interval.
std::vector<ProperInterval> inner_intervals(const CellCollection& p);

// Maximal horizontal (rows) / vertical (columns) cell intervals contained in
// P. Together the rows partition the cells of P, and so do the columns.
std::vector<CellInterval> rows(const CellCollection& p);
std::vector<CellInterval> columns(const CellCollection& p);

struct ConvexityReport {
    bool row_convex = false;
    bool column_convex = false;
    bool convex = false;
};
// Row convex: any two cells in horizontal position have the connecting cell
// interval inside P; column convex analogously; convex = both. The empty
// collection is vacuously convex.
ConvexityReport is_convex(const CellCollection& p);

// Maximal edge-connected (polyomino) subcollections, sorted.
std::vector<CellCollection> connected_components(const CellCollection& p);
// Maximal vertex-connected subcollections, sorted.
std::vector<CellCollection> weak_components(const CellCollection& p);

// True iff the complement of P is edge-connected (no holes), decided by a
// flood fill over the bounding box padded by one cell ring.
bool is_simple(const CellCollection& p);

// True iff P contains no 2x2 block of cells.
bool is_thin(const CellCollection& p);

enum class ConvexClass { ferrers, stack, parallelogram, directed_convex, none };
std::string to_string(ConvexClass c);

// Classification of a convex polyomino by which corner cells of its minimal
// bounding rectangle it contains; the strongest class is reported. Throws
// std::invalid_argument on empty, disconnected or non-convex input.
ConvexClass classify_convex(const CellCollection& p);

// --- Symmetries -------------------------------------------------------------

enum class Dihedral {
    identity,
    rot90,
    rot180,
    rot270,
    mirror_x,       // (i,j) -> (-i,j)
    mirror_y,       // (i,j) -> (i,-j)
    transpose,      // (i,j) -> (j,i)
    anti_transpose  // (i,j) -> (-j,-i)
};
inline constexpr std::array<Dihedral, 8> kDihedralGroup = {
    Dihedral::identity,  Dihedral::rot90,    Dihedral::rot180,    Dihedral::rot270,
    Dihedral::mirror_x,  Dihedral::mirror_y, Dihedral::transpose, Dihedral::anti_transpose};

// Translate so the minimum cell coordinates become (1,1).
CellCollection translated_to_origin(const CellCollection& p);

// Apply a dihedral transform and translate back to (1,1).
CellCollection transform(const CellCollection& p, Dihedral t);

// The representative of P's symmetry orbit: among the 8 dihedral images
// translated to (1,1), the one with the lexicographically least sorted cell
// list. Idempotent and constant on orbits.
CellCollection canonical(const CellCollection& p);

// Text form of the canonical representative; used as the stable identifier
// in CLI output and reports.
std::string canonical_key(const CellCollection& p);

// --- Text codec -------------------------------------------------------------

// One collection per brace expression; each cell is written as its pair of
// diagonal corners, e.g. "{{{1,1},{2,2}},{{2,1},{3,2}}}". Whitespace is
// ignored on input; output is compact with the cells sorted.
CellCollection parse_collection(std::string_view text);
std::string format_collection(const CellCollection& p);

}  // namespace rookpoly
