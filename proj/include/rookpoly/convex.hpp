#pragma once

#include <string>
#include <vector>

#include "rookpoly/grid.hpp"
#include "rookpoly/polynomial.hpp"

namespace rookpoly {

// Data attached to the top-left cell of a weakly connected convex collection:
// X is the leftmost cell of the top row, v its upper-left corner, and the
// pivot hull P_v the union of all inner intervals containing v (always a
// Ferrers diagram whose bounding rectangle is [Y, Z]). Row and column indices
// are 1-based, rows bottom to top and columns left to right.
struct TopLeftData {
    Cell top_left_cell;                      // X
    Point pivot;                             // v
    CellCollection pivot_hull;               // P_v
    std::vector<Point> horizontal_run;       // maximal horizontal edge interval through v
    std::vector<Point> vertical_run;         // maximal vertical edge interval through v
    Cell hull_low_cell;                      // Y: bottom end of the maximal vertical cell interval
    Cell hull_high_cell;                     // Z: right end of the maximal horizontal cell interval
    int low_row = 0;                         // j: row index of Y
    int pivot_col = 0;                       // k: column index of X
    int high_col = 0;                        // p: column index of Z
    int n_rows = 0;
    int n_cols = 0;
};

TopLeftData top_left_data(const CellCollection& p);

// The four subcollections around the pivot hull, the count d of hull border
// vertices that stay free in the series decomposition, and the two smaller
// collections driving the recursion h(P) = h(P') + t h(P'').
struct Dissection {
    CellCollection left;    // columns strictly left of the hull
    CellCollection right;   // right of the hull, at hull rows and above the bottom row band
    CellCollection below;   // below the hull, within the hull's columns
    CellCollection corner;  // below and right of the hull
    int free_vertex_count = 0;                // d
    CellCollection minus_top_left;            // P' = P minus X
    CellCollection residual;                  // P''
};

// Requires the orientation produced by normalize_orientation: either below
// and corner are empty, or corner is nonempty and exactly one of right/below
// is nonempty. Throws std::domain_error otherwise.
Dissection dissect(const CellCollection& p);

// Picks a dihedral image of a weakly connected convex collection whose
// generators form a reduced Groebner basis under rev and whose dissection has
// the shape above. Candidates are tried as identity, 180-degree rotation,
// then the remaining images in a deterministic order. Throws
// std::domain_error when no image qualifies and std::invalid_argument for
// non-convex or disconnected input.
CellCollection normalize_orientation(const CellCollection& p);

struct RecursiveH {
    IntPolynomial h;
    bool certified = false;   // the recursion applied everywhere
    std::string diagnostic;   // first reason a fallback was taken
};

// Groebner-free h-polynomial for collections with convex weakly connected
// components: multiplicative over components, h(P) = h(P') + t h(P'') on a
// normalized component, h(empty) = 1. Components where no orientation
// qualifies fall back to the series pipeline and taint the certification.
RecursiveH recursive_h(const CellCollection& p);

}  // namespace rookpoly
