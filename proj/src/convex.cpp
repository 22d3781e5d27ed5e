#include "rookpoly/convex.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "rookpoly/algebra.hpp"
#include "rookpoly/hilbert.hpp"

namespace rookpoly {

namespace {

void require_weakly_connected_convex(const CellCollection& p, const char* who) {
    if (p.empty()) throw std::invalid_argument(std::string(who) + ": empty collection");
    if (weak_components(p).size() != 1)
        throw std::invalid_argument(std::string(who) + ": collection is not weakly connected");
    if (!is_convex(p).convex)
        throw std::invalid_argument(std::string(who) + ": collection is not convex");
}

bool has_horizontal_edge(const CellCollection& p, Point from) {
    // Edge [from, from+(1,0)]: top edge of the cell below it, bottom edge of
    // the cell above it.
    return p.contains(from.i, from.j - 1) || p.contains(from.i, from.j);
}

bool has_vertical_edge(const CellCollection& p, Point from) {
    // Edge [from, from+(0,1)]: left edge of the cell right of it, right edge
    // of the cell left of it.
    return p.contains(from.i, from.j) || p.contains(from.i - 1, from.j);
}

std::vector<Point> edge_run(const CellCollection& p, Point v, bool horizontal) {
    int lo = horizontal ? v.i : v.j;
    int hi = lo;
    auto edge_from = [&](int c) {
        return horizontal ? has_horizontal_edge(p, Point{c, v.j})
                          : has_vertical_edge(p, Point{v.i, c});
    };
    while (edge_from(lo - 1)) --lo;
    while (edge_from(hi)) ++hi;
    std::vector<Point> run;
    run.reserve(static_cast<std::size_t>(hi - lo) + 1);
    for (int c = lo; c <= hi; ++c)
        run.push_back(horizontal ? Point{c, v.j} : Point{v.i, c});
    return run;
}

}  // namespace

TopLeftData top_left_data(const CellCollection& p) {
    require_weakly_connected_convex(p, "top_left_data");
    TopLeftData out;
    const CellInterval box = *p.bounding_box();
    const int min_i = box.A.lower_left.i, min_j = box.A.lower_left.j;
    out.n_cols = box.width();
    out.n_rows = box.height();

    // For a weakly connected convex collection, occupied columns and rows are
    // the full coordinate ranges of the bounding box, one interval each.
    const int top_j = box.B.lower_left.j;
    int k_i = min_i;
    while (!p.contains(k_i, top_j)) ++k_i;
    out.top_left_cell = cell_at(k_i, top_j);
    out.pivot = out.top_left_cell.upper_left();
    out.pivot_col = k_i - min_i + 1;

    int z_i = k_i;
    while (p.contains(z_i + 1, top_j)) ++z_i;
    out.hull_high_cell = cell_at(z_i, top_j);
    out.high_col = z_i - min_i + 1;

    int y_j = top_j;
    while (p.contains(k_i, y_j - 1)) --y_j;
    out.hull_low_cell = cell_at(k_i, y_j);
    out.low_row = y_j - min_j + 1;

    std::vector<Cell> hull;
    for (const ProperInterval& iv : inner_intervals(p)) {
        if (iv.upper_left() != out.pivot) continue;
        for (int i = iv.a.i; i < iv.b.i; ++i)
            for (int j = iv.a.j; j < iv.b.j; ++j) hull.push_back(cell_at(i, j));
    }
    out.pivot_hull = CellCollection(std::move(hull));
    if (out.pivot_hull.empty()) throw std::logic_error("top_left_data: empty pivot hull");

    const CellInterval hull_box = *out.pivot_hull.bounding_box();
    if (hull_box.A != out.hull_low_cell || hull_box.B != out.hull_high_cell)
        throw std::logic_error("top_left_data: hull bounding rectangle mismatch");
    if (classify_convex(out.pivot_hull) != ConvexClass::ferrers)
        throw std::logic_error("top_left_data: pivot hull is not a Ferrers diagram");

    out.horizontal_run = edge_run(p, out.pivot, true);
    out.vertical_run = edge_run(p, out.pivot, false);
    return out;
}

Dissection dissect(const CellCollection& p) {
    const TopLeftData tld = top_left_data(p);
    const CellInterval box = *p.bounding_box();
    const int min_i = box.A.lower_left.i, min_j = box.A.lower_left.j;
    const int k = tld.pivot_col, j = tld.low_row, pcol = tld.high_col;
    const int n = tld.n_rows;

    std::vector<Cell> left, right, below, corner;
    for (const Cell& c : p.cells()) {
        const int q = c.lower_left.i - min_i + 1;   // column index
        const int qr = c.lower_left.j - min_j + 1;  // row index
        if (q <= k - 1)
            left.push_back(c);
        else if (q >= pcol + 1 && qr >= j && qr <= n - 1)
            right.push_back(c);
        else if (q >= k + 1 && q <= pcol && qr <= j - 1)
            below.push_back(c);
        else if (q >= pcol + 1 && qr <= j - 1)
            corner.push_back(c);
    }
    Dissection out;
    out.left = CellCollection(std::move(left));
    out.right = CellCollection(std::move(right));
    out.below = CellCollection(std::move(below));
    out.corner = CellCollection(std::move(corner));

    if (out.left.rank() + out.right.rank() + out.below.rank() + out.corner.rank() +
            tld.pivot_hull.rank() !=
        p.rank())
        throw std::logic_error("dissect: subcollections do not partition the collection");

    const bool corner_case = !out.corner.empty();
    if (corner_case) {
        if (out.right.empty() == out.below.empty())
            throw std::domain_error(
                "dissect: corner region present but not exactly one of right/below");
        // A populated corner forces the hull to be its full bounding
        // rectangle.
        if (tld.pivot_hull.rank() !=
            CellInterval{tld.hull_low_cell, tld.hull_high_cell}.size())
            throw std::logic_error("dissect: corner region with an incomplete hull");
    } else if (!out.below.empty()) {
        throw std::domain_error("dissect: below region must be empty in this orientation");
    }

    out.minus_top_left = p.without_cell(tld.top_left_cell);

    if (!out.below.empty()) {
        std::vector<Cell> residual = out.left.cells();
        for (const Cell& c : out.below.cells()) residual.push_back(c);
        for (const Cell& c : out.corner.cells()) residual.push_back(c);
        out.residual = CellCollection(std::move(residual));
    } else {
        // Glue: shift the right-hand part (and the corner band under it) left
        // so that its left border lands on the hull's left border.
        const int shift = pcol + 1 - k;
        std::vector<Cell> residual = out.left.cells();
        for (const Cell& c : out.right.cells())
            residual.push_back(cell_at(c.lower_left.i - shift, c.lower_left.j));
        for (const Cell& c : out.corner.cells())
            residual.push_back(cell_at(c.lower_left.i - shift, c.lower_left.j));
        const std::size_t expected =
            out.left.cells().size() + out.right.cells().size() + out.corner.cells().size();
        out.residual = CellCollection(std::move(residual));
        if (out.residual.cells().size() != expected)
            throw std::logic_error("dissect: glued parts overlap");
    }

    // Count the run vertices that stay free in the series decomposition. A
    // run vertex is used up when the residual keeps it as one of its own
    // vertices, or (in the unshifted case) when it stands in on the
    // horizontal run for a residual vertex on the hull's bottom seam, which
    // the decomposition removes together with the hull interior.
    std::set<Point> runs(tld.horizontal_run.begin(), tld.horizontal_run.end());
    runs.insert(tld.vertical_run.begin(), tld.vertical_run.end());

    const std::vector<Point> residual_vertices = vertices(out.residual);
    std::set<Point> used;
    for (const Point& w : residual_vertices)
        if (runs.count(w)) used.insert(w);
    if (!out.below.empty()) {
        std::set<Point> hull_vertices;
        for (const Point& w : vertices(tld.pivot_hull)) hull_vertices.insert(w);
        for (const Point& w : residual_vertices) {
            if (!hull_vertices.count(w) || runs.count(w)) continue;
            const Point stand_in{w.i, tld.pivot.j};
            if (!runs.count(stand_in) || used.count(stand_in))
                throw std::logic_error("dissect: inconsistent seam identification");
            used.insert(stand_in);
        }
    }
    if (used.count(tld.pivot)) throw std::logic_error("dissect: pivot vertex is never used up");
    out.free_vertex_count = static_cast<int>(runs.size()) - static_cast<int>(used.size());
    return out;
}

CellCollection normalize_orientation(const CellCollection& p) {
    require_weakly_connected_convex(p, "normalize_orientation");

    std::vector<CellCollection> candidates;
    candidates.push_back(translated_to_origin(p));
    candidates.push_back(transform(p, Dihedral::rot180));
    std::vector<CellCollection> rest;
    for (Dihedral t : {Dihedral::rot90, Dihedral::rot270, Dihedral::mirror_x, Dihedral::mirror_y,
                       Dihedral::transpose, Dihedral::anti_transpose})
        rest.push_back(transform(p, t));
    std::sort(rest.begin(), rest.end());
    candidates.insert(candidates.end(), rest.begin(), rest.end());

    for (const CellCollection& q : candidates) {
        try {
            dissect(q);
        } catch (const std::domain_error&) {
            continue;
        }
        if (satisfies_sharp(q)) return q;
    }
    throw std::domain_error(
        "normalize_orientation: no dihedral image has a quadratic Groebner basis with the "
        "required dissection shape");
}

namespace {

struct HEntry {
    IntPolynomial h;
    bool certified;
    std::string diagnostic;
};

class RecursiveHEngine {
public:
    HEntry run(const CellCollection& p) {
        if (p.empty()) return {IntPolynomial::one(), true, {}};
        const CellCollection key = canonical(p);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        HEntry result;
        std::vector<CellCollection> comps = weak_components(p);
        if (comps.size() > 1) {
            result = {IntPolynomial::one(), true, {}};
            for (const CellCollection& comp : comps) {
                HEntry sub = run(comp);
                result.h = result.h * sub.h;
                if (!sub.certified && result.certified) {
                    result.certified = false;
                    result.diagnostic = sub.diagnostic;
                }
            }
        } else if (!is_convex(p).convex) {
            result = fallback(p, "component is not convex");
        } else {
            try {
                const CellCollection q = normalize_orientation(p);
                const Dissection d = dissect(q);
                HEntry a = run(d.minus_top_left);
                HEntry b = run(d.residual);
                result.h = a.h + b.h.shifted(1);
                result.certified = a.certified && b.certified;
                result.diagnostic = a.certified ? b.diagnostic : a.diagnostic;
            } catch (const std::domain_error& e) {
                result = fallback(p, e.what());
            }
        }
        memo_.emplace(key, result);
        return result;
    }

private:
    HEntry fallback(const CellCollection& p, const std::string& why) {
        return {h_polynomial(p).h_poly, false, why};
    }

    std::unordered_map<CellCollection, HEntry, CellCollectionHash> memo_;
};

}  // namespace

RecursiveH recursive_h(const CellCollection& p) {
    RecursiveHEngine engine;
    HEntry e = engine.run(p);
    return {std::move(e.h), e.certified, std::move(e.diagnostic)};
}

}  // namespace rookpoly
