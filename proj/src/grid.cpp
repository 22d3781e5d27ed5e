#include "rookpoly/grid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace rookpoly {

namespace {

constexpr std::array<Point, 4> kEdgeNeighbors = {Point{1, 0}, Point{-1, 0}, Point{0, 1},
                                                 Point{0, -1}};
constexpr std::array<Point, 8> kVertexNeighbors = {Point{1, 0},  Point{-1, 0}, Point{0, 1},
                                                   Point{0, -1}, Point{1, 1},  Point{1, -1},
                                                   Point{-1, 1}, Point{-1, -1}};

}  // namespace

CellCollection::CellCollection(std::vector<Cell> cells) : cells_(std::move(cells)) {
    std::sort(cells_.begin(), cells_.end());
    cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

CellCollection CellCollection::rectangle(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("rectangle: sides must be positive");
    std::vector<Cell> cells;
    cells.reserve(static_cast<std::size_t>(m) * n);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) cells.push_back(cell_at(i, j));
    return CellCollection(std::move(cells));
}

bool CellCollection::contains(Cell c) const {
    return std::binary_search(cells_.begin(), cells_.end(), c);
}

std::optional<CellInterval> CellCollection::bounding_box() const {
    if (cells_.empty()) return std::nullopt;
    int lo_i = cells_.front().lower_left.i, hi_i = lo_i;
    int lo_j = cells_.front().lower_left.j, hi_j = lo_j;
    for (const Cell& c : cells_) {
        lo_i = std::min(lo_i, c.lower_left.i);
        hi_i = std::max(hi_i, c.lower_left.i);
        lo_j = std::min(lo_j, c.lower_left.j);
        hi_j = std::max(hi_j, c.lower_left.j);
    }
    return CellInterval{cell_at(lo_i, lo_j), cell_at(hi_i, hi_j)};
}

CellCollection CellCollection::translated(int di, int dj) const {
    std::vector<Cell> cells;
    cells.reserve(cells_.size());
    for (const Cell& c : cells_) cells.push_back(cell_at(c.lower_left.i + di, c.lower_left.j + dj));
    return CellCollection(std::move(cells));
}

CellCollection CellCollection::with_cell(Cell c) const {
    std::vector<Cell> cells = cells_;
    cells.push_back(c);
    return CellCollection(std::move(cells));
}

CellCollection CellCollection::without_cell(Cell c) const {
    std::vector<Cell> cells;
    cells.reserve(cells_.size());
    for (const Cell& x : cells_)
        if (x != c) cells.push_back(x);
    return CellCollection(std::move(cells));
}

std::size_t CellCollectionHash::operator()(const CellCollection& p) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    for (const Cell& c : p.cells()) {
        mix(static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.lower_left.i)));
        mix(static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.lower_left.j)));
    }
    return static_cast<std::size_t>(h);
}

CellMask::CellMask(const CellCollection& p) {
    auto box = p.bounding_box();
    if (!box) return;
    min_i_ = box->A.lower_left.i;
    min_j_ = box->A.lower_left.j;
    w_ = box->width();
    h_ = box->height();
    occ_.assign(static_cast<std::size_t>(w_) * h_, 0);
    for (const Cell& c : p.cells())
        occ_[static_cast<std::size_t>(c.lower_left.j - min_j_) * w_ + (c.lower_left.i - min_i_)] =
            1;
    area_.assign(static_cast<std::size_t>(w_ + 1) * (h_ + 1), 0);
    for (int y = 0; y < h_; ++y)
        for (int x = 0; x < w_; ++x)
            area_[static_cast<std::size_t>(y + 1) * (w_ + 1) + (x + 1)] =
                area_[static_cast<std::size_t>(y) * (w_ + 1) + (x + 1)] +
                area_[static_cast<std::size_t>(y + 1) * (w_ + 1) + x] -
                area_[static_cast<std::size_t>(y) * (w_ + 1) + x] +
                occ_[static_cast<std::size_t>(y) * w_ + x];
}

bool CellMask::contains(int i, int j) const {
    int x = i - min_i_, y = j - min_j_;
    if (x < 0 || y < 0 || x >= w_ || y >= h_) return false;
    return occ_[static_cast<std::size_t>(y) * w_ + x] != 0;
}

int CellMask::count_rect(Cell lo, Cell hi) const {
    int x0 = std::max(lo.lower_left.i - min_i_, 0);
    int y0 = std::max(lo.lower_left.j - min_j_, 0);
    int x1 = std::min(hi.lower_left.i - min_i_ + 1, w_);
    int y1 = std::min(hi.lower_left.j - min_j_ + 1, h_);
    if (x0 >= x1 || y0 >= y1) return 0;
    return area_[static_cast<std::size_t>(y1) * (w_ + 1) + x1] -
           area_[static_cast<std::size_t>(y0) * (w_ + 1) + x1] -
           area_[static_cast<std::size_t>(y1) * (w_ + 1) + x0] +
           area_[static_cast<std::size_t>(y0) * (w_ + 1) + x0];
}

bool CellMask::rect_full(Cell lo, Cell hi) const {
    if (!dominated_by(lo.lower_left, hi.lower_left)) return false;
    int xo = lo.lower_left.i - min_i_, yo = lo.lower_left.j - min_j_;
    if (xo < 0 || yo < 0) return false;
    if (hi.lower_left.i - min_i_ >= w_ || hi.lower_left.j - min_j_ >= h_) return false;
    const CellInterval rect{lo, hi};
    return count_rect(lo, hi) == rect.size();
}

std::vector<Point> vertices(const CellCollection& p) {
    std::vector<Point> out;
    out.reserve(p.cells().size() * 4);
    for (const Cell& c : p.cells())
        for (const Point& v : c.corners()) out.push_back(v);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<ProperInterval> inner_intervals(const CellCollection& p) {
    std::vector<ProperInterval> out;
    auto box = p.bounding_box();
    if (!box) return out;
    CellMask mask(p);
    const Point lo = box->A.lower_left;
    const Point hi = box->B.lower_left;
    for (int ai = lo.i; ai <= hi.i; ++ai)
        for (int aj = lo.j; aj <= hi.j; ++aj) {
            if (!mask.contains(ai, aj)) continue;  // the corner cell itself must be in P
            for (int bi = ai + 1; bi <= hi.i + 1; ++bi) {
                // Grow rows upward; stop a column early once a row fails so
                // wider rectangles are not rechecked in vain.
                for (int bj = aj + 1; bj <= hi.j + 1; ++bj) {
                    if (!mask.rect_full(cell_at(ai, aj), cell_at(bi - 1, bj - 1))) break;
                    out.push_back(ProperInterval{Point{ai, aj}, Point{bi, bj}});
                }
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CellInterval> rows(const CellCollection& p) {
    std::vector<Cell> cells = p.cells();
    std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
        return std::pair(a.lower_left.j, a.lower_left.i) < std::pair(b.lower_left.j, b.lower_left.i);
    });
    std::vector<CellInterval> out;
    std::size_t k = 0;
    while (k < cells.size()) {
        std::size_t start = k;
        while (k + 1 < cells.size() && cells[k + 1].lower_left.j == cells[k].lower_left.j &&
               cells[k + 1].lower_left.i == cells[k].lower_left.i + 1)
            ++k;
        out.push_back(CellInterval{cells[start], cells[k]});
        ++k;
    }
    return out;
}

std::vector<CellInterval> columns(const CellCollection& p) {
    std::vector<CellInterval> out;
    const std::vector<Cell>& cells = p.cells();  // already sorted by (i, j)
    std::size_t k = 0;
    while (k < cells.size()) {
        std::size_t start = k;
        while (k + 1 < cells.size() && cells[k + 1].lower_left.i == cells[k].lower_left.i &&
               cells[k + 1].lower_left.j == cells[k].lower_left.j + 1)
            ++k;
        out.push_back(CellInterval{cells[start], cells[k]});
        ++k;
    }
    return out;
}

ConvexityReport is_convex(const CellCollection& p) {
    CellMask mask(p);
    bool row_convex = true, column_convex = true;
    for (const Cell& a : p.cells())
        for (const Cell& b : p.cells()) {
            if (a.lower_left.j == b.lower_left.j && a.lower_left.i < b.lower_left.i &&
                !mask.rect_full(a, b))
                row_convex = false;
            if (a.lower_left.i == b.lower_left.i && a.lower_left.j < b.lower_left.j &&
                !mask.rect_full(a, b))
                column_convex = false;
        }
    return {row_convex, column_convex, row_convex && column_convex};
}

namespace {

template <std::size_t N>
std::vector<CellCollection> components_by_adjacency(const CellCollection& p,
                                                    const std::array<Point, N>& steps) {
    std::vector<CellCollection> out;
    const std::vector<Cell>& cells = p.cells();
    std::vector<char> seen(cells.size(), 0);
    auto index_of = [&cells](Cell c) {
        auto it = std::lower_bound(cells.begin(), cells.end(), c);
        return (it != cells.end() && *it == c) ? static_cast<int>(it - cells.begin()) : -1;
    };
    for (std::size_t s = 0; s < cells.size(); ++s) {
        if (seen[s]) continue;
        std::vector<Cell> comp;
        std::vector<int> stack = {static_cast<int>(s)};
        seen[s] = 1;
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            comp.push_back(cells[cur]);
            for (const Point& d : steps) {
                int n = index_of(cell_at(cells[cur].lower_left.i + d.i,
                                         cells[cur].lower_left.j + d.j));
                if (n >= 0 && !seen[n]) {
                    seen[n] = 1;
                    stack.push_back(n);
                }
            }
        }
        out.emplace_back(std::move(comp));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<CellCollection> connected_components(const CellCollection& p) {
    return components_by_adjacency(p, kEdgeNeighbors);
}

std::vector<CellCollection> weak_components(const CellCollection& p) {
    return components_by_adjacency(p, kVertexNeighbors);
}

bool is_simple(const CellCollection& p) {
    auto box = p.bounding_box();
    if (!box) return true;
    // Pad the bounding box by one ring of cells; the ring is entirely outside
    // P, so the outside region meets the fill seed.
    const int min_i = box->A.lower_left.i - 1, min_j = box->A.lower_left.j - 1;
    const int w = box->width() + 2, h = box->height() + 2;
    CellMask mask(p);
    std::vector<char> seen(static_cast<std::size_t>(w) * h, 0);
    std::vector<std::pair<int, int>> stack = {{0, 0}};
    seen[0] = 1;
    while (!stack.empty()) {
        auto [x, y] = stack.back();
        stack.pop_back();
        for (const Point& d : kEdgeNeighbors) {
            int nx = x + d.i, ny = y + d.j;
            if (nx < 0 || ny < 0 || nx >= w || ny >= h) continue;
            std::size_t id = static_cast<std::size_t>(ny) * w + nx;
            if (seen[id] || mask.contains(min_i + nx, min_j + ny)) continue;
            seen[id] = 1;
            stack.emplace_back(nx, ny);
        }
    }
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            if (!mask.contains(min_i + x, min_j + y) &&
                !seen[static_cast<std::size_t>(y) * w + x])
                return false;
    return true;
}

bool is_thin(const CellCollection& p) {
    for (const Cell& c : p.cells()) {
        int i = c.lower_left.i, j = c.lower_left.j;
        if (p.contains(i + 1, j) && p.contains(i, j + 1) && p.contains(i + 1, j + 1)) return false;
    }
    return true;
}

std::string to_string(ConvexClass c) {
    switch (c) {
        case ConvexClass::ferrers: return "ferrers";
        case ConvexClass::stack: return "stack";
        case ConvexClass::parallelogram: return "parallelogram";
        case ConvexClass::directed_convex: return "directed_convex";
        case ConvexClass::none: return "none";
    }
    return "?";
}

ConvexClass classify_convex(const CellCollection& p) {
    if (p.empty()) throw std::invalid_argument("classify_convex: empty collection");
    if (connected_components(p).size() != 1)
        throw std::invalid_argument("classify_convex: input is not connected");
    if (!is_convex(p).convex) throw std::invalid_argument("classify_convex: input is not convex");
    auto box = *p.bounding_box();
    const Cell a = box.A;                                                    // bottom-left
    const Cell b = box.B;                                                    // top-right
    const Cell c = cell_at(box.A.lower_left.i, box.B.lower_left.j);          // top-left
    const Cell d = cell_at(box.B.lower_left.i, box.A.lower_left.j);          // bottom-right
    const bool ha = p.contains(a), hb = p.contains(b), hc = p.contains(c), hd = p.contains(d);
    const int n = int(ha) + int(hb) + int(hc) + int(hd);
    if (n >= 3) return ConvexClass::ferrers;
    if (n == 2) {
        if ((ha && hb) || (hc && hd)) return ConvexClass::parallelogram;
        return ConvexClass::stack;  // two corners sharing a side of the rectangle
    }
    if (n == 1) return ConvexClass::directed_convex;
    return ConvexClass::none;
}

CellCollection translated_to_origin(const CellCollection& p) {
    auto box = p.bounding_box();
    if (!box) return p;
    return p.translated(1 - box->A.lower_left.i, 1 - box->A.lower_left.j);
}

CellCollection transform(const CellCollection& p, Dihedral t) {
    auto map_point = [t](Point v) -> Point {
        switch (t) {
            case Dihedral::identity: return v;
            case Dihedral::rot90: return {-v.j, v.i};
            case Dihedral::rot180: return {-v.i, -v.j};
            case Dihedral::rot270: return {v.j, -v.i};
            case Dihedral::mirror_x: return {-v.i, v.j};
            case Dihedral::mirror_y: return {v.i, -v.j};
            case Dihedral::transpose: return {v.j, v.i};
            case Dihedral::anti_transpose: return {-v.j, -v.i};
        }
        return v;
    };
    std::vector<Cell> cells;
    cells.reserve(p.cells().size());
    for (const Cell& c : p.cells()) {
        // The image square is spanned by the images of two opposite corners.
        Point u = map_point(c.lower_left);
        Point w = map_point(c.upper_right());
        cells.push_back(cell_at(std::min(u.i, w.i), std::min(u.j, w.j)));
    }
    return translated_to_origin(CellCollection(std::move(cells)));
}

CellCollection canonical(const CellCollection& p) {
    CellCollection best = transform(p, Dihedral::identity);
    for (std::size_t k = 1; k < kDihedralGroup.size(); ++k) {
        CellCollection image = transform(p, kDihedralGroup[k]);
        if (image < best) best = std::move(image);
    }
    return best;
}

std::string canonical_key(const CellCollection& p) { return format_collection(canonical(p)); }

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    CellCollection parse() {
        skip_ws();
        expect('{');
        std::vector<Cell> cells;
        skip_ws();
        if (peek() == '}') {
            ++pos_;
        } else {
            while (true) {
                cells.push_back(parse_cell());
                skip_ws();
                char c = next();
                if (c == '}') break;
                if (c != ',') fail("expected ',' or '}'");
            }
        }
        skip_ws();
        if (pos_ != text_.size()) fail("trailing characters after collection");
        return CellCollection(std::move(cells));
    }

private:
    Cell parse_cell() {
        skip_ws();
        expect('{');
        Point a = parse_point();
        skip_ws();
        expect(',');
        Point b = parse_point();
        skip_ws();
        expect('}');
        if (b.i != a.i + 1 || b.j != a.j + 1)
            fail("cell corners must be of the form (a, a+(1,1))");
        return Cell{a};
    }

    Point parse_point() {
        skip_ws();
        expect('{');
        int i = parse_int();
        skip_ws();
        expect(',');
        int j = parse_int();
        skip_ws();
        expect('}');
        if (i < 0 || j < 0) fail("coordinates must be non-negative");
        return Point{i, j};
    }

    int parse_int() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected a non-negative integer");
        int value = 0;
        auto res = std::from_chars(text_.data() + start, text_.data() + pos_, value);
        if (res.ec != std::errc()) fail("integer out of range");
        return value;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char next() {
        if (pos_ >= text_.size()) fail("unexpected end of input");
        return text_[pos_++];
    }
    void expect(char c) {
        if (next() != c) fail(std::string("expected '") + c + "'");
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("parse error at offset " + std::to_string(pos_) + ": " + msg);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

CellCollection parse_collection(std::string_view text) { return Parser(text).parse(); }

std::string format_collection(const CellCollection& p) {
    std::string out = "{";
    bool first = true;
    for (const Cell& c : p.cells()) {
        if (!first) out += ',';
        first = false;
        out += "{{" + std::to_string(c.lower_left.i) + ',' + std::to_string(c.lower_left.j) +
               "},{" + std::to_string(c.lower_left.i + 1) + ',' +
               std::to_string(c.lower_left.j + 1) + "}}";
    }
    out += '}';
    return out;
}

}  // namespace rookpoly
