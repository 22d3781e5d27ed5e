#include "oracles.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace rookpoly::oracle {

std::vector<ProperInterval> inner_intervals(const CellCollection& p) {
    std::vector<ProperInterval> out;
    auto box = p.bounding_box();
    if (!box) return out;
    auto has_cell = [&p](int i, int j) {
        for (const Cell& c : p.cells())
            if (c.lower_left.i == i && c.lower_left.j == j) return true;
        return false;
    };
    const Point lo = box->A.lower_left;
    const Point hi = box->B.upper_right();
    for (int ai = lo.i; ai <= hi.i; ++ai)
        for (int aj = lo.j; aj <= hi.j; ++aj)
            for (int bi = ai + 1; bi <= hi.i; ++bi)
                for (int bj = aj + 1; bj <= hi.j; ++bj) {
                    bool inner = true;
                    for (int i = ai; i < bi && inner; ++i)
                        for (int j = aj; j < bj && inner; ++j)
                            if (!has_cell(i, j)) inner = false;
                    if (inner) out.push_back(ProperInterval{{ai, aj}, {bi, bj}});
                }
    std::sort(out.begin(), out.end());
    return out;
}

bool attacks(const Cell& a, const Cell& b, const CellCollection& p) {
    for (const CellInterval& r : rows(p))
        if (r.contains(a) && r.contains(b)) return true;
    for (const CellInterval& c : columns(p))
        if (c.contains(a) && c.contains(b)) return true;
    return false;
}

std::vector<std::vector<RookConfig>> rook_levels(const CellCollection& p) {
    const std::vector<Cell>& cells = p.cells();
    if (cells.size() > 20) throw std::invalid_argument("oracle::rook_levels: too many cells");
    std::vector<std::vector<RookConfig>> levels;
    for (std::uint32_t mask = 1; mask < (1u << cells.size()); ++mask) {
        RookConfig cfg;
        for (std::size_t k = 0; k < cells.size(); ++k)
            if (mask & (1u << k)) cfg.rooks.push_back(cells[k]);
        bool ok = true;
        for (std::size_t x = 0; x < cfg.rooks.size() && ok; ++x)
            for (std::size_t y = x + 1; y < cfg.rooks.size() && ok; ++y)
                if (oracle::attacks(cfg.rooks[x], cfg.rooks[y], p)) ok = false;
        if (!ok) continue;
        if (levels.size() < cfg.rooks.size()) levels.resize(cfg.rooks.size());
        levels[cfg.rooks.size() - 1].push_back(std::move(cfg));
    }
    for (auto& level : levels) std::sort(level.begin(), level.end());
    return levels;
}

namespace {

// One-switch reachability decided from the symmetric difference of the two
// configurations.
bool one_switch_apart(const RookConfig& f, const RookConfig& g, const CellCollection& p) {
    std::vector<Cell> only_f, only_g;
    std::set_difference(f.rooks.begin(), f.rooks.end(), g.rooks.begin(), g.rooks.end(),
                        std::back_inserter(only_f));
    std::set_difference(g.rooks.begin(), g.rooks.end(), f.rooks.begin(), f.rooks.end(),
                        std::back_inserter(only_g));
    if (only_f.size() != 2 || only_g.size() != 2) return false;
    const Point a = only_f[0].lower_left, b = only_f[1].lower_left;
    const Point c = only_g[0].lower_left, d = only_g[1].lower_left;
    if (a.i == b.i || a.j == b.j) return false;
    // The leaving and the entering pair must occupy the four corner cells of
    // one inner interval.
    std::set<Point> corners = {a, b, c, d};
    std::set<Point> expected = {a, b, Point{a.i, b.j}, Point{b.i, a.j}};
    if (corners != expected) return false;
    for (int i = std::min(a.i, b.i); i <= std::max(a.i, b.i); ++i)
        for (int j = std::min(a.j, b.j); j <= std::max(a.j, b.j); ++j)
            if (!p.contains(i, j)) return false;
    return true;
}

}  // namespace

std::vector<int> switch_class_counts(const CellCollection& p) {
    std::vector<int> counts = {1};
    for (const auto& level : rook_levels(p)) {
        std::vector<char> seen(level.size(), 0);
        int classes = 0;
        for (std::size_t s = 0; s < level.size(); ++s) {
            if (seen[s]) continue;
            ++classes;
            std::vector<std::size_t> stack = {s};
            seen[s] = 1;
            while (!stack.empty()) {
                std::size_t cur = stack.back();
                stack.pop_back();
                for (std::size_t o = 0; o < level.size(); ++o)
                    if (!seen[o] && one_switch_apart(level[cur], level[o], p)) {
                        seen[o] = 1;
                        stack.push_back(o);
                    }
            }
        }
        counts.push_back(classes);
    }
    return counts;
}

namespace {

void count_monomials(const MonomialIdeal& ideal, int n_vars, int degree, int var,
                     std::vector<std::pair<int, int>>& exps, long long& count) {
    if (degree == 0 || var == n_vars) {
        if (degree != 0) return;
        if (!ideal.contains(Monomial(exps))) ++count;
        return;
    }
    for (int e = 0; e <= degree; ++e) {
        if (e > 0) exps.emplace_back(var, e);
        count_monomials(ideal, n_vars, degree - e, var + 1, exps, count);
        if (e > 0) exps.pop_back();
    }
}

}  // namespace

long long standard_monomial_count(const MonomialIdeal& ideal, int n_vars, int degree) {
    std::vector<std::pair<int, int>> exps;
    long long count = 0;
    count_monomials(ideal, n_vars, degree, 0, exps, count);
    return count;
}

BigInt series_coefficient(const IntPolynomial& h, int dim, int k) {
    BigInt out = 0;
    for (int j = 0; j <= std::min(k, h.degree()); ++j) {
        if (dim == 0) {
            if (j == k) out += h.coeff(j);
            continue;
        }
        // C(dim - 1 + k - j, k - j)
        BigInt binom = 1;
        for (int x = 0; x < k - j; ++x) binom = binom * (dim + x) / (x + 1);
        out += h.coeff(j) * binom;
    }
    return out;
}

}  // namespace rookpoly::oracle
