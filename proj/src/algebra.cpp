#include "rookpoly/algebra.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "rookpoly/deadline.hpp"

namespace rookpoly {

std::string to_string(TermOrder o) { return o == TermOrder::rev ? "rev" : "lex"; }

TermOrder parse_term_order(std::string_view s) {
    if (s == "rev") return TermOrder::rev;
    if (s == "lex") return TermOrder::lex;
    throw std::invalid_argument("unknown term order: " + std::string(s));
}

VariableTable::VariableTable(const CellCollection& p) : points_(vertices(p)) {
    // Largest variable first: higher column, then higher row.
    std::sort(points_.begin(), points_.end(), [](Point a, Point b) {
        return std::pair(a.i, a.j) > std::pair(b.i, b.j);
    });
}

int VariableTable::index_of(Point v) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), v, [](Point a, Point b) {
        return std::pair(a.i, a.j) > std::pair(b.i, b.j);
    });
    if (it == points_.end() || *it != v)
        throw std::invalid_argument("VariableTable: point is not a vertex of the collection");
    return static_cast<int>(it - points_.begin());
}

Monomial::Monomial(std::vector<std::pair<int, int>> exps) : exps_(std::move(exps)) {
    std::sort(exps_.begin(), exps_.end());
    std::size_t out = 0;
    for (std::size_t k = 0; k < exps_.size(); ++k) {
        if (exps_[k].second == 0) continue;
        if (out > 0 && exps_[out - 1].first == exps_[k].first)
            exps_[out - 1].second += exps_[k].second;
        else
            exps_[out++] = exps_[k];
    }
    exps_.resize(out);
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& [v, e] : exps_) d += e;
    return d;
}

int Monomial::exponent(int v) const {
    auto it = std::lower_bound(exps_.begin(), exps_.end(), std::pair(v, 0));
    return (it != exps_.end() && it->first == v) ? it->second : 0;
}

Monomial Monomial::times(const Monomial& o) const {
    std::vector<std::pair<int, int>> out;
    out.reserve(exps_.size() + o.exps_.size());
    std::size_t a = 0, b = 0;
    while (a < exps_.size() || b < o.exps_.size()) {
        if (b == o.exps_.size() || (a < exps_.size() && exps_[a].first < o.exps_[b].first))
            out.push_back(exps_[a++]);
        else if (a == exps_.size() || o.exps_[b].first < exps_[a].first)
            out.push_back(o.exps_[b++]);
        else {
            out.emplace_back(exps_[a].first, exps_[a].second + o.exps_[b].second);
            ++a;
            ++b;
        }
    }
    Monomial m;
    m.exps_ = std::move(out);
    return m;
}

bool Monomial::divides(const Monomial& o) const {
    std::size_t b = 0;
    for (const auto& [v, e] : exps_) {
        while (b < o.exps_.size() && o.exps_[b].first < v) ++b;
        if (b == o.exps_.size() || o.exps_[b].first != v || o.exps_[b].second < e) return false;
    }
    return true;
}

Monomial Monomial::divided_by(const Monomial& o) const {
    std::vector<std::pair<int, int>> out;
    out.reserve(exps_.size());
    std::size_t b = 0;
    for (const auto& [v, e] : exps_) {
        int sub = 0;
        while (b < o.exps_.size() && o.exps_[b].first < v) ++b;
        if (b < o.exps_.size() && o.exps_[b].first == v) sub = o.exps_[b].second;
        if (e < sub) throw std::invalid_argument("Monomial::divided_by: not divisible");
        if (e > sub) out.emplace_back(v, e - sub);
    }
    Monomial m;
    m.exps_ = std::move(out);
    return m;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    std::vector<std::pair<int, int>> out;
    out.reserve(a.exps_.size() + b.exps_.size());
    std::size_t x = 0, y = 0;
    while (x < a.exps_.size() || y < b.exps_.size()) {
        if (y == b.exps_.size() || (x < a.exps_.size() && a.exps_[x].first < b.exps_[y].first))
            out.push_back(a.exps_[x++]);
        else if (x == a.exps_.size() || b.exps_[y].first < a.exps_[x].first)
            out.push_back(b.exps_[y++]);
        else {
            out.emplace_back(a.exps_[x].first, std::max(a.exps_[x].second, b.exps_[y].second));
            ++x;
            ++y;
        }
    }
    Monomial m;
    m.exps_ = std::move(out);
    return m;
}

bool Monomial::coprime_with(const Monomial& o) const {
    std::size_t a = 0, b = 0;
    while (a < exps_.size() && b < o.exps_.size()) {
        if (exps_[a].first < o.exps_[b].first)
            ++a;
        else if (o.exps_[b].first < exps_[a].first)
            ++b;
        else
            return false;
    }
    return true;
}

Monomial Monomial::without_one(int v) const {
    std::vector<std::pair<int, int>> out = exps_;
    for (auto& [var, e] : out)
        if (var == v) {
            --e;
            Monomial m;
            m.exps_ = std::move(out);
            if (e == 0) {
                m.exps_.erase(std::remove_if(m.exps_.begin(), m.exps_.end(),
                                             [](const auto& p) { return p.second == 0; }),
                              m.exps_.end());
            }
            return m;
        }
    throw std::invalid_argument("Monomial::without_one: variable does not occur");
}

std::string Monomial::str(const VariableTable& vars) const {
    if (exps_.empty()) return "1";
    std::string out;
    for (const auto& [v, e] : exps_) {
        if (!out.empty()) out += "*";
        Point pt = vars.point_of(v);
        out += "x(" + std::to_string(pt.i) + "," + std::to_string(pt.j) + ")";
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

std::strong_ordering compare(const Monomial& a, const Monomial& b, TermOrder o) {
    if (a == b) return std::strong_ordering::equal;
    if (o == TermOrder::lex) {
        // First (largest) variable with differing exponents decides; more of
        // it means larger.
        const auto& ea = a.exponents();
        const auto& eb = b.exponents();
        std::size_t x = 0, y = 0;
        while (x < ea.size() || y < eb.size()) {
            if (y == eb.size() || (x < ea.size() && ea[x].first < eb[y].first))
                return std::strong_ordering::greater;
            if (x == ea.size() || eb[y].first < ea[x].first) return std::strong_ordering::less;
            if (ea[x].second != eb[y].second)
                return ea[x].second > eb[y].second ? std::strong_ordering::greater
                                                   : std::strong_ordering::less;
            ++x;
            ++y;
        }
        return std::strong_ordering::equal;
    }
    // Degree reverse lexicographic: compare degrees, then the smallest
    // variable with differing exponents decides with the sense reversed
    // (less of it means larger).
    const int da = a.degree(), db = b.degree();
    if (da != db) return da > db ? std::strong_ordering::greater : std::strong_ordering::less;
    const auto& ea = a.exponents();
    const auto& eb = b.exponents();
    std::size_t x = ea.size(), y = eb.size();
    while (x > 0 || y > 0) {
        if (y == 0 || (x > 0 && ea[x - 1].first > eb[y - 1].first))
            return std::strong_ordering::less;  // a has the smaller variable
        if (x == 0 || eb[y - 1].first > ea[x - 1].first) return std::strong_ordering::greater;
        if (ea[x - 1].second != eb[y - 1].second)
            return ea[x - 1].second < eb[y - 1].second ? std::strong_ordering::greater
                                                       : std::strong_ordering::less;
        --x;
        --y;
    }
    return std::strong_ordering::equal;
}

std::optional<Binomial> make_binomial(Monomial u, Monomial v, TermOrder order) {
    auto c = compare(u, v, order);
    if (c == std::strong_ordering::equal) return std::nullopt;
    if (c == std::strong_ordering::less) std::swap(u, v);
    return Binomial{std::move(u), std::move(v)};
}

std::vector<Binomial> generators(const CellCollection& p, TermOrder order,
                                 const VariableTable& vars) {
    std::vector<Binomial> out;
    for (const ProperInterval& iv : inner_intervals(p)) {
        Monomial diag = Monomial::variable(vars.index_of(iv.a))
                            .times(Monomial::variable(vars.index_of(iv.b)));
        Monomial anti = Monomial::variable(vars.index_of(iv.upper_left()))
                            .times(Monomial::variable(vars.index_of(iv.lower_right())));
        auto b = make_binomial(std::move(diag), std::move(anti), order);
        if (!b) throw std::logic_error("generators: degenerate inner 2-minor");
        out.push_back(std::move(*b));
    }
    return out;
}

std::vector<Binomial> generators(const CellCollection& p, TermOrder order) {
    VariableTable vars(p);
    return generators(p, order, vars);
}

namespace {

// Replaces the given term by its image modulo g (one reduction step):
// m -> (m / g.lead) * g.trail.
Monomial rewrite(const Monomial& m, const Binomial& g) {
    return m.divided_by(g.lead).times(g.trail);
}

const Binomial* find_reducer(const Monomial& m, const std::vector<Binomial>& basis,
                             const Binomial* skip = nullptr) {
    for (const Binomial& g : basis) {
        if (&g == skip) continue;
        if (g.lead.divides(m)) return &g;
    }
    return nullptr;
}

// Normal form of the pure difference u - v (u > v) under top reduction by
// the basis; nullopt when it reduces to zero.
std::optional<Binomial> top_reduce(Monomial u, Monomial v, const std::vector<Binomial>& basis,
                                   TermOrder order) {
    while (true) {
        const Binomial* g = find_reducer(u, basis);
        if (!g) return Binomial{std::move(u), std::move(v)};
        u = rewrite(u, *g);
        auto c = compare(u, v, order);
        if (c == std::strong_ordering::equal) return std::nullopt;
        if (c == std::strong_ordering::less) std::swap(u, v);
    }
}

std::optional<Binomial> s_binomial(const Binomial& f, const Binomial& g, TermOrder order) {
    Monomial l = Monomial::lcm(f.lead, g.lead);
    Monomial a = l.divided_by(f.lead).times(f.trail);
    Monomial b = l.divided_by(g.lead).times(g.trail);
    return make_binomial(std::move(a), std::move(b), order);
}

struct PairKey {
    int lcm_degree;
    Monomial lcm;
    std::size_t i, j;
};

struct PairKeyLess {
    TermOrder order;
    bool operator()(const PairKey& a, const PairKey& b) const {
        if (a.lcm_degree != b.lcm_degree) return a.lcm_degree < b.lcm_degree;
        auto c = compare(a.lcm, b.lcm, order);
        if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
        return std::pair(a.i, a.j) < std::pair(b.i, b.j);
    }
};

}  // namespace

std::vector<Binomial> buchberger(std::vector<Binomial> gens, TermOrder order) {
    // Re-orient and drop duplicates up front.
    std::vector<Binomial> basis;
    for (Binomial& g : gens) {
        auto b = make_binomial(std::move(g.lead), std::move(g.trail), order);
        if (b && std::find(basis.begin(), basis.end(), *b) == basis.end())
            basis.push_back(std::move(*b));
    }

    // Normal selection: pairs by increasing lcm degree, ties by the lcm under
    // the active order.
    std::set<PairKey, PairKeyLess> pairs{PairKeyLess{order}};
    auto queue_pair = [&](std::size_t i, std::size_t j) {
        if (basis[i].lead.coprime_with(basis[j].lead)) return;  // S-pair reduces to zero
        Monomial l = Monomial::lcm(basis[i].lead, basis[j].lead);
        pairs.insert(PairKey{l.degree(), std::move(l), i, j});
    };
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) queue_pair(i, j);

    while (!pairs.empty()) {
        detail::poll_deadline();
        PairKey key = *pairs.begin();
        pairs.erase(pairs.begin());
        auto s = s_binomial(basis[key.i], basis[key.j], order);
        if (!s) continue;
        auto r = top_reduce(std::move(s->lead), std::move(s->trail), basis, order);
        if (!r) continue;
        basis.push_back(std::move(*r));
        for (std::size_t i = 0; i + 1 < basis.size(); ++i) queue_pair(i, basis.size() - 1);
    }

    // Minimalize: keep one element per minimal lead.
    std::vector<Binomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            if (basis[j].lead.divides(basis[i].lead) &&
                !(basis[i].lead == basis[j].lead && i < j))
                redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // Tail reduction makes the basis reduced (and unique for the order).
    for (Binomial& f : minimal) {
        while (const Binomial* g = find_reducer(f.trail, minimal, &f)) f.trail = rewrite(f.trail, *g);
    }

    std::sort(minimal.begin(), minimal.end(), [order](const Binomial& a, const Binomial& b) {
        auto c = compare(a.lead, b.lead, order);
        if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
        return compare(a.trail, b.trail, order) == std::strong_ordering::less;
    });
    return minimal;
}

namespace {

bool generators_are_groebner(const CellCollection& p, TermOrder order) {
    std::vector<Binomial> gens = generators(p, order);
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            detail::poll_deadline();
            if (gens[i].lead.coprime_with(gens[j].lead)) continue;
            auto s = s_binomial(gens[i], gens[j], order);
            if (!s) continue;
            if (top_reduce(std::move(s->lead), std::move(s->trail), gens, order)) return false;
        }
    return true;
}

}  // namespace

bool satisfies_sharp(const CellCollection& p) {
    return generators_are_groebner(p, TermOrder::rev);
}

bool satisfies_sharp_prime(const CellCollection& p) {
    return generators_are_groebner(p, TermOrder::lex);
}

MonomialIdeal MonomialIdeal::minimal(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.exponents() < b.exponents();
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    MonomialIdeal ideal;
    for (Monomial& m : gens)
        if (!ideal.contains(m)) ideal.gens.push_back(std::move(m));
    return ideal;
}

bool MonomialIdeal::contains(const Monomial& m) const {
    for (const Monomial& g : gens)
        if (g.divides(m)) return true;
    return false;
}

MonomialIdeal initial_ideal(const CellCollection& p, TermOrder order) {
    std::vector<Monomial> leads;
    for (Binomial& g : buchberger(generators(p, order), order)) leads.push_back(std::move(g.lead));
    return MonomialIdeal::minimal(std::move(leads));
}

}  // namespace rookpoly
