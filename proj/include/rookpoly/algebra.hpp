#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rookpoly/grid.hpp"

namespace rookpoly {

// Monomial orders on the polynomial ring K[x_v : v in V(P)]. Both are induced
// by the total order on the variables x_a > x_b iff a.i > b.i, or a.i == b.i
// and a.j > b.j. Under rev (degree reverse lexicographic) the initial term of
// an inner 2-minor is the anti-diagonal product; under lex it is the diagonal
// product.
enum class TermOrder { rev, lex };
std::string to_string(TermOrder o);
TermOrder parse_term_order(std::string_view s);

// Maps the vertices of a collection to variable indices; index 0 is the
// largest variable.
class VariableTable {
public:
    explicit VariableTable(const CellCollection& p);

    int size() const { return static_cast<int>(points_.size()); }
    int index_of(Point v) const;  // throws when v is not a vertex
    Point point_of(int index) const { return points_[static_cast<std::size_t>(index)]; }

private:
    std::vector<Point> points_;  // sorted so that position = rank in the order
};

// Sparse exponent vector over variable indices, kept sorted by index.
class Monomial {
public:
    Monomial() = default;  // the monomial 1
    static Monomial variable(int v) { return Monomial({{v, 1}}); }
    explicit Monomial(std::vector<std::pair<int, int>> exps);

    int degree() const;
    bool is_one() const { return exps_.empty(); }
    int exponent(int v) const;
    const std::vector<std::pair<int, int>>& exponents() const { return exps_; }

    Monomial times(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    Monomial divided_by(const Monomial& o) const;  // requires o | *this
    static Monomial lcm(const Monomial& a, const Monomial& b);
    bool coprime_with(const Monomial& o) const;
    bool contains_var(int v) const { return exponent(v) > 0; }
    // Removes one power of v; requires v to occur.
    Monomial without_one(int v) const;

    std::string str(const VariableTable& vars) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<std::pair<int, int>> exps_;
};

// compare(a, b, o) > 0 iff a > b under o.
std::strong_ordering compare(const Monomial& a, const Monomial& b, TermOrder o);

// Pure difference binomial lead - trail with lead > trail under the order it
// was built with.
struct Binomial {
    Monomial lead;
    Monomial trail;
    friend bool operator==(const Binomial&, const Binomial&) = default;
};

// Orients u - v; nullopt when u == v.
std::optional<Binomial> make_binomial(Monomial u, Monomial v, TermOrder order);

// The inner 2-minors of P: one binomial x_a x_b - x_c x_d per inner interval
// [a,b] with anti-diagonal corners c, d, oriented under the given order.
std::vector<Binomial> generators(const CellCollection& p, TermOrder order,
                                 const VariableTable& vars);
std::vector<Binomial> generators(const CellCollection& p, TermOrder order);

// Reduced Groebner basis of the ideal generated by pure difference binomials:
// no lead divides another element's lead or trail, every element is fully
// reduced, and the result is deterministic for a fixed order. S-polynomials
// and reductions of pure difference binomials stay in that class, so the
// whole computation is combinatorial.
std::vector<Binomial> buchberger(std::vector<Binomial> gens, TermOrder order);

// Condition (#): the inner 2-minors already form a reduced Groebner basis
// under rev, decided by the Buchberger criterion (every S-pair of generators
// reduces to zero modulo the generators). Condition (#') is the same under
// lex.
bool satisfies_sharp(const CellCollection& p);
bool satisfies_sharp_prime(const CellCollection& p);

// Minimal monomial generating set: no generator divides another.
struct MonomialIdeal {
    std::vector<Monomial> gens;

    static MonomialIdeal minimal(std::vector<Monomial> gens);
    bool contains(const Monomial& m) const;  // divisibility by some generator
    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;
};

// Minimal generators of the initial ideal of the inner-2-minor ideal,
// obtained from the reduced Groebner basis leads.
MonomialIdeal initial_ideal(const CellCollection& p, TermOrder order);

}  // namespace rookpoly
