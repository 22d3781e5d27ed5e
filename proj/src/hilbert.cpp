#include "rookpoly/hilbert.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "rookpoly/deadline.hpp"

namespace rookpoly {

namespace {

std::string serialize(const std::vector<Monomial>& gens) {
    std::string key;
    for (const Monomial& m : gens) {
        for (const auto& [v, e] : m.exponents()) {
            key += std::to_string(v);
            key += '^';
            key += std::to_string(e);
            key += ' ';
        }
        key += ';';
    }
    return key;
}

class NumeratorEngine {
public:
    IntPolynomial run(std::vector<Monomial> gens) {
        detail::poll_deadline();
        if (gens.empty()) return IntPolynomial::one();
        for (const Monomial& m : gens)
            if (m.is_one()) return IntPolynomial{};

        // A complete intersection of monomials: N = prod (1 - t^deg).
        bool pairwise_coprime = true;
        for (std::size_t i = 0; i + 1 < gens.size() && pairwise_coprime; ++i)
            for (std::size_t j = i + 1; j < gens.size(); ++j)
                if (!gens[i].coprime_with(gens[j])) {
                    pairwise_coprime = false;
                    break;
                }
        if (pairwise_coprime) {
            IntPolynomial n = IntPolynomial::one();
            for (const Monomial& m : gens) {
                n = n * (IntPolynomial::one() - IntPolynomial::t_power(m.degree()));
            }
            return n;
        }

        std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
            return a.exponents() < b.exponents();
        });
        const std::string key = serialize(gens);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        // Pivot on the most frequent variable; ties go to the largest
        // variable in the order (smallest index).
        std::map<int, int> occurrences;
        for (const Monomial& m : gens)
            for (const auto& [v, e] : m.exponents()) ++occurrences[v];
        int pivot = -1, best = 0;
        for (const auto& [v, count] : occurrences)
            if (count > best) {
                pivot = v;
                best = count;
            }

        // (I, x): x plus the generators x does not divide.
        std::vector<Monomial> plus_gens = {Monomial::variable(pivot)};
        for (const Monomial& m : gens)
            if (!m.contains_var(pivot)) plus_gens.push_back(m);

        // (I : x): strip one power of x where present, then re-minimalize.
        std::vector<Monomial> colon_gens;
        colon_gens.reserve(gens.size());
        for (const Monomial& m : gens)
            colon_gens.push_back(m.contains_var(pivot) ? m.without_one(pivot) : m);

        IntPolynomial result = run(MonomialIdeal::minimal(std::move(plus_gens)).gens) +
                               run(MonomialIdeal::minimal(std::move(colon_gens)).gens).shifted(1);
        memo_.emplace(key, result);
        return result;
    }

private:
    std::unordered_map<std::string, IntPolynomial> memo_;
};

}  // namespace

IntPolynomial numerator(const MonomialIdeal& ideal, int n_vars) {
    for (const Monomial& m : ideal.gens)
        for (const auto& [v, e] : m.exponents())
            if (v >= n_vars)
                throw std::invalid_argument("numerator: variable index beyond n_vars");
    NumeratorEngine engine;
    return engine.run(ideal.gens);
}

SeriesResult h_polynomial(const CellCollection& p, TermOrder order) {
    const int n = static_cast<int>(vertices(p).size());
    SeriesResult out;
    out.numerator = numerator(initial_ideal(p, order), n);
    out.h_poly = out.numerator;
    int cancelled = 0;
    while (!out.h_poly.is_zero() && out.h_poly(1) == 0) {
        out.h_poly = out.h_poly.divided_by_one_minus_t();
        ++cancelled;
    }
    if (out.h_poly.is_zero()) throw std::logic_error("h_polynomial: zero series numerator");
    out.krull_dim = n - cancelled;
    return out;
}

SeriesResult h_polynomial(const CellCollection& p) { return h_polynomial(p, TermOrder::rev); }

RegularityReport candidate_regularity(const CellCollection& p) {
    return {h_polynomial(p).h_poly.degree(), is_simple(p)};
}

bool dimension_check(const CellCollection& p) {
    if (!is_simple(p)) throw std::invalid_argument("dimension_check: collection is not simple");
    const int n = static_cast<int>(vertices(p).size());
    return h_polynomial(p).krull_dim == n - p.rank();
}

}  // namespace rookpoly
