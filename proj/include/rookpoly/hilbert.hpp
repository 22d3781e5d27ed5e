#pragma once

#include "rookpoly/algebra.hpp"
#include "rookpoly/grid.hpp"
#include "rookpoly/polynomial.hpp"

namespace rookpoly {

// Numerator N(t) of the Hilbert-Poincare series HP_{S/I}(t) = N(t)/(1-t)^n
// of a quotient by a monomial ideal, computed by pivoting on a variable x:
// HP(S/I) = HP(S/(I,x)) + t HP(S/(I:x)). N is independent of the number of
// ambient variables; n_vars is only validated against the ideal's support.
IntPolynomial numerator(const MonomialIdeal& ideal, int n_vars);

struct SeriesResult {
    IntPolynomial numerator;  // over n = |V(P)| variables
    IntPolynomial h_poly;     // h(1) != 0
    int krull_dim = 0;        // HP = h / (1-t)^krull_dim
};

// Hilbert data of the coordinate ring of P: the initial ideal of the
// inner-2-minor ideal is computed (full Groebner basis when the generators
// are not one already), its numerator taken, and the (1-t) factors cancelled.
SeriesResult h_polynomial(const CellCollection& p, TermOrder order);
SeriesResult h_polynomial(const CellCollection& p);  // rev

struct RegularityReport {
    int value = 0;            // deg h
    bool cm_certified = false;  // simple collections are Cohen-Macaulay, so
                                // the value is the regularity there
};
RegularityReport candidate_regularity(const CellCollection& p);

// For simple P: the Krull dimension from the series equals |V(P)| - |P|.
bool dimension_check(const CellCollection& p);

}  // namespace rookpoly
