#pragma once

#include <vector>

#include "rookpoly/grid.hpp"
#include "rookpoly/polynomial.hpp"
#include "rookpoly/rook.hpp"

namespace rookpoly {

// Two rooks of a configuration are in switching position when they occupy the
// diagonal (or anti-diagonal) corner cells of an inner interval of P; a
// switch moves them to the opposite pair of corner cells. Returns every
// configuration reachable from F by a single switch, sorted.
std::vector<RookConfig> single_switches(const RookConfig& f, const CellCollection& p);

// Coefficient k counts the switch-equivalence classes of k-rook
// configurations: the connected components of the graph on level k whose
// edges are single switches. The constant term is 1 and the degree equals
// the rook number.
IntPolynomial switching_rook_polynomial(const CellCollection& p);

struct SwitchReport {
    IntPolynomial switching_polynomial;
    int rook_number = 0;
};
SwitchReport switching_rook_number_report(const CellCollection& p);

}  // namespace rookpoly
