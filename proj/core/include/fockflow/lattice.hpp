// Analytic tails of symmetric lattice sums, via Euler-Maclaurin Hurwitz-zeta
// tail expansions. Used by the strip/oblique image constructions.
#ifndef FOCKFLOW_LATTICE_HPP
#define FOCKFLOW_LATTICE_HPP

#include "fockflow/types.hpp"

namespace fockflow::lattice {

// sum_{n=M+1}^infty n^{-s} for even integer s >= 2.
double zeta_tail(int s, int M);

// sum_{n>M} ln(1 + c/n^2); requires |c| < (M+1)^2.
cplx log_tail(cplx c, int M);

// sum_{n>M} 1/(n^2 - b2) = sum_j b2^j zeta_tail(2j+2, M).
cplx inv_square_tail(cplx b2, int M);

// sum_{n>M} ln(4n^2/(4n^2-1)): the Wallis constant tail of the odd-shift pairs.
double wallis_tail(int M);

}  // namespace fockflow::lattice

#endif  // FOCKFLOW_LATTICE_HPP
