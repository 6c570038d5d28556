// Evaluation of holomorphic Fock-Bargmann wave functions Psi(z) and their
// z-derivatives for every state family, plus the coherent-state inner product.
#ifndef FOCKFLOW_STATES_HPP
#define FOCKFLOW_STATES_HPP

#include <array>
#include <utility>

#include "fockflow/types.hpp"

namespace fockflow {

// Psi(z). Closed forms where the family has one, truncated series otherwise.
cplx eval_state(const StateSpec& s, cplx z, const Truncation& t = {});

// Psi'(z), closed form or term-wise differentiated series.
cplx eval_state_derivative(const StateSpec& s, cplx z, const Truncation& t = {});

// Schwarz conjugate evaluation: conj(Psi(conj(w))).
cplx eval_state_schwarz(const StateSpec& s, cplx w, const Truncation& t = {});
cplx eval_state_schwarz_derivative(const StateSpec& s, cplx w, const Truncation& t = {});

// <beta|alpha> = exp(conj(beta) * alpha); the diagonal is the norm e^{|alpha|^2}.
cplx inner_product_coherent(cplx beta, cplx alpha);

// Even/odd projections of e^{alpha z}: (cosh(alpha z), sinh(alpha z)).
std::pair<cplx, cplx> cat_components(cplx alpha, cplx z);

// The three omega = e^{2 pi i/3} projections of e^{alpha z}.
std::array<cplx, 3> qutrit_components(cplx alpha, cplx z);

// ---------------------------------------------------------------------------
// Point structure: the zero multiset and exponential slope of a state, for
// the image-lattice constructions. Psi(z) = c * e^{slope*z} * prod (z-a_j)^m_j
// for the families that admit this form (Fock, Coherent, Displaced,
// finite Coefficients). Other families throw domain_error.
// ---------------------------------------------------------------------------

struct PointStructure {
  std::vector<std::pair<cplx, int>> zeros;  // (position, multiplicity)
  cplx slope;                               // alpha of an e^{alpha z} factor
};

PointStructure point_structure(const StateSpec& s);

// Multiplicity of the state's zero at the origin (0 if Psi(0) != 0).
int anchor_multiplicity(const StateSpec& s);

}  // namespace fockflow

#endif  // FOCKFLOW_STATES_HPP
