// Complex potential f = pre * Log Psi, conjugate velocity v = pre * Psi'/Psi,
// contour integrals of the velocity, and boundary-condition reports.
#ifndef FOCKFLOW_FLOW_HPP
#define FOCKFLOW_FLOW_HPP

#include <functional>

#include "fockflow/states.hpp"
#include "fockflow/types.hpp"

namespace fockflow {

// f(z) = prefactor * Log Psi(z), principal branch. phi = Re f is the velocity
// potential, psi = Im f the stream function. Multivalued across the cut of
// Log; single-valued checks should go through velocity().
cplx potential(const FlowSpec& fs, cplx z);

// vbar(z) = prefactor * Psi'(z)/Psi(z) = u - i v; single-valued.
cplx velocity(const FlowSpec& fs, cplx z);

// Physical components (u, v) = (Re vbar, -Im vbar).
inline std::pair<double, double> velocity_components(cplx vbar) {
  return {vbar.real(), -vbar.imag()};
}

// Trapezoidal quadrature of an arbitrary integrand f(z) dz along a contour.
cplx integrate_contour(const std::function<cplx(cplx)>& f, const Contour& c);

// Trapezoidal contour integral of vbar dz. Around one enclosed zero of
// multiplicity m this gives -m*Gamma (vortex) or i*m*N (source).
cplx contour_integral_velocity(const FlowSpec& fs, const Contour& c);

// Paper-convention strengths recovered from a contour: Gamma = -Re(I),
// N = Im(I) for the closed integral I of vbar dz around the enclosed zeros.
struct RecoveredStrength {
  double gamma;
  double n_strength;
};
RecoveredStrength recovered_strength(const FlowSpec& fs, const Contour& c);

// Boundary-condition defect along a sampled curve: max ||Psi|-1| for vortex
// reps, max |Im Psi| for source reps (Prop 3 conditions).
VerificationReport check_boundary(const FlowSpec& fs, const std::vector<cplx>& curve,
                                  double tolerance = 1e-10);

// Same check against an arbitrary wave function (closed forms, wedge/strip
// constructions) rather than a StateSpec.
VerificationReport check_boundary(FlowRep::Kind kind,
                                  const std::function<cplx(cplx)>& psi,
                                  const std::vector<cplx>& curve,
                                  double tolerance = 1e-10,
                                  const std::string& name = "boundary");

}  // namespace fockflow

#endif  // FOCKFLOW_FLOW_HPP
