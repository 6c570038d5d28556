// Argument-principle zero counting and search, field-grid sampling,
// streamline tracing, and the named identity-verification battery.
#ifndef FOCKFLOW_ANALYSIS_HPP
#define FOCKFLOW_ANALYSIS_HPP

#include <map>

#include "fockflow/flow.hpp"
#include "fockflow/types.hpp"

namespace fockflow {

// Winding number (1/2 pi i) of the closed integral of Psi'/Psi dz, rounded to
// the nearest integer; a rounding defect >= 0.25 raises ill_conditioned_error.
int count_zeros(const StateSpec& s, const Contour& c, const Truncation& t = {});

struct Zero {
  cplx position;
  int multiplicity = 1;
};

// Recursive quadrisection by winding counts, then (multiplicity-aware) Newton
// refinement. Zeros are reported with multiplicities from small-circle windings.
std::vector<Zero> find_zeros(const StateSpec& s, const Region& r,
                             const Truncation& t = {});

// Sample phi, psi, u, v of a flow over a rectangular grid; nodes within guard
// distance of a zero of Psi are masked instead of filled.
FieldGrid sample_field(const FlowSpec& fs, double xmin, double xmax, double ymin,
                       double ymax, int nx, int ny);

// Fixed-step RK4 integration of dz/dt = u + i v from seed; stops early at the
// singularity guard or when the trajectory leaves |z| <= escape_radius.
std::vector<cplx> trace_streamline(const FlowSpec& fs, cplx seed, double step,
                                   int n_steps, double escape_radius = 1e6);

// ---------------------------------------------------------------------------
// Identity-verification battery
// ---------------------------------------------------------------------------

using VerifyParams = std::map<std::string, double>;

// Run one named identity check on its deterministic sample set.
// Registered names:
//   wedge_periodicity, wedge_boundary, strip_closed_form,
//   strip_combined_periodicity, oblique_boundary, cat_velocity_periodicity,
//   cat_zero_lattice, qutrit_derivative_cycle, qutrit_equivariance,
//   q_series_product, q_zero_progression, circulation_strength,
//   boundary_unimodular, boundary_real, normalization_freedom
VerificationReport verify_identity(const std::string& name,
                                   const VerifyParams& params = {});

std::vector<std::string> verify_identity_names();

// The full battery, in registry order.
std::vector<VerificationReport> verify_all(const VerifyParams& params = {});

}  // namespace fockflow

#endif  // FOCKFLOW_ANALYSIS_HPP
