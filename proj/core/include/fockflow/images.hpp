// Method-of-images constructions: wedge kaleidoscope, strip and oblique-strip
// lattices, cat-state lattices, and q-geometric image sets.
#ifndef FOCKFLOW_IMAGES_HPP
#define FOCKFLOW_IMAGES_HPP

#include "fockflow/flow.hpp"
#include "fockflow/types.hpp"

namespace fockflow {

// Wedge flow of opening angle pi/n:
//   F(z) = sum_k f(w^k z) + sum_k conj(f(conj(w^k z))),  w = e^{2 pi i/n}.
// Rotation invariant: F(w z) = F(z).
cplx wedge_flow(const FlowSpec& base, int n, cplx z);

// Wedge wave function (Thm-2 style): the vortex form is the ratio product
// prod Psi(w^k z)/PsiBar(w^k z), the source form the plain product
// prod Psi(w^k z)*PsiBar(w^k z), PsiBar the Schwarz conjugate.
cplx wedge_wavefunction(const StateSpec& s, const FlowRep& rep, int n, cplx z,
                        const Truncation& t = {});

// Strip wave function of width h as a symmetric truncated lattice product.
// Factor pairs are normalized by their value at the lattice anchor z = 0 and
// the product carries the lattice-density prefactor (pi/2h)^m (vortex) or
// (pi/h)^m (source) for a base zero of multiplicity m at the origin, so the
// point-vortex/point-source cases converge to tanh(pi z/2h) and sinh(pi z/h)
// with O(1/M^2) (vortex) truncation error and constant exactly 1.
cplx strip_wavefunction(const StateSpec& s, const FlowRep& rep, double h, cplx z,
                        int M, const Truncation& t = {});

// Velocity of the strip image system of a point singularity at base_zero:
// images at base_zero + 2nih, Schwarz images at conj(base_zero) + (2n-1)ih.
// with_tail adds the analytic Hurwitz-zeta tail of the paired sum (accuracy
// ~1e-15 at any M >= ~50); without it the paired partial sums converge O(1/M).
cplx strip_velocity(cplx base_zero, const FlowRep& rep, double h, cplx z, int M,
                    bool with_tail = true);

// Oblique strip: complex potential of the image sum
//   F_beta(z) = sum f(z + 2n i h e^{i beta}) + sum fbar(z + (2n-1) i h e^{i beta})
// for point-structured base states (finite zero set, no exponential factor).
// Log terms are normalized per-term at the lattice anchor so Im F is constant
// along the strip boundary lines (no principal-branch wraps there); analytic
// zeta tails make the truncation error ~1e-14. beta = 0 is the straight strip.
cplx oblique_strip_flow(const FlowSpec& base, double h, double beta, cplx z, int M);

// Velocity counterpart of oblique_strip_flow.
cplx oblique_strip_velocity(const FlowSpec& base, double h, double beta, cplx z,
                            int M, bool with_tail = true);

// The two boundary lines of the oblique strip: z(t) = e^{i beta}(t ± i h/2).
inline cplx oblique_boundary_point(double h, double beta, double t, int side) {
  return std::polar(1.0, beta) * cplx(t, side >= 0 ? h / 2 : -h / 2);
}

// Closed forms of Examples 1-2: tanh(pi z/2h) (vortex), sinh(pi z/h) (source).
enum class StripKind : std::uint8_t { vortex, source };
cplx closed_form_strip(StripKind kind, double h, cplx z);

// Image lattice of a cat state: zeros of sinh(alpha z) at i pi n/alpha (odd)
// or of cosh at i pi (n+1/2)/alpha (even), |n| <= M, equal strengths; the
// attached domain is the Thm-6 oblique strip of width pi/|alpha| inclined by
// -arg(alpha) (shifted by i pi/(2 alpha) in the even case).
ImageSystem cat_image_system(cplx alpha, Parity parity, const FlowRep& rep, int M);

// Inclination of the cat image lattice line: pi/2 - arg(alpha).
double lattice_inclination(cplx alpha);

// q-geometric image set of the q-deformed coherent state: vortices at
// z_k = -q^{k+1}/(alpha(q-1)) for q > 1, anti-vortices at
// z_k = 1/(alpha(1-q)q^k) for q < 1, k = 0..M.
ImageSystem q_image_system(double q, cplx alpha, int M);

// Displaced coherent state = point singularity of multiplicity n at
// conj(alpha) superposed on the uniform background prefactor*alpha.
std::pair<std::optional<Singularity>, cplx> displaced_flow_decomposition(
    int n, cplx alpha, const FlowRep& rep);

}  // namespace fockflow

#endif  // FOCKFLOW_IMAGES_HPP
