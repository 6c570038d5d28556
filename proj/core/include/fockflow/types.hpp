// Core vocabulary shared by all fockflow modules: complex alias, state and
// flow descriptors, truncation policy, contours/regions, and error types.
#ifndef FOCKFLOW_TYPES_HPP
#define FOCKFLOW_TYPES_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace fockflow {

using cplx = std::complex<double>;

inline constexpr double kSingularityGuard = 1e-280;  // |Psi| below this counts as a singularity
inline constexpr double kExpArgMax = 709.0;          // exp() overflows past this real part

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Evaluation landed on (or numerically indistinguishable from) a zero of Psi.
struct singularity_error : error {
  using error::error;
};

// A result left the representable range (exp overflow, runaway products).
struct magnitude_overflow_error : error {
  using error::error;
};

// Input outside the mathematical domain of the operation
// (q-series divergence disk, invalid q, unsupported state family, ...).
struct domain_error : error {
  using error::error;
};

// A series/product failed to settle within the truncation budget.
struct convergence_error : error {
  using error::error;
};

// Winding-number defect too large or zero isolation failed.
struct ill_conditioned_error : error {
  using error::error;
};

// ---------------------------------------------------------------------------
// Truncation policy for series / products / image sums
// ---------------------------------------------------------------------------

struct Truncation {
  int max_terms = 128;
  double tol = 1e-14;
  bool pair_symmetric = true;  // symmetric (n,-n) pairing in two-sided sums

  void validate() const {
    if (max_terms < 1) throw domain_error("Truncation: max_terms must be >= 1");
    if (!(tol > 0.0)) throw domain_error("Truncation: tol must be > 0");
  }
};

// ---------------------------------------------------------------------------
// StateSpec: the wave-function families of the dictionary
// ---------------------------------------------------------------------------

enum class Parity : std::uint8_t { even, odd };

struct FockState {
  int n = 0;
};
struct CoherentState {
  cplx alpha;
};
struct DisplacedCoherentState {
  int n = 0;
  cplx alpha;
};
struct CatState {
  Parity parity = Parity::even;
  cplx alpha;
};
struct QutritState {
  int sector = 0;  // 0, 1, 2
  cplx alpha;
};
struct QCoherentState {
  double q = 2.0;  // q > 0, q != 1
  cplx alpha;
};
struct CoefficientState {
  std::vector<cplx> c;  // Psi(z) = sum c_n z^n / sqrt(n!)
};

class StateSpec {
 public:
  using Variant = std::variant<FockState, CoherentState, DisplacedCoherentState,
                               CatState, QutritState, QCoherentState,
                               CoefficientState>;

  StateSpec() : v_(FockState{0}) {}
  explicit StateSpec(Variant v) : v_(std::move(v)) { validate(); }

  static StateSpec fock(int n) { return StateSpec(FockState{n}); }
  static StateSpec coherent(cplx alpha) { return StateSpec(CoherentState{alpha}); }
  static StateSpec displaced(int n, cplx alpha) {
    return StateSpec(DisplacedCoherentState{n, alpha});
  }
  static StateSpec cat(Parity p, cplx alpha) { return StateSpec(CatState{p, alpha}); }
  static StateSpec qutrit(int sector, cplx alpha) {
    return StateSpec(QutritState{sector, alpha});
  }
  static StateSpec qcoherent(double q, cplx alpha) {
    return StateSpec(QCoherentState{q, alpha});
  }
  static StateSpec coefficients(std::vector<cplx> c) {
    return StateSpec(CoefficientState{std::move(c)});
  }

  const Variant& variant() const { return v_; }

  template <class T>
  const T* get_if() const {
    return std::get_if<T>(&v_);
  }

  void validate() const;

 private:
  Variant v_;
};

// ---------------------------------------------------------------------------
// FlowRep: vortex (Gamma), source/sink (N), or mixed (N + i Gamma)
// ---------------------------------------------------------------------------

struct FlowRep {
  enum class Kind : std::uint8_t { vortex, source, mixed };

  Kind kind = Kind::vortex;
  double n_strength = 0.0;  // N  (source/sink flux strength)
  double gamma = 0.0;       // Gamma (circulation strength)

  static FlowRep vortex(double gamma) { return {Kind::vortex, 0.0, gamma}; }
  static FlowRep source(double n) { return {Kind::source, n, 0.0}; }
  static FlowRep mixed(double n, double gamma) { return {Kind::mixed, n, gamma}; }

  // (i Gamma)/(2 pi), N/(2 pi) or (N + i Gamma)/(2 pi): the Log prefactor.
  cplx prefactor() const;
};

struct FlowSpec {
  StateSpec state;
  FlowRep rep;
  Truncation trunc;
};

// ---------------------------------------------------------------------------
// Contours and search regions
// ---------------------------------------------------------------------------

struct Contour {
  enum class Kind : std::uint8_t { circle, polyline };

  Kind kind = Kind::circle;
  cplx center;
  double radius = 1.0;
  std::vector<cplx> points;  // closed polyline (first point repeated or implied)
  int samples = 1024;

  static Contour circle(cplx center, double radius, int samples = 1024);
  static Contour polyline(std::vector<cplx> pts, int samples = 1024);

  void validate() const;
};

struct Region {
  // rectangle [xmin,xmax] x [ymin,ymax]; disk regions carry a clip circle
  double xmin = -1, xmax = 1, ymin = -1, ymax = 1;
  std::optional<std::pair<cplx, double>> clip_disk;

  static Region rect(double xmin, double xmax, double ymin, double ymax) {
    if (!(xmax > xmin) || !(ymax > ymin)) throw domain_error("Region: empty rectangle");
    return Region{xmin, xmax, ymin, ymax, std::nullopt};
  }
  static Region disk(cplx center, double radius) {
    if (!(radius > 0)) throw domain_error("Region: radius must be > 0");
    Region r{center.real() - radius, center.real() + radius,
             center.imag() - radius, center.imag() + radius,
             std::make_pair(center, radius)};
    return r;
  }
};

// ---------------------------------------------------------------------------
// Image systems
// ---------------------------------------------------------------------------

enum class SingularityKind : std::uint8_t { vortex, anti_vortex, source, sink };

struct Singularity {
  cplx position;
  SingularityKind kind = SingularityKind::vortex;
  double strength = 0.0;  // paper's Gamma or N, positive; kind carries the sign
  int multiplicity = 1;

  double total_strength() const { return strength * multiplicity; }
};

struct WedgeDomain {
  int n = 1;  // opening angle pi/n
};
struct StripDomain {
  double h = 1.0;
};
struct ObliqueStripDomain {
  double h = 1.0;
  double beta = 0.0;  // inclination, |beta| < pi/2
  cplx offset;        // translation of the symmetric strip (even cat states)
};
struct GeometricDomain {
  double q = 2.0;
  cplx alpha;
};
using DomainSpec =
    std::variant<WedgeDomain, StripDomain, ObliqueStripDomain, GeometricDomain>;

struct ImageSystem {
  DomainSpec domain;
  int truncation_index = 0;  // M
  bool truncated = true;     // false only for the finite wedge kaleidoscope
  std::vector<Singularity> singularities;
};

// ---------------------------------------------------------------------------
// Field sampling and verification reports
// ---------------------------------------------------------------------------

struct FieldGrid {
  double xmin = -1, xmax = 1, ymin = -1, ymax = 1;
  int nx = 0, ny = 0;
  // row-major, index = iy*nx + ix
  std::vector<double> phi, psi, u, v;
  std::vector<std::uint8_t> mask;  // 1 = within guard distance of a singularity

  double x_at(int ix) const { return xmin + ix * ((xmax - xmin) / (nx - 1)); }
  double y_at(int iy) const { return ymin + iy * ((ymax - ymin) / (ny - 1)); }
};

struct VerificationReport {
  std::string name;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  long sample_count = 0;

  static VerificationReport make(std::string name, double max_error,
                                 double tolerance, long samples) {
    return {std::move(name), max_error, tolerance, max_error <= tolerance, samples};
  }
};

}  // namespace fockflow

#endif  // FOCKFLOW_TYPES_HPP
