#include "fockflow/flow.hpp"

#include <cmath>

namespace fockflow {

cplx FlowRep::prefactor() const {
  constexpr double two_pi = 2.0 * M_PI;
  switch (kind) {
    case Kind::vortex:
      return cplx(0.0, gamma / two_pi);
    case Kind::source:
      return cplx(n_strength / two_pi, 0.0);
    case Kind::mixed:
      return cplx(n_strength / two_pi, gamma / two_pi);
  }
  throw domain_error("FlowRep: unknown kind");
}

Contour Contour::circle(cplx center, double radius, int samples) {
  Contour c;
  c.kind = Kind::circle;
  c.center = center;
  c.radius = radius;
  c.samples = samples;
  c.validate();
  return c;
}

Contour Contour::polyline(std::vector<cplx> pts, int samples) {
  Contour c;
  c.kind = Kind::polyline;
  c.points = std::move(pts);
  c.samples = samples;
  if (!c.points.empty() && c.points.front() != c.points.back())
    c.points.push_back(c.points.front());
  c.validate();
  return c;
}

void Contour::validate() const {
  if (samples < 16) throw domain_error("Contour: samples must be >= 16");
  if (kind == Kind::circle) {
    if (!(radius > 0.0)) throw domain_error("Contour: radius must be > 0");
  } else {
    if (points.size() < 4)  // 3 vertices + closure
      throw domain_error("Contour: polyline needs at least 3 distinct points");
  }
}

namespace {

cplx state_value_guarded(const FlowSpec& fs, cplx z) {
  const cplx w = eval_state(fs.state, z, fs.trunc);
  if (std::abs(w) < kSingularityGuard)
    throw singularity_error("flow: evaluation at a zero of Psi");
  return w;
}

}  // namespace

cplx potential(const FlowSpec& fs, cplx z) {
  return fs.rep.prefactor() * std::log(state_value_guarded(fs, z));
}

cplx velocity(const FlowSpec& fs, cplx z) {
  const cplx psi = state_value_guarded(fs, z);
  return fs.rep.prefactor() * eval_state_derivative(fs.state, z, fs.trunc) / psi;
}

cplx integrate_contour(const std::function<cplx(cplx)>& f, const Contour& c) {
  c.validate();
  cplx total = 0.0;
  if (c.kind == Contour::Kind::circle) {
    // uniform rectangle rule: spectrally accurate for periodic integrands
    const double dt = 2.0 * M_PI / c.samples;
    for (int j = 0; j < c.samples; ++j) {
      const cplx e = std::polar(1.0, j * dt);
      const cplx z = c.center + c.radius * e;
      const cplx dz = cplx(0.0, 1.0) * c.radius * e;
      total += f(z) * dz;
    }
    total *= dt;
  } else {
    // composite trapezoid per segment, nodes split by arc length
    double length = 0.0;
    for (std::size_t i = 0; i + 1 < c.points.size(); ++i)
      length += std::abs(c.points[i + 1] - c.points[i]);
    for (std::size_t i = 0; i + 1 < c.points.size(); ++i) {
      const cplx a = c.points[i], b = c.points[i + 1];
      const double seg = std::abs(b - a);
      const int n = std::max(2, static_cast<int>(std::lround(c.samples * seg / length)));
      const cplx dz = (b - a) / static_cast<double>(n);
      cplx acc = 0.5 * (f(a) + f(b));
      for (int j = 1; j < n; ++j) acc += f(a + dz * static_cast<double>(j));
      total += acc * dz;
    }
  }
  return total;
}

cplx contour_integral_velocity(const FlowSpec& fs, const Contour& c) {
  return integrate_contour([&fs](cplx z) { return velocity(fs, z); }, c);
}

RecoveredStrength recovered_strength(const FlowSpec& fs, const Contour& c) {
  const cplx integral = contour_integral_velocity(fs, c);
  return {-integral.real(), integral.imag()};
}

VerificationReport check_boundary(const FlowSpec& fs, const std::vector<cplx>& curve,
                                  double tolerance) {
  auto psi = [&fs](cplx z) { return eval_state(fs.state, z, fs.trunc); };
  const char* name = fs.rep.kind == FlowRep::Kind::vortex ? "boundary_vortex_unimodular"
                                                          : "boundary_source_real";
  return check_boundary(fs.rep.kind, psi, curve, tolerance, name);
}

VerificationReport check_boundary(FlowRep::Kind kind,
                                  const std::function<cplx(cplx)>& psi,
                                  const std::vector<cplx>& curve, double tolerance,
                                  const std::string& name) {
  if (kind == FlowRep::Kind::mixed)
    throw domain_error("check_boundary: mixed flows have no single boundary condition");
  double worst = 0.0;
  for (cplx z : curve) {
    const cplx w = psi(z);
    const double err =
        kind == FlowRep::Kind::vortex ? std::abs(std::abs(w) - 1.0) : std::abs(w.imag());
    worst = std::max(worst, err);
  }
  return VerificationReport::make(name, worst, tolerance,
                                  static_cast<long>(curve.size()));
}

}  // namespace fockflow
