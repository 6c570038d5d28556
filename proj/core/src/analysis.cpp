#include "fockflow/analysis.hpp"

#include <algorithm>
#include <cmath>

namespace fockflow {

namespace {

constexpr int kMaxDepth = 48;
constexpr int kMultiplicityCap = 16;
constexpr int kBoundaryRetries = 5;

cplx winding_value(const StateSpec& s, const Contour& c, const Truncation& t) {
  auto logderiv = [&](cplx z) {
    const cplx psi = eval_state(s, z, t);
    if (std::abs(psi) < kSingularityGuard)
      throw singularity_error("count_zeros: contour node at a zero of Psi");
    return eval_state_derivative(s, z, t) / psi;
  };
  return integrate_contour(logderiv, c) / cplx(0.0, 2.0 * M_PI);
}

int winding_to_int(cplx w) {
  const double rounded = std::round(w.real());
  const double defect = std::hypot(w.real() - rounded, w.imag());
  if (defect >= 0.25)
    throw ill_conditioned_error("count_zeros: winding defect >= 0.25 (zero near contour?)");
  return static_cast<int>(rounded);
}

struct Cell {
  double x0, x1, y0, y1;

  double diag() const { return std::hypot(x1 - x0, y1 - y0); }
  cplx center() const { return {0.5 * (x0 + x1), 0.5 * (y0 + y1)}; }
  bool contains(cplx z, double margin) const {
    return z.real() >= x0 - margin && z.real() <= x1 + margin &&
           z.imag() >= y0 - margin && z.imag() <= y1 + margin;
  }
  Contour boundary(int samples) const {
    return Contour::polyline({cplx(x0, y0), cplx(x1, y0), cplx(x1, y1), cplx(x0, y1)},
                             samples);
  }
};

// Winding over a cell boundary with deterministic outward jitter when a node
// lands on a zero or the defect is too large.
int cell_winding(const StateSpec& s, const Truncation& t, Cell cell, double scale) {
  for (int attempt = 0;; ++attempt) {
    try {
      return winding_to_int(winding_value(s, cell.boundary(512), t));
    } catch (const error&) {
      if (attempt >= kBoundaryRetries) throw;
      const double pad = 1.7e-3 * (attempt + 1) * std::max(cell.diag(), 1e-9 * scale);
      cell = Cell{cell.x0 - pad, cell.x1 + pad, cell.y0 - pad, cell.y1 + pad};
    }
  }
}

struct ZeroSearch {
  const StateSpec& s;
  const Truncation& t;
  double scale;
  std::vector<Zero> found;

  // Multiplicity-aware Newton from the cell center; false = subdivide further.
  bool try_refine(const Cell& cell, int count) {
    cplx z = cell.center();
    double last_step = cell.diag();
    bool converged = false;
    for (int it = 0; it < 80; ++it) {
      const cplx f = eval_state(s, z, t);
      const cplx df = eval_state_derivative(s, z, t);
      if (std::abs(df) < kSingularityGuard) break;
      const cplx step = static_cast<double>(count) * f / df;
      z -= step;
      last_step = std::abs(step);
      if (!cell.contains(z, 3.0 * cell.diag())) return false;  // escaped the cell
      if (last_step < 1e-14 * std::max(scale, std::abs(z))) {
        converged = true;
        break;
      }
    }
    if (!converged) return false;

    // residual relative to the local scale of Psi
    const double probe = 1e-2 * scale;
    double local = 0.0;
    for (int k = 0; k < 4; ++k)
      local = std::max(local,
                       std::abs(eval_state(s, z + probe * std::polar(1.0, k * M_PI / 2), t)));
    if (!(std::abs(eval_state(s, z, t)) < 1e-10 * std::max(local, 1e-300))) return false;

    // multiplicity from a small-circle winding around the refined zero
    const double r = std::max(1e-7 * scale, 16.0 * last_step);
    const int mult = winding_to_int(winding_value(s, Contour::circle(z, r, 256), t));
    if (mult > kMultiplicityCap)
      throw ill_conditioned_error("find_zeros: multiplicity above cap 16");
    if (mult != count) return false;  // cell still holds other zeros
    found.push_back(Zero{z, mult});
    return true;
  }

  void recurse(const Cell& cell, int depth) {
    const int count = cell_winding(s, t, cell, scale);
    if (count == 0) return;
    if (depth > kMaxDepth)
      throw ill_conditioned_error("find_zeros: max quadrisection depth (degenerate cluster?)");
    if (cell.diag() < 0.05 * scale && try_refine(cell, count)) return;
    const double xm = 0.5 * (cell.x0 + cell.x1);
    const double ym = 0.5 * (cell.y0 + cell.y1);
    recurse(Cell{cell.x0, xm, cell.y0, ym}, depth + 1);
    recurse(Cell{xm, cell.x1, cell.y0, ym}, depth + 1);
    recurse(Cell{cell.x0, xm, ym, cell.y1}, depth + 1);
    recurse(Cell{xm, cell.x1, ym, cell.y1}, depth + 1);
  }
};

}  // namespace

int count_zeros(const StateSpec& s, const Contour& c, const Truncation& t) {
  t.validate();
  return winding_to_int(winding_value(s, c, t));
}

std::vector<Zero> find_zeros(const StateSpec& s, const Region& r, const Truncation& t) {
  t.validate();
  ZeroSearch search{s, t,
                    std::max({r.xmax - r.xmin, r.ymax - r.ymin, 1.0e-6}),
                    {}};
  search.recurse(Cell{r.xmin, r.xmax, r.ymin, r.ymax}, 0);

  // jittered sibling boundaries can record the same zero twice
  std::sort(search.found.begin(), search.found.end(), [](const Zero& a, const Zero& b) {
    if (a.position.real() != b.position.real())
      return a.position.real() < b.position.real();
    return a.position.imag() < b.position.imag();
  });
  std::vector<Zero> out;
  for (const Zero& z : search.found) {
    if (!out.empty() && std::abs(out.back().position - z.position) < 1e-8 * search.scale)
      continue;
    if (r.clip_disk &&
        std::abs(z.position - r.clip_disk->first) > r.clip_disk->second * (1.0 + 1e-12))
      continue;
    out.push_back(z);
  }
  return out;
}

FieldGrid sample_field(const FlowSpec& fs, double xmin, double xmax, double ymin,
                       double ymax, int nx, int ny) {
  if (nx < 2 || ny < 2) throw domain_error("sample_field: grid needs nx, ny >= 2");
  if (!(xmax > xmin) || !(ymax > ymin)) throw domain_error("sample_field: empty bounds");

  FieldGrid g;
  g.xmin = xmin;
  g.xmax = xmax;
  g.ymin = ymin;
  g.ymax = ymax;
  g.nx = nx;
  g.ny = ny;
  const std::size_t total = static_cast<std::size_t>(nx) * ny;
  g.phi.assign(total, 0.0);
  g.psi.assign(total, 0.0);
  g.u.assign(total, 0.0);
  g.v.assign(total, 0.0);
  g.mask.assign(total, 0);

  const double dx = (xmax - xmin) / (nx - 1);
  const double dy = (ymax - ymin) / (ny - 1);
  const double cell = std::min(dx, dy);
  const double guard = 1e-6 * cell;

  std::vector<Zero> zeros;
  try {
    const double pad = 0.51 * cell;
    zeros = find_zeros(fs.state,
                       Region::rect(xmin - pad, xmax + pad, ymin - pad, ymax + pad),
                       fs.trunc);
  } catch (const error&) {
    // zero search can fail near pathological boundaries; eval guards still mask
  }

  for (int iy = 0; iy < ny; ++iy) {
    for (int ix = 0; ix < nx; ++ix) {
      const std::size_t idx = static_cast<std::size_t>(iy) * nx + ix;
      const cplx z(g.x_at(ix), g.y_at(iy));
      bool masked = false;
      for (const Zero& zr : zeros) {
        if (std::abs(z - zr.position) < guard) {
          masked = true;
          break;
        }
      }
      if (!masked) {
        try {
          const cplx f = potential(fs, z);
          const cplx vb = velocity(fs, z);
          g.phi[idx] = f.real();
          g.psi[idx] = f.imag();
          g.u[idx] = vb.real();
          g.v[idx] = -vb.imag();
        } catch (const error&) {
          masked = true;
        }
      }
      g.mask[idx] = masked ? 1 : 0;
    }
  }
  return g;
}

std::vector<cplx> trace_streamline(const FlowSpec& fs, cplx seed, double step,
                                   int n_steps, double escape_radius) {
  if (!(step > 0.0)) throw domain_error("trace_streamline: step must be > 0");
  if (n_steps < 1) throw domain_error("trace_streamline: n_steps must be >= 1");

  auto uv = [&fs](cplx z) { return std::conj(velocity(fs, z)); };  // u + i v

  std::vector<cplx> path;
  path.reserve(n_steps + 1);
  cplx z = seed;
  uv(z);  // a seed on a singularity propagates singularity_error
  path.push_back(z);
  for (int i = 0; i < n_steps; ++i) {
    try {
      const cplx k1 = uv(z);
      const cplx k2 = uv(z + 0.5 * step * k1);
      const cplx k3 = uv(z + 0.5 * step * k2);
      const cplx k4 = uv(z + step * k3);
      z += step * (k1 + 2.0 * k2 + 2.0 * k3 + k4) / 6.0;
    } catch (const error&) {
      break;  // hit the singularity guard mid-step
    }
    if (std::abs(z) > escape_radius) break;
    path.push_back(z);
  }
  return path;
}

}  // namespace fockflow
