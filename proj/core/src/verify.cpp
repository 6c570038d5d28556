// The registered identity battery behind `verify_identity` and the CLI's
// `verify` command. Every item runs on a fixed deterministic sample set.
#include <cmath>
#include <functional>

#include "fockflow/analysis.hpp"
#include "fockflow/images.hpp"
#include "fockflow/qcalc.hpp"

namespace fockflow {

namespace {

double get(const VerifyParams& p, const std::string& key, double fallback) {
  auto it = p.find(key);
  return it == p.end() ? fallback : it->second;
}

double rel_diff(cplx a, cplx b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

// Deterministic unit-interval sequence (LCG), for "50 random points" sets.
struct Lcg {
  std::uint64_t state = 0x2545f4914f6cdd1dULL;
  double next() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<double>(state >> 11) * 0x1.0p-53;
  }
};

const StateSpec kWedgeState = StateSpec::displaced(2, cplx(1.3, 0.45));

VerificationReport wedge_periodicity(const VerifyParams& p) {
  const double tol = get(p, "tol", 1e-12);
  double worst = 0.0;
  long samples = 0;
  for (int n = 2; n <= 5; ++n) {
    const cplx q2 = std::polar(1.0, 2.0 * M_PI / n);
    for (int j = 0; j < 4; ++j) {
      const cplx z = 0.8 * std::polar(1.0, M_PI / (3.0 * n) + 0.37 * j);
      for (FlowRep rep : {FlowRep::vortex(2.0 * M_PI), FlowRep::source(2.0 * M_PI)}) {
        const cplx a = wedge_wavefunction(kWedgeState, rep, n, q2 * z);
        const cplx b = wedge_wavefunction(kWedgeState, rep, n, z);
        worst = std::max(worst, rel_diff(a, b));
        ++samples;
      }
    }
  }
  return VerificationReport::make("wedge_periodicity", worst, tol, samples);
}

VerificationReport wedge_boundary(const VerifyParams& p) {
  const double tol = get(p, "tol", 1e-10);
  double worst = 0.0;
  long samples = 0;
  for (int n = 2; n <= 5; ++n) {
    const cplx ray = std::polar(1.0, M_PI / n);
    for (int j = 0; j < 50; ++j) {
      const double x = 0.1 + 2.9 * j / 49.0;
      for (cplx z : {cplx(x, 0.0), x * ray}) {
        const cplx w = wedge_wavefunction(kWedgeState, FlowRep::vortex(2.0 * M_PI), n, z);
        worst = std::max(worst, std::abs(std::abs(w) - 1.0));
        ++samples;
      }
    }
  }
  return VerificationReport::make("wedge_boundary", worst, tol, samples);
}

VerificationReport strip_closed_form(const VerifyParams& p) {
  const double tol = get(p, "tol", 1e-5);
  const int M = static_cast<int>(get(p, "M", 400));
  const StateSpec vortex_at_origin = StateSpec::fock(1);
  double worst = 0.0;
  long samples = 0;
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      const cplx z(-0.75 + 0.4 * i, -0.4 + 0.2 * j);
      const cplx prod = strip_wavefunction(vortex_at_origin, FlowRep::vortex(2.0 * M_PI),
                                           1.0, z, M);
      const cplx closed = closed_form_strip(StripKind::vortex, 1.0, z);
      worst = std::max(worst, rel_diff(prod, closed));
      ++samples;
    }
  }
  return VerificationReport::make("strip_closed_form", worst, tol, samples);
}

VerificationReport strip_combined_periodicity(const VerifyParams& p) {
  const double tol = get(p, "tol", 1e-5);
  const int M = static_cast<int>(get(p, "M", 400));
  const StateSpec s = StateSpec::fock(1);
  const FlowRep rep = FlowRep::vortex(2.0 * M_PI);
  double worst = 0.0;
  long samples = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 3; ++j) {
      const cplx z(-0.55 + 0.35 * i, -0.3 + 0.27 * j);
      const cplx p1 = strip_wavefunction(s, rep, 1.0, z, M);
      const cplx p2 =
          std::conj(strip_wavefunction(s, rep, 1.0, std::conj(z) + cplx(0.0, 1.0), M));
      worst = std::max(worst, std::abs(p1 * p2 - 1.0));
      ++samples;
    }
  }
  return VerificationReport::make("strip_combined_periodicity", worst, tol, samples);
}

VerificationReport oblique_boundary(const VerifyParams& p) {
  const double tol = get(p, "tol", 1e-6);
  const int M = static_cast<int>(get(p, "M", 500));
  const FlowSpec base{StateSpec::fock(1), FlowRep::source(2.0 * M_PI), {}};
  double worst = 0.0;
  long samples = 0;
  for (double beta : {0.0, M_PI / 6.0, -M_PI / 4.0}) {
    for (int side : {+1, -1}) {
      const double ref =
          oblique_strip_flow(base, 1.0, beta, oblique_boundary_point(1.0, beta, 0.0, side), M)
              .imag();
      for (int j = 0; j < 25; ++j) {
        const double tpar = -2.0 + 4.0 * j / 24.0;
        const cplx z = oblique_boundary_point(1.0, beta, tpar, side);
        const double im = oblique_strip_flow(base, 1.0, beta, z, M).imag();
        worst = std::max(worst, std::abs(im - ref));
        ++samples;
      }
    }
  }
  return VerificationReport::make("oblique_boundary", worst, tol, samples);
}

VerificationReport cat_velocity_periodicity(const VerifyParams& p) {
  const double tol = get(p, "tol", 1e-10);
  double worst = 0.0;
  long samples = 0;
  for (cplx alpha : {cplx(1.0, 0.0), std::polar(1.0, M_PI / 4.0), cplx(0.0, 2.0)}) {
    const cplx period = cplx(0.0, M_PI) / alpha;
    for (Parity parity : {Parity::even, Parity::odd}) {
      for (FlowRep rep : {FlowRep::vortex(2.0 * M_PI), FlowRep::source(2.0 * M_PI)}) {
        const FlowSpec fs{StateSpec::cat(parity, alpha), rep, {}};
        for (int i = 0; i < 5; ++i) {
          for (int j = 0; j < 5; ++j) {
            const cplx z = (cplx(0.3, 0.15) + cplx(0.2 * i, 0.2 * j)) / alpha;
            worst = std::max(worst, std::abs(velocity(fs, z + period) - velocity(fs, z)));
            ++samples;
          }
        }
      }
    }
  }
  return VerificationReport::make("cat_velocity_periodicity", worst, tol, samples);
}

VerificationReport cat_zero_lattice(const VerifyParams& p) {
  const double tol = get(p, "tol", 1e-8);
  double worst = 0.0;
  long samples = 0;
  for (cplx alpha : {cplx(1.0, 0.0), std::polar(1.0, M_PI / 4.0), cplx(0.0, 2.0)}) {
    const double radius = 3.2 * M_PI / std::abs(alpha);
    const auto zeros =
        find_zeros(StateSpec::cat(Parity::odd, alpha), Region::disk(0.0, radius));
    const auto expected = cat_image_system(alpha, Parity::odd, FlowRep::vortex(2.0 * M_PI), 3);
    for (const Singularity& img : expected.singularities) {
      double best = 1e300;
      for (const Zero& z : zeros) best = std::min(best, std::abs(z.position - img.position));
      worst = std::max(worst, best);
      ++samples;
    }
  }
  return VerificationReport::make("cat_zero_lattice", worst, tol, samples);
}

VerificationReport qutrit_derivative_cycle(const VerifyParams& p) {
  const double tol = get(p, "tol", 1e-6);
  const double h = get(p, "fd_step", 1e-3);
  double worst = 0.0;
  long samples = 0;
  for (cplx alpha : {cplx(1.0, 0.0), cplx(1.1, 0.2)}) {
    for (int s = 0; s < 3; ++s) {
      const StateSpec st = StateSpec::qutrit(s, alpha);
      for (int j = 0; j < 5; ++j) {
        const cplx z = cplx(0.63, 0.41) + 0.21 * std::polar(1.0, 1.3 * j);
        auto fd = [&](double step) {
          return (eval_state(st, z + step) - eval_state(st, z - step)) / (2.0 * step);
        };
        const cplx richardson = (4.0 * fd(h / 2.0) - fd(h)) / 3.0;
        const cplx exact = eval_state_derivative(st, z);
        worst = std::max(worst, rel_diff(richardson, exact));
        ++samples;
      }
    }
  }
  return VerificationReport::make("qutrit_derivative_cycle", worst, tol, samples);
}

VerificationReport qutrit_equivariance(const VerifyParams& p) {
  const double tol = get(p, "tol", 1e-10);
  const cplx omega = std::polar(1.0, 2.0 * M_PI / 3.0);
  double worst = 0.0;
  long samples = 0;
  for (int s = 0; s < 3; ++s) {
    const FlowSpec fs{StateSpec::qutrit(s, cplx(1.1, 0.2)), FlowRep::vortex(2.0 * M_PI), {}};
    for (int j = 0; j < 6; ++j) {
      const cplx z = cplx(0.7, 0.2) + 0.3 * std::polar(1.0, 1.1 * j);
      // chain-rule-consistent form: omega * vbar(omega z) = vbar(z)
      worst = std::max(worst, std::abs(omega * velocity(fs, omega * z) - velocity(fs, z)));
      ++samples;
    }
  }
  return VerificationReport::make("qutrit_equivariance", worst, tol, samples);
}

VerificationReport q_series_product(const VerifyParams& p) {
  const double tol = get(p, "tol", 1e-10);
  double worst = 0.0;
  long samples = 0;
  for (double qv : {2.0, 3.0, 0.5, 0.8}) {
    const QParameter q(qv);
    const double radius = qv < 1.0 ? 0.8 / (1.0 - qv) : 4.0;
    Lcg rng;
    for (int j = 0; j < 50; ++j) {
      const cplx x = radius * rng.next() * std::polar(1.0, 2.0 * M_PI * rng.next());
      const Truncation t{512, 1e-15, true};
      worst = std::max(worst, rel_diff(q_exponential(q, x, t),
                                       q_exponential_product(q, x, t)));
      ++samples;
    }
  }
  return VerificationReport::make("q_series_product", worst, tol, samples);
}

VerificationReport q_zero_progression(const VerifyParams& p) {
  const double tol = get(p, "tol", 1e-14);
  double worst = 0.0;
  long samples = 0;
  for (double qv : {2.0, 3.0, 0.5, 0.8}) {
    for (cplx alpha : {cplx(1.0, 0.0), cplx(0.8, -0.6)}) {
      const auto sys = q_image_system(qv, alpha, 5);
      for (std::size_t k = 0; k + 1 < sys.singularities.size(); ++k) {
        const cplx ratio =
            sys.singularities[k + 1].position / sys.singularities[k].position;
        const double expect = qv > 1.0 ? qv : 1.0 / qv;
        worst = std::max(worst, std::abs(ratio - expect) / expect);
        ++samples;
      }
    }
    if (qv > 1.0) {
      // each listed vortex is a zero of its product factor: 1 + z(1-1/q)/q^k
      const auto sys = q_image_system(qv, cplx(1.0, 0.0), 5);
      for (std::size_t k = 0; k < sys.singularities.size(); ++k) {
        const cplx factor = 1.0 + sys.singularities[k].position *
                                      (1.0 - 1.0 / qv) / std::pow(qv, double(k));
        worst = std::max(worst, std::abs(factor));
        ++samples;
      }
    }
  }
  return VerificationReport::make("q_zero_progression", worst, tol, samples);
}

VerificationReport circulation_strength(const VerifyParams& p) {
  const double tol = get(p, "tol", 1e-8);
  const int nodes = static_cast<int>(get(p, "samples", 1024));
  const double gamma = 2.0 * M_PI;
  double worst = 0.0;
  long samples = 0;

  auto check = [&](const FlowSpec& fs, const Contour& c, double want_gamma,
                   double want_n) {
    const auto got = recovered_strength(fs, c);
    const double scale = std::max({std::abs(want_gamma), std::abs(want_n), 1.0});
    worst = std::max(worst, std::abs(got.gamma - want_gamma) / scale);
    worst = std::max(worst, std::abs(got.n_strength - want_n) / scale);
    ++samples;
  };

  check({StateSpec::fock(1), FlowRep::vortex(gamma), {}}, Contour::circle(0.0, 1.0, nodes),
        gamma, 0.0);
  check({StateSpec::fock(3), FlowRep::vortex(gamma), {}}, Contour::circle(0.0, 1.0, nodes),
        3.0 * gamma, 0.0);
  check({StateSpec::fock(1), FlowRep::source(gamma), {}}, Contour::circle(0.0, 1.0, nodes),
        0.0, gamma);
  check({StateSpec::displaced(2, cplx(1.0, 1.0)), FlowRep::vortex(gamma), {}},
        Contour::circle(cplx(1.0, -1.0), 0.5, nodes), 2.0 * gamma, 0.0);
  check({StateSpec::displaced(2, cplx(1.0, 1.0)), FlowRep::mixed(gamma, gamma), {}},
        Contour::circle(cplx(1.0, -1.0), 0.5, nodes), 2.0 * gamma, 2.0 * gamma);
  return VerificationReport::make("circulation_strength", worst, tol, samples);
}

VerificationReport boundary_unimodular(const VerifyParams& p) {
  const double tol = get(p, "tol", 1e-12);
  std::vector<cplx> curve;
  for (int j = 0; j < 50; ++j) {
    const double x = -3.0 + 6.0 * j / 49.0;
    curve.emplace_back(x, 0.5);
    curve.emplace_back(x, -0.5);
  }
  auto tanh_strip = [](cplx z) { return closed_form_strip(StripKind::vortex, 1.0, z); };
  return check_boundary(FlowRep::Kind::vortex, tanh_strip, curve, tol,
                        "boundary_unimodular");
}

VerificationReport boundary_real(const VerifyParams& p) {
  const double tol = get(p, "tol", 1e-12);
  double worst = 0.0;
  long samples = 0;
  for (int j = 0; j < 50; ++j) {
    const double x = -3.0 + 6.0 * j / 49.0;
    worst = std::max(worst, std::abs(closed_form_strip(StripKind::source, 1.0, x).imag()));
    ++samples;
  }
  // wedge source form on the ray arg z = pi/n is real (relative to |Psi|)
  const int n = 3;
  const cplx ray = std::polar(1.0, M_PI / n);
  for (int j = 0; j < 25; ++j) {
    const cplx z = (0.2 + 0.1 * j) * ray;
    const cplx w = wedge_wavefunction(kWedgeState, FlowRep::source(2.0 * M_PI), n, z);
    worst = std::max(worst, std::abs(w.imag()) / std::abs(w));
    ++samples;
  }
  return VerificationReport::make("boundary_real", worst, tol, samples);
}

VerificationReport normalization_freedom(const VerifyParams& p) {
  const double tol = get(p, "tol", 1e-13);
  const std::vector<cplx> c = {cplx(1.0, 0.0), cplx(0.5, 0.0), cplx(0.0, -0.25),
                               cplx(0.125, 0.3), cplx(0.2, 0.0)};
  const cplx B = 1e3 * std::polar(1.0, M_PI / 3.0);
  std::vector<cplx> scaled(c);
  for (cplx& x : scaled) x *= B;

  const FlowRep rep = FlowRep::vortex(2.0 * M_PI);
  const FlowSpec fs1{StateSpec::coefficients(c), rep, {}};
  const FlowSpec fs2{StateSpec::coefficients(scaled), rep, {}};

  double worst = 0.0;
  long samples = 0;
  const cplx shift0 = potential(fs2, cplx(0.9, 0.4)) - potential(fs1, cplx(0.9, 0.4));
  for (int j = 0; j < 8; ++j) {
    const cplx z = cplx(0.9, 0.4) + 0.45 * std::polar(1.0, 0.9 * j);
    worst = std::max(worst, rel_diff(velocity(fs1, z), velocity(fs2, z)));
    // the potential shifts by the z-independent constant prefactor*Log B
    const cplx shift = potential(fs2, z) - potential(fs1, z);
    worst = std::max(worst, std::abs(shift - shift0));
    ++samples;
  }
  return VerificationReport::make("normalization_freedom", worst, tol, samples);
}

using Item = VerificationReport (*)(const VerifyParams&);

const std::vector<std::pair<std::string, Item>>& registry() {
  static const std::vector<std::pair<std::string, Item>> items = {
      {"wedge_periodicity", wedge_periodicity},
      {"wedge_boundary", wedge_boundary},
      {"strip_closed_form", strip_closed_form},
      {"strip_combined_periodicity", strip_combined_periodicity},
      {"oblique_boundary", oblique_boundary},
      {"cat_velocity_periodicity", cat_velocity_periodicity},
      {"cat_zero_lattice", cat_zero_lattice},
      {"qutrit_derivative_cycle", qutrit_derivative_cycle},
      {"qutrit_equivariance", qutrit_equivariance},
      {"q_series_product", q_series_product},
      {"q_zero_progression", q_zero_progression},
      {"circulation_strength", circulation_strength},
      {"boundary_unimodular", boundary_unimodular},
      {"boundary_real", boundary_real},
      {"normalization_freedom", normalization_freedom},
  };
  return items;
}

}  // namespace

VerificationReport verify_identity(const std::string& name, const VerifyParams& params) {
  for (const auto& [key, fn] : registry())
    if (key == name) return fn(params);
  throw domain_error("verify_identity: unknown identity '" + name + "'");
}

std::vector<std::string> verify_identity_names() {
  std::vector<std::string> names;
  for (const auto& [key, fn] : registry()) names.push_back(key);
  return names;
}

std::vector<VerificationReport> verify_all(const VerifyParams& params) {
  std::vector<VerificationReport> out;
  for (const auto& [key, fn] : registry()) out.push_back(fn(params));
  return out;
}

}  // namespace fockflow
