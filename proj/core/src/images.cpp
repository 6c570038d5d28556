#include "fockflow/images.hpp"

#include <cmath>

#include "fockflow/lattice.hpp"

namespace fockflow {

namespace {

void require_wedge_order(int n) {
  if (n < 1) throw domain_error("wedge: n must be >= 1");
}

void require_strip(double h, int M) {
  if (!(h > 0.0)) throw domain_error("strip: width h must be > 0");
  if (M < 1) throw domain_error("strip: truncation index M must be >= 1");
}

void check_product_state(cplx w, const char* what) {
  if (!std::isfinite(w.real()) || !std::isfinite(w.imag()) || std::abs(w) > 1e290)
    throw magnitude_overflow_error(std::string(what) + ": product magnitude overflow");
}

cplx guarded(cplx w, const char* what) {
  if (std::abs(w) < kSingularityGuard)
    throw singularity_error(std::string(what) + ": factor at a zero of Psi");
  return w;
}

SingularityKind kind_for_rep(const FlowRep& rep) {
  switch (rep.kind) {
    case FlowRep::Kind::vortex:
      return rep.gamma >= 0.0 ? SingularityKind::vortex : SingularityKind::anti_vortex;
    case FlowRep::Kind::source:
      return rep.n_strength >= 0.0 ? SingularityKind::source : SingularityKind::sink;
    case FlowRep::Kind::mixed:
      break;
  }
  throw domain_error("image system: mixed representation has no single singularity kind");
}

double strength_for_rep(const FlowRep& rep) {
  return rep.kind == FlowRep::Kind::vortex ? std::abs(rep.gamma)
                                           : std::abs(rep.n_strength);
}

}  // namespace

cplx wedge_flow(const FlowSpec& base, int n, cplx z) {
  require_wedge_order(n);
  cplx F = 0.0;
  for (int k = 0; k < n; ++k) {
    const cplx w = std::polar(1.0, 2.0 * M_PI * k / n) * z;
    F += potential(base, w);
    F += std::conj(potential(base, std::conj(w)));
  }
  return F;
}

cplx wedge_wavefunction(const StateSpec& s, const FlowRep& rep, int n, cplx z,
                        const Truncation& t) {
  require_wedge_order(n);
  if (rep.kind == FlowRep::Kind::mixed)
    throw domain_error("wedge_wavefunction: use the vortex or source form");
  cplx P = 1.0;
  for (int k = 0; k < n; ++k) {
    const cplx w = std::polar(1.0, 2.0 * M_PI * k / n) * z;
    const cplx num = eval_state(s, w, t);
    const cplx bar = eval_state_schwarz(s, w, t);
    if (rep.kind == FlowRep::Kind::vortex)
      P *= num / guarded(bar, "wedge_wavefunction");
    else
      P *= num * bar;
    check_product_state(P, "wedge_wavefunction");
  }
  return P;
}

cplx strip_wavefunction(const StateSpec& s, const FlowRep& rep, double h, cplx z,
                        int M, const Truncation& t) {
  require_strip(h, M);
  if (rep.kind == FlowRep::Kind::mixed)
    throw domain_error("strip_wavefunction: use the vortex or source form");
  const bool vortex = rep.kind == FlowRep::Kind::vortex;

  const int m0 = anchor_multiplicity(s);
  cplx P = eval_state(s, z, t);
  if (m0 == 0) {
    P /= guarded(eval_state(s, cplx(0.0, 0.0), t), "strip_wavefunction anchor");
  } else {
    P *= std::pow(vortex ? M_PI / (2.0 * h) : M_PI / h, m0);
  }

  for (int n = 1; n <= M; ++n) {
    const cplx even(0.0, 2.0 * n * h);
    const cplx odd(0.0, (2.0 * n - 1.0) * h);
    const cplx num = eval_state(s, z + even, t) * eval_state(s, z - even, t);
    const cplx num_anchor =
        guarded(eval_state(s, even, t) * eval_state(s, -even, t),
                "strip_wavefunction lattice anchor");
    const cplx den = eval_state_schwarz(s, z + odd, t) * eval_state_schwarz(s, z - odd, t);
    const cplx den_anchor =
        guarded(eval_state_schwarz(s, odd, t) * eval_state_schwarz(s, -odd, t),
                "strip_wavefunction lattice anchor");
    if (vortex)
      P *= (num / num_anchor) * (den_anchor / guarded(den, "strip_wavefunction"));
    else
      P *= (num / num_anchor) * (den / den_anchor);
    check_product_state(P, "strip_wavefunction");
  }
  return P;
}

cplx strip_velocity(cplx base_zero, const FlowRep& rep, double h, cplx z, int M,
                    bool with_tail) {
  require_strip(h, M);
  const cplx pre = rep.prefactor();
  const cplx cpre = std::conj(pre);
  const cplx C(0.0, h);
  const cplx w = z - base_zero;
  const cplx wb = z - std::conj(base_zero);

  cplx v = pre / guarded(w, "strip_velocity");
  for (int n = 1; n <= M; ++n) {
    const cplx shift = 2.0 * n * C;
    v += pre * (1.0 / guarded(w + shift, "strip_velocity") +
                1.0 / guarded(w - shift, "strip_velocity"));
  }
  for (int n = -M; n <= M; ++n) {
    const cplx shift = (2.0 * n - 1.0) * C;
    v += cpre / guarded(wb + shift, "strip_velocity");
  }
  if (with_tail) {
    const cplx half = w / (2.0 * C);
    v += pre * (-w / (2.0 * C * C)) * lattice::inv_square_tail(half * half, M);
    const cplx u = wb - C;
    const cplx halfd = u / (2.0 * C);
    v += cpre * (-u / (2.0 * C * C)) * lattice::inv_square_tail(halfd * halfd, M);
  }
  return v;
}

namespace {

struct ObliqueSetup {
  cplx C;
  cplx pre;
  cplx cpre;
  PointStructure ps;
};

ObliqueSetup oblique_setup(const FlowSpec& base, double h, double beta, int M) {
  require_strip(h, M);
  if (!(std::abs(beta) < M_PI / 2.0))
    throw domain_error("oblique strip: |beta| must be < pi/2");
  ObliqueSetup s;
  s.C = cplx(0.0, 1.0) * h * std::polar(1.0, beta);
  s.pre = base.rep.prefactor();
  s.cpre = std::conj(s.pre);
  s.ps = point_structure(base.state);
  if (s.ps.slope != cplx(0.0, 0.0))
    throw domain_error(
        "oblique strip: exponential state factors give a divergent image background; "
        "use a polynomial-type base (Fock or Coefficients)");
  return s;
}

}  // namespace

cplx oblique_strip_flow(const FlowSpec& base, double h, double beta, cplx z, int M) {
  const ObliqueSetup st = oblique_setup(base, h, beta, M);
  const cplx C = st.C;
  cplx F = 0.0;
  for (const auto& [a, m] : st.ps.zeros) {
    const double md = m;
    const cplx w = z - a;
    const cplx wb = z - std::conj(a);
    // even image row; factors normalized at the lattice points 2nC
    F += st.pre * md * std::log(guarded(w, "oblique_strip_flow"));
    for (int n = 1; n <= M; ++n) {
      const cplx shift = 2.0 * n * C;
      F += st.pre * md *
           (std::log((w + shift) / shift) + std::log((w - shift) / (-shift)));
    }
    // odd Schwarz row, shifts (2n-1)C over n in [-M, M]
    for (int n = -M; n <= M; ++n) {
      const cplx shift = (2.0 * n - 1.0) * C;
      F += st.cpre * md * std::log(guarded(wb + shift, "oblique_strip_flow") / shift);
    }
    // analytic tails of the paired factors
    F += st.pre * md * lattice::log_tail(-(w * w) / (4.0 * C * C), M);
    const cplx u = wb - C;
    F += st.cpre * md *
         (lattice::log_tail(-(u * u) / (4.0 * C * C), M) + lattice::wallis_tail(M));
  }
  return F;
}

cplx oblique_strip_velocity(const FlowSpec& base, double h, double beta, cplx z,
                            int M, bool with_tail) {
  const ObliqueSetup st = oblique_setup(base, h, beta, M);
  const cplx C = st.C;
  cplx v = 0.0;
  for (const auto& [a, m] : st.ps.zeros) {
    const double md = m;
    const cplx w = z - a;
    const cplx wb = z - std::conj(a);
    v += st.pre * md / guarded(w, "oblique_strip_velocity");
    for (int n = 1; n <= M; ++n) {
      const cplx shift = 2.0 * n * C;
      v += st.pre * md *
           (1.0 / guarded(w + shift, "oblique_strip_velocity") +
            1.0 / guarded(w - shift, "oblique_strip_velocity"));
    }
    for (int n = -M; n <= M; ++n) {
      const cplx shift = (2.0 * n - 1.0) * C;
      v += st.cpre * md / guarded(wb + shift, "oblique_strip_velocity");
    }
    if (with_tail) {
      const cplx half = w / (2.0 * C);
      v += st.pre * md * (-w / (2.0 * C * C)) * lattice::inv_square_tail(half * half, M);
      const cplx u = wb - C;
      const cplx halfd = u / (2.0 * C);
      v += st.cpre * md * (-u / (2.0 * C * C)) *
           lattice::inv_square_tail(halfd * halfd, M);
    }
  }
  return v;
}

cplx closed_form_strip(StripKind kind, double h, cplx z) {
  if (!(h > 0.0)) throw domain_error("closed_form_strip: h must be > 0");
  return kind == StripKind::vortex ? std::tanh(M_PI * z / (2.0 * h))
                                   : std::sinh(M_PI * z / h);
}

ImageSystem cat_image_system(cplx alpha, Parity parity, const FlowRep& rep, int M) {
  if (alpha == cplx(0.0, 0.0)) throw domain_error("cat_image_system: alpha must be nonzero");
  if (M < 0) throw domain_error("cat_image_system: M must be >= 0");
  const SingularityKind kind = kind_for_rep(rep);
  const double strength = strength_for_rep(rep);

  ImageSystem sys;
  const double width = M_PI / std::abs(alpha);
  const cplx offset =
      parity == Parity::even ? cplx(0.0, 1.0) * M_PI / (2.0 * alpha) : cplx(0.0, 0.0);
  sys.domain = ObliqueStripDomain{width, -std::arg(alpha), offset};
  sys.truncation_index = M;
  sys.truncated = true;
  for (int n = -M; n <= M; ++n) {
    const double idx = parity == Parity::odd ? n : n + 0.5;
    sys.singularities.push_back(
        Singularity{cplx(0.0, 1.0) * M_PI * idx / alpha, kind, strength, 1});
  }
  return sys;
}

double lattice_inclination(cplx alpha) {
  if (alpha == cplx(0.0, 0.0)) throw domain_error("lattice_inclination: alpha nonzero");
  return M_PI / 2.0 - std::arg(alpha);
}

ImageSystem q_image_system(double q, cplx alpha, int M) {
  if (!(q > 0.0) || q == 1.0) throw domain_error("q_image_system: q must be > 0, != 1");
  if (alpha == cplx(0.0, 0.0)) throw domain_error("q_image_system: alpha must be nonzero");
  if (M < 0) throw domain_error("q_image_system: M must be >= 0");

  ImageSystem sys;
  sys.domain = GeometricDomain{q, alpha};
  sys.truncation_index = M;
  sys.truncated = true;
  for (int k = 0; k <= M; ++k) {
    if (q > 1.0) {
      // zero of the k-th retained product factor of e_q
      sys.singularities.push_back(Singularity{
          -std::pow(q, k + 1) / (alpha * (q - 1.0)), SingularityKind::vortex, 1.0, 1});
    } else {
      sys.singularities.push_back(Singularity{
          1.0 / (alpha * (1.0 - q) * std::pow(q, k)), SingularityKind::anti_vortex, 1.0,
          1});
    }
  }
  return sys;
}

std::pair<std::optional<Singularity>, cplx> displaced_flow_decomposition(
    int n, cplx alpha, const FlowRep& rep) {
  if (n < 0) throw domain_error("displaced_flow_decomposition: n must be >= 0");
  const cplx background = rep.prefactor() * alpha;
  if (n == 0) return {std::nullopt, background};
  return {Singularity{std::conj(alpha), kind_for_rep(rep), strength_for_rep(rep), n},
          background};
}

}  // namespace fockflow
