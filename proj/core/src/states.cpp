#include "fockflow/states.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "fockflow/qcalc.hpp"

namespace fockflow {

void StateSpec::validate() const {
  std::visit(
      [](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, FockState>) {
          if (s.n < 0) throw domain_error("Fock: n must be >= 0");
        } else if constexpr (std::is_same_v<T, DisplacedCoherentState>) {
          if (s.n < 0) throw domain_error("DisplacedCoherent: n must be >= 0");
        } else if constexpr (std::is_same_v<T, QutritState>) {
          if (s.sector < 0 || s.sector > 2)
            throw domain_error("Qutrit: sector must be 0, 1 or 2");
        } else if constexpr (std::is_same_v<T, QCoherentState>) {
          if (!(s.q > 0.0) || s.q == 1.0)
            throw domain_error("QCoherent: q must be > 0 and != 1");
        } else if constexpr (std::is_same_v<T, CoefficientState>) {
          if (s.c.empty()) throw domain_error("Coefficients: sequence must be non-empty");
        }
      },
      v_);
}

namespace {

void check_finite(cplx w, const char* what) {
  if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
    throw magnitude_overflow_error(std::string(what) + ": magnitude overflow");
}

cplx exp_guarded(cplx w, const char* what) {
  if (w.real() > kExpArgMax)
    throw magnitude_overflow_error(std::string(what) + ": exp overflow");
  return std::exp(w);
}

// Integer power by repeated squaring (branch-free, exact for z = 0).
cplx pow_int(cplx z, int n) {
  cplx acc = 1.0, base = z;
  for (int e = n; e > 0; e >>= 1) {
    if (e & 1) acc *= base;
    base *= base;
  }
  return acc;
}

double inv_sqrt_factorial(int n) { return std::exp(-0.5 * std::lgamma(n + 1.0)); }

const cplx kOmega = std::polar(1.0, 2.0 * M_PI / 3.0);  // e^{2 pi i/3}

cplx qutrit_sector_sum(int sector, cplx alpha, cplx z) {
  // (1/3) sum_j omega^{-j s} e^{alpha z omega^j}
  const std::array<cplx, 3> om = {cplx(1.0, 0.0), kOmega, std::conj(kOmega)};
  cplx sum = 0.0;
  for (int j = 0; j < 3; ++j) {
    const cplx weight = pow_int(std::conj(kOmega), (j * sector) % 3);
    sum += weight * exp_guarded(alpha * z * om[j], "qutrit");
  }
  return sum / 3.0;
}

cplx qcoherent_derivative_series(const QCoherentState& s, cplx z, const Truncation& t) {
  // d/dz sum (alpha z)^n/[n]_q! = alpha * sum n (alpha z)^{n-1} / [n]_q!
  const QParameter q(s.q);
  const cplx x = s.alpha * z;
  cplx sum = 1.0;  // n = 1 term: 1/[1]! = 1
  cplx xpow = 1.0;
  double fact_log = 0.0;  // ln [n]_q!
  int quiet = 0;
  for (int n = 2; n <= t.max_terms; ++n) {
    xpow *= x;
    fact_log += std::log(q_number(n, q));
    const cplx term = static_cast<double>(n) * xpow * std::exp(-fact_log);
    sum += term;
    check_finite(sum, "qcoherent derivative");
    if (std::abs(term) < t.tol * std::abs(sum)) {
      if (++quiet >= 2) break;
    } else {
      quiet = 0;
    }
  }
  return s.alpha * sum;
}

}  // namespace

cplx eval_state(const StateSpec& s, cplx z, const Truncation& t) {
  t.validate();
  cplx result = std::visit(
      [&](const auto& st) -> cplx {
        using T = std::decay_t<decltype(st)>;
        if constexpr (std::is_same_v<T, FockState>) {
          return pow_int(z, st.n) * inv_sqrt_factorial(st.n);
        } else if constexpr (std::is_same_v<T, CoherentState>) {
          return exp_guarded(st.alpha * z, "coherent");
        } else if constexpr (std::is_same_v<T, DisplacedCoherentState>) {
          return pow_int(z - std::conj(st.alpha), st.n) * inv_sqrt_factorial(st.n) *
                 exp_guarded(st.alpha * z, "displaced");
        } else if constexpr (std::is_same_v<T, CatState>) {
          const cplx w = st.alpha * z;
          if (std::abs(w.real()) > kExpArgMax)
            throw magnitude_overflow_error("cat: exp overflow");
          return st.parity == Parity::even ? std::cosh(w) : std::sinh(w);
        } else if constexpr (std::is_same_v<T, QutritState>) {
          return qutrit_sector_sum(st.sector, st.alpha, z);
        } else if constexpr (std::is_same_v<T, QCoherentState>) {
          return q_exponential(QParameter(st.q), st.alpha * z, t);
        } else {  // CoefficientState
          cplx sum = 0.0, mono = 1.0;  // mono = z^n / sqrt(n!)
          for (std::size_t n = 0; n < st.c.size(); ++n) {
            if (n > 0) mono *= z / std::sqrt(static_cast<double>(n));
            sum += st.c[n] * mono;
          }
          return sum;
        }
      },
      s.variant());
  check_finite(result, "eval_state");
  return result;
}

cplx eval_state_derivative(const StateSpec& s, cplx z, const Truncation& t) {
  t.validate();
  cplx result = std::visit(
      [&](const auto& st) -> cplx {
        using T = std::decay_t<decltype(st)>;
        if constexpr (std::is_same_v<T, FockState>) {
          if (st.n == 0) return 0.0;
          return static_cast<double>(st.n) * pow_int(z, st.n - 1) *
                 inv_sqrt_factorial(st.n);
        } else if constexpr (std::is_same_v<T, CoherentState>) {
          return st.alpha * exp_guarded(st.alpha * z, "coherent");
        } else if constexpr (std::is_same_v<T, DisplacedCoherentState>) {
          const cplx u = z - std::conj(st.alpha);
          const cplx poly = st.n == 0
                                ? st.alpha * cplx(1.0, 0.0)
                                : static_cast<double>(st.n) * pow_int(u, st.n - 1) +
                                      st.alpha * pow_int(u, st.n);
          return poly * inv_sqrt_factorial(st.n) * exp_guarded(st.alpha * z, "displaced");
        } else if constexpr (std::is_same_v<T, CatState>) {
          const cplx w = st.alpha * z;
          if (std::abs(w.real()) > kExpArgMax)
            throw magnitude_overflow_error("cat: exp overflow");
          return st.alpha * (st.parity == Parity::even ? std::sinh(w) : std::cosh(w));
        } else if constexpr (std::is_same_v<T, QutritState>) {
          // d/dz Psi_s = alpha Psi_{(s+2) mod 3}
          return st.alpha * qutrit_sector_sum((st.sector + 2) % 3, st.alpha, z);
        } else if constexpr (std::is_same_v<T, QCoherentState>) {
          if (st.q > 0.0 && st.q < 1.0 && !(std::abs(st.alpha * z) < 1.0 / (1.0 - st.q)))
            throw domain_error("qcoherent derivative: outside convergence disk");
          if (QParameter(st.q).near_classical())
            return st.alpha * exp_guarded(st.alpha * z, "qcoherent");
          return qcoherent_derivative_series(st, z, t);
        } else {  // CoefficientState
          // Psi' = sum_{n>=1} c_n sqrt(n) z^{n-1}/sqrt((n-1)!)
          cplx sum = 0.0, mono = 1.0;  // mono = z^{n-1}/sqrt((n-1)!)
          for (std::size_t n = 1; n < st.c.size(); ++n) {
            if (n > 1) mono *= z / std::sqrt(static_cast<double>(n - 1));
            sum += st.c[n] * std::sqrt(static_cast<double>(n)) * mono;
          }
          return sum;
        }
      },
      s.variant());
  check_finite(result, "eval_state_derivative");
  return result;
}

cplx eval_state_schwarz(const StateSpec& s, cplx w, const Truncation& t) {
  return std::conj(eval_state(s, std::conj(w), t));
}

cplx eval_state_schwarz_derivative(const StateSpec& s, cplx w, const Truncation& t) {
  return std::conj(eval_state_derivative(s, std::conj(w), t));
}

cplx inner_product_coherent(cplx beta, cplx alpha) {
  return exp_guarded(std::conj(beta) * alpha, "inner_product_coherent");
}

std::pair<cplx, cplx> cat_components(cplx alpha, cplx z) {
  const cplx w = alpha * z;
  if (std::abs(w.real()) > kExpArgMax)
    throw magnitude_overflow_error("cat_components: exp overflow");
  return {std::cosh(w), std::sinh(w)};
}

std::array<cplx, 3> qutrit_components(cplx alpha, cplx z) {
  return {qutrit_sector_sum(0, alpha, z), qutrit_sector_sum(1, alpha, z),
          qutrit_sector_sum(2, alpha, z)};
}

// ---------------------------------------------------------------------------
// Point structure
// ---------------------------------------------------------------------------

namespace {

// Durand-Kerner simultaneous root iteration for sum c_n z^n/sqrt(n!).
std::vector<std::pair<cplx, int>> polynomial_zeros(const std::vector<cplx>& c_in) {
  // monomial-basis coefficients a_n = c_n/sqrt(n!)
  std::vector<cplx> a(c_in.size());
  for (std::size_t n = 0; n < c_in.size(); ++n)
    a[n] = c_in[n] * std::exp(-0.5 * std::lgamma(n + 1.0));
  while (!a.empty() && std::abs(a.back()) == 0.0) a.pop_back();
  if (a.size() <= 1) return {};
  const int deg = static_cast<int>(a.size()) - 1;

  auto eval_poly = [&](cplx z) {
    cplx acc = 0.0;
    for (int n = deg; n >= 0; --n) acc = acc * z + a[n];
    return acc;
  };

  // Cauchy bound for starting circle
  double bound = 0.0;
  for (int n = 0; n < deg; ++n) bound = std::max(bound, std::abs(a[n] / a[deg]));
  bound += 1.0;

  std::vector<cplx> roots(deg);
  for (int k = 0; k < deg; ++k)
    roots[k] = 0.5 * bound * std::polar(1.0, 2.0 * M_PI * (k + 0.25) / deg);

  for (int iter = 0; iter < 400; ++iter) {
    double moved = 0.0;
    for (int k = 0; k < deg; ++k) {
      cplx denom = a[deg];
      for (int j = 0; j < deg; ++j)
        if (j != k) denom *= roots[k] - roots[j];
      if (std::abs(denom) < 1e-300) continue;
      const cplx delta = eval_poly(roots[k]) / denom;
      roots[k] -= delta;
      moved = std::max(moved, std::abs(delta));
    }
    if (moved < 1e-14 * (1.0 + bound)) break;
  }

  // cluster into multiplicities
  std::vector<std::pair<cplx, int>> out;
  std::vector<bool> used(deg, false);
  const double cluster_eps = 1e-7 * (1.0 + bound);
  for (int k = 0; k < deg; ++k) {
    if (used[k]) continue;
    cplx sum = roots[k];
    int mult = 1;
    used[k] = true;
    for (int j = k + 1; j < deg; ++j) {
      if (!used[j] && std::abs(roots[j] - roots[k]) < cluster_eps) {
        sum += roots[j];
        ++mult;
        used[j] = true;
      }
    }
    out.emplace_back(sum / static_cast<double>(mult), mult);
  }
  return out;
}

}  // namespace

PointStructure point_structure(const StateSpec& s) {
  return std::visit(
      [&](const auto& st) -> PointStructure {
        using T = std::decay_t<decltype(st)>;
        if constexpr (std::is_same_v<T, FockState>) {
          PointStructure ps;
          if (st.n > 0) ps.zeros.emplace_back(cplx(0.0, 0.0), st.n);
          return ps;
        } else if constexpr (std::is_same_v<T, CoherentState>) {
          return PointStructure{{}, st.alpha};
        } else if constexpr (std::is_same_v<T, DisplacedCoherentState>) {
          PointStructure ps{{}, st.alpha};
          if (st.n > 0) ps.zeros.emplace_back(std::conj(st.alpha), st.n);
          return ps;
        } else if constexpr (std::is_same_v<T, CoefficientState>) {
          return PointStructure{polynomial_zeros(st.c), cplx(0.0, 0.0)};
        } else {
          throw domain_error(
              "point_structure: state has an infinite zero set (cat/qutrit/qcoherent)");
        }
      },
      s.variant());
}

int anchor_multiplicity(const StateSpec& s) {
  return std::visit(
      [](const auto& st) -> int {
        using T = std::decay_t<decltype(st)>;
        if constexpr (std::is_same_v<T, FockState>) {
          return st.n;
        } else if constexpr (std::is_same_v<T, DisplacedCoherentState>) {
          return st.alpha == cplx(0.0, 0.0) ? st.n : 0;
        } else if constexpr (std::is_same_v<T, CatState>) {
          return st.parity == Parity::odd ? 1 : 0;
        } else if constexpr (std::is_same_v<T, QutritState>) {
          return st.sector;  // Psi_s(z) ~ z^s near the origin
        } else if constexpr (std::is_same_v<T, CoefficientState>) {
          for (std::size_t n = 0; n < st.c.size(); ++n)
            if (std::abs(st.c[n]) != 0.0) return static_cast<int>(n);
          return 0;
        } else {
          return 0;  // coherent, qcoherent: Psi(0) = 1
        }
      },
      s.variant());
}

}  // namespace fockflow
