#include "fockflow/qcalc.hpp"

#include <cmath>

namespace fockflow {

double q_number(int n, const QParameter& q) {
  if (n < 0) throw domain_error("q_number: n must be >= 0");
  if (q.near_classical()) return static_cast<double>(n);
  // summed form 1 + q + ... + q^{n-1}: stable through q -> 1
  double sum = 0.0, pw = 1.0;
  for (int k = 0; k < n; ++k) {
    sum += pw;
    pw *= q.q;
  }
  return sum;
}

double q_factorial_log(int n, const QParameter& q) {
  if (n < 0) throw domain_error("q_factorial_log: n must be >= 0");
  if (q.near_classical()) return std::lgamma(n + 1.0);
  double acc = 0.0;
  for (int k = 1; k <= n; ++k) acc += std::log(q_number(k, q));
  return acc;
}

namespace {

cplx q_exp_series(const QParameter& q, cplx x, const Truncation& t) {
  cplx sum = 1.0, term = 1.0;
  int quiet = 0;
  for (int n = 1; n <= t.max_terms; ++n) {
    term *= x / q_number(n, q);
    sum += term;
    if (!std::isfinite(sum.real()) || !std::isfinite(sum.imag()))
      throw magnitude_overflow_error("q_exponential: partial sum overflow");
    if (std::abs(term) < t.tol * std::abs(sum)) {
      // require two consecutive small terms so a zero term cannot stop early
      if (++quiet >= 2) return sum;
    } else {
      quiet = 0;
    }
  }
  if (quiet >= 1) return sum;
  throw convergence_error("q_exponential: series did not settle within max_terms");
}

}  // namespace

cplx q_exponential(const QParameter& q, cplx x, const Truncation& t) {
  t.validate();
  if (q.near_classical()) {
    if (x.real() > kExpArgMax) throw magnitude_overflow_error("q_exponential: exp overflow");
    return std::exp(x);
  }
  if (q.q < 1.0) {
    const double radius = 1.0 / (1.0 - q.q);  // nearest pole of the product
    if (std::abs(x) >= radius)
      throw domain_error("q_exponential: |x| outside the q<1 convergence disk");
  }
  return q_exp_series(q, x, t);
}

cplx q_exponential_product(const QParameter& q, cplx x, const Truncation& t) {
  t.validate();
  if (q.near_classical())
    throw domain_error("q_exponential_product: product form undefined at q ~ 1");
  cplx prod = 1.0;
  if (q.q > 1.0) {
    const double r = 1.0 - 1.0 / q.q;
    double qk = 1.0;
    for (int k = 0; k < t.max_terms * 8; ++k) {
      const cplx factor = 1.0 + x * (r / qk);
      prod *= factor;
      if (!std::isfinite(prod.real()) || !std::isfinite(prod.imag()))
        throw magnitude_overflow_error("q_exponential_product: overflow");
      if (std::abs(factor - 1.0) < t.tol) return prod;
      qk *= q.q;
    }
  } else {
    const double r = 1.0 - q.q;
    double qk = 1.0;
    for (int k = 0; k < t.max_terms * 8; ++k) {
      const cplx d = 1.0 - qk * r * x;
      if (std::abs(d) < 1e-12)
        throw singularity_error("q_exponential_product: x at a pole of the q<1 product");
      prod /= d;
      if (std::abs(d - 1.0) < t.tol) return prod;
      qk *= q.q;
    }
  }
  throw convergence_error("q_exponential_product: factors did not settle");
}

cplx q_factor_root(const QParameter& q, int k) {
  if (k < 0) throw domain_error("q_factor_root: k must be >= 0");
  if (q.q > 1.0) return -std::pow(q.q, k + 1) / (q.q - 1.0);
  return 1.0 / ((1.0 - q.q) * std::pow(q.q, k));
}

}  // namespace fockflow
