// q-calculus special functions: non-symmetric q-numbers [n]_q, q-factorials,
// and the Jackson q-exponential in both series and product form.
#ifndef FOCKFLOW_QCALC_HPP
#define FOCKFLOW_QCALC_HPP

#include "fockflow/types.hpp"

namespace fockflow {

// Below this distance from q = 1 all q-functions use the classical
// formulas (n, n!, exp) to sidestep cancellation in (q^n - 1)/(q - 1).
inline constexpr double kClassicalQSwitch = 1e-6;

struct QParameter {
  double q = 2.0;

  explicit QParameter(double q_) : q(q_) {
    if (!(q > 0.0)) throw domain_error("QParameter: q must be > 0");
    if (q == 1.0) throw domain_error("QParameter: q must differ from 1");
  }
  bool greater_than_one() const { return q > 1.0; }
  bool near_classical() const { return std::abs(q - 1.0) < kClassicalQSwitch; }
};

// [n]_q = 1 + q + ... + q^{n-1}, evaluated by the summed form.
double q_number(int n, const QParameter& q);

// ln([n]_q!) = sum_{k=1}^n ln [k]_q; log space so n up to a few hundred is safe.
double q_factorial_log(int n, const QParameter& q);

// e_q(x) = sum_n x^n / [n]_q!  For q < 1 requires |x| < 1/(1-q) (nearest pole
// of the product representation).
cplx q_exponential(const QParameter& q, cplx x, const Truncation& t = {});

// Product form: prod_k (1 + x q^{-k} (1 - 1/q)) for q > 1, and the reciprocal
// pole product prod_k 1/(1 - q^k (1-q) x) for q < 1.
cplx q_exponential_product(const QParameter& q, cplx x, const Truncation& t = {});

// Zero (q>1) / pole (q<1) of the k-th product factor, with unit alpha folded
// into x: z_k = -q^{k+1}/(q-1) for q > 1, z_k = 1/((1-q) q^k) for q < 1.
cplx q_factor_root(const QParameter& q, int k);

}  // namespace fockflow

#endif  // FOCKFLOW_QCALC_HPP
