#include "fockflow/lattice.hpp"

#include <cmath>

namespace fockflow::lattice {

double zeta_tail(int s, int M) {
  if (s < 2 || M < 1) throw domain_error("zeta_tail: need s >= 2, M >= 1");
  // Euler-Maclaurin about a = M+1:
  //   sum_{n=M+1}^inf n^-s = a^{1-s}/(s-1) + a^-s/2 + s a^{-s-1}/12
  //                          - s(s+1)(s+2) a^{-s-3}/720 + ...
  const double a = M + 1.0;
  const double sd = s;
  return std::pow(a, 1.0 - sd) / (sd - 1.0) + 0.5 * std::pow(a, -sd) +
         sd * std::pow(a, -sd - 1.0) / 12.0 -
         sd * (sd + 1) * (sd + 2) * std::pow(a, -sd - 3.0) / 720.0 +
         sd * (sd + 1) * (sd + 2) * (sd + 3) * (sd + 4) * std::pow(a, -sd - 5.0) / 30240.0;
}

cplx inv_square_tail(cplx b2, int M) {
  // sum_{n>M} 1/(n^2-b2); geometric expansion needs |b2| well inside (M+1)^2
  if (std::abs(b2) > 0.25 * (M + 1.0) * (M + 1.0))
    throw domain_error("inv_square_tail: offset too large for the tail expansion");
  cplx acc = 0.0, p = 1.0;
  for (int j = 0; j <= 4; ++j) {
    acc += p * zeta_tail(2 * j + 2, M);
    p *= b2;
  }
  return acc;
}

cplx log_tail(cplx c, int M) {
  if (std::abs(c) > 0.25 * (M + 1.0) * (M + 1.0))
    throw domain_error("log_tail: offset too large for the tail expansion");
  // sum_{n>M} ln(1 + c/n^2) = sum_k (-1)^{k+1} c^k/k * zeta_tail(2k, M)
  cplx acc = 0.0, p = c;
  for (int k = 1; k <= 5; ++k) {
    const double sign = (k % 2 == 1) ? 1.0 : -1.0;
    acc += sign * p / static_cast<double>(k) * zeta_tail(2 * k, M);
    p *= c;
  }
  return acc;
}

double wallis_tail(int M) {
  // sum_{n>M} ln(4n^2/(4n^2-1)) = sum_k (1/k) 4^{-k} zeta_tail(2k, M)
  double acc = 0.0, p = 0.25;
  for (int k = 1; k <= 4; ++k) {
    acc += p / static_cast<double>(k) * zeta_tail(2 * k, M);
    p *= 0.25;
  }
  return acc;
}

}  // namespace fockflow::lattice
