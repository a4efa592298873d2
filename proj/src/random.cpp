#include "spshrink/random.hpp"

#include <cmath>

#include <Eigen/QR>

namespace spshrink {

double standard_normal(Rng& rng) { return std::normal_distribution<double>(0.0, 1.0)(rng); }

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Complex complex_normal(Rng& rng) {
  const double re = standard_normal(rng);
  const double im = standard_normal(rng);
  return Complex(re, im) / std::sqrt(2.0);
}

Complex unit_circle_point(Rng& rng) { return std::polar(1.0, uniform(rng, 0.0, 2.0 * kPi)); }

ComplexMatrix ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  ComplexMatrix g(rows, cols);
  const double scale = 1.0 / std::sqrt(static_cast<double>(std::max<Eigen::Index>(rows, 1)));
  // Column-major fill order keeps draws reproducible independent of Eigen's
  // expression evaluation.
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) g(i, j) = scale * complex_normal(rng);
  return g;
}

ComplexMatrix haar_unitary(Eigen::Index n, Rng& rng) {
  const ComplexMatrix g = ginibre(n, n, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < n; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

ComplexMatrix random_hermitian(Eigen::Index n, Rng& rng) {
  const ComplexMatrix g = ginibre(n, n, rng);
  return 0.5 * (g + g.adjoint());
}

ComplexMatrix random_positive_definite(Eigen::Index n, Rng& rng, double lo, double hi) {
  const ComplexMatrix q = haar_unitary(n, rng);
  Eigen::VectorXd d(n);
  for (Eigen::Index i = 0; i < n; ++i) d(i) = uniform(rng, lo, hi);
  const ComplexMatrix p = q * d.cast<Complex>().asDiagonal() * q.adjoint();
  return 0.5 * (p + p.adjoint());
}

ComplexMatrix random_invertible(Eigen::Index n, Rng& rng, double max_cond) {
  for (;;) {
    ComplexMatrix g = ginibre(n, n, rng);
    if (condition_number(g) <= max_cond) return g;
  }
}

ComplexMatrix random_traceless_skew_hermitian(Eigen::Index n, Rng& rng) {
  ComplexMatrix h = random_hermitian(n, rng);
  h -= (h.trace() / static_cast<double>(n)) * identity(n);
  const double norm = op_norm(h);
  if (norm > 0.0) h /= norm;
  return kI * h;
}

}  // namespace spshrink
