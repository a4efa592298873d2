#include "spshrink/matrix.hpp"

#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "spshrink/error.hpp"

namespace spshrink {

namespace {

Eigen::VectorXd singular_values(const ComplexMatrix& m) {
  return Eigen::JacobiSVD<ComplexMatrix>(m).singularValues();
}

}  // namespace

double op_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  return singular_values(m)(0);
}

double condition_number(const ComplexMatrix& m) {
  const Eigen::VectorXd s = singular_values(m);
  const double smin = s(s.size() - 1);
  if (smin == 0.0) return std::numeric_limits<double>::infinity();
  return s(0) / smin;
}

double min_singular_value(const ComplexMatrix& m) {
  const Eigen::VectorXd s = singular_values(m);
  return s(s.size() - 1);
}

bool is_square(const ComplexMatrix& m) { return m.rows() == m.cols(); }

bool is_finite(const ComplexMatrix& m) {
  return m.real().allFinite() && m.imag().allFinite();
}

void require_square_finite(const ComplexMatrix& m, const char* what) {
  if (!is_square(m) || m.rows() == 0)
    throw Error(ErrorCode::InvalidArgument, std::string(what) + " must be a non-empty square matrix");
  if (!is_finite(m))
    throw Error(ErrorCode::InvalidArgument, std::string(what) + " has non-finite entries");
}

ComplexMatrix identity(Eigen::Index n) { return ComplexMatrix::Identity(n, n); }

ComplexMatrix diagonal(const std::vector<Complex>& entries) {
  const auto n = static_cast<Eigen::Index>(entries.size());
  ComplexMatrix d = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) d(i, i) = entries[static_cast<std::size_t>(i)];
  return d;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

ComplexMatrix block_diagonal(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out = ComplexMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

double commutator_norm(const ComplexMatrix& a, const ComplexMatrix& b) {
  return op_norm(a * b - b * a);
}

double relative_error(const ComplexMatrix& a, const ComplexMatrix& b) {
  return op_norm(a - b) / (1.0 + op_norm(b));
}

ComplexMatrix expm_skew_hermitian(const ComplexMatrix& a) {
  // a = iH with H = −ia Hermitian.
  const ComplexMatrix h = Complex(0.0, -1.0) * a;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (h + h.adjoint()));
  if (es.info() != Eigen::Success)
    throw Error(ErrorCode::NumericalFailure, "Hermitian eigensolver did not converge");
  ComplexVector phases(h.rows());
  for (Eigen::Index i = 0; i < h.rows(); ++i) phases(i) = std::exp(kI * es.eigenvalues()(i));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace spshrink
