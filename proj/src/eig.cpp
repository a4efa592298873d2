#include "spshrink/eig.hpp"

#include <numeric>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "spshrink/error.hpp"

namespace spshrink {

namespace {

// Replaces the eigenvectors of every repeated cluster by an orthonormal basis
// of the numerical eigenspace. Returns false when some eigenspace is too small
// (a defective eigenvalue).
bool repair_eigenbasis(const ComplexMatrix& x, const ComplexVector& values, ComplexMatrix& vectors,
                       const EigOptions& options) {
  const Eigen::Index n = x.rows();
  const double scale = 1.0 + op_norm(x);
  const std::span<const Complex> points(values.data(), static_cast<std::size_t>(values.size()));
  for (const auto& cluster : cluster_points(points, options.cluster_tol * scale)) {
    const auto k = static_cast<Eigen::Index>(cluster.size());
    if (k == 1) continue;
    Complex mean = 0.0;
    for (std::size_t i : cluster) mean += points[i];
    mean /= static_cast<double>(k);
    Eigen::JacobiSVD<ComplexMatrix> svd(x - mean * identity(n), Eigen::ComputeFullV);
    if (svd.singularValues()(n - k) > options.null_tol * scale) return false;
    const ComplexMatrix basis = svd.matrixV().rightCols(k);
    for (Eigen::Index c = 0; c < k; ++c) vectors.col(static_cast<Eigen::Index>(cluster[static_cast<std::size_t>(c)])) = basis.col(c);
  }
  return true;
}

}  // namespace

EigDecomposition eig_decompose(const ComplexMatrix& x, const EigOptions& options) {
  require_square_finite(x, "eig_decompose input");
  Eigen::ComplexEigenSolver<ComplexMatrix> es(x);
  if (es.info() != Eigen::Success)
    throw Error(ErrorCode::NumericalFailure, "complex eigensolver did not converge");

  EigDecomposition out;
  out.eigenvalues = es.eigenvalues();
  out.eigenvectors = es.eigenvectors();
  for (Eigen::Index j = 0; j < out.eigenvectors.cols(); ++j) {
    const double norm = out.eigenvectors.col(j).norm();
    if (norm > 0.0) out.eigenvectors.col(j) /= norm;
  }
  out.spectrum = Spectrum(std::vector<Complex>(out.eigenvalues.data(),
                                               out.eigenvalues.data() + out.eigenvalues.size()));
  const double cap = 1.0 / options.ss_eps;
  out.condition = condition_number(out.eigenvectors);
  if (out.condition <= cap) {
    out.semisimple = true;
    return out;
  }
  ComplexMatrix repaired = out.eigenvectors;
  if (repair_eigenbasis(x, out.eigenvalues, repaired, options)) {
    const double cond = condition_number(repaired);
    if (cond <= cap) {
      out.eigenvectors = std::move(repaired);
      out.condition = cond;
      out.semisimple = true;
    }
  }
  return out;
}

HermitianEig hermitian_eig(const ComplexMatrix& x) {
  require_square_finite(x, "hermitian_eig input");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (x + x.adjoint()));
  if (es.info() != Eigen::Success)
    throw Error(ErrorCode::NumericalFailure, "Hermitian eigensolver did not converge");
  return {es.eigenvalues(), es.eigenvectors()};
}

PolarDecomposition polar_decompose(const ComplexMatrix& s, double tol) {
  require_square_finite(s, "polar_decompose input");
  Eigen::JacobiSVD<ComplexMatrix> svd(s, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::VectorXd& sv = svd.singularValues();
  if (sv(sv.size() - 1) <= tol * sv(0))
    throw Error(ErrorCode::Singular, "matrix is numerically singular", sv(sv.size() - 1));
  const ComplexMatrix& u = svd.matrixU();
  PolarDecomposition out;
  out.positive = u * sv.cast<Complex>().asDiagonal() * u.adjoint();
  out.positive = 0.5 * (out.positive + out.positive.adjoint());
  out.unitary = u * svd.matrixV().adjoint();
  return out;
}

}  // namespace spshrink
