#include "spshrink/subspace.hpp"

#include <algorithm>

#include <Eigen/SVD>

#include "spshrink/error.hpp"

namespace spshrink {

Subspace Subspace::span(const ComplexMatrix& spanning, double rank_tol) {
  const Eigen::Index n = spanning.rows();
  if (spanning.cols() == 0) return zero(n);
  Eigen::JacobiSVD<ComplexMatrix> svd(spanning, Eigen::ComputeThinU);
  const Eigen::VectorXd& sv = svd.singularValues();
  Eigen::Index rank = 0;
  while (rank < sv.size() && sv(rank) > rank_tol * std::max(sv(0), 1e-300)) ++rank;
  if (sv.size() == 0 || sv(0) == 0.0) rank = 0;
  return Subspace(n, svd.matrixU().leftCols(rank));
}

Subspace Subspace::from_orthonormal(ComplexMatrix basis, double tol) {
  const Eigen::Index d = basis.cols();
  if (d > 0 && op_norm(basis.adjoint() * basis - identity(d)) > tol)
    throw Error(ErrorCode::InvalidArgument, "basis columns are not orthonormal");
  const Eigen::Index n = basis.rows();
  return Subspace(n, std::move(basis));
}

Subspace Subspace::zero(Eigen::Index ambient_dim) {
  return Subspace(ambient_dim, ComplexMatrix(ambient_dim, 0));
}

Subspace Subspace::full(Eigen::Index ambient_dim) { return Subspace(ambient_dim, identity(ambient_dim)); }

Subspace Subspace::line(const ComplexVector& v) {
  const double norm = v.norm();
  if (norm == 0.0) throw Error(ErrorCode::InvalidArgument, "line spanned by the zero vector");
  return Subspace(v.size(), ComplexMatrix(v / norm));
}

Subspace Subspace::random(Eigen::Index ambient_dim, Eigen::Index dim, Rng& rng) {
  if (dim < 0 || dim > ambient_dim) throw Error(ErrorCode::InvalidArgument, "subspace dimension out of range");
  return Subspace(ambient_dim, haar_unitary(ambient_dim, rng).leftCols(dim));
}

ComplexMatrix projection(const Subspace& w) {
  const Eigen::Index n = w.ambient_dim();
  if (w.dim() == 0) return ComplexMatrix::Zero(n, n);
  return w.basis() * w.basis().adjoint();
}

bool projections_commute(const Subspace& w, const Subspace& w2, double tol) {
  if (w.ambient_dim() != w2.ambient_dim())
    throw Error(ErrorCode::DimensionMismatch, "subspaces live in different ambient spaces");
  return commutator_norm(projection(w), projection(w2)) <= tol;
}

Subspace kernel(const ComplexMatrix& x, double tol) {
  return null_space(x, tol * op_norm(x));
}

Subspace null_space(const ComplexMatrix& x, double threshold) {
  const Eigen::Index n = x.cols();
  Eigen::JacobiSVD<ComplexMatrix> svd(x, Eigen::ComputeFullV);
  const Eigen::VectorXd& sv = svd.singularValues();
  Eigen::Index nullity = n - sv.size();
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) <= threshold) ++nullity;
  return Subspace::from_orthonormal(svd.matrixV().rightCols(nullity));
}

double subspace_distance(const Subspace& w, const Subspace& w2) {
  if (w.ambient_dim() != w2.ambient_dim())
    throw Error(ErrorCode::DimensionMismatch, "subspaces live in different ambient spaces");
  return op_norm(projection(w) - projection(w2));
}

Subspace subspace_sum(const Subspace& w, const Subspace& w2) {
  if (w.ambient_dim() != w2.ambient_dim())
    throw Error(ErrorCode::DimensionMismatch, "subspaces live in different ambient spaces");
  ComplexMatrix joined(w.ambient_dim(), w.dim() + w2.dim());
  joined << w.basis(), w2.basis();
  return Subspace::span(joined, 1e-8);
}

double containment_defect(const Subspace& w, const Subspace& w2) {
  if (w.ambient_dim() != w2.ambient_dim())
    throw Error(ErrorCode::DimensionMismatch, "subspaces live in different ambient spaces");
  if (w.dim() == 0) return 0.0;
  const ComplexMatrix residual = w.basis() - projection(w2) * w.basis();
  return op_norm(residual);
}

}  // namespace spshrink
