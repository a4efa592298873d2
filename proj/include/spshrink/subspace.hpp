#pragma once

#include "spshrink/matrix.hpp"
#include "spshrink/random.hpp"

namespace spshrink {

/// Element of the Grassmannian of ℂⁿ, held as an orthonormal column basis.
class Subspace {
 public:
  /// Orthonormalizes the columns of `spanning` (rank-revealing; columns that
  /// are numerically dependent at relative `rank_tol` are dropped).
  static Subspace span(const ComplexMatrix& spanning, double rank_tol = 1e-10);

  /// Takes `basis` as already orthonormal; throws InvalidArgument otherwise.
  static Subspace from_orthonormal(ComplexMatrix basis, double tol = 1e-8);

  static Subspace zero(Eigen::Index ambient_dim);
  static Subspace full(Eigen::Index ambient_dim);
  static Subspace line(const ComplexVector& v);
  static Subspace random(Eigen::Index ambient_dim, Eigen::Index dim, Rng& rng);

  Eigen::Index ambient_dim() const noexcept { return ambient_dim_; }
  Eigen::Index dim() const noexcept { return basis_.cols(); }
  const ComplexMatrix& basis() const noexcept { return basis_; }

 private:
  Subspace(Eigen::Index ambient_dim, ComplexMatrix basis)
      : ambient_dim_(ambient_dim), basis_(std::move(basis)) {}

  Eigen::Index ambient_dim_ = 0;
  ComplexMatrix basis_;
};

/// P_W = B·Bᴴ.
ComplexMatrix projection(const Subspace& w);

/// ‖P_W P_W' − P_W' P_W‖ ≤ tol.
bool projections_commute(const Subspace& w, const Subspace& w2, double tol = 1e-10);

/// Numerical null space: right singular vectors with σ ≤ tol·‖X‖.
Subspace kernel(const ComplexMatrix& x, double tol = 1e-8);

/// Right singular vectors with σ ≤ threshold (absolute).
Subspace null_space(const ComplexMatrix& x, double threshold);

/// Gap metric ‖P_W − P_W'‖.
double subspace_distance(const Subspace& w, const Subspace& w2);

/// W + W'.
Subspace subspace_sum(const Subspace& w, const Subspace& w2);

/// ‖(I − P_W')·B_W‖: zero iff W ⊆ W'.
double containment_defect(const Subspace& w, const Subspace& w2);

}  // namespace spshrink
