#pragma once

#include "spshrink/matrix.hpp"
#include "spshrink/spectrum.hpp"

namespace spshrink {

struct EigOptions {
  /// Semisimple iff an eigenvector matrix with condition ≤ 1/ss_eps exists.
  double ss_eps = 1e-8;
  /// Eigenvalues closer than cluster_tol·(1+‖X‖) are treated as one repeated
  /// eigenvalue when repairing an ill-conditioned eigenbasis.
  double cluster_tol = 1e-6;
  /// Relative singular value threshold for eigenspace null spaces.
  double null_tol = 1e-8;
};

/// X = P·D·P⁻¹ with eigenvalues in the same order as the columns of P.
/// `eigenvalues` is in solver order (matching the columns), `spectrum` in
/// canonical order.
struct EigDecomposition {
  ComplexVector eigenvalues;
  ComplexMatrix eigenvectors;
  Spectrum spectrum;
  bool semisimple = false;
  double condition = 0.0;
};

EigDecomposition eig_decompose(const ComplexMatrix& x, const EigOptions& options = {});

struct HermitianEig {
  Eigen::VectorXd eigenvalues;  // ascending
  ComplexMatrix eigenvectors;   // unitary
};

/// Eigendecomposition of the Hermitian part (X + Xᴴ)/2.
HermitianEig hermitian_eig(const ComplexMatrix& x);

struct PolarDecomposition {
  ComplexMatrix positive;  // (SSᴴ)^{1/2}
  ComplexMatrix unitary;
};

/// S = P·V with P positive definite and V unitary. Throws Singular when
/// σ_min(S) ≤ tol·σ_max(S).
PolarDecomposition polar_decompose(const ComplexMatrix& s, double tol = 1e-12);

}  // namespace spshrink
