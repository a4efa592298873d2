#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace spshrink {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr Complex kI{0.0, 1.0};

/// Spectral (operator 2-) norm.
double op_norm(const ComplexMatrix& m);

/// Ratio of extreme singular values; infinity for singular input.
double condition_number(const ComplexMatrix& m);

double min_singular_value(const ComplexMatrix& m);

bool is_square(const ComplexMatrix& m);
bool is_finite(const ComplexMatrix& m);

/// Throws InvalidArgument unless `m` is square with finite entries.
void require_square_finite(const ComplexMatrix& m, const char* what);

ComplexMatrix identity(Eigen::Index n);
ComplexMatrix diagonal(const std::vector<Complex>& entries);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix block_diagonal(const ComplexMatrix& a, const ComplexMatrix& b);

/// ‖AB − BA‖ in the operator norm.
double commutator_norm(const ComplexMatrix& a, const ComplexMatrix& b);

/// ‖A − B‖ / (1 + ‖B‖): the hybrid error used for matrix comparisons.
double relative_error(const ComplexMatrix& a, const ComplexMatrix& b);

/// exp(A) for skew-Hermitian A, via the Hermitian eigendecomposition of −iA.
ComplexMatrix expm_skew_hermitian(const ComplexMatrix& a);

}  // namespace spshrink
