#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "spshrink/matrix.hpp"

namespace spshrink {

/// Angle coordinates (in full turns) of the fundamental domain
/// F = {x : Σx = 0, x₁ ≤ … ≤ xₙ ≤ x₁ + 1}.
struct AnglePoint {
  std::vector<double> x;
};

/// Σx = 0 and the monotone/width conditions, within `tol`.
bool in_fundamental_domain(const AnglePoint& p, double tol = 1e-12);

/// The unique F-representative whose exponentials enumerate sp(U).
/// Candidates are the cyclic rotations of the sorted angles θ ∈ [0,1)ⁿ with
/// the wrapped entries lifted by one, shifted by an integer to make the sum
/// vanish; exactly one rotation admits an integer shift.
AnglePoint su_fundamental_representative(const ComplexMatrix& u, double tol = 1e-8);

/// Continuous eigenvalue selection on SU(n): exp(2πi x₁) of the
/// F-representative.
Complex su_select(const ComplexMatrix& u, double tol = 1e-8);

/// On U(n)_λ: the eigenvalue with the largest argument on the branch cut
/// along the ray through λ.
Complex un_lambda_select(const ComplexMatrix& u, Complex lambda, double tol = 1e-8);

/// λ_max of a Hermitian matrix.
double hn_select(const ComplexMatrix& x, double tol = 1e-8);

/// Disk radius ε around a simple eigenvalue λ₀ of X and the largest
/// perturbation radius for which exactly one eigenvalue of every Y with
/// ‖Y − X‖ < radius stays in the disk. `max_radius` is certified by
/// Bauer–Fike when X is semisimple; it is absent otherwise and local_select
/// then relies on counting eigenvalues of Y alone.
struct LocalSelectionBall {
  Complex center;
  double disk_radius = 0.0;
  std::optional<double> max_radius;
};

LocalSelectionBall local_selection_ball(const ComplexMatrix& x, Complex lambda0);

/// The unique eigenvalue of Y in the disk around the simple eigenvalue λ₀
/// of X.
Complex local_select(const ComplexMatrix& x, Complex lambda0, double radius, const ComplexMatrix& y);

struct EigenPath {
  std::vector<double> parameters;
  std::vector<Complex> values;
  std::vector<ComplexMatrix> matrices;  // optional; empty unless requested
  double max_jump = 0.0;
};

/// Nearest-match continuation of the eigenvalue `start` of path[0].
/// Two distinct candidates equally near within 10·tol·(1+‖X‖) raise
/// AmbiguousContinuation.
EigenPath track_eigenvalue(const std::vector<ComplexMatrix>& path, Complex start,
                           std::vector<double> parameters = {}, double tol = 1e-9);

/// Evaluates a scalar selector along a parameterized path.
EigenPath sweep_selector(const std::function<ComplexMatrix(double)>& path,
                         const std::function<Complex(const ComplexMatrix&)>& selector, double t0,
                         double t1, double step, bool keep_matrices = false);

/// Superdiagonal of ones and z in the bottom-left corner; k(x) = xⁿ − z.
ComplexMatrix xz_matrix(int n, Complex z);

struct MonodromyResult {
  int n = 0;
  double r = 0.0;
  int steps = 0;
  std::vector<Complex> start_values;
  std::vector<Complex> end_values;
  /// permutation[j] = index of the start value reached by following
  /// start_values[j] once around the loop.
  std::vector<int> permutation;
  bool single_cycle = false;
  /// max_j |end_j / start_j − exp(2πi/n)|.
  double ratio_defect = 0.0;
};

/// Drives z once around r·exp(2πiθ) and tracks every eigenvalue of X_z.
MonodromyResult monodromy_Xz(int n, double r, int steps);

}  // namespace spshrink
