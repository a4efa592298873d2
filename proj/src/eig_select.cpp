#include "spshrink/eig_select.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "spshrink/eig.hpp"
#include "spshrink/error.hpp"
#include "spshrink/spectrum.hpp"

namespace spshrink {

namespace {

void require_unitary(const ComplexMatrix& u, double tol, const char* what) {
  require_square_finite(u, what);
  if (op_norm(u.adjoint() * u - identity(u.rows())) > tol)
    throw Error(ErrorCode::InvalidArgument, std::string(what) + " is not unitary");
}

// Nearest eigenvalue in `candidates` to v; throws on a tie between distinct
// candidates.
std::size_t nearest_unambiguous(const std::vector<Complex>& candidates, Complex v, double tie_tol) {
  std::size_t best = 0;
  double d1 = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const double d = std::abs(candidates[i] - v);
    if (d < d1) {
      d1 = d;
      best = i;
    }
  }
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (std::abs(candidates[i] - candidates[best]) <= tie_tol) continue;
    if (std::abs(candidates[i] - v) <= d1 + tie_tol)
      throw Error(ErrorCode::AmbiguousContinuation, "two eigenvalues are equally near the tracked value",
                  std::abs(candidates[i] - v) - d1);
  }
  return best;
}

std::vector<Complex> eigenvalues_of(const ComplexMatrix& x) { return spectrum_of(x).values(); }

}  // namespace

bool in_fundamental_domain(const AnglePoint& p, double tol) {
  const auto& x = p.x;
  if (x.empty()) return false;
  const double sum = std::accumulate(x.begin(), x.end(), 0.0);
  if (std::abs(sum) > tol) return false;
  for (std::size_t i = 0; i + 1 < x.size(); ++i)
    if (x[i] > x[i + 1] + tol) return false;
  return x.back() <= x.front() + 1.0 + tol;
}

AnglePoint su_fundamental_representative(const ComplexMatrix& u, double tol) {
  require_unitary(u, tol, "su_select input");
  if (std::abs(u.determinant() - 1.0) > tol)
    throw Error(ErrorCode::NotSpecialUnitary, "determinant is not 1", std::abs(u.determinant() - 1.0));
  const auto n = static_cast<std::size_t>(u.rows());
  std::vector<double> theta;
  theta.reserve(n);
  for (Complex z : eigenvalues_of(u)) {
    double t = std::arg(z) / (2.0 * kPi);
    if (t < 0.0) t += 1.0;
    if (t >= 1.0) t -= 1.0;
    theta.push_back(t);
  }
  std::sort(theta.begin(), theta.end());
  const double total = std::accumulate(theta.begin(), theta.end(), 0.0);
  const long winding = std::lround(total);
  if (std::abs(total - static_cast<double>(winding)) > 1e-6)
    throw Error(ErrorCode::RepresentativeNotFound, "eigenvalue angles do not sum to an integer",
                std::abs(total - static_cast<double>(winding)));

  std::optional<AnglePoint> found;
  const long nn = static_cast<long>(n);
  for (std::size_t r = 0; r < n; ++r) {
    const long lifted = winding + static_cast<long>(r);
    if (lifted % nn != 0) continue;
    const double shift = static_cast<double>(lifted / nn);
    AnglePoint candidate;
    candidate.x.reserve(n);
    for (std::size_t j = r; j < n; ++j) candidate.x.push_back(theta[j] - shift);
    for (std::size_t j = 0; j < r; ++j) candidate.x.push_back(theta[j] + 1.0 - shift);
    if (!in_fundamental_domain(candidate, 1e-9)) continue;
    if (found) throw Error(ErrorCode::NumericalFailure, "fundamental-domain representative is not unique");
    found = std::move(candidate);
  }
  if (!found) throw Error(ErrorCode::RepresentativeNotFound, "no fundamental-domain representative");
  return *found;
}

Complex su_select(const ComplexMatrix& u, double tol) {
  const AnglePoint p = su_fundamental_representative(u, tol);
  return std::polar(1.0, 2.0 * kPi * p.x.front());
}

Complex un_lambda_select(const ComplexMatrix& u, Complex lambda, double tol) {
  require_unitary(u, tol, "un_lambda_select input");
  if (std::abs(std::abs(lambda) - 1.0) > tol)
    throw Error(ErrorCode::InvalidArgument, "lambda must have modulus 1");
  const auto values = eigenvalues_of(u);
  const Spectrum spec(values);
  if (spec.distance_to(lambda) <= tol)
    throw Error(ErrorCode::LambdaInSpectrum, "lambda is an eigenvalue", spec.distance_to(lambda));
  Complex best = values.front();
  double best_arg = -1.0;
  for (Complex z : values) {
    // Argument measured from the ray through λ, in (0, 2π).
    double a = std::arg(z * std::conj(lambda));
    if (a <= 0.0) a += 2.0 * kPi;
    if (a > best_arg) {
      best_arg = a;
      best = z;
    }
  }
  return best;
}

double hn_select(const ComplexMatrix& x, double tol) {
  require_square_finite(x, "hn_select input");
  if (op_norm(x - x.adjoint()) > tol * (1.0 + op_norm(x)))
    throw Error(ErrorCode::NotHermitian, "input is not Hermitian");
  const HermitianEig he = hermitian_eig(x);
  return he.eigenvalues(he.eigenvalues.size() - 1);
}

LocalSelectionBall local_selection_ball(const ComplexMatrix& x, Complex lambda0) {
  require_square_finite(x, "local_select input");
  const EigDecomposition eig = eig_decompose(x);
  const double scale = 1.0 + op_norm(x);
  const double cluster = 1e-6 * scale;
  int multiplicity = 0;
  double gap = std::numeric_limits<double>::infinity();
  for (Complex z : eig.spectrum) {
    const double d = std::abs(z - lambda0);
    if (d <= cluster) ++multiplicity;
    else gap = std::min(gap, d);
  }
  if (multiplicity != 1)
    throw Error(ErrorCode::NoSimpleEigenvalue, "lambda0 is not a simple eigenvalue of X",
                static_cast<double>(multiplicity));
  LocalSelectionBall ball;
  ball.center = lambda0;
  ball.disk_radius = std::isfinite(gap) ? 0.5 * gap : 1.0 + scale;
  if (eig.semisimple) ball.max_radius = ball.disk_radius / eig.condition;
  return ball;
}

Complex local_select(const ComplexMatrix& x, Complex lambda0, double radius, const ComplexMatrix& y) {
  const LocalSelectionBall ball = local_selection_ball(x, lambda0);
  if (y.rows() != x.rows() || y.cols() != x.cols())
    throw Error(ErrorCode::DimensionMismatch, "Y and X differ in size");
  if (ball.max_radius && radius > *ball.max_radius)
    throw Error(ErrorCode::PreconditionViolated, "radius exceeds the certified selection radius",
                *ball.max_radius);
  const double dist = op_norm(y - x);
  if (!(dist < radius))
    throw Error(ErrorCode::PreconditionViolated, "Y lies outside the selection ball", dist);
  std::optional<Complex> chosen;
  int count = 0;
  for (Complex z : eigenvalues_of(y)) {
    if (std::abs(z - lambda0) < ball.disk_radius) {
      ++count;
      chosen = z;
    }
  }
  if (count != 1)
    throw Error(ErrorCode::AmbiguousSelection, "selection disk does not hold exactly one eigenvalue",
                static_cast<double>(count));
  return *chosen;
}

EigenPath track_eigenvalue(const std::vector<ComplexMatrix>& path, Complex start,
                           std::vector<double> parameters, double tol) {
  if (path.empty()) throw Error(ErrorCode::InvalidArgument, "empty path");
  if (parameters.empty()) {
    parameters.resize(path.size());
    std::iota(parameters.begin(), parameters.end(), 0.0);
  }
  if (parameters.size() != path.size())
    throw Error(ErrorCode::SizeMismatch, "one parameter per path matrix is required");
  EigenPath out;
  out.parameters = std::move(parameters);
  const auto first = eigenvalues_of(path.front());
  const double scale0 = 1.0 + op_norm(path.front());
  const double start_dist = Spectrum(first).distance_to(start);
  if (start_dist > 1e-8 * scale0)
    throw Error(ErrorCode::BadStart, "start is not an eigenvalue of path[0]", start_dist);
  Complex current = first[nearest_unambiguous(first, start, 10.0 * tol * scale0)];
  out.values.push_back(current);
  for (std::size_t k = 1; k < path.size(); ++k) {
    const auto candidates = eigenvalues_of(path[k]);
    const double tie = 10.0 * tol * (1.0 + op_norm(path[k]));
    const Complex next = candidates[nearest_unambiguous(candidates, current, tie)];
    out.max_jump = std::max(out.max_jump, std::abs(next - current));
    current = next;
    out.values.push_back(current);
  }
  return out;
}

EigenPath sweep_selector(const std::function<ComplexMatrix(double)>& path,
                         const std::function<Complex(const ComplexMatrix&)>& selector, double t0,
                         double t1, double step, bool keep_matrices) {
  if (!(step > 0.0) || !(t1 >= t0)) throw Error(ErrorCode::InvalidArgument, "bad sweep range");
  EigenPath out;
  const auto count = static_cast<std::size_t>(std::llround((t1 - t0) / step));
  for (std::size_t k = 0; k <= count; ++k) {
    const double t = t0 + static_cast<double>(k) * step;
    const ComplexMatrix x = path(t);
    const Complex v = selector(x);
    if (!out.values.empty()) out.max_jump = std::max(out.max_jump, std::abs(v - out.values.back()));
    out.parameters.push_back(t);
    out.values.push_back(v);
    if (keep_matrices) out.matrices.push_back(x);
  }
  return out;
}

ComplexMatrix xz_matrix(int n, Complex z) {
  if (n < 1) throw Error(ErrorCode::UnsupportedDimension, "n must be positive");
  ComplexMatrix x = ComplexMatrix::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) x(i, i + 1) = 1.0;
  x(n - 1, 0) += z;
  return x;
}

MonodromyResult monodromy_Xz(int n, double r, int steps) {
  if (n < 2) throw Error(ErrorCode::UnsupportedDimension, "monodromy needs n ≥ 2");
  if (!(r > 0.0)) throw Error(ErrorCode::InvalidArgument, "loop radius must be positive");
  if (steps < 64 * n) throw Error(ErrorCode::InvalidArgument, "need at least 64·n steps");
  MonodromyResult out;
  out.n = n;
  out.r = r;
  out.steps = steps;

  std::vector<std::vector<Complex>> eigs;
  eigs.reserve(static_cast<std::size_t>(steps) + 1);
  for (int k = 0; k <= steps; ++k) {
    const Complex z = k == steps ? Complex(r) : std::polar(r, 2.0 * kPi * k / steps);
    eigs.push_back(eigenvalues_of(xz_matrix(n, z)));
  }
  const double tie = 10.0 * 1e-9 * (1.0 + std::max(1.0, r));
  out.start_values = eigs.front();
  for (Complex start : out.start_values) {
    Complex current = start;
    for (std::size_t k = 1; k < eigs.size(); ++k) current = eigs[k][nearest_unambiguous(eigs[k], current, tie)];
    out.end_values.push_back(current);
    out.permutation.push_back(static_cast<int>(nearest_unambiguous(out.start_values, current, tie)));
  }

  std::vector<int> sorted = out.permutation;
  std::sort(sorted.begin(), sorted.end());
  bool bijective = true;
  for (int i = 0; i < n; ++i) bijective = bijective && sorted[static_cast<std::size_t>(i)] == i;
  int length = 0;
  if (bijective) {
    int j = 0;
    do {
      j = out.permutation[static_cast<std::size_t>(j)];
      ++length;
    } while (j != 0 && length <= n);
  }
  out.single_cycle = bijective && length == n;

  const Complex expected = std::polar(1.0, 2.0 * kPi / n);
  for (std::size_t j = 0; j < out.start_values.size(); ++j)
    out.ratio_defect = std::max(out.ratio_defect, std::abs(out.end_values[j] / out.start_values[j] - expected));
  return out;
}

}  // namespace spshrink
