#include "spshrink/reconstruct.hpp"

#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/QR>

#include "spshrink/error.hpp"
#include "spshrink/random.hpp"
#include "spshrink/spectrum.hpp"
#include "spshrink/theta.hpp"

namespace spshrink {

std::string_view to_string(PreserverMode mode) {
  return mode == PreserverMode::Conjugation ? "conjugation" : "transpose_conjugation";
}

ComplexMatrix involution_for_subspace(const Subspace& w) {
  return 2.0 * projection(w) - identity(w.ambient_dim());
}

Subspace psi(const MatrixMap& phi, const Subspace& w, double probe_phase, double kernel_tol) {
  const Eigen::Index n = w.ambient_dim();
  const ComplexMatrix p = projection(w);
  const ComplexMatrix u = p + std::exp(kI * probe_phase) * (identity(n) - p);
  const ComplexMatrix image = phi(u);
  if (image.rows() != n || image.cols() != n)
    throw Error(ErrorCode::DimensionMismatch, "oracle changed the matrix size");
  // Hybrid threshold: I − φ(I) is pure rounding noise, so a purely relative
  // cut would miss the full space.
  Subspace out = null_space(identity(n) - image, kernel_tol * (1.0 + op_norm(image)));
  if (out.dim() != w.dim())
    throw Error(ErrorCode::DimensionDrift, "dim Ψ(W) differs from dim W",
                static_cast<double>(out.dim() - w.dim()));
  return out;
}

ComplexMatrix normalize_gauge(const ComplexMatrix& t) {
  Eigen::Index bi = 0, bj = 0;
  double best = -1.0;
  for (Eigen::Index i = 0; i < t.rows(); ++i)
    for (Eigen::Index j = 0; j < t.cols(); ++j)
      if (std::abs(t(i, j)) > best * (1.0 + 1e-12)) {
        best = std::abs(t(i, j));
        bi = i;
        bj = j;
      }
  if (best <= 0.0) throw Error(ErrorCode::Singular, "cannot normalize the zero matrix");
  return t / t(bi, bj);
}

double projective_error(const ComplexMatrix& t, const ComplexMatrix& t0) {
  const Complex denom = t0.cwiseAbs2().sum();
  if (std::abs(denom) == 0.0) throw Error(ErrorCode::InvalidArgument, "reference matrix is zero");
  const Complex c = (t0.adjoint() * t).trace() / denom;
  return op_norm(t - c * t0) / op_norm(c * t0);
}

namespace {

ComplexMatrix apply_form(const ComplexMatrix& t, const ComplexMatrix& t_inv, PreserverMode mode,
                         const ComplexMatrix& x) {
  return mode == PreserverMode::Conjugation ? ComplexMatrix(t * x * t_inv)
                                            : ComplexMatrix(t * x.transpose() * t_inv);
}

ComplexVector basis_vector(Eigen::Index n, Eigen::Index i) { return ComplexVector::Unit(n, i); }

}  // namespace

PreserverClassification reconstruct(const MatrixMap& phi, Eigen::Index n, const ReconstructOptions& options) {
  if (n < 3) throw Error(ErrorCode::UnsupportedDimension, "reconstruction needs n >= 3");
  const double beta = options.probe_phase;

  std::vector<ComplexVector> u(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i)
    u[static_cast<std::size_t>(i)] = psi(phi, Subspace::line(basis_vector(n, i)), beta).basis().col(0);

  ComplexMatrix t(n, n);
  t.col(0) = u[0];
  for (Eigen::Index i = 1; i < n; ++i) {
    const ComplexVector w = psi(phi, Subspace::line(basis_vector(n, 0) + basis_vector(n, i)), beta).basis().col(0);
    ComplexMatrix pair(n, 2);
    pair.col(0) = u[0];
    pair.col(1) = u[static_cast<std::size_t>(i)];
    const Eigen::Vector2cd ab = pair.colPivHouseholderQr().solve(w);
    const double fit = (pair * ab - w).norm();
    if (fit > 1e-6 || std::abs(ab(0)) < 1e-8 || std::abs(ab(1)) < 1e-8)
      throw Error(ErrorCode::ResidualTooLarge, "sum line is not in the span of its coordinate images", fit);
    t.col(i) = (ab(1) / ab(0)) * u[static_cast<std::size_t>(i)];
  }

  const Subspace probe = psi(phi, Subspace::line(basis_vector(n, 0) + kI * basis_vector(n, 1)), beta);
  const double d_linear = subspace_distance(probe, Subspace::line(t.col(0) + kI * t.col(1)));
  const double d_conj = subspace_distance(probe, Subspace::line(t.col(0) - kI * t.col(1)));
  if (std::abs(d_linear - d_conj) <= 1e-6)
    throw Error(ErrorCode::BranchAmbiguous, "probe line fits both branches", std::abs(d_linear - d_conj));
  if (std::min(d_linear, d_conj) > 1e-4)
    throw Error(ErrorCode::ResidualTooLarge, "probe line fits neither branch", std::min(d_linear, d_conj));

  PreserverClassification out;
  out.mode = d_linear < d_conj ? PreserverMode::Conjugation : PreserverMode::TransposeConjugation;
  out.T = normalize_gauge(t);
  if (min_singular_value(out.T) <= 1e-10 * op_norm(out.T))
    throw Error(ErrorCode::Singular, "reconstructed T is singular", min_singular_value(out.T));
  const ComplexMatrix t_inv = out.T.inverse();

  Rng rng = make_rng(options.seed);
  for (int s = 0; s < options.validation_samples; ++s) {
    ComplexMatrix x = haar_unitary(n, rng);
    if (beta != kPi) {
      // halve arg det so it stays away from −1 for extension oracles
      const Complex det = x.determinant();
      x *= std::exp(-kI * (0.5 * std::arg(det) / static_cast<double>(n)));
    }
    const ComplexMatrix y = phi(x);
    const double spec = spectrum_match_distance(spectrum_of(y), spectrum_of(x));
    if (spec > 1e-6) throw Error(ErrorCode::SpectrumViolation, "oracle does not preserve the spectrum", spec);
    out.residual = std::max(out.residual, op_norm(y - apply_form(out.T, t_inv, out.mode, x)) / op_norm(x));
  }
  if (out.residual > options.tol)
    throw Error(ErrorCode::ResidualTooLarge, "oracle is not a (transpose-)conjugation on U(n)", out.residual);
  return out;
}

TorusConjugator torus_conjugator(const MatrixMap& phi, const ComplexMatrix& s, int samples, std::uint64_t seed,
                                 double tol) {
  require_square_finite(s, "torus basis");
  const Eigen::Index n = s.rows();
  if (min_singular_value(s) <= 1e-12 * op_norm(s)) throw Error(ErrorCode::SingularConjugator, "torus basis is singular");
  const ComplexMatrix s_inv = s.inverse();
  Rng rng = make_rng(seed);
  auto torus_element = [&](ComplexVector& z) {
    z.resize(n);
    for (Eigen::Index k = 0; k < n; ++k) z(k) = unit_circle_point(rng);
    return ComplexMatrix(s * z.asDiagonal() * s_inv);
  };

  const double min_gap = 0.5 / static_cast<double>(n);
  ComplexVector z;
  ComplexMatrix x;
  bool found = false;
  for (int attempt = 0; attempt < 100 && !found; ++attempt) {
    x = torus_element(z);
    double gap = std::numeric_limits<double>::infinity();
    for (Eigen::Index a = 0; a < n; ++a)
      for (Eigen::Index b = a + 1; b < n; ++b) gap = std::min(gap, std::abs(z(a) - z(b)));
    found = gap >= min_gap;
  }
  if (!found) throw Error(ErrorCode::EigenvalueCollision, "no torus element with separated eigenvalues");

  const ComplexMatrix y = phi(x);
  Eigen::ComplexEigenSolver<ComplexMatrix> es(y);
  if (es.info() != Eigen::Success) throw Error(ErrorCode::NumericalFailure, "eigensolver failed on φ(X)");
  ComplexMatrix q(n, n);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index best = -1;
    double dist = std::numeric_limits<double>::infinity();
    for (Eigen::Index j = 0; j < n; ++j)
      if (!used[static_cast<std::size_t>(j)] && std::abs(es.eigenvalues()(j) - z(k)) < dist) {
        dist = std::abs(es.eigenvalues()(j) - z(k));
        best = j;
      }
    if (dist > 0.25 * min_gap) throw Error(ErrorCode::ResidualTooLarge, "φ(X) does not share the spectrum of X", dist);
    used[static_cast<std::size_t>(best)] = true;
    q.col(k) = es.eigenvectors().col(best);
  }

  TorusConjugator out;
  out.T = normalize_gauge(q * s_inv);
  const ComplexMatrix t_inv = out.T.inverse();
  for (int i = 0; i < samples; ++i) {
    ComplexVector w;
    const ComplexMatrix xs = torus_element(w);
    out.residual = std::max(out.residual, op_norm(phi(xs) - out.T * xs * t_inv) / op_norm(xs));
  }
  if (out.residual > tol) throw Error(ErrorCode::ResidualTooLarge, "torus validation failed", out.residual);
  return out;
}

LatticeCheck lattice_compat_check(const MatrixMap& phi, Eigen::Index n, int trials, std::uint64_t seed, double tol) {
  Rng rng = make_rng(seed);
  LatticeCheck out;
  out.pass = true;
  for (int t = 0; t < trials; ++t) {
    // W, W' spanned by subsets of one unitary basis, so P_W and P_W' commute.
    const ComplexMatrix q = haar_unitary(n, rng);
    std::vector<Eigen::Index> a, b;
    for (Eigen::Index k = 0; k < n; ++k) {
      if (uniform(rng, 0.0, 1.0) < 0.5) a.push_back(k);
      if (uniform(rng, 0.0, 1.0) < 0.5) b.push_back(k);
    }
    auto columns = [&](const std::vector<Eigen::Index>& idx) {
      if (idx.empty()) return Subspace::zero(n);
      ComplexMatrix m(n, static_cast<Eigen::Index>(idx.size()));
      for (std::size_t c = 0; c < idx.size(); ++c) m.col(static_cast<Eigen::Index>(c)) = q.col(idx[c]);
      return Subspace::from_orthonormal(m);
    };
    const Subspace w = columns(a);
    const Subspace w2 = columns(b);
    ++out.trials;
    try {
      const double d = subspace_distance(psi(phi, subspace_sum(w, w2)), subspace_sum(psi(phi, w), psi(phi, w2)));
      out.max_defect = std::max(out.max_defect, d);
      if (d > tol) out.pass = false;
    } catch (const Error&) {
      out.pass = false;
      out.max_defect = std::max(out.max_defect, 1.0);
    }
  }
  return out;
}

MatrixMap identity_oracle() {
  return [](const ComplexMatrix& x) { return x; };
}

MatrixMap transpose_oracle() {
  return [](const ComplexMatrix& x) { return ComplexMatrix(x.transpose()); };
}

MatrixMap conjugation_oracle(const ComplexMatrix& t) {
  return [t, t_inv = ComplexMatrix(t.inverse())](const ComplexMatrix& x) { return ComplexMatrix(t * x * t_inv); };
}

MatrixMap transpose_conjugation_oracle(const ComplexMatrix& t) {
  return [t, t_inv = ComplexMatrix(t.inverse())](const ComplexMatrix& x) {
    return ComplexMatrix(t * x.transpose() * t_inv);
  };
}

MatrixMap theta_oracle() {
  return [](const ComplexMatrix& x) { return theta(x); };
}

MatrixMap determinant_extension(MatrixMap phi) {
  return [phi = std::move(phi)](const ComplexMatrix& x) {
    const Complex det = x.determinant();
    if (std::abs(det + 1.0) <= 1e-12)
      throw Error(ErrorCode::PreconditionViolated, "extension is undefined at det = -1");
    const Complex c = principal_root(det, static_cast<int>(x.rows()));
    return ComplexMatrix(c * phi(x / c));
  };
}

PreserverClassification classify_preserver(const MatrixMap& phi, SpaceId space, Eigen::Index n,
                                           const ReconstructOptions& options) {
  if (space != SpaceId::Un && space != SpaceId::GLn_ss && space != SpaceId::SLn_ss && space != SpaceId::Nn)
    throw Error(ErrorCode::InvalidArgument, "classification covers un, gln_ss, sln_ss and nn only");
  if (n < 3) throw Error(ErrorCode::UnsupportedDimension, "classification needs n >= 3");

  const bool special = space == SpaceId::SLn_ss;
  const MatrixMap unitary_oracle = special ? determinant_extension(phi) : phi;
  ReconstructOptions unitary_options = options;
  // U_W has det ±1; det = −1 is outside the extension's domain.
  if (special) unitary_options.probe_phase = 1.0;
  PreserverClassification out = reconstruct(unitary_oracle, n, unitary_options);

  const ComplexMatrix t_inv = out.T.inverse();
  Rng rng = make_rng(options.seed ^ 0x9e3779b97f4a7c15ULL);
  auto validate = [&](const MatrixMap& map, SpaceId id) {
    for (int s = 0; s < options.validation_samples; ++s) {
      const ComplexMatrix x = sample(id, n, rng);
      const double r = op_norm(map(x) - apply_form(out.T, t_inv, out.mode, x)) / op_norm(x);
      out.residual = std::max(out.residual, r);
    }
  };
  if (space != SpaceId::Un) validate(phi, space);
  if (special) validate(unitary_oracle, SpaceId::GLn_star);
  if (out.residual > options.tol)
    throw Error(ErrorCode::ResidualTooLarge, "oracle is not a (transpose-)conjugation on the space", out.residual);
  return out;
}

}  // namespace spshrink
