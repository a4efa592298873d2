#include "spshrink/theta.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "spshrink/eig.hpp"
#include "spshrink/error.hpp"
#include "spshrink/random.hpp"
#include "spshrink/ss_calculus.hpp"

namespace spshrink {

ThetaDecomposition theta_decompose(const ComplexMatrix& x, const std::optional<ComplexVector>& column_gauge) {
  require_square_finite(x, "theta input");
  const double norm = op_norm(x);
  if (norm == 0.0 || min_singular_value(x) <= 1e-12 * norm)
    throw Error(ErrorCode::Singular, "Θ needs an invertible matrix", min_singular_value(x));
  const EigDecomposition eig = eig_decompose(x);
  if (!eig.semisimple) throw Error(ErrorCode::NotSemisimple, "Θ needs a semisimple matrix", eig.condition);

  ComplexMatrix p = eig.eigenvectors;
  if (column_gauge) {
    if (column_gauge->size() != p.cols()) throw Error(ErrorCode::SizeMismatch, "gauge length differs from n");
    for (Eigen::Index j = 0; j < p.cols(); ++j) {
      if ((*column_gauge)(j) == 0.0) throw Error(ErrorCode::InvalidArgument, "gauge entries must be nonzero");
      p.col(j) *= (*column_gauge)(j);
    }
  }
  const double cond = condition_number(p);
  if (cond > kThetaConditionCap)
    throw Error(ErrorCode::WellDefinednessDegraded, "eigenvector condition above cap", cond);

  const PolarDecomposition polar = polar_decompose(p);
  ThetaDecomposition out;
  out.S = polar.positive;
  out.N = polar.unitary * eig.eigenvalues.asDiagonal() * polar.unitary.adjoint();
  out.condition = cond;
  out.residual = op_norm(out.S * out.N * out.S.inverse() - x) / norm;
  return out;
}

ComplexMatrix theta(const ThetaDecomposition& d) { return d.S.inverse() * d.N * d.S; }

ComplexMatrix theta(const ComplexMatrix& x) { return theta(theta_decompose(x)); }

ThetaCheck check_putnam_fuglede(const ComplexMatrix& s, const ComplexMatrix& n, const ComplexMatrix& t,
                                const ComplexMatrix& m, double tol) {
  const ComplexMatrix x = s * n * s.inverse();
  const double scale = 1.0 + op_norm(x);
  const double mismatch = op_norm(x - t * m * t.inverse());
  if (mismatch > tol * scale)
    throw Error(ErrorCode::PreconditionViolated, "pairs do not represent the same matrix", mismatch);
  ThetaCheck out;
  out.defect = op_norm(s.inverse() * n * s - t.inverse() * m * t);
  out.bound = 100.0 * tol * scale;
  out.pass = out.defect <= out.bound;
  return out;
}

ComplexMatrix theta_via_calculus(const ComplexMatrix& s, const ComplexMatrix& n) {
  const ComplexMatrix x = s * n * s.inverse();
  return apply_function(x, [](Complex z) { return std::conj(z); }).adjoint();
}

ThetaCheck theta_commutativity_check(const ComplexMatrix& x, const ComplexMatrix& y, double tol) {
  const double pre = commutator_norm(x, y);
  if (pre > tol * op_norm(x) * op_norm(y))
    throw Error(ErrorCode::PreconditionViolated, "inputs do not commute", pre);
  const ComplexMatrix tx = theta(x);
  const ComplexMatrix ty = theta(y);
  ThetaCheck out;
  out.defect = commutator_norm(tx, ty);
  out.bound = 100.0 * tol * op_norm(tx) * op_norm(ty);
  out.pass = out.defect <= out.bound;
  return out;
}

ThetaCheck theta_adS_identity(const ComplexMatrix& s, const ComplexMatrix& u, double tol) {
  const ComplexMatrix s_inv = s.inverse();
  const ComplexMatrix x = s * u * s_inv;
  const ComplexMatrix expected = s_inv * s_inv * x * s * s;
  const double cond = condition_number(s);
  ThetaCheck out;
  out.defect = op_norm(theta(x) - expected);
  out.bound = tol * cond * cond * (1.0 + op_norm(x));
  out.pass = out.defect <= out.bound;
  return out;
}

ThetaProbeReport theta_continuity_probe(const ComplexMatrix& x0, double scale, int samples, std::uint64_t seed,
                                        bool normal_only) {
  if (!(scale > 0.0) || samples < 1) throw Error(ErrorCode::InvalidArgument, "probe needs scale > 0 and samples >= 1");
  const Eigen::Index n = x0.rows();
  const ComplexMatrix base = theta(x0);
  ThetaProbeReport out;
  out.scale = scale;
  Rng rng = make_rng(seed);

  ComplexMatrix v0;
  ComplexVector d0;
  if (normal_only) {
    if (commutator_norm(x0, x0.adjoint()) > 1e-10 * (1.0 + op_norm(x0) * op_norm(x0)))
      throw Error(ErrorCode::PreconditionViolated, "normal-only probe needs a normal X0");
    // Schur form of a normal matrix is diagonal with a unitary basis.
    Eigen::ComplexSchur<ComplexMatrix> schur(x0);
    v0 = schur.matrixU();
    d0 = schur.matrixT().diagonal();
  }

  constexpr int kMaxAttempts = 100;
  for (int s = 0; s < samples; ++s) {
    bool done = false;
    for (int attempt = 0; attempt < kMaxAttempts && !done; ++attempt) {
      const double r = uniform(rng, 0.5, 1.0) * scale;
      ComplexMatrix x;
      if (normal_only) {
        ComplexVector dd(n);
        for (Eigen::Index k = 0; k < n; ++k) dd(k) = complex_normal(rng);
        dd *= 0.5 * r / dd.cwiseAbs().maxCoeff();
        const ComplexMatrix k = random_traceless_skew_hermitian(n, rng) * (0.25 * r / (1.0 + op_norm(x0)));
        const ComplexMatrix w = expm_skew_hermitian(k) * v0;
        x = w * (d0 + dd).asDiagonal() * w.adjoint();
      } else {
        ComplexMatrix delta = ginibre(n, n, rng);
        x = x0 + delta * (r / op_norm(delta));
      }
      try {
        out.oscillation = std::max(out.oscillation, op_norm(theta(x) - base));
        done = true;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NotSemisimple && e.code() != ErrorCode::WellDefinednessDegraded &&
            e.code() != ErrorCode::Singular)
          throw;
        ++out.skipped;
      }
    }
    if (done) ++out.samples;
  }
  return out;
}

}  // namespace spshrink
