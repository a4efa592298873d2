#pragma once

#include <cstdint>
#include <string_view>

#include "spshrink/matrix.hpp"
#include "spshrink/shrinker.hpp"
#include "spshrink/spaces.hpp"
#include "spshrink/subspace.hpp"

namespace spshrink {

enum class PreserverMode { Conjugation, TransposeConjugation };

std::string_view to_string(PreserverMode mode);

/// φ(U) = T·U°·T⁻¹ with U° = U (conjugation) or Uᵗ (transpose_conjugation).
/// T is normalized so that its largest-modulus entry equals 1.
struct PreserverClassification {
  ComplexMatrix T;
  PreserverMode mode = PreserverMode::Conjugation;
  double residual = 0.0;
};

/// U_W = 2P_W − I.
ComplexMatrix involution_for_subspace(const Subspace& w);

/// Ψ(W) = ker(I − φ(U)) for U = P_W + e^{iβ}(I − P_W); β = π gives U_W.
/// Throws DimensionDrift when dim Ψ(W) ≠ dim W.
Subspace psi(const MatrixMap& phi, const Subspace& w, double probe_phase = kPi, double kernel_tol = 1e-8);

struct ReconstructOptions {
  int validation_samples = 50;
  std::uint64_t seed = 0;
  double tol = 1e-6;           // accepted residual
  double probe_phase = kPi;    // see psi
};

/// T from Ψ on the lines span(eᵢ), span(e₁ + eᵢ); the branch from the probe
/// span(e₁ + i·e₂). Throws BranchAmbiguous, ResidualTooLarge (with the
/// residual as value) or SpectrumViolation.
PreserverClassification reconstruct(const MatrixMap& phi, Eigen::Index n, const ReconstructOptions& options = {});

/// Largest-modulus entry scaled to 1 (first in row-major order on ties).
ComplexMatrix normalize_gauge(const ComplexMatrix& t);

/// min over c of ‖T − c·T₀‖/‖c·T₀‖ with c the Frobenius least-squares scalar.
double projective_error(const ComplexMatrix& t, const ComplexMatrix& t0);

struct TorusConjugator {
  ComplexMatrix T;
  double residual = 0.0;
};

/// T_G with φ(X) = T_G·X·T_G⁻¹ on the torus {S·diag(z)·S⁻¹ : |zᵢ| = 1}.
/// Throws EigenvalueCollision when no well-separated torus element is found
/// and ResidualTooLarge when validation fails.
TorusConjugator torus_conjugator(const MatrixMap& phi, const ComplexMatrix& s, int samples, std::uint64_t seed,
                                 double tol = 1e-6);

struct LatticeCheck {
  bool pass = false;
  double max_defect = 0.0;
  int trials = 0;
  explicit operator bool() const noexcept { return pass; }
};

/// Ψ(W + W') = Ψ(W) + Ψ(W') on random pairs with commuting projections.
/// Oracle errors count as failure.
LatticeCheck lattice_compat_check(const MatrixMap& phi, Eigen::Index n, int trials, std::uint64_t seed,
                                  double tol = 1e-6);

/// Runs reconstruct on unitaries and validates on samples of `space`
/// (Un, GLn_ss, SLn_ss or Nn). For SLn_ss the unitary oracle is the
/// extension X ↦ c·φ(X/c), c = ⁿ√det X, and validation also covers it on
/// GLn_star.
PreserverClassification classify_preserver(const MatrixMap& phi, SpaceId space, Eigen::Index n,
                                           const ReconstructOptions& options = {});

MatrixMap identity_oracle();
MatrixMap transpose_oracle();
/// X ↦ T·X·T⁻¹.
MatrixMap conjugation_oracle(const ComplexMatrix& t);
/// X ↦ T·Xᵗ·T⁻¹.
MatrixMap transpose_conjugation_oracle(const ComplexMatrix& t);
MatrixMap theta_oracle();
/// X ↦ c·φ(X/c) with c the principal n-th root of det X.
MatrixMap determinant_extension(MatrixMap phi);

}  // namespace spshrink
