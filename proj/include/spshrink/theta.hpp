#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "spshrink/matrix.hpp"

namespace spshrink {

/// X = S·N·S⁻¹ with S positive definite and N normal.
struct ThetaDecomposition {
  ComplexMatrix S;
  ComplexMatrix N;
  double residual = 0.0;   // ‖SNS⁻¹ − X‖/‖X‖
  double condition = 0.0;  // of the eigenvector matrix P = S·V
};

/// Eigenvector matrices above this condition number are rejected
/// (WellDefinednessDegraded).
inline constexpr double kThetaConditionCap = 1e6;

/// From X = PDP⁻¹ and the polar factorization P = S·V: N = V·D·Vᴴ.
/// `column_gauge` rescales the eigenvector columns first (P ← P·diag(g));
/// any gauge yields another valid decomposition of the same X.
ThetaDecomposition theta_decompose(const ComplexMatrix& x,
                                   const std::optional<ComplexVector>& column_gauge = std::nullopt);

/// Θ(SNS⁻¹) = S⁻¹NS.
ComplexMatrix theta(const ComplexMatrix& x);
ComplexMatrix theta(const ThetaDecomposition& d);

struct ThetaCheck {
  bool pass = false;
  double defect = 0.0;
  double bound = 0.0;
  explicit operator bool() const noexcept { return pass; }
};

/// Given SNS⁻¹ = TMT⁻¹ (within tol·(1 + ‖SNS⁻¹‖), else PreconditionViolated)
/// checks S⁻¹NS = T⁻¹MT within 100·tol·(1 + ‖SNS⁻¹‖).
ThetaCheck check_putnam_fuglede(const ComplexMatrix& s, const ComplexMatrix& n, const ComplexMatrix& t,
                                const ComplexMatrix& m, double tol);

/// apply_function(S·N·S⁻¹, conj)ᴴ.
ComplexMatrix theta_via_calculus(const ComplexMatrix& s, const ComplexMatrix& n);

/// For ‖XY − YX‖ ≤ tol·‖X‖‖Y‖ (else PreconditionViolated): checks
/// ‖Θ(X)Θ(Y) − Θ(Y)Θ(X)‖ ≤ 100·tol·‖Θ(X)‖‖Θ(Y)‖.
ThetaCheck theta_commutativity_check(const ComplexMatrix& x, const ComplexMatrix& y, double tol);

/// Θ(SUS⁻¹) against S⁻²·(SUS⁻¹)·S², bound tol·cond(S)²·(1 + ‖SUS⁻¹‖).
ThetaCheck theta_adS_identity(const ComplexMatrix& s, const ComplexMatrix& u, double tol);

struct ThetaProbeReport {
  double scale = 0.0;
  double oscillation = 0.0;  // max ‖Θ(X) − Θ(X0)‖
  int samples = 0;
  int skipped = 0;  // draws rejected as non-semisimple or ill-conditioned
};

/// Empirical local oscillation of Θ around X0 over draws with
/// ‖X − X0‖ ∈ [scale/2, scale]. With `normal_only` the draws are normal
/// matrices near a normal X0. Same seed, same directions at every scale.
ThetaProbeReport theta_continuity_probe(const ComplexMatrix& x0, double scale, int samples, std::uint64_t seed,
                                        bool normal_only = false);

}  // namespace spshrink
