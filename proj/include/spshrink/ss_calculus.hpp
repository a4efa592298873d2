#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "spshrink/eig.hpp"
#include "spshrink/matrix.hpp"
#include "spshrink/random.hpp"

namespace spshrink {

using ScalarFunction = std::function<Complex(Complex)>;

inline constexpr double kDefaultGroupingTol = 1e-6;

struct SpectralPair {
  Complex eigenvalue;
  ComplexMatrix idempotent;
};

/// T = Σ λ·E_λ with Σ E_λ = I, E_λE_μ = δ_{λμ}E_λ, E_λT = TE_λ.
struct SpectralDecomposition {
  std::vector<SpectralPair> pairs;
  double grouping_tol = kDefaultGroupingTol;
};

/// E_λ = P·diag(1_{cluster λ})·P⁻¹ from the eigenbasis. Eigenvalues within
/// grouping_tol (single linkage) form one cluster; clusters closer than
/// 10·grouping_tol raise AmbiguousClustering.
SpectralDecomposition spectral_idempotents(const ComplexMatrix& t, double grouping_tol = kDefaultGroupingTol,
                                           const EigOptions& eig_options = {});

/// Cross-check route: E_λ = ∏_{μ≠λ} (T − μI)/(λ − μ) over the cluster
/// representatives. Uses no eigenvectors.
SpectralDecomposition spectral_idempotents_lagrange(const ComplexMatrix& t,
                                                    double grouping_tol = kDefaultGroupingTol);

/// f(T) = Σ f(λ)·E_λ.
ComplexMatrix apply_function(const ComplexMatrix& t, const ScalarFunction& f,
                             double grouping_tol = kDefaultGroupingTol);

ComplexMatrix apply_function(const SpectralDecomposition& decomposition, const ScalarFunction& f);

/// p(T) for the Lagrange interpolant p of f on the distinct eigenvalues.
ComplexMatrix apply_function_lagrange(const ComplexMatrix& t, const ScalarFunction& f,
                                      double grouping_tol = kDefaultGroupingTol);

/// f of the upper-triangular [[λ₁, α], [0, λ₂]] by its closed form:
/// [[f(λ₁), α(f(λ₂) − f(λ₁))/(λ₂ − λ₁)], [0, f(λ₂)]].
ComplexMatrix calc_2x2_closed_form(Complex lambda1, Complex lambda2, Complex alpha, const ScalarFunction& f);

/// max ‖f(T+Δ) − f(T)‖ over `samples` random Δ with ‖Δ‖ ∈ [scale/2, scale],
/// resampled until T+Δ is semisimple. The directions are drawn from
/// make_rng(seed) so equal seeds give the same directions at every scale.
double continuity_probe(const ComplexMatrix& t, const ScalarFunction& f, double scale, int samples,
                        std::uint64_t seed);

/// f(z) = √|z − c|: continuous, not Lipschitz at c.
ScalarFunction sqrt_shift(Complex center = 1.0);

struct DiscontinuityWitness {
  ComplexMatrix perturbed;  // T + Δ
  Complex center = 0.0;     // repeated eigenvalue λ, f(z) = √|z − λ|
  double perturbation_norm = 0.0;
  double deviation = 0.0;  // ‖f(T+Δ) − f(T)‖
};

/// Perturbation inside a repeated eigenspace of T. With eigenvectors v_i, v_j
/// of a repeated eigenvalue λ the block λI₂ becomes [[λ, a], [0, λ + δ]] for
/// a = scale/(2·cond P), δ = a^{5/2}, and f = √|z − λ| puts an entry of size
/// a^{-1/4} into f(T+Δ). f(T+Δ) is evaluated in the eigenbasis of T (where
/// T+Δ is triangular) and transported back by Ad-invariance, since a dense
/// eigensolver cannot resolve a gap of δ at this conditioning.
/// Throws PreconditionViolated when T has simple spectrum.
DiscontinuityWitness repeated_eigenvalue_witness(const ComplexMatrix& t, double scale);

}  // namespace spshrink
