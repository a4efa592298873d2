#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "spshrink/matrix.hpp"
#include "spshrink/spaces.hpp"

namespace spshrink {

/// Black-box map on matrices; the harness never introspects it.
using MatrixMap = std::function<ComplexMatrix(const ComplexMatrix&)>;

/// Continuous map X ↦ S(X) ∈ GL(m).
using ConjugatorField = std::function<ComplexMatrix(const ComplexMatrix&)>;

struct ShrinkReport {
  double inclusion_defect = 0.0;
  /// Unset when the power law was not evaluated (n ∤ m).
  std::optional<double> powerlaw_defect;
  bool divisible = true;
  int sample_count = 0;
  std::uint64_t seed = 0;
  SpaceId space = SpaceId::Mn;
  int n = 0;
  int m = 0;
};

struct CheckOptions {
  int samples = 100;
  std::uint64_t seed = 0;
  /// 1 = serial; the oracle must tolerate concurrent calls otherwise.
  std::size_t workers = 1;
};

/// S(X)·blockdiag(X⊗I_p, Xᵗ⊗I_q)·S(X)⁻¹ of size (p+q)n.
ComplexMatrix canonical_shrinker(const ComplexMatrix& x, int p, int q,
                                 const ConjugatorField& conjugator = nullptr);

/// S(X) = G·(I + E(X)/(2(1+‖E(X)‖))) with fixed random G of condition ≤ 3 and
/// E linear in the entries of X. Continuous in X, always invertible.
ConjugatorField random_continuous_conjugator(Eigen::Index n, Eigen::Index m, std::uint64_t seed);

/// The canonical shrinker as a MatrixMap.
MatrixMap canonical_shrinker_map(int p, int q, ConjugatorField conjugator = nullptr);

/// inclusion_defect = max over samples of the directed Hausdorff distance
/// from sp(φ(X)) to sp(X). Also evaluates the power law when n | m.
ShrinkReport check_shrinking(const MatrixMap& phi, SpaceId id, int n, int m,
                             const CheckOptions& options = {});

/// powerlaw_defect = max over samples of the largest coefficient modulus of
/// k_{φ(X)} − (k_X)^{m/n}. Throws DivisibilityViolation when n ∤ m and
/// `demand_power_law` is set; otherwise reports divisible = false.
ShrinkReport check_powerlaw(const MatrixMap& phi, SpaceId id, int n, int m,
                            const CheckOptions& options = {}, bool demand_power_law = true);

/// λ_max(X)·I_m on Hermitian X.
ComplexMatrix degenerate_shrinker_Hn(const ComplexMatrix& x, int m);

/// s(U)·I_m with s the SU(n) eigenvalue selector.
ComplexMatrix degenerate_shrinker_SUn(const ComplexMatrix& u, int m);

}  // namespace spshrink
