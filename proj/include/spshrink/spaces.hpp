#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spshrink/matrix.hpp"
#include "spshrink/random.hpp"

namespace spshrink {

enum class SpaceId { Mn, Mn_ss, GLn, GLn_ss, SLn, SLn_ss, Un, SUn, Nn, Hn, GLn_star };

inline constexpr SpaceId kAllSpaces[] = {SpaceId::Mn,  SpaceId::Mn_ss, SpaceId::GLn, SpaceId::GLn_ss,
                                         SpaceId::SLn, SpaceId::SLn_ss, SpaceId::Un, SpaceId::SUn,
                                         SpaceId::Nn,  SpaceId::Hn,    SpaceId::GLn_star};

/// Lowercase tag: "mn", "mn_ss", "gln", …, "gln_star".
std::string_view to_string(SpaceId id);

/// Accepts canonical tags and the short aliases "m", "gl", "sl", "u", "su",
/// "normal", "h" (each with the "_ss"/"_star" suffixes where meaningful).
std::optional<SpaceId> parse_space(std::string_view tag);

struct SampleOptions {
  /// Resample until the minimum eigenvalue gap exceeds `min_gap`.
  bool simple_spectrum = false;
  double min_gap = 1e-4;
};

/// One draw from the space.
///  Mn: Ginibre.  GLn: Ginibre with σ_min > 1e-3.  SLn: Ginibre / det^{1/n}.
///  *_ss: P·diag(λ)·P⁻¹ with Ginibre P of condition ≤ 100.
///  SLn_ss: λ₁..λ_{n−1} free, λ_n = 1/∏.  Un: Haar.  SUn: Haar / det^{1/n}.
///  Nn: Q·diag(λ)·Qᴴ, Q Haar.  Hn: GUE.  GLn_star: GLn with |det + 1| > 1e-3.
ComplexMatrix sample(SpaceId id, Eigen::Index n, Rng& rng, const SampleOptions& options = {});

/// Defining equations of the space, checked at tolerance `tol` (hybrid
/// absolute/relative where a norm scale exists).
bool membership(SpaceId id, const ComplexMatrix& x, double tol = 1e-8);

/// Data for Ad_G T_{L,V}: conjugates g·(diag(λ) + v)·g⁻¹ by elements of a
/// closed connected group G, of upper-triangular matrices with diagonal in L
/// and strictly upper part in V. The transitivity hypothesis on isotropy
/// groups is documented, not verified.
struct GeneralSpaceSpec {
  Eigen::Index n = 0;
  std::function<std::vector<Complex>(Rng&)> diagonal_sampler;
  std::vector<ComplexMatrix> nilpotent_basis;  // strictly upper triangular
  std::function<ComplexMatrix(Rng&)> group_sampler;
};

/// Throws InvalidArgument on a malformed spec.
void validate(const GeneralSpaceSpec& spec);

struct GeneralSample {
  ComplexMatrix matrix;
  std::vector<Complex> diagonal;
  ComplexMatrix conjugator;
};

GeneralSample sample_general(const GeneralSpaceSpec& spec, Rng& rng);

/// The parameters (G, V, L) realizing each named space in the Ad_G T_{L,V}
/// framework (Mn, GLn, SLn and their ss variants, Un, Nn).
GeneralSpaceSpec general_spec_for(SpaceId id, Eigen::Index n);

/// Minimal pairwise distance between eigenvalues.
double min_eigenvalue_gap(const ComplexMatrix& x);

/// Principal n-th root of z (continuous off the negative real axis).
Complex principal_root(Complex z, int n);

}  // namespace spshrink
