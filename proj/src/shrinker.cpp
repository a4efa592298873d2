#include "spshrink/shrinker.hpp"

#include <Eigen/LU>

#include "spshrink/eig_select.hpp"
#include "spshrink/error.hpp"
#include "spshrink/parallel.hpp"
#include "spshrink/polynomial.hpp"
#include "spshrink/spectrum.hpp"

namespace spshrink {

namespace {

struct SampleDefects {
  double inclusion = 0.0;
  double powerlaw = 0.0;
};

ShrinkReport run_check(const MatrixMap& phi, SpaceId id, int n, int m, const CheckOptions& options,
                       bool with_powerlaw) {
  if (n <= 0 || m <= 0) throw Error(ErrorCode::UnsupportedDimension, "dimensions must be positive");
  if (options.samples <= 0) throw Error(ErrorCode::InvalidArgument, "sample count must be positive");
  ShrinkReport report;
  report.space = id;
  report.n = n;
  report.m = m;
  report.seed = options.seed;
  report.sample_count = options.samples;
  report.divisible = m % n == 0;

  Rng rng = make_rng(options.seed);
  std::vector<ComplexMatrix> inputs;
  inputs.reserve(static_cast<std::size_t>(options.samples));
  for (int s = 0; s < options.samples; ++s) inputs.push_back(sample(id, n, rng));

  std::vector<SampleDefects> defects(inputs.size());
  const unsigned exponent = static_cast<unsigned>(m / n);
  parallel_for(inputs.size(), options.workers, [&](std::size_t i) {
    const ComplexMatrix& x = inputs[i];
    ComplexMatrix y;
    try {
      y = phi(x);
    } catch (const std::exception& e) {
      throw Error(ErrorCode::OracleFailure, std::string("oracle raised: ") + e.what());
    }
    if (y.rows() != m || y.cols() != m)
      throw Error(ErrorCode::DimensionMismatch, "oracle output has the wrong size");
    defects[i].inclusion = spectrum_inclusion_defect(spectrum_of(y), spectrum_of(x));
    if (with_powerlaw)
      defects[i].powerlaw = coefficient_distance(char_poly(y), char_poly(x).pow(exponent));
  });

  for (const auto& d : defects) {
    report.inclusion_defect = std::max(report.inclusion_defect, d.inclusion);
    if (with_powerlaw) report.powerlaw_defect = std::max(report.powerlaw_defect.value_or(0.0), d.powerlaw);
  }
  return report;
}

}  // namespace

ComplexMatrix canonical_shrinker(const ComplexMatrix& x, int p, int q, const ConjugatorField& conjugator) {
  require_square_finite(x, "canonical_shrinker input");
  if (p < 0 || q < 0 || p + q < 1)
    throw Error(ErrorCode::InvalidArgument, "need p, q ≥ 0 with p + q ≥ 1");
  const Eigen::Index n = x.rows();
  ComplexMatrix block;
  if (p == 0) block = kron(x.transpose(), identity(q));
  else if (q == 0) block = kron(x, identity(p));
  else block = block_diagonal(kron(x, identity(p)), kron(x.transpose(), identity(q)));
  if (!conjugator) return block;
  const ComplexMatrix s = conjugator(x);
  const Eigen::Index m = (p + q) * n;
  if (s.rows() != m || s.cols() != m)
    throw Error(ErrorCode::DimensionMismatch, "conjugator has the wrong size");
  const double cond = condition_number(s);
  if (!(cond < 1e12)) throw Error(ErrorCode::SingularConjugator, "conjugator is numerically singular", cond);
  return s * block * s.partialPivLu().inverse();
}

ConjugatorField random_continuous_conjugator(Eigen::Index n, Eigen::Index m, std::uint64_t seed) {
  Rng rng = make_rng(seed);
  ComplexMatrix k0 = ginibre(m, m, rng);
  const ComplexMatrix g = identity(m) + 0.25 * k0 / op_norm(k0);
  std::vector<ComplexMatrix> basis;
  basis.reserve(static_cast<std::size_t>(n * n));
  for (Eigen::Index i = 0; i < n * n; ++i) basis.push_back(ginibre(m, m, rng));
  return [g, basis = std::move(basis), n, m](const ComplexMatrix& x) {
    if (x.rows() != n || x.cols() != n)
      throw Error(ErrorCode::DimensionMismatch, "conjugator field input has the wrong size");
    ComplexMatrix e = ComplexMatrix::Zero(m, m);
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index i = 0; i < n; ++i) e += x(i, j) * basis[static_cast<std::size_t>(j * n + i)];
    return ComplexMatrix(g * (identity(m) + e / (2.0 * (1.0 + e.norm()))));
  };
}

MatrixMap canonical_shrinker_map(int p, int q, ConjugatorField conjugator) {
  return [p, q, conjugator = std::move(conjugator)](const ComplexMatrix& x) {
    return canonical_shrinker(x, p, q, conjugator);
  };
}

ShrinkReport check_shrinking(const MatrixMap& phi, SpaceId id, int n, int m, const CheckOptions& options) {
  return run_check(phi, id, n, m, options, /*with_powerlaw=*/false);
}

ShrinkReport check_powerlaw(const MatrixMap& phi, SpaceId id, int n, int m, const CheckOptions& options,
                            bool demand_power_law) {
  if (n > 0 && m % n != 0) {
    if (demand_power_law)
      throw Error(ErrorCode::DivisibilityViolation,
                  "n = " + std::to_string(n) + " does not divide m = " + std::to_string(m));
    return run_check(phi, id, n, m, options, /*with_powerlaw=*/false);
  }
  return run_check(phi, id, n, m, options, /*with_powerlaw=*/true);
}

ComplexMatrix degenerate_shrinker_Hn(const ComplexMatrix& x, int m) {
  if (m <= 0) throw Error(ErrorCode::UnsupportedDimension, "m must be positive");
  return hn_select(x) * identity(m);
}

ComplexMatrix degenerate_shrinker_SUn(const ComplexMatrix& u, int m) {
  if (m <= 0) throw Error(ErrorCode::UnsupportedDimension, "m must be positive");
  return su_select(u) * identity(m);
}

}  // namespace spshrink
