#include "spshrink/ss_calculus.hpp"

#include <cmath>
#include <span>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "spshrink/error.hpp"
#include "spshrink/spectrum.hpp"

namespace spshrink {

namespace {

struct Clusters {
  std::vector<Complex> means;
  std::vector<std::vector<std::size_t>> members;
};

Clusters group(std::span<const Complex> values, double grouping_tol) {
  if (!(grouping_tol >= 0.0)) throw Error(ErrorCode::InvalidArgument, "grouping_tol must be nonnegative");
  Clusters out;
  out.members = cluster_points(values, grouping_tol);
  const double separation = min_cluster_separation(values, out.members);
  if (separation <= 10.0 * grouping_tol)
    throw Error(ErrorCode::AmbiguousClustering, "eigenvalue clusters closer than 10*grouping_tol", separation);
  for (const auto& c : out.members) {
    Complex sum = 0.0;
    for (std::size_t i : c) sum += values[i];
    out.means.push_back(sum / static_cast<double>(c.size()));
  }
  return out;
}

}  // namespace

SpectralDecomposition spectral_idempotents(const ComplexMatrix& t, double grouping_tol,
                                           const EigOptions& eig_options) {
  const EigDecomposition eig = eig_decompose(t, eig_options);
  if (!eig.semisimple)
    throw Error(ErrorCode::NotSemisimple, "matrix has no well-conditioned eigenbasis", eig.condition);
  const std::span<const Complex> values(eig.eigenvalues.data(),
                                        static_cast<std::size_t>(eig.eigenvalues.size()));
  const Clusters clusters = group(values, grouping_tol);
  const ComplexMatrix& p = eig.eigenvectors;
  const ComplexMatrix p_inv = p.partialPivLu().inverse();

  SpectralDecomposition out;
  out.grouping_tol = grouping_tol;
  for (std::size_t c = 0; c < clusters.means.size(); ++c) {
    ComplexMatrix e = ComplexMatrix::Zero(t.rows(), t.cols());
    for (std::size_t i : clusters.members[c]) {
      const auto k = static_cast<Eigen::Index>(i);
      e += p.col(k) * p_inv.row(k);
    }
    out.pairs.push_back({clusters.means[c], std::move(e)});
  }
  return out;
}

SpectralDecomposition spectral_idempotents_lagrange(const ComplexMatrix& t, double grouping_tol) {
  require_square_finite(t, "spectral_idempotents_lagrange input");
  Eigen::ComplexEigenSolver<ComplexMatrix> es(t, false);
  if (es.info() != Eigen::Success) throw Error(ErrorCode::NumericalFailure, "eigenvalue solver did not converge");
  const ComplexVector& ev = es.eigenvalues();
  const Clusters clusters = group(std::span<const Complex>(ev.data(), static_cast<std::size_t>(ev.size())),
                                  grouping_tol);
  const Eigen::Index n = t.rows();
  SpectralDecomposition out;
  out.grouping_tol = grouping_tol;
  for (std::size_t c = 0; c < clusters.means.size(); ++c) {
    ComplexMatrix e = identity(n);
    for (std::size_t d = 0; d < clusters.means.size(); ++d) {
      if (d == c) continue;
      const Complex mu = clusters.means[d];
      e = e * (t - mu * identity(n)) / (clusters.means[c] - mu);
    }
    out.pairs.push_back({clusters.means[c], std::move(e)});
  }
  return out;
}

ComplexMatrix apply_function(const SpectralDecomposition& decomposition, const ScalarFunction& f) {
  if (decomposition.pairs.empty()) throw Error(ErrorCode::EmptySpectrum, "empty spectral decomposition");
  const auto n = decomposition.pairs.front().idempotent.rows();
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (const auto& pair : decomposition.pairs) out += f(pair.eigenvalue) * pair.idempotent;
  return out;
}

ComplexMatrix apply_function(const ComplexMatrix& t, const ScalarFunction& f, double grouping_tol) {
  return apply_function(spectral_idempotents(t, grouping_tol), f);
}

ComplexMatrix apply_function_lagrange(const ComplexMatrix& t, const ScalarFunction& f, double grouping_tol) {
  return apply_function(spectral_idempotents_lagrange(t, grouping_tol), f);
}

ComplexMatrix calc_2x2_closed_form(Complex lambda1, Complex lambda2, Complex alpha, const ScalarFunction& f) {
  if (lambda1 == lambda2) throw Error(ErrorCode::EqualEigenvalues, "closed form needs distinct eigenvalues");
  const Complex f1 = f(lambda1);
  const Complex f2 = f(lambda2);
  ComplexMatrix out(2, 2);
  out << f1, alpha * (f2 - f1) / (lambda2 - lambda1), 0.0, f2;
  return out;
}

double continuity_probe(const ComplexMatrix& t, const ScalarFunction& f, double scale, int samples,
                        std::uint64_t seed) {
  if (!(scale > 0.0) || samples < 1) throw Error(ErrorCode::InvalidArgument, "probe needs scale > 0 and samples >= 1");
  const ComplexMatrix base = apply_function(t, f);
  Rng rng = make_rng(seed);
  double worst = 0.0;
  constexpr int kMaxAttempts = 100;
  for (int s = 0; s < samples; ++s) {
    bool done = false;
    for (int attempt = 0; attempt < kMaxAttempts && !done; ++attempt) {
      ComplexMatrix delta = ginibre(t.rows(), t.cols(), rng);
      const double r = uniform(rng, 0.5, 1.0);
      delta *= scale * r / op_norm(delta);
      const ComplexMatrix perturbed = t + delta;
      if (!eig_decompose(perturbed).semisimple) continue;
      try {
        worst = std::max(worst, op_norm(apply_function(perturbed, f) - base));
        done = true;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::AmbiguousClustering && e.code() != ErrorCode::NotSemisimple) throw;
      }
    }
    if (!done) throw Error(ErrorCode::NumericalFailure, "no semisimple perturbation found");
  }
  return worst;
}

ScalarFunction sqrt_shift(Complex center) {
  return [center](Complex z) { return Complex(std::sqrt(std::abs(z - center)), 0.0); };
}

DiscontinuityWitness repeated_eigenvalue_witness(const ComplexMatrix& t, double scale) {
  if (!(scale > 0.0)) throw Error(ErrorCode::InvalidArgument, "scale must be positive");
  const EigDecomposition eig = eig_decompose(t);
  if (!eig.semisimple) throw Error(ErrorCode::NotSemisimple, "witness needs a semisimple matrix", eig.condition);
  const std::span<const Complex> values(eig.eigenvalues.data(),
                                        static_cast<std::size_t>(eig.eigenvalues.size()));
  const auto clusters = cluster_points(values, kDefaultGroupingTol * (1.0 + op_norm(t)));
  const std::vector<std::size_t>* repeated = nullptr;
  for (const auto& c : clusters)
    if (c.size() >= 2) {
      repeated = &c;
      break;
    }
  if (repeated == nullptr)
    throw Error(ErrorCode::PreconditionViolated, "matrix has simple spectrum; no repeated eigenspace");

  const auto i = static_cast<Eigen::Index>((*repeated)[0]);
  const auto j = static_cast<Eigen::Index>((*repeated)[1]);
  Complex lambda = 0.0;
  for (std::size_t k : *repeated) lambda += values[k];
  lambda /= static_cast<double>(repeated->size());

  const ComplexMatrix& p = eig.eigenvectors;
  const ComplexMatrix p_inv = p.partialPivLu().inverse();
  const double a = scale / (2.0 * eig.condition);
  const double delta = std::pow(a, 2.5);

  // In the eigenbasis: diagonal D with the i, j entries set to λ and λ + δ
  // and a in position (i, j). Ordering i < j keeps it upper triangular.
  ComplexMatrix m = eig.eigenvalues.asDiagonal();
  m(i, i) = lambda;
  m(j, j) = lambda + delta;
  m(i, j) = a;

  const ScalarFunction f = sqrt_shift(lambda);
  const ComplexMatrix f_m = apply_function(m, f, delta / 100.0);
  DiscontinuityWitness out;
  out.center = lambda;
  out.perturbed = p * m * p_inv;
  out.perturbation_norm = op_norm(out.perturbed - t);
  out.deviation = op_norm(p * f_m * p_inv - apply_function(t, f));
  return out;
}

}  // namespace spshrink
