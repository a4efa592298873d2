#include "spshrink/spectrum.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>

#include <Eigen/Eigenvalues>

#include "spshrink/error.hpp"

namespace spshrink {

namespace {

bool canonical_less(Complex a, Complex b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

// Kuhn's augmenting-path matching restricted to edges with |a_i − b_j| ≤ t.
bool try_augment(std::size_t i, double t, std::span<const Complex> a,
                 std::span<const Complex> b, std::vector<char>& seen,
                 std::vector<std::ptrdiff_t>& match_of_b) {
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (seen[j] || std::abs(a[i] - b[j]) > t) continue;
    seen[j] = 1;
    if (match_of_b[j] < 0 ||
        try_augment(static_cast<std::size_t>(match_of_b[j]), t, a, b, seen, match_of_b)) {
      match_of_b[j] = static_cast<std::ptrdiff_t>(i);
      return true;
    }
  }
  return false;
}

std::optional<std::vector<std::size_t>> perfect_matching(double t, std::span<const Complex> a,
                                                         std::span<const Complex> b) {
  std::vector<std::ptrdiff_t> match_of_b(b.size(), -1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::vector<char> seen(b.size(), 0);
    if (!try_augment(i, t, a, b, seen, match_of_b)) return std::nullopt;
  }
  std::vector<std::size_t> out(a.size());
  for (std::size_t j = 0; j < b.size(); ++j) out[static_cast<std::size_t>(match_of_b[j])] = j;
  return out;
}

}  // namespace

Spectrum::Spectrum(std::vector<Complex> values) : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end(), canonical_less);
}

double Spectrum::distance_to(Complex z) const {
  double best = std::numeric_limits<double>::infinity();
  for (Complex v : values_) best = std::min(best, std::abs(v - z));
  return best;
}

Spectrum Spectrum::support(double tol) const {
  std::vector<Complex> reps;
  for (const auto& cluster : cluster_points(values_, tol)) {
    Complex sum = 0.0;
    for (std::size_t i : cluster) sum += values_[i];
    reps.push_back(sum / static_cast<double>(cluster.size()));
  }
  return Spectrum(std::move(reps));
}

std::vector<std::vector<std::size_t>> cluster_points(std::span<const Complex> points, double tol) {
  const std::size_t n = points.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(points[i] - points[j]) <= tol) parent[find(j)] = find(i);
  std::vector<std::vector<std::size_t>> by_root(n);
  for (std::size_t i = 0; i < n; ++i) by_root[find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& c : by_root)
    if (!c.empty()) out.push_back(std::move(c));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

double min_cluster_separation(std::span<const Complex> points,
                              const std::vector<std::vector<std::size_t>>& clusters) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < clusters.size(); ++a)
    for (std::size_t b = a + 1; b < clusters.size(); ++b)
      for (std::size_t i : clusters[a])
        for (std::size_t j : clusters[b]) best = std::min(best, std::abs(points[i] - points[j]));
  return best;
}

Spectrum spectrum_of(const ComplexMatrix& m) {
  require_square_finite(m, "spectrum_of input");
  Eigen::ComplexEigenSolver<ComplexMatrix> es(m, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success)
    throw Error(ErrorCode::NumericalFailure, "complex eigensolver did not converge");
  const ComplexVector& ev = es.eigenvalues();
  return Spectrum(std::vector<Complex>(ev.data(), ev.data() + ev.size()));
}

double spectrum_inclusion_defect(const Spectrum& a, const Spectrum& b) {
  if (a.empty() || b.empty()) throw Error(ErrorCode::EmptySpectrum, "inclusion defect of an empty spectrum");
  double worst = 0.0;
  for (Complex z : a) worst = std::max(worst, b.distance_to(z));
  return worst;
}

std::vector<std::size_t> bottleneck_assignment(std::span<const Complex> a,
                                               std::span<const Complex> b) {
  if (a.size() != b.size())
    throw Error(ErrorCode::SizeMismatch, "multisets of different total multiplicity");
  const std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  if (n <= 8) {
    std::vector<std::size_t> best = perm;
    double best_cost = std::numeric_limits<double>::infinity();
    do {
      double cost = 0.0;
      for (std::size_t i = 0; i < n && cost < best_cost; ++i)
        cost = std::max(cost, std::abs(a[i] - b[perm[i]]));
      if (cost < best_cost) {
        best_cost = cost;
        best = perm;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  }
  std::vector<double> thresholds;
  thresholds.reserve(n * n);
  for (Complex x : a)
    for (Complex y : b) thresholds.push_back(std::abs(x - y));
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());
  std::size_t lo = 0, hi = thresholds.size() - 1;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (perfect_matching(thresholds[mid], a, b)) hi = mid;
    else lo = mid + 1;
  }
  return *perfect_matching(thresholds[lo], a, b);
}

double spectrum_match_distance(const Spectrum& a, const Spectrum& b) {
  if (a.size() != b.size())
    throw Error(ErrorCode::SizeMismatch, "multisets of different total multiplicity");
  if (a.empty()) return 0.0;
  const auto match = bottleneck_assignment(a.values(), b.values());
  double cost = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) cost = std::max(cost, std::abs(a[i] - b[match[i]]));
  return cost;
}

}  // namespace spshrink
