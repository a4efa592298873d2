#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "spshrink/matrix.hpp"

namespace spshrink {

/// Multiset of eigenvalues in canonical (Re, Im) lexicographic order.
class Spectrum {
 public:
  Spectrum() = default;
  explicit Spectrum(std::vector<Complex> values);

  const std::vector<Complex>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  Complex operator[](std::size_t i) const { return values_[i]; }

  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  /// Distance from z to the nearest point of the spectrum.
  double distance_to(Complex z) const;

  /// Single-linkage clusters of points within `tol`; one representative
  /// (cluster mean) per cluster, canonical order.
  Spectrum support(double tol) const;

 private:
  std::vector<Complex> values_;
};

/// Single-linkage clusters of `points` at distance ≤ tol; each cluster lists
/// indices into `points`, clusters ordered by their first index.
std::vector<std::vector<std::size_t>> cluster_points(std::span<const Complex> points, double tol);

/// Smallest distance between points of different clusters (∞ for one cluster).
double min_cluster_separation(std::span<const Complex> points,
                              const std::vector<std::vector<std::size_t>>& clusters);

/// Spectrum of a square matrix (eigenvalues from the dense eigensolver).
Spectrum spectrum_of(const ComplexMatrix& m);

/// Directed Hausdorff distance max_{a∈A} min_{b∈B} |a − b|; zero iff A ⊆ B
/// as sets.
double spectrum_inclusion_defect(const Spectrum& a, const Spectrum& b);

/// Bottleneck matching distance min_σ max_i |a_i − b_σ(i)| between
/// equal-size multisets. Exhaustive permutation search up to eight points,
/// threshold search with bipartite matching above that.
double spectrum_match_distance(const Spectrum& a, const Spectrum& b);

/// Optimal bottleneck assignment; result[i] is the index in `b` matched to
/// a[i].
std::vector<std::size_t> bottleneck_assignment(std::span<const Complex> a,
                                               std::span<const Complex> b);

}  // namespace spshrink
