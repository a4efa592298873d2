#pragma once

#include <compare>
#include <set>
#include <vector>

#include "spshrink/matrix.hpp"
#include "spshrink/random.hpp"

namespace spshrink {

/// Permutation of {0,…,n−1} in one-line (array) form: p(i) = images[i].
/// Composition is (p·q)(i) = p(q(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);  // validates

  static Permutation identity(int n);
  /// η = (1 2 ⋯ n): i ↦ i+1 mod n.
  static Permutation cycle(int n);
  static Permutation transposition(int n, int a, int b);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const noexcept { return images_; }

  Permutation operator*(const Permutation& other) const;
  Permutation inverse() const;
  Permutation pow(int exponent) const;
  bool is_identity() const;
  bool fixes(int i) const { return (*this)(i) == i; }
  /// Lengths of the cycles, descending.
  std::vector<int> cycle_type() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

/// All of S_n in lexicographic order.
std::vector<Permutation> all_permutations(int n);

/// Left coset τ⟨η⟩, held by its lexicographically minimal member.
class PermCoset {
 public:
  explicit PermCoset(const Permutation& rep);

  const Permutation& representative() const noexcept { return rep_; }
  int n() const noexcept { return rep_.size(); }
  bool contains(const Permutation& p) const;
  std::vector<Permutation> members() const;

  /// σ·(τ⟨η⟩) = (στ)⟨η⟩.
  PermCoset left_multiply(const Permutation& sigma) const;

  auto operator<=>(const PermCoset&) const = default;

 private:
  Permutation rep_;
};

/// n distinct points on the unit circle.
class CirclePoints {
 public:
  /// Throws InvalidArgument off the circle, DegeneratePoints when two points
  /// are closer than 1e-8.
  explicit CirclePoints(std::vector<Complex> z);

  static CirclePoints random(int n, Rng& rng);

  int size() const noexcept { return static_cast<int>(z_.size()); }
  const std::vector<Complex>& points() const noexcept { return z_; }

  double min_gap() const;

 private:
  std::vector<Complex> z_;
};

/// Traversal order from the point with the smallest principal argument in
/// [0, 2π): z_{τ(1)}, …, z_{τ(n)} counterclockwise.
Permutation counterclockwise_order(const CirclePoints& pts);

/// Component of the configuration space containing `pts`, as τ⟨η⟩.
PermCoset classify_component(const CirclePoints& pts);

/// (σ·z)_j = z_{σ⁻¹(j)}.
CirclePoints act(const Permutation& sigma, const CirclePoints& pts);

/// {σ : classify(σ·pts) = classify(pts)}, by exhaustive search over S_n.
std::set<Permutation> isotropy_of_component(const CirclePoints& pts);

/// g⟨η⟩g⁻¹.
std::set<Permutation> conjugate_cycle_subgroup(const Permutation& g);

/// For every θ ∈ S_n and transposition σ there is s with θηˢθ⁻¹ = σ'σ where
/// σ' fixes a symbol moved by σ. Exhaustive; 2 ≤ n ≤ 8.
bool verify_cycle_decomposition(int n);

}  // namespace spshrink
