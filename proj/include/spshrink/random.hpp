#pragma once

#include <cstdint>
#include <random>

#include "spshrink/matrix.hpp"

namespace spshrink {

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

double standard_normal(Rng& rng);
double uniform(Rng& rng, double lo, double hi);

/// (a + ib)/√2 with a, b independent standard normals.
Complex complex_normal(Rng& rng);

Complex unit_circle_point(Rng& rng);

/// Entries i.i.d. complex_normal / √n.
ComplexMatrix ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng);

/// Haar-distributed unitary: QR of a Ginibre matrix with the diagonal of R
/// rotated to the positive reals.
ComplexMatrix haar_unitary(Eigen::Index n, Rng& rng);

/// GUE-style: (G + Gᴴ)/2 for Ginibre G.
ComplexMatrix random_hermitian(Eigen::Index n, Rng& rng);

/// Positive definite with eigenvalues in [lo, hi], Haar eigenbasis.
ComplexMatrix random_positive_definite(Eigen::Index n, Rng& rng, double lo = 0.5,
                                       double hi = 2.0);

/// Invertible matrix with condition number at most `max_cond`.
ComplexMatrix random_invertible(Eigen::Index n, Rng& rng, double max_cond = 50.0);

/// Traceless skew-Hermitian direction of unit operator norm.
ComplexMatrix random_traceless_skew_hermitian(Eigen::Index n, Rng& rng);

}  // namespace spshrink
