#include <doctest.h>

#include <cmath>
#include <memory>
#include <mutex>

#include "helpers.hpp"
#include "spshrink/random.hpp"
#include "spshrink/reconstruct.hpp"
#include "spshrink/subspace.hpp"

using namespace spshrink;
using spshrink::test::vec;

namespace {

ComplexVector e(int n, int i) {
  ComplexVector v = ComplexVector::Zero(n);
  v(i) = 1.0;
  return v;
}

ComplexMatrix permutation_matrix(const std::vector<int>& images) {
  const auto n = static_cast<Eigen::Index>(images.size());
  ComplexMatrix p = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) p(images[static_cast<std::size_t>(i)], i) = 1.0;
  return p;
}

}  // namespace

TEST_CASE("involution_for_subspace") {
  CHECK(op_norm(involution_for_subspace(Subspace::line(e(2, 0))) - diagonal({1.0, -1.0})) < 1e-15);
  CHECK(op_norm(involution_for_subspace(Subspace::full(4)) - identity(4)) < 1e-14);
  Rng rng = make_rng(1);
  for (int k = 0; k < 20; ++k) {
    const Subspace w = Subspace::random(5, 1 + k % 4, rng);
    const ComplexMatrix u = involution_for_subspace(w);
    CHECK(op_norm(u * u - identity(5)) < 1e-12);
    CHECK(op_norm(u - u.adjoint()) < 1e-12);
    CHECK(subspace_distance(kernel(ComplexMatrix(identity(5) - u)), w) < 1e-10);
  }
}

TEST_CASE("psi examples") {
  Rng rng = make_rng(2);
  const ComplexMatrix t0 = random_invertible(3, rng, 20.0);
  for (int k = 0; k < 10; ++k) {
    const Subspace w = Subspace::random(3, 1 + k % 2, rng);
    CHECK(subspace_distance(psi(identity_oracle(), w), w) < 1e-8);
    CHECK(subspace_distance(psi(conjugation_oracle(t0), w), Subspace::span(t0 * w.basis())) < 1e-7);
  }
  const ComplexVector v = vec({1.0, kI, Complex(0.5, -2.0)});
  CHECK(subspace_distance(psi(transpose_oracle(), Subspace::line(v)), Subspace::line(v.conjugate())) < 1e-8);
  CHECK(psi(identity_oracle(), Subspace::full(3)).dim() == 3);
  CHECK(psi(identity_oracle(), Subspace::zero(3)).dim() == 0);

  const MatrixMap collapse = [](const ComplexMatrix& u) { return ComplexMatrix(-identity(u.rows())); };
  CHECK_THROWS_CODE(psi(collapse, Subspace::line(e(3, 0))), DimensionDrift);
}

TEST_CASE("reconstruct examples") {
  const PreserverClassification id = reconstruct(identity_oracle(), 3);
  CHECK(id.mode == PreserverMode::Conjugation);
  CHECK(projective_error(id.T, identity(3)) < 1e-8);
  CHECK(id.residual <= 1e-8);

  const PreserverClassification tr = reconstruct(transpose_oracle(), 4);
  CHECK(tr.mode == PreserverMode::TransposeConjugation);
  CHECK(projective_error(tr.T, identity(4)) < 1e-8);
  CHECK(tr.residual <= 1e-7);

  Rng rng = make_rng(3);
  for (int k = 0; k < 5; ++k) {
    const ComplexMatrix t0 = random_invertible(3, rng, 50.0);
    const PreserverClassification c = reconstruct(conjugation_oracle(t0), 3, {.seed = static_cast<std::uint64_t>(k)});
    CHECK(c.mode == PreserverMode::Conjugation);
    CHECK(projective_error(c.T, t0) <= 1e-6);
    const PreserverClassification ct = reconstruct(transpose_conjugation_oracle(t0), 3);
    CHECK(ct.mode == PreserverMode::TransposeConjugation);
    CHECK(projective_error(ct.T, t0) <= 1e-6);
  }
}

TEST_CASE("reconstruct is scalar invariant") {
  Rng rng = make_rng(4);
  const ComplexMatrix t0 = random_invertible(3, rng, 20.0);
  const PreserverClassification a = reconstruct(conjugation_oracle(t0), 3);
  const PreserverClassification b = reconstruct(conjugation_oracle(Complex(-2.0, 3.0) * t0), 3);
  CHECK(op_norm(a.T - b.T) <= 1e-7);
  CHECK(std::abs(normalize_gauge(a.T).cwiseAbs().maxCoeff() - 1.0) < 1e-12);
}

TEST_CASE("reconstruct errors") {
  CHECK_THROWS_CODE(reconstruct(identity_oracle(), 2), UnsupportedDimension);
  // Θ fixes every unitary, so on U(n) it is indistinguishable from the identity
  CHECK(projective_error(reconstruct(theta_oracle(), 3).T, identity(3)) < 1e-8);
  const MatrixMap scaled = [](const ComplexMatrix& u) { return ComplexMatrix(Complex(0.0, 1.0) * u); };
  CHECK_THROWS(reconstruct(scaled, 3));
}

TEST_CASE("classify_preserver") {
  Rng rng = make_rng(5);
  const ComplexMatrix t0 = random_invertible(3, rng, 20.0);
  const PreserverClassification nn = classify_preserver(conjugation_oracle(t0), SpaceId::Nn, 3);
  CHECK(nn.mode == PreserverMode::Conjugation);
  CHECK(projective_error(nn.T, t0) <= 1e-6);
  CHECK(classify_preserver(transpose_oracle(), SpaceId::Un, 4).mode == PreserverMode::TransposeConjugation);
  const PreserverClassification sl = classify_preserver(transpose_conjugation_oracle(t0), SpaceId::SLn_ss, 3);
  CHECK(sl.mode == PreserverMode::TransposeConjugation);
  CHECK_THROWS_CODE(classify_preserver(theta_oracle(), SpaceId::GLn_ss, 3), ResidualTooLarge);
  CHECK_THROWS(classify_preserver(identity_oracle(), SpaceId::SUn, 3));
}

TEST_CASE("projective_error and normalize_gauge") {
  Rng rng = make_rng(6);
  const ComplexMatrix t = random_invertible(3, rng);
  CHECK(projective_error(Complex(0.3, -1.0) * t, t) < 1e-14);
  CHECK(projective_error(identity(3), diagonal({1.0, 2.0, 1.0})) > 0.1);
  const ComplexMatrix g = normalize_gauge(Complex(0.0, 5.0) * t);
  CHECK(projective_error(g, t) < 1e-14);
  CHECK(std::abs(g.cwiseAbs().maxCoeff() - 1.0) < 1e-14);
}

TEST_CASE("torus_conjugator") {
  const TorusConjugator id = torus_conjugator(identity_oracle(), identity(3), 20, 1);
  CHECK(projective_error(id.T, identity(3)) < 1e-8);
  CHECK(id.residual <= 1e-6);

  Rng rng = make_rng(7);
  const ComplexMatrix t0 = random_invertible(3, rng, 20.0);
  CHECK(torus_conjugator(conjugation_oracle(t0), identity(3), 20, 2).residual <= 1e-6);

  const ComplexMatrix sigma = permutation_matrix({1, 2, 0});
  const TorusConjugator perm = torus_conjugator(conjugation_oracle(sigma), identity(3), 20, 3);
  CHECK(perm.residual <= 1e-6);
  // the answer is σ up to the diagonal centralizer
  const ComplexMatrix d = sigma.adjoint() * perm.T;
  CHECK(op_norm(d - ComplexMatrix(d.diagonal().asDiagonal())) < 1e-8);

  const ComplexMatrix s = random_invertible(4, rng, 10.0);
  CHECK(torus_conjugator(conjugation_oracle(random_invertible(4, rng, 10.0)), s, 20, 4).residual <= 1e-6);
  // on S·𝕋·S⁻¹ Θ is conjugation by the inverse square of the positive polar factor
  CHECK(torus_conjugator(theta_oracle(), random_invertible(3, rng, 10.0), 20, 5).residual <= 1e-6);
  const MatrixMap square = [](const ComplexMatrix& x) { return ComplexMatrix(x * x); };
  CHECK_THROWS(torus_conjugator(square, identity(3), 20, 6));
}

TEST_CASE("lattice compatibility") {
  Rng rng = make_rng(8);
  const ComplexMatrix t0 = random_invertible(4, rng, 20.0);
  CHECK(lattice_compat_check(identity_oracle(), 4, 20, 1).pass);
  CHECK(lattice_compat_check(conjugation_oracle(t0), 4, 20, 2).pass);
  CHECK(lattice_compat_check(transpose_oracle(), 4, 20, 3).pass);

  struct Corruption {
    std::mutex mu;
    int calls = 0;
    Rng rng = make_rng(99);
  };
  auto state = std::make_shared<Corruption>();
  const MatrixMap corrupted = [state](const ComplexMatrix& u) -> ComplexMatrix {
    std::lock_guard lock(state->mu);
    if (++state->calls % 10 == 0) return haar_unitary(u.rows(), state->rng);
    return u;
  };
  CHECK_FALSE(lattice_compat_check(corrupted, 4, 50, 4).pass);
}
