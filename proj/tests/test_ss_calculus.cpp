#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "spshrink/random.hpp"
#include "spshrink/spaces.hpp"
#include "spshrink/ss_calculus.hpp"

using namespace spshrink;
using spshrink::test::mat2;

namespace {

const ScalarFunction kConj = [](Complex z) { return std::conj(z); };
const ScalarFunction kSquare = [](Complex z) { return z * z; };
const ScalarFunction kExp = [](Complex z) { return std::exp(z); };

ComplexMatrix random_semisimple(int n, Rng& rng, double max_cond = 100.0) {
  const ComplexMatrix p = random_invertible(n, rng, max_cond);
  std::vector<Complex> d;
  for (int i = 0; i < n; ++i) d.push_back(complex_normal(rng));
  return p * diagonal(d) * p.inverse();
}

}  // namespace

TEST_CASE("spectral_idempotents examples") {
  const SpectralDecomposition d = spectral_idempotents(diagonal({1.0, 1.0, 2.0}));
  REQUIRE(d.pairs.size() == 2);
  for (const auto& [lambda, e] : d.pairs) {
    if (std::abs(lambda - 1.0) < 1e-12) CHECK(relative_error(e, diagonal({1.0, 1.0, 0.0})) < 1e-12);
    else CHECK(relative_error(e, diagonal({0.0, 0.0, 1.0})) < 1e-12);
  }

  const Complex l1(0.3, 1.0), l2(-2.0, 0.5), a(1.5, -0.2);
  const SpectralDecomposition t = spectral_idempotents(mat2(l1, a, 0.0, l2));
  for (const auto& [lambda, e] : t.pairs) {
    const ComplexMatrix e1 = mat2(1.0, a / (l1 - l2), 0.0, 0.0);
    const ComplexMatrix expected = std::abs(lambda - l1) < 1e-12 ? e1 : ComplexMatrix(identity(2) - e1);
    CHECK(op_norm(e - expected) < 1e-12);
  }

  Rng rng = make_rng(1);
  const ComplexMatrix p = random_invertible(3, rng, 20.0);
  const ComplexMatrix pinv = p.inverse();
  const SpectralDecomposition c = spectral_idempotents(p * diagonal({1.0, 2.0, 3.0}) * pinv);
  REQUIRE(c.pairs.size() == 3);
  for (const auto& [lambda, e] : c.pairs) {
    const int i = static_cast<int>(std::lround(lambda.real())) - 1;
    const ComplexMatrix expected = p.col(i) * pinv.row(i);
    CHECK(op_norm(e - expected) <= 1e-7 * condition_number(p));
  }
}

TEST_CASE("spectral decomposition invariants") {
  Rng rng = make_rng(2);
  for (int s = 0; s < 50; ++s) {
    const int n = 2 + s % 4;
    const ComplexMatrix t = random_semisimple(n, rng);
    const double scale = 1e-8 * (1.0 + op_norm(t));
    for (const SpectralDecomposition& d : {spectral_idempotents(t), spectral_idempotents_lagrange(t)}) {
      ComplexMatrix sum_e = ComplexMatrix::Zero(n, n), sum_le = ComplexMatrix::Zero(n, n);
      for (std::size_t i = 0; i < d.pairs.size(); ++i) {
        const auto& [li, ei] = d.pairs[i];
        sum_e += ei;
        sum_le += li * ei;
        CHECK(commutator_norm(ei, t) <= 1e-6 * (1.0 + op_norm(t)) * op_norm(ei));
        for (std::size_t j = 0; j < d.pairs.size(); ++j) {
          const ComplexMatrix expected = i == j ? ei : ComplexMatrix::Zero(n, n);
          CHECK(op_norm(ei * d.pairs[j].idempotent - expected) <= 1e-6 * op_norm(ei) * op_norm(d.pairs[j].idempotent));
        }
      }
      CHECK(op_norm(sum_e - identity(n)) <= 1e-6);
      CHECK(op_norm(sum_le - t) <= 1e3 * scale);
    }
  }
}

TEST_CASE("clustering") {
  const SpectralDecomposition d = spectral_idempotents(diagonal({1.0, 1.0 + 1e-9, 3.0}));
  CHECK(d.pairs.size() == 2);
  CHECK_THROWS_CODE(spectral_idempotents(diagonal({1.0, 1.0 + 5e-6})), AmbiguousClustering);
  CHECK_THROWS_CODE(spectral_idempotents(mat2(1.0, 1.0, 0.0, 1.0)), NotSemisimple);
  CHECK_THROWS_CODE(apply_function(mat2(1.0, 1.0, 0.0, 1.0), kConj), NotSemisimple);
}

TEST_CASE("apply_function examples") {
  Rng rng = make_rng(3);
  const ComplexMatrix t = random_semisimple(4, rng);
  CHECK(relative_error(apply_function(t, [](Complex z) { return z; }), t) < 1e-8);
  CHECK(op_norm(apply_function(t, [](Complex) { return Complex(1.0); }) - identity(4)) < 1e-8);

  const Complex l1(1.0, 0.5), l2(-0.5, 2.0), a(0.7, 0.7);
  for (const ScalarFunction& f : {kConj, kSquare, kExp, sqrt_shift()}) {
    const ComplexMatrix expected = mat2(f(l1), a * (f(l2) - f(l1)) / (l2 - l1), 0.0, f(l2));
    CHECK(op_norm(apply_function(mat2(l1, a, 0.0, l2), f) - expected) <= 1e-10);
    CHECK(op_norm(calc_2x2_closed_form(l1, l2, a, f) - expected) <= 1e-14);
  }
}

TEST_CASE("calc_2x2_closed_form") {
  const Complex i = kI;
  const ComplexMatrix c = calc_2x2_closed_form(i, -i, 1.0, kConj);
  CHECK(std::abs(c(0, 0) + i) < 1e-15);
  CHECK(std::abs(c(1, 1) - i) < 1e-15);
  CHECK(std::abs(c(0, 1) - (i - (-i)) / (-i - i)) < 1e-15);
  CHECK(op_norm(c - apply_function(mat2(i, 1.0, 0.0, -i), kConj)) <= 1e-10);

  CHECK(op_norm(calc_2x2_closed_form(2.0, 3.0, 4.0, [](Complex z) { return z; }) - mat2(2.0, 4.0, 0.0, 3.0)) < 1e-15);
  CHECK(std::abs(calc_2x2_closed_form(2.0, 3.0, 4.0, kSquare)(0, 1) - 4.0 * 5.0) < 1e-12);
  CHECK_THROWS_CODE(calc_2x2_closed_form(1.0, 1.0, 1.0, kSquare), EqualEigenvalues);
}

TEST_CASE("homomorphism, normal conjugation and Ad-invariance") {
  Rng rng = make_rng(4);
  for (int s = 0; s < 40; ++s) {
    const int n = 2 + s % 4;
    const ComplexMatrix t = random_semisimple(n, rng, 20.0);
    const ComplexMatrix fg = apply_function(t, [](Complex z) { return std::conj(z) * z * z; });
    const ComplexMatrix prod = apply_function(t, kConj) * apply_function(t, kSquare);
    CHECK(op_norm(fg - prod) <= 1e-8 * condition_number(t) * (1.0 + op_norm(fg)));

    const ComplexMatrix u = haar_unitary(n, rng);
    std::vector<Complex> d;
    for (int i = 0; i < n; ++i) d.push_back(complex_normal(rng));
    const ComplexMatrix normal = u * diagonal(d) * u.adjoint();
    CHECK(op_norm(apply_function(normal, kConj) - normal.adjoint()) <= 1e-8 * (1.0 + op_norm(normal)));

    const ComplexMatrix sc = random_invertible(n, rng, 100.0);
    const ComplexMatrix lhs = apply_function(sc * t * sc.inverse(), kExp);
    const ComplexMatrix rhs = sc * apply_function(t, kExp) * sc.inverse();
    CHECK(op_norm(lhs - rhs) <= 1e-8 * std::pow(condition_number(sc), 2) * condition_number(t) * (1.0 + op_norm(rhs)));
  }
}

TEST_CASE("Lagrange interpolation agrees with the idempotent route") {
  Rng rng = make_rng(5);
  for (int s = 0; s < 40; ++s) {
    const int n = 2 + s % 4;
    const ComplexMatrix t = random_semisimple(n, rng, 10.0);
    const ComplexMatrix a = apply_function(t, kConj);
    const ComplexMatrix b = apply_function_lagrange(t, kConj);
    CHECK(op_norm(a - b) <= 1e-6 * (1.0 + op_norm(a)));
  }
}

TEST_CASE("continuity probe") {
  const ComplexMatrix t = diagonal({1.0, 2.0, 3.0});
  double prev = 1e9;
  for (double scale : {1e-2, 1e-3, 1e-4}) {
    const double dev = continuity_probe(t, kConj, scale, 40, 7);
    CHECK(dev < prev);
    CHECK(dev <= 10.0 * scale);
    prev = dev;
  }
  CHECK(continuity_probe(t, kConj, 1e-3, 10, 9) == continuity_probe(t, kConj, 1e-3, 10, 9));
}

TEST_CASE("repeated eigenvalue witness") {
  for (const ComplexMatrix& t : {identity(2), diagonal({1.0, 1.0, 2.0})}) {
    double prev = 0.0;
    for (double scale : {1e-2, 1e-3, 1e-4}) {
      const DiscontinuityWitness w = repeated_eigenvalue_witness(t, scale);
      CHECK(w.perturbation_norm <= scale);
      CHECK(op_norm(w.perturbed - t) <= scale * (1.0 + 1e-9));
      CHECK(std::abs(w.center - 1.0) < 1e-12);
      CHECK(w.deviation >= 1.0);
      CHECK(w.deviation > prev);  // grows as the perturbation shrinks
      prev = w.deviation;
    }
  }
  // T_δ = [[1, δ^{1/4}], [0, 1+δ]]
  const double delta = 1e-8;
  const ComplexMatrix f = calc_2x2_closed_form(1.0, 1.0 + delta, std::pow(delta, 0.25), sqrt_shift(1.0));
  CHECK(op_norm(f) >= std::pow(delta, -0.25) * 0.99);
  CHECK_THROWS_CODE(repeated_eigenvalue_witness(diagonal({1.0, 2.0}), 1e-3), PreconditionViolated);
}
