#include <doctest.h>

#include <cmath>

#include <Eigen/LU>

#include "helpers.hpp"
#include "spshrink/eig.hpp"
#include "spshrink/error.hpp"
#include "spshrink/polynomial.hpp"
#include "spshrink/random.hpp"
#include "spshrink/spectrum.hpp"
#include "spshrink/subspace.hpp"

using namespace spshrink;
using test::mat2;
using test::spec;
using test::vec;

TEST_CASE("eig_decompose on diagonal and Jordan inputs") {
  const EigDecomposition d = eig_decompose(diagonal({1.0, 2.0, 3.0}));
  CHECK(d.semisimple);
  REQUIRE(d.spectrum.size() == 3);
  for (int k = 0; k < 3; ++k) CHECK(std::abs(d.spectrum[k] - Complex(k + 1.0)) < 1e-14);

  const EigDecomposition j = eig_decompose(mat2(0, 1, 0, 0));
  CHECK_FALSE(j.semisimple);
  CHECK(std::abs(j.spectrum[0]) < 1e-14);
  CHECK(std::abs(j.spectrum[1]) < 1e-14);

  // Repeated but diagonalizable: the repair path must keep it semisimple.
  Rng rng = make_rng(4);
  const ComplexMatrix p = random_invertible(3, rng, 20.0);
  const ComplexMatrix x = p * diagonal({2.0, 2.0, -1.0}) * p.inverse();
  const EigDecomposition r = eig_decompose(x);
  CHECK(r.semisimple);
  const ComplexMatrix back = r.eigenvectors * r.eigenvalues.asDiagonal() * r.eigenvectors.inverse();
  CHECK(op_norm(back - x) <= 1e-8 * op_norm(x));
}

TEST_CASE("eig_decompose against the Hermitian solver") {
  Rng rng = make_rng(11);
  for (int s = 0; s < 20; ++s) {
    const ComplexMatrix h = random_hermitian(4, rng);
    const EigDecomposition d = eig_decompose(h);
    const HermitianEig he = hermitian_eig(h);
    CHECK(d.semisimple);
    CHECK(d.condition < 1.0 + 1e-6);
    std::vector<Complex> ref;
    for (int k = 0; k < 4; ++k) ref.emplace_back(he.eigenvalues(k));
    CHECK(spectrum_match_distance(d.spectrum, spec(ref)) < 1e-10);
    for (Complex z : d.spectrum) CHECK(std::abs(z.imag()) < 1e-10);
  }
}

TEST_CASE("eig_decompose rejects non-finite input") {
  ComplexMatrix x = identity(2);
  x(0, 1) = std::nan("");
  CHECK_THROWS_AS(eig_decompose(x), Error);
}

TEST_CASE("char_poly examples") {
  const MonicPolynomial p = char_poly(identity(2));
  CHECK(std::abs(p.coefficient(1) + 2.0) < 1e-14);
  CHECK(std::abs(p.coefficient(0) - 1.0) < 1e-14);
  const MonicPolynomial q = char_poly(diagonal({1.0, 2.0, 3.0}));
  CHECK(std::abs(q.coefficient(2) + 6.0) < 1e-13);
  CHECK(std::abs(q.coefficient(1) - 11.0) < 1e-13);
  CHECK(std::abs(q.coefficient(0) + 6.0) < 1e-13);
  CHECK(q.coefficient(3) == Complex(1.0));
}

TEST_CASE("char_poly agrees with the eigenvalue expansion") {
  Rng rng = make_rng(5);
  for (int s = 0; s < 50; ++s) {
    const Eigen::Index n = 2 + s % 5;
    const ComplexMatrix x = ginibre(n, n, rng) * 2.0;
    const Spectrum sp = spectrum_of(x);
    const MonicPolynomial from_eig = MonicPolynomial::from_roots(sp.values());
    const double scale = std::pow(1.0 + op_norm(x), static_cast<double>(n));
    CHECK(coefficient_distance(char_poly(x), from_eig) <= 1e-6 * scale);
    if (n == 5) CHECK(coefficient_distance(char_poly(x), from_eig) <= 1e-8 * scale);
  }
}

TEST_CASE("spectrum_inclusion_defect") {
  CHECK(spectrum_inclusion_defect(spec({1.0, 2.0}), spec({1.0, 2.0, 3.0})) == 0.0);
  CHECK(spectrum_inclusion_defect(spec({1.0, 2.0, 3.0}), spec({1.0, 2.0})) == doctest::Approx(1.0));
  CHECK_THROWS_AS(spectrum_inclusion_defect(spec({}), spec({1.0})), Error);
  CHECK_THROWS_AS(spectrum_inclusion_defect(spec({1.0}), spec({})), Error);
}

TEST_CASE("spectrum_match_distance examples") {
  CHECK(spectrum_match_distance(spec({1.0, kI, -1.0}), spec({1.0, kI, -1.0})) == 0.0);
  CHECK(spectrum_match_distance(spec({0.0, 1.0}), spec({1.0, 0.0})) == 0.0);
  CHECK(spectrum_match_distance(spec({0.0, 1.0}), spec({0.1, 1.0})) == doctest::Approx(0.1));
  try {
    spectrum_match_distance(spec({0.0}), spec({0.0, 1.0}));
    FAIL("expected SizeMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SizeMismatch);
  }
}

TEST_CASE("spectrum_match_distance is a pseudometric") {
  Rng rng = make_rng(8);
  for (int s = 0; s < 200; ++s) {
    const int n = 1 + s % 10;  // crosses the exhaustive / matching boundary
    auto draw = [&] {
      std::vector<Complex> v;
      for (int k = 0; k < n; ++k) v.push_back(complex_normal(rng));
      return spec(v);
    };
    const Spectrum a = draw(), b = draw(), c = draw();
    CHECK(std::abs(spectrum_match_distance(a, b) - spectrum_match_distance(b, a)) <= 1e-12);
    CHECK(spectrum_match_distance(a, c) <= spectrum_match_distance(a, b) + spectrum_match_distance(b, c) + 1e-12);
  }
}

TEST_CASE("bottleneck matching beyond eight points matches brute force on permuted copies") {
  Rng rng = make_rng(21);
  std::vector<Complex> a;
  for (int k = 0; k < 10; ++k) a.push_back(complex_normal(rng));
  std::vector<Complex> b(a.rbegin(), a.rend());
  b[3] += 0.01;
  CHECK(spectrum_match_distance(spec(a), spec(b)) == doctest::Approx(0.01).epsilon(1e-9));
}

TEST_CASE("polar_decompose examples") {
  Rng rng = make_rng(2);
  const ComplexMatrix u = haar_unitary(3, rng);
  const PolarDecomposition pu = polar_decompose(u);
  CHECK(op_norm(pu.positive - identity(3)) < 1e-12);
  CHECK(op_norm(pu.unitary - u) < 1e-12);

  const ComplexMatrix p0 = random_positive_definite(3, rng);
  const PolarDecomposition pp = polar_decompose(p0);
  CHECK(op_norm(pp.positive - p0) < 1e-12);
  CHECK(op_norm(pp.unitary - identity(3)) < 1e-12);

  CHECK_THROWS_AS(polar_decompose(mat2(1, 0, 0, 0)), Error);
}

TEST_CASE("polar_decompose round trip against the SVD oracle") {
  Rng rng = make_rng(3);
  for (int s = 0; s < 100; ++s) {
    const ComplexMatrix x = random_invertible(3 + s % 3, rng);
    const PolarDecomposition pd = polar_decompose(x);
    const auto n = x.rows();
    CHECK(op_norm(pd.positive * pd.unitary - x) <= 1e-10 * op_norm(x));
    CHECK(op_norm(pd.unitary.adjoint() * pd.unitary - identity(n)) <= 1e-10);
    CHECK(op_norm(pd.positive - pd.positive.adjoint()) <= 1e-12);
    CHECK(hermitian_eig(pd.positive).eigenvalues(0) > 0.0);
    // P² = X Xᴴ
    CHECK(op_norm(pd.positive * pd.positive - x * x.adjoint()) <= 1e-10 * (1.0 + op_norm(x) * op_norm(x)));
  }
}

TEST_CASE("projection") {
  const Subspace e1 = Subspace::line(vec({1.0, 0.0}));
  CHECK(op_norm(projection(e1) - mat2(1, 0, 0, 0)) < 1e-15);
  CHECK(op_norm(projection(Subspace::full(3)) - identity(3)) < 1e-15);
  Rng rng = make_rng(6);
  for (int s = 0; s < 20; ++s) {
    const ComplexMatrix p = projection(Subspace::random(4, 2, rng));
    CHECK(op_norm(p * p - p) < 1e-12);
    CHECK(op_norm(p - p.adjoint()) < 1e-12);
    CHECK(std::abs(p.trace() - 2.0) < 1e-12);
  }
}

TEST_CASE("projections_commute") {
  const Subspace e1 = Subspace::line(vec({1.0, 0.0}));
  const Subspace e2 = Subspace::line(vec({0.0, 1.0}));
  const Subspace diag = Subspace::line(vec({1.0, 1.0}));
  CHECK(projections_commute(e1, e2));
  CHECK_FALSE(projections_commute(e1, diag));
  Rng rng = make_rng(7);
  const Subspace w = Subspace::random(4, 1, rng);
  ComplexMatrix bigger(4, 2);
  bigger << w.basis(), ginibre(4, 1, rng);
  CHECK(projections_commute(w, Subspace::span(bigger)));
  CHECK_THROWS_AS(projections_commute(e1, Subspace::full(3)), Error);
}

TEST_CASE("commuting projections share an orthonormal eigenbasis") {
  Rng rng = make_rng(9);
  for (int s = 0; s < 30; ++s) {
    const ComplexMatrix q = haar_unitary(4, rng);
    auto cols = [&](std::initializer_list<int> idx) {
      ComplexMatrix m(4, static_cast<Eigen::Index>(idx.size()));
      int c = 0;
      for (int i : idx) m.col(c++) = q.col(i);
      return Subspace::from_orthonormal(m);
    };
    const Subspace a = cols({0, 1}), b = cols({1, 2});
    REQUIRE(projections_commute(a, b));
    // a generic combination of the two projections has the columns of q as
    // eigenvectors
    const ComplexMatrix h = projection(a) + 2.0 * projection(b);
    const HermitianEig he = hermitian_eig(h);
    const ComplexMatrix d = he.eigenvectors.adjoint() * projection(a) * he.eigenvectors;
    const ComplexMatrix e = he.eigenvectors.adjoint() * projection(b) * he.eigenvectors;
    CHECK((d - ComplexMatrix(d.diagonal().asDiagonal())).norm() < 1e-10);
    CHECK((e - ComplexMatrix(e.diagonal().asDiagonal())).norm() < 1e-10);
  }
}

TEST_CASE("kernel") {
  const Subspace k = kernel(diagonal({0.0, 1.0, 2.0}));
  CHECK(subspace_distance(k, Subspace::line(vec({1.0, 0.0, 0.0}))) < 1e-14);
  CHECK(kernel(ComplexMatrix::Zero(3, 3)).dim() == 3);
  CHECK(kernel(identity(3)).dim() == 0);

  Rng rng = make_rng(10);
  const ComplexMatrix v = haar_unitary(3, rng);
  const ComplexMatrix u = v * diagonal({1.0, kI, -1.0}) * v.adjoint();
  const Subspace kv = kernel(kI * identity(3) - u);
  CHECK(subspace_distance(kv, Subspace::line(v.col(1))) <= 1e-8);
}

TEST_CASE("kernel of lambda I - X is one-dimensional at simple spectrum") {
  Rng rng = make_rng(12);
  for (int s = 0; s < 20; ++s) {
    const ComplexMatrix x = ginibre(4, 4, rng);
    for (Complex lambda : spectrum_of(x)) CHECK(kernel(lambda * identity(4) - x).dim() == 1);
  }
}

TEST_CASE("subspace_distance") {
  const Subspace e1 = Subspace::line(vec({1.0, 0.0}));
  CHECK(subspace_distance(e1, e1) == 0.0);
  CHECK(subspace_distance(e1, Subspace::line(vec({0.0, 1.0}))) == doctest::Approx(1.0));
  for (double theta : {0.1, 0.7, 1.3, 2.9}) {
    const Subspace l = Subspace::line(vec({std::cos(theta), std::sin(theta)}));
    CHECK(subspace_distance(e1, l) == doctest::Approx(std::abs(std::sin(theta))).epsilon(1e-12));
  }
  CHECK_THROWS_AS(subspace_distance(e1, Subspace::full(3)), Error);
}
