#include <doctest.h>

#include <cmath>

#include "spshrink/eig_select.hpp"
#include "spshrink/error.hpp"
#include "spshrink/polynomial.hpp"
#include "spshrink/random.hpp"
#include "spshrink/shrinker.hpp"
#include "spshrink/spectrum.hpp"

using namespace spshrink;

TEST_CASE("canonical_shrinker small cases") {
  Rng rng = make_rng(1);
  const ComplexMatrix x = ginibre(3, 3, rng);
  CHECK(op_norm(canonical_shrinker(x, 1, 0) - x) == 0.0);

  const ComplexMatrix d = diagonal({1.0, 2.0});
  const ComplexMatrix y = canonical_shrinker(d, 1, 1);
  CHECK(y.rows() == 4);
  const MonicPolynomial k2 = char_poly(d).pow(2);
  CHECK(coefficient_distance(char_poly(y), k2) < 1e-13);
  CHECK(std::abs(k2.coefficient(0) - 4.0) < 1e-13);  // (x−1)²(x−2)² at 0

  CHECK_THROWS_AS(canonical_shrinker(x, 0, 0), Error);
}

TEST_CASE("canonical_shrinker with a random conjugator obeys the cube law") {
  const ConjugatorField s = random_continuous_conjugator(3, 9, 7);
  Rng rng = make_rng(2);
  for (int k = 0; k < 20; ++k) {
    const ComplexMatrix x = sample(SpaceId::GLn, 3, rng);
    const ComplexMatrix y = canonical_shrinker(x, 2, 1, s);
    CHECK(coefficient_distance(char_poly(y), char_poly(x).pow(3)) <= 1e-7);
  }
}

TEST_CASE("supports agree as sets for every p, q") {
  Rng rng = make_rng(3);
  for (int p = 0; p <= 2; ++p)
    for (int q = 0; q <= 2; ++q) {
      if (p + q == 0) continue;
      const ComplexMatrix x = sample(SpaceId::Mn_ss, 3, rng, {true, 1e-2});
      const ComplexMatrix y = canonical_shrinker(x, p, q, random_continuous_conjugator(3, 3 * (p + q), 11));
      const Spectrum a = spectrum_of(y).support(1e-6), b = spectrum_of(x).support(1e-6);
      REQUIRE(a.size() == b.size());
      CHECK(spectrum_match_distance(a, b) <= 1e-7);
    }
}

TEST_CASE("power exponents add under block stacking") {
  const ComplexMatrix x = diagonal({1.0, -2.0, kI});
  for (auto [p, q, p2, q2] : {std::array{1, 0, 0, 1}, std::array{2, 1, 1, 1}, std::array{0, 2, 1, 0}}) {
    const ComplexMatrix stacked = block_diagonal(canonical_shrinker(x, p, q), canonical_shrinker(x, p2, q2));
    const auto e = static_cast<unsigned>(p + q + p2 + q2);
    CHECK(coefficient_distance(char_poly(stacked), char_poly(x).pow(e)) < 1e-10);
  }
}

TEST_CASE("check_shrinking examples") {
  const MatrixMap id = [](const ComplexMatrix& x) { return x; };
  CHECK(check_shrinking(id, SpaceId::GLn, 3, 3).inclusion_defect <= 1e-10);
  const MatrixMap shr = canonical_shrinker_map(1, 1);
  CHECK(check_shrinking(shr, SpaceId::Un, 3, 6).inclusion_defect <= 1e-8);
  const MatrixMap zero = [](const ComplexMatrix& x) { return ComplexMatrix(ComplexMatrix::Zero(x.rows(), x.cols())); };
  CHECK(check_shrinking(zero, SpaceId::GLn, 3, 3).inclusion_defect > 0.1);

  const MatrixMap wrong_size = [](const ComplexMatrix&) { return identity(2); };
  try {
    check_shrinking(wrong_size, SpaceId::GLn, 3, 3);
    FAIL("expected DimensionMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DimensionMismatch);
  }
  const MatrixMap throws = [](const ComplexMatrix&) -> ComplexMatrix { throw std::runtime_error("boom"); };
  try {
    check_shrinking(throws, SpaceId::GLn, 3, 3);
    FAIL("expected OracleFailure");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OracleFailure);
  }
}

TEST_CASE("check_powerlaw examples") {
  const MatrixMap id = [](const ComplexMatrix& x) { return x; };
  CHECK(*check_powerlaw(id, SpaceId::GLn, 3, 3).powerlaw_defect <= 1e-12);
  CHECK(*check_powerlaw(canonical_shrinker_map(1, 1), SpaceId::GLn, 3, 6).powerlaw_defect <= 1e-7);
  try {
    check_powerlaw(id, SpaceId::GLn, 3, 4);
    FAIL("expected DivisibilityViolation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DivisibilityViolation);
  }
}

TEST_CASE("parallel evaluation matches serial") {
  const MatrixMap phi = canonical_shrinker_map(1, 1, random_continuous_conjugator(3, 6, 4));
  const ShrinkReport a = check_powerlaw(phi, SpaceId::Mn, 3, 6, {50, 9, 1});
  const ShrinkReport b = check_powerlaw(phi, SpaceId::Mn, 3, 6, {50, 9, 4});
  CHECK(a.inclusion_defect == b.inclusion_defect);
  CHECK(*a.powerlaw_defect == *b.powerlaw_defect);
}

TEST_CASE("degenerate shrinker on Hermitian matrices") {
  CHECK(op_norm(degenerate_shrinker_Hn(diagonal({3.0, -1.0}), 5) - 3.0 * identity(5)) < 1e-14);
  CHECK(op_norm(degenerate_shrinker_Hn(identity(2), 3) - identity(3)) < 1e-14);
  CHECK_THROWS_AS(degenerate_shrinker_Hn(kI * identity(2), 3), Error);

  const MatrixMap phi = [](const ComplexMatrix& x) { return degenerate_shrinker_Hn(x, 7); };
  CHECK(check_shrinking(phi, SpaceId::Hn, 4, 7).inclusion_defect <= 1e-10);
  const ShrinkReport r = check_powerlaw(phi, SpaceId::Hn, 4, 7, {}, false);
  CHECK_FALSE(r.divisible);
  CHECK_FALSE(r.powerlaw_defect.has_value());
}

TEST_CASE("degenerate shrinker on SU(n)") {
  CHECK(op_norm(degenerate_shrinker_SUn(identity(3), 2) - identity(2)) < 1e-12);
  CHECK(op_norm(degenerate_shrinker_SUn(diagonal({kI, kI, -1.0}), 4) + identity(4)) < 1e-12);
  CHECK_THROWS_AS(degenerate_shrinker_SUn(2.0 * identity(2), 2), Error);

  Rng rng = make_rng(5);
  const ComplexMatrix u0 = sample(SpaceId::SUn, 3, rng);
  const ComplexMatrix k = random_traceless_skew_hermitian(3, rng);
  const EigenPath path = sweep_selector(
      [&](double t) { return ComplexMatrix(u0 * expm_skew_hermitian(t * k)); },
      [](const ComplexMatrix& u) { return degenerate_shrinker_SUn(u, 2)(0, 0); }, 0.0, 1.0, 1e-3);
  CHECK(path.max_jump <= 0.05);
}
