#pragma once

#include <span>
#include <vector>

#include "spshrink/matrix.hpp"

namespace spshrink {

/// xⁿ + c_{n−1}xⁿ⁻¹ + … + c₀, stored as c₀..c_{n−1}.
class MonicPolynomial {
 public:
  MonicPolynomial() = default;  // the constant 1
  explicit MonicPolynomial(std::vector<Complex> lower_coefficients)
      : coeffs_(std::move(lower_coefficients)) {}

  static MonicPolynomial from_roots(std::span<const Complex> roots);

  std::size_t degree() const noexcept { return coeffs_.size(); }
  const std::vector<Complex>& coefficients() const noexcept { return coeffs_; }

  /// Coefficient of x^k, including the implicit leading 1.
  Complex coefficient(std::size_t k) const;

  Complex operator()(Complex x) const;

  MonicPolynomial operator*(const MonicPolynomial& other) const;
  MonicPolynomial pow(unsigned exponent) const;

 private:
  std::vector<Complex> coeffs_;
};

/// max_k |a_k − b_k|; degrees must agree.
double coefficient_distance(const MonicPolynomial& a, const MonicPolynomial& b);

/// det(xI − X) by the Faddeev–LeVerrier trace recurrence, carried out in
/// extended precision. Never touches an eigensolver.
MonicPolynomial char_poly(const ComplexMatrix& x);

}  // namespace spshrink
