#include "spshrink/polynomial.hpp"

#include <algorithm>

#include "spshrink/error.hpp"

namespace spshrink {

MonicPolynomial MonicPolynomial::from_roots(std::span<const Complex> roots) {
  MonicPolynomial p;
  for (Complex r : roots) p = p * MonicPolynomial({-r});
  return p;
}

Complex MonicPolynomial::coefficient(std::size_t k) const {
  if (k == coeffs_.size()) return 1.0;
  if (k > coeffs_.size()) return 0.0;
  return coeffs_[k];
}

Complex MonicPolynomial::operator()(Complex x) const {
  Complex acc = 1.0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
  return acc;
}

MonicPolynomial MonicPolynomial::operator*(const MonicPolynomial& other) const {
  const std::size_t deg = degree() + other.degree();
  std::vector<Complex> out(deg + 1, 0.0);
  for (std::size_t i = 0; i <= degree(); ++i)
    for (std::size_t j = 0; j <= other.degree(); ++j)
      out[i + j] += coefficient(i) * other.coefficient(j);
  out.pop_back();
  return MonicPolynomial(std::move(out));
}

MonicPolynomial MonicPolynomial::pow(unsigned exponent) const {
  MonicPolynomial result;
  MonicPolynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent > 0) base = base * base;
  }
  return result;
}

double coefficient_distance(const MonicPolynomial& a, const MonicPolynomial& b) {
  if (a.degree() != b.degree())
    throw Error(ErrorCode::DimensionMismatch, "polynomial degrees differ");
  double worst = 0.0;
  for (std::size_t k = 0; k < a.degree(); ++k)
    worst = std::max(worst, std::abs(a.coefficients()[k] - b.coefficients()[k]));
  return worst;
}

MonicPolynomial char_poly(const ComplexMatrix& x) {
  require_square_finite(x, "char_poly input");
  using Wide = std::complex<long double>;
  using WideMatrix = Eigen::Matrix<Wide, Eigen::Dynamic, Eigen::Dynamic>;
  const auto n = x.rows();
  const WideMatrix a = x.cast<Wide>();
  // M_k = A·M_{k−1} + c_{n−k+1}·I,  c_{n−k} = −tr(A·M_k)/k.
  std::vector<Wide> c(static_cast<std::size_t>(n) + 1);
  c[static_cast<std::size_t>(n)] = 1.0L;
  WideMatrix m = WideMatrix::Zero(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    m = a * m;
    m.diagonal().array() += c[static_cast<std::size_t>(n - k + 1)];
    const Wide tr = (a * m).trace();
    c[static_cast<std::size_t>(n - k)] = -tr / static_cast<long double>(k);
  }
  std::vector<Complex> out(static_cast<std::size_t>(n));
  for (Eigen::Index k = 0; k < n; ++k) {
    const Wide ck = c[static_cast<std::size_t>(k)];
    out[static_cast<std::size_t>(k)] =
        Complex(static_cast<double>(ck.real()), static_cast<double>(ck.imag()));
  }
  return MonicPolynomial(std::move(out));
}

}  // namespace spshrink
