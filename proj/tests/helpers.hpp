#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "spshrink/error.hpp"

#include "spshrink/matrix.hpp"
#include "spshrink/spectrum.hpp"

namespace spshrink::test {

inline ComplexMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
  ComplexMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

inline Spectrum spec(std::vector<Complex> v) { return Spectrum(std::move(v)); }

inline ComplexVector vec(std::vector<Complex> v) {
  ComplexVector out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = v[i];
  return out;
}

inline std::optional<ErrorCode> error_code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace spshrink::test

#define CHECK_THROWS_CODE(expr, expected) \
  CHECK(::spshrink::test::error_code_of([&] { (void)(expr); }) == ::spshrink::ErrorCode::expected)
