#include "spshrink/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/LU>

#include "spshrink/eig.hpp"
#include "spshrink/error.hpp"

namespace spshrink {

namespace {

constexpr double kMaxConjugatorCond = 100.0;

std::vector<Complex> sample_diagonal(SpaceId id, Eigen::Index n, Rng& rng) {
  std::vector<Complex> lambda(static_cast<std::size_t>(n));
  switch (id) {
    case SpaceId::GLn_ss:
      for (auto& l : lambda) {
        do l = complex_normal(rng);
        while (std::abs(l) < 0.1);
      }
      break;
    case SpaceId::SLn_ss:
      for (;;) {
        Complex prod = 1.0;
        for (Eigen::Index i = 0; i + 1 < n; ++i) {
          Complex l;
          do l = complex_normal(rng);
          while (std::abs(l) < 0.3);
          lambda[static_cast<std::size_t>(i)] = l;
          prod *= l;
        }
        const Complex last = 1.0 / prod;
        if (std::abs(last) > 5.0) continue;
        lambda.back() = last;
        break;
      }
      break;
    default:
      for (auto& l : lambda) l = complex_normal(rng);
      break;
  }
  return lambda;
}

ComplexMatrix conjugate_diagonal(const std::vector<Complex>& lambda, Rng& rng) {
  const auto n = static_cast<Eigen::Index>(lambda.size());
  const ComplexMatrix p = random_invertible(n, rng, kMaxConjugatorCond);
  return p * diagonal(lambda) * p.partialPivLu().inverse();
}

ComplexMatrix sample_once(SpaceId id, Eigen::Index n, Rng& rng) {
  switch (id) {
    case SpaceId::Mn:
      return ginibre(n, n, rng);
    case SpaceId::GLn:
      for (;;) {
        ComplexMatrix x = ginibre(n, n, rng);
        if (min_singular_value(x) > 1e-3) return x;
      }
    case SpaceId::GLn_star:
      for (;;) {
        ComplexMatrix x = ginibre(n, n, rng);
        if (min_singular_value(x) > 1e-3 && std::abs(x.determinant() + 1.0) > 1e-3) return x;
      }
    case SpaceId::SLn:
      for (;;) {
        ComplexMatrix x = ginibre(n, n, rng);
        const Complex det = x.determinant();
        if (std::abs(det) < 1e-3) continue;
        return x / principal_root(det, static_cast<int>(n));
      }
    case SpaceId::Mn_ss:
    case SpaceId::GLn_ss:
    case SpaceId::SLn_ss:
      return conjugate_diagonal(sample_diagonal(id, n, rng), rng);
    case SpaceId::Un:
      return haar_unitary(n, rng);
    case SpaceId::SUn: {
      const ComplexMatrix u = haar_unitary(n, rng);
      return u / principal_root(u.determinant(), static_cast<int>(n));
    }
    case SpaceId::Nn: {
      const ComplexMatrix q = haar_unitary(n, rng);
      return q * diagonal(sample_diagonal(id, n, rng)) * q.adjoint();
    }
    case SpaceId::Hn:
      return random_hermitian(n, rng);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown space");
}

bool is_unitary(const ComplexMatrix& x, double tol) {
  return op_norm(x.adjoint() * x - identity(x.rows())) <= tol;
}

bool is_invertible(const ComplexMatrix& x, double tol) { return min_singular_value(x) > tol; }

bool has_unit_det(const ComplexMatrix& x, double tol) {
  const double scale = std::pow(std::max(1.0, op_norm(x)), static_cast<double>(x.rows()));
  return std::abs(x.determinant() - 1.0) <= tol * scale;
}

bool is_semisimple(const ComplexMatrix& x) { return eig_decompose(x).semisimple; }

}  // namespace

std::string_view to_string(SpaceId id) {
  switch (id) {
    case SpaceId::Mn: return "mn";
    case SpaceId::Mn_ss: return "mn_ss";
    case SpaceId::GLn: return "gln";
    case SpaceId::GLn_ss: return "gln_ss";
    case SpaceId::SLn: return "sln";
    case SpaceId::SLn_ss: return "sln_ss";
    case SpaceId::Un: return "un";
    case SpaceId::SUn: return "sun";
    case SpaceId::Nn: return "nn";
    case SpaceId::Hn: return "hn";
    case SpaceId::GLn_star: return "gln_star";
  }
  return "unknown";
}

std::optional<SpaceId> parse_space(std::string_view tag) {
  struct Alias {
    std::string_view name;
    SpaceId id;
  };
  static constexpr Alias kAliases[] = {
      {"m", SpaceId::Mn},        {"m_ss", SpaceId::Mn_ss},   {"gl", SpaceId::GLn},
      {"gl_ss", SpaceId::GLn_ss}, {"sl", SpaceId::SLn},      {"sl_ss", SpaceId::SLn_ss},
      {"u", SpaceId::Un},        {"su", SpaceId::SUn},       {"normal", SpaceId::Nn},
      {"h", SpaceId::Hn},        {"gl_star", SpaceId::GLn_star}};
  for (SpaceId id : kAllSpaces)
    if (to_string(id) == tag) return id;
  for (const auto& alias : kAliases)
    if (alias.name == tag) return alias.id;
  return std::nullopt;
}

ComplexMatrix sample(SpaceId id, Eigen::Index n, Rng& rng, const SampleOptions& options) {
  if (n <= 0) throw Error(ErrorCode::UnsupportedDimension, "dimension must be positive");
  for (;;) {
    ComplexMatrix x = sample_once(id, n, rng);
    if (!options.simple_spectrum || n == 1 || min_eigenvalue_gap(x) > options.min_gap) return x;
  }
}

bool membership(SpaceId id, const ComplexMatrix& x, double tol) {
  if (!is_square(x) || x.rows() == 0 || !is_finite(x)) return false;
  switch (id) {
    case SpaceId::Mn: return true;
    case SpaceId::Mn_ss: return is_semisimple(x);
    case SpaceId::GLn: return is_invertible(x, tol);
    case SpaceId::GLn_ss: return is_invertible(x, tol) && is_semisimple(x);
    case SpaceId::GLn_star: return is_invertible(x, tol) && std::abs(x.determinant() + 1.0) > tol;
    case SpaceId::SLn: return has_unit_det(x, tol);
    case SpaceId::SLn_ss: return has_unit_det(x, tol) && is_semisimple(x);
    case SpaceId::Un: return is_unitary(x, tol);
    case SpaceId::SUn: return is_unitary(x, tol) && std::abs(x.determinant() - 1.0) <= tol;
    case SpaceId::Nn: {
      const double norm = op_norm(x);
      return commutator_norm(x, x.adjoint()) <= tol * (1.0 + norm * norm);
    }
    case SpaceId::Hn: return op_norm(x - x.adjoint()) <= tol * (1.0 + op_norm(x));
  }
  return false;
}

void validate(const GeneralSpaceSpec& spec) {
  if (spec.n <= 0) throw Error(ErrorCode::UnsupportedDimension, "dimension must be positive");
  if (!spec.diagonal_sampler || !spec.group_sampler)
    throw Error(ErrorCode::InvalidArgument, "general space needs both samplers");
  for (const auto& v : spec.nilpotent_basis) {
    if (v.rows() != spec.n || v.cols() != spec.n)
      throw Error(ErrorCode::DimensionMismatch, "nilpotent basis element has the wrong size");
    for (Eigen::Index i = 0; i < spec.n; ++i)
      for (Eigen::Index j = 0; j <= i; ++j)
        if (v(i, j) != 0.0)
          throw Error(ErrorCode::InvalidArgument, "nilpotent basis element is not strictly upper triangular");
  }
}

GeneralSample sample_general(const GeneralSpaceSpec& spec, Rng& rng) {
  validate(spec);
  GeneralSample out;
  out.diagonal = spec.diagonal_sampler(rng);
  if (static_cast<Eigen::Index>(out.diagonal.size()) != spec.n)
    throw Error(ErrorCode::DimensionMismatch, "diagonal sampler returned the wrong length");
  ComplexMatrix t = diagonal(out.diagonal);
  for (const auto& v : spec.nilpotent_basis) t += 0.5 * complex_normal(rng) * v;
  out.conjugator = spec.group_sampler(rng);
  if (out.conjugator.rows() != spec.n || out.conjugator.cols() != spec.n)
    throw Error(ErrorCode::DimensionMismatch, "group sampler returned the wrong size");
  const double cond = condition_number(out.conjugator);
  if (!(cond < 1e10)) throw Error(ErrorCode::SingularConjugator, "group element is numerically singular", cond);
  out.matrix = out.conjugator * t * out.conjugator.partialPivLu().inverse();
  return out;
}

GeneralSpaceSpec general_spec_for(SpaceId id, Eigen::Index n) {
  GeneralSpaceSpec spec;
  spec.n = n;
  std::vector<ComplexMatrix> upper;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) {
      ComplexMatrix e = ComplexMatrix::Zero(n, n);
      e(i, j) = 1.0;
      upper.push_back(std::move(e));
    }
  auto gl = [n](Rng& rng) { return random_invertible(n, rng, kMaxConjugatorCond); };
  auto un = [n](Rng& rng) { return haar_unitary(n, rng); };
  switch (id) {
    case SpaceId::Mn:
    case SpaceId::GLn:
    case SpaceId::SLn:
      spec.nilpotent_basis = std::move(upper);
      [[fallthrough]];
    case SpaceId::Mn_ss:
    case SpaceId::GLn_ss:
    case SpaceId::SLn_ss: {
      const SpaceId diag_kind = id == SpaceId::Mn || id == SpaceId::Mn_ss   ? SpaceId::Mn
                                : id == SpaceId::GLn || id == SpaceId::GLn_ss ? SpaceId::GLn_ss
                                                                              : SpaceId::SLn_ss;
      spec.diagonal_sampler = [diag_kind, n](Rng& rng) { return sample_diagonal(diag_kind, n, rng); };
      spec.group_sampler = gl;
      break;
    }
    case SpaceId::Un:
      spec.diagonal_sampler = [n](Rng& rng) {
        std::vector<Complex> l(static_cast<std::size_t>(n));
        for (auto& z : l) z = unit_circle_point(rng);
        return l;
      };
      spec.group_sampler = un;
      break;
    case SpaceId::Nn:
      spec.diagonal_sampler = [n](Rng& rng) { return sample_diagonal(SpaceId::Nn, n, rng); };
      spec.group_sampler = un;
      break;
    default:
      throw Error(ErrorCode::InvalidArgument,
                  std::string("no Ad_G T_{L,V} parameters for space ") + std::string(to_string(id)));
  }
  return spec;
}

double min_eigenvalue_gap(const ComplexMatrix& x) {
  const auto spec = spectrum_of(x);
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < spec.size(); ++i)
    for (std::size_t j = i + 1; j < spec.size(); ++j) gap = std::min(gap, std::abs(spec[i] - spec[j]));
  return gap;
}

Complex principal_root(Complex z, int n) {
  return std::polar(std::pow(std::abs(z), 1.0 / n), std::arg(z) / n);
}

}  // namespace spshrink
