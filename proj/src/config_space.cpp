#include "spshrink/config_space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "spshrink/error.hpp"

namespace spshrink {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= size() || seen[static_cast<std::size_t>(v)])
      throw Error(ErrorCode::InvalidArgument, "array is not a permutation");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return Permutation(std::move(p));
}

Permutation Permutation::cycle(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = (i + 1) % n;
  return Permutation(std::move(p));
}

Permutation Permutation::transposition(int n, int a, int b) {
  std::vector<int> p = identity(n).images();
  std::swap(p.at(static_cast<std::size_t>(a)), p.at(static_cast<std::size_t>(b)));
  return Permutation(std::move(p));
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (size() != other.size()) throw Error(ErrorCode::DimensionMismatch, "permutations of different degree");
  std::vector<int> p(images_.size());
  for (int i = 0; i < size(); ++i) p[static_cast<std::size_t>(i)] = (*this)(other(i));
  Permutation out;
  out.images_ = std::move(p);
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> p(images_.size());
  for (int i = 0; i < size(); ++i) p[static_cast<std::size_t>((*this)(i))] = i;
  Permutation out;
  out.images_ = std::move(p);
  return out;
}

Permutation Permutation::pow(int exponent) const {
  const int n = size();
  Permutation base = exponent < 0 ? inverse() : *this;
  Permutation out = identity(n);
  for (int k = 0; k < std::abs(exponent); ++k) out = base * out;
  return out;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<char> seen(images_.size(), 0);
  std::vector<int> lengths;
  for (int i = 0; i < size(); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int len = 0;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = (*this)(j)) {
      seen[static_cast<std::size_t>(j)] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> p = Permutation::identity(n).images();
  std::vector<Permutation> out;
  do out.emplace_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

PermCoset::PermCoset(const Permutation& rep) {
  const Permutation eta = Permutation::cycle(rep.size());
  Permutation best = rep;
  Permutation current = rep;
  for (int s = 1; s < rep.size(); ++s) {
    current = current * eta;
    best = std::min(best, current);
  }
  rep_ = std::move(best);
}

bool PermCoset::contains(const Permutation& p) const {
  if (p.size() != n()) return false;
  return PermCoset(p) == *this;
}

std::vector<Permutation> PermCoset::members() const {
  const Permutation eta = Permutation::cycle(n());
  std::vector<Permutation> out;
  Permutation current = rep_;
  for (int s = 0; s < n(); ++s) {
    out.push_back(current);
    current = current * eta;
  }
  return out;
}

PermCoset PermCoset::left_multiply(const Permutation& sigma) const { return PermCoset(sigma * rep_); }

CirclePoints::CirclePoints(std::vector<Complex> z) : z_(std::move(z)) {
  if (z_.empty()) throw Error(ErrorCode::InvalidArgument, "need at least one point");
  for (Complex p : z_)
    if (std::abs(std::abs(p) - 1.0) > 1e-10) throw Error(ErrorCode::InvalidArgument, "point is off the unit circle");
  if (z_.size() > 1 && min_gap() <= 1e-8)
    throw Error(ErrorCode::DegeneratePoints, "points coincide within tolerance", min_gap());
}

CirclePoints CirclePoints::random(int n, Rng& rng) {
  for (;;) {
    std::vector<Complex> z(static_cast<std::size_t>(n));
    for (auto& p : z) p = unit_circle_point(rng);
    bool ok = true;
    for (std::size_t i = 0; i < z.size() && ok; ++i)
      for (std::size_t j = i + 1; j < z.size() && ok; ++j) ok = std::abs(z[i] - z[j]) > 1e-6;
    if (ok) return CirclePoints(std::move(z));
  }
}

double CirclePoints::min_gap() const {
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < z_.size(); ++i)
    for (std::size_t j = i + 1; j < z_.size(); ++j) gap = std::min(gap, std::abs(z_[i] - z_[j]));
  return gap;
}

Permutation counterclockwise_order(const CirclePoints& pts) {
  const int n = pts.size();
  std::vector<double> angle(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double a = std::arg(pts.points()[static_cast<std::size_t>(i)]);
    if (a < 0.0) a += 2.0 * kPi;
    angle[static_cast<std::size_t>(i)] = a;
  }
  std::vector<int> order = Permutation::identity(n).images();
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return angle[static_cast<std::size_t>(a)] < angle[static_cast<std::size_t>(b)]; });
  return Permutation(std::move(order));
}

PermCoset classify_component(const CirclePoints& pts) { return PermCoset(counterclockwise_order(pts)); }

CirclePoints act(const Permutation& sigma, const CirclePoints& pts) {
  if (sigma.size() != pts.size()) throw Error(ErrorCode::DimensionMismatch, "permutation degree differs");
  const Permutation inv = sigma.inverse();
  std::vector<Complex> out(pts.points().size());
  for (int j = 0; j < pts.size(); ++j) out[static_cast<std::size_t>(j)] = pts.points()[static_cast<std::size_t>(inv(j))];
  return CirclePoints(std::move(out));
}

std::set<Permutation> isotropy_of_component(const CirclePoints& pts) {
  const PermCoset home = classify_component(pts);
  std::set<Permutation> out;
  for (const auto& sigma : all_permutations(pts.size()))
    if (classify_component(act(sigma, pts)) == home) out.insert(sigma);
  return out;
}

std::set<Permutation> conjugate_cycle_subgroup(const Permutation& g) {
  const Permutation eta = Permutation::cycle(g.size());
  const Permutation ginv = g.inverse();
  std::set<Permutation> out;
  Permutation power = Permutation::identity(g.size());
  for (int s = 0; s < g.size(); ++s) {
    out.insert(g * power * ginv);
    power = power * eta;
  }
  return out;
}

bool verify_cycle_decomposition(int n) {
  if (n < 2 || n > 8) throw Error(ErrorCode::InvalidArgument, "exhaustive range is 2 ≤ n ≤ 8");
  const Permutation eta = Permutation::cycle(n);
  std::vector<Permutation> eta_powers;
  for (int s = 0; s < n; ++s) eta_powers.push_back(eta.pow(s));
  for (const auto& theta : all_permutations(n)) {
    const Permutation theta_inv = theta.inverse();
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        const Permutation sigma = Permutation::transposition(n, a, b);
        bool found = false;
        for (int s = 0; s < n && !found; ++s) {
          // θηˢθ⁻¹ = σ'σ  ⇔  σ' = θηˢθ⁻¹σ  (σ is an involution).
          const Permutation rest = theta * eta_powers[static_cast<std::size_t>(s)] * theta_inv * sigma;
          found = rest.fixes(a) || rest.fixes(b);
        }
        if (!found) return false;
      }
  }
  return true;
}

}  // namespace spshrink
