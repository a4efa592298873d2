#include "spshrink/suite.hpp"

#include <cmath>
#include <functional>
#include <memory>

#include "spshrink/config_space.hpp"
#include "spshrink/eig_select.hpp"
#include "spshrink/error.hpp"
#include "spshrink/reconstruct.hpp"
#include "spshrink/shrinker.hpp"
#include "spshrink/spaces.hpp"
#include "spshrink/spectrum.hpp"
#include "spshrink/ss_calculus.hpp"
#include "spshrink/subspace.hpp"
#include "spshrink/theta.hpp"

namespace spshrink {

namespace {

using Defects = std::map<std::string, double>;

void raise(Defects& d, const std::string& key, double value) {
  auto [it, inserted] = d.try_emplace(key, value);
  if (!inserted) it->second = std::max(it->second, value);
}

CheckResult guarded(std::string name, std::string anchor, const std::function<bool(Defects&)>& body) {
  CheckResult out;
  out.check = std::move(name);
  out.anchor = std::move(anchor);
  try {
    out.pass = body(out.defects);
  } catch (const Error& e) {
    out.pass = false;
    out.error = e.what();
  }
  return out;
}

std::uint64_t sub_seed(const SuiteOptions& o, std::uint64_t salt) { return o.seed * 1000003ULL + salt; }

const ScalarFunction kConj = [](Complex z) { return std::conj(z); };

CheckResult power_law(const SuiteOptions& o, bool inclusion) {
  const char* name = inclusion ? "shrinking_inclusion" : "power_law";
  return guarded(name, "characteristic polynomial of a shrinker is a power of the input's",
                 [&](Defects& d) {
                   bool pass = true;
                   const SpaceId spaces[] = {SpaceId::GLn, SpaceId::SLn, SpaceId::Un,    SpaceId::Nn,
                                             SpaceId::Mn,  SpaceId::GLn_ss, SpaceId::SLn_ss};
                   for (SpaceId id : spaces) {
                     const std::uint64_t seed = sub_seed(o, 10 + static_cast<std::uint64_t>(id));
                     const MatrixMap phi = canonical_shrinker_map(1, 1, random_continuous_conjugator(3, 6, seed));
                     const ShrinkReport r = check_powerlaw(phi, id, 3, 6, {100, seed, o.workers});
                     const std::string tag(to_string(id));
                     if (inclusion) {
                       d["inclusion_" + tag] = r.inclusion_defect;
                       pass = pass && r.inclusion_defect <= 1e-8;
                     } else {
                       d["powerlaw_" + tag] = *r.powerlaw_defect;
                       pass = pass && *r.powerlaw_defect <= 1e-7;
                     }
                   }
                   return pass;
                 });
}

CheckResult divisibility(const SuiteOptions& o) {
  return guarded("divisibility_counterexamples", "degenerate shrinkers on Hermitian and special unitary matrices",
                 [&](Defects& d) {
                   const MatrixMap hn = [](const ComplexMatrix& x) { return degenerate_shrinker_Hn(x, 5); };
                   const MatrixMap su = [](const ComplexMatrix& x) { return degenerate_shrinker_SUn(x, 4); };
                   const ShrinkReport rh = check_powerlaw(hn, SpaceId::Hn, 2, 5, {100, sub_seed(o, 30), o.workers}, false);
                   const ShrinkReport rs = check_powerlaw(su, SpaceId::SUn, 3, 4, {100, sub_seed(o, 31), o.workers}, false);
                   d["inclusion_hn_2_5"] = rh.inclusion_defect;
                   d["inclusion_sun_3_4"] = rs.inclusion_defect;
                   return rh.inclusion_defect <= 1e-8 && rs.inclusion_defect <= 1e-8 && !rh.divisible && !rs.divisible;
                 });
}

CheckResult su_selector(const SuiteOptions& o) {
  return guarded("su_selector", "continuous eigenvalue selection on SU(n)", [&](Defects& d) {
    bool pass = true;
    for (int n = 2; n <= 4; ++n) {
      Rng rng = make_rng(sub_seed(o, 40 + static_cast<std::uint64_t>(n)));
      double inclusion = 0.0, invariance = 0.0, jump = 0.0;
      for (int s = 0; s < 200; ++s) {
        const ComplexMatrix u = sample(SpaceId::SUn, n, rng);
        const ComplexMatrix v = haar_unitary(n, rng);
        const Complex value = su_select(u);
        inclusion = std::max(inclusion, spectrum_of(u).distance_to(value));
        invariance = std::max(invariance, std::abs(su_select(v * u * v.adjoint()) - value));
      }
      for (int p = 0; p < 50; ++p) {
        const ComplexMatrix u0 = sample(SpaceId::SUn, n, rng);
        const ComplexMatrix k = random_traceless_skew_hermitian(n, rng);
        const auto path = [&](double t) { return ComplexMatrix(u0 * expm_skew_hermitian(t * k)); };
        const auto selector = [](const ComplexMatrix& u) { return su_select(u); };
        jump = std::max(jump, sweep_selector(path, selector, 0.0, 1.0, 1e-3).max_jump);
      }
      const std::string tag = "_n" + std::to_string(n);
      d["inclusion" + tag] = inclusion;
      d["conjugation_invariance" + tag] = invariance;
      d["max_jump" + tag] = jump;
      pass = pass && inclusion <= 1e-8 && invariance <= 1e-8 && jump <= 0.05;
    }
    return pass;
  });
}

CheckResult monodromy(const SuiteOptions&) {
  return guarded("monodromy", "no continuous eigenvalue selection near X_z on a loop around 0", [&](Defects& d) {
    bool pass = true;
    for (int n = 2; n <= 6; ++n)
      for (double r : {0.5, 1.0, 2.0}) {
        const MonodromyResult m = monodromy_Xz(n, r, std::max(512, 64 * n));
        raise(d, "ratio_defect", m.ratio_defect);
        raise(d, "not_single_cycle", m.single_cycle ? 0.0 : 1.0);
        pass = pass && m.single_cycle && m.ratio_defect <= 1e-6;
      }
    return pass;
  });
}

CheckResult configuration_space(const SuiteOptions& o) {
  return guarded("configuration_space", "components of the configuration space of the circle", [&](Defects& d) {
    bool pass = true;
    Rng rng = make_rng(sub_seed(o, 60));
    for (int n = 2; n <= 5; ++n) {
      const CirclePoints z = CirclePoints::random(n, rng);
      const PermCoset base = classify_component(z);
      std::set<PermCoset> components;
      double equivariance_failures = 0.0;
      for (const Permutation& sigma : all_permutations(n)) {
        const PermCoset c = classify_component(act(sigma, z));
        if (!(c == base.left_multiply(sigma))) equivariance_failures += 1.0;
        components.insert(c);
      }
      const std::set<Permutation> iso = isotropy_of_component(z);
      const Permutation tau = counterclockwise_order(z);
      const Permutation generator = tau * Permutation::cycle(n) * tau.inverse();
      const bool cyclic = generator.cycle_type() == std::vector<int>{n};
      const bool conjugate = iso == conjugate_cycle_subgroup(tau);
      std::size_t factorial = 1;
      for (int k = 2; k < n; ++k) factorial *= static_cast<std::size_t>(k);
      const std::string tag = "_n" + std::to_string(n);
      d["equivariance_failures" + tag] = equivariance_failures;
      d["isotropy_order" + tag] = static_cast<double>(iso.size());
      d["component_count" + tag] = static_cast<double>(components.size());
      pass = pass && equivariance_failures == 0.0 && iso.size() == static_cast<std::size_t>(n) && cyclic &&
             conjugate && iso.contains(generator) && components.size() == factorial;
    }
    double failures = 0.0;
    for (int n = 2; n <= 8; ++n)
      if (!verify_cycle_decomposition(n)) failures += 1.0;
    d["cycle_decomposition_failures"] = failures;
    return pass && failures == 0.0;
  });
}

CheckResult functional_calculus(const SuiteOptions& o) {
  return guarded("functional_calculus", "functional calculus on semisimple matrices and its 2x2 closed form",
                 [&](Defects& d) {
                   Rng rng = make_rng(sub_seed(o, 70));
                   const ScalarFunction square = [](Complex z) { return z * z; };
                   const ScalarFunction root = sqrt_shift(1.0);
                   double closed = 0.0;
                   for (int s = 0; s < 100; ++s) {
                     const Complex l1 = complex_normal(rng), l2 = complex_normal(rng), a = complex_normal(rng);
                     ComplexMatrix t(2, 2);
                     t << l1, a, 0.0, l2;
                     for (const ScalarFunction* f : {&kConj, &square, &root})
                       closed = std::max(closed, op_norm(calc_2x2_closed_form(l1, l2, a, *f) - apply_function(t, *f)));
                   }
                   double lagrange = 0.0;
                   for (int s = 0; s < 100; ++s) {
                     const ComplexMatrix t = sample(SpaceId::Mn_ss, 4, rng, {true, 1e-2});
                     const ComplexMatrix f1 = apply_function(t, kConj);
                     lagrange = std::max(lagrange, op_norm(f1 - apply_function_lagrange(t, kConj)) / (1.0 + op_norm(f1)));
                   }
                   // T_δ = [[1, δ^{1/4}], [0, 1 + δ]] at δ = 1e-8 with f = √|z − 1|.
                   const double delta = 1e-8;
                   ComplexMatrix t_delta(2, 2);
                   t_delta << 1.0, std::pow(delta, 0.25), 0.0, 1.0 + delta;
                   const double blowup = op_norm(apply_function(t_delta, root, 1e-12));
                   const double distance = op_norm(t_delta - identity(2));
                   d["closed_form_max"] = closed;
                   d["lagrange_max_rel"] = lagrange;
                   d["witness_norm"] = blowup;
                   d["witness_distance"] = distance;
                   return closed <= 1e-10 && lagrange <= 1e-6 && blowup >= 10.0 && distance <= 1e-2 * (1.0 + op_norm(identity(2)));
                 });
}

CheckResult continuity_dichotomy(const SuiteOptions& o) {
  return guarded("continuity_dichotomy", "continuity of the calculus exactly at simple spectrum", [&](Defects& d) {
    const ComplexMatrix t = diagonal({1.0, 2.0, 3.0});
    const std::uint64_t seed = sub_seed(o, 80);
    const double d2 = continuity_probe(t, kConj, 1e-2, 50, seed);
    const double d3 = continuity_probe(t, kConj, 1e-3, 50, seed);
    const double d4 = continuity_probe(t, kConj, 1e-4, 50, seed);
    const DiscontinuityWitness w = repeated_eigenvalue_witness(diagonal({1.0, 1.0, 2.0}), 1e-4);
    d["deviation_1e-2"] = d2;
    d["deviation_1e-3"] = d3;
    d["deviation_1e-4"] = d4;
    d["witness_deviation"] = w.deviation;
    d["witness_perturbation"] = w.perturbation_norm;
    return d2 >= 5.0 * d3 && d3 >= 5.0 * d4 && w.deviation >= 1.0 && w.perturbation_norm <= 1e-4;
  });
}

ComplexMatrix random_normal_with_simple_spectrum(Eigen::Index n, Rng& rng) {
  const ComplexMatrix v = haar_unitary(n, rng);
  ComplexVector dd(n);
  for (;;) {
    for (Eigen::Index k = 0; k < n; ++k) dd(k) = complex_normal(rng) + 0.5 * unit_circle_point(rng);
    double gap = 1e9, smallest = 1e9;
    for (Eigen::Index a = 0; a < n; ++a) {
      smallest = std::min(smallest, std::abs(dd(a)));
      for (Eigen::Index b = a + 1; b < n; ++b) gap = std::min(gap, std::abs(dd(a) - dd(b)));
    }
    if (gap > 1e-2 && smallest > 0.1) break;
  }
  return v * dd.asDiagonal() * v.adjoint();
}

CheckResult theta_checks(const SuiteOptions& o) {
  return guarded("theta", "the involution S N S^-1 -> S^-1 N S on semisimple invertible matrices",
                 [&](Defects& d) {
    bool pass = true;
    for (int n = 2; n <= 4; ++n) {
      Rng rng = make_rng(sub_seed(o, 90 + static_cast<std::uint64_t>(n)));
      const std::string tag = "_n" + std::to_string(n);
      double inv = 0.0, spec = 0.0, fix = 0.0, pf = 0.0, comm = 0.0, ads = 0.0, calc = 0.0;
      for (int s = 0; s < 100; ++s) {
        const ComplexMatrix x = sample(SpaceId::GLn_ss, n, rng, {true, 1e-4});
        const ThetaDecomposition dec = theta_decompose(x);
        const double c2 = dec.condition * dec.condition;
        const ComplexMatrix tx = theta(dec);
        inv = std::max(inv, op_norm(theta(tx) - x) / (op_norm(x) * c2));
        spec = std::max(spec, spectrum_match_distance(spectrum_of(tx), spectrum_of(x)));

        const ComplexMatrix nx = random_normal_with_simple_spectrum(n, rng);
        fix = std::max(fix, op_norm(theta(nx) - nx) / (1.0 + op_norm(nx)));

        ComplexVector gauge(n);
        for (Eigen::Index k = 0; k < n; ++k) gauge(k) = uniform(rng, 0.5, 2.0) * unit_circle_point(rng);
        const ThetaDecomposition other = theta_decompose(x, gauge);
        const double pf_tol = 1e-8 * std::max(c2, other.condition * other.condition);
        const ThetaCheck pfc = check_putnam_fuglede(dec.S, dec.N, other.S, other.N, pf_tol);
        pf = std::max(pf, pfc.defect / pfc.bound * 1e-6);
        pass = pass && pfc.pass;

        const ComplexMatrix sp = random_positive_definite(n, rng);
        const ComplexMatrix v = haar_unitary(n, rng);
        ComplexVector d1(n), d2(n);
        for (Eigen::Index k = 0; k < n; ++k) {
          d1(k) = 1.0 + 0.5 * static_cast<double>(k) + 0.2 * complex_normal(rng);
          d2(k) = complex_normal(rng) + 2.0 * unit_circle_point(rng);
        }
        const ComplexMatrix sp_inv = sp.inverse();
        const ComplexMatrix xa = sp * v * d1.asDiagonal() * v.adjoint() * sp_inv;
        const ComplexMatrix xb = sp * v * d2.asDiagonal() * v.adjoint() * sp_inv;
        const ThetaCheck cc = theta_commutativity_check(xa, xb, 1e-8);
        const ThetaCheck cc2 = theta_commutativity_check(xa, xa * xa, 1e-8);
        comm = std::max({comm, cc.defect / cc.bound * 1e-6, cc2.defect / cc2.bound * 1e-6});
        pass = pass && cc.pass && cc2.pass;

        const ThetaCheck ac = theta_adS_identity(sp, v, 1e-6);
        ads = std::max(ads, ac.defect / ac.bound * 1e-6);
        pass = pass && ac.pass;

        const ComplexMatrix nn = v * d2.asDiagonal() * v.adjoint();
        const double cs = condition_number(sp);
        calc = std::max(calc, op_norm(theta(sp * nn * sp_inv) - theta_via_calculus(sp, nn)) / (cs * cs));
      }
      d["involution" + tag] = inv;
      d["spectrum" + tag] = spec;
      d["normal_fixed" + tag] = fix;
      d["putnam_fuglede" + tag] = pf;
      d["commutativity" + tag] = comm;
      d["ads_identity" + tag] = ads;
      d["via_calculus" + tag] = calc;
      pass = pass && inv <= 1e-6 && spec <= 1e-6 && fix <= 1e-6 && calc <= 1e-6;
    }
    return pass;
  });
}

MatrixMap corrupted_oracle(const ComplexMatrix& t, std::uint64_t seed) {
  auto rng = std::make_shared<Rng>(make_rng(seed));
  const MatrixMap good = conjugation_oracle(t);
  return [rng, good](const ComplexMatrix& x) {
    if (uniform(*rng, 0.0, 1.0) < 0.1) return haar_unitary(x.rows(), *rng);
    return good(x);
  };
}

CheckResult reconstruction(const SuiteOptions& o) {
  return guarded("reconstruction", "spectrum and commutativity preservers are (transpose-)conjugations",
                 [&](Defects& d) {
    bool pass = true;
    struct Case {
      SpaceId id;
      int n;
    };
    const Case cases[] = {{SpaceId::Un, 3}, {SpaceId::Un, 4}, {SpaceId::Nn, 3}, {SpaceId::GLn_ss, 3},
                          {SpaceId::SLn_ss, 3}};
    Rng rng = make_rng(sub_seed(o, 100));
    double mode_errors = 0.0;
    for (const Case& c : cases) {
      const std::string tag = std::string("_") + std::string(to_string(c.id)) + std::to_string(c.n);
      for (int k = 0; k < 25; ++k) {
        const ComplexMatrix t0 = random_invertible(c.n, rng, 50.0);
        for (PreserverMode mode : {PreserverMode::Conjugation, PreserverMode::TransposeConjugation}) {
          const MatrixMap phi =
              mode == PreserverMode::Conjugation ? conjugation_oracle(t0) : transpose_conjugation_oracle(t0);
          ReconstructOptions ro;
          ro.validation_samples = 20;
          ro.seed = sub_seed(o, 1000 + static_cast<std::uint64_t>(k));
          const PreserverClassification r = classify_preserver(phi, c.id, c.n, ro);
          if (r.mode != mode) mode_errors += 1.0;
          raise(d, "projective_error" + tag, projective_error(r.T, t0));
          raise(d, "residual" + tag, r.residual);
        }
      }
      pass = pass && d["projective_error" + tag] <= 1e-5;
    }
    d["mode_errors"] = mode_errors;
    pass = pass && mode_errors == 0.0;

    const int n = 4;
    const ComplexMatrix t0 = random_invertible(n, rng, 50.0);
    const MatrixMap oracles[] = {identity_oracle(), transpose_oracle(), conjugation_oracle(t0),
                                 transpose_conjugation_oracle(t0)};
    double dim_defect = 0.0, incl_defect = 0.0;
    bool lattice = true;
    for (const MatrixMap& phi : oracles) {
      for (int s = 0; s < 100; ++s) {
        const auto k = static_cast<Eigen::Index>(std::min<double>(n, std::floor(uniform(rng, 0.0, n + 1.0))));
        const Subspace w = k == 0 ? Subspace::zero(n) : Subspace::random(n, k, rng);
        ComplexMatrix extra(n, w.dim() + 1);
        extra << w.basis(), ginibre(n, 1, rng);
        const Subspace w2 = Subspace::span(extra);
        try {
          const Subspace pw = psi(phi, w);
          const Subspace pw2 = psi(phi, w2);
          incl_defect = std::max(incl_defect, containment_defect(pw, pw2));
        } catch (const Error& e) {
          if (e.code() != ErrorCode::DimensionDrift) throw;
          dim_defect = std::max(dim_defect, std::abs(e.value().value_or(1.0)));
        }
      }
      const LatticeCheck lc = lattice_compat_check(phi, n, 20, sub_seed(o, 110));
      raise(d, "lattice_defect", lc.max_defect);
      lattice = lattice && lc.pass;
    }
    d["psi_dimension_defect"] = dim_defect;
    d["psi_inclusion_defect"] = incl_defect;
    const bool negative_rejected = !lattice_compat_check(corrupted_oracle(t0, sub_seed(o, 120)), n, 20, sub_seed(o, 121)).pass;
    d["corrupted_oracle_rejected"] = negative_rejected ? 1.0 : 0.0;
    pass = pass && dim_defect <= 1e-6 && incl_defect <= 1e-6 && lattice && negative_rejected;

    bool theta_rejected = false;
    try {
      ReconstructOptions ro;
      ro.seed = sub_seed(o, 130);
      classify_preserver(theta_oracle(), SpaceId::GLn_ss, 3, ro);
    } catch (const Error& e) {
      theta_rejected = e.code() == ErrorCode::ResidualTooLarge;
      if (theta_rejected && e.value()) d["theta_residual"] = *e.value();
    }
    d["theta_rejected"] = theta_rejected ? 1.0 : 0.0;
    return pass && theta_rejected;
  });
}

}  // namespace

CheckResult run_criterion(int id, const SuiteOptions& options) {
  switch (id) {
    case 1: return power_law(options, false);
    case 2: return power_law(options, true);
    case 3: return divisibility(options);
    case 4: return su_selector(options);
    case 5: return monodromy(options);
    case 6: return configuration_space(options);
    case 7: return functional_calculus(options);
    case 8: return continuity_dichotomy(options);
    case 9: return theta_checks(options);
    case 10: return reconstruction(options);
    default: throw Error(ErrorCode::InvalidArgument, "criterion id must be in 1..10");
  }
}

bool same_to_12_digits(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b)) return a == b || (std::isnan(a) && std::isnan(b));
  return std::abs(a - b) <= 1e-12 * std::max(std::abs(a), std::abs(b));
}

std::vector<CheckResult> run_acceptance_suite(const SuiteOptions& options) {
  std::vector<CheckResult> first;
  for (int id = 1; id < kCriterionCount; ++id) first.push_back(run_criterion(id, options));

  CheckResult det;
  det.check = "determinism";
  det.anchor = "identical seeds reproduce identical defects";
  double mismatches = 0.0;
  for (int id = 1; id < kCriterionCount; ++id) {
    const CheckResult again = run_criterion(id, options);
    const CheckResult& before = first[static_cast<std::size_t>(id - 1)];
    if (again.pass != before.pass || again.defects.size() != before.defects.size()) {
      mismatches += 1.0;
      continue;
    }
    for (const auto& [key, value] : before.defects) {
      const auto it = again.defects.find(key);
      if (it == again.defects.end() || !same_to_12_digits(value, it->second)) mismatches += 1.0;
    }
  }
  det.defects["mismatched_defects"] = mismatches;
  det.pass = mismatches == 0.0;
  first.push_back(std::move(det));
  return first;
}

}  // namespace spshrink
