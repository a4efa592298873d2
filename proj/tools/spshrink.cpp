// Batch runner: one subcommand per module, JSON report on stdout.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spshrink/config_space.hpp"
#include "spshrink/eig_select.hpp"
#include "spshrink/error.hpp"
#include "spshrink/parallel.hpp"
#include "spshrink/reconstruct.hpp"
#include "spshrink/report.hpp"
#include "spshrink/shrinker.hpp"
#include "spshrink/spaces.hpp"
#include "spshrink/spectrum.hpp"
#include "spshrink/ss_calculus.hpp"
#include "spshrink/suite.hpp"
#include "spshrink/theta.hpp"

using namespace spshrink;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::uint64_t seed = 0;
  std::size_t workers = default_workers();
};

// Runs `body`; a library error becomes a failed check carrying the message.
CheckResult run_check(const std::string& name, const std::string& anchor,
                      const std::function<bool(CheckResult&)>& body) {
  CheckResult r;
  r.check = name;
  r.anchor = anchor;
  try {
    r.pass = body(r);
  } catch (const Error& e) {
    r.pass = false;
    r.error = e.what();
    if (e.value()) r.defects["error_value"] = *e.value();
  }
  return r;
}

SpaceId require_space(const std::string& tag) {
  const auto id = parse_space(tag);
  if (!id) throw UsageError("unknown space '" + tag + "'");
  return *id;
}

std::pair<int, int> parse_pq(const std::string& text) {
  int p = 0, q = 0;
  char comma = 0;
  std::istringstream in(text);
  if (!(in >> p >> comma >> q) || comma != ',' || p < 0 || q < 0 || p + q < 1 || !in.eof())
    throw UsageError("--pq expects p,q with p,q >= 0 and p+q >= 1");
  return {p, q};
}

// -------- verify

struct VerifyArgs {
  std::string space = "gl";
  int n = 3;
  int m = 6;
  std::string pq = "1,1";
  int samples = 100;
  std::string shrinker = "canonical";
};

void run_verify(const VerifyArgs& a, const Common& c, RunReport& report) {
  const SpaceId id = require_space(a.space);
  if (a.n < 1 || a.m < 1 || a.samples < 1) throw UsageError("--n, --m and --samples must be positive");
  MatrixMap phi;
  if (a.shrinker == "canonical") {
    const auto [p, q] = parse_pq(a.pq);
    if (a.m != (p + q) * a.n) throw UsageError("canonical shrinker needs m = (p+q)·n");
    phi = canonical_shrinker_map(p, q, random_continuous_conjugator(a.n, a.m, c.seed));
    report.config["p"] = p;
    report.config["q"] = q;
  } else if (a.shrinker == "degenerate") {
    const int m = a.m;
    if (id == SpaceId::Hn)
      phi = [m](const ComplexMatrix& x) { return degenerate_shrinker_Hn(x, m); };
    else if (id == SpaceId::SUn)
      phi = [m](const ComplexMatrix& x) { return degenerate_shrinker_SUn(x, m); };
    else
      throw UsageError("degenerate shrinkers exist on hn and sun only");
  } else {
    throw UsageError("--shrinker must be canonical or degenerate");
  }
  report.config.update({{"space", to_string(id)}, {"n", a.n}, {"m", a.m}, {"samples", a.samples},
                        {"shrinker", a.shrinker}, {"inclusion_tol", 1e-8}, {"powerlaw_tol", 1e-7}});

  const CheckOptions options{a.samples, c.seed, c.workers};
  ShrinkReport shrink;
  report.results.push_back(run_check("inclusion", "spectrum shrinking sp(phi(X)) in sp(X)", [&](CheckResult& r) {
    shrink = check_powerlaw(phi, id, a.n, a.m, options, false);
    r.defects["inclusion_defect"] = shrink.inclusion_defect;
    r.details = to_json(shrink);
    return shrink.inclusion_defect <= 1e-8;
  }));
  if (a.m % a.n == 0)
    report.results.push_back(run_check("power_law", "characteristic polynomial power law", [&](CheckResult& r) {
      r.defects["powerlaw_defect"] = shrink.powerlaw_defect.value_or(NAN);
      return shrink.powerlaw_defect && *shrink.powerlaw_defect <= 1e-7;
    }));
  else
    std::cerr << "note: n does not divide m; the power law is not demanded\n";
}

// -------- select

struct SelectArgs {
  std::string group = "sun";
  int n = 3;
  int samples = 200;
  int paths = 50;
  double step = 1e-3;
  double lambda_arg = 0.0;
};

void run_select(const SelectArgs& a, const Common& c, RunReport& report) {
  if (a.n < 1 || a.samples < 1 || a.paths < 0 || !(a.step > 0.0)) throw UsageError("invalid select parameters");
  const Complex lambda = std::exp(kI * a.lambda_arg);
  std::function<Complex(const ComplexMatrix&)> selector;
  SpaceId space;
  if (a.group == "sun") {
    space = SpaceId::SUn;
    selector = [](const ComplexMatrix& u) { return su_select(u); };
  } else if (a.group == "hn") {
    space = SpaceId::Hn;
    selector = [](const ComplexMatrix& x) { return Complex(hn_select(x)); };
  } else if (a.group == "un_lambda") {
    space = SpaceId::Un;
    selector = [lambda](const ComplexMatrix& u) { return un_lambda_select(u, lambda); };
  } else {
    throw UsageError("--group must be sun, hn or un_lambda");
  }
  report.config.update({{"group", a.group}, {"n", a.n}, {"samples", a.samples}, {"paths", a.paths},
                        {"step", a.step}, {"lambda_arg", a.lambda_arg}, {"tol", 1e-8}, {"max_jump", 0.05}});

  Rng rng = make_rng(c.seed);
  report.results.push_back(run_check("selection", "continuous eigenvalue selection", [&](CheckResult& r) {
    double inclusion = 0.0, invariance = 0.0;
    for (int s = 0; s < a.samples; ++s) {
      const ComplexMatrix x = sample(space, a.n, rng);
      const ComplexMatrix v = haar_unitary(a.n, rng);
      const Complex value = selector(x);
      inclusion = std::max(inclusion, spectrum_of(x).distance_to(value));
      invariance = std::max(invariance, std::abs(selector(v * x * v.adjoint()) - value));
    }
    r.defects["inclusion"] = inclusion;
    r.defects["conjugation_invariance"] = invariance;
    return inclusion <= 1e-8 && invariance <= 1e-8;
  }));
  if (a.group == "un_lambda") return;  // paths may cross λ, where the selector is undefined
  report.results.push_back(run_check("path_continuity", "selector continuity along paths", [&](CheckResult& r) {
    double jump = 0.0;
    for (int p = 0; p < a.paths; ++p) {
      const ComplexMatrix x0 = sample(space, a.n, rng);
      std::function<ComplexMatrix(double)> path;
      if (space == SpaceId::SUn) {
        const ComplexMatrix k = random_traceless_skew_hermitian(a.n, rng);
        path = [x0, k](double t) { return ComplexMatrix(x0 * expm_skew_hermitian(t * k)); };
      } else {
        ComplexMatrix h = random_hermitian(a.n, rng);
        h /= op_norm(h);
        path = [x0, h](double t) { return ComplexMatrix(x0 + t * h); };
      }
      jump = std::max(jump, sweep_selector(path, selector, 0.0, 1.0, a.step).max_jump);
    }
    r.defects["max_jump"] = jump;
    return jump <= 0.05;
  }));
}

// -------- monodromy

struct MonodromyArgs {
  int n = 3;
  double r = 1.0;
  int steps = 512;
};

void run_monodromy(const MonodromyArgs& a, const Common&, RunReport& report) {
  if (a.n < 2 || !(a.r > 0.0) || a.steps < 64 * a.n) throw UsageError("monodromy needs n >= 2, r > 0, steps >= 64n");
  report.config.update({{"n", a.n}, {"r", a.r}, {"steps", a.steps}, {"ratio_tol", 1e-6}});
  report.results.push_back(run_check("monodromy", "loop-induced permutation is an n-cycle", [&](CheckResult& r) {
    const MonodromyResult m = monodromy_Xz(a.n, a.r, a.steps);
    r.defects["ratio_defect"] = m.ratio_defect;
    r.details = to_json(m);
    return m.single_cycle && m.ratio_defect <= 1e-6;
  }));
}

// -------- configspace

struct ConfigArgs {
  int n = 4;
};

void run_configspace(const ConfigArgs& a, const Common& c, RunReport& report) {
  if (a.n < 2 || a.n > 8) throw UsageError("configspace needs 2 <= n <= 8");
  report.config["n"] = a.n;
  Rng rng = make_rng(c.seed);
  const CirclePoints z = CirclePoints::random(a.n, rng);
  report.results.push_back(run_check("equivariance", "component classification is S_n-equivariant", [&](CheckResult& r) {
    const PermCoset base = classify_component(z);
    std::set<PermCoset> components;
    double failures = 0.0;
    for (const Permutation& sigma : all_permutations(a.n)) {
      const PermCoset cls = classify_component(act(sigma, z));
      if (!(cls == base.left_multiply(sigma))) failures += 1.0;
      components.insert(cls);
    }
    r.defects["failures"] = failures;
    r.defects["components"] = static_cast<double>(components.size());
    r.details["representative"] = permutation_to_json(base.representative());
    return failures == 0.0;
  }));
  report.results.push_back(run_check("isotropy", "isotropy groups are conjugates of the cycle group", [&](CheckResult& r) {
    const std::set<Permutation> iso = isotropy_of_component(z);
    const Permutation tau = counterclockwise_order(z);
    r.defects["order"] = static_cast<double>(iso.size());
    Json members = Json::array();
    for (const auto& p : iso) members.push_back(permutation_to_json(p));
    r.details["members"] = members;
    return iso.size() == static_cast<std::size_t>(a.n) && iso == conjugate_cycle_subgroup(tau);
  }));
  report.results.push_back(run_check("cycle_decomposition", "conjugated cycle powers fix a moved symbol",
                                     [&](CheckResult&) { return verify_cycle_decomposition(a.n); }));
}

// -------- calculus

struct CalculusArgs {
  std::string f = "conj";
  int n = 3;
  int samples = 100;
};

ScalarFunction parse_function(const std::string& spec) {
  if (spec == "conj") return [](Complex z) { return std::conj(z); };
  if (spec == "sqrt-shift") return sqrt_shift(1.0);
  if (spec == "identity") return [](Complex z) { return z; };
  if (spec == "square") return [](Complex z) { return z * z; };
  if (spec.rfind("poly:", 0) == 0) {
    std::vector<Complex> coeffs;
    std::istringstream in(spec.substr(5));
    std::string item;
    while (std::getline(in, item, ',')) {
      try {
        std::size_t used = 0;
        coeffs.emplace_back(std::stod(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw UsageError("poly coefficients must be real numbers: '" + item + "'");
      }
    }
    if (coeffs.empty()) throw UsageError("poly: needs at least one coefficient");
    // c0 + c1 z + c2 z² + …, Horner
    return [coeffs](Complex z) {
      Complex v = 0.0;
      for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * z + *it;
      return v;
    };
  }
  throw UsageError("--f must be conj, sqrt-shift, identity, square or poly:c0,c1,...");
}

void run_calculus(const CalculusArgs& a, const Common& c, RunReport& report) {
  if (a.n < 2 || a.samples < 1) throw UsageError("calculus needs n >= 2 and samples >= 1");
  const ScalarFunction f = parse_function(a.f);
  report.config.update({{"f", a.f}, {"n", a.n}, {"samples", a.samples}, {"grouping_tol", kDefaultGroupingTol},
                        {"closed_form_tol", 1e-10}, {"lagrange_tol", 1e-6}, {"decade_ratio", 2.0}});
  Rng rng = make_rng(c.seed);
  report.results.push_back(run_check("closed_form", "2x2 upper-triangular closed form", [&](CheckResult& r) {
    double worst = 0.0;
    for (int s = 0; s < a.samples; ++s) {
      const Complex l1 = complex_normal(rng), l2 = complex_normal(rng), al = complex_normal(rng);
      ComplexMatrix t(2, 2);
      t << l1, al, 0.0, l2;
      worst = std::max(worst, op_norm(calc_2x2_closed_form(l1, l2, al, f) - apply_function(t, f)));
    }
    r.defects["max_defect"] = worst;
    return worst <= 1e-10;
  }));
  report.results.push_back(run_check("lagrange", "interpolation oracle for the calculus", [&](CheckResult& r) {
    double worst = 0.0;
    for (int s = 0; s < a.samples; ++s) {
      const ComplexMatrix t = sample(SpaceId::Mn_ss, a.n, rng, {true, 1e-2});
      const ComplexMatrix ft = apply_function(t, f);
      worst = std::max(worst, op_norm(ft - apply_function_lagrange(t, f)) / (1.0 + op_norm(ft)));
    }
    r.defects["max_rel_defect"] = worst;
    return worst <= 1e-6;
  }));
  report.results.push_back(run_check("continuity_simple", "continuity at simple spectrum", [&](CheckResult& r) {
    std::vector<Complex> diag;
    for (int k = 1; k <= a.n; ++k) diag.emplace_back(static_cast<double>(k));
    const ComplexMatrix t = diagonal(diag);
    bool pass = true;
    double previous = -1.0;
    for (double scale : {1e-2, 1e-3, 1e-4}) {
      const double dev = continuity_probe(t, f, scale, 50, c.seed);
      std::ostringstream key;
      key << "deviation_" << scale;
      r.defects[key.str()] = dev;
      // Hölder-continuous f such as sqrt-shift shrink by √10 per decade only;
      // a locally constant f gives zero deviation at every scale.
      if (previous >= 0.0 && !(previous >= 2.0 * dev || previous <= 1e-14)) pass = false;
      previous = dev;
    }
    return pass;
  }));
  report.results.push_back(run_check("discontinuity_witness", "discontinuity at a repeated eigenvalue",
                                     [&](CheckResult& r) {
    std::vector<Complex> diag{1.0, 1.0};
    for (int k = 2; k < a.n; ++k) diag.emplace_back(static_cast<double>(k));
    const DiscontinuityWitness w = repeated_eigenvalue_witness(diagonal(diag), 1e-4);
    r.defects["deviation"] = w.deviation;
    r.defects["perturbation_norm"] = w.perturbation_norm;
    // Report only: the chosen f near a repeated eigenvalue.
    Json probes = Json::object();
    for (double scale : {1e-2, 1e-3, 1e-4}) {
      std::ostringstream key;
      key << scale;
      probes[key.str()] = continuity_probe(diagonal(diag), f, scale, 50, c.seed);
    }
    r.details["chosen_f_repeated_probe"] = probes;
    return w.deviation >= 1.0 && w.perturbation_norm <= 1e-4;
  }));
}

// -------- theta

struct ThetaArgs {
  std::string check = "all";
  int n = 3;
  int samples = 100;
};

void run_theta(const ThetaArgs& a, const Common& c, RunReport& report) {
  static const std::vector<std::string> kChecks{"involution", "pf", "commute", "ads", "calculus", "probe"};
  if (a.check != "all" && std::find(kChecks.begin(), kChecks.end(), a.check) == kChecks.end())
    throw UsageError("--check must be involution, pf, commute, ads, calculus, probe or all");
  if (a.n < 2 || a.samples < 1) throw UsageError("theta needs n >= 2 and samples >= 1");
  report.config.update({{"check", a.check}, {"n", a.n}, {"samples", a.samples}, {"tol", 1e-6},
                        {"condition_cap", kThetaConditionCap}});
  const auto wanted = [&](const char* name) { return a.check == "all" || a.check == name; };
  Rng rng = make_rng(c.seed);
  const auto n = static_cast<Eigen::Index>(a.n);

  if (wanted("involution"))
    report.results.push_back(run_check("involution", "theta is an involution preserving spectra", [&](CheckResult& r) {
      double inv = 0.0, spec = 0.0;
      for (int s = 0; s < a.samples; ++s) {
        const ComplexMatrix x = sample(SpaceId::GLn_ss, n, rng, {true, 1e-4});
        const ThetaDecomposition d = theta_decompose(x);
        const ComplexMatrix tx = theta(d);
        inv = std::max(inv, op_norm(theta(tx) - x) / (op_norm(x) * d.condition * d.condition));
        spec = std::max(spec, spectrum_match_distance(spectrum_of(tx), spectrum_of(x)));
      }
      r.defects["involution"] = inv;
      r.defects["spectrum"] = spec;
      return inv <= 1e-6 && spec <= 1e-6;
    }));
  if (wanted("pf"))
    report.results.push_back(run_check("putnam_fuglede", "two decompositions of one matrix agree under theta",
                                       [&](CheckResult& r) {
      double worst = 0.0;
      bool pass = true;
      for (int s = 0; s < a.samples; ++s) {
        const ComplexMatrix x = sample(SpaceId::GLn_ss, n, rng, {true, 1e-4});
        const ThetaDecomposition d1 = theta_decompose(x);
        ComplexVector gauge(n);
        for (Eigen::Index k = 0; k < n; ++k) gauge(k) = uniform(rng, 0.5, 2.0) * unit_circle_point(rng);
        const ThetaDecomposition d2 = theta_decompose(x, gauge);
        const double tol = 1e-8 * std::max(d1.condition * d1.condition, d2.condition * d2.condition);
        const ThetaCheck chk = check_putnam_fuglede(d1.S, d1.N, d2.S, d2.N, tol);
        worst = std::max(worst, chk.defect / chk.bound * 1e-6);
        pass = pass && chk.pass;
      }
      r.defects["scaled_defect"] = worst;
      return pass;
    }));
  if (wanted("commute"))
    report.results.push_back(run_check("commutativity", "theta preserves commutativity", [&](CheckResult& r) {
      double worst = 0.0;
      bool pass = true;
      for (int s = 0; s < a.samples; ++s) {
        const ComplexMatrix sp = random_positive_definite(n, rng);
        const ComplexMatrix v = haar_unitary(n, rng);
        ComplexVector d1(n), d2(n);
        for (Eigen::Index k = 0; k < n; ++k) {
          d1(k) = 1.0 + 0.5 * static_cast<double>(k) + 0.2 * complex_normal(rng);
          d2(k) = complex_normal(rng) + 2.0 * unit_circle_point(rng);
        }
        const ComplexMatrix sp_inv = sp.inverse();
        const ComplexMatrix x = sp * v * d1.asDiagonal() * v.adjoint() * sp_inv;
        const ComplexMatrix y = sp * v * d2.asDiagonal() * v.adjoint() * sp_inv;
        for (const ThetaCheck& chk : {theta_commutativity_check(x, y, 1e-8), theta_commutativity_check(x, x * x, 1e-8)}) {
          worst = std::max(worst, chk.defect / chk.bound * 1e-6);
          pass = pass && chk.pass;
        }
      }
      r.defects["scaled_defect"] = worst;
      return pass;
    }));
  if (wanted("ads"))
    report.results.push_back(run_check("ads_identity", "theta acts as Ad of S^-2 on a conjugated unitary orbit",
                                       [&](CheckResult& r) {
      double worst = 0.0;
      bool pass = true;
      for (int s = 0; s < a.samples; ++s) {
        const ThetaCheck chk = theta_adS_identity(random_positive_definite(n, rng), haar_unitary(n, rng), 1e-6);
        worst = std::max(worst, chk.defect / chk.bound * 1e-6);
        pass = pass && chk.pass;
      }
      r.defects["scaled_defect"] = worst;
      return pass;
    }));
  if (wanted("calculus"))
    report.results.push_back(run_check("via_calculus", "theta through the conjugation calculus", [&](CheckResult& r) {
      double worst = 0.0;
      for (int s = 0; s < a.samples; ++s) {
        const ComplexMatrix sp = random_positive_definite(n, rng);
        const ComplexMatrix v = haar_unitary(n, rng);
        ComplexVector d(n);
        for (Eigen::Index k = 0; k < n; ++k) d(k) = complex_normal(rng) + 2.0 * unit_circle_point(rng);
        const ComplexMatrix nn = v * d.asDiagonal() * v.adjoint();
        const double cs = condition_number(sp);
        worst = std::max(worst, op_norm(theta(sp * nn * sp.inverse()) - theta_via_calculus(sp, nn)) / (cs * cs));
      }
      r.defects["scaled_defect"] = worst;
      return worst <= 1e-6;
    }));
  if (wanted("probe"))
    report.results.push_back(run_check("continuity_probe", "empirical oscillation of theta (report only)",
                                       [&](CheckResult& r) {
      std::vector<Complex> repeated{1.0, 1.0};
      std::vector<Complex> simple;
      for (int k = 2; k < a.n; ++k) repeated.emplace_back(static_cast<double>(k));
      for (int k = 1; k <= a.n; ++k) simple.emplace_back(static_cast<double>(k));
      const ComplexMatrix w = haar_unitary(n, rng);
      const ComplexMatrix normal_x0 = w * diagonal(simple) * w.adjoint();
      struct Probe {
        const char* name;
        ComplexMatrix x0;
        bool normal_only;
      };
      const Probe probes[] = {{"repeated", diagonal(repeated), false},
                              {"simple", diagonal(simple), false},
                              {"normal_only", normal_x0, true}};
      for (const Probe& p : probes) {
        Json series = Json::array();
        for (double scale : {1e-2, 1e-3, 1e-4}) {
          const ThetaProbeReport rep = theta_continuity_probe(p.x0, scale, std::min(a.samples, 50), c.seed, p.normal_only);
          series.push_back(to_json(rep));
          std::ostringstream key;
          key << p.name << "_" << scale;
          r.defects[key.str()] = rep.oscillation;
        }
        r.details[p.name] = series;
      }
      return true;
    }));
}

// -------- reconstruct

struct ReconstructArgs {
  std::string oracle = "id";
  std::string space = "un";
  int n = 3;
  int samples = 50;
};

MatrixMap parse_oracle(const std::string& spec, int n, Json& config) {
  if (spec == "id") return identity_oracle();
  if (spec == "transpose") return transpose_oracle();
  if (spec == "theta") return theta_oracle();
  for (const char* prefix : {"conj:", "tconj:"}) {
    const std::string p(prefix);
    if (spec.rfind(p, 0) != 0) continue;
    ComplexMatrix t;
    try {
      t = read_matrix_file(spec.substr(p.size()));
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    if (t.rows() != n) throw UsageError("oracle matrix dimension differs from --n");
    if (min_singular_value(t) <= 1e-12 * op_norm(t)) throw UsageError("oracle matrix is singular");
    config["oracle_matrix"] = matrix_to_json(t);
    return p == "conj:" ? conjugation_oracle(t) : transpose_conjugation_oracle(t);
  }
  throw UsageError("--oracle must be id, transpose, theta, conj:<file> or tconj:<file>");
}

void run_reconstruct(const ReconstructArgs& a, const Common& c, RunReport& report) {
  const SpaceId id = require_space(a.space);
  if (a.n < 3) throw UsageError("reconstruct needs n >= 3");
  if (a.samples < 1) throw UsageError("--samples must be positive");
  const MatrixMap phi = parse_oracle(a.oracle, a.n, report.config);
  ReconstructOptions options;
  options.seed = c.seed;
  options.validation_samples = a.samples;
  report.config.update({{"oracle", a.oracle}, {"space", to_string(id)}, {"n", a.n}, {"samples", a.samples},
                        {"tol", options.tol}});
  report.results.push_back(run_check("classification", "preservers are conjugations or transpose-conjugations",
                                     [&](CheckResult& r) {
    const PreserverClassification cls = classify_preserver(phi, id, a.n, options);
    r.defects["residual"] = cls.residual;
    r.details = to_json(cls);
    return true;
  }));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification runner for spectrum-shrinking and spectrum-preserving maps"};
  app.require_subcommand(1);
  Common common;
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", common.seed, "random seed")->capture_default_str();
    sub->add_option("--workers", common.workers, "worker threads (1 = serial)")->capture_default_str()
        ->check(CLI::PositiveNumber);
  };

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "shrinking inclusion and power law");
  v->add_option("--space", verify.space)->capture_default_str();
  v->add_option("--n", verify.n)->capture_default_str();
  v->add_option("--m", verify.m)->capture_default_str();
  v->add_option("--pq", verify.pq, "canonical shrinker multiplicities p,q")->capture_default_str();
  v->add_option("--samples", verify.samples)->capture_default_str();
  v->add_option("--shrinker", verify.shrinker, "canonical or degenerate")->capture_default_str();
  add_common(v);

  SelectArgs select;
  auto* s = app.add_subcommand("select", "eigenvalue selectors");
  s->add_option("--group", select.group, "sun, hn or un_lambda")->capture_default_str();
  s->add_option("--n", select.n)->capture_default_str();
  s->add_option("--samples", select.samples)->capture_default_str();
  s->add_option("--paths", select.paths)->capture_default_str();
  s->add_option("--step", select.step)->capture_default_str();
  s->add_option("--lambda-arg", select.lambda_arg, "argument of the excluded eigenvalue for un_lambda")
      ->capture_default_str();
  add_common(s);

  MonodromyArgs mono;
  auto* m = app.add_subcommand("monodromy", "eigenvalue monodromy of X_z around a circle");
  m->add_option("--n", mono.n)->capture_default_str();
  m->add_option("--r", mono.r)->capture_default_str();
  m->add_option("--steps", mono.steps)->capture_default_str();
  add_common(m);

  ConfigArgs config;
  auto* cs = app.add_subcommand("configspace", "configuration-space components");
  cs->add_option("--n", config.n)->capture_default_str();
  add_common(cs);

  CalculusArgs calculus;
  auto* ca = app.add_subcommand("calculus", "semisimple functional calculus");
  ca->add_option("--f", calculus.f, "conj, sqrt-shift, identity, square or poly:c0,c1,...")->capture_default_str();
  ca->add_option("--n", calculus.n)->capture_default_str();
  ca->add_option("--samples", calculus.samples)->capture_default_str();
  add_common(ca);

  ThetaArgs theta_args;
  auto* th = app.add_subcommand("theta", "the theta involution");
  th->add_option("--check", theta_args.check, "involution, pf, commute, ads, calculus, probe or all")
      ->capture_default_str();
  th->add_option("--n", theta_args.n)->capture_default_str();
  th->add_option("--samples", theta_args.samples)->capture_default_str();
  add_common(th);

  ReconstructArgs rec;
  auto* re = app.add_subcommand("reconstruct", "classify a preserver oracle");
  re->add_option("--oracle", rec.oracle, "id, transpose, theta, conj:<file> or tconj:<file>")->capture_default_str();
  re->add_option("--space", rec.space)->capture_default_str();
  re->add_option("--n", rec.n)->capture_default_str();
  re->add_option("--samples", rec.samples)->capture_default_str();
  add_common(re);

  auto* all = app.add_subcommand("all", "full acceptance suite");
  add_common(all);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  RunReport report;
  report.command = app.get_subcommands().front()->get_name();
  report.seed = common.seed;
  report.config["workers"] = common.workers;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (*v) run_verify(verify, common, report);
    else if (*s) run_select(select, common, report);
    else if (*m) run_monodromy(mono, common, report);
    else if (*cs) run_configspace(config, common, report);
    else if (*ca) run_calculus(calculus, common, report);
    else if (*th) run_theta(theta_args, common, report);
    else if (*re) run_reconstruct(rec, common, report);
    else if (*all) report.results = run_acceptance_suite({common.seed, common.workers});
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << to_json(report).dump(2) << '\n';
  for (const auto& r : report.results)
    if (!r.pass) std::cerr << "FAIL " << r.check << (r.error.empty() ? "" : ": " + r.error) << '\n';
  return report.all_pass() ? EXIT_SUCCESS : kExitFail;
}
