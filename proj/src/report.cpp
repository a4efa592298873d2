#include "spshrink/report.hpp"

#include <cmath>
#include <fstream>

#include "spshrink/error.hpp"
#include "spshrink/spaces.hpp"

namespace spshrink {

namespace {

// JSON has no Inf/NaN; non-finite defects are written as strings.
Json number(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

}  // namespace

Json complex_to_json(Complex z) { return Json::array({number(z.real()), number(z.imag())}); }

Json matrix_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"n", m.rows()}, {"entries", std::move(rows)}};
}

ComplexMatrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
    throw Error(ErrorCode::InvalidArgument, "matrix JSON needs \"n\" and \"entries\"");
  if (!j["n"].is_number_integer() || j["n"].get<long long>() < 1)
    throw Error(ErrorCode::InvalidArgument, "\"n\" must be a positive integer");
  const auto n = static_cast<Eigen::Index>(j["n"].get<long long>());
  const Json& rows = j["entries"];
  if (!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != n)
    throw Error(ErrorCode::InvalidArgument, "\"entries\" must have n rows");
  ComplexMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n)
      throw Error(ErrorCode::InvalidArgument, "every row must have n entries");
    for (Eigen::Index k = 0; k < n; ++k) {
      const Json& e = row[static_cast<std::size_t>(k)];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
        throw Error(ErrorCode::InvalidArgument, "entries are [re, im] pairs");
      m(i, k) = Complex(e[0].get<double>(), e[1].get<double>());
    }
  }
  if (!is_finite(m)) throw Error(ErrorCode::InvalidArgument, "matrix entries must be finite");
  return m;
}

ComplexMatrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path.string());
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::InvalidArgument, path.string() + ": " + e.what());
  }
  return matrix_from_json(j);
}

void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix& m) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path.string());
  out << matrix_to_json(m).dump(2) << '\n';
}

Json permutation_to_json(const Permutation& p) {
  Json out = Json::array();
  for (int v : p.images()) out.push_back(v + 1);
  return out;
}

Json to_json(const ShrinkReport& r) {
  Json j = {{"inclusion_defect", number(r.inclusion_defect)},
            {"divisible", r.divisible},
            {"sample_count", r.sample_count},
            {"seed", r.seed},
            {"space", to_string(r.space)},
            {"n", r.n},
            {"m", r.m}};
  j["powerlaw_defect"] = r.powerlaw_defect ? number(*r.powerlaw_defect) : Json(nullptr);
  return j;
}

Json to_json(const MonodromyResult& r) {
  Json start = Json::array(), end = Json::array(), perm = Json::array();
  for (Complex z : r.start_values) start.push_back(complex_to_json(z));
  for (Complex z : r.end_values) end.push_back(complex_to_json(z));
  for (int v : r.permutation) perm.push_back(v + 1);
  return {{"n", r.n},           {"r", r.r},         {"steps", r.steps},
          {"start_values", start}, {"end_values", end}, {"permutation", perm},
          {"single_cycle", r.single_cycle}, {"ratio_defect", number(r.ratio_defect)}};
}

Json to_json(const PreserverClassification& c) {
  return {{"T", matrix_to_json(c.T)}, {"mode", to_string(c.mode)}, {"residual", number(c.residual)}};
}

Json to_json(const ThetaCheck& c) {
  return {{"pass", c.pass}, {"defect", number(c.defect)}, {"bound", number(c.bound)}};
}

Json to_json(const ThetaProbeReport& r) {
  return {{"scale", r.scale}, {"oscillation", number(r.oscillation)}, {"samples", r.samples}, {"skipped", r.skipped}};
}

bool RunReport::all_pass() const {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

Json to_json(const CheckResult& r) {
  Json defects = Json::object();
  for (const auto& [k, v] : r.defects) defects[k] = number(v);
  Json j = {{"check", r.check}, {"pass", r.pass}, {"defects", defects}, {"anchor", r.anchor}};
  if (!r.error.empty()) j["error"] = r.error;
  if (!r.details.empty()) j["details"] = r.details;
  return j;
}

Json to_json(const RunReport& r) {
  Json results = Json::array();
  for (const auto& c : r.results) results.push_back(to_json(c));
  return {{"schema", kReportSchema}, {"command", r.command}, {"seed", r.seed},
          {"config", r.config},      {"results", results},   {"wall_time", r.wall_time}};
}

}  // namespace spshrink
