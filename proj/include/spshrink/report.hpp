#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "spshrink/config_space.hpp"
#include "spshrink/eig_select.hpp"
#include "spshrink/matrix.hpp"
#include "spshrink/reconstruct.hpp"
#include "spshrink/shrinker.hpp"
#include "spshrink/theta.hpp"

namespace spshrink {

using Json = nlohmann::json;

inline constexpr int kReportSchema = 1;

/// {"n": n, "entries": [[[re, im], …], …]}, row-major.
Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);  // throws InvalidArgument

ComplexMatrix read_matrix_file(const std::filesystem::path& path);
void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix& m);

Json complex_to_json(Complex z);
/// Permutations are written 1-based.
Json permutation_to_json(const Permutation& p);

Json to_json(const ShrinkReport& r);
Json to_json(const MonodromyResult& r);
Json to_json(const PreserverClassification& c);
Json to_json(const ThetaCheck& c);
Json to_json(const ThetaProbeReport& r);

/// One named check of a run.
struct CheckResult {
  std::string check;
  bool pass = false;
  std::map<std::string, double> defects;
  std::string anchor;  // statement the check exercises
  std::string error;   // structured error code when the check threw
  Json details = Json::object();
};

struct RunReport {
  std::string command;
  std::uint64_t seed = 0;
  Json config = Json::object();
  std::vector<CheckResult> results;
  double wall_time = 0.0;

  bool all_pass() const;
};

Json to_json(const CheckResult& r);
Json to_json(const RunReport& r);

}  // namespace spshrink
