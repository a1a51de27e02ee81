#pragma once

#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "trinomia/belyi.hpp"
#include "trinomia/diagonal.hpp"
#include "trinomia/normalization.hpp"
#include "trinomia/orbits.hpp"
#include "trinomia/smoothness.hpp"

namespace trinomia::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitUsage = 2;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct Table {
  std::string title;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  bool matches_golden = true;
  std::vector<std::string> errata;  // cells where the printed table disagrees
  nlohmann::json json;
  std::string markdown() const;
};

/// which in {theorem1, det, belyi, cubics}; throws UsageError otherwise.
/// Each row compares the embedded printed table with what is computed.
Table make_table(const std::string& which, int d);

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Manifest {
  int max_degree = 0;
  std::vector<Check> checks;
  std::map<std::string, std::string> errata;  // name -> "detected" / note
  bool all_passed() const;
  nlohmann::json to_json() const;
};

/// Whole pipeline for d in 3..d_max. Disagreements with the printed tables
/// are errata, not failures; failures are broken computations.
Manifest verify_all(int d_max);

nlohmann::json verdict_json(const SmoothnessVerdict& v);
nlohmann::json classification_json(const Classification& c);
nlohmann::json group_json(const AbelianGroupInvariants& g);
nlohmann::json witness_json(const NormalizationWitness& w, const TrinomialCurve& c);
nlohmann::json belyi_json(const BelyiCandidate& b, const BelyiReport& r);

}  // namespace trinomia::cli
