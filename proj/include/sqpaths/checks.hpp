#pragma once

// Registry of identity checks run by the command-line tool and the
// acceptance suite. Each check sweeps a range of n (and optionally a single
// tau / l), compares an independently computed left and right side, and
// reports the first violation it meets in a fixed sweep order.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "sqpaths/kernels.hpp"
#include "sqpaths/perm.hpp"

namespace sqpaths {

/// Malformed or out-of-range check parameters.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CheckSpec {
  std::string id;
  std::optional<int> n_min;  // defaults depend on the check
  std::optional<int> n_max;
  std::optional<Perm> tau;  // restricts per-tau checks to one permutation
  std::optional<int> l;     // restricts per-(tau, l) checks to one l
  int threads = 1;
  bool allow_eight = false;  // lift brute-force enumeration from 7 to 8 cars
  // lemma-parlem
  int max = 12;
  int samples = 1000;
  std::uint64_t seed = 1;
  StatsFn stats_fn = stats;
};

struct CheckReport {
  std::string id;
  nlohmann::ordered_json parameters;
  bool pass = true;
  std::optional<std::string> counterexample;  // set iff !pass
  double wall_ms = 0;
  std::uint64_t objects = 0;

  /// One JSON object; wall time only when timing is requested so that the
  /// default output is reproducible byte for byte.
  std::string to_json_line(bool timing = false) const;
};

struct CheckInfo {
  std::string id;
  std::string summary;
  int default_n_min;
  int default_n_max;
  int limit_n_max;  // hard upper bound (brute-force checks: 7, or 8 when allowed)
  bool brute_force;
  bool per_tau;  // accepts --tau
  bool per_l;    // accepts --l
};

const std::vector<CheckInfo>& registered_checks();
/// Throws UsageError for an unknown id.
const CheckInfo& check_info(const std::string& id);

/// Throws UsageError for unknown ids or parameters outside the check's range.
CheckReport run_check(const CheckSpec& spec);

/// Parses "6" or "1..6" into an inclusive range; throws UsageError.
std::pair<int, int> parse_n_range(const std::string& text);

}  // namespace sqpaths
