#pragma once

// Configuration, check records and the named verification suites.

#include <cstdint>
#include <string>
#include <vector>

#include "carlab/json_io.hpp"
#include "carlab/tolerances.hpp"

namespace carlab {

struct Config {
  int n_max = 8;            // one-particle window
  int fock_n_max = 6;       // Fock-space window for Schwinger/Weyl checks
  std::vector<int> vev_windows{4, 5, 6, 7, 8};
  Tolerances tol = default_tolerances();
  std::uint64_t seed = 20240611;
  std::size_t sector_cap = std::size_t{1} << 16;
  bool record_timing = false;
};

/// Unknown keys and wrong types raise PreconditionError.
Config config_from_json(const json& j);
json config_to_json(const Config& c);
Config load_config(const std::string& path);
/// Reads CAR_LAB_CONFIG if set, defaults otherwise.
Config config_from_env();

struct CheckRecord {
  std::string check_id;
  json params = json::object();
  json value;
  json expected;
  double tolerance = 0.0;
  bool pass = false;
  int window = 0;
  long runtime_ms = 0;
};

CheckRecord real_check(std::string id, json params, double value, double expected, double tolerance, int window);
CheckRecord complex_check(std::string id, json params, cplx value, cplx expected, double tolerance, int window);
CheckRecord exact_check(std::string id, json params, long value, long expected, int window);
CheckRecord bool_check(std::string id, json params, bool value, int window);

json record_to_json(const CheckRecord& r, bool with_timing);
/// One JSON object per line, sorted by check_id.
std::string json_lines(std::vector<CheckRecord> records, bool with_timing);

const std::vector<std::string>& suite_names();
/// Throws PreconditionError for an unknown suite. Records come back sorted.
std::vector<CheckRecord> run_suite(const std::string& name, const Config& config);
bool all_pass(const std::vector<CheckRecord>& records);

struct SweepRow {
  int window = 0;
  double value = 0.0;
  double delta = 0.0;  // |value - value at the largest window|
};

struct Sweep {
  std::string check_id;
  std::vector<SweepRow> rows;
  bool monotone = false;  // deltas non-increasing up to a 1e-12 floor
};

/// Supported checks: "vev", "pairing", "hs_shift", "schwinger".
Sweep convergence_sweep(const std::string& check_id, std::vector<int> windows, const Config& config);
std::string sweep_csv(const Sweep& s);

}  // namespace carlab
