#pragma once

#include "coadm/admissible.hpp"

#include <json.hpp>

namespace coadm {

struct ConfigInvalid : Error {
  using Error::Error;
};

struct RunConfig {
  long prime = 5;
  long precision = 30;  // working relative precision
  long tol_exp = 20;    // tolerance exponent
  int rank = 8;         // truncation rank
  int window = 4;       // window depth
  std::uint64_t seed = 1;
  std::vector<std::string> suites = {"coalg", "comod", "limits", "adm"};
  std::string inject = "none";
  std::string out;  // report path; empty writes to stdout

  void validate() const;  // throws ConfigInvalid
};

/// One verification record. Every record carries the name of the checked
/// identity (or "plumbing" for tool-level checks). Negative controls and
/// injected defects are expected to fail; `pass` states whether the record
/// matched its expectation.
struct CheckRecord {
  std::string id;      // stable, sorted key
  std::string anchor;  // identity under test, or "plumbing"
  bool pass = false;
  bool expected_fail = false;  // negative control or injected defect
  bool injected = false;
  std::string status;    // underlying check status
  std::string residual;  // exact rationals, rendered
  std::string tail;
  std::string witness;
  double ms = 0;
};

struct RunReport {
  RunConfig config;
  std::vector<CheckRecord> records;

  // a run passes iff no non-injected record misses its expectation
  bool pass() const;
  nlohmann::json to_json(bool with_timing = true) const;
};

// Executes the selected suites over the model catalogs. Records are ordered
// by id; identical configs (including the seed) give identical reports
// modulo the timing fields.
RunReport run_suites(const RunConfig& cfg);

}  // namespace coadm
