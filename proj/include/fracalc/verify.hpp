#pragma once

#include <string>
#include <vector>

namespace fracalc {
namespace verify {

struct CheckRecord {
  std::string name;
  std::string anchor;  // human-readable statement of the identity checked
  double computed = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckRecord> records;

  bool all_pass() const;
};

/// Suites: gamma, propositions, extension, fftc, maxprin, weights, all.
VerificationReport run_suite(const std::string& suite);

std::vector<std::string> suite_names();

/// schema 1 JSON rendering of the report.
std::string report_to_json(const VerificationReport& rep);

}  // namespace verify
}  // namespace fracalc
