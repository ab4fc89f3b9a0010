#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "tsg/report.hpp"

namespace tsg {

struct VerifyOptions {
  std::uint64_t seed = 7;
  int instances = 200;
  int max_order = 24;  // 1..60
  int threads = 1;     // results do not depend on this
};

struct InstanceOutcome {
  int index = 0;
  std::string group;
  std::string left;
  std::string right;
  VerificationReport report;
};

struct VerifySummary {
  VerifyOptions options;
  std::vector<InstanceOutcome> outcomes;  // ordered by index

  int passed() const noexcept;
};

// Instance i draws G from {C1..C12, D1..D10, S3, S4, A4} restricted to
// order <= max_order, then L and R as uniform nonempty subsets of size
// <= 4, all from a generator seeded by (seed, i). Every theorem checker runs
// against the component oracle. Throws invalid_parameter for instances < 1 or
// max_order outside 1..60.
VerifySummary run_verify(const VerifyOptions& options);

// Diagonal correspondence on `count` instances with |G| <= 12 and a random
// pair set U of size <= 4.
std::vector<InstanceOutcome> run_delta_suite(std::uint64_t seed, int count);

// {seed, instances, max_order, passed, failed, checks: {name: {pass, fail}},
//  failures: [{index, group, left, right, records}]}
nlohmann::json verify_to_json(const VerifySummary& summary);

}  // namespace tsg
