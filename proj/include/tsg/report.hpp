#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace tsg {

/// One predicate-versus-oracle comparison. `pass` is always
/// `predicted == oracle`; the constructor enforces that.
struct CheckRecord {
  std::string check;
  nlohmann::json predicted;
  nlohmann::json oracle;
  bool pass = false;
  std::string witness;

  CheckRecord(std::string check, nlohmann::json predicted, nlohmann::json oracle, std::string witness = {});
};

struct VerificationReport {
  std::vector<CheckRecord> records;

  bool all_pass() const noexcept;
  std::size_t failures() const noexcept;
  CheckRecord& add(std::string check, nlohmann::json predicted, nlohmann::json oracle, std::string witness = {});
  void append(const VerificationReport& other, const std::string& prefix = {});
};

// [{check, predicted, oracle, pass, witness}, ...]
nlohmann::json to_json(const VerificationReport& report);

}  // namespace tsg
