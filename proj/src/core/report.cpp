#include "tsg/report.hpp"

#include <algorithm>

namespace tsg {

CheckRecord::CheckRecord(std::string check_name, nlohmann::json predicted_value, nlohmann::json oracle_value,
                         std::string witness_text)
    : check(std::move(check_name)),
      predicted(std::move(predicted_value)),
      oracle(std::move(oracle_value)),
      pass(predicted == oracle),
      witness(std::move(witness_text)) {}

bool VerificationReport::all_pass() const noexcept {
  return std::all_of(records.begin(), records.end(), [](const CheckRecord& r) { return r.pass; });
}

std::size_t VerificationReport::failures() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [](const CheckRecord& r) { return !r.pass; }));
}

CheckRecord& VerificationReport::add(std::string check, nlohmann::json predicted, nlohmann::json oracle,
                                     std::string witness) {
  return records.emplace_back(std::move(check), std::move(predicted), std::move(oracle), std::move(witness));
}

void VerificationReport::append(const VerificationReport& other, const std::string& prefix) {
  for (const auto& r : other.records) {
    records.push_back(r);
    records.back().check = prefix + r.check;
  }
}

nlohmann::json to_json(const VerificationReport& report) {
  auto out = nlohmann::json::array();
  for (const auto& r : report.records) {
    out.push_back({{"check", r.check},
                   {"predicted", r.predicted},
                   {"oracle", r.oracle},
                   {"pass", r.pass},
                   {"witness", r.witness}});
  }
  return out;
}

}  // namespace tsg
