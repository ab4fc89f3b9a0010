#pragma once

#include <string>
#include <vector>

#include "tsg/report.hpp"

namespace tsg {

// Replays of the worked examples. Each record compares the quoted value
// (predicted) with the value computed from the built digraph (oracle).
struct FixtureResult {
  std::string id;
  std::string instance;  // e.g. "2S(A4;{e,(243)},{...})"
  VerificationReport report;
  double seconds = 0.0;
};

// a4-valency, c7-cayley, d6-obstruction, a4-complete, d6-nonisomorphic,
// d10-isomorphic, d3xc3-cosets, a5-cosets, d6-retract-connected,
// d6-retract-disconnected
const std::vector<std::string>& fixture_ids();

// Throws errc::invalid_parameter for an unknown id.
FixtureResult run_fixture(const std::string& id);
std::vector<FixtureResult> run_all_fixtures();

}  // namespace tsg
