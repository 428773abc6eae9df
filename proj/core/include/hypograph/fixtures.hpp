#pragma once

#include <string>
#include <vector>

namespace hypograph {

struct FixtureCheck {
  std::string description;
  bool pass;
  std::string diff;  // expected-vs-actual note when failing
};

struct FixtureResult {
  std::string name;
  bool pass = false;
  std::vector<FixtureCheck> checks;

  std::string to_json() const;
};

std::vector<std::string> fixture_names();

/// Re-derives a named fixture's facts from scratch and diffs them against
/// the encoded expectations. Throws GraphError for unknown names.
FixtureResult run_fixture(const std::string& name);

}  // namespace hypograph
