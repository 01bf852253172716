#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "visidim/ifs.hpp"

namespace visidim {

enum class Provenance { Paper, Trivial, Derived };
std::string_view to_string(Provenance p);

struct Expectation {
  std::string operation;
  std::string claim;
  std::string expected;
  std::string observed;
  Provenance provenance = Provenance::Derived;
  bool passed = false;
};

struct ScenarioReport {
  std::string name;
  std::vector<Expectation> checks;
  double seconds = 0.0;

  bool passed() const;
  nlohmann::json to_json() const;
};

/// Names of the shipped library, in a fixed order.
const std::vector<std::string>& scenario_names();

/// JSON spec text of a builtin system ("meng-3.1", "fourcorner-3.2",
/// "ville-3.3", "integral-3.4"; the part before the dash also works).
std::optional<std::string> builtin_spec(std::string_view name);

/// Builtin name, or else a path to a spec file.
IFSystem resolve_spec(const std::string& name_or_path);

/// Runs the scenario end to end. Throws UnknownScenario.
ScenarioReport verify_example(std::string_view name);

}  // namespace visidim
