#pragma once

#include "snc/lattice.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace snc {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string expected;
  std::string actual;
  std::string ref;         // anchor string from the fixture
  std::string provenance;  // published | trivial | derived
};

struct Report {
  std::string title;
  std::vector<CheckResult> checks;

  std::size_t failures() const;
  bool passed() const { return failures() == 0; }
  void append(const Report& other);

  // CHECK <name>: PASS|FAIL expected=<v> actual=<v> ref="<anchor>"
  // SUMMARY <title>: <passed>/<total> passed
  std::string to_text() const;
  std::string to_json() const;
};

// Scenario fixture (JSON) plus the arrangement program it names.
Report run_scenario_text(std::string_view fixture_json, std::string_view arrangement_text);
// Loads <dir>/<name>.json and the arrangement file it references.
Report run_scenario(const std::string& name, const std::string& fixture_dir);

Report run_case_table_text(std::string_view cases_json);
Report run_case_table(const std::string& fixture_dir);

// y244, y333 and the case table.
Report run_all(const std::string& fixture_dir);

// Boundary graph of a fork with center weight `center` and twigs given by negated weights listed
// from the tip inwards. Twig i with one component is "Ti", otherwise "Ti_1" (tip) .. "Ti_k".
DualGraph fork_graph(Weight center, const std::vector<std::vector<Weight>>& twigs);

// "chain [2,2]", "fork B(-1) [2] [2,2,2] [2,2,2]" (twigs as brackets from the tip, shortest first), "tree".
std::string describe_shape(const DualGraph& g);

}  // namespace snc
