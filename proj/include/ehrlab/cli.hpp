#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ehrlab/checks.hpp"
#include "ehrlab/lattice.hpp"
#include "ehrlab/poly.hpp"

namespace ehrlab {

inline constexpr const char* kToolVersion = "0.1.0";

struct VerdictRecord {
  std::string name;
  bool holds = true;
  std::vector<long> witness;
  std::vector<Rat> values;
  std::string detail;

  friend bool operator==(const VerdictRecord&, const VerdictRecord&) = default;
};

/// One run of `ehrhart` or `diagnose`.
struct RunReport {
  std::string input;
  std::string tool_version = kToolVersion;
  double seconds = 0;
  int dim = 0;
  int ambient_dim = 0;
  std::vector<IntVec> vertices;
  Poly ehrhart;
  std::vector<Integer> hstar;
  int degree = 0;
  int codegree = 0;
  std::optional<int> lambda;
  std::vector<Integer> counts;
  std::vector<VerdictRecord> verdicts;
  std::vector<std::string> implication_violations;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

std::string serialize(const RunReport& r);
/// Throws Error(ParseError).
RunReport parse_report(const std::string& text);

struct DiagnoseFlags {
  bool hstar = false, series = false, cl = false, magic = false, toeplitz = false, negative = false;
  bool idp = false, spanning = false, reflexive = false;
  bool any() const { return hstar || series || cl || magic || toeplitz || negative || idp || spanning || reflexive; }
};

/// Budget from EHRHART_LAB_BUDGET, else the library default.
std::size_t enumeration_budget();

/// Resolves registry names, inline families, payne literals and JSON files.
RunReport cmd_ehrhart(const std::string& input);
RunReport cmd_diagnose(const std::string& input, DiagnoseFlags flags);

/// Manifest of every registry fixture with its expected values.
std::string default_manifest();

struct PaperbookResult {
  int exit_code = 0;
  std::vector<std::string> failed;
  std::string table;
};

/// Runs the manifest (default: the built-in one); `filter` keeps entries
/// whose family equals it or whose name contains it.
PaperbookResult cmd_paperbook(const std::string& filter = {}, const std::optional<std::string>& manifest_text = std::nullopt);

/// Full command line: ehrhart | diagnose | paperbook. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ehrlab
