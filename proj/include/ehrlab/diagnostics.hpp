#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ehrlab/checks.hpp"
#include "ehrlab/hstar.hpp"

namespace ehrlab {

struct DiagnosticsOptions {
  /// Toeplitz composition depth; negative means d.
  int toeplitz_depth = -1;
  bool run_toeplitz = true;
  bool run_series = true;
  bool run_negative = true;
};

struct DiagnosticsReport {
  Poly ehrhart;
  int d = 0;
  Poly hstar;

  Verdict nonnegativity;
  Verdict unimodality;
  Verdict log_concavity;
  bool real_rooted = false;
  bool palindromic = false;
  /// Set only for palindromic h*.
  std::optional<bool> gamma_positive;
  std::optional<GammaVector> gamma;
  Verdict ehrhart_positivity;
  MagicExpansion magic;
  bool magic_positive = false;
  bool cl = false;
  std::optional<Verdict> series;
  std::optional<Verdict> negative;
  /// Needs a non-negative integral h*.
  std::optional<BatteryReport> battery;
  std::optional<Verdict> toeplitz;

  /// Implications that the verdicts above contradict. Empty when consistent.
  std::vector<std::string> implication_violations;
};

/// Runs every checker on E of dimension d and cross-checks the known
/// implications between them. Sub-checker errors propagate.
DiagnosticsReport full_diagnostics(const Poly& e, int d, const DiagnosticsOptions& opts = {});

}  // namespace ehrlab
