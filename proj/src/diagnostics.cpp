#include "ehrlab/diagnostics.hpp"

#include "ehrlab/error.hpp"
#include "ehrlab/real_roots.hpp"

namespace ehrlab {

namespace {

bool integral_nonnegative(const Poly& p) {
  for (const auto& c : p.coeffs()) {
    if (c < 0 || !is_integer(c)) return false;
  }
  return true;
}

}  // namespace

DiagnosticsReport full_diagnostics(const Poly& e, int d, const DiagnosticsOptions& opts) {
  if (e.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "diagnostics of the zero polynomial");
  DiagnosticsReport r;
  r.ehrhart = e;
  r.d = d;
  r.hstar = hstar_from_poly(e, d);
  const auto& hc = r.hstar.coeffs();

  r.nonnegativity = is_nonnegative(hc);
  r.unimodality = is_unimodal(hc);
  r.log_concavity = is_log_concave(hc);
  r.real_rooted = is_real_rooted(r.hstar);
  r.palindromic = is_palindromic(hc);
  if (r.palindromic) {
    r.gamma = gamma_vector(r.hstar);
    r.gamma_positive = r.gamma->is_positive();
  }
  r.ehrhart_positivity = is_nonnegative(e.coeffs());
  r.magic = magic_expansion(e);
  r.magic_positive = r.magic.is_positive();
  r.cl = cl_check(e);
  if (opts.run_series) r.series = series_log_concavity(e);
  if (opts.run_negative) r.negative = negative_evaluation_log_concavity(e, d);
  if (integral_nonnegative(r.hstar)) {
    HStarVector hv = HStarVector::from_poly(r.hstar, d);
    r.battery = general_inequality_battery(hv);
    if (opts.run_toeplitz) {
      int depth = opts.toeplitz_depth < 0 ? d : std::min(opts.toeplitz_depth, d);
      r.toeplitz = toeplitz_minor_check(hv, depth);
    }
  }

  auto& bad = r.implication_violations;
  const bool positive_coeffs = r.nonnegativity.holds;
  if (r.real_rooted && positive_coeffs && !is_weakly_log_concave(hc).holds) {
    bad.emplace_back("real-rooted with non-negative coefficients but not log-concave");
  }
  if (r.log_concavity.holds && !r.unimodality.holds) bad.emplace_back("log-concave but not unimodal");
  if (r.palindromic && r.real_rooted && positive_coeffs && r.gamma_positive == false) {
    bad.emplace_back("palindromic and real-rooted but not gamma-positive");
  }
  if (r.log_concavity.holds && r.series && !r.series->holds) {
    bad.emplace_back("h* log-concave but the Ehrhart series is not");
  }
  if (r.log_concavity.holds && r.negative && !r.negative->holds) {
    bad.emplace_back("h* log-concave but negative evaluations are not");
  }
  if (r.magic_positive && (!r.ehrhart_positivity.holds || !r.real_rooted)) {
    bad.emplace_back("magic-positive but not Ehrhart-positive with real-rooted h*");
  }
  if (r.cl && !r.ehrhart_positivity.holds) bad.emplace_back("CL but a negative Ehrhart coefficient");
  if (r.ehrhart_positivity.holds && is_real_rooted(e) && !r.real_rooted) {
    bad.emplace_back("Ehrhart-positive real-rooted E with h* not real-rooted");
  }
  return r;
}

}  // namespace ehrlab
