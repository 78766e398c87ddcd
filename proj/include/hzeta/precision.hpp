#pragma once

namespace hzeta {

/// Tolerances and iteration caps shared by every floating evaluation.
struct PrecisionContext {
  double target_abs_tol = 1e-12;
  int max_series_terms = 64;
  double quad_rel_tol = 1e-12;
  int quad_max_refinements = 12;
  /// Relative residual bound for accepted roots, see roots.hpp.
  double root_tol = 1e-12;

  /// Throws Error(domain) when a field violates its invariant.
  void validate() const;
};

}  // namespace hzeta
