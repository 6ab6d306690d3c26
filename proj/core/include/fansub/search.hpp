#pragma once

#include <string>
#include <vector>

#include "fansub/verifier.hpp"

namespace fansub {

/// Per-grid-point failure record of a search run.
struct SearchDiagnostic {
  double eps1 = 0.0;
  std::string stage;    // "seed", "solve", "interval", "assemble", "certify"
  std::string message;
};

struct SearchHit {
  AnsatzPoint point;
  FanSubsolution subsolution;
  Certificate certificate;
};

struct SearchResult {
  std::vector<SearchHit> hits;
  std::vector<SearchDiagnostic> diagnostics;

  bool found() const { return !hits.empty(); }
};

/// Continuation search over the eps1 grid (ascending order, warm-started
/// from the classical middle state at the small end): solve the reduced
/// system, derive the eps2 interval, take its midpoint, assemble, and keep
/// the candidate iff certify passes. Never throws; per-point failures are
/// recorded in diagnostics.
SearchResult search(const Eos& eos, const RiemannData& data,
                    const std::vector<double>& eps1_grid,
                    const Tolerances& tol = {});

}  // namespace fansub
