#pragma once

#include <optional>
#include <vector>

#include "lienard/params.hpp"
#include "lienard/quantize.hpp"
#include "lienard/report.hpp"

namespace lienard::verify {

struct Options {
  PhysicalParams phys;
  AmbiguityParams amb;
  unsigned n_max = 4;
  std::size_t y_points = 24000;      // N of the y-space eigensolver
  std::optional<double> y_max;       // default: 4λ + 40n + 50
  double h_p = 1e-3;                 // momentum-grid spacing
  std::vector<double> k_sequence{1e-1, 1e-2, 1e-3};
  double eigen_tolerance = 1e-5;
};

/// Runs every module's invariant checks for one parameter set. Constraint
/// violations propagate as exceptions.
std::vector<report::ReportRecord> run_all(const Options& opt);

std::vector<report::ReportRecord> classical_checks(const Options& opt);
std::vector<report::ReportRecord> quantize_checks(const Options& opt);
std::vector<report::ReportRecord> susy_checks(const Options& opt);
std::vector<report::ReportRecord> eigensolver_checks(const Options& opt);
std::vector<report::ReportRecord> wavefn_checks(const Options& opt);
std::vector<report::ReportRecord> limit_checks(const Options& opt);

/// y beyond which |ψ_n| < 1e-12: the Laguerre quadrature truncation
/// max(200, 4λ + 40n + 100).
double decay_bound(const DerivedParams& d, unsigned n);

/// Momentum grid used by the checks: from the decay bound of level n_max up
/// to p_max − h (±(√(2n+1) + 12)√ħω at k = 0).
MomentumGrid check_grid(const Model& model, unsigned n_max, double h);

bool all_pass(const std::vector<report::ReportRecord>& records);

}  // namespace lienard::verify
