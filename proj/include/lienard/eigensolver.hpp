#pragma once

#include <vector>

#include "lienard/params.hpp"
#include "lienard/tridiagonal.hpp"

namespace lienard::eigensolver {

/// Uniform points y_i = i·h, i = 1..N, h = y_max/(N+1); y = 0 and y_max
/// carry the Dirichlet conditions.
class YGrid {
 public:
  static constexpr std::size_t kMinPoints = 500;

  YGrid(double y_max, std::size_t points);

  double y_max() const { return y_max_; }
  std::size_t size() const { return points_; }
  double spacing() const { return y_max_ / static_cast<double>(points_ + 1); }
  double operator[](std::size_t i) const { return spacing() * static_cast<double>(i + 1); }

  /// Same y_max with the spacing halved (N → 2N + 1).
  YGrid refined() const { return {y_max_, 2 * points_ + 1}; }

 private:
  double y_max_;
  std::size_t points_;
};

/// Truncation that encloses the support of y^{2λ}e^{−y}L_n²: 4λ + 40n + 50.
double recommended_y_max(double lambda, unsigned n_target);

struct TridiagonalOperator {
  SymmetricTridiagonal matrix;
  double scale = 1.0;  // ħω
};

/// Divergence-form discretization of −ħω[d/dy(y d/dy) − λ²/y − y/4 + 𝖺].
TridiagonalOperator build_operator(const Model& model, const YGrid& grid);

/// Number of eigenvalues strictly below x (Sturm sequence / LDLᵀ inertia).
std::size_t sturm_count(const SymmetricTridiagonal& m, double x);

/// The `count` smallest eigenvalues by bisection, each to absolute `tol`.
/// Throws std::runtime_error if the iteration budget is exhausted.
std::vector<double> lowest_eigenvalues(const SymmetricTridiagonal& m, unsigned count, double tol = 1e-10);

/// Eigenvector for a computed eigenvalue by inverse iteration, unit 2-norm,
/// sign fixed so the largest-magnitude entry is positive.
std::vector<double> eigenvector(const SymmetricTridiagonal& m, double eigenvalue);

/// Number of strict sign changes, ignoring entries below `floor`·max|v|.
std::size_t sign_changes(const std::vector<double>& v, double floor = 1e-10);

struct SpectrumCheck {
  unsigned n = 0;
  double analytic = 0.0;
  double numeric = 0.0;
  double abs_error = 0.0;
  double numeric_refined = 0.0;   // on grid.refined()
  double convergence_ratio = 0.0; // abs_error / refined error, ≈ 4 for O(h²)
};

/// Pairs the eigenvalues of the y-space operator with ε_n, n = 0..n_max ≤ 5.
/// Requires k > 0.
std::vector<SpectrumCheck> verify_spectrum(const Model& model, unsigned n_max, const YGrid& grid);

}  // namespace lienard::eigensolver
