#pragma once

#include <functional>
#include <vector>

namespace lienard::specfun {

/// ln Γ(x) for x > 0. Lanczos approximation below 15, Stirling series with
/// four correction terms above. Throws std::domain_error for x ≤ 0.
double log_gamma(double x);

/// ln Γ(x) − [(x − ½) ln x − x + ½ ln 2π], the Stirling remainder. Stays
/// accurate for large x, where both terms are huge.
double log_gamma_stirling_remainder(double x);

/// ln n!
double log_factorial(unsigned n);

/// Associated Laguerre polynomial L_n^α(y) by the three-term recurrence in n.
/// Requires α > −1.
double laguerre_assoc(unsigned n, double alpha, double y);

/// d/dy L_n^α = −L_{n−1}^{α+1}.
double laguerre_assoc_derivative(unsigned n, double alpha, double y);

/// d²/dy² L_n^α = L_{n−2}^{α+2}.
double laguerre_assoc_second_derivative(unsigned n, double alpha, double y);

/// Physicists' Hermite polynomial H_n(x).
double hermite(unsigned n, double x);

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  double integrate(const std::function<double(double)>& f) const;
};

/// Gauss–Legendre nodes and weights on [−1, 1].
QuadratureRule gauss_legendre(unsigned order);

/// Composite Gauss–Legendre on [lo, hi] with equal panels; order in [4, 16].
QuadratureRule composite_gauss_legendre(double lo, double hi, unsigned panels, unsigned order);

/// Composite rule on [0, y_max].
QuadratureRule quadrature_nodes(double y_max, unsigned panels, unsigned order);

/// Truncation point for ∫₀^∞ y^α e^{−y} (polynomial of degree ≤ 2n) dy.
double laguerre_truncation(double alpha, unsigned n);

}  // namespace lienard::specfun
