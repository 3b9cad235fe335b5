#pragma once

#include <array>
#include <span>
#include <vector>

#include "lienard/params.hpp"

namespace lienard::classical {

struct OscillatorState {
  double x = 0.0;
  double v = 0.0;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<double> positions;
  std::vector<double> velocities;

  std::size_t size() const { return times.size(); }
};

/// ẍ of ẍ + kxẋ + (k²/9)x³ + ω²x = 0.
double lienard_rhs(const PhysicalParams& phys, const OscillatorState& s);

/// Closed-form periodic orbit x(t) = A sin θ / (1 − (kA/3ω) cos θ), θ = ωt + δ.
/// Throws std::invalid_argument unless 0 ≤ A < 3ω/k (any A ≥ 0 at k = 0).
double analytic_solution(const PhysicalParams& phys, double amplitude, double phase, double t);

/// Time derivative of analytic_solution, by the quotient rule.
double analytic_velocity(const PhysicalParams& phys, double amplitude, double phase, double t);

/// Initial state of the closed-form orbit at time t.
OscillatorState analytic_state(const PhysicalParams& phys, double amplitude, double phase, double t);

/// Fixed-step classical RK4. The step is shrunk slightly so that the last
/// sample lands on t_end. Throws ConstraintError if a sample leaves the
/// admissible phase region (k > 0 only).
Trajectory integrate_lienard(const PhysicalParams& phys, const OscillatorState& initial, double t_end,
                             double step);

/// 1 + 2kẋ/(3ω²) + k²x²/(9ω²); must be positive for the Lagrangian to be real.
double phase_constraint(const PhysicalParams& phys, const OscillatorState& s);

double lagrangian(const PhysicalParams& phys, const OscillatorState& s);
double conjugate_momentum(const PhysicalParams& phys, const OscillatorState& s);

/// H(x, p) = p²/(2(1 − kp/3ω²)) + (1 − kp/3ω²)ω²x²/2, defined for p < 3ω²/k.
double hamiltonian_classical(const PhysicalParams& phys, double x, double p);

/// Energy of a velocity-space state through the Legendre map.
double energy(const PhysicalParams& phys, const OscillatorState& s);

/// Constant c = (g/f)′ / f for f = kx, g = k²x³/9 + ω²x, evaluated at the
/// sample points (x ≠ 0). Throws if the ratio is not constant to `tol`.
double jlm_ratio(const PhysicalParams& phys, std::span<const double> xs, double tol = 1e-8);

/// The two σ with σ(1 − σ) = jlm_ratio, ascending. Requires k > 0.
std::array<double, 2> jlm_sigma_roots(const PhysicalParams& phys);

/// max |(g/f)′ − σ(1−σ) f| over xs, with (g/f)′ by the quotient rule.
double jlm_residual(const PhysicalParams& phys, double sigma, std::span<const double> xs);

/// Whether σ solves the multiplier condition (σ ∉ {0, 1/2} required).
bool is_jlm_root(const PhysicalParams& phys, double sigma, double tol = 1e-12);

}  // namespace lienard::classical
