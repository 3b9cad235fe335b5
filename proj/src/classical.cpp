#include "lienard/classical.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

namespace lienard::classical {

double lienard_rhs(const PhysicalParams& phys, const OscillatorState& s) {
  const double k = phys.k;
  return -k * s.x * s.v - (k * k / 9.0) * s.x * s.x * s.x - phys.omega * phys.omega * s.x;
}

namespace {

void check_amplitude(const PhysicalParams& phys, double amplitude) {
  phys.validate();
  if (!(amplitude >= 0.0)) throw std::invalid_argument("amplitude must be non-negative");
  if (phys.k > 0.0 && !(amplitude < 3.0 * phys.omega / phys.k)) {
    throw std::invalid_argument("amplitude must satisfy A < 3*omega/k");
  }
}

}  // namespace

double analytic_solution(const PhysicalParams& phys, double amplitude, double phase, double t) {
  check_amplitude(phys, amplitude);
  const double theta = phys.omega * t + phase;
  const double c = phys.k * amplitude / (3.0 * phys.omega);
  return amplitude * std::sin(theta) / (1.0 - c * std::cos(theta));
}

double analytic_velocity(const PhysicalParams& phys, double amplitude, double phase, double t) {
  check_amplitude(phys, amplitude);
  const double theta = phys.omega * t + phase;
  const double c = phys.k * amplitude / (3.0 * phys.omega);
  const double den = 1.0 - c * std::cos(theta);
  return phys.omega * amplitude * (std::cos(theta) - c) / (den * den);
}

OscillatorState analytic_state(const PhysicalParams& phys, double amplitude, double phase, double t) {
  return {analytic_solution(phys, amplitude, phase, t), analytic_velocity(phys, amplitude, phase, t)};
}

double phase_constraint(const PhysicalParams& phys, const OscillatorState& s) {
  const double w2 = phys.omega * phys.omega;
  return 1.0 + 2.0 * phys.k * s.v / (3.0 * w2) + phys.k * phys.k * s.x * s.x / (9.0 * w2);
}

namespace {

void require_constraint(const PhysicalParams& phys, const OscillatorState& s, const char* who) {
  phys.validate();
  if (phys.k == 0.0) return;
  const double c = phase_constraint(phys, s);
  if (!(c > 0.0)) {
    char buf[200];
    std::snprintf(buf, sizeof buf, "%s: phase constraint violated at x=%.17g, v=%.17g (value %.17g)", who, s.x,
                  s.v, c);
    throw ConstraintError(buf);
  }
}

OscillatorState derivative(const PhysicalParams& phys, const OscillatorState& s) {
  return {s.v, lienard_rhs(phys, s)};
}

OscillatorState axpy(const OscillatorState& s, double h, const OscillatorState& d) {
  return {s.x + h * d.x, s.v + h * d.v};
}

}  // namespace

Trajectory integrate_lienard(const PhysicalParams& phys, const OscillatorState& initial, double t_end,
                             double step) {
  phys.validate();
  if (!(step > 0.0) || !(t_end > 0.0)) {
    throw std::invalid_argument("integrate_lienard: step and t_end must be positive");
  }
  const auto n = static_cast<std::size_t>(std::ceil(t_end / step - 1e-9));
  const double h = t_end / static_cast<double>(n);

  Trajectory traj;
  traj.times.reserve(n + 1);
  traj.positions.reserve(n + 1);
  traj.velocities.reserve(n + 1);

  OscillatorState s = initial;
  auto record = [&](std::size_t i) {
    require_constraint(phys, s, "integrate_lienard");
    traj.times.push_back(h * static_cast<double>(i));
    traj.positions.push_back(s.x);
    traj.velocities.push_back(s.v);
  };
  record(0);
  for (std::size_t i = 1; i <= n; ++i) {
    const auto k1 = derivative(phys, s);
    const auto k2 = derivative(phys, axpy(s, 0.5 * h, k1));
    const auto k3 = derivative(phys, axpy(s, 0.5 * h, k2));
    const auto k4 = derivative(phys, axpy(s, h, k3));
    s.x += h / 6.0 * (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x);
    s.v += h / 6.0 * (k1.v + 2.0 * k2.v + 2.0 * k3.v + k4.v);
    record(i);
  }
  return traj;
}

// Both forms below are rewritten so that the 9ω⁴/k² and 3ω²/k prefactors
// cancel analytically; they stay accurate as k → 0 and reduce exactly to the
// harmonic expressions at k = 0.
//   u = 2kẋ/(3ω²) + k²x²/(9ω²) = k·w,   1 + u = phase constraint.

double lagrangian(const PhysicalParams& phys, const OscillatorState& s) {
  require_constraint(phys, s, "lagrangian");
  const double w2 = phys.omega * phys.omega;
  const double w = 2.0 * s.v / (3.0 * w2) + phys.k * s.x * s.x / (9.0 * w2);
  const double u = phys.k * w;
  const double root = std::sqrt(1.0 + u);
  const double den = 1.0 + 0.5 * u + root;
  return 9.0 * w2 * w2 / 4.0 * w * w / den - 0.5 * w2 * s.x * s.x;
}

double conjugate_momentum(const PhysicalParams& phys, const OscillatorState& s) {
  require_constraint(phys, s, "conjugate_momentum");
  const double w2 = phys.omega * phys.omega;
  const double w = 2.0 * s.v / (3.0 * w2) + phys.k * s.x * s.x / (9.0 * w2);
  const double root = std::sqrt(1.0 + phys.k * w);
  return 3.0 * w2 * w / ((1.0 + root) * root);
}

double hamiltonian_classical(const PhysicalParams& phys, double x, double p) {
  phys.validate();
  require_in_domain(phys, p, "hamiltonian_classical");
  const double w2 = phys.omega * phys.omega;
  const double one_minus_q = 1.0 - phys.k * p / (3.0 * w2);
  return p * p / (2.0 * one_minus_q) + 0.5 * one_minus_q * w2 * x * x;
}

double energy(const PhysicalParams& phys, const OscillatorState& s) {
  return hamiltonian_classical(phys, s.x, conjugate_momentum(phys, s));
}

namespace {

struct JlmTerms {
  double f, g_over_f_prime;
};

// f = kx and g = k²x³/9 + ω²x with (g/f)′ by the quotient rule.
JlmTerms jlm_terms(const PhysicalParams& phys, double x) {
  const double k = phys.k;
  const double w2 = phys.omega * phys.omega;
  const double f = k * x;
  const double df = k;
  const double g = k * k * x * x * x / 9.0 + w2 * x;
  const double dg = k * k * x * x / 3.0 + w2;
  return {f, (dg * f - g * df) / (f * f)};
}

constexpr std::array<double, 5> kJlmSamples{-3.0, -0.7, 0.4, 1.3, 5.0};

}  // namespace

double jlm_ratio(const PhysicalParams& phys, std::span<const double> xs, double tol) {
  phys.validate();
  if (phys.k == 0.0) throw std::invalid_argument("jlm_ratio: requires k > 0");
  if (xs.empty()) throw std::invalid_argument("jlm_ratio: no sample points");
  double first = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] == 0.0) throw std::invalid_argument("jlm_ratio: x = 0 is a pole of g/f");
    const auto t = jlm_terms(phys, xs[i]);
    const double c = t.g_over_f_prime / t.f;
    if (i == 0) {
      first = c;
    } else if (std::abs(c - first) > tol * std::max(1.0, std::abs(first))) {
      throw std::runtime_error("jlm_ratio: (g/f)'/f is not constant, multiplier condition cannot hold");
    }
  }
  return first;
}

std::array<double, 2> jlm_sigma_roots(const PhysicalParams& phys) {
  const double c = jlm_ratio(phys, kJlmSamples);
  const double disc = 1.0 - 4.0 * c;
  if (disc < 0.0) throw std::runtime_error("jlm_sigma_roots: no real roots");
  const double r = std::sqrt(disc);
  return {0.5 * (1.0 - r), 0.5 * (1.0 + r)};
}

double jlm_residual(const PhysicalParams& phys, double sigma, std::span<const double> xs) {
  phys.validate();
  double worst = 0.0;
  for (const double x : xs) {
    const auto t = jlm_terms(phys, x);
    worst = std::max(worst, std::abs(t.g_over_f_prime - sigma * (1.0 - sigma) * t.f));
  }
  return worst;
}

bool is_jlm_root(const PhysicalParams& phys, double sigma, double tol) {
  if (sigma == 0.0 || sigma == 0.5) return false;
  double scale = 0.0;
  for (const double x : kJlmSamples) scale = std::max(scale, std::abs(phys.k * x));
  return jlm_residual(phys, sigma, kJlmSamples) <= tol * scale;
}

}  // namespace lienard::classical
