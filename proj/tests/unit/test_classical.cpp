#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "lienard/classical.hpp"

using namespace lienard;
using namespace lienard::classical;

namespace {

constexpr double kPi = std::numbers::pi;

double max_error(const PhysicalParams& phys, double amplitude, double step) {
  const auto traj = integrate_lienard(phys, analytic_state(phys, amplitude, 0.0, 0.0), 2 * kPi / phys.omega, step);
  double worst = 0.0;
  for (std::size_t i = 0; i < traj.size(); ++i) {
    worst = std::max(worst, std::abs(traj.positions[i] - analytic_solution(phys, amplitude, 0.0, traj.times[i])));
  }
  return worst;
}

}  // namespace

TEST_SUITE("classical") {
  TEST_CASE("right-hand side") {
    CHECK(lienard_rhs({1, 1, 1}, {0, 0}) == 0.0);
    CHECK(lienard_rhs({0, 1, 1}, {1, 5}) == -1.0);
    CHECK(lienard_rhs({1, 1, 1}, {1, 1}) == doctest::Approx(-19.0 / 9.0).epsilon(1e-15));
  }

  TEST_CASE("closed-form solution") {
    const PhysicalParams phys{1, 1, 1};
    CHECK(analytic_solution(phys, 1, 0, 0) == 0.0);
    CHECK(analytic_solution(phys, 1, 0, kPi / 2) == doctest::Approx(1.0).epsilon(1e-15));
    for (double t : {0.0, 0.3, 1.7, 4.2}) {
      CHECK(analytic_solution({0, 1, 1}, 2, 0, t) == doctest::Approx(2 * std::sin(t)).epsilon(1e-15));
    }
    CHECK_THROWS_AS(analytic_solution(phys, 3.0, 0, 0.1), std::invalid_argument);
  }

  TEST_CASE("closed-form velocity matches a finite difference") {
    const PhysicalParams phys{1.3, 0.9, 1};
    const double h = 1e-5;
    for (double t = 0.0; t < 7.0; t += 0.37) {
      const double fd =
          (analytic_solution(phys, 1.1, 0.4, t + h) - analytic_solution(phys, 1.1, 0.4, t - h)) / (2 * h);
      CHECK(analytic_velocity(phys, 1.1, 0.4, t) == doctest::Approx(fd).epsilon(1e-8));
    }
  }

  TEST_CASE("closed form solves the equation of motion") {
    const PhysicalParams phys{1, 1, 1};
    const double h = 1e-4;
    double worst = 0.0;
    for (double t = 0.0; t < 2 * kPi; t += 0.01) {
      const double xm = analytic_solution(phys, 1, 0, t - h);
      const double x0 = analytic_solution(phys, 1, 0, t);
      const double xp = analytic_solution(phys, 1, 0, t + h);
      const double acc = (xp - 2 * x0 + xm) / (h * h);
      const double vel = (xp - xm) / (2 * h);
      worst = std::max(worst, std::abs(acc - lienard_rhs(phys, {x0, vel})));
    }
    CHECK(worst < 1e-6);
  }

  TEST_CASE("closed form is periodic") {
    const PhysicalParams phys{1, 1.5, 1};
    for (double t : {0.1, 0.9, 2.3}) {
      CHECK(std::abs(analytic_solution(phys, 1, 0.2, t + 2 * kPi / 1.5) - analytic_solution(phys, 1, 0.2, t)) <
            1e-14);
    }
  }

  TEST_CASE("RK4 tracks the closed form with fourth-order error") {
    const PhysicalParams phys{1, 1, 1};
    CHECK(max_error(phys, 1.0, 1e-3) < 1e-6);
    const double ratio = max_error(phys, 1.0, 1e-2) / max_error(phys, 1.0, 5e-3);
    CHECK(ratio > 8.0);
    CHECK(ratio < 32.0);
  }

  TEST_CASE("RK4 harmonic branch") {
    const auto traj = integrate_lienard({0, 1, 1}, {1, 0}, 2 * kPi, 1e-3);
    double worst = 0.0;
    for (std::size_t i = 0; i < traj.size(); ++i) worst = std::max(worst, std::abs(traj.positions[i] - std::cos(traj.times[i])));
    CHECK(worst < 1e-10);
    CHECK(traj.times.back() == doctest::Approx(2 * kPi).epsilon(1e-15));
  }

  TEST_CASE("energy is conserved along the trajectory") {
    const PhysicalParams phys{1, 1, 1};
    const auto traj = integrate_lienard(phys, analytic_state(phys, 1, 0, 0), 2 * kPi, 1e-3);
    const double e0 = energy(phys, {traj.positions[0], traj.velocities[0]});
    for (std::size_t i = 0; i < traj.size(); i += 50) {
      CHECK(std::abs(energy(phys, {traj.positions[i], traj.velocities[i]}) - e0) / e0 < 1e-8);
    }
  }

  TEST_CASE("phase-space constraint is enforced") {
    CHECK_THROWS_AS(lagrangian({1, 1, 1}, {0, -2}), ConstraintError);
    CHECK_THROWS_AS(conjugate_momentum({1, 1, 1}, {0, -2}), ConstraintError);
    CHECK(phase_constraint({1, 1, 1}, {0, -2}) == doctest::Approx(-1.0 / 3.0));
    CHECK_THROWS_AS(integrate_lienard({1, 1, 1}, {0, -2}, 1.0, 1e-2), ConstraintError);
    CHECK_THROWS_AS(hamiltonian_classical({1, 1, 1}, 0.0, 3.0), DomainError);
  }

  TEST_CASE("Lagrangian and momentum values") {
    CHECK(lagrangian({1, 1, 1}, {0, 0}) == 0.0);
    CHECK(conjugate_momentum({1, 1, 1}, {0, 0}) == 0.0);
    CHECK(conjugate_momentum({1, 1, 1}, {0, 4.0 / 3.0}) ==
          doctest::Approx(3 * (1 - 3 / std::sqrt(17.0))).epsilon(1e-14));
    CHECK(hamiltonian_classical({1, 1, 1}, 0, 0) == 0.0);
    CHECK(hamiltonian_classical({1, 1, 1}, 2, 0) == doctest::Approx(2.0).epsilon(1e-15));
  }

  TEST_CASE("momentum never exceeds p_max") {
    const PhysicalParams phys{1, 1, 1};
    for (double x = -2; x <= 2; x += 0.25) {
      for (double v = -1; v <= 50; v += 0.5) {
        if (phase_constraint(phys, {x, v}) <= 0) continue;
        CHECK(conjugate_momentum(phys, {x, v}) <= 3.0);
      }
    }
  }

  TEST_CASE("Legendre identity") {
    for (const PhysicalParams phys : {PhysicalParams{1, 1, 1}, PhysicalParams{0.4, 2, 1}, PhysicalParams{0, 1, 1}}) {
      for (double x = -1.5; x <= 1.5; x += 0.3) {
        for (double v = -1.2; v <= 3; v += 0.35) {
          if (phys.k > 0 && phase_constraint(phys, {x, v}) <= 0.01) continue;
          const double p = conjugate_momentum(phys, {x, v});
          const double h = hamiltonian_classical(phys, x, p);
          CHECK(std::abs(h - (p * v - lagrangian(phys, {x, v}))) < 1e-12 * std::max(1.0, std::abs(h)));
        }
      }
    }
  }

  TEST_CASE("Lagrangian and Hamiltonian approach the harmonic forms as k -> 0") {
    const double x = 0.7;
    const double v = 0.4;
    double prev_l = INFINITY;
    double prev_h = INFINITY;
    for (double k = 1e-1; k >= 1e-6; k /= 10) {
      const PhysicalParams phys{k, 1, 1};
      const double dl = std::abs(lagrangian(phys, {x, v}) - 0.5 * (v * v - x * x));
      const double dh = std::abs(hamiltonian_classical(phys, x, v) - 0.5 * (v * v + x * x));
      CHECK(dl < prev_l);
      CHECK(dh < prev_h);
      prev_l = dl;
      prev_h = dh;
    }
    CHECK(lagrangian({1e-7, 1, 1}, {1, 0}) == doctest::Approx(-0.5).epsilon(1e-6));
  }

  TEST_CASE("multiplier condition roots") {
    const PhysicalParams phys{1, 1, 1};
    const auto roots = jlm_sigma_roots(phys);
    CHECK(roots[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(roots[1] == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    for (double r : roots) CHECK(r * (1 - r) == doctest::Approx(2.0 / 9.0).epsilon(1e-15));
    CHECK(jlm_sigma_roots({2.5, 0.3, 1})[1] == doctest::Approx(2.0 / 3.0).epsilon(1e-15));

    std::vector<double> xs;
    for (int i = -30; i <= 30; ++i) {
      if (i != 0) xs.push_back(0.13 * i);
    }
    CHECK(jlm_residual(phys, 2.0 / 3.0, xs) < 1e-12);
    CHECK(jlm_residual(phys, 0.4, xs) > 1e-3);
    CHECK(jlm_ratio(phys, xs) == doctest::Approx(2.0 / 9.0).epsilon(1e-12));
    CHECK(is_jlm_root(phys, 1.0 / 3.0));
    CHECK(is_jlm_root(phys, 2.0 / 3.0));
    CHECK_FALSE(is_jlm_root(phys, 0.5));
    CHECK_FALSE(is_jlm_root(phys, 0.0));
    CHECK_FALSE(is_jlm_root(phys, 0.4));
    CHECK_THROWS(jlm_sigma_roots({0, 1, 1}));
  }
}
