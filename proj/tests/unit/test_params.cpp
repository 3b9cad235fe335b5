#include <cmath>

#include "doctest.h"
#include "lienard/params.hpp"

using namespace lienard;

TEST_SUITE("params") {
  TEST_CASE("derived constants at unit parameters") {
    const auto d = derive_params({1, 1, 1}, {0, 0});
    CHECK(d.a_script == 9.0);
    CHECK(d.lambda == 9.0);
    CHECK(d.shift == 0.0);
    CHECK(d.p_max == 3.0);
    CHECK(d.a_coef == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));

    const auto e = derive_params({1, 1, 1}, {19, 1});
    CHECK(e.lambda == doctest::Approx(10.0).epsilon(1e-15));
    CHECK(e.shift == doctest::Approx(1.0).epsilon(1e-14));
  }

  TEST_CASE("a_script and p_max scale as written") {
    const PhysicalParams phys{0.7, 1.3, 0.4};
    const auto d = derive_params(phys, {0.5, 2.0});
    CHECK(d.a_script == doctest::Approx(9 * std::pow(1.3, 3) / (0.4 * 0.49)).epsilon(1e-14));
    CHECK(d.p_max == doctest::Approx(3 * 1.69 / 0.7).epsilon(1e-14));
    // p_max = √(𝖺ħω)
    CHECK(d.p_max == doctest::Approx(std::sqrt(d.a_script * 0.4 * 1.3)).epsilon(1e-14));
    CHECK(d.lambda * d.lambda == doctest::Approx(d.a_script * d.a_script + 1.0).epsilon(1e-14));
  }

  TEST_CASE("constraint boundary is excluded") {
    CHECK_THROWS_AS(derive_params({1, 1, 1}, {-9, 9}), ConstraintError);
    CHECK_THROWS_AS(derive_params({1, 1, 1}, {-82, 1}), ConstraintError);
    CHECK_THROWS_AS(Model::make({1, 1, 1}, {-81, 1}), ConstraintError);
    CHECK_NOTHROW(derive_params({1, 1, 1}, {-80.999, 1}));
    CHECK_THROWS_AS(derive_params({0, 1, 1}, {}), std::invalid_argument);
  }

  TEST_CASE("physical parameters are validated") {
    CHECK_THROWS_AS(PhysicalParams({1, 0, 1}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(PhysicalParams({-1, 1, 1}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(PhysicalParams({1, 1, 0}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(PhysicalParams({1, NAN, 1}).validate(), std::invalid_argument);
    CHECK_NOTHROW(PhysicalParams({0, 1, 1}).validate());
  }

  TEST_CASE("momentum domain") {
    CHECK(*momentum_domain({1, 1, 1}) == 3.0);
    CHECK(*momentum_domain({1, 2, 1}) == 12.0);
    CHECK_FALSE(momentum_domain({0, 1, 1}).has_value());
    CHECK_THROWS_AS(require_in_domain({1, 1, 1}, 3.0, "test"), DomainError);
    CHECK_THROWS_AS(require_in_domain({1, 1, 1}, 3.5, "test"), DomainError);
    CHECK_THROWS_AS(require_in_domain({1, 1, 1}, NAN, "test"), DomainError);
    CHECK_NOTHROW(require_in_domain({1, 1, 1}, 2.999, "test"));
    CHECK_NOTHROW(require_in_domain({0, 1, 1}, 1e6, "test"));
  }

  TEST_CASE("shift vanishes when alpha*gamma = 0") {
    for (double k : {1e-3, 0.1, 1.0, 7.0}) {
      CHECK(derive_params({k, 1, 1}, {0, 5}).shift == 0.0);
      CHECK(derive_params({k, 1.7, 0.3}, {-2, 0}).shift == 0.0);
    }
  }

  TEST_CASE("shift decreases toward zero with k") {
    double previous = INFINITY;
    for (double k = 1.0; k >= 1e-6; k /= 10.0) {
      const auto d = derive_params({k, 1, 1}, {19, 1});
      CHECK(std::abs(d.shift) < previous);
      previous = std::abs(d.shift);
      // λ ≈ 𝖺 + αγ/(2𝖺) for large 𝖺
      if (d.a_script > 1e4) CHECK(d.shift == doctest::Approx(19.0 / (2.0 * d.a_script)).epsilon(1e-6));
    }
  }

  TEST_CASE("depends on alpha, gamma only through the product") {
    const PhysicalParams phys{0.8, 1.1, 1.0};
    CHECK(derive_params(phys, {2, 3}) == derive_params(phys, {6, 1}));
    CHECK(derive_params(phys, {2, 3}) == derive_params(phys, {3, 2}));
    CHECK(derive_params(phys, {-4, 0.5}) == derive_params(phys, {-1, 2}));
  }

  TEST_CASE("normalizability bound on b holds for accepted sets") {
    for (double k : {0.3, 1.0, 2.0}) {
      for (double omega : {0.5, 1.0, 2.0}) {
        const double a2 = std::pow(9 * omega * omega * omega / (k * k), 2);
        for (double frac : {-0.999999, -0.5, 0.0, 0.5, 3.0}) {
          const auto d = derive_params({k, omega, 1}, {frac * a2, 1.0});
          CHECK(d.b_coef > -d.p_max * d.a_coef);
        }
      }
    }
  }

  TEST_CASE("harmonic dispatch") {
    const auto m = Model::make({0, 1, 1}, {19, 1});
    CHECK(m.harmonic());
    CHECK(m.shift() == 0.0);
    CHECK_FALSE(Model::make({1, 1, 1}).harmonic());
  }
}
