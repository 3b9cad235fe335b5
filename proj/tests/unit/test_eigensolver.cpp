#include <cmath>
#include <numbers>

#include "doctest.h"
#include "lienard/eigensolver.hpp"
#include "lienard/tridiagonal.hpp"

using namespace lienard;
using namespace lienard::eigensolver;

TEST_SUITE("eigensolver") {
  TEST_CASE("tridiagonal product with zero ghosts") {
    const SymmetricTridiagonal m{{2, 2, 2}, {-1, -1}};
    const auto y = m.apply(std::vector<double>{1, 2, 3});
    CHECK(y == std::vector<double>{0, 0, 4});
  }

  TEST_CASE("diagonal matrix") {
    const SymmetricTridiagonal m{{3, 1}, {0}};
    const auto ev = lowest_eigenvalues(m, 2);
    CHECK(ev[0] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(ev[1] == doctest::Approx(3.0).epsilon(1e-10));
    CHECK_THROWS(lowest_eigenvalues(m, 3));
    CHECK_THROWS(lowest_eigenvalues(SymmetricTridiagonal{std::vector<double>(20, 1.0), std::vector<double>(19, 0.1)}, 11));
  }

  TEST_CASE("Dirichlet Laplacian") {
    const std::size_t n = 1000;
    const double h = 1.0 / (n + 1);
    const SymmetricTridiagonal m{std::vector<double>(n, 2 / (h * h)), std::vector<double>(n - 1, -1 / (h * h))};
    const auto ev = lowest_eigenvalues(m, 3);
    const double pi2 = std::numbers::pi * std::numbers::pi;
    CHECK(std::abs(ev[0] - pi2) / pi2 < 1e-3);
    // exact discrete eigenvalues (4/h²) sin²(jπh/2)
    for (unsigned j = 1; j <= 3; ++j) {
      const double s = std::sin(j * std::numbers::pi * h / 2);
      CHECK(std::abs(ev[j - 1] - 4 / (h * h) * s * s) < 2e-10);
    }
    CHECK(sturm_count(m, 0.5 * (ev[0] + ev[1])) == 1);
    CHECK(sturm_count(m, 0.0) == 0);
    for (unsigned j = 0; j < 3; ++j) CHECK(sign_changes(eigenvector(m, ev[j])) == j);
  }

  TEST_CASE("y-space operator structure") {
    const auto model = Model::make({1, 1, 1}, {0, 0});
    const YGrid grid(150.0, 6000);
    const auto op = build_operator(model, grid);
    CHECK(op.matrix.size() == 6000);
    CHECK(op.matrix.off.size() == 5999);
    bool negative = true;
    for (double o : op.matrix.off) negative = negative && o < 0;
    CHECK(negative);
    CHECK(op.scale == 1.0);
    CHECK_THROWS(build_operator(Model::make({0, 1, 1}), grid));
    CHECK_THROWS(YGrid(150.0, 499));
    CHECK(grid.refined().spacing() == doctest::Approx(grid.spacing() / 2).epsilon(1e-15));
    CHECK(recommended_y_max(9.0, 3) == 206.0);
  }

  TEST_CASE("numeric spectrum reproduces the closed form") {
    const auto model = Model::make({1, 1, 1}, {0, 0});
    const auto rows = verify_spectrum(model, 3, YGrid(150.0, 6000));
    CHECK(rows[0].numeric == doctest::Approx(0.5).epsilon(1e-5));
    for (const auto& r : rows) {
      if (r.n <= 2) CHECK(r.abs_error < 1e-5);
      CHECK(r.convergence_ratio > 3.0);
      CHECK(r.convergence_ratio < 5.0);
      CHECK(r.numeric_refined > rows[0].numeric - 1.0);
    }
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].numeric > rows[i - 1].numeric);
    // n = 3 needs a finer grid than N = 6000 for the 1e-5 level
    CHECK(verify_spectrum(model, 3, YGrid(150.0, 8000))[3].abs_error < 1e-5);

    const auto shifted = verify_spectrum(Model::make({1, 1, 1}, {19, 1}), 0, YGrid(150.0, 6000));
    CHECK(std::abs(shifted[0].numeric - 1.5) < 1e-5);
  }

  TEST_CASE("level spacing tends to hbar*omega under refinement") {
    const auto model = Model::make({1, 1, 1}, {19, 1});
    double prev = INFINITY;
    for (std::size_t n : {1500u, 3001u, 6003u}) {
      const auto rows = verify_spectrum(model, 3, YGrid(150.0, n));
      double worst = 0.0;
      for (std::size_t i = 1; i < rows.size(); ++i) worst = std::max(worst, std::abs(rows[i].numeric - rows[i - 1].numeric - 1.0));
      CHECK(worst < prev);
      prev = worst;
    }
  }

  TEST_CASE("truncation insensitivity") {
    const auto model = Model::make({1, 1, 1}, {0, 0});
    const auto a = lowest_eigenvalues(build_operator(model, YGrid(150.0, 5999)).matrix, 4);
    const auto b = lowest_eigenvalues(build_operator(model, YGrid(225.0, 8999)).matrix, 4);
    for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(a[i] - b[i]) < 1e-8);
  }

  TEST_CASE("eigenvector nodes") {
    const auto model = Model::make({1, 1, 1}, {19, 1});
    const auto op = build_operator(model, YGrid(150.0, 3000));
    const auto ev = lowest_eigenvalues(op.matrix, 5);
    for (unsigned n = 0; n < 5; ++n) CHECK(sign_changes(eigenvector(op.matrix, ev[n])) == n);
  }
}
