#include "lienard/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "lienard/susy.hpp"

namespace lienard::eigensolver {

YGrid::YGrid(double y_max, std::size_t points) : y_max_(y_max), points_(points) {
  if (!(y_max > 0.0) || !std::isfinite(y_max)) throw std::invalid_argument("YGrid: y_max must be positive");
  if (points < kMinPoints) throw std::invalid_argument("YGrid: at least 500 points required");
}

double recommended_y_max(double lambda, unsigned n_target) {
  return 4.0 * lambda + 40.0 * static_cast<double>(n_target) + 50.0;
}

TridiagonalOperator build_operator(const Model& model, const YGrid& grid) {
  if (!model.derived) throw std::invalid_argument("build_operator: the y-form needs k > 0");
  const auto& d = *model.derived;
  if (!(d.lambda > 0.0)) throw std::invalid_argument("build_operator: lambda must be positive");
  const double hw = model.phys.hbar_omega();
  const double h = grid.spacing();
  const double inv_h2 = 1.0 / (h * h);
  const double lambda2 = d.lambda * d.lambda;
  const std::size_t n = grid.size();

  TridiagonalOperator op;
  op.scale = hw;
  op.matrix.diag.resize(n);
  op.matrix.off.resize(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    const double y = grid[i];
    const double y_lo = y - 0.5 * h;
    const double y_hi = y + 0.5 * h;
    op.matrix.diag[i] = hw * ((y_lo + y_hi) * inv_h2 + lambda2 / y + 0.25 * y - d.a_script);
    if (i + 1 < n) op.matrix.off[i] = -hw * y_hi * inv_h2;
  }
  return op;
}

std::size_t sturm_count(const SymmetricTridiagonal& m, double x) {
  const std::size_t n = m.size();
  std::size_t negatives = 0;
  double d = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double b2 = i > 0 ? m.off[i - 1] * m.off[i - 1] : 0.0;
    d = (m.diag[i] - x) - (i > 0 ? b2 / d : 0.0);
    if (d == 0.0) d = -std::numeric_limits<double>::epsilon() * (std::abs(m.diag[i]) + std::abs(x) + 1.0);
    if (d < 0.0) ++negatives;
  }
  return negatives;
}

namespace {

std::pair<double, double> gershgorin(const SymmetricTridiagonal& m) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(m.off[i - 1]);
    if (i + 1 < n) r += std::abs(m.off[i]);
    lo = std::min(lo, m.diag[i] - r);
    hi = std::max(hi, m.diag[i] + r);
  }
  return {lo, hi};
}

}  // namespace

std::vector<double> lowest_eigenvalues(const SymmetricTridiagonal& m, unsigned count, double tol) {
  if (count == 0) return {};
  if (count > 10) throw std::invalid_argument("lowest_eigenvalues: at most 10 eigenvalues");
  if (count > m.size()) throw std::invalid_argument("lowest_eigenvalues: count exceeds matrix size");
  if (m.off.size() + 1 != m.size()) throw std::invalid_argument("lowest_eigenvalues: malformed matrix");
  auto [lo_bound, hi_bound] = gershgorin(m);
  lo_bound -= 1.0;
  hi_bound += 1.0;

  constexpr int kBudget = 300;
  std::vector<double> out;
  out.reserve(count);
  for (unsigned j = 0; j < count; ++j) {
    // eigenvalue j is the smallest x with sturm_count(x) > j
    double lo = out.empty() ? lo_bound : out.back() - tol;
    double hi = hi_bound;
    int iter = 0;
    while (hi - lo > tol) {
      if (++iter > kBudget) throw std::runtime_error("lowest_eigenvalues: bisection did not converge");
      const double mid = 0.5 * (lo + hi);
      if (mid == lo || mid == hi) break;
      if (sturm_count(m, mid) > j) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    out.push_back(0.5 * (lo + hi));
  }
  return out;
}

std::vector<double> eigenvector(const SymmetricTridiagonal& m, double eigenvalue) {
  const std::size_t n = m.size();
  if (n == 0) return {};
  const double shift = eigenvalue + 1e-10 * std::max(1.0, std::abs(eigenvalue));
  std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> c(n), d(n), rhs(n);
  for (int iter = 0; iter < 4; ++iter) {
    // Thomas solve of (M − shift) w = v
    rhs = v;
    double pivot = m.diag[0] - shift;
    if (pivot == 0.0) pivot = 1e-300;
    c[0] = n > 1 ? m.off[0] / pivot : 0.0;
    d[0] = rhs[0] / pivot;
    for (std::size_t i = 1; i < n; ++i) {
      pivot = (m.diag[i] - shift) - m.off[i - 1] * c[i - 1];
      if (pivot == 0.0) pivot = 1e-300;
      c[i] = i + 1 < n ? m.off[i] / pivot : 0.0;
      d[i] = (rhs[i] - m.off[i - 1] * d[i - 1]) / pivot;
    }
    v[n - 1] = d[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) v[i] = d[i] - c[i] * v[i + 1];
    double norm = 0.0;
    for (const double x : v) norm += x * x;
    norm = std::sqrt(norm);
    for (double& x : v) x /= norm;
  }
  const auto it = std::max_element(v.begin(), v.end(), [](double a, double b) { return std::abs(a) < std::abs(b); });
  if (*it < 0.0) {
    for (double& x : v) x = -x;
  }
  return v;
}

std::size_t sign_changes(const std::vector<double>& v, double floor) {
  double peak = 0.0;
  for (const double x : v) peak = std::max(peak, std::abs(x));
  const double cut = floor * peak;
  std::size_t changes = 0;
  int last = 0;
  for (const double x : v) {
    if (std::abs(x) <= cut) continue;
    const int s = x > 0.0 ? 1 : -1;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::vector<SpectrumCheck> verify_spectrum(const Model& model, unsigned n_max, const YGrid& grid) {
  if (n_max > 5) throw std::invalid_argument("verify_spectrum: n_max must not exceed 5");
  const auto table = susy::spectrum(model, n_max);
  const auto coarse = lowest_eigenvalues(build_operator(model, grid).matrix, n_max + 1);
  const auto fine = lowest_eigenvalues(build_operator(model, grid.refined()).matrix, n_max + 1);
  std::vector<SpectrumCheck> rows;
  rows.reserve(n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) {
    SpectrumCheck r;
    r.n = n;
    r.analytic = table.levels[n].energy;
    r.numeric = coarse[n];
    r.abs_error = std::abs(r.numeric - r.analytic);
    r.numeric_refined = fine[n];
    const double fine_err = std::abs(fine[n] - r.analytic);
    r.convergence_ratio = fine_err > 0.0 ? r.abs_error / fine_err : std::numeric_limits<double>::infinity();
    rows.push_back(r);
  }
  return rows;
}

}  // namespace lienard::eigensolver
