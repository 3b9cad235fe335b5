#include "lienard/quantize.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lienard {

MomentumGrid::MomentumGrid(double p0, double h, std::size_t count) : p0_(p0), h_(h), count_(count) {
  if (!(h > 0.0) || !std::isfinite(h) || !std::isfinite(p0)) {
    throw std::invalid_argument("MomentumGrid: spacing must be positive and finite");
  }
  if (count < kMinPoints) throw std::invalid_argument("MomentumGrid: at least 17 points required");
}

MomentumGrid MomentumGrid::spanning(const PhysicalParams& phys, double p_lo, double h) {
  phys.validate();
  if (!(h > 0.0)) throw std::invalid_argument("MomentumGrid: spacing must be positive");
  if (const auto pmax = momentum_domain(phys)) {
    if (!(p_lo < *pmax)) throw DomainError("MomentumGrid: lower end must lie below 3w^2/k");
    const auto m = static_cast<std::size_t>(std::ceil((*pmax - p_lo) / h - 1e-9));
    return {*pmax - static_cast<double>(m) * h, h, std::max<std::size_t>(m, kMinPoints)};
  }
  const double half = std::abs(p_lo);
  const auto m = static_cast<std::size_t>(std::ceil(half / h - 1e-9));
  return {-static_cast<double>(m) * h, h, 2 * m + 1};
}

std::vector<double> MomentumGrid::points() const {
  std::vector<double> out(count_);
  for (std::size_t i = 0; i < count_; ++i) out[i] = (*this)[i];
  return out;
}

void MomentumGrid::validate_for(const PhysicalParams& phys) const {
  if (const auto pmax = momentum_domain(phys); pmax && !(back() < *pmax)) {
    throw DomainError("MomentumGrid: grid reaches p >= 3w^2/k");
  }
}

SampledFunction SampledFunction::sample(const MomentumGrid& grid, const std::function<double(double)>& f) {
  SampledFunction s{grid, std::vector<double>(grid.size())};
  for (std::size_t i = 0; i < grid.size(); ++i) s.values[i] = f(grid[i]);
  return s;
}

double SampledFunction::sup_norm() const {
  double m = 0.0;
  for (const double v : values) m = std::max(m, std::abs(v));
  return m;
}

namespace quantize {

namespace {

double one_minus_q(const PhysicalParams& phys, double p) {
  return 1.0 - phys.k * p / (3.0 * phys.omega * phys.omega);
}

}  // namespace

MassProfile mass(const PhysicalParams& phys, double p) {
  phys.validate();
  require_in_domain(phys, p, "mass");
  const double w2 = phys.omega * phys.omega;
  const double s = one_minus_q(phys, p);
  MassProfile mp;
  mp.m = 1.0 / (w2 * s);
  mp.dm = phys.k / (3.0 * w2 * w2) / (s * s);
  mp.d2m = 2.0 * phys.k * phys.k / (9.0 * w2 * w2 * w2) / (s * s * s);
  return mp;
}

double potential_U(const PhysicalParams& phys, double p) {
  phys.validate();
  require_in_domain(phys, p, "potential_U");
  return p * p / (2.0 * one_minus_q(phys, p));
}

double von_roos_potential(const MassProfile& mp, double U, const AmbiguityParams& amb, double hbar) {
  const double m = mp.m;
  const double a = mp.dm * mp.dm / (m * m * m);
  const double b = mp.d2m / (2.0 * m * m);
  return U + 0.5 * hbar * hbar * (amb.product() * a + (amb.alpha + amb.gamma) * (a - b));
}

double effective_potential(const PhysicalParams& phys, const AmbiguityParams& amb, double p) {
  phys.validate();
  require_in_domain(phys, p, "effective_potential");
  if (!phys.harmonic()) derive_params(phys, amb);
  const double c = phys.hbar * phys.k / (3.0 * phys.omega);
  return (p * p + amb.product() * c * c) / (2.0 * one_minus_q(phys, p));
}

SymmetricTridiagonal hamiltonian_matrix(const PhysicalParams& phys, const AmbiguityParams& amb,
                                        const MomentumGrid& grid) {
  phys.validate();
  grid.validate_for(phys);
  if (!phys.harmonic()) derive_params(phys, amb);
  const std::size_t n = grid.size();
  const double h = grid.spacing();
  const double kin = 0.5 * phys.hbar_omega() * phys.hbar_omega() / (h * h);
  const double c = phys.hbar * phys.k / (3.0 * phys.omega);
  const double ag_term = amb.product() * c * c;

  SymmetricTridiagonal op;
  op.diag.resize(n);
  op.off.resize(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    const double p = grid[i];
    const double left = one_minus_q(phys, p - 0.5 * h);
    const double right = one_minus_q(phys, p + 0.5 * h);
    op.diag[i] = kin * (left + right) + (p * p + ag_term) / (2.0 * one_minus_q(phys, p));
    if (i + 1 < n) op.off[i] = -kin * right;
  }
  return op;
}

SampledFunction apply_hamiltonian_fd(const PhysicalParams& phys, const AmbiguityParams& amb,
                                     const MomentumGrid& grid, const SampledFunction& samples,
                                     double end_tolerance) {
  if (!(samples.grid == grid) || samples.values.size() != grid.size()) {
    throw std::invalid_argument("apply_hamiltonian_fd: samples are not defined on the given grid");
  }
  const double scale = samples.sup_norm();
  // A grid built by MomentumGrid::spanning has its right ghost at p_max,
  // where every admissible state vanishes exactly.
  const auto p_max = momentum_domain(phys);
  const bool exact_right = p_max && std::abs(grid.back() + grid.spacing() - *p_max) <= 1e-9 * *p_max;
  if (std::abs(samples.values.front()) > end_tolerance * scale ||
      (!exact_right && std::abs(samples.values.back()) > end_tolerance * scale)) {
    throw std::invalid_argument("apply_hamiltonian_fd: samples do not vanish at the grid ends");
  }
  const auto op = hamiltonian_matrix(phys, amb, grid);
  return {grid, op.apply(samples.values)};
}

}  // namespace quantize
}  // namespace lienard
