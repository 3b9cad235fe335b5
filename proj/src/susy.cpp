#include "lienard/susy.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lienard::susy {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

double one_minus_q(const PhysicalParams& phys, double p) {
  return 1.0 - phys.k * p / (3.0 * phys.omega * phys.omega);
}

// ħk/(6√2ω), the offset separating the partner superpotentials.
double partner_offset(const PhysicalParams& phys) {
  return phys.hbar * phys.k / (6.0 * kSqrt2 * phys.omega);
}

}  // namespace

Superpotential Superpotential::fitted(const Model& model) {
  if (model.derived) return {model.derived->a_coef, model.derived->b_coef, model.phys};
  return {1.0 / kSqrt2, 0.0, model.phys};
}

Superpotential Superpotential::shifted() const {
  return {a_coef, b_coef + partner_offset(phys), phys};
}

bool Superpotential::normalizable() const {
  if (!(a_coef > 0.0)) return false;
  if (const auto pmax = momentum_domain(phys)) return b_coef > -(*pmax) * a_coef;
  return true;
}

double superpotential_eval(const Superpotential& sp, double p) {
  require_in_domain(sp.phys, p, "superpotential_eval");
  return (sp.a_coef * p + sp.b_coef) / std::sqrt(one_minus_q(sp.phys, p));
}

double superpotential_derivative(const Superpotential& sp, double p) {
  require_in_domain(sp.phys, p, "superpotential_derivative");
  const double s = one_minus_q(sp.phys, p);
  const double dq = sp.phys.k / (3.0 * sp.phys.omega * sp.phys.omega);
  return sp.a_coef / std::sqrt(s) + 0.5 * (sp.a_coef * p + sp.b_coef) * dq / (s * std::sqrt(s));
}

PartnerPair partner_potentials(const Superpotential& sp, double p) {
  require_in_domain(sp.phys, p, "partner_potentials");
  const double s = one_minus_q(sp.phys, p);
  const double hw = sp.phys.hbar_omega();
  const double lin = sp.a_coef * p + sp.b_coef;
  const double lin_plus = lin + partner_offset(sp.phys);
  return {lin * lin / s - hw * sp.a_coef / kSqrt2, lin_plus * lin_plus / s + hw * sp.a_coef / kSqrt2};
}

PartnerPair partner_potentials(const Model& model, double p) {
  return partner_potentials(Superpotential::fitted(model), p);
}

PartnerPair partner_potentials_defining(const Superpotential& sp, double p) {
  const auto mp = quantize::mass(sp.phys, p);
  const double hbar = sp.phys.hbar;
  const double w = superpotential_eval(sp, p);
  const double dw = superpotential_derivative(sp, p);
  const double sqrt_m = std::sqrt(mp.m);
  const double m32 = mp.m * sqrt_m;
  // (W/√m)′ = W′/√m − W m′/(2 m^{3/2})
  const double d_w_over_sqrt_m = dw / sqrt_m - w * mp.dm / (2.0 * m32);
  PartnerPair out;
  out.v_minus = w * w - hbar / kSqrt2 * d_w_over_sqrt_m;
  out.v_plus = w * w + hbar / kSqrt2 * (dw / sqrt_m + w * mp.dm / (2.0 * m32)) -
               0.5 * hbar * hbar *
                   (0.75 * mp.dm * mp.dm / (mp.m * mp.m * mp.m) - 0.5 * mp.d2m / (mp.m * mp.m));
  return out;
}

double ground_energy(const Model& model) {
  return (0.5 + model.shift()) * model.phys.hbar_omega();
}

double riccati_residual(const Superpotential& sp, const AmbiguityParams& amb, double eps0,
                        const MomentumGrid& grid) {
  grid.validate_for(sp.phys);
  const double hbar = sp.phys.hbar;
  double worst = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double p = grid[i];
    const auto mp = quantize::mass(sp.phys, p);
    const double w = superpotential_eval(sp, p);
    const double dw = superpotential_derivative(sp, p);
    const double sqrt_m = std::sqrt(mp.m);
    const double d_w_over_sqrt_m = dw / sqrt_m - w * mp.dm / (2.0 * mp.m * sqrt_m);
    const double v = quantize::effective_potential(sp.phys, amb, p);
    const double r = w * w - hbar / kSqrt2 * d_w_over_sqrt_m - v + eps0;
    worst = std::max(worst, std::abs(r));
  }
  return worst;
}

double riccati_residual(const Model& model, const MomentumGrid& grid) {
  return riccati_residual(Superpotential::fitted(model), model.amb, ground_energy(model), grid);
}

RemainderStats shape_invariance_remainder(const Superpotential& first, const Superpotential& second,
                                          const MomentumGrid& grid) {
  grid.validate_for(first.phys);
  const std::size_t n = grid.size();
  std::vector<double> r(n);
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    r[i] = partner_potentials(first, grid[i]).v_plus - partner_potentials(second, grid[i]).v_minus;
    sum += r[i];
  }
  RemainderStats st;
  st.mean = sum / static_cast<double>(n);
  double var = 0.0;
  for (const double x : r) var += (x - st.mean) * (x - st.mean);
  st.stddev = std::sqrt(var / static_cast<double>(n));
  return st;
}

RemainderStats shape_invariance_remainder(const Model& model, const MomentumGrid& grid) {
  const auto sp = Superpotential::fitted(model);
  return shape_invariance_remainder(sp, sp.shifted(), grid);
}

double remainder(const Superpotential& sp) { return kSqrt2 * sp.a_coef * sp.phys.hbar_omega(); }

SpectrumTable spectrum(const PhysicalParams& phys, const AmbiguityParams& amb, unsigned n_max) {
  return spectrum(Model::make(phys, amb), n_max);
}

SpectrumTable spectrum(const Model& model, unsigned n_max) {
  SpectrumTable table{model, {}};
  table.levels.reserve(n_max + 1);
  const double hw = model.phys.hbar_omega();
  const double shift = model.shift();
  for (unsigned n = 0; n <= n_max; ++n) {
    table.levels.push_back({n, (static_cast<double>(n) + 0.5 + shift) * hw});
  }
  return table;
}

std::vector<double> spectrum_from_remainders(const Model& model, unsigned n_max) {
  std::vector<double> out;
  out.reserve(n_max + 1);
  auto sp = Superpotential::fitted(model);
  double e = ground_energy(model);
  out.push_back(e);
  for (unsigned n = 1; n <= n_max; ++n) {
    e += remainder(sp);
    out.push_back(e);
    sp = sp.shifted();
  }
  return out;
}

namespace {

void check_samples(const Superpotential& sp, const SampledFunction& samples, const char* who) {
  if (samples.values.size() != samples.grid.size()) {
    throw std::invalid_argument(std::string(who) + ": samples do not match the grid");
  }
  samples.grid.validate_for(sp.phys);
}

}  // namespace

SampledFunction apply_lowering(const Superpotential& sp, const SampledFunction& samples) {
  check_samples(sp, samples, "apply_lowering");
  const auto& g = samples.grid;
  const auto& psi = samples.values;
  const std::size_t n = g.size();
  const double h = g.spacing();
  const double c = sp.phys.hbar / kSqrt2;
  SampledFunction out{g, std::vector<double>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    const double left = i > 0 ? psi[i - 1] : 0.0;
    const double right = i + 1 < n ? psi[i + 1] : 0.0;
    const double inv_sqrt_m = sp.phys.omega * std::sqrt(one_minus_q(sp.phys, g[i]));
    out.values[i] = c * inv_sqrt_m * (right - left) / (2.0 * h) + superpotential_eval(sp, g[i]) * psi[i];
  }
  return out;
}

SampledFunction apply_raising(const Superpotential& sp, const SampledFunction& samples) {
  check_samples(sp, samples, "apply_raising");
  const auto& g = samples.grid;
  const auto& psi = samples.values;
  const std::size_t n = g.size();
  const double h = g.spacing();
  const double c = sp.phys.hbar / kSqrt2;
  std::vector<double> weighted(n);
  for (std::size_t i = 0; i < n; ++i) {
    weighted[i] = sp.phys.omega * std::sqrt(one_minus_q(sp.phys, g[i])) * psi[i];
  }
  SampledFunction out{g, std::vector<double>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    const double left = i > 0 ? weighted[i - 1] : 0.0;
    const double right = i + 1 < n ? weighted[i + 1] : 0.0;
    out.values[i] = -c * (right - left) / (2.0 * h) + superpotential_eval(sp, g[i]) * psi[i];
  }
  return out;
}

double ground_state_exponent(const Superpotential& sp) {
  const auto pmax = momentum_domain(sp.phys);
  if (!pmax) throw std::invalid_argument("ground_state_exponent: undefined at k = 0");
  const double w = sp.phys.omega;
  return 3.0 * kSqrt2 * w / (sp.phys.hbar * sp.phys.k) * (sp.b_coef + *pmax * sp.a_coef);
}

double ground_state_closed_form(const Superpotential& sp, double p) {
  require_in_domain(sp.phys, p, "ground_state_closed_form");
  const double hbar = sp.phys.hbar;
  const double w = sp.phys.omega;
  if (sp.phys.harmonic()) {
    return std::exp(-kSqrt2 * (0.5 * sp.a_coef * p * p + sp.b_coef * p) / (hbar * w));
  }
  const double e = ground_state_exponent(sp);
  const double log_value =
      e * std::log(one_minus_q(sp.phys, p)) + 3.0 * kSqrt2 * w * sp.a_coef * p / (hbar * sp.phys.k);
  return std::exp(log_value);
}

double ground_state_closed_form(const Model& model, double p) {
  return ground_state_closed_form(Superpotential::fitted(model), p);
}

}  // namespace lienard::susy
