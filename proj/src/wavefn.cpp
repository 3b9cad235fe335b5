#include "lienard/wavefn.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lienard/specfun.hpp"

namespace lienard::wavefn {

using specfun::hermite;
using specfun::laguerre_assoc;
using specfun::log_factorial;
using specfun::log_gamma;

namespace {

constexpr double kMaxLogValue = 700.0;

double signed_exp(double log_magnitude, double sign_source) {
  if (sign_source == 0.0) return 0.0;
  if (log_magnitude > kMaxLogValue) {
    throw std::overflow_error("wavefunction exponent exceeds double range");
  }
  const double mag = std::exp(log_magnitude);
  return sign_source < 0.0 ? -mag : mag;
}

}  // namespace

double norm_const_log(const Model& model, unsigned n) {
  const double hw = model.phys.hbar_omega();
  if (model.harmonic()) {
    return -0.5 * (static_cast<double>(n) * std::numbers::ln2 + log_factorial(n) +
                   0.5 * std::log(std::numbers::pi * hw));
  }
  const auto& d = *model.derived;
  return 0.5 * (0.5 * std::log(d.a_script / hw) + std::numbers::ln2 + log_factorial(n) -
                log_gamma(2.0 * d.lambda + static_cast<double>(n) + 1.0));
}

double y_of_p(const DerivedParams& d, double p) { return 2.0 * d.a_script * (1.0 - p / d.p_max); }

double p_of_y(const DerivedParams& d, double y) { return d.p_max * (1.0 - y / (2.0 * d.a_script)); }

double jacobian_dp_dy(const Model& model) {
  if (!model.derived) throw std::invalid_argument("jacobian_dp_dy: requires k > 0");
  return model.derived->p_max / (2.0 * model.derived->a_script);
}

namespace {

// ln N_n + λ ln 2λ − λ with the ln Γ(2λ + n + 1) and λ ln 2λ pieces cancelled
// analytically through the Stirling remainder of Γ(2λ).
double log_envelope_constant(const Model& model, unsigned n) {
  const auto& d = *model.derived;
  const double two_lambda = 2.0 * d.lambda;
  double rising = 0.0;  // ln[(2λ)(2λ+1)…(2λ+n)]
  for (unsigned j = 0; j <= n; ++j) rising += std::log(two_lambda + static_cast<double>(j));
  return 0.5 * (0.5 * std::log(d.a_script / model.phys.hbar_omega()) + std::numbers::ln2 + log_factorial(n) -
                rising) +
         0.25 * std::log(two_lambda) - 0.25 * std::log(2.0 * std::numbers::pi) -
         0.5 * specfun::log_gamma_stirling_remainder(two_lambda);
}

// N_n y^λ e^{−y/2} L_n^{2λ}(y) with y = 2λ(1 + u):
//   λ ln y − y/2 = λ ln 2λ − λ + λ(ln(1 + u) − u).
double psi_y_with_constant(const DerivedParams& d, double log_constant, unsigned n, double y) {
  if (!(y >= 0.0)) throw DomainError("psi: y must be non-negative (p < 3w^2/k)");
  if (y == 0.0) return 0.0;
  const double lag = laguerre_assoc(n, 2.0 * d.lambda, y);
  if (lag == 0.0) return 0.0;
  const double two_lambda = 2.0 * d.lambda;
  const double u = (y - two_lambda) / two_lambda;
  const double shape = d.lambda * (std::log1p(u) - u);
  return signed_exp(log_constant + shape + std::log(std::abs(lag)), lag);
}

}  // namespace

double psi_y(const Model& model, unsigned n, double y) {
  if (!model.derived) throw std::invalid_argument("psi_y: requires k > 0");
  return psi_y_with_constant(*model.derived, log_envelope_constant(model, n), n, y);
}

double psi(const Model& model, unsigned n, double p) {
  if (model.harmonic()) return lho_psi(model.phys, n, p);
  require_in_domain(model.phys, p, "psi");
  return psi_y(model, n, y_of_p(*model.derived, p));
}

double lho_psi(const PhysicalParams& phys, unsigned n, double p) {
  phys.validate();
  const double hw = phys.hbar_omega();
  const double x = p / std::sqrt(hw);
  const double log_norm = -0.5 * (static_cast<double>(n) * std::numbers::ln2 + log_factorial(n) +
                                  0.5 * std::log(std::numbers::pi * hw));
  return std::exp(log_norm - 0.5 * x * x) * hermite(n, x);
}

Eigenstate::Eigenstate(const Model& m, unsigned level) : n(level), model(m), log_norm(norm_const_log(m, level)) {
  if (!std::isfinite(log_norm)) throw std::overflow_error("Eigenstate: normalization is not finite");
}

double GramMatrix::identity_defect() const {
  double worst = 0.0;
  for (unsigned i = 0; i < dim; ++i) {
    for (unsigned j = 0; j < dim; ++j) {
      worst = std::max(worst, std::abs((*this)(i, j) - (i == j ? 1.0 : 0.0)));
    }
  }
  return worst;
}

GramMatrix overlap_matrix(const Model& model, unsigned n_max) {
  if (n_max > 6) throw std::invalid_argument("overlap_matrix: n_max must not exceed 6");
  const unsigned dim = n_max + 1;
  specfun::QuadratureRule rule;
  double jac = 1.0;
  std::vector<std::vector<double>> values(dim);
  if (model.harmonic()) {
    const double half = 20.0 * std::sqrt(model.phys.hbar_omega());
    rule = specfun::composite_gauss_legendre(-half, half, 200, 12);
    for (unsigned n = 0; n < dim; ++n) {
      values[n].reserve(rule.nodes.size());
      for (const double p : rule.nodes) values[n].push_back(lho_psi(model.phys, n, p));
    }
  } else {
    const auto& d = *model.derived;
    const double y_max = specfun::laguerre_truncation(2.0 * d.lambda, n_max);
    rule = specfun::quadrature_nodes(y_max, static_cast<unsigned>(std::ceil(y_max / 2.0)), 12);
    jac = jacobian_dp_dy(model);
    for (unsigned n = 0; n < dim; ++n) {
      const double log_constant = log_envelope_constant(model, n);
      values[n].reserve(rule.nodes.size());
      for (const double y : rule.nodes) values[n].push_back(psi_y_with_constant(d, log_constant, n, y));
    }
  }
  GramMatrix g{dim, std::vector<double>(static_cast<std::size_t>(dim) * dim)};
  for (unsigned i = 0; i < dim; ++i) {
    for (unsigned j = i; j < dim; ++j) {
      double acc = 0.0;
      for (std::size_t q = 0; q < rule.nodes.size(); ++q) acc += rule.weights[q] * values[i][q] * values[j][q];
      g.entries[i * dim + j] = g.entries[j * dim + i] = jac * acc;
    }
  }
  return g;
}

std::size_t node_count(const Model& model, unsigned n) {
  constexpr std::size_t kSamples = 20000;
  std::vector<double> v;
  v.reserve(kSamples);
  if (model.harmonic()) {
    const double half = (std::sqrt(2.0 * n + 1.0) + 8.0) * std::sqrt(model.phys.hbar_omega());
    for (std::size_t i = 0; i < kSamples; ++i) {
      const double p = -half + 2.0 * half * static_cast<double>(i) / static_cast<double>(kSamples - 1);
      v.push_back(lho_psi(model.phys, n, p));
    }
  } else {
    const double y_max = specfun::laguerre_truncation(2.0 * model.derived->lambda, n);
    for (std::size_t i = 1; i <= kSamples; ++i) {
      v.push_back(psi_y(model, n, y_max * static_cast<double>(i) / static_cast<double>(kSamples)));
    }
  }
  double peak = 0.0;
  for (const double x : v) peak = std::max(peak, std::abs(x));
  std::size_t changes = 0;
  int last = 0;
  for (const double x : v) {
    if (std::abs(x) <= 1e-12 * peak) continue;
    const int s = x > 0.0 ? 1 : -1;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::vector<GammaAsymptoticRow> gamma_asymptotic_check(const std::vector<double>& a_script_values,
                                                       unsigned n_max) {
  std::vector<GammaAsymptoticRow> rows;
  for (const double a : a_script_values) {
    if (!(a >= 10.0)) throw std::invalid_argument("gamma_asymptotic_check: values must be >= 10");
    const double two_a = 2.0 * a;
    for (unsigned n = 0; n <= n_max; ++n) {
      GammaAsymptoticRow r;
      r.a_script = a;
      r.n = n;
      const double lg = log_gamma(two_a + static_cast<double>(n) + 1.0);
      r.log_exact = -lg;
      r.log_asymptotic = -(static_cast<double>(n) + 1.0) * std::log(two_a) + 0.5 * std::log(a / std::numbers::pi) -
                         two_a * std::log(two_a) + two_a;
      const double diff = r.log_asymptotic - r.log_exact;
      r.relative_error = std::abs(std::expm1(diff));
      r.log_relative_error = std::abs(diff) / std::abs(lg);
      rows.push_back(r);
    }
  }
  return rows;
}

std::vector<HermiteLimitRow> laguerre_hermite_limit(unsigned n, double x, const std::vector<double>& a_script_values) {
  if (n > 5) throw std::invalid_argument("laguerre_hermite_limit: n must not exceed 5");
  const double target = hermite(n, x) / std::exp(static_cast<double>(n) * std::numbers::ln2 + log_factorial(n));
  std::vector<HermiteLimitRow> rows;
  rows.reserve(a_script_values.size());
  for (const double a : a_script_values) {
    if (!(a > 0.0)) throw std::invalid_argument("laguerre_hermite_limit: a must be positive");
    const double s = std::sqrt(a);
    HermiteLimitRow r;
    r.a_script = a;
    r.scaled_laguerre = laguerre_assoc(n, 2.0 * a, 2.0 * a - 2.0 * s * x) / std::pow(2.0 * s, n);
    r.hermite_target = target;
    r.deviation = std::abs(r.scaled_laguerre - target);
    rows.push_back(r);
  }
  return rows;
}

std::vector<LimitRow> limit_deviation(unsigned n, const std::vector<double>& k_values, const Model& base,
                                      std::size_t samples) {
  if (n > 3) throw std::invalid_argument("limit_deviation: n must not exceed 3");
  if (samples < 2) throw std::invalid_argument("limit_deviation: need at least two samples");
  for (std::size_t i = 0; i < k_values.size(); ++i) {
    if (!(k_values[i] > 0.0)) throw std::invalid_argument("limit_deviation: k values must be positive");
    if (i > 0 && !(k_values[i] < k_values[i - 1])) {
      throw std::invalid_argument("limit_deviation: k values must be decreasing");
    }
  }
  const double half = 4.0 * std::sqrt(base.phys.hbar_omega());
  std::vector<LimitRow> rows;
  rows.reserve(k_values.size());
  for (const double k : k_values) {
    PhysicalParams phys = base.phys;
    phys.k = k;
    const auto model = Model::make(phys, base.amb);
    if (!(half < model.derived->p_max)) {
      throw std::invalid_argument("limit_deviation: sample window exceeds the momentum domain");
    }
    const auto& d = *model.derived;
    const double log_constant = log_envelope_constant(model, n);
    double worst = 0.0;
    for (std::size_t i = 0; i < samples; ++i) {
      const double p = -half + 2.0 * half * static_cast<double>(i) / static_cast<double>(samples - 1);
      const double deformed = psi_y_with_constant(d, log_constant, n, y_of_p(d, p));
      worst = std::max(worst, std::abs(deformed - lho_psi(phys, n, p)));
    }
    rows.push_back({k, d.a_script, worst});
  }
  return rows;
}

}  // namespace lienard::wavefn
