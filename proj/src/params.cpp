#include "lienard/params.hpp"

#include <cmath>
#include <cstdio>

namespace lienard {

void PhysicalParams::validate() const {
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw std::invalid_argument("omega must be positive and finite");
  }
  if (!(hbar > 0.0) || !std::isfinite(hbar)) {
    throw std::invalid_argument("hbar must be positive and finite");
  }
  if (!(k >= 0.0) || !std::isfinite(k)) {
    throw std::invalid_argument("k must be non-negative and finite");
  }
}

DerivedParams derive_params(const PhysicalParams& phys, const AmbiguityParams& amb) {
  phys.validate();
  if (phys.k == 0.0) {
    throw std::invalid_argument("derive_params: k = 0 has no deformed parameters, use the harmonic branch");
  }
  const double w = phys.omega;
  const double k = phys.k;
  DerivedParams d;
  d.a_script = 9.0 * w * w * w / (phys.hbar * k * k);
  const double ag = amb.product();
  const double disc = d.a_script * d.a_script + ag;
  if (!(disc > 0.0)) {
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "ambiguity constraint violated: alpha*gamma = %.17g must exceed -a^2 = %.17g", ag,
                  -d.a_script * d.a_script);
    throw ConstraintError(buf);
  }
  d.lambda = std::sqrt(disc);
  // λ − 𝖺 = αγ/(λ + 𝖺) avoids cancellation when αγ ≪ 𝖺².
  d.shift = ag / (d.lambda + d.a_script);
  d.a_coef = 1.0 / std::sqrt(2.0);
  d.b_coef = phys.hbar * k / (3.0 * std::sqrt(2.0) * w) * d.shift;
  d.p_max = 3.0 * w * w / k;
  return d;
}

std::optional<double> momentum_domain(const PhysicalParams& phys) {
  if (phys.k == 0.0) return std::nullopt;
  return 3.0 * phys.omega * phys.omega / phys.k;
}

void require_in_domain(const PhysicalParams& phys, double p, const char* who) {
  if (!std::isfinite(p)) {
    throw DomainError(std::string(who) + ": momentum is not finite");
  }
  if (const auto pmax = momentum_domain(phys); pmax && !(p < *pmax)) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s: p = %.17g outside domain p < 3w^2/k = %.17g", who, p, *pmax);
    throw DomainError(buf);
  }
}

Model Model::make(const PhysicalParams& phys, const AmbiguityParams& amb) {
  phys.validate();
  Model m{phys, amb, std::nullopt};
  if (!phys.harmonic()) m.derived = derive_params(phys, amb);
  return m;
}

std::string describe(const PhysicalParams& phys, const AmbiguityParams& amb) {
  char buf[200];
  std::snprintf(buf, sizeof buf, "omega=%.17g k=%.17g hbar=%.17g alpha=%.17g gamma=%.17g", phys.omega,
                phys.k, phys.hbar, amb.alpha, amb.gamma);
  return buf;
}

}  // namespace lienard
