#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace lienard {

/// Raised when ambiguity parameters or phase-space variables leave the
/// admissible region (αγ > −𝖺², phase constraint on (x, ẋ)).
class ConstraintError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an evaluator is called outside its domain, e.g. p ≥ 3ω²/k.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct PhysicalParams {
  double k = 1.0;      // deformation strength, k ≥ 0
  double omega = 1.0;  // angular frequency, ω > 0
  double hbar = 1.0;

  /// Throws std::invalid_argument when ω ≤ 0, ħ ≤ 0 or k < 0.
  void validate() const;
  bool harmonic() const { return k == 0.0; }
  double hbar_omega() const { return hbar * omega; }
};

/// von Roos exponents; β = −1 − α − γ is implied.
struct AmbiguityParams {
  double alpha = 0.0;
  double gamma = 0.0;

  double product() const { return alpha * gamma; }
  double beta() const { return -1.0 - alpha - gamma; }
};

struct DerivedParams {
  double a_script = 0.0;  // 9ω³/(ħk²)
  double lambda = 0.0;    // √(𝖺² + αγ)
  double shift = 0.0;     // λ − 𝖺
  double b_coef = 0.0;    // superpotential offset
  double a_coef = 0.0;    // superpotential slope, 1/√2
  double p_max = 0.0;     // 3ω²/k

  bool operator==(const DerivedParams&) const = default;
};

/// Computes the dimensionless scale, λ and the superpotential coefficients.
/// Requires k > 0 and rejects αγ ≤ −𝖺² with ConstraintError.
DerivedParams derive_params(const PhysicalParams& phys, const AmbiguityParams& amb);

/// Upper bound 3ω²/k of the momentum domain; std::nullopt (unbounded) at k = 0.
std::optional<double> momentum_domain(const PhysicalParams& phys);

/// Throws DomainError when p is not strictly below the momentum bound.
void require_in_domain(const PhysicalParams& phys, double p, const char* who);

/// Full parameter set with the k = 0 dispatch resolved once: `derived` is
/// empty on the harmonic branch.
struct Model {
  PhysicalParams phys;
  AmbiguityParams amb;
  std::optional<DerivedParams> derived;

  static Model make(const PhysicalParams& phys, const AmbiguityParams& amb = {});
  bool harmonic() const { return !derived.has_value(); }
  /// λ − 𝖺, zero on the harmonic branch.
  double shift() const { return derived ? derived->shift : 0.0; }
};

std::string describe(const PhysicalParams& phys, const AmbiguityParams& amb);

}  // namespace lienard
