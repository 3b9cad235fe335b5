#pragma once

#include <vector>

#include "lienard/params.hpp"
#include "lienard/quantize.hpp"

namespace lienard::susy {

/// W(p) = (a·p + b)/√(1 − kp/3ω²).
struct Superpotential {
  double a_coef = 0.0;
  double b_coef = 0.0;
  PhysicalParams phys;

  /// The fitted superpotential of a model (b = 0 on the harmonic branch).
  static Superpotential fitted(const Model& model);
  /// Same slope, offset moved by ħk/(6√2ω): the partner parameters b₂ = f(b₁).
  Superpotential shifted() const;
  /// Square-integrability of the ground state: a > 0 and b > −(3ω²/k)·a.
  bool normalizable() const;
};

double superpotential_eval(const Superpotential& sp, double p);
double superpotential_derivative(const Superpotential& sp, double p);

struct PartnerPair {
  double v_minus = 0.0;
  double v_plus = 0.0;
};

/// Compact forms (ap+b)²/(1−q) ∓ ħωa/√2 (with the b + ħk/6√2ω offset in V₊).
PartnerPair partner_potentials(const Superpotential& sp, double p);
PartnerPair partner_potentials(const Model& model, double p);

/// V∓ assembled from W, m and their analytic derivatives without using the
/// mass family's simplifications.
PartnerPair partner_potentials_defining(const Superpotential& sp, double p);

/// ε₀ = (1/2 + λ − 𝖺)ħω.
double ground_energy(const Model& model);

/// max |W² − (ħ/√2)(W/√m)′ − V + ε₀| over the grid.
double riccati_residual(const Superpotential& sp, const AmbiguityParams& amb, double eps0,
                        const MomentumGrid& grid);
double riccati_residual(const Model& model, const MomentumGrid& grid);

struct RemainderStats {
  double mean = 0.0;
  double stddev = 0.0;
};

/// Statistics of V₊(p; b₁) − V₋(p; b₂) over the grid.
RemainderStats shape_invariance_remainder(const Superpotential& first, const Superpotential& second,
                                          const MomentumGrid& grid);
RemainderStats shape_invariance_remainder(const Model& model, const MomentumGrid& grid);

/// R(a₁, b₁) = √2·a·ħω.
double remainder(const Superpotential& sp);

struct Level {
  unsigned n = 0;
  double energy = 0.0;
};

struct SpectrumTable {
  Model model;
  std::vector<Level> levels;
};

/// ε_n = (n + 1/2 + λ − 𝖺)ħω for n = 0..n_max.
SpectrumTable spectrum(const PhysicalParams& phys, const AmbiguityParams& amb, unsigned n_max);
SpectrumTable spectrum(const Model& model, unsigned n_max);

/// The same levels assembled as ε₀ + Σ R over the shape-invariant chain.
std::vector<double> spectrum_from_remainders(const Model& model, unsigned n_max);

/// A = (ħ/√2) m^{−1/2} d/dp + W with central differences and zero ghosts.
SampledFunction apply_lowering(const Superpotential& sp, const SampledFunction& samples);
/// A⁺ = −(ħ/√2) d/dp (m^{−1/2} ·) + W.
SampledFunction apply_raising(const Superpotential& sp, const SampledFunction& samples);

/// Exponent (3√2ω/ħk)(b + 3ω²a/k) of (1 − q) in the unnormalized ground state.
double ground_state_exponent(const Superpotential& sp);

/// Unnormalized ground state (1 − q)^E · exp(3√2ωa·p/(ħk)), evaluated as one
/// exponential. At k = 0 it is exp(−√2(ap²/2 + bp)/(ħω)).
double ground_state_closed_form(const Superpotential& sp, double p);
double ground_state_closed_form(const Model& model, double p);

}  // namespace lienard::susy
