#pragma once

#include <vector>

#include "lienard/params.hpp"

namespace lienard::wavefn {

/// ln N_n. For k > 0: ½[½ ln(𝖺/ħω) + ln 2 + ln n! − ln Γ(2λ + n + 1)];
/// on the harmonic branch the Hermite-function constant.
double norm_const_log(const Model& model, unsigned n);

/// y = 2𝖺(1 − p/√(𝖺ħω)). Requires k > 0.
double y_of_p(const DerivedParams& d, double p);
double p_of_y(const DerivedParams& d, double y);

/// |dp/dy| = √(𝖺ħω)/(2𝖺).
double jacobian_dp_dy(const Model& model);

/// ψ_n as a function of y; envelope assembled in log space.
double psi_y(const Model& model, unsigned n, double y);

/// Normalized ψ_n(p). Harmonic branch dispatches to lho_psi. Throws
/// DomainError for p ≥ 3ω²/k.
double psi(const Model& model, unsigned n, double p);

/// Harmonic-oscillator eigenfunction (2ⁿn!√(πħω))^{−1/2} e^{−p²/2ħω} H_n(p/√ħω).
double lho_psi(const PhysicalParams& phys, unsigned n, double p);

struct Eigenstate {
  unsigned n = 0;
  Model model;
  double log_norm = 0.0;

  Eigenstate(const Model& m, unsigned level);
  double operator()(double p) const { return psi(model, n, p); }
};

/// Gram matrix ⟨ψ_m, ψ_n⟩, m, n ≤ n_max ≤ 6, by composite Gauss–Legendre in
/// y (in p on the harmonic branch). Row-major (n_max+1)².
struct GramMatrix {
  unsigned dim = 0;
  std::vector<double> entries;

  double operator()(unsigned i, unsigned j) const { return entries[i * dim + j]; }
  double identity_defect() const;
};

GramMatrix overlap_matrix(const Model& model, unsigned n_max);

/// Number of sign changes of ψ_n on a fine window covering its support.
std::size_t node_count(const Model& model, unsigned n);

struct GammaAsymptoticRow {
  double a_script = 0.0;
  unsigned n = 0;
  double log_exact = 0.0;         // −ln Γ(2𝖺 + n + 1)
  double log_asymptotic = 0.0;    // ln of the Stirling-form right side
  double relative_error = 0.0;    // |approx/exact − 1|
  double log_relative_error = 0.0;  // |Δ ln| / |ln Γ(2𝖺 + n + 1)|
};

/// Compares 1/Γ(2𝖺+n+1) ≈ (2𝖺)^{−(n+1)}(𝖺/π)^{1/2}(2𝖺)^{−2𝖺}e^{2𝖺} against
/// log_gamma, n = 0..n_max. Values of 𝖺 must be ≥ 10.
std::vector<GammaAsymptoticRow> gamma_asymptotic_check(const std::vector<double>& a_script_values,
                                                       unsigned n_max = 3);

struct HermiteLimitRow {
  double a_script = 0.0;
  double scaled_laguerre = 0.0;  // (2√𝖺)^{−n} L_n^{2𝖺}(2𝖺 − 2√𝖺 x)
  double hermite_target = 0.0;   // H_n(x)/(2ⁿ n!)
  double deviation = 0.0;
};

std::vector<HermiteLimitRow> laguerre_hermite_limit(unsigned n, double x,
                                                    const std::vector<double>& a_script_values);

struct LimitRow {
  double k = 0.0;
  double a_script = 0.0;
  double deviation = 0.0;  // sup over |p| ≤ 4√ħω of |ψ_n − ψ_n^lho|
};

/// Sup-norm distance between the deformed and harmonic eigenfunctions along
/// a decreasing k sequence. `base` supplies ω, ħ and the ambiguity exponents.
/// Throws std::overflow_error if a log-space exponent leaves double range.
std::vector<LimitRow> limit_deviation(unsigned n, const std::vector<double>& k_values, const Model& base,
                                      std::size_t samples = 801);

}  // namespace lienard::wavefn
