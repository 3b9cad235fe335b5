#pragma once

#include <functional>
#include <vector>

#include "lienard/params.hpp"
#include "lienard/tridiagonal.hpp"

namespace lienard {

/// Uniform momentum grid p_i = p0 + i·h, i = 0..count−1.
class MomentumGrid {
 public:
  static constexpr std::size_t kMinPoints = 17;

  MomentumGrid(double p0, double h, std::size_t count);

  /// Points p_max − j·h, j = M..1, with M chosen so the first point is ≤ p_lo.
  /// On the harmonic branch (no p_max) the grid is symmetric, [−|p_lo|, |p_lo|].
  static MomentumGrid spanning(const PhysicalParams& phys, double p_lo, double h);

  double operator[](std::size_t i) const { return p0_ + h_ * static_cast<double>(i); }
  double spacing() const { return h_; }
  double front() const { return p0_; }
  double back() const { return (*this)[count_ - 1]; }
  std::size_t size() const { return count_; }
  std::vector<double> points() const;

  /// Throws DomainError when the last point is not strictly inside p < 3ω²/k.
  void validate_for(const PhysicalParams& phys) const;

  bool operator==(const MomentumGrid&) const = default;

 private:
  double p0_;
  double h_;
  std::size_t count_;
};

struct SampledFunction {
  MomentumGrid grid;
  std::vector<double> values;

  static SampledFunction sample(const MomentumGrid& grid, const std::function<double(double)>& f);
  double sup_norm() const;
};

namespace quantize {

struct MassProfile {
  double m = 0.0;
  double dm = 0.0;
  double d2m = 0.0;
};

/// m(p) = 1/(ω²(1 − kp/3ω²)) with analytic first and second derivatives.
MassProfile mass(const PhysicalParams& phys, double p);

/// U(p) = p²/(2(1 − kp/3ω²)).
double potential_U(const PhysicalParams& phys, double p);

/// Generic von Roos effective potential for an arbitrary mass profile.
double von_roos_potential(const MassProfile& mp, double U, const AmbiguityParams& amb, double hbar);

/// Closed form V(p) = [p² + αγ(ħk/3ω)²] / (2(1 − kp/3ω²)).
double effective_potential(const PhysicalParams& phys, const AmbiguityParams& amb, double p);

/// Flux-form discretization of −(ħ²ω²/2) d/dp[(1 − q) d/dp] + V(p) on the
/// grid, with Dirichlet ghosts beyond both ends.
SymmetricTridiagonal hamiltonian_matrix(const PhysicalParams& phys, const AmbiguityParams& amb,
                                        const MomentumGrid& grid);

/// Hψ on every grid point. Requires |ψ| at both ends below
/// `end_tolerance`·‖ψ‖_∞.
SampledFunction apply_hamiltonian_fd(const PhysicalParams& phys, const AmbiguityParams& amb,
                                     const MomentumGrid& grid, const SampledFunction& samples,
                                     double end_tolerance = 1e-6);

}  // namespace quantize
}  // namespace lienard
