#include "lienard/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "lienard/classical.hpp"
#include "lienard/eigensolver.hpp"
#include "lienard/specfun.hpp"
#include "lienard/susy.hpp"
#include "lienard/wavefn.hpp"

namespace lienard::verify {

using report::at_least;
using report::at_most;
using report::equal;
using report::ReportRecord;
using report::within;

namespace {

std::string tag(const std::string& base, unsigned n) { return base + "[n=" + std::to_string(n) + "]"; }

// Count of steps where a sequence fails to decrease strictly.
double non_decreasing_steps(const std::vector<double>& v) {
  double bad = 0.0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (!(v[i] < v[i - 1])) bad += 1.0;
  }
  return bad;
}

double trajectory_error(const PhysicalParams& phys, double amplitude, double step) {
  const double period = 2.0 * std::numbers::pi / phys.omega;
  const auto traj = classical::integrate_lienard(phys, classical::analytic_state(phys, amplitude, 0.0, 0.0),
                                                 period, step);
  double worst = 0.0;
  for (std::size_t i = 0; i < traj.size(); ++i) {
    worst = std::max(worst,
                     std::abs(traj.positions[i] - classical::analytic_solution(phys, amplitude, 0.0, traj.times[i])));
  }
  return worst;
}

double eigen_residual(const Model& model, unsigned n, double h, unsigned n_grid) {
  const auto grid = check_grid(model, n_grid, h);
  const auto s = SampledFunction::sample(grid, [&](double p) { return wavefn::psi(model, n, p); });
  const auto hs = quantize::apply_hamiltonian_fd(model.phys, model.amb, grid, s);
  const double e = susy::spectrum(model, n).levels[n].energy;
  double worst = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) worst = std::max(worst, std::abs(hs.values[i] - e * s.values[i]));
  return worst / s.sup_norm();
}

double dot(const std::vector<double>& a, const std::vector<double>& b, double h) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc * h;
}

}  // namespace

double decay_bound(const DerivedParams& d, unsigned n) { return specfun::laguerre_truncation(2.0 * d.lambda, n); }

MomentumGrid check_grid(const Model& model, unsigned n_max, double h) {
  const double n = static_cast<double>(n_max);
  if (model.harmonic()) {
    return MomentumGrid::spanning(model.phys, -(std::sqrt(2.0 * n + 1.0) + 12.0) * std::sqrt(model.phys.hbar_omega()), h);
  }
  const auto& d = *model.derived;
  return MomentumGrid::spanning(model.phys, wavefn::p_of_y(d, decay_bound(d, n_max)), h);
}

std::vector<ReportRecord> classical_checks(const Options& opt) {
  const auto& phys = opt.phys;
  const std::string params = describe(opt.phys, opt.amb);
  std::vector<ReportRecord> out;
  const double amplitude = phys.k > 0.0 ? std::min(1.0, 1.5 * phys.omega / phys.k) : 1.0;

  out.push_back(at_most("classical.rk4_vs_closed_form", params, trajectory_error(phys, amplitude, 1e-3), 1e-6));

  const double coarse = trajectory_error(phys, amplitude, 1e-2);
  const double fine = trajectory_error(phys, amplitude, 5e-3);
  const double ratio = coarse / fine;
  out.push_back(at_least("classical.rk4_order_ratio_min", params, ratio, 8.0));
  out.push_back(at_most("classical.rk4_order_ratio_max", params, ratio, 32.0));

  const auto traj = classical::integrate_lienard(
      phys, classical::analytic_state(phys, amplitude, 0.0, 0.0), 2.0 * std::numbers::pi / phys.omega, 1e-3);
  const double e0 = classical::energy(phys, {traj.positions[0], traj.velocities[0]});
  double drift = 0.0;
  for (std::size_t i = 0; i < traj.size(); ++i) {
    drift = std::max(drift, std::abs(classical::energy(phys, {traj.positions[i], traj.velocities[i]}) - e0));
  }
  out.push_back(at_most("classical.energy_relative_drift", params, drift / std::abs(e0), 1e-8));

  double legendre = 0.0;
  for (int i = 0; i <= 40; ++i) {
    for (int j = 0; j <= 40; ++j) {
      const classical::OscillatorState s{-2.0 + 0.1 * i, -2.0 + 0.1 * j};
      if (phys.k > 0.0 && !(classical::phase_constraint(phys, s) > 0.05)) continue;
      const double p = classical::conjugate_momentum(phys, s);
      const double h = classical::hamiltonian_classical(phys, s.x, p);
      const double l = classical::lagrangian(phys, s);
      legendre = std::max(legendre, std::abs(h - (p * s.v - l)) / std::max(1.0, std::abs(h)));
    }
  }
  out.push_back(at_most("classical.legendre_identity", params, legendre, 1e-12));

  if (phys.k > 0.0) {
    const auto roots = classical::jlm_sigma_roots(phys);
    out.push_back(within("classical.jlm_root_low", params, roots[0], 1.0 / 3.0, 1e-12));
    out.push_back(within("classical.jlm_root_high", params, roots[1], 2.0 / 3.0, 1e-12));
    std::vector<double> xs;
    for (int i = -50; i <= 50; ++i) {
      if (i != 0) xs.push_back(0.1 * i);
    }
    out.push_back(at_most("classical.jlm_residual_sigma_2_3", params, classical::jlm_residual(phys, 2.0 / 3.0, xs),
                          1e-12));
  }
  return out;
}

std::vector<ReportRecord> quantize_checks(const Options& opt) {
  const auto model = Model::make(opt.phys, opt.amb);
  const std::string params = describe(opt.phys, opt.amb);
  std::vector<ReportRecord> out;
  const auto grid = check_grid(model, opt.n_max, opt.h_p);

  // Golden-ratio lattice: 10^3 well-spread points over the grid span.
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double frac = std::fmod(0.5 + i * 0.6180339887498949, 1.0);
    const double p = grid.front() + frac * (grid.back() - grid.front());
    const double closed = quantize::effective_potential(opt.phys, opt.amb, p);
    const double generic = quantize::von_roos_potential(quantize::mass(opt.phys, p),
                                                        quantize::potential_U(opt.phys, p), opt.amb, opt.phys.hbar);
    worst = std::max(worst, std::abs(closed - generic) / std::max(std::abs(closed), 1e-300));
  }
  out.push_back(at_most("quantize.closed_vs_generic_potential", params, worst, 1e-12));

  // Factorizations with the same product: swapped, and rescaled by 2.
  const AmbiguityParams swapped{opt.amb.gamma, opt.amb.alpha};
  const AmbiguityParams scaled{2.0 * opt.amb.alpha, 0.5 * opt.amb.gamma};
  const auto s = SampledFunction::sample(grid, [&](double p) { return wavefn::psi(model, 0, p); });
  const auto h_ref = quantize::apply_hamiltonian_fd(opt.phys, opt.amb, grid, s).values;
  double mismatches = 0.0;
  for (const auto& alt : {swapped, scaled}) {
    const auto h_alt = quantize::apply_hamiltonian_fd(opt.phys, alt, grid, s).values;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      if (h_alt[i] != h_ref[i]) mismatches += 1.0;
      if (quantize::effective_potential(opt.phys, alt, grid[i]) !=
          quantize::effective_potential(opt.phys, opt.amb, grid[i])) {
        mismatches += 1.0;
      }
    }
  }
  out.push_back(equal("quantize.depends_only_on_alpha_gamma", params, mismatches, 0.0));

  // ⟨u, Hv⟩ = ⟨Hu, v⟩ for states vanishing at the ends.
  std::vector<double> u(grid.size()), v(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(grid.size() - 1);
    const double bump = std::sin(std::numbers::pi * t);
    u[i] = bump * std::cos(7.0 * t);
    v[i] = bump * bump * std::sin(3.0 * t + 0.2);
  }
  const auto op = quantize::hamiltonian_matrix(opt.phys, opt.amb, grid);
  const auto hu = op.apply(u);
  const auto hv = op.apply(v);
  const double lhs = dot(u, hv, 1.0);
  const double rhs = dot(hu, v, 1.0);
  out.push_back(at_most("quantize.discrete_hermiticity", params, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)),
                        1e-12));

  auto sup_dev = [&](double k) {
    PhysicalParams ph = opt.phys;
    ph.k = k;
    double m = 0.0;
    for (int i = 0; i <= 1000; ++i) {
      const double p = -5.0 + 0.01 * i;
      m = std::max(m, std::abs(quantize::effective_potential(ph, opt.amb, p) - 0.5 * p * p));
    }
    return m;
  };
  const double lim_ratio = sup_dev(1e-3) / sup_dev(1e-4);
  out.push_back(at_least("quantize.harmonic_limit_order_k_min", params, lim_ratio, 5.0));
  out.push_back(at_most("quantize.harmonic_limit_order_k_max", params, lim_ratio, 20.0));
  return out;
}

std::vector<ReportRecord> susy_checks(const Options& opt) {
  const auto model = Model::make(opt.phys, opt.amb);
  const std::string params = describe(opt.phys, opt.amb);
  const double hw = opt.phys.hbar_omega();
  std::vector<ReportRecord> out;
  const auto grid = check_grid(model, opt.n_max, opt.h_p);
  const MomentumGrid coarse(grid.front(), (grid.back() - grid.front()) / 999.0, 1000);
  const auto sp = susy::Superpotential::fitted(model);

  // Relative to the largest |V| on the grid: far from p_max the terms reach
  // 1e3 and up, where 1e-10 absolute is below round-off.
  double v_scale = 1.0;
  for (std::size_t i = 0; i < coarse.size(); ++i) {
    v_scale = std::max(v_scale, std::abs(quantize::effective_potential(opt.phys, opt.amb, coarse[i])));
  }
  out.push_back(at_most("susy.riccati_residual_relative", params, susy::riccati_residual(model, coarse) / v_scale,
                        1e-10));

  double partner = 0.0;
  for (std::size_t i = 0; i < coarse.size(); ++i) {
    const auto a = susy::partner_potentials(sp, coarse[i]);
    const auto b = susy::partner_potentials_defining(sp, coarse[i]);
    partner = std::max({partner, std::abs(a.v_minus - b.v_minus) / std::max(1.0, std::abs(a.v_minus)),
                        std::abs(a.v_plus - b.v_plus) / std::max(1.0, std::abs(a.v_plus))});
  }
  out.push_back(at_most("susy.partner_compact_vs_defining", params, partner, 1e-10));

  const auto rem = susy::shape_invariance_remainder(model, coarse);
  // remainder is a difference of O(max|V|) terms; round-off grows with that scale
  out.push_back(within("susy.shape_invariance_mean", params, rem.mean, hw, 1e-12 * std::max(v_scale, hw)));
  out.push_back(at_most("susy.shape_invariance_stddev", params, rem.stddev, 1e-12 * v_scale));

  const unsigned levels = std::max(opt.n_max, 1u);
  const auto table = susy::spectrum(model, levels);
  const auto chain = susy::spectrum_from_remainders(model, levels);
  double chain_gap = 0.0;
  double spacing = 0.0;
  double negative = 0.0;
  for (unsigned n = 0; n <= levels; ++n) {
    chain_gap = std::max(chain_gap, std::abs(chain[n] - table.levels[n].energy) / std::max(1.0, std::abs(chain[n])));
    if (n > 0) spacing = std::max(spacing, std::abs(table.levels[n].energy - table.levels[n - 1].energy - hw));
    if (table.levels[n].energy - table.levels[0].energy < 0.0) negative += 1.0;
  }
  out.push_back(at_most("susy.spectrum_vs_remainder_sum", params, chain_gap, 1e-14));
  out.push_back(at_most("susy.level_spacing", params, spacing, 1e-12 * std::max(1.0, hw)));
  out.push_back(equal("susy.semi_positivity_violations", params, negative, 0.0));

  const double h = grid.spacing();
  auto sampled = [&](unsigned n) {
    return SampledFunction::sample(grid, [&](double p) { return wavefn::psi(model, n, p); });
  };
  const auto psi0 = sampled(0);
  const auto psi1 = sampled(1);
  out.push_back(at_most("susy.ground_state_annihilation", params, susy::apply_lowering(sp, psi0).sup_norm(), 1e-5));

  const auto aa = susy::apply_raising(sp, susy::apply_lowering(sp, psi1));
  const double gap = table.levels[1].energy - table.levels[0].energy;
  double aa_res = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) aa_res = std::max(aa_res, std::abs(aa.values[i] - gap * psi1.values[i]));
  out.push_back(at_most("susy.factorized_eigenrelation_n1", params, aa_res, 1e-5));

  const auto partner_sp = sp.shifted();
  const auto partner_ground =
      SampledFunction::sample(grid, [&](double p) { return susy::ground_state_closed_form(partner_sp, p); });
  const auto built = susy::apply_raising(sp, partner_ground);
  const double cosine = dot(built.values, psi1.values, h) /
                        std::sqrt(dot(built.values, built.values, h) * dot(psi1.values, psi1.values, h));
  out.push_back(at_least("susy.recurrence_cosine_similarity", params, cosine, 1.0 - 1e-6));

  for (unsigned n = 0; n <= std::min(opt.n_max, 3u); ++n) {
    const auto s = sampled(n);
    const auto a = susy::apply_lowering(sp, s);
    const double ratio = dot(a.values, a.values, h) / dot(s.values, s.values, h);
    out.push_back(within(tag("susy.norm_of_lowered_state", n), params, ratio,
                         table.levels[n].energy - table.levels[0].energy, 1e-5));
  }

  if (!model.harmonic() && model.derived->lambda < 600.0) {
    out.push_back(within("susy.ground_state_exponent", params, susy::ground_state_exponent(sp),
                         model.derived->lambda, 1e-12 * model.derived->lambda));
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    const double floor = 1e-6 * psi0.sup_norm();
    for (std::size_t i = 0; i < grid.size(); i += 7) {
      if (std::abs(psi0.values[i]) < floor) continue;
      const double r = susy::ground_state_closed_form(model, grid[i]) / psi0.values[i];
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    out.push_back(at_most("susy.ground_state_closed_form_ratio_spread", params, (hi - lo) / hi, 1e-10));
  }
  return out;
}

std::vector<ReportRecord> eigensolver_checks(const Options& opt) {
  const auto model = Model::make(opt.phys, opt.amb);
  const std::string params = describe(opt.phys, opt.amb);
  const double hw = opt.phys.hbar_omega();
  std::vector<ReportRecord> out;
  const unsigned top = std::min(std::max(opt.n_max, 1u), 5u);

  // Momentum-space matrix works on both branches.
  const auto grid = check_grid(model, top, opt.h_p);
  const auto pvals = eigensolver::lowest_eigenvalues(quantize::hamiltonian_matrix(opt.phys, opt.amb, grid), top + 1);
  const auto table = susy::spectrum(model, top);
  for (unsigned n = 0; n <= top; ++n) {
    out.push_back(within(tag("eigensolver.p_space_level", n), params, pvals[n], table.levels[n].energy,
                         opt.eigen_tolerance));
  }
  if (model.harmonic()) return out;

  const double y_max = opt.y_max.value_or(eigensolver::recommended_y_max(model.derived->lambda, top));
  const eigensolver::YGrid ygrid(y_max, opt.y_points);
  const auto rows = eigensolver::verify_spectrum(model, top, ygrid);
  for (const auto& r : rows) {
    out.push_back(within(tag("eigensolver.y_space_level", r.n), params, r.numeric, r.analytic, opt.eigen_tolerance));
    out.push_back(at_least(tag("eigensolver.convergence_ratio_min", r.n), params, r.convergence_ratio, 3.0));
    out.push_back(at_most(tag("eigensolver.convergence_ratio_max", r.n), params, r.convergence_ratio, 5.0));
    if (r.n > 0) {
      out.push_back(within(tag("eigensolver.level_spacing", r.n), params, r.numeric - rows[r.n - 1].numeric, hw,
                           opt.eigen_tolerance));
    }
  }
  const auto op = eigensolver::build_operator(model, ygrid);
  const double mid = 0.5 * (rows[0].numeric + rows[1].numeric);
  out.push_back(equal("eigensolver.sturm_count_between_levels_0_1", params,
                      static_cast<double>(eigensolver::sturm_count(op.matrix, mid)), 1.0));
  for (unsigned n = 0; n <= std::min(top, 3u); ++n) {
    const auto vec = eigensolver::eigenvector(op.matrix, rows[n].numeric);
    out.push_back(equal(tag("eigensolver.eigenvector_sign_changes", n), params,
                        static_cast<double>(eigensolver::sign_changes(vec)), static_cast<double>(n)));
  }
  return out;
}

std::vector<ReportRecord> wavefn_checks(const Options& opt) {
  const auto model = Model::make(opt.phys, opt.amb);
  const std::string params = describe(opt.phys, opt.amb);
  std::vector<ReportRecord> out;
  const unsigned top = std::min(opt.n_max, 4u);

  out.push_back(at_most("wavefn.gram_identity_defect", params, wavefn::overlap_matrix(model, top).identity_defect(),
                        1e-8));
  for (unsigned n = 0; n <= top; ++n) {
    // Order measured from 2h to h: below h the residual approaches the
    // round-off floor of the 1/h² stencil.
    const double r_coarse = eigen_residual(model, n, 2.0 * opt.h_p, top);
    const double r = eigen_residual(model, n, opt.h_p, top);
    out.push_back(at_most(tag("wavefn.eigenrelation_residual", n), params, r, 1e-5));
    out.push_back(at_least(tag("wavefn.eigenrelation_order_ratio_min", n), params, r_coarse / r, 3.0));
    out.push_back(at_most(tag("wavefn.eigenrelation_order_ratio_max", n), params, r_coarse / r, 5.0));
    out.push_back(equal(tag("wavefn.node_count", n), params, static_cast<double>(wavefn::node_count(model, n)),
                        static_cast<double>(n)));
    if (!model.harmonic()) {
      const double y = decay_bound(*model.derived, n);
      out.push_back(at_most(tag("wavefn.boundary_decay", n), params, std::abs(wavefn::psi_y(model, n, y)), 1e-12));
    } else {
      out.push_back(equal(tag("wavefn.harmonic_dispatch", n), params, wavefn::psi(model, n, 0.3),
                          wavefn::lho_psi(opt.phys, n, 0.3)));
    }
  }
  return out;
}

std::vector<ReportRecord> limit_checks(const Options& opt) {
  PhysicalParams base_phys = opt.phys;
  base_phys.k = 0.0;
  const auto base = Model::make(base_phys, opt.amb);
  const std::string params = describe(base_phys, opt.amb);
  std::vector<ReportRecord> out;
  for (unsigned n : {0u, 1u}) {
    std::vector<double> dev;
    for (const auto& r : wavefn::limit_deviation(n, opt.k_sequence, base)) dev.push_back(r.deviation);
    out.push_back(equal(tag("limit.deviation_non_decreasing_steps", n), params, non_decreasing_steps(dev), 0.0));
  }
  for (unsigned n = 0; n <= 2; ++n) {
    std::vector<double> dev;
    for (const auto& r : wavefn::laguerre_hermite_limit(n, 1.0, {1e2, 1e4, 1e6})) dev.push_back(r.deviation);
    if (n == 0) {
      out.push_back(at_most(tag("limit.laguerre_hermite_deviation", n), params, dev.back(), 1e-12));
    } else {
      out.push_back(equal(tag("limit.laguerre_hermite_non_decreasing_steps", n), params, non_decreasing_steps(dev), 0.0));
    }
  }
  const auto gam = wavefn::gamma_asymptotic_check({10.0, 100.0, 1000.0}, 3);
  for (unsigned n = 0; n <= 3; ++n) {
    std::vector<double> err;
    for (const auto& r : gam) {
      if (r.n == n) err.push_back(r.relative_error);
    }
    out.push_back(equal(tag("limit.gamma_asymptotic_non_decreasing_steps", n), params, non_decreasing_steps(err), 0.0));
  }
  for (const auto& r : gam) {
    if (r.n == 0 && r.a_script == 1000.0) {
      out.push_back(at_most("limit.gamma_asymptotic_relative_error[a=1000]", params, r.relative_error, 1e-4));
    }
  }
  return out;
}

std::vector<ReportRecord> run_all(const Options& opt) {
  opt.phys.validate();
  Model::make(opt.phys, opt.amb);
  std::vector<ReportRecord> all;
  for (auto* suite : {&classical_checks, &quantize_checks, &susy_checks, &eigensolver_checks, &wavefn_checks,
                      &limit_checks}) {
    auto part = suite(opt);
    all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return all;
}

bool all_pass(const std::vector<ReportRecord>& records) {
  return std::all_of(records.begin(), records.end(), [](const ReportRecord& r) { return r.pass; });
}

}  // namespace lienard::verify
