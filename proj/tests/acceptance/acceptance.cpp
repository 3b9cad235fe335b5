// One PASS/FAIL line per acceptance criterion. `acceptance 3 7` runs a subset.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "lienard/classical.hpp"
#include "lienard/cli.hpp"
#include "lienard/eigensolver.hpp"
#include "lienard/quantize.hpp"
#include "lienard/susy.hpp"
#include "lienard/verify.hpp"
#include "lienard/wavefn.hpp"

using namespace lienard;

namespace {

struct Verdict {
  bool pass = true;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    pass = pass && ok;
    notes.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
  }
  void info(const std::string& what) { notes.push_back("info " + what); }
};

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::string fmt(const char* f, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

std::string fmt(const char* f, double a, double b, double c) {
  char buf[200];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

const PhysicalParams kUnit{1, 1, 1};

// Valid (k, ω, ħ) × (α, γ) sets used where a criterion asks for several.
struct ParamSet {
  PhysicalParams phys;
  AmbiguityParams amb;
};
const std::vector<ParamSet> kSets{
    {{1, 1, 1}, {0, 0}},       {{1, 1, 1}, {19, 1}},      {{0.8, 1.1, 1}, {-20, 3}},
    {{2, 0.8, 0.7}, {4, 0.5}}, {{0.8, 1, 1.2}, {-50, 1}},
};

MomentumGrid thousand_points(const Model& m) {
  const auto span = verify::check_grid(m, 4, 1e-3);
  return {span.front(), (span.back() - span.front()) / 999.0, 1000};
}

Verdict spectrum_oracle() {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  for (double ag : {0.0, 19.0}) {
    const auto model = Model::make(kUnit, {ag, 1});
    const auto rows = eigensolver::verify_spectrum(model, 3, eigensolver::YGrid(150.0, 6000));
    v.expect(std::abs(rows[0].numeric - (ag == 0 ? 0.5 : 1.5)) < 1e-5,
             fmt("alpha*gamma=%g: eps0 numeric %.10f", ag, rows[0].numeric));
    for (const auto& r : rows) {
      v.expect(r.abs_error < 1e-5, fmt("alpha*gamma=%g n=%g |delta|=%.3e < 1e-5", ag, r.n, r.abs_error));
      v.expect(r.convergence_ratio >= 3 && r.convergence_ratio <= 5,
               fmt("alpha*gamma=%g n=%g error ratio on h/2 = %.4f (band 3..5)", ag, r.n, r.convergence_ratio));
      v.info(fmt("alpha*gamma=%g n=%g Richardson (4*fine - coarse)/3 error %.2e", ag, r.n,
                 std::abs((4 * r.numeric_refined - r.numeric) / 3 - r.analytic)));
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  v.expect(secs < 30.0, fmt("runtime %.2f s < 30 s", secs));
  return v;
}

Verdict equidistance() {
  Verdict v;
  for (double ag : {0.0, 19.0}) {
    const auto rows = eigensolver::verify_spectrum(Model::make(kUnit, {ag, 1}), 3, eigensolver::YGrid(150.0, 6000));
    for (std::size_t n = 1; n < rows.size(); ++n) {
      const double gap = rows[n].numeric - rows[n - 1].numeric;
      v.expect(std::abs(gap - 1.0) < 1e-5, fmt("alpha*gamma=%g spacing %g: |gap - hbar*omega| = %.3e", ag,
                                               static_cast<double>(n), std::abs(gap - 1.0)));
    }
  }
  return v;
}

Verdict riccati() {
  Verdict v;
  for (const auto& s : kSets) {
    const auto model = Model::make(s.phys, s.amb);
    const double r = susy::riccati_residual(model, thousand_points(model));
    v.expect(r < 1e-10, describe(s.phys, s.amb) + fmt(": max residual %.3e", r));
  }
  return v;
}

Verdict shape_invariance() {
  Verdict v;
  for (const auto& s : kSets) {
    const auto model = Model::make(s.phys, s.amb);
    const auto st = susy::shape_invariance_remainder(model, thousand_points(model));
    const double hw = s.phys.hbar_omega();
    v.expect(std::abs(st.mean - hw) <= 1e-12 * hw && st.stddev < 1e-12,
             describe(s.phys, s.amb) + fmt(": mean %.15f (hbar*omega %g), stddev %.2e", st.mean, hw, st.stddev));
  }
  return v;
}

Verdict closed_form() {
  Verdict v;
  for (const auto& s : kSets) {
    const auto model = Model::make(s.phys, s.amb);
    const auto g = thousand_points(model);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const double p = g.front() + (g.back() - g.front()) * std::fmod(0.5 + 0.6180339887498949 * i, 1.0);
      const double closed = quantize::effective_potential(s.phys, s.amb, p);
      const double generic = quantize::von_roos_potential(quantize::mass(s.phys, p), quantize::potential_U(s.phys, p),
                                                          s.amb, s.phys.hbar);
      worst = std::max(worst, std::abs(closed - generic) / std::abs(closed));
    }
    v.expect(worst < 1e-12, describe(s.phys, s.amb) + fmt(": max relative gap %.2e", worst));

    const auto grid = verify::check_grid(model, 2, 1e-3);
    const auto psi = SampledFunction::sample(grid, [&](double p) { return wavefn::psi(model, 1, p); });
    const auto ref = quantize::apply_hamiltonian_fd(s.phys, s.amb, grid, psi).values;
    std::size_t mismatches = 0;
    for (const AmbiguityParams alt : {AmbiguityParams{s.amb.gamma, s.amb.alpha},
                                      AmbiguityParams{2 * s.amb.alpha, 0.5 * s.amb.gamma},
                                      AmbiguityParams{0.25 * s.amb.alpha, 4 * s.amb.gamma}}) {
      if (quantize::apply_hamiltonian_fd(s.phys, alt, grid, psi).values != ref) ++mismatches;
      if (!(derive_params(s.phys, alt) == derive_params(s.phys, s.amb))) ++mismatches;
      for (std::size_t i = 0; i < grid.size(); i += 11) {
        if (quantize::effective_potential(s.phys, alt, grid[i]) != quantize::effective_potential(s.phys, s.amb, grid[i]))
          ++mismatches;
      }
    }
    v.expect(mismatches == 0, describe(s.phys, s.amb) + fmt(": bitwise mismatches across factorizations %g",
                                                            static_cast<double>(mismatches)));
  }
  return v;
}

Verdict orthonormality() {
  Verdict v;
  for (const auto& s : {ParamSet{{1, 1, 1}, {0, 0}}, ParamSet{{1, 1, 1}, {19, 1}}, ParamSet{{1, 2, 1}, {0, 0}}}) {
    const double d = wavefn::overlap_matrix(Model::make(s.phys, s.amb), 4).identity_defect();
    v.expect(d < 1e-8, describe(s.phys, s.amb) + fmt(": max |G - I| = %.2e", d));
  }
  return v;
}

double eigen_residual(const Model& m, unsigned n, double h) {
  const auto g = verify::check_grid(m, 4, h);
  const auto s = SampledFunction::sample(g, [&](double p) { return wavefn::psi(m, n, p); });
  const auto hs = quantize::apply_hamiltonian_fd(m.phys, m.amb, g, s);
  const double e = susy::spectrum(m, n).levels[n].energy;
  double worst = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) worst = std::max(worst, std::abs(hs.values[i] - e * s.values[i]));
  return worst / s.sup_norm();
}

Verdict eigenrelation() {
  Verdict v;
  for (double ag : {0.0, 19.0}) {
    const auto m = Model::make(kUnit, {ag, 1});
    for (unsigned n = 0; n <= 4; ++n) {
      const double r = eigen_residual(m, n, 1e-3);
      const double ratio = r / eigen_residual(m, n, 5e-4);
      v.expect(r < 1e-5 && ratio >= 3 && ratio <= 5,
               fmt("alpha*gamma=%g n=%g: residual %.3e", ag, n, r) + fmt(", ratio on h/2 %.3f", ratio));
    }
  }
  return v;
}

Verdict annihilation() {
  Verdict v;
  for (double ag : {0.0, 19.0}) {
    const auto m = Model::make(kUnit, {ag, 1});
    const auto sp = susy::Superpotential::fitted(m);
    const auto g = verify::check_grid(m, 1, 1e-3);
    const auto psi0 = SampledFunction::sample(g, [&](double p) { return wavefn::psi(m, 0, p); });
    const auto psi1 = SampledFunction::sample(g, [&](double p) { return wavefn::psi(m, 1, p); });
    const double a0 = susy::apply_lowering(sp, psi0).sup_norm();
    v.expect(a0 < 1e-5, fmt("alpha*gamma=%g: |A psi0|_inf = %.3e", ag, a0));
    const auto partner = sp.shifted();
    const auto built = susy::apply_raising(
        sp, SampledFunction::sample(g, [&](double p) { return susy::ground_state_closed_form(partner, p); }));
    double ab = 0, aa = 0, bb = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      ab += built.values[i] * psi1.values[i];
      aa += built.values[i] * built.values[i];
      bb += psi1.values[i] * psi1.values[i];
    }
    const double cosine = ab / std::sqrt(aa * bb);
    v.expect(cosine > 1 - 1e-6, fmt("alpha*gamma=%g: 1 - cosine = %.3e", ag, 1 - cosine));
  }
  return v;
}

Verdict classical_oracle() {
  Verdict v;
  auto max_err = [](double step) {
    const auto traj = classical::integrate_lienard(kUnit, classical::analytic_state(kUnit, 1, 0, 0),
                                                   2 * std::numbers::pi, step);
    double worst = 0.0;
    for (std::size_t i = 0; i < traj.size(); ++i) {
      worst = std::max(worst, std::abs(traj.positions[i] - classical::analytic_solution(kUnit, 1, 0, traj.times[i])));
    }
    return worst;
  };
  const double e = max_err(1e-3);
  v.expect(e < 1e-6, fmt("max |x_rk4 - x_exact| at step 1e-3: %.3e", e));
  const double ratio = max_err(1e-2) / max_err(5e-3);
  v.expect(ratio >= 8 && ratio <= 32, fmt("error ratio on halving the step: %.3f (16 within factor 2)", ratio));

  const auto traj =
      classical::integrate_lienard(kUnit, classical::analytic_state(kUnit, 1, 0, 0), 2 * std::numbers::pi, 1e-3);
  const double e0 = classical::energy(kUnit, {traj.positions[0], traj.velocities[0]});
  double drift = 0.0;
  for (std::size_t i = 0; i < traj.size(); ++i) {
    drift = std::max(drift, std::abs(classical::energy(kUnit, {traj.positions[i], traj.velocities[i]}) - e0) / e0);
  }
  v.expect(drift < 1e-8, fmt("relative energy drift %.3e", drift));

  double legendre = 0.0;
  for (double x = -2; x <= 2; x += 0.1) {
    for (double vel = -1.4; vel <= 3; vel += 0.1) {
      if (classical::phase_constraint(kUnit, {x, vel}) <= 0.01) continue;
      const double p = classical::conjugate_momentum(kUnit, {x, vel});
      const double h = classical::hamiltonian_classical(kUnit, x, p);
      legendre = std::max(legendre, std::abs(h - (p * vel - classical::lagrangian(kUnit, {x, vel}))));
    }
  }
  v.expect(legendre < 1e-12, fmt("Legendre identity max gap %.3e", legendre));
  return v;
}

Verdict harmonic_limit() {
  Verdict v;
  const auto base = Model::make({0, 1, 1}, {19, 1});
  for (unsigned n : {0u, 1u}) {
    const auto rows = wavefn::limit_deviation(n, {1e-1, 1e-2, 1e-3}, base);
    v.expect(rows[1].deviation < rows[0].deviation && rows[2].deviation < rows[1].deviation,
             fmt("n=%g deviations %.3e", n, rows[0].deviation) +
                 fmt(" > %.3e > %.3e", rows[1].deviation, rows[2].deviation));
  }
  bool exact = true;
  for (unsigned n = 0; n <= 4; ++n) {
    for (double p = -5; p <= 5; p += 0.25) exact = exact && wavefn::psi(base, n, p) == wavefn::lho_psi(base.phys, n, p);
  }
  v.expect(exact, "k = 0 branch equals the harmonic eigenfunctions bitwise");
  for (unsigned n = 0; n <= 2; ++n) {
    const double d = wavefn::laguerre_hermite_limit(n, 1.0, {1e4})[0].deviation;
    v.expect(d < 1e-3, fmt("Laguerre->Hermite n=%g at a=1e4, x=1: deviation %.3e < 1e-3", n, d));
  }
  for (const auto& r : wavefn::gamma_asymptotic_check({1e3}, 3)) {
    if (r.n == 0) {
      v.expect(r.relative_error < 1e-4, fmt("gamma asymptotic at a=1e3, n=0: relative error %.3e", r.relative_error));
    } else {
      v.info(fmt("gamma asymptotic at a=1e3, n=%g: relative error %.3e, log-relative %.3e", r.n, r.relative_error,
                 r.log_relative_error));
    }
  }
  return v;
}

int cli_code(std::vector<std::string> args) {
  args.insert(args.begin(), "lienard");
  std::ostringstream out, err;
  return cli::run_command(args, out, err);
}

Verdict constraints() {
  Verdict v;
  for (const auto& sub : {"spectrum", "wavefn", "verify", "classical", "limit"}) {
    v.expect(cli_code({sub, "--k", "1", "--omega", "1", "--alpha", "-9", "--gamma", "9"}) == 2,
             std::string(sub) + ": alpha*gamma = -a^2 exits 2");
    v.expect(cli_code({sub, "--k", "1", "--omega", "1", "--alpha", "-10", "--gamma", "9"}) == 2,
             std::string(sub) + ": alpha*gamma < -a^2 exits 2");
  }
  const Model m = Model::make(kUnit, {19, 1});
  const auto sp = susy::Superpotential::fitted(m);
  const std::vector<std::pair<std::string, std::function<void(double)>>> evaluators{
      {"mass", [](double p) { quantize::mass(kUnit, p); }},
      {"potential_U", [](double p) { quantize::potential_U(kUnit, p); }},
      {"effective_potential", [](double p) { quantize::effective_potential(kUnit, {19, 1}, p); }},
      {"superpotential", [&](double p) { susy::superpotential_eval(sp, p); }},
      {"partner_potentials", [&](double p) { susy::partner_potentials(sp, p); }},
      {"partner_potentials_defining", [&](double p) { susy::partner_potentials_defining(sp, p); }},
      {"ground_state_closed_form", [&](double p) { susy::ground_state_closed_form(sp, p); }},
      {"psi", [&](double p) { wavefn::psi(m, 1, p); }},
      {"hamiltonian_classical", [](double p) { classical::hamiltonian_classical(kUnit, 0.3, p); }},
      {"momentum grid", [](double p) { MomentumGrid(p - 20 * 0.1, 0.1, 21).validate_for(kUnit); }},
  };
  for (const auto& [name, f] : evaluators) {
    int rejected = 0;
    for (double p : {3.0, 3.0 + 1e-12, 4.5}) {
      try {
        f(p);
      } catch (const DomainError&) {
        ++rejected;
      }
    }
    v.expect(rejected == 3, name + " rejects p >= p_max");
  }
  return v;
}

struct Criterion {
  const char* title;
  Verdict (*run)();
};

const Criterion kCriteria[] = {
    {"spectrum oracle match", spectrum_oracle},
    {"equidistance", equidistance},
    {"Riccati identity", riccati},
    {"shape invariance", shape_invariance},
    {"closed-form consistency", closed_form},
    {"orthonormality", orthonormality},
    {"eigenrelation residual", eigenrelation},
    {"ground-state annihilation and recurrence", annihilation},
    {"classical oracle", classical_oracle},
    {"harmonic limit", harmonic_limit},
    {"constraint handling", constraints},
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
  if (selected.empty()) {
    for (int i = 1; i <= 11; ++i) selected.push_back(i);
  }
  bool all = true;
  for (int id : selected) {
    if (id < 1 || id > 11) {
      std::fprintf(stderr, "unknown criterion %d\n", id);
      return 2;
    }
    const auto& c = kCriteria[id - 1];
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.expect(false, std::string("exception: ") + e.what());
    }
    std::printf("[%s] criterion %d: %s\n", v.pass ? "PASS" : "FAIL", id, c.title);
    for (const auto& note : v.notes) std::printf("       %s\n", note.c_str());
    all = all && v.pass;
  }
  return all ? 0 : 1;
}
