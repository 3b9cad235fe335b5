#include "lienard/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <numbers>
#include <sstream>
#include <thread>
#include <tuple>

#include "CLI11.hpp"
#include "json.hpp"
#include "lienard/classical.hpp"
#include "lienard/susy.hpp"
#include "lienard/verify.hpp"
#include "lienard/wavefn.hpp"

namespace lienard::cli {

namespace {

using report::Cell;
using report::Meta;
using report::Table;

struct Outcome {
  Table table;
  Meta meta;
  int code = kOk;
  std::string summary;
};

std::string num(double v) { return report::format_double(v); }

Meta base_meta(const std::string& command, const RunConfig& cfg) {
  Meta m;
  m.command = command;
  m.params = {{"omega", num(cfg.phys.omega)}, {"k", num(cfg.phys.k)},         {"hbar", num(cfg.phys.hbar)},
              {"alpha", num(cfg.amb.alpha)},  {"gamma", num(cfg.amb.gamma)}, {"format", report::extension(cfg.format)}};
  return m;
}

std::string join(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + num(v[i]);
  return s;
}

Outcome run_classical(const RunConfig& cfg, double amplitude, std::optional<double> t_end, double step,
                      std::size_t stride) {
  cfg.phys.validate();
  if (stride == 0) throw std::invalid_argument("--stride must be positive");
  const double end = t_end.value_or(2.0 * std::numbers::pi / cfg.phys.omega);
  const auto traj =
      classical::integrate_lienard(cfg.phys, classical::analytic_state(cfg.phys, amplitude, 0.0, 0.0), end, step);
  Outcome o{{{"t", "x_numeric", "x_analytic", "abs_err"}, {}}, base_meta("classical", cfg), kOk, {}};
  double worst = 0.0;
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const double exact = classical::analytic_solution(cfg.phys, amplitude, 0.0, traj.times[i]);
    const double err = std::abs(traj.positions[i] - exact);
    worst = std::max(worst, err);
    if (i % stride == 0 || i + 1 == traj.size()) o.table.add_row({traj.times[i], traj.positions[i], exact, err});
  }
  o.meta.params.insert({{"amplitude", num(amplitude)}, {"t_end", num(end)}, {"step", num(step)}});
  o.summary = "classical: " + std::to_string(traj.size()) + " samples, max |x_numeric - x_analytic| = " + num(worst);
  return o;
}

Outcome run_spectrum(const RunConfig& cfg) {
  const auto table = susy::spectrum(cfg.phys, cfg.amb, cfg.n_max);
  Outcome o{{{"n", "energy", "hbar_omega_units"}, {}}, base_meta("spectrum", cfg), kOk, {}};
  const double hw = cfg.phys.hbar_omega();
  for (const auto& l : table.levels) o.table.add_row({static_cast<long long>(l.n), l.energy, l.energy / hw});
  o.meta.params["n_max"] = std::to_string(cfg.n_max);
  o.summary = "spectrum: " + std::to_string(table.levels.size()) + " levels, ground energy " +
              num(table.levels.front().energy);
  return o;
}

Outcome run_wavefn(const RunConfig& cfg, unsigned n, std::size_t points, std::optional<double> p_lo,
                   std::optional<double> p_hi) {
  if (points < 2) throw std::invalid_argument("--points must be at least 2");
  const auto model = Model::make(cfg.phys, cfg.amb);
  double lo = 0.0;
  double hi = 0.0;
  if (model.harmonic()) {
    const double reach = (std::sqrt(2.0 * n + 1.0) + 6.0) * std::sqrt(cfg.phys.hbar_omega());
    lo = p_lo.value_or(-reach);
    hi = p_hi.value_or(reach);
  } else {
    const auto& d = *model.derived;
    lo = p_lo.value_or(wavefn::p_of_y(d, verify::decay_bound(d, n)));
    // Stop one step short of p_max, where ψ vanishes.
    hi = p_hi.value_or(d.p_max - (d.p_max - lo) / static_cast<double>(points));
  }
  if (!(hi > lo)) throw std::invalid_argument("wavefn window must satisfy p_lo < p_hi");
  Outcome o{{{"p", "y", "psi"}, {}}, base_meta("wavefn", cfg), kOk, {}};
  const double step = (hi - lo) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) {
    const double p = i + 1 == points ? hi : lo + step * static_cast<double>(i);
    const double y = model.harmonic() ? std::nan("") : wavefn::y_of_p(*model.derived, p);
    o.table.add_row({p, y, wavefn::psi(model, n, p)});
  }
  o.meta.params.insert({{"n", std::to_string(n)}, {"p_lo", num(lo)}, {"p_hi", num(hi)},
                        {"points", std::to_string(points)}});
  o.summary = "wavefn: n=" + std::to_string(n) + ", " + std::to_string(points) + " samples on [" + num(lo) + ", " +
              num(hi) + "]";
  return o;
}

verify::Options verify_options(const RunConfig& cfg) {
  verify::Options opt;
  opt.phys = cfg.phys;
  opt.amb = cfg.amb;
  opt.n_max = cfg.n_max;
  opt.y_points = cfg.y_points;
  opt.y_max = cfg.y_max;
  opt.h_p = cfg.h_p;
  opt.k_sequence = cfg.k_sequence;
  return opt;
}

void echo_grid(Meta& m, const RunConfig& cfg) {
  m.params.insert({{"n_max", std::to_string(cfg.n_max)},
                   {"y_points", std::to_string(cfg.y_points)},
                   {"y_max", cfg.y_max ? num(*cfg.y_max) : "recommended"},
                   {"h_p", num(cfg.h_p)},
                   {"k_sequence", join(cfg.k_sequence)}});
}

Outcome run_verify(const RunConfig& cfg) {
  const auto records = verify::run_all(verify_options(cfg));
  Outcome o{report::records_table(records), base_meta("verify", cfg), kOk, {}};
  echo_grid(o.meta, cfg);
  const auto failed = std::count_if(records.begin(), records.end(), [](const auto& r) { return !r.pass; });
  o.code = failed == 0 ? kOk : kCheckFailed;
  std::ostringstream s;
  s << "verify: " << records.size() - failed << "/" << records.size() << " checks pass";
  for (const auto& r : records) {
    if (!r.pass) s << "\n  FAIL " << r.check << " measured=" << num(r.measured) << " expected=" << num(r.expected);
  }
  o.summary = s.str();
  return o;
}

Outcome run_limit(const RunConfig& cfg, const std::vector<double>& a_values, double x) {
  PhysicalParams base_phys = cfg.phys;
  base_phys.k = 0.0;
  const auto base = Model::make(base_phys, cfg.amb);
  Outcome o{{{"study", "n", "k", "a_script", "deviation"}, {}}, base_meta("limit", cfg), kOk, {}};
  const unsigned top = std::min(cfg.n_max, 3u);
  auto k_of = [&](double a) { return 3.0 * std::sqrt(std::pow(cfg.phys.omega, 3) / (cfg.phys.hbar * a)); };
  for (unsigned n = 0; n <= top; ++n) {
    for (const auto& r : wavefn::limit_deviation(n, cfg.k_sequence, base)) {
      o.table.add_row({std::string("eigenfunction"), static_cast<long long>(n), r.k, r.a_script, r.deviation});
    }
  }
  for (unsigned n = 0; n <= std::min(top, 2u); ++n) {
    for (const auto& r : wavefn::laguerre_hermite_limit(n, x, a_values)) {
      o.table.add_row({std::string("laguerre_hermite"), static_cast<long long>(n), k_of(r.a_script), r.a_script,
                       r.deviation});
    }
  }
  for (const auto& r : wavefn::gamma_asymptotic_check(a_values, top)) {
    o.table.add_row({std::string("gamma_asymptotic"), static_cast<long long>(r.n), k_of(r.a_script), r.a_script,
                     r.relative_error});
  }
  echo_grid(o.meta, cfg);
  o.meta.params.insert({{"a_values", join(a_values)}, {"x", num(x)}});
  o.summary = "limit: " + std::to_string(o.table.rows.size()) + " rows";
  return o;
}

struct SweepPoint {
  double k, omega, hbar, alpha, gamma;
  auto key() const { return std::tie(k, omega, hbar, alpha, gamma); }
};

struct SweepResult {
  SweepPoint point;
  std::string status;
  long long checks = 0;
  long long failed = 0;
  std::string first_failure;
};

SweepResult sweep_one(const RunConfig& cfg, SweepPoint pt) {
  RunConfig local = cfg;
  local.phys = {pt.k, pt.omega, pt.hbar};
  local.amb = {pt.alpha, pt.gamma};
  SweepResult res{pt, "ok", 0, 0, {}};
  try {
    const auto records = verify::run_all(verify_options(local));
    res.checks = static_cast<long long>(records.size());
    for (const auto& r : records) {
      if (r.pass) continue;
      if (res.failed++ == 0) res.first_failure = r.check;
    }
    if (res.failed > 0) res.status = "failed";
  } catch (const std::invalid_argument& e) {
    res.status = "rejected";
    res.first_failure = e.what();
  } catch (const std::domain_error& e) {
    res.status = "rejected";
    res.first_failure = e.what();
  }
  return res;
}

Outcome run_sweep(const RunConfig& cfg, const std::vector<double>& ks, const std::vector<double>& omegas,
                  const std::vector<double>& alphas, const std::vector<double>& gammas, unsigned jobs) {
  std::vector<SweepPoint> points;
  for (double k : ks)
    for (double w : omegas)
      for (double a : alphas)
        for (double g : gammas) points.push_back({k, w, cfg.phys.hbar, a, g});
  if (points.empty()) throw std::invalid_argument("sweep has no parameter points");
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());

  std::vector<SweepResult> results;
  for (std::size_t start = 0; start < points.size(); start += jobs) {
    std::vector<std::future<SweepResult>> batch;
    for (std::size_t i = start; i < std::min(points.size(), start + jobs); ++i) {
      batch.push_back(std::async(std::launch::async, sweep_one, std::cref(cfg), points[i]));
    }
    for (auto& f : batch) results.push_back(f.get());
  }
  std::sort(results.begin(), results.end(),
            [](const SweepResult& a, const SweepResult& b) { return a.point.key() < b.point.key(); });

  Outcome o{{{"k", "omega", "hbar", "alpha", "gamma", "status", "checks", "failed", "first_failure"}, {}},
            base_meta("sweep", cfg), kOk, {}};
  long long rejected = 0;
  long long failing = 0;
  for (const auto& r : results) {
    o.table.add_row({r.point.k, r.point.omega, r.point.hbar, r.point.alpha, r.point.gamma, r.status, r.checks,
                     r.failed, r.first_failure});
    rejected += r.status == "rejected";
    failing += r.status == "failed";
  }
  echo_grid(o.meta, cfg);
  o.meta.params.erase("k");
  o.meta.params.erase("omega");
  o.meta.params.erase("alpha");
  o.meta.params.erase("gamma");
  o.meta.params.insert({{"k_values", join(ks)}, {"omega_values", join(omegas)}, {"alpha_values", join(alphas)},
                        {"gamma_values", join(gammas)}});
  o.code = rejected > 0 ? kInvalidInput : failing > 0 ? kCheckFailed : kOk;
  o.summary = "sweep: " + std::to_string(results.size()) + " points, " + std::to_string(failing) + " failed, " +
              std::to_string(rejected) + " rejected";
  return o;
}

std::string value_token(const nlohmann::json& v, const std::string& key) {
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) return num(v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_number()) throw std::invalid_argument("config key '" + key + "': list entries must be numbers");
      s += (i ? "," : "") + num(v[i].get<double>());
    }
    return s;
  }
  throw std::invalid_argument("config key '" + key + "': unsupported value type");
}

// Locates --config among the tokens after the subcommand.
std::optional<std::string> find_config(const std::vector<std::string>& argv) {
  for (std::size_t i = 1; i < argv.size(); ++i) {
    if (argv[i] == "--config" && i + 1 < argv.size()) return argv[i + 1];
    if (argv[i].rfind("--config=", 0) == 0) return argv[i].substr(9);
  }
  return std::nullopt;
}

void emit(const Outcome& o, const RunConfig& cfg, const std::string& command, std::ostream& out, std::ostream& err) {
  std::filesystem::path path = cfg.output;
  const char* dir = std::getenv(kOutputDirEnv);
  if (path.empty() && dir && *dir) path = std::filesystem::path(command + "." + report::extension(cfg.format));
  if (!path.empty() && path.is_relative() && dir && *dir) path = std::filesystem::path(dir) / path;
  if (path.empty()) {
    report::write(out, o.table, o.meta, cfg.format);
  } else {
    report::write_file(path, o.table, o.meta, cfg.format);
    err << "wrote " << path.string() << "\n";
  }
  err << o.summary << "\n";
}

}  // namespace

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not a number: '" + item + "'");
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos) {
      throw std::invalid_argument("not a number: '" + item + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

std::vector<std::string> config_tokens(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("malformed config " + path + ": " + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("config " + path + " must be a JSON object");
  std::vector<std::string> tokens;
  for (const auto& [key, value] : doc.items()) {
    std::string flag = "--" + key;
    std::replace(flag.begin(), flag.end(), '_', '-');
    if (flag == "--config") throw std::invalid_argument("config files cannot nest");
    if (value.is_boolean()) {
      if (value.get<bool>()) tokens.push_back(flag);
      continue;
    }
    tokens.push_back(flag);
    tokens.push_back(value_token(value, key));
  }
  return tokens;
}

int run_command(const std::vector<std::string>& argv_in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantized Lienard oscillator: classical, spectral and wavefunction tools", "lienard"};
  app.set_version_flag("--version", std::string(LIENARD_VERSION));
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  RunConfig cfg;
  std::string format_name = "csv";
  std::string k_sequence_text;
  std::string config_path;
  double y_max = 0.0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--omega", cfg.phys.omega, "angular frequency")->capture_default_str();
    sub->add_option("--k", cfg.phys.k, "nonlinearity strength (0 selects the harmonic branch)")->capture_default_str();
    sub->add_option("--hbar", cfg.phys.hbar, "reduced Planck constant")->capture_default_str();
    sub->add_option("--alpha", cfg.amb.alpha, "ordering exponent alpha")->capture_default_str();
    sub->add_option("--gamma", cfg.amb.gamma, "ordering exponent gamma")->capture_default_str();
    sub->add_option("--output,-o", cfg.output, "output file (default stdout)");
    sub->add_option("--format", format_name, "csv | json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    sub->add_option("--config", config_path, "JSON file of default flag values");
  };
  auto add_grid = [&](CLI::App* sub) {
    sub->add_option("--n-max", cfg.n_max, "highest level")->capture_default_str();
    sub->add_option("--y-points,-N", cfg.y_points, "interior points of the y-space eigensolver")->capture_default_str();
    sub->add_option("--y-max", y_max, "y-space domain length (default 4*lambda + 40*n + 50)");
    sub->add_option("--h-p", cfg.h_p, "momentum grid spacing")->capture_default_str();
    sub->add_option("--k-sequence", k_sequence_text, "decreasing k values for the limit study, comma separated");
  };

  auto* classical_cmd = app.add_subcommand("classical", "RK4 trajectory against the closed-form solution");
  add_common(classical_cmd);
  double amplitude = 1.0;
  double t_end = 0.0;
  double step = 1e-3;
  std::size_t stride = 1;
  classical_cmd->add_option("--amplitude", amplitude)->capture_default_str();
  classical_cmd->add_option("--t-end", t_end, "default: one period 2*pi/omega");
  classical_cmd->add_option("--step", step)->capture_default_str();
  classical_cmd->add_option("--stride", stride, "write every n-th sample")->capture_default_str();

  auto* spectrum_cmd = app.add_subcommand("spectrum", "closed-form energy levels");
  add_common(spectrum_cmd);
  spectrum_cmd->add_option("--n-max", cfg.n_max)->capture_default_str();

  auto* wavefn_cmd = app.add_subcommand("wavefn", "sampled normalized eigenfunction");
  add_common(wavefn_cmd);
  unsigned level = 0;
  std::size_t points = 401;
  double p_lo = 0.0;
  double p_hi = 0.0;
  wavefn_cmd->add_option("--n", level)->capture_default_str();
  wavefn_cmd->add_option("--points", points)->capture_default_str();
  auto* p_lo_opt = wavefn_cmd->add_option("--p-lo", p_lo);
  auto* p_hi_opt = wavefn_cmd->add_option("--p-hi", p_hi);

  auto* verify_cmd = app.add_subcommand("verify", "run every invariant check for one parameter set");
  add_common(verify_cmd);
  add_grid(verify_cmd);

  auto* limit_cmd = app.add_subcommand("limit", "harmonic-limit deviation tables");
  add_common(limit_cmd);
  add_grid(limit_cmd);
  std::string a_values_text = "10,100,1000,10000";
  double x_point = 1.0;
  limit_cmd->add_option("--a-values", a_values_text, "values of 9 omega^3/(hbar k^2), comma separated")
      ->capture_default_str();
  limit_cmd->add_option("--x", x_point, "evaluation point of the Laguerre-Hermite study")->capture_default_str();

  auto* sweep_cmd = app.add_subcommand("sweep", "verify over a grid of parameter tuples");
  add_common(sweep_cmd);
  add_grid(sweep_cmd);
  std::string ks_text = "0,0.5,1";
  std::string omegas_text = "1";
  std::string alphas_text = "0";
  std::string gammas_text = "0";
  unsigned jobs = 0;
  sweep_cmd->add_option("--k-values", ks_text)->capture_default_str();
  sweep_cmd->add_option("--omega-values", omegas_text)->capture_default_str();
  sweep_cmd->add_option("--alpha-values", alphas_text)->capture_default_str();
  sweep_cmd->add_option("--gamma-values", gammas_text)->capture_default_str();
  sweep_cmd->add_option("--jobs,-j", jobs, "worker threads (0: hardware concurrency)")->capture_default_str();

  try {
    std::vector<std::string> argv = argv_in;
    if (argv.empty()) argv.emplace_back("lienard");
    // File values go in front of the flags so that the last occurrence wins.
    if (const auto path = find_config(argv); path && argv.size() > 1) {
      const auto tokens = config_tokens(*path);
      argv.insert(argv.begin() + 2, tokens.begin(), tokens.end());
    }
    std::vector<const char*> raw;
    for (const auto& a : argv) raw.push_back(a.c_str());
    try {
      app.parse(static_cast<int>(raw.size()), raw.data());
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e, out, err);
      return code == 0 ? kOk : kInvalidInput;
    }

    cfg.format = report::parse_format(format_name);
    auto* sub = app.get_subcommands().front();
    if (!k_sequence_text.empty()) cfg.k_sequence = parse_list(k_sequence_text);
    if (sub != classical_cmd && sub != spectrum_cmd && sub != wavefn_cmd && sub->count("--y-max") > 0) {
      cfg.y_max = y_max;
    }
    cfg.phys.validate();
    if (sub != sweep_cmd) Model::make(cfg.phys, cfg.amb);
    if (cfg.h_p <= 0.0) throw std::invalid_argument("--h-p must be positive");

    Outcome o;
    if (sub == classical_cmd) {
      o = run_classical(cfg, amplitude, sub->count("--t-end") ? std::optional(t_end) : std::nullopt, step, stride);
    } else if (sub == spectrum_cmd) {
      o = run_spectrum(cfg);
    } else if (sub == wavefn_cmd) {
      o = run_wavefn(cfg, level, points, p_lo_opt->count() ? std::optional(p_lo) : std::nullopt,
                     p_hi_opt->count() ? std::optional(p_hi) : std::nullopt);
    } else if (sub == verify_cmd) {
      o = run_verify(cfg);
    } else if (sub == limit_cmd) {
      o = run_limit(cfg, parse_list(a_values_text), x_point);
    } else {
      o = run_sweep(cfg, parse_list(ks_text), parse_list(omegas_text), parse_list(alphas_text),
                    parse_list(gammas_text), jobs);
    }
    emit(o, cfg, sub->get_name(), out, err);
    return o.code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kInvalidInput;
}

int run_command(int argc, const char* const* argv) {
  return run_command(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}

}  // namespace lienard::cli
