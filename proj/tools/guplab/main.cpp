// guplab batch CLI: runs named experiments and writes CSV/JSON artifacts plus
// a deterministic run manifest. Exit codes: 0 success, 2 validation error,
// 3 domain exceeded (arctan range), 1 internal error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "guplab/guplab.hpp"

namespace {

using nlohmann::json;

struct Options {
  // shared
  double hbar = 1.0;
  double mass = 1.0;
  double omega = 1.0;
  double beta = 0.0;
  long long dim = 32;
  double dt = 0.0;     // 0 = period/1000
  double t_end = 0.0;  // 0 = 10 periods
  unsigned long long seed = 0;
  std::string out;     // empty = <subcommand>.<ext>
  std::string format;  // empty = csv (json for series)
  std::string config_path;

  // per-subcommand extras
  long long order = 10;                // series
  std::string alpha = "1,0";           // coherent, "re,im"
  std::string chart = "canonical";     // evolve, liouville
  std::string method = "rk4";          // evolve
  double q0 = 1.0;                     // evolve, liouville
  double mom0 = 0.0;                   // evolve, liouville
  double radius = 0.05;                // liouville
  long long points = 64;               // liouville
  long long psi0_points = 0;           // spectrum
  std::string modes;                   // coherent, "k:lambda:n,..."
};

// One CLI option: its CLI11 handle (to know whether a flag was passed) and a
// setter used when the value comes from a --config file instead.
struct BoundOption {
  CLI::Option* option = nullptr;
  std::function<void(const json&)> set_from_json;
};

using OptionTable = std::map<std::string, BoundOption>;

void bind_shared(CLI::App* sub, Options& opt, OptionTable& table) {
  const auto bind = [&table](const std::string& key, CLI::Option* o, auto* target) {
    table[key] = BoundOption{o, [target](const json& v) { *target = v.get<std::decay_t<decltype(*target)>>(); }};
  };
  bind("hbar", sub->add_option("--hbar", opt.hbar, "Planck constant (action units)"), &opt.hbar);
  bind("mass", sub->add_option("--mass", opt.mass, "oscillator mass"), &opt.mass);
  bind("omega", sub->add_option("--omega", opt.omega, "angular frequency"), &opt.omega);
  bind("beta", sub->add_option("--beta", opt.beta, "deformation parameter (1/momentum^2)"),
       &opt.beta);
  bind("dim", sub->add_option("--dim", opt.dim, "Fock truncation dimension"), &opt.dim);
  bind("dt", sub->add_option("--dt", opt.dt, "integrator step (default period/1000)"), &opt.dt);
  bind("t_end", sub->add_option("--t-end", opt.t_end, "integration time (default 10 periods)"),
       &opt.t_end);
  bind("seed", sub->add_option("--seed", opt.seed, "RNG seed"), &opt.seed);
  bind("out", sub->add_option("--out", opt.out, "output path"), &opt.out);
  bind("format", sub->add_option("--format", opt.format, "csv or json"), &opt.format);
  sub->add_option("--config", opt.config_path, "JSON config file; flags take precedence");
}

guplab::OscillatorParams make_params(const Options& opt) {
  guplab::OscillatorParams params{opt.hbar, opt.mass, opt.omega, opt.beta};
  params.validate();
  return params;
}

double resolve_dt(const Options& opt, const guplab::OscillatorParams& params) {
  return opt.dt > 0.0 ? opt.dt : params.period() / 1000.0;
}

double resolve_t_end(const Options& opt, const guplab::OscillatorParams& params) {
  return opt.t_end > 0.0 ? opt.t_end : 10.0 * params.period();
}

std::string resolve_format(const Options& opt, const std::string& subcommand) {
  std::string fmt = opt.format.empty()
                        ? (subcommand == "series" ? std::string("json") : std::string("csv"))
                        : opt.format;
  if (fmt != "csv" && fmt != "json") {
    throw guplab::ValidationError("cli: format must be 'csv' or 'json', got '" + fmt + "'");
  }
  return fmt;
}

std::string resolve_out(const Options& opt, const std::string& subcommand,
                        const std::string& fmt) {
  return opt.out.empty() ? subcommand + "." + fmt : opt.out;
}

guplab::Chart parse_chart(const std::string& chart) {
  if (chart == "canonical") return guplab::Chart::kCanonical;
  if (chart == "deformed") return guplab::Chart::kDeformed;
  throw guplab::ValidationError("cli: chart must be 'canonical' or 'deformed', got '" + chart +
                                "'");
}

guplab::Complex parse_alpha(const std::string& text) {
  double re = 0.0;
  double im = 0.0;
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) {
      re = std::stod(text);
    } else {
      re = std::stod(text.substr(0, comma));
      im = std::stod(text.substr(comma + 1));
    }
  } catch (const std::exception&) {
    throw guplab::ValidationError("cli: --alpha expects 're,im', got '" + text + "'");
  }
  return guplab::Complex(re, im);
}

std::vector<guplab::ModeSpec> parse_modes(const std::string& text) {
  std::vector<guplab::ModeSpec> modes;
  if (text.empty()) return modes;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    const std::string item = text.substr(pos, end - pos);
    const std::size_t c1 = item.find(':');
    const std::size_t c2 = c1 == std::string::npos ? std::string::npos : item.find(':', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) {
      throw guplab::ValidationError("cli: --modes expects 'k:lambda:n[,...]', got '" + item + "'");
    }
    try {
      modes.push_back(guplab::ModeSpec{std::stod(item.substr(0, c1)),
                                       std::stoi(item.substr(c1 + 1, c2 - c1 - 1)),
                                       std::stoll(item.substr(c2 + 1))});
    } catch (const std::exception&) {
      throw guplab::ValidationError("cli: --modes expects 'k:lambda:n[,...]', got '" + item + "'");
    }
    pos = end + 1;
    if (end == text.size()) break;
  }
  return modes;
}

// Replace the final extension with _suffix + same extension:
// "runs/spectrum.csv" -> "runs/spectrum_psi0.csv".
std::string sibling_artifact(const std::string& out, const std::string& suffix,
                             const std::string& ext) {
  std::filesystem::path p(out);
  const std::string stem = p.has_stem() ? p.stem().string() : std::string("out");
  std::filesystem::path result = p;
  result.replace_filename(stem + "_" + suffix + "." + ext);
  return result.string();
}

void merge_config_file(Options& opt, const OptionTable& table) {
  if (opt.config_path.empty()) return;
  std::ifstream in(opt.config_path);
  if (!in) {
    throw guplab::ValidationError("cli: cannot open config file " + opt.config_path);
  }
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw guplab::ValidationError(std::string("cli: config file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw guplab::ValidationError("cli: config file must hold a JSON object");
  }
  for (const auto& [key, value] : doc.items()) {
    const auto it = table.find(key);
    if (it == table.end()) {
      throw guplab::ValidationError("cli: unknown config key '" + key + "'");
    }
    if (it->second.option != nullptr && it->second.option->count() > 0) {
      continue;  // command-line flag wins
    }
    try {
      it->second.set_from_json(value);
    } catch (const json::exception& e) {
      throw guplab::ValidationError("cli: bad value for config key '" + key + "': " + e.what());
    }
  }
}

json config_echo(const Options& opt, const std::string& subcommand, const std::string& fmt,
                 const std::string& out) {
  json cfg{{"hbar", opt.hbar},   {"mass", opt.mass},   {"omega", opt.omega},
           {"beta", opt.beta},   {"dim", opt.dim},     {"seed", opt.seed},
           {"format", fmt},      {"out", out}};
  if (subcommand == "series") {
    cfg["order"] = opt.order;
  } else if (subcommand == "spectrum") {
    cfg["psi0_points"] = opt.psi0_points;
  } else if (subcommand == "evolve") {
    cfg["chart"] = opt.chart;
    cfg["method"] = opt.method;
    cfg["q0"] = opt.q0;
    cfg["mom0"] = opt.mom0;
    cfg["dt"] = opt.dt;
    cfg["t_end"] = opt.t_end;
  } else if (subcommand == "liouville") {
    cfg["chart"] = opt.chart;
    cfg["q0"] = opt.q0;
    cfg["mom0"] = opt.mom0;
    cfg["radius"] = opt.radius;
    cfg["points"] = opt.points;
    cfg["dt"] = opt.dt;
    cfg["t_end"] = opt.t_end;
  } else if (subcommand == "coherent") {
    cfg["alpha"] = opt.alpha;
    cfg["modes"] = opt.modes;
  }
  return cfg;
}

// ---------------------------------------------------------------------------
// subcommand runners: each returns the artifacts to write

std::vector<guplab::NamedArtifact> run_series(const Options& opt, const std::string& fmt,
                                              const std::string& out) {
  const guplab::OscillatorParams params = make_params(opt);
  if (opt.order < 1 || opt.order > 1000000) {
    throw guplab::ValidationError("cli: series --order out of range");
  }
  const int order = static_cast<int>(opt.order);
  const bool squared = order % 2 == 0;
  const guplab::PowerSeries series = squared ? guplab::series_P_squared(params, order)
                                             : guplab::series_P(params, order);
  const std::string kind = squared ? "P_squared" : "P";
  std::string body = fmt == "json" ? guplab::series_json(series, params.beta, kind)
                                   : guplab::series_csv(series);
  return {{out, std::move(body)}};
}

std::vector<guplab::NamedArtifact> run_commute(const Options& opt, const std::string& fmt,
                                               const std::string& out) {
  const guplab::OscillatorParams params = make_params(opt);
  const std::vector<guplab::CommuteCheck> checks =
      guplab::run_commute_checks(params, opt.dim);
  if (fmt == "csv") {
    return {{out, guplab::commute_csv(checks)}};
  }
  json doc = json::array();
  for (const auto& check : checks) {
    doc.push_back({{"check", check.name},
                   {"dim", check.dim},
                   {"block", check.block},
                   {"residual", check.residual},
                   {"tolerance", check.tolerance},
                   {"pass", check.pass}});
  }
  return {{out, doc.dump(2) + "\n"}};
}

std::vector<guplab::NamedArtifact> run_spectrum(const Options& opt, const std::string& fmt,
                                                const std::string& out) {
  const guplab::OscillatorParams params = make_params(opt);
  const guplab::DenseOperator h =
      guplab::build_hamiltonian(params, opt.dim, guplab::HamiltonianForm::kQuadratic);
  const guplab::RealVector spectrum = guplab::hermitian_spectrum(h);

  std::vector<guplab::NamedArtifact> artifacts;
  if (fmt == "csv") {
    artifacts.push_back({out, guplab::spectrum_csv(params, spectrum)});
  } else {
    json rows = json::array();
    for (Eigen::Index n = 0; n < spectrum.size(); ++n) {
      const double analytic = params.hbar * params.omega * (static_cast<double>(n) + 0.5);
      rows.push_back({{"n", n},
                      {"E_numeric", spectrum(n)},
                      {"E_analytic", analytic},
                      {"abs_err", std::abs(spectrum(n) - analytic)}});
    }
    artifacts.push_back({out, rows.dump(2) + "\n"});
  }

  if (opt.psi0_points > 0) {
    if (opt.psi0_points < 2) {
      throw guplab::ValidationError("cli: --psi0-points must be >= 2");
    }
    const std::vector<double> grid =
        guplab::default_wavefunction_grid(params, static_cast<std::size_t>(opt.psi0_points));
    const guplab::RealVector psi = guplab::ground_state_wavefunction(params, grid);
    artifacts.push_back({sibling_artifact(out, "psi0", "csv"),
                         guplab::wavefunction_csv(grid, psi)});
  }
  return artifacts;
}

std::vector<guplab::NamedArtifact> run_evolve(const Options& opt, const std::string& fmt,
                                              const std::string& out) {
  const guplab::OscillatorParams params = make_params(opt);
  const guplab::Chart chart = parse_chart(opt.chart);
  guplab::IntegrationMethod method;
  if (opt.method == "rk4") {
    method = guplab::IntegrationMethod::kRk4;
  } else if (opt.method == "leapfrog") {
    method = guplab::IntegrationMethod::kLeapfrog;
  } else {
    throw guplab::ValidationError("cli: method must be 'rk4' or 'leapfrog', got '" + opt.method +
                                  "'");
  }
  const guplab::PhasePoint start{chart, opt.q0, opt.mom0};
  const guplab::Trajectory traj =
      guplab::integrate(start, params, resolve_t_end(opt, params), resolve_dt(opt, params),
                        method);
  if (fmt == "csv") {
    return {{out, guplab::trajectory_csv(traj)}};
  }
  json rows = json::array();
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const guplab::PhasePoint& pt = traj.points[i];
    json row{{"t", traj.times[i]}, {"q", pt.q}, {"energy", traj.energies[i]}};
    if (pt.chart == guplab::Chart::kDeformed) {
      row["p"] = pt.momentum;
      row["P"] = guplab::momentum_forward(pt.momentum, params);
    } else {
      row["P"] = pt.momentum;
      try {
        row["p"] = guplab::momentum_inverse(pt.momentum, params);
      } catch (const guplab::DomainExceeded&) {
        row["p"] = nullptr;
      }
    }
    rows.push_back(std::move(row));
  }
  return {{out, rows.dump(2) + "\n"}};
}

std::vector<guplab::NamedArtifact> run_liouville(const Options& opt, const std::string& fmt,
                                                 const std::string& out) {
  const guplab::OscillatorParams params = make_params(opt);
  const guplab::Chart chart = parse_chart(opt.chart);
  const double dt = resolve_dt(opt, params);
  const double t_end = resolve_t_end(opt, params);

  const guplab::PhasePoint start{chart, opt.q0, opt.mom0};
  const guplab::PhasePoint start_canonical = guplab::to_canonical(start, params);
  const guplab::PhasePoint start_deformed = guplab::to_deformed(start, params);

  const guplab::TangentFlow canonical =
      guplab::tangent_integrate(start_canonical, params, t_end, dt);
  const guplab::TangentFlow deformed =
      guplab::tangent_integrate(start_deformed, params, t_end, dt);

  if (opt.points < 64) {
    throw guplab::ValidationError("cli: liouville --points must be >= 64");
  }
  const guplab::Ensemble ensemble =
      guplab::disc_ensemble(chart, opt.q0, opt.mom0, opt.radius,
                            static_cast<std::size_t>(opt.points), opt.seed);
  const guplab::VolumeSeries volumes = guplab::ensemble_volume(ensemble, params, t_end, dt);

  if (fmt == "csv") {
    return {{out, guplab::liouville_csv(canonical, deformed, volumes)}};
  }
  const std::vector<double> det_canonical = canonical.determinants();
  const std::vector<double> det_deformed = deformed.determinants();
  const std::vector<double> predicted = deformed.predicted_det_ratio();
  json rows = json::array();
  for (std::size_t i = 0; i < canonical.base.size(); ++i) {
    rows.push_back({{"t", canonical.base.times[i]},
                    {"detJ_canonical", det_canonical[i]},
                    {"detJ_deformed", det_deformed[i]},
                    {"predicted_ratio", predicted[i]},
                    {"hull_area_canonical", volumes.hull_area_canonical[i]},
                    {"hull_area_deformed", volumes.hull_area_deformed[i]}});
  }
  return {{out, rows.dump(2) + "\n"}};
}

std::vector<guplab::NamedArtifact> run_coherent(const Options& opt, const std::string& fmt,
                                                const std::string& out) {
  make_params(opt);  // validates the physical constants even though only dim matters here
  const guplab::CoherentSpec spec{parse_alpha(opt.alpha), opt.dim};

  std::vector<guplab::NamedArtifact> artifacts;
  if (fmt == "csv") {
    artifacts.push_back({out, guplab::coherent_csv(spec)});
  } else {
    const guplab::FockState state = guplab::coherent_state(spec);
    const double mag2 = std::norm(spec.alpha);
    json rows = json::array();
    double analytic = std::exp(-mag2);
    for (Eigen::Index n = 0; n < state.dim(); ++n) {
      if (n > 0) analytic *= mag2 / static_cast<double>(n);
      const double numeric = std::norm(state.amplitudes()(n));
      rows.push_back({{"n", n},
                      {"P_n_numeric", numeric},
                      {"P_n_analytic", analytic},
                      {"abs_err", std::abs(numeric - analytic)}});
    }
    artifacts.push_back({out, rows.dump(2) + "\n"});
  }

  const std::vector<guplab::ModeSpec> modes = parse_modes(opt.modes);
  if (!modes.empty()) {
    artifacts.push_back({sibling_artifact(out, "modes", "json"),
                         guplab::mode_energy_json(modes, opt.hbar, 1.0)});
  }
  return artifacts;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"guplab: numerical laboratory for the deformed harmonic oscillator"};
  app.require_subcommand(1);

  Options opt;
  std::map<std::string, OptionTable> tables;

  CLI::App* series = app.add_subcommand("series", "generalized-momentum power series");
  bind_shared(series, opt, tables["series"]);
  tables["series"]["order"] = BoundOption{
      series->add_option("--order", opt.order,
                         "max power of p; odd gives the P series, even gives P^2"),
      [&opt](const json& v) { opt.order = v.get<long long>(); }};

  CLI::App* commute = app.add_subcommand("commute", "ladder/commutator algebra report");
  bind_shared(commute, opt, tables["commute"]);

  CLI::App* spectrum = app.add_subcommand("spectrum", "oscillator spectrum (quadratic form)");
  bind_shared(spectrum, opt, tables["spectrum"]);
  tables["spectrum"]["psi0_points"] = BoundOption{
      spectrum->add_option("--psi0-points", opt.psi0_points,
                           "also export the ground-state wavefunction on this many grid points"),
      [&opt](const json& v) { opt.psi0_points = v.get<long long>(); }};

  CLI::App* evolve = app.add_subcommand("evolve", "integrate a phase-space trajectory");
  bind_shared(evolve, opt, tables["evolve"]);
  tables["evolve"]["chart"] = BoundOption{
      evolve->add_option("--chart", opt.chart, "canonical (q,P) or deformed (q,p)"),
      [&opt](const json& v) { opt.chart = v.get<std::string>(); }};
  tables["evolve"]["method"] = BoundOption{
      evolve->add_option("--method", opt.method, "rk4 or leapfrog (canonical chart only)"),
      [&opt](const json& v) { opt.method = v.get<std::string>(); }};
  tables["evolve"]["q0"] =
      BoundOption{evolve->add_option("--q0", opt.q0, "initial coordinate"),
                  [&opt](const json& v) { opt.q0 = v.get<double>(); }};
  tables["evolve"]["mom0"] =
      BoundOption{evolve->add_option("--mom0", opt.mom0, "initial momentum (p or P per chart)"),
                  [&opt](const json& v) { opt.mom0 = v.get<double>(); }};

  CLI::App* liouville = app.add_subcommand("liouville", "tangent-map and disc-volume transport");
  bind_shared(liouville, opt, tables["liouville"]);
  tables["liouville"]["chart"] = BoundOption{
      liouville->add_option("--chart", opt.chart, "chart of the start point and ensemble"),
      [&opt](const json& v) { opt.chart = v.get<std::string>(); }};
  tables["liouville"]["q0"] =
      BoundOption{liouville->add_option("--q0", opt.q0, "disc center coordinate"),
                  [&opt](const json& v) { opt.q0 = v.get<double>(); }};
  tables["liouville"]["mom0"] =
      BoundOption{liouville->add_option("--mom0", opt.mom0, "disc center momentum"),
                  [&opt](const json& v) { opt.mom0 = v.get<double>(); }};
  tables["liouville"]["radius"] =
      BoundOption{liouville->add_option("--radius", opt.radius, "disc radius (<= 0.05)"),
                  [&opt](const json& v) { opt.radius = v.get<double>(); }};
  tables["liouville"]["points"] =
      BoundOption{liouville->add_option("--points", opt.points, "ensemble size (>= 64)"),
                  [&opt](const json& v) { opt.points = v.get<long long>(); }};

  CLI::App* coherent = app.add_subcommand("coherent", "coherent-state photon statistics");
  bind_shared(coherent, opt, tables["coherent"]);
  tables["coherent"]["alpha"] =
      BoundOption{coherent->add_option("--alpha", opt.alpha, "complex amplitude 're,im'"),
                  [&opt](const json& v) { opt.alpha = v.get<std::string>(); }};
  tables["coherent"]["modes"] = BoundOption{
      coherent->add_option("--modes", opt.modes,
                           "also export mode energies, 'k:lambda:n[,...]'"),
      [&opt](const json& v) { opt.modes = v.get<std::string>(); }};

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const CLI::App* active = app.get_subcommands().front();
  const std::string name = active->get_name();

  try {
    merge_config_file(opt, tables[name]);

    const std::string fmt = resolve_format(opt, name);
    const std::string out = resolve_out(opt, name, fmt);

    std::vector<guplab::NamedArtifact> artifacts;
    if (name == "series") {
      artifacts = run_series(opt, fmt, out);
    } else if (name == "commute") {
      artifacts = run_commute(opt, fmt, out);
    } else if (name == "spectrum") {
      artifacts = run_spectrum(opt, fmt, out);
    } else if (name == "evolve") {
      artifacts = run_evolve(opt, fmt, out);
    } else if (name == "liouville") {
      artifacts = run_liouville(opt, fmt, out);
    } else if (name == "coherent") {
      artifacts = run_coherent(opt, fmt, out);
    }

    for (const guplab::NamedArtifact& artifact : artifacts) {
      guplab::write_file(artifact.path, artifact.content);
    }
    const std::string manifest =
        guplab::run_manifest_json(name, config_echo(opt, name, fmt, out).dump(), artifacts);
    const std::string manifest_path = out + ".manifest.json";
    guplab::write_file(manifest_path, manifest);

    for (const guplab::NamedArtifact& artifact : artifacts) {
      std::cout << artifact.path << "\n";
    }
    std::cout << manifest_path << "\n";
    return 0;
  } catch (const guplab::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const guplab::DomainExceeded& e) {
    std::cerr << "domain exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
