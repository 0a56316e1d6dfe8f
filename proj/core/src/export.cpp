#include "guplab/export.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "guplab/version.hpp"

namespace guplab {

std::string format_sci17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.16e", x);
  return buf;
}

std::string fnv1a64_hex(std::string_view data) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char ch : data) {
    hash ^= ch;
    hash *= 0x100000001b3ull;
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016" PRIx64, hash);
  return buf;
}

std::string spectrum_csv(const OscillatorParams& params, const RealVector& numeric) {
  std::ostringstream out;
  out << "n,E_numeric,E_analytic,abs_err\n";
  for (Eigen::Index n = 0; n < numeric.size(); ++n) {
    const double analytic = params.hbar * params.omega * (static_cast<double>(n) + 0.5);
    out << n << ',' << format_sci17(numeric(n)) << ',' << format_sci17(analytic) << ','
        << format_sci17(std::abs(numeric(n) - analytic)) << '\n';
  }
  return out.str();
}

std::string wavefunction_csv(std::span<const double> grid, const RealVector& psi) {
  if (static_cast<Eigen::Index>(grid.size()) != psi.size()) {
    throw ValidationError("wavefunction_csv: grid/psi length mismatch");
  }
  std::ostringstream out;
  out << "q,psi0\n";
  for (std::size_t i = 0; i < grid.size(); ++i) {
    out << format_sci17(grid[i]) << ',' << format_sci17(psi(static_cast<Eigen::Index>(i)))
        << '\n';
  }
  return out.str();
}

std::string trajectory_csv(const Trajectory& trajectory, double guard) {
  std::ostringstream out;
  out << "t,q,p,P,energy\n";
  for (std::size_t i = 0; i < trajectory.size(); ++i) {
    const PhasePoint& pt = trajectory.points[i];
    std::string p_field;
    double P_value = 0.0;
    if (pt.chart == Chart::kDeformed) {
      p_field = format_sci17(pt.momentum);
      P_value = momentum_forward(pt.momentum, trajectory.params);
    } else {
      P_value = pt.momentum;
      try {
        p_field = format_sci17(momentum_inverse(pt.momentum, trajectory.params, guard));
      } catch (const DomainExceeded&) {
        p_field.clear();  // empty-marked: P outside the arctan range
      }
    }
    out << format_sci17(trajectory.times[i]) << ',' << format_sci17(pt.q) << ',' << p_field
        << ',' << format_sci17(P_value) << ',' << format_sci17(trajectory.energies[i]) << '\n';
  }
  return out.str();
}

std::string liouville_csv(const TangentFlow& canonical, const TangentFlow& deformed,
                          const VolumeSeries& volumes) {
  const std::size_t n = canonical.base.size();
  if (deformed.base.size() != n || volumes.times.size() != n) {
    throw ValidationError("liouville_csv: series lengths differ");
  }
  const std::vector<double> det_canonical = canonical.determinants();
  const std::vector<double> det_deformed = deformed.determinants();
  const std::vector<double> predicted = deformed.predicted_det_ratio();

  std::ostringstream out;
  out << "t,detJ_canonical,detJ_deformed,predicted_ratio,hull_area_canonical,hull_area_deformed\n";
  for (std::size_t i = 0; i < n; ++i) {
    out << format_sci17(canonical.base.times[i]) << ',' << format_sci17(det_canonical[i]) << ','
        << format_sci17(det_deformed[i]) << ',' << format_sci17(predicted[i]) << ','
        << format_sci17(volumes.hull_area_canonical[i]) << ','
        << format_sci17(volumes.hull_area_deformed[i]) << '\n';
  }
  return out.str();
}

std::string coherent_csv(const CoherentSpec& spec) {
  const FockState state = coherent_state(spec);
  const double mag2 = std::norm(spec.alpha);

  std::ostringstream out;
  out << "n,P_n_numeric,P_n_analytic,abs_err\n";
  double analytic = std::exp(-mag2);  // Poisson pmf via the ratio recurrence
  for (Eigen::Index n = 0; n < state.dim(); ++n) {
    if (n > 0) {
      analytic *= mag2 / static_cast<double>(n);
    }
    const double numeric = std::norm(state.amplitudes()(n));
    out << n << ',' << format_sci17(numeric) << ',' << format_sci17(analytic) << ','
        << format_sci17(std::abs(numeric - analytic)) << '\n';
  }
  return out.str();
}

std::string mode_energy_json(std::span<const ModeSpec> modes, double hbar, double c) {
  const double total = mode_energy(modes, hbar, c);  // validates
  nlohmann::json doc;
  doc["modes"] = nlohmann::json::array();
  for (const ModeSpec& mode : modes) {
    doc["modes"].push_back({{"k", mode.k},
                            {"lambda", mode.lambda_pol},
                            {"n", mode.occupancy},
                            {"energy_contribution",
                             hbar * c * mode.k * (static_cast<double>(mode.occupancy) + 0.5)}});
  }
  doc["total"] = total;
  return doc.dump(2) + "\n";
}

std::string series_json(const PowerSeries& series, double beta, const std::string& kind) {
  nlohmann::json doc;
  doc["series"] = kind;
  doc["beta"] = beta;
  doc["max_order"] = series.max_order();
  doc["coefficients"] = nlohmann::json::array();
  for (int power = 0; power <= series.max_order(); ++power) {
    const Rational& coeff = series.coeff(power);
    if (coeff == 0) continue;
    doc["coefficients"].push_back(
        {{"power", power},
         {"numerator", boost::multiprecision::numerator(coeff).str()},
         {"denominator", boost::multiprecision::denominator(coeff).str()}});
  }
  return doc.dump(2) + "\n";
}

std::string series_csv(const PowerSeries& series) {
  std::ostringstream out;
  out << "power,numerator,denominator\n";
  for (int power = 0; power <= series.max_order(); ++power) {
    const Rational& coeff = series.coeff(power);
    if (coeff == 0) continue;
    out << power << ',' << boost::multiprecision::numerator(coeff).str() << ','
        << boost::multiprecision::denominator(coeff).str() << '\n';
  }
  return out.str();
}

std::string commute_csv(std::span<const CommuteCheck> checks) {
  std::ostringstream out;
  out << "check,dim,block,residual,tolerance,pass\n";
  for (const CommuteCheck& check : checks) {
    out << check.name << ',' << check.dim << ',' << check.block << ','
        << format_sci17(check.residual) << ',' << format_sci17(check.tolerance) << ','
        << (check.pass ? "true" : "false") << '\n';
  }
  return out.str();
}

std::string run_manifest_json(const std::string& subcommand, const std::string& config_echo_json,
                              std::span<const NamedArtifact> outputs) {
  nlohmann::json doc;
  doc["subcommand"] = subcommand;
  doc["config"] = nlohmann::json::parse(config_echo_json);
  doc["version"] = kVersion;
  doc["outputs"] = nlohmann::json::array();
  for (const NamedArtifact& artifact : outputs) {
    doc["outputs"].push_back({{"path", artifact.path},
                              {"bytes", artifact.content.size()},
                              {"fnv1a64", fnv1a64_hex(artifact.content)}});
  }
  return doc.dump(2) + "\n";
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("write_file: cannot open " + path.string());
  }
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) {
    throw std::runtime_error("write_file: write failed for " + path.string());
  }
}

}  // namespace guplab
