#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "guplab/dynamics.hpp"
#include "guplab/fock_algebra.hpp"
#include "guplab/liouville.hpp"
#include "guplab/optics.hpp"
#include "guplab/power_series.hpp"

// CSV/JSON artifact builders. All numeric fields use scientific notation with
// 17 significant digits so that re-runs are byte-identical.

namespace guplab {

// "%.16e"
std::string format_sci17(double x);

// FNV-1a 64-bit, lowercase hex. Used for the output checksums in run
// manifests.
std::string fnv1a64_hex(std::string_view data);

struct NamedArtifact {
  std::string path;     // as referenced in the manifest
  std::string content;  // full file body
};

// columns: n,E_numeric,E_analytic,abs_err
std::string spectrum_csv(const OscillatorParams& params, const RealVector& numeric);

// columns: q,psi0
std::string wavefunction_csv(std::span<const double> grid, const RealVector& psi);

// columns: t,q,p,P,energy. In the canonical chart with beta > 0 the p column
// is left empty for samples where the inverse map is out of domain.
std::string trajectory_csv(const Trajectory& trajectory, double guard = kDefaultDomainGuard);

// columns: t,detJ_canonical,detJ_deformed,predicted_ratio,
//          hull_area_canonical,hull_area_deformed
std::string liouville_csv(const TangentFlow& canonical, const TangentFlow& deformed,
                          const VolumeSeries& volumes);

// columns: n,P_n_numeric,P_n_analytic,abs_err
std::string coherent_csv(const CoherentSpec& spec);

// {"modes": [{"k","lambda","n","energy_contribution"}...], "total": ...}
std::string mode_energy_json(std::span<const ModeSpec> modes, double hbar, double c);

// Exact rational coefficients; only non-zero powers are listed.
std::string series_json(const PowerSeries& series, double beta, const std::string& kind);
std::string series_csv(const PowerSeries& series);

// columns: check,dim,block,residual,tolerance,pass
std::string commute_csv(std::span<const CommuteCheck> checks);

// Deterministic run manifest: config echo, library version, output
// checksums. config_echo_json must be a serialized JSON object.
std::string run_manifest_json(const std::string& subcommand, const std::string& config_echo_json,
                              std::span<const NamedArtifact> outputs);

void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace guplab
