#include <algorithm>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

#include "guplab/export.hpp"

using namespace guplab;

TEST_CASE("format_sci17: 17 significant digits, scientific") {
  CHECK(format_sci17(0.5) == "5.0000000000000000e-01");
  CHECK(format_sci17(-1.0) == "-1.0000000000000000e+00");
  CHECK(format_sci17(1.0 / 3.0) == "3.3333333333333331e-01");
}

TEST_CASE("fnv1a64_hex: reference vectors") {
  CHECK(fnv1a64_hex("") == "cbf29ce484222325");
  CHECK(fnv1a64_hex("a") == "af63dc4c8601ec8c");
  CHECK(fnv1a64_hex("foobar") == "85944171f73967e8");
}

TEST_CASE("spectrum_csv: header and first row") {
  RealVector numeric(3);
  numeric << 0.5, 1.5, 2.5;
  const std::string csv = spectrum_csv(natural_units(), numeric);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "n,E_numeric,E_analytic,abs_err");
  std::getline(in, line);
  CHECK(line ==
        "0,5.0000000000000000e-01,5.0000000000000000e-01,0.0000000000000000e+00");
}

TEST_CASE("trajectory_csv: empty p column when the inverse map leaves its domain") {
  Trajectory traj;
  traj.params = natural_units(1.0);
  traj.chart = Chart::kCanonical;
  traj.times = {0.0, 1.0};
  traj.points = {PhasePoint{Chart::kCanonical, 1.0, 0.5},
                 PhasePoint{Chart::kCanonical, 1.0, 2.0}};  // 2.0 > (pi/2)(0.95)
  traj.energies = {energy(traj.points[0], traj.params), energy(traj.points[1], traj.params)};

  const std::string csv = trajectory_csv(traj);
  std::istringstream in(csv);
  std::string header, row0, row1;
  std::getline(in, header);
  std::getline(in, row0);
  std::getline(in, row1);
  CHECK(header == "t,q,p,P,energy");
  CHECK(row0.find(",,") == std::string::npos);
  CHECK(row1.find(",,") != std::string::npos);
}

TEST_CASE("liouville_csv: rejects mismatched series") {
  const OscillatorParams params = natural_units(0.1);
  const TangentFlow canonical =
      tangent_integrate(PhasePoint{Chart::kCanonical, 1.0, 0.0}, params, 0.1, 0.01);
  const TangentFlow deformed =
      tangent_integrate(PhasePoint{Chart::kDeformed, 1.0, 0.0}, params, 0.1, 0.01);
  VolumeSeries wrong;
  wrong.times = {0.0};
  wrong.hull_area_canonical = {1.0};
  wrong.hull_area_deformed = {1.0};
  CHECK_THROWS_AS(liouville_csv(canonical, deformed, wrong), ValidationError);
}

TEST_CASE("liouville_csv: header and column count") {
  const OscillatorParams params = natural_units(0.1);
  const TangentFlow canonical =
      tangent_integrate(PhasePoint{Chart::kCanonical, 1.0, 0.5}, params, 0.1, 0.01);
  const TangentFlow deformed =
      tangent_integrate(PhasePoint{Chart::kDeformed, 1.0, 0.5}, params, 0.1, 0.01);
  const Ensemble ensemble = disc_ensemble(Chart::kDeformed, 1.0, 0.5, 0.05, 64, 1);
  const VolumeSeries volumes = ensemble_volume(ensemble, params, 0.1, 0.01);

  const std::string csv = liouville_csv(canonical, deformed, volumes);
  std::istringstream in(csv);
  std::string header;
  std::getline(in, header);
  CHECK(header ==
        "t,detJ_canonical,detJ_deformed,predicted_ratio,hull_area_canonical,hull_area_deformed");
  std::string row;
  std::getline(in, row);
  CHECK(std::count(row.begin(), row.end(), ',') == 5);
}

TEST_CASE("coherent_csv: numeric column matches analytic within export tolerance") {
  const std::string csv = coherent_csv(CoherentSpec{Complex(1.0, 0.0), 32});
  std::istringstream in(csv);
  std::string header;
  std::getline(in, header);
  CHECK(header == "n,P_n_numeric,P_n_analytic,abs_err");
  int rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  CHECK(rows == 32);
}

TEST_CASE("mode_energy_json: totals and per-mode terms") {
  const std::vector<ModeSpec> modes{{1.0, 1, 0}, {2.0, 1, 1}};
  const nlohmann::json doc = nlohmann::json::parse(mode_energy_json(modes, 1.0, 1.0));
  CHECK(doc["total"].get<double>() == 3.5);
  CHECK(doc["modes"].size() == 2);
  CHECK(doc["modes"][0]["energy_contribution"].get<double>() == 0.5);
  CHECK(doc["modes"][1]["energy_contribution"].get<double>() == 3.0);
}

TEST_CASE("series_json / series_csv: exact rationals, only non-zero powers") {
  const PowerSeries sq = series_P_squared(natural_units(1.0), 10);
  const nlohmann::json doc = nlohmann::json::parse(series_json(sq, 1.0, "P_squared"));
  CHECK(doc["series"] == "P_squared");
  REQUIRE(doc["coefficients"].size() == 5);
  CHECK(doc["coefficients"][4]["numerator"] == "563");
  CHECK(doc["coefficients"][4]["denominator"] == "1575");
  CHECK(doc["coefficients"][4]["power"] == 10);

  const std::string csv = series_csv(sq);
  CHECK(csv.find("10,563,1575\n") != std::string::npos);
  CHECK(csv.find("4,-2,3\n") != std::string::npos);
}

TEST_CASE("commute_csv: one row per check") {
  const std::vector<CommuteCheck> checks = run_commute_checks(natural_units(), 8);
  const std::string csv = commute_csv(checks);
  std::istringstream in(csv);
  std::string header;
  std::getline(in, header);
  CHECK(header == "check,dim,block,residual,tolerance,pass");
  int rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  CHECK(rows == static_cast<int>(checks.size()));
}

TEST_CASE("run_manifest_json: checksums match the artifact bodies") {
  const std::vector<NamedArtifact> artifacts{{"a.csv", "x,y\n1,2\n"}, {"b.json", "{}\n"}};
  const nlohmann::json doc =
      nlohmann::json::parse(run_manifest_json("spectrum", R"({"dim":64})", artifacts));
  CHECK(doc["subcommand"] == "spectrum");
  CHECK(doc["config"]["dim"] == 64);
  CHECK(doc["version"].is_string());
  REQUIRE(doc["outputs"].size() == 2);
  CHECK(doc["outputs"][0]["fnv1a64"] == fnv1a64_hex("x,y\n1,2\n"));
  CHECK(doc["outputs"][0]["bytes"] == 8);
}
