// End-to-end checks of the guplab CLI binary: artifact schemas, exit codes,
// config-file precedence and byte-level determinism. The binary path comes in
// through the GUPLAB_CLI_PATH compile definition.

#include <cstdlib>
#include <sys/wait.h>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

#include "guplab/export.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const char* cli_path() { return GUPLAB_CLI_PATH; }

int run_cli(const std::string& args) {
  const std::string cmd = std::string("'") + cli_path() + "' " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag) {
    path = fs::temp_directory_path() / ("guplab_test_" + tag);
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("cli: series emits the exact P^2 rationals") {
  const TempDir dir("series");
  const std::string out = dir.file("series.json");
  REQUIRE(run_cli("series --beta 1 --order 10 --out " + out) == 0);

  const json doc = json::parse(slurp(out));
  CHECK(doc["series"] == "P_squared");
  REQUIRE(doc["coefficients"].size() == 5);
  const std::vector<std::pair<std::string, std::string>> expected{
      {"1", "1"}, {"-2", "3"}, {"23", "45"}, {"-44", "105"}, {"563", "1575"}};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(doc["coefficients"][i]["numerator"] == expected[i].first);
    CHECK(doc["coefficients"][i]["denominator"] == expected[i].second);
  }

  // manifest references the artifact with a matching checksum
  const json manifest = json::parse(slurp(out + ".manifest.json"));
  CHECK(manifest["outputs"][0]["fnv1a64"] == guplab::fnv1a64_hex(slurp(out)));
}

TEST_CASE("cli: spectrum first row is the ground state") {
  const TempDir dir("spectrum");
  const std::string out = dir.file("spectrum.csv");
  REQUIRE(run_cli("spectrum --dim 64 --out " + out) == 0);

  std::istringstream in(slurp(out));
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  CHECK(header == "n,E_numeric,E_analytic,abs_err");
  std::istringstream cells(row);
  std::string n, e_num, e_ana;
  std::getline(cells, n, ',');
  std::getline(cells, e_num, ',');
  std::getline(cells, e_ana, ',');
  CHECK(n == "0");
  CHECK(std::abs(std::stod(e_num) - 0.5) <= 1e-8);
  CHECK(std::stod(e_ana) == 0.5);
}

TEST_CASE("cli: spectrum can export the ground-state wavefunction") {
  const TempDir dir("psi0");
  const std::string out = dir.file("spectrum.csv");
  REQUIRE(run_cli("spectrum --dim 16 --psi0-points 101 --out " + out) == 0);
  const std::string psi = slurp(dir.file("spectrum_psi0.csv"));
  CHECK(psi.rfind("q,psi0\n", 0) == 0);
}

TEST_CASE("cli: liouville with beta 0 keeps detJ at 1") {
  const TempDir dir("liouville");
  const std::string out = dir.file("liouville.csv");
  REQUIRE(run_cli("liouville --beta 0 --q0 1 --mom0 0 --t-end 6.2832 --out " + out) == 0);

  std::istringstream in(slurp(out));
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    std::istringstream cells(line);
    std::string t, det_c, det_d;
    std::getline(cells, t, ',');
    std::getline(cells, det_c, ',');
    std::getline(cells, det_d, ',');
    CHECK(std::abs(std::stod(det_c) - 1.0) <= 1e-8);
    CHECK(std::abs(std::stod(det_d) - 1.0) <= 1e-8);
  }
}

TEST_CASE("cli: exit codes") {
  const TempDir dir("exits");
  // unknown flag -> validation
  CHECK(run_cli("series --no-such-flag 1") == 2);
  // coherent dim below the tail rule -> validation
  CHECK(run_cli("coherent --alpha 2,0 --dim 32 --out " + dir.file("c.csv")) == 2);
  // canonical start outside the arctan range -> domain exceeded
  CHECK(run_cli("liouville --chart canonical --beta 1 --mom0 2 --t-end 1 --out " +
                dir.file("l.csv")) == 3);
  // evolve leapfrog in the deformed chart -> validation
  CHECK(run_cli("evolve --chart deformed --method leapfrog --beta 0.1 --out " +
                dir.file("e.csv")) == 2);
}

TEST_CASE("cli: config file with flag precedence and unknown-key rejection") {
  const TempDir dir("config");
  const std::string cfg = dir.file("run.json");
  {
    std::ofstream out(cfg);
    out << R"({"beta": 1.0, "order": 10, "format": "json"})";
  }
  const std::string out1 = dir.file("a.json");
  REQUIRE(run_cli("series --config " + cfg + " --out " + out1) == 0);
  const json doc1 = json::parse(slurp(out1));
  CHECK(doc1["beta"] == 1.0);
  CHECK(doc1["coefficients"].size() == 5);

  // the command line overrides the config file
  const std::string out2 = dir.file("b.json");
  REQUIRE(run_cli("series --config " + cfg + " --order 6 --out " + out2) == 0);
  const json doc2 = json::parse(slurp(out2));
  CHECK(doc2["max_order"] == 6);

  // unknown keys are rejected
  const std::string bad = dir.file("bad.json");
  {
    std::ofstream out(bad);
    out << R"({"betta": 1.0})";
  }
  CHECK(run_cli("series --config " + bad + " --out " + dir.file("c.json")) == 2);
}

TEST_CASE("cli: byte-identical artifacts on re-run") {
  const TempDir dir("determinism");
  const std::string t_end = " --t-end 6.2832 ";

  const std::vector<std::pair<std::string, std::string>> runs{
      {"series --beta 1 --order 10", "series.json"},
      {"commute --dim 16 --beta 0.05", "commute.csv"},
      {"spectrum --dim 32 --psi0-points 64", "spectrum.csv"},
      {"evolve --chart deformed --beta 0.2 --q0 1 --mom0 1" + t_end, "evolve.csv"},
      {"liouville --chart deformed --beta 0.2 --q0 1 --mom0 1 --seed 42" + t_end,
       "liouville.csv"},
      {"coherent --alpha 2,0 --dim 64 --modes 1:1:0,2:1:1", "coherent.csv"},
  };
  for (const auto& [args, artifact] : runs) {
    INFO(args);
    const std::string out = dir.file(artifact);
    REQUIRE(run_cli(args + " --out " + out) == 0);
    const std::string first = slurp(out);
    const std::string first_manifest = slurp(out + ".manifest.json");
    REQUIRE(run_cli(args + " --out " + out) == 0);
    CHECK(slurp(out) == first);
    CHECK(slurp(out + ".manifest.json") == first_manifest);
  }
}
