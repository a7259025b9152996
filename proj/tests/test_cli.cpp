// Copyright 2026 The qwalk authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#ifndef QWALK_CLI_PATH
#error "QWALK_CLI_PATH must point at the built CLI binary"
#endif

namespace {

using json = nlohmann::json;

std::string scratch_path(const std::string& name) {
  return std::string("cli_scratch_") + name;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(QWALK_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  if (status < 0) return -1;
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Parses a distribution CSV into (x, p) pairs, skipping comments and header.
std::vector<std::pair<long, double>> parse_distribution(const std::string& body) {
  std::vector<std::pair<long, double>> rows;
  std::istringstream in(body);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line.rfind("x,", 0) == 0) continue;
    std::istringstream ls(line);
    std::string cell;
    std::getline(ls, cell, ',');
    const long x = std::stol(cell);
    std::getline(ls, cell, ',');
    rows.emplace_back(x, std::stod(cell));
  }
  return rows;
}

}  // namespace

TEST_CASE("cli evolve writes a normalized 401-row distribution") {
  const std::string out = scratch_path("evolve.csv");
  REQUIRE(run_cli("evolve --theta 0.25pi --det -1 --p 0.1 --t 200 --init R --threads 2 --output " +
                  out) == 0);
  const auto rows = parse_distribution(slurp(out));
  CHECK(rows.size() == 401);
  double mass = 0;
  for (const auto& [x, p] : rows) mass += p;
  CHECK(std::abs(mass - 1.0) < 1e-9);
  std::remove(out.c_str());
}

TEST_CASE("cli evolve rejects an out-of-range decoherence rate") {
  CHECK(run_cli("evolve --p 2 --theta 0.25pi --t 5") == 2);
}

TEST_CASE("cli evolve at p = 1 produces the binomial column") {
  const std::string out = scratch_path("binom.csv");
  REQUIRE(run_cli("evolve --p 1 --theta 0.25pi --t 10 --output " + out) == 0);
  const auto rows = parse_distribution(slurp(out));
  auto binom = [](int n, int l) {
    double b = 1;
    for (int i = 0; i < l; ++i) b = b * (n - i) / (i + 1);
    return b;
  };
  for (const auto& [x, p] : rows) {
    const double expect = (x + 10) % 2 == 0 ? binom(10, static_cast<int>((x + 10) / 2)) / 1024.0 : 0.0;
    CHECK(std::abs(p - expect) < 1e-10);
  }
  std::remove(out.c_str());
}

TEST_CASE("cli evolve density method respects the resource cap") {
  CHECK(run_cli("evolve --theta 0.25pi --p 0.5 --t 80 --method density") == 4);
}

TEST_CASE("cli spectrum reports the ballistic degenerate case") {
  const std::string out = scratch_path("spectrum.json");
  REQUIRE(run_cli("spectrum --theta 0 --det 1 --p 0.5 --output " + out) == 0);
  const json doc = json::parse(slurp(out));
  CHECK(doc["results"]["dim_one"] == 2);
  CHECK(doc["results"]["mult_one"] == 2);
  CHECK(doc["results"]["theorem_applies"] == false);
  CHECK(doc["results"]["degenerate_case"] == "ballistic");
  std::remove(out.c_str());
}

TEST_CASE("cli moments emits the closed-form table") {
  const std::string out = scratch_path("moments.csv");
  REQUIRE(run_cli("moments --theta 0.25pi --p 0.5 --max-order 4 --output " + out) == 0);
  std::istringstream in(slurp(out));
  std::string line;
  std::vector<double> values;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line.rfind("order,", 0) == 0) continue;
    std::istringstream ls(line);
    std::string cell;
    std::getline(ls, cell, ',');
    std::getline(ls, cell, ',');
    values.push_back(std::stod(cell));
  }
  REQUIRE(values.size() == 5);
  CHECK(std::abs(values[2] - 5.0 / 3.0) < 1e-12);
  CHECK(values[3] == 0.0);
  CHECK(std::abs(values[4] - 11.0) < 1e-10);
  std::remove(out.c_str());
}

TEST_CASE("cli exponent fits the first critical exponent") {
  const std::string out = scratch_path("exponent.json");
  REQUIRE(run_cli("exponent --theta 0.25pi --order 2 --p-list 1e-3,1e-4,1e-5 --output " + out) ==
          0);
  const json doc = json::parse(slurp(out));
  CHECK(std::abs(doc["results"]["slope"].get<double>() - 1.0) < 0.02);
  std::remove(out.c_str());
}

TEST_CASE("cli output is deterministic and config files round trip") {
  const std::string out1 = scratch_path("det1.csv");
  const std::string out2 = scratch_path("det2.csv");
  const std::string flags = "evolve --theta 0.25pi --det -1 --p 0.3 --t 24 --init mixed";
  REQUIRE(run_cli(flags + " --output " + out1) == 0);
  REQUIRE(run_cli(flags + " --output " + out2) == 0);
  CHECK(slurp(out1) == slurp(out2));

  // The same run driven by a config file (flags give only the output path).
  const std::string cfg = scratch_path("cfg.json");
  {
    std::ofstream c(cfg);
    c << R"({"command": "evolve", "theta": "0.25pi", "det": -1, "p": 0.3, "t": 24,)"
      << R"( "init": "mixed"})";
  }
  const std::string out3 = scratch_path("det3.csv");
  REQUIRE(run_cli("evolve --config " + cfg + " --output " + out3) == 0);
  // Identical numeric payload: every non-comment line matches.
  auto strip = [](const std::string& body) {
    std::istringstream in(body);
    std::string line, kept;
    while (std::getline(in, line))
      if (line.empty() || line[0] != '#') kept += line + "\n";
    return kept;
  };
  CHECK(strip(slurp(out1)) == strip(slurp(out3)));
  std::remove(out1.c_str());
  std::remove(out2.c_str());
  std::remove(out3.c_str());
  std::remove(cfg.c_str());
}

TEST_CASE("cli rejects unknown config fields") {
  const std::string cfg = scratch_path("bad_cfg.json");
  {
    std::ofstream c(cfg);
    c << R"({"command": "evolve", "t": 5, "nonsense": 1})";
  }
  CHECK(run_cli("evolve --config " + cfg) == 2);
  std::remove(cfg.c_str());
}

TEST_CASE("cli trajectories is reproducible under a fixed seed") {
  const std::string out1 = scratch_path("traj1.csv");
  const std::string out2 = scratch_path("traj2.csv");
  const std::string flags =
      "trajectories --theta 0.25pi --p 0.5 --t 10 --n-samples 20000 --seed 42 --init R";
  REQUIRE(run_cli(flags + " --output " + out1) == 0);
  REQUIRE(run_cli(flags + " --output " + out2) == 0);
  CHECK(slurp(out1) == slurp(out2));
  // Seed column is recorded.
  CHECK(slurp(out1).find(",42") != std::string::npos);
  std::remove(out1.c_str());
  std::remove(out2.c_str());
}

TEST_CASE("cli converge emits the error sequence") {
  const std::string out = scratch_path("conv.json");
  REQUIRE(run_cli("converge --theta 0.25pi --p 0.5 --t-list 25,100 --nu-list 0.5,1 "
                  "--model-k-grid 64 --threads 2 --output " + out) == 0);
  const json doc = json::parse(slurp(out));
  REQUIRE(doc["results"]["results"].size() == 2);
  CHECK(doc["results"]["results"][0]["t"] == 25);
  CHECK(doc["results"]["results"][0]["max_err"].get<double>() > 0.0);
  std::remove(out.c_str());
}

TEST_CASE("cli limit emits the variance curve") {
  const std::string out = scratch_path("limit.csv");
  REQUIRE(run_cli("limit --theta 0.25pi --p 0.5 --model-k-grid 32 --output " + out) == 0);
  std::istringstream in(slurp(out));
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line.rfind("k,", 0) == 0) continue;
    ++rows;
    const auto comma = line.find(',');
    const double k = std::stod(line.substr(0, comma));
    const double v = std::stod(line.substr(comma + 1));
    const double q = 0.5;
    const double expect = (1.0 + 2.0 * q * std::cos(2.0 * k) + q * q) / (1.0 - q * q);
    CHECK(std::abs(v - expect) / expect < 1e-6);
  }
  CHECK(rows == 32);
  std::remove(out.c_str());
}
