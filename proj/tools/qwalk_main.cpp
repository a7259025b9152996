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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qwalk/errors.hpp"
#include "qwalk/evolution.hpp"
#include "qwalk/scaling_limit.hpp"
#include "qwalk/spectral.hpp"
#include "qwalk/version.hpp"

using json = nlohmann::ordered_json;
using namespace qwalk;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Angles are accepted as literal radians or as "<x>pi" multiples; the "pi"
// form parses the degenerate cases exactly.
double parse_angle(const std::string& text) {
  std::string s = text;
  double factor = 1.0;
  bool has_pi = false;
  if (s.size() >= 2 && s.substr(s.size() - 2) == "pi") {
    has_pi = true;
    s = s.substr(0, s.size() - 2);
    factor = kPi;
  }
  if (s.empty() || s == "+" || s == "-") {
    if (!has_pi) throw validation_error("angle: cannot parse '" + text + "'");
    return s == "-" ? -kPi : kPi;
  }
  std::size_t pos = 0;
  double value;
  try {
    value = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw validation_error("angle: cannot parse '" + text + "'");
  }
  if (pos != s.size()) throw validation_error("angle: trailing characters in '" + text + "'");
  return value * factor;
}

std::vector<double> parse_double_list(const std::string& text, const char* field) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw validation_error(std::string(field) + ": cannot parse '" + item + "'");
    }
  }
  if (out.empty()) throw validation_error(std::string(field) + ": empty list");
  return out;
}

std::vector<long> parse_long_list(const std::string& text, const char* field) {
  std::vector<long> out;
  for (const double v : parse_double_list(text, field)) out.push_back(static_cast<long>(v));
  return out;
}

//----------------------------------------------------------------------------
// Resolved configuration shared by all commands
//----------------------------------------------------------------------------

struct Options {
  // Coin and channel.
  std::string theta = "0.25pi";
  int det = -1;
  std::string coin_matrix;  // 8 comma-separated reals, row-major re,im pairs
  double p = 0.5;
  std::string init = "R";
  int k_grid = 0;
  int threads = 0;
  std::string output = "-";
  std::string format;  // empty = command default

  // Per-command extras.
  long t = 0;
  std::string method = "fourier";
  double k = 0.0;
  int gap_grid = 0;
  int model_k_grid = 256;
  int max_order = 8;
  int order = 2;
  std::string p_list = "1e-3,1e-4,1e-5";
  std::string t_list = "100,400,1600";
  std::string nu_list = "0.5,1,2";
  std::string x_list;
  std::uint64_t n_samples = 100000;
  std::uint64_t seed = 1;
  int workers = 1;

  CoinOperator resolve_coin() const {
    if (!coin_matrix.empty()) {
      const std::vector<double> v = parse_double_list(coin_matrix, "coin-matrix");
      if (v.size() != 8)
        throw validation_error("coin-matrix: expected 8 values (re,im per entry, row-major)");
      Mat2 m;
      for (int i = 0; i < 4; ++i)
        m.a[static_cast<std::size_t>(i)] = cplx(v[static_cast<std::size_t>(2 * i)],
                                                v[static_cast<std::size_t>(2 * i + 1)]);
      return coin_from_u2(m);
    }
    if (det != 1 && det != -1) throw validation_error("det: must be +1 or -1");
    return coin_o2(parse_angle(theta), det);
  }

  InitialCoinState resolve_init() const {
    if (init == "R") return InitialCoinState::right();
    if (init == "L") return InitialCoinState::left();
    if (init == "mixed") return InitialCoinState::mixed();
    if (init.rfind("bloch:", 0) == 0) {
      const std::vector<double> n = parse_double_list(init.substr(6), "init");
      if (n.size() != 3) throw validation_error("init: bloch form needs 3 components");
      return InitialCoinState::bloch(n[0], n[1], n[2]);
    }
    throw validation_error("init: expected R, L, mixed or bloch:x,y,z, got '" + init + "'");
  }

  std::array<cplx, 2> resolve_pure_init() const {
    const InitialCoinState state = resolve_init();
    if (!state.amplitudes())
      throw validation_error("init: this command needs a pure coin state (R, L or unit bloch)");
    return *state.amplitudes();
  }

  void validate_p() const {
    if (!(p >= 0.0 && p <= 1.0))
      throw validation_error("p: decoherence rate must lie in [0, 1], got " + fmt(p));
  }
};

json config_json(const std::string& command, const Options& o) {
  json c;
  c["command"] = command;
  if (o.coin_matrix.empty()) {
    c["theta"] = o.theta;
    c["det"] = o.det;
  } else {
    c["coin_matrix"] = o.coin_matrix;
  }
  c["p"] = o.p;
  c["init"] = o.init;
  c["k_grid"] = o.k_grid;
  c["threads"] = o.threads;
  c["format"] = o.format;
  if (command == "evolve") {
    c["t"] = o.t;
    c["method"] = o.method;
  } else if (command == "spectrum") {
    c["k"] = o.k;
    c["gap_grid"] = o.gap_grid;
  } else if (command == "limit") {
    c["model_k_grid"] = o.model_k_grid;
    if (!o.nu_list.empty()) c["nu_list"] = o.nu_list;
    if (!o.x_list.empty()) c["x_list"] = o.x_list;
  } else if (command == "moments") {
    c["max_order"] = o.max_order;
    c["model_k_grid"] = o.model_k_grid;
  } else if (command == "exponent") {
    c["order"] = o.order;
    c["p_list"] = o.p_list;
  } else if (command == "converge") {
    c["t_list"] = o.t_list;
    c["nu_list"] = o.nu_list;
    c["model_k_grid"] = o.model_k_grid;
  } else if (command == "trajectories") {
    c["t"] = o.t;
    c["n_samples"] = o.n_samples;
    c["seed"] = o.seed;
    c["workers"] = o.workers;
  }
  return c;
}

//----------------------------------------------------------------------------
// Output plumbing
//----------------------------------------------------------------------------

void write_text(const std::string& path, const std::string& body) {
  if (path == "-") {
    std::cout << body;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw validation_error("output: cannot open '" + path + "'");
  out << body;
}

std::string json_document(const json& config, const json& results) {
  json doc;
  doc["version"] = std::string(kToolName) + " " + kVersion;
  doc["config"] = config;
  doc["results"] = results;
  return doc.dump(2) + "\n";
}

std::string csv_preamble(const json& config) {
  return std::string("# version: ") + kToolName + " " + kVersion + "\n" +
         "# config: " + config.dump() + "\n";
}

std::string distribution_csv(const DistributionTable& table, const Options& o, const json& config) {
  const CoinOperator coin = o.resolve_coin();
  std::string theta_col, det_col;
  if (coin.o2_form) {
    theta_col = fmt(coin.o2_form->theta);
    det_col = std::to_string(coin.o2_form->det_sign);
  }
  std::string seed_col;
  if (table.method == Method::monte_carlo) seed_col = std::to_string(table.seed);

  std::string body = csv_preamble(config);
  body += "x,p,method,t,theta,det_sign,p_dec,seed\n";
  for (long x = -table.t; x <= table.t; ++x) {
    body += std::to_string(x) + "," + fmt(table.prob(x)) + "," + method_name(table.method) + "," +
            std::to_string(table.t) + "," + theta_col + "," + det_col + "," + fmt(o.p) + "," +
            seed_col + "\n";
  }
  return body;
}

json distribution_json(const DistributionTable& table) {
  json r;
  r["t"] = table.t;
  r["method"] = method_name(table.method);
  r["total"] = table.total;
  r["clipped_mass"] = table.clipped_mass;
  r["max_imag_residue"] = table.max_imag_residue;
  if (table.method == Method::monte_carlo) {
    r["mc_samples"] = table.mc_samples;
    r["seed"] = table.seed;
    r["workers"] = table.workers;
    r["rng"] = table.rng_id;
  }
  json probs = json::array();
  for (long x = -table.t; x <= table.t; ++x)
    probs.push_back(json::array({x, table.prob(x)}));
  r["probs"] = probs;
  return r;
}

//----------------------------------------------------------------------------
// Commands
//----------------------------------------------------------------------------

void cmd_evolve(const Options& o) {
  o.validate_p();
  if (o.t < 1) throw validation_error("t: must be >= 1");
  const DecoherentWalk walk = projective_walk(o.resolve_coin(), o.p);
  const InitialCoinState init = o.resolve_init();

  DistributionTable table;
  if (o.method == "fourier") {
    table = distribution_fourier(walk, o.t, init, o.k_grid, o.threads);
  } else if (o.method == "density") {
    table = distribution_density_matrix(walk, o.t, init);
  } else {
    throw validation_error("method: expected fourier or density, got '" + o.method + "'");
  }
  if (table.clipped_mass > 0)
    std::cerr << "warning: clipped " << fmt(table.clipped_mass) << " negative mass\n";

  const json config = config_json("evolve", o);
  if (o.format == "json")
    write_text(o.output, json_document(config, distribution_json(table)));
  else
    write_text(o.output, distribution_csv(table, o, config));
}

void cmd_spectrum(const Options& o) {
  o.validate_p();
  const CoinOperator coin = o.resolve_coin();
  const SpectralReport rep = classify(coin, o.p, o.k);

  json r;
  r["k"] = rep.k;
  r["p"] = rep.p;
  json eigs = json::array();
  for (const auto& l : rep.eigenvalues) eigs.push_back(json::array({l.real(), l.imag()}));
  r["eigenvalues"] = eigs;
  json peri = json::array();
  for (const auto& l : rep.peripheral) peri.push_back(json::array({l.real(), l.imag()}));
  r["peripheral"] = peri;
  r["mult_one"] = rep.mult_one;
  r["dim_one"] = rep.dim_one;
  r["has_minus_one"] = rep.has_minus_one;
  r["theorem_applies"] = rep.theorem_applies;
  switch (rep.degenerate_case) {
    case DegenerateCase::none: r["degenerate_case"] = "none"; break;
    case DegenerateCase::ballistic: r["degenerate_case"] = "ballistic"; break;
    case DegenerateCase::oscillatory: r["degenerate_case"] = "oscillatory"; break;
  }
  if (o.gap_grid > 0)
    r["peripheral_gap"] = peripheral_gap(coin, o.p, o.gap_grid, o.threads);

  write_text(o.output, json_document(config_json("spectrum", o), r));
}

void cmd_limit(const Options& o) {
  o.validate_p();
  const LimitModel model = build_limit_model(o.resolve_coin(), o.p, o.model_k_grid);
  const json config = config_json("limit", o);

  if (o.format == "json") {
    json r;
    r["k_grid"] = model.k_grid;
    json curve = json::array();
    for (int j = 0; j < model.k_grid; ++j)
      curve.push_back(json::array(
          {2.0 * kPi * j / model.k_grid, model.variance_curve[static_cast<std::size_t>(j)]}));
    r["variance_curve"] = curve;
    if (model.closed_form) {
      r["closed_form"] = json{{"theta", model.closed_form->theta},
                              {"q", model.closed_form->q},
                              {"k_shift", model.closed_form->k_shift}};
    } else {
      r["closed_form"] = nullptr;
    }
    if (!o.nu_list.empty()) {
      json cf = json::array();
      for (const double nu : parse_double_list(o.nu_list, "nu-list"))
        cf.push_back(json::array({nu, limit_char_fn(model, nu)}));
      r["char_fn"] = cf;
    }
    if (!o.x_list.empty()) {
      json dens = json::array();
      for (const double x : parse_double_list(o.x_list, "x-list"))
        dens.push_back(json::array({x, limit_density(model, x)}));
      r["density"] = dens;
    }
    write_text(o.output, json_document(config, r));
    return;
  }

  std::string body = csv_preamble(config);
  body += "k,variance\n";
  for (int j = 0; j < model.k_grid; ++j)
    body += fmt(2.0 * kPi * j / model.k_grid) + "," +
            fmt(model.variance_curve[static_cast<std::size_t>(j)]) + "\n";
  write_text(o.output, body);
}

void cmd_moments(const Options& o) {
  o.validate_p();
  const CoinOperator coin = o.resolve_coin();
  MomentTable table;
  std::string route;
  if (coin.o2_form && !theta_is_degenerate(coin.o2_form->theta, default_tolerances().theta_degenerate)) {
    table = moments_closed(coin.o2_form->theta, 1.0 - o.p, o.max_order);
    route = "closed_form";
  } else {
    table = moments_numeric(build_limit_model(coin, o.p, o.model_k_grid), o.max_order);
    route = "numeric";
  }

  const json config = config_json("moments", o);
  if (o.format == "json") {
    json r;
    r["route"] = route;
    json rows = json::array();
    for (std::size_t i = 0; i < table.orders.size(); ++i)
      rows.push_back(json{{"order", table.orders[i]},
                          {"value", table.values[i]},
                          {"tn", table.tn_values[i]}});
    r["moments"] = rows;
    write_text(o.output, json_document(config, r));
    return;
  }
  std::string body = csv_preamble(config);
  body += "order,value,tn\n";
  for (std::size_t i = 0; i < table.orders.size(); ++i)
    body += std::to_string(table.orders[i]) + "," + fmt(table.values[i]) + "," +
            fmt(table.tn_values[i]) + "\n";
  write_text(o.output, body);
}

void cmd_exponent(const Options& o) {
  const CoinOperator coin = o.resolve_coin();
  if (!coin.o2_form)
    throw validation_error("exponent: closed-form exponents need an O(2) coin (theta/det)");
  const std::vector<double> ps = parse_double_list(o.p_list, "p-list");
  const double slope = critical_exponent(coin.o2_form->theta, o.order, ps);

  json r;
  r["order"] = o.order;
  json samples = json::array();
  for (const double p : ps) {
    const MomentTable table = moments_closed(coin.o2_form->theta, 1.0 - p, o.order);
    samples.push_back(json::array({p, table.values[static_cast<std::size_t>(o.order)]}));
  }
  r["samples"] = samples;
  r["slope"] = slope;
  write_text(o.output, json_document(config_json("exponent", o), r));
}

void cmd_converge(const Options& o) {
  o.validate_p();
  const ConvergenceReport rep =
      convergence_study(o.resolve_coin(), o.p, o.resolve_init(), parse_long_list(o.t_list, "t-list"),
                        parse_double_list(o.nu_list, "nu-list"), o.model_k_grid, o.threads);
  json results = json::array();
  for (std::size_t i = 0; i < rep.t_list.size(); ++i) {
    json row;
    row["t"] = rep.t_list[i];
    row["max_err"] = rep.max_err[i];
    json per_nu = json::array();
    for (std::size_t j = 0; j < rep.nu_list.size(); ++j)
      per_nu.push_back(json::array({rep.nu_list[j], rep.per_nu[i][j]}));
    row["per_nu"] = per_nu;
    results.push_back(row);
  }
  json r;
  r["results"] = results;
  r["decreasing"] = rep.decreasing;
  write_text(o.output, json_document(config_json("converge", o), r));
}

void cmd_trajectories(const Options& o) {
  o.validate_p();
  if (o.t < 1) throw validation_error("t: must be >= 1");
  const DecoherentWalk walk = projective_walk(o.resolve_coin(), o.p);
  const DistributionTable table =
      trajectories(walk, o.t, o.resolve_pure_init(), o.n_samples, o.seed, o.workers);
  const json config = config_json("trajectories", o);
  if (o.format == "json")
    write_text(o.output, json_document(config, distribution_json(table)));
  else
    write_text(o.output, distribution_csv(table, o, config));
}

//----------------------------------------------------------------------------
// Config file handling: JSON keys pre-seed the option variables, flags
// override. Unknown keys are rejected.
//----------------------------------------------------------------------------

const std::set<std::string>& known_keys(const std::string& command) {
  static const std::set<std::string> common = {"command", "theta",  "det",     "coin_matrix",
                                               "p",       "init",   "k_grid",  "threads",
                                               "output",  "format"};
  static std::set<std::string> evolve, spectrum, limit, moments, exponent, converge, traj;
  if (evolve.empty()) {
    evolve = common;
    evolve.insert({"t", "method"});
    spectrum = common;
    spectrum.insert({"k", "gap_grid"});
    limit = common;
    limit.insert({"model_k_grid", "nu_list", "x_list"});
    moments = common;
    moments.insert({"max_order", "model_k_grid"});
    exponent = common;
    exponent.insert({"order", "p_list"});
    converge = common;
    converge.insert({"t_list", "nu_list", "model_k_grid"});
    traj = common;
    traj.insert({"t", "n_samples", "seed", "workers"});
  }
  if (command == "evolve") return evolve;
  if (command == "spectrum") return spectrum;
  if (command == "limit") return limit;
  if (command == "moments") return moments;
  if (command == "exponent") return exponent;
  if (command == "converge") return converge;
  return traj;
}

void apply_config_file(const std::string& path, const std::string& command, Options& o) {
  std::ifstream in(path);
  if (!in) throw validation_error("config: cannot open '" + path + "'");
  json c;
  try {
    in >> c;
  } catch (const std::exception& e) {
    throw validation_error(std::string("config: invalid JSON: ") + e.what());
  }
  if (!c.is_object()) throw validation_error("config: top level must be an object");

  const auto& keys = known_keys(command);
  for (const auto& [key, value] : c.items()) {
    if (keys.find(key) == keys.end())
      throw validation_error("config: unknown field '" + key + "' for command " + command);
    if (key == "command") {
      if (value.get<std::string>() != command)
        throw validation_error("config: file is for command '" + value.get<std::string>() + "'");
    } else if (key == "theta") {
      o.theta = value.is_string() ? value.get<std::string>() : fmt(value.get<double>());
    } else if (key == "det") {
      o.det = value.get<int>();
    } else if (key == "coin_matrix") {
      o.coin_matrix = value.get<std::string>();
    } else if (key == "p") {
      o.p = value.get<double>();
    } else if (key == "init") {
      o.init = value.get<std::string>();
    } else if (key == "k_grid") {
      o.k_grid = value.get<int>();
    } else if (key == "threads") {
      o.threads = value.get<int>();
    } else if (key == "output") {
      o.output = value.get<std::string>();
    } else if (key == "format") {
      o.format = value.get<std::string>();
    } else if (key == "t") {
      o.t = value.get<long>();
    } else if (key == "method") {
      o.method = value.get<std::string>();
    } else if (key == "k") {
      o.k = value.get<double>();
    } else if (key == "gap_grid") {
      o.gap_grid = value.get<int>();
    } else if (key == "model_k_grid") {
      o.model_k_grid = value.get<int>();
    } else if (key == "max_order") {
      o.max_order = value.get<int>();
    } else if (key == "order") {
      o.order = value.get<int>();
    } else if (key == "p_list") {
      o.p_list = value.get<std::string>();
    } else if (key == "t_list") {
      o.t_list = value.get<std::string>();
    } else if (key == "nu_list") {
      o.nu_list = value.get<std::string>();
    } else if (key == "x_list") {
      o.x_list = value.get<std::string>();
    } else if (key == "n_samples") {
      o.n_samples = value.get<std::uint64_t>();
    } else if (key == "seed") {
      o.seed = value.get<std::uint64_t>();
    } else if (key == "workers") {
      o.workers = value.get<int>();
    }
  }
}

void add_common(CLI::App* sub, Options& o, std::string& config_path) {
  sub->add_option("--config", config_path, "JSON config file; flags override its values");
  sub->add_option("--theta", o.theta, "coin angle, radians or '<x>pi'");
  sub->add_option("--det", o.det, "O(2) determinant sign (+1 rotation, -1 reflection)");
  sub->add_option("--coin-matrix", o.coin_matrix, "explicit unitary, 8 reals re,im row-major");
  sub->add_option("--p", o.p, "decoherence rate in [0, 1]");
  sub->add_option("--init", o.init, "initial coin state: R, L, mixed or bloch:x,y,z");
  sub->add_option("--k-grid", o.k_grid, "momentum grid size (0 = exact default)");
  sub->add_option("--threads", o.threads, "worker threads (0 = auto)");
  sub->add_option("--output", o.output, "output path ('-' = stdout)");
  sub->add_option("--format", o.format, "csv or json");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string(kToolName) + " " + kVersion +
               " - decoherent quantum walks on the line"};
  app.require_subcommand(1);

  Options o;
  std::string config_path;

  CLI::App* evolve = app.add_subcommand("evolve", "exact position distribution p(x, t)");
  add_common(evolve, o, config_path);
  evolve->add_option("--t", o.t, "number of steps");
  evolve->add_option("--method", o.method, "fourier or density");

  CLI::App* spectrum = app.add_subcommand("spectrum", "spectral classification at momentum k");
  add_common(spectrum, o, config_path);
  spectrum->add_option("--k", o.k, "momentum");
  spectrum->add_option("--gap-grid", o.gap_grid, "also sweep the peripheral gap on this grid");

  CLI::App* limit = app.add_subcommand("limit", "diffusive scaling limit (variance curve)");
  add_common(limit, o, config_path);
  limit->add_option("--model-k-grid", o.model_k_grid, "grid for the variance curve");
  limit->add_option("--nu-list", o.nu_list, "evaluate the limit characteristic function");
  limit->add_option("--x-list", o.x_list, "evaluate the limit density");

  CLI::App* moments = app.add_subcommand("moments", "moments of the limiting distribution");
  add_common(moments, o, config_path);
  moments->add_option("--max-order", o.max_order, "highest moment order");
  moments->add_option("--model-k-grid", o.model_k_grid, "grid when the numeric route is used");

  CLI::App* exponent = app.add_subcommand("exponent", "critical exponent fit at small p");
  add_common(exponent, o, config_path);
  exponent->add_option("--order", o.order, "moment order 2n");
  exponent->add_option("--p-list", o.p_list, "decreasing decoherence samples");

  CLI::App* converge = app.add_subcommand("converge", "finite-time convergence to the limit");
  add_common(converge, o, config_path);
  converge->add_option("--t-list", o.t_list, "time horizons");
  converge->add_option("--nu-list", o.nu_list, "frequencies");
  converge->add_option("--model-k-grid", o.model_k_grid, "grid for the limit model");

  CLI::App* traj = app.add_subcommand("trajectories", "Monte-Carlo unraveling");
  add_common(traj, o, config_path);
  traj->add_option("--t", o.t, "number of steps");
  traj->add_option("--n-samples", o.n_samples, "trajectory count");
  traj->add_option("--seed", o.seed, "random seed");
  traj->add_option("--workers", o.workers, "worker count (affects the sample stream)");

  // Pre-pass: load the config file first so that flags override it.
  try {
    std::string command;
    for (int i = 1; i < argc; ++i) {
      const std::string arg = argv[i];
      if (command.empty() && !arg.empty() && arg[0] != '-') command = arg;
      if (arg == "--config" && i + 1 < argc) config_path = argv[i + 1];
    }
    if (!config_path.empty()) {
      if (command.empty()) throw validation_error("config: no subcommand given");
      apply_config_file(config_path, command, o);
    }
  } catch (const validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (evolve->parsed()) cmd_evolve(o);
    if (spectrum->parsed()) cmd_spectrum(o);
    if (limit->parsed()) cmd_limit(o);
    if (moments->parsed()) cmd_moments(o);
    if (exponent->parsed()) cmd_exponent(o);
    if (converge->parsed()) cmd_converge(o);
    if (traj->parsed()) cmd_trajectories(o);
  } catch (const validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const resource_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const numeric_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
