// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: per-point geometry reports, slice scans,
// counterexample/noise/ablation tables, and VQE runs.

#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qig/pipeline.hpp"

namespace {

Eigen::VectorXd parse_theta(const std::string& csv) {
  Eigen::VectorXd out(4);
  std::stringstream ss(csv);
  std::string tok;
  int i = 0;
  while (std::getline(ss, tok, ',') && i < 4) out(i++) = std::stod(tok);
  if (i != 4) throw CLI::ValidationError("--theta expects four comma-separated angles");
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qig: Petz-metric information geometry of two-qubit circuits"};
  app.require_subcommand(1);

  std::string theta_csv = "1.755,1.720,5.417,4.126";
  std::string metric = "sld";
  double scale = 0.25;
  std::string out_path;
  unsigned long long seed = 42;

  auto* point = app.add_subcommand("point", "full geometry report at a parameter point");
  point->add_option("--theta", theta_csv, "t0,t1,t2,t3");
  point->add_option("--metric", metric, "sld | wy | bkm");
  point->add_option("--scale", scale, "metric scale");
  point->add_option("--out", out_path, "output file (default stdout)");

  auto* scan = app.add_subcommand("scan", "seeded slice scan with guards and statistics");
  std::string scan_config;
  std::string summary_path;
  scan->add_option("--config", scan_config, "scan config JSON file");
  scan->add_option("--out", out_path, "rows CSV output");
  scan->add_option("--summary", summary_path, "summary JSON output");

  auto* cex = app.add_subcommand("counterexamples", "entropy-curvature suite");
  cex->add_option("--seed", seed, "random seed");
  cex->add_option("--scale", scale, "metric scale");
  cex->add_option("--out", out_path, "CSV output");

  auto* noise_cmd = app.add_subcommand("noise", "scalar curvature under noise channels");
  std::string levels = "dep:0.01,dep:0.05,amp:0.02,amp:0.10";
  std::string damp_qubit = "both";
  std::string noise_config;
  noise_cmd->add_option("--theta", theta_csv, "t0,t1,t2,t3");
  noise_cmd->add_option("--levels", levels, "e.g. dep:0.01,amp:0.02");
  noise_cmd->add_option("--qubit", damp_qubit, "damped qubit: A | B | both");
  noise_cmd->add_option("--config", noise_config, "sweep config JSON (overrides --levels)");
  noise_cmd->add_option("--scale", scale, "metric scale");
  noise_cmd->add_option("--out", out_path, "CSV output");

  auto* abl = app.add_subcommand("ablations", "ablation table with bootstrap CIs");
  abl->add_option("--theta", theta_csv, "t0,t1,t2,t3");
  abl->add_option("--scale", scale, "metric scale");
  abl->add_option("--seed", seed, "random seed");
  abl->add_option("--out", out_path, "CSV output");

  auto* vqe_cmd = app.add_subcommand("vqe", "run a VQE experiment from a config file");
  std::string run_config;
  std::string trace_path;
  vqe_cmd->add_option("--config", run_config, "run config JSON")->required();
  vqe_cmd->add_option("--trace", trace_path, "trace CSV output");

  auto* plot = app.add_subcommand("plot-data", "gnuplot-style K(u,v) grid for one slice");
  int pi = 0, pj = 1, grid = 51;
  double extent = 0.5;
  plot->add_option("--theta", theta_csv, "slice center");
  plot->add_option("--pair", pi, "first index")->check(CLI::Range(0, 3));
  plot->add_option("--pair2", pj, "second index")->check(CLI::Range(0, 3));
  plot->add_option("--grid", grid, "points per axis");
  plot->add_option("--extent", extent, "half-width of the (u,v) window");
  plot->add_option("--metric", metric, "sld | wy | bkm");
  plot->add_option("--scale", scale, "metric scale");
  plot->add_option("--out", out_path, "output file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*point) {
      emit(qig::pipeline::point_report(parse_theta(theta_csv), metric, scale) + "\n", out_path);
    } else if (*scan) {
      qig::pipeline::ScanConfig cfg;
      if (!scan_config.empty()) cfg = qig::pipeline::ScanConfig::from_json(slurp(scan_config));
      const auto result = qig::pipeline::slice_scan(cfg);
      emit(result.rows_csv(), out_path);
      if (!summary_path.empty())
        emit(result.summary_json() + "\n", summary_path);
      else
        std::cerr << result.summary_json() << "\n";
    } else if (*cex) {
      const auto rows = qig::pipeline::counterexample_suite(seed, scale);
      emit(qig::pipeline::counterexample_csv(rows), out_path);
    } else if (*noise_cmd) {
      std::vector<qig::noise::NoiseSetting> settings;
      if (!noise_config.empty()) {
        const auto j = nlohmann::json::parse(slurp(noise_config));
        for (const auto& e : j.at("levels")) {
          qig::noise::NoiseSetting s;
          const std::string ch = e.at("channel").get<std::string>();
          s.channel = ch == "depolarizing" ? qig::noise::Channel::Depolarizing
                                           : qig::noise::Channel::AmpDamping;
          s.level = e.at("level").get<double>();
          s.qubit = e.value("qubit", "B") == "A" ? 0 : 1;
          settings.push_back(s);
        }
        const auto rows = qig::pipeline::noise_sweep(parse_theta(theta_csv), settings, scale);
        emit(qig::pipeline::noise_csv(rows), out_path);
        return 0;
      }
      std::stringstream ss(levels);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        const auto colon = tok.find(':');
        if (colon == std::string::npos) throw CLI::ValidationError("bad --levels entry: " + tok);
        const std::string kind = tok.substr(0, colon);
        const double level = std::stod(tok.substr(colon + 1));
        if (kind == "dep") {
          settings.push_back({qig::noise::Channel::Depolarizing, level, 1});
        } else if (kind == "amp") {
          if (damp_qubit == "A" || damp_qubit == "both")
            settings.push_back({qig::noise::Channel::AmpDamping, level, 0});
          if (damp_qubit == "B" || damp_qubit == "both")
            settings.push_back({qig::noise::Channel::AmpDamping, level, 1});
        } else {
          throw CLI::ValidationError("unknown channel: " + kind);
        }
      }
      const auto rows = qig::pipeline::noise_sweep(parse_theta(theta_csv), settings, scale);
      emit(qig::pipeline::noise_csv(rows), out_path);
    } else if (*abl) {
      const auto rows = qig::pipeline::ablation_suite(parse_theta(theta_csv), scale, seed);
      emit(qig::pipeline::ablation_csv(rows), out_path);
    } else if (*vqe_cmd) {
      const auto j = nlohmann::json::parse(slurp(run_config));
      const auto circuit = qig::hea::CircuitSpec::from_json(j.at("circuit").dump());
      const auto H = qig::vqe::PauliSumHamiltonian::from_json(j.at("hamiltonian").dump());
      qig::vqe::OptimizerConfig cfg;
      if (j.contains("optimizer")) {
        const auto& o = j["optimizer"];
        cfg.method = o.value("method", cfg.method);
        cfg.eta = o.value("eta", cfg.eta);
        cfg.ridge = o.value("ridge", cfg.ridge);
        cfg.shrinkage = o.value("shrinkage", cfg.shrinkage);
        cfg.gnorm_cap = o.value("gnorm_cap", cfg.gnorm_cap);
        cfg.tr_radius = o.value("tr_radius", cfg.tr_radius);
        cfg.armijo.enabled = o.value("armijo", cfg.armijo.enabled);
        cfg.partial_fisher = o.value("partial_fisher", cfg.partial_fisher);
        cfg.ema_decay = o.value("ema_decay", cfg.ema_decay);
        cfg.precond = o.value("precond", cfg.precond);
        cfg.metric = o.value("metric", cfg.metric);
        cfg.grow_every = o.value("grow_every", cfg.grow_every);
      }
      cfg.seed = j.value("seed", cfg.seed);
      const int iters = j.value("max_iters", 400);
      const auto trace = qig::vqe::run(circuit, H, cfg, iters);
      const auto [auc, hit] = qig::vqe::metrics(trace);
      emit(trace.to_csv(), trace_path);
      nlohmann::json out;
      out["e_star"] = trace.e_star;
      out["final_energy"] = trace.rows.empty() ? 0.0 : trace.rows.back().energy;
      out["final_gap"] = trace.rows.empty() ? 0.0 : trace.rows.back().gap;
      out["auc"] = auc;
      if (hit) out["hit95"] = *hit;
      std::cout << out.dump(2) << "\n";
    } else if (*plot) {
      emit(qig::pipeline::plot_data(parse_theta(theta_csv), pi, pj, grid, extent, metric, scale),
           out_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
