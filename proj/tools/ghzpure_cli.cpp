// ghzpure: GHZ purification cost analysis and dense-simulation verification.
//
// Subcommands:
//   compare     protocol cost sweeps (n sweep at fixed delta, or delta sweep
//               at fixed n), CSV/JSON
//   trajectory  per-round dump of either protocol
//   threshold   closed-form vs bisection distillability thresholds
//   verify      dense-oracle verification suite
//
// Exit codes: 0 success, 1 verification failure or I/O error, 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ghzpure/compare.hpp"
#include "ghzpure/oracle.hpp"

namespace {

using namespace ghzpure;

struct SharedOpts {
  double epsilon = 0.01;
  std::string out;
  std::string format = "csv";
  std::string cost_model = "paper";
  std::uint64_t seed = oracle::kDefaultSeed;
  int oracle_cap = 10;
  double tol = 1e-10;
};

int write_output(const std::string& path, const std::string& body) {
  if (path.empty()) {
    std::fwrite(body.data(), 1, body.size(), stdout);
    return 0;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open " << path << " for writing\n";
    return 1;
  }
  f << body;
  if (!f) {
    std::cerr << "error: write to " << path << " failed\n";
    return 1;
  }
  return 0;
}

compare::CostModel parse_model(const std::string& name) {
  if (name == "paper") return compare::CostModel::inverse_norm;
  if (name == "expected") return compare::CostModel::expected_tree;
  throw CLI::ValidationError("--cost-model must be paper or expected");
}

void add_shared(CLI::App* cmd, SharedOpts& o) {
  cmd->add_option("--epsilon", o.epsilon, "target in-fidelity")->check(CLI::Range(1e-12, 0.999999));
  cmd->add_option("--out", o.out, "output path (default: stdout)");
  cmd->add_option("--format", o.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--cost-model", o.cost_model, "paper|expected")
      ->check(CLI::IsMember({"paper", "expected"}));
  cmd->add_option("--seed", o.seed, "seed for sampled verification states");
  cmd->add_option("--oracle-cap", o.oracle_cap, "dense-simulation qubit cap");
  cmd->add_option("--tol", o.tol, "verification tolerance");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"GHZ purification cost analysis and verification"};
  app.require_subcommand(1);

  SharedOpts shared;

  // compare
  auto* compare_cmd = app.add_subcommand("compare", "protocol resource-cost sweep");
  add_shared(compare_cmd, shared);
  int n_min = 3, n_max = 20, fig2_n = 0, delta_points = 30;
  double fig1_delta = -1.0, delta_min = 0.01, delta_max = 0.9;
  compare_cmd->add_option("--n-min", n_min, "first party count (n sweep)");
  compare_cmd->add_option("--n-max", n_max, "last party count (n sweep)");
  compare_cmd->add_option("--delta", fig1_delta, "input in-fidelity (n sweep)");
  compare_cmd->add_option("--n", fig2_n, "party count (delta sweep)");
  compare_cmd->add_option("--delta-min", delta_min, "first delta (delta sweep)");
  compare_cmd->add_option("--delta-max", delta_max, "last delta (delta sweep)");
  compare_cmd->add_option("--delta-points", delta_points, "log-spaced points (delta sweep)");

  // trajectory
  auto* traj_cmd = app.add_subcommand("trajectory", "per-round protocol dump");
  add_shared(traj_cmd, shared);
  std::string protocol;
  int traj_n = 0, traj_k = 0;
  double traj_q0 = -1.0;
  traj_cmd->add_option("--protocol", protocol, "bipartite|multipartite")
      ->required()
      ->check(CLI::IsMember({"bipartite", "multipartite"}));
  traj_cmd->add_option("--n", traj_n, "party count")->required();
  traj_cmd->add_option("--q0", traj_q0, "input GHZ weight")->required();
  traj_cmd->add_option("--k", traj_k, "rounds to dump")->required();

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "dense-oracle verification suite");
  add_shared(verify_cmd, shared);
  int v_n_min = 2, v_n_max = 5, v_samples = 100;
  verify_cmd->add_option("--n-min", v_n_min, "first party count");
  verify_cmd->add_option("--n-max", v_n_max, "last party count");
  verify_cmd->add_option("--samples", v_samples, "random states per party count");

  // threshold
  auto* thr_cmd = app.add_subcommand("threshold", "distillability threshold table");
  add_shared(thr_cmd, shared);
  int t_n_min = 3, t_n_max = 12;
  thr_cmd->add_option("--n-min", t_n_min, "first party count");
  thr_cmd->add_option("--n-max", t_n_max, "last party count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (compare_cmd->parsed()) {
      const bool fig1 = compare_cmd->count("--delta") > 0;
      const bool fig2 = compare_cmd->count("--n") > 0;
      if (fig1 == fig2) {
        std::cerr << "usage: give either --delta (with --n-min/--n-max) or --n "
                     "(with --delta-min/--delta-max/--delta-points)\n";
        return 2;
      }
      std::vector<compare::ComparisonRecord> rows;
      if (fig1) {
        compare::NSweepSpec spec;
        spec.n_min = n_min;
        spec.n_max = n_max;
        spec.delta = fig1_delta;
        spec.epsilon = shared.epsilon;
        spec.model = parse_model(shared.cost_model);
        rows = compare::run_compare(spec);
      } else {
        compare::DeltaSweepSpec spec;
        spec.n = fig2_n;
        spec.delta_min = delta_min;
        spec.delta_max = delta_max;
        spec.delta_points = delta_points;
        spec.epsilon = shared.epsilon;
        spec.model = parse_model(shared.cost_model);
        rows = compare::run_compare(spec);
      }
      return write_output(shared.out, shared.format == "csv" ? compare::to_csv(rows)
                                                             : compare::to_json(rows));
    }

    if (traj_cmd->parsed()) {
      std::string body;
      if (protocol == "bipartite") {
        const auto rows = compare::bipartite_trajectory(traj_n, traj_q0, traj_k);
        body = shared.format == "csv" ? compare::to_csv(rows) : compare::to_json(rows);
      } else {
        const auto rows = compare::multipartite_trajectory(traj_n, traj_q0, traj_k);
        body = shared.format == "csv" ? compare::to_csv(rows) : compare::to_json(rows);
      }
      return write_output(shared.out, body);
    }

    if (thr_cmd->parsed()) {
      const auto rows = compare::threshold_table(t_n_min, t_n_max, shared.tol);
      return write_output(shared.out, shared.format == "csv" ? compare::to_csv(rows)
                                                             : compare::to_json(rows));
    }

    if (verify_cmd->parsed()) {
      if (2 * v_n_max > shared.oracle_cap) {
        std::cerr << "usage: n-max " << v_n_max << " needs " << 2 * v_n_max
                  << " qubits; raise --oracle-cap\n";
        return 2;
      }
      oracle::VerifyOptions opt;
      opt.n_min = v_n_min;
      opt.n_max = v_n_max;
      opt.tol = shared.tol;
      opt.samples = v_samples;
      opt.seed = shared.seed;
      opt.limits.qubit_cap = shared.oracle_cap;
      const auto report = oracle::run_full_verification(opt);
      for (const auto& c : report.checks) {
        std::printf("%-44s max_err %.3e  tol %.1e  %s\n", c.name.c_str(), c.max_error,
                    c.tolerance, c.pass ? "PASS" : "FAIL");
      }
      std::printf("%zu checks, %s\n", report.checks.size(),
                  report.overall_pass ? "all passed" : "FAILURES PRESENT");
      return report.overall_pass ? 0 : 1;
    }
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
